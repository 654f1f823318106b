// Copyright 2026 The qlrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlrc/css.hpp"
#include "qlrc/cyclotomic.hpp"
#include "qlrc/families.hpp"
#include "qlrc/locality.hpp"
#include "qlrc/matcode.hpp"

namespace qlrc {

// nlohmann::json keeps object keys in a std::map, so every dump is sorted.
using Json = nlohmann::json;

inline constexpr std::int64_t kCertificateVersion = 1;

Json to_json(const Field& f);
Json to_json(const LinearCode& c);
Json to_json(const LocalityCertificate& cert);
Json to_json(const QuantumLocalityCertificate& cert);
Json to_json(const BoundReport& r);
Json to_json(const DefiningSet& d);
Json to_json(const OptimalityVerdict& v);
/// {C1, C2, kappa, delta: {value, ...}, purity, locality_certificate}; the
/// certificate is null when none is given.
Json to_json(const CssCode& q, const QuantumLocalityCertificate* locality);

// The loaders throw InputError on any structural problem. They check shapes
// and ranges only; the mathematics is left to revalidate().
FieldPtr field_from_json(const Json& j);
LinearCode code_from_json(const Json& j);
LocalityCertificate locality_from_json(const Json& j);
QuantumLocalityCertificate quantum_locality_from_json(const Json& j);
BoundReport report_from_json(const Json& j);

/// A user-supplied code: either the full serialized form or the short form
/// {"q": 4, "generator": [[...]]} / {"q": 4, "parity_check": [[...]]}.
/// Any stored distance is dropped.
LinearCode code_from_user_json(const Json& j);

/// Everything a run produced, in a form that serializes canonically.
struct Certificate {
    std::string construction;  // "grs-pair", "cyclic-1", "cyclic-2", "classical" or "css"
    std::map<std::string, std::int64_t> parameters;
    std::optional<FamilyParameters> claimed;
    bool complete = true;  // false when a budget stopped an oracle
    std::vector<LinearCode> codes;         // classical runs only
    std::vector<LocalityCertificate> locality;  // per code; for CSS runs, per ingredient
    std::optional<CssCode> quantum;
    std::optional<QuantumLocalityCertificate> quantum_locality;
    std::vector<BoundReport> reports;
    std::optional<OptimalityVerdict> optimality;
    std::optional<DefiningSet> defining_set;
    std::optional<BchRun> bch;
    std::vector<std::string> checks;
    std::vector<std::string> notes;
    std::uint64_t wall_us = 0;
    OracleWork work;

    /// No report is violated.
    bool all_hold() const;
};

Certificate family_certificate(const FamilyResult& res);
Certificate css_certificate(const CssCertification& cert);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// Two-space indented dump with sorted keys and a trailing newline.
std::string canonical_dump(const Json& j);

struct Revalidation {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Re-checks every stored witness and recomputes every verdict from the
/// stored bound and achieved values. Arithmetic bounds are recomputed from
/// the code parameters; bounds that need an extremal-code oracle are taken
/// as stored. Nothing is searched.
Revalidation revalidate(const Certificate& c);

}  // namespace qlrc
