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

#include "qlrc/matcode.hpp"

namespace qlrc {

// ---------------------------------------------------------------------------
// Locality certificates
//
// A code has locality r when every coordinate i lies in the support of some
// dual codeword of weight at most r + 1. The repair group of i is that
// support minus i.

struct LocalityWitness {
    std::size_t coordinate = 0;
    Word word;  // dual codeword, scaled so that word[coordinate] = 1
    std::size_t weight = 0;
};

struct LocalityCertificate {
    unsigned r = 0;
    std::vector<LocalityWitness> witnesses;  // one per coordinate, in order
    bool verified = false;
};

/// Re-checks every witness: dual membership, weight <= r + 1, coordinate in
/// the support, and one witness for each of the n coordinates. On failure
/// `why` (if given) receives a description.
bool verify_locality(const LinearCode& c, const LocalityCertificate& cert, std::string* why = nullptr);

enum class LocalityOutcome {
    certified,    // every coordinate covered
    refused,      // complete search: some coordinate has no repair group of size <= r
    inconclusive  // budget exhausted before the search completed
};
std::string to_string(LocalityOutcome o);

struct LocalityResult {
    LocalityOutcome outcome = LocalityOutcome::inconclusive;
    std::optional<LocalityCertificate> certificate;
    std::optional<std::size_t> uncovered;  // a coordinate without a repair group, on refusal
    std::uint64_t evaluated = 0;
    OracleMethod method = OracleMethod::support_search;
};

/// Searches the dual code for low-weight words covering each coordinate.
/// Either enumerates all q^(n-k) dual codewords or scans the (r+1)-subsets
/// of coordinates, whichever is cheaper.
LocalityResult locality_certificate(const LinearCode& c, unsigned r, const SearchLimits& limits = {},
                                    std::optional<OracleMethod> method = std::nullopt);

/// Smallest r >= 1 for which a certificate exists. Refused when some
/// coordinate is covered by no dual codeword at all.
LocalityResult minimal_locality(const LinearCode& c, const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// Classical bounds

/// n - k - ceil(k / r) + 2.
std::int64_t singleton_like_bound(std::int64_t n, std::int64_t k, std::int64_t r);

/// Largest q^n for which the exhaustive code searches below will run.
inline constexpr std::uint64_t kExhaustiveSpaceLimit = std::uint64_t{1} << 14;

/// True when an [n, k, >= d]_q linear code exists, and, when `r` is given,
/// one with locality at most r. Exhaustive over systematic generator
/// matrices up to row and column equivalence; results are memoized. Throws
/// BudgetExceeded when q^n > kExhaustiveSpaceLimit.
bool linear_code_exists(std::uint64_t q, unsigned n, unsigned k, unsigned d,
                        std::optional<unsigned> r = std::nullopt);

/// Maximum dimension of an [n, k, >= d]_q linear code (0 when none has
/// positive dimension), optionally restricted to locality at most r.
unsigned kopt_exact(std::uint64_t q, unsigned n, unsigned d, std::optional<unsigned> r = std::nullopt);

/// Maximum minimum distance of an [n, k]_q linear code with locality at most r.
/// Zero when no such code exists.
unsigned dopt_exact(std::uint64_t q, unsigned n, unsigned k, std::optional<unsigned> r = std::nullopt);

/// Minimum length of a [., k, >= d]_q code with locality at most r, searching
/// lengths up to n_max. Empty when none is found in range.
std::optional<unsigned> nopt_exact(std::uint64_t q, unsigned k, unsigned d, std::optional<unsigned> r,
                                   unsigned n_max);

/// min(Singleton, Griesmer, Plotkin) upper bound on the dimension of an
/// [n, k, d]_q linear code. 0 when n < d.
unsigned kopt_upper(std::uint64_t q, unsigned n, unsigned d);

enum class KoptOracle { exact, upper };

/// min over l >= 0 of l*r + k_opt(n - l(r+1), d). The scan stops at the first
/// term whose length drops below d, which contributes l*r.
unsigned cm_bound(std::uint64_t q, unsigned n, unsigned d, unsigned r, KoptOracle oracle);

/// exact when q^n is within the exhaustive limit, otherwise upper.
KoptOracle preferred_oracle(std::uint64_t q, unsigned n);

// ---------------------------------------------------------------------------
// Bound reports

enum class BoundId {
    c_singleton,
    c_cm,
    q_singleton_dim,
    q_singleton,
    q_cm,
    transfer_distance,
    transfer_dimension,
    transfer_length,
};
enum class Sense { at_most, at_least };  // achieved <= bound, or achieved >= bound
enum class Verdict { meets_with_equality, satisfied_strict, violated, skipped };
enum class Provider { exact, upper, skipped };

std::string to_string(BoundId id);
std::string to_string(Sense s);
std::string to_string(Verdict v);
std::string to_string(Provider p);

struct BoundReport {
    BoundId id = BoundId::c_singleton;
    std::map<std::string, std::int64_t> inputs;
    std::int64_t bound = 0;
    std::int64_t achieved = 0;
    Sense sense = Sense::at_most;
    Verdict verdict = Verdict::skipped;
    Provider oracle = Provider::exact;
    std::string note;
};

/// Builds a report with its verdict computed from the values and records it
/// in the process-wide tally.
BoundReport make_report(BoundId id, std::map<std::string, std::int64_t> inputs, std::int64_t bound,
                        std::int64_t achieved, Sense sense, Provider oracle);
BoundReport skipped_report(BoundId id, std::map<std::string, std::int64_t> inputs, std::string note);

/// Recomputes the verdict from bound, achieved and sense.
Verdict verdict_for(std::int64_t bound, std::int64_t achieved, Sense sense);

struct ReportTally {
    std::uint64_t total = 0;
    std::uint64_t violated = 0;
    std::uint64_t skipped = 0;
    std::vector<BoundReport> violations;
};
/// Every report produced by make_report / skipped_report since start-up.
ReportTally report_tally();

/// Singleton-like and CM reports for a code with certified distance and a
/// verified locality certificate. Throws PreconditionError for uncertified or
/// degenerate inputs.
std::vector<BoundReport> classify_classical(const LinearCode& c, const LocalityCertificate& cert);

}  // namespace qlrc
