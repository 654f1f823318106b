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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlrc/locality.hpp"
#include "qlrc/matcode.hpp"

namespace qlrc {

enum class Purity { pure, impure };
std::string to_string(Purity p);

/// A CSS code built from C1 and C2 with dual(C1) a strict subcode of C2.
struct CssCode {
    CssCode(LinearCode a, LinearCode b) : c1(std::move(a)), c2(std::move(b)) {}

    LinearCode c1;  // both carry certified distances
    LinearCode c2;
    std::size_t n = 0;
    std::size_t kappa = 0;  // k1 + k2 - n
    /// relative[0] = wt(C2 \ dual C1), relative[1] = wt(C1 \ dual C2)
    std::array<unsigned, 2> relative{};
    std::array<Word, 2> relative_witness;
    std::array<OracleMethod, 2> relative_method{};
    unsigned delta = 0;  // min of the two relative weights
    Provenance delta_provenance = Provenance::certified;
    Purity purity = Purity::pure;  // meaningful only when delta is certified
    bool same_codes = false;       // C1 == C2

    unsigned d1() const { return c1.cached_distance()->value; }
    unsigned d2() const { return c2.cached_distance()->value; }
    std::uint64_t q() const { return c1.field()->order(); }
};

/// Validates containment, certifies both distances and both relative weights,
/// and classifies purity. The case dual(C1) = C2 is rejected. Throws
/// BudgetExceeded when an oracle does not fit the budget.
CssCode css_compose(const LinearCode& c1, const LinearCode& c2, const SearchLimits& limits = {},
                    std::optional<OracleMethod> method = std::nullopt);

/// Parameters of the CSS code from a claimed delta, with containment checked
/// but nothing searched. Used to report what is known when css_compose runs
/// out of budget. Missing distances are recorded as claimed to be delta.
CssCode css_claimed(const LinearCode& c1, const LinearCode& c2, unsigned claimed_delta);

// ---------------------------------------------------------------------------
// Quantum locality
//
// Coordinate j is locally recoverable when there are dual codewords
// c1 of C1 and c2 of C2, both nonzero at j, whose supports together have at
// most r + 1 elements.

struct QuantumLocalityWitness {
    std::size_t coordinate = 0;
    Word word1;  // in dual(C1), word1[coordinate] = 1
    Word word2;  // in dual(C2), word2[coordinate] = 1
    Elem scale1 = 1;  // factor applied to the word as found to normalize it
    Elem scale2 = 1;
    std::size_t union_size = 0;
};

struct QuantumLocalityCertificate {
    unsigned r = 0;
    std::vector<QuantumLocalityWitness> witnesses;
    bool shared = false;  // C1 = C2 and each word serves both roles
    bool verified = false;
};

bool verify_quantum_locality(const CssCode& q, const QuantumLocalityCertificate& cert, std::string* why = nullptr);

struct QuantumLocalityResult {
    LocalityOutcome outcome = LocalityOutcome::inconclusive;
    std::optional<QuantumLocalityCertificate> certificate;
    std::optional<std::size_t> uncovered;
    std::uint64_t evaluated = 0;
    OracleMethod method = OracleMethod::support_search;
};

/// Searches both duals for witness pairs. With C1 = C2 this is the classical
/// locality search of C, reusing each word for both roles.
QuantumLocalityResult quantum_locality_certificate(const CssCode& q, unsigned r, const SearchLimits& limits = {},
                                                   std::optional<OracleMethod> method = std::nullopt);

/// Smallest r >= 1 with a certificate.
QuantumLocalityResult minimal_quantum_locality(const CssCode& q, const SearchLimits& limits = {});

/// Pairs coordinate-wise witnesses supplied by a construction (for example the
/// rows of two parity-check matrices) and verifies them.
QuantumLocalityCertificate pair_witnesses(const CssCode& q, unsigned r, const LocalityCertificate& dual1,
                                          const LocalityCertificate& dual2);

/// The per-code classical certificates implied by a quantum certificate:
/// word1 (resp. word2) covers each coordinate with weight <= r + 1.
LocalityCertificate classical_projection(const QuantumLocalityCertificate& cert, int which);

// ---------------------------------------------------------------------------
// Quantum bounds

/// Dimension form: n - 2(delta-1) - floor((n-(delta-1))/(r+1))
///   - floor((n - 2(delta-1) - floor((n-(delta-1))/(r+1))) / (r+1)).
std::int64_t q_singleton_dim_bound(std::int64_t n, std::int64_t delta, std::int64_t r);

/// Right-hand side n - kappa - 2 ceil(kappa/r) + 4 of the bound on 2 delta.
std::int64_t q_singleton_rhs(std::int64_t n, std::int64_t kappa, std::int64_t r);

/// Largest delta with 2 delta <= q_singleton_rhs(n, kappa, r).
std::int64_t q_singleton_bound(std::int64_t n, std::int64_t kappa, std::int64_t r);

/// min over l1, l2 of (l1+l2) r + k_opt(k1 - l1(r+1), delta) + k_opt(k2 - l2(r+1), delta),
/// the bound on 2 kappa. The minimization separates into two CM scans.
std::int64_t q_cm_sum(std::uint64_t q, unsigned k1, unsigned k2, unsigned delta, unsigned r, KoptOracle oracle);

/// floor(q_cm_sum / 2).
std::int64_t q_cm_bound(std::uint64_t q, unsigned k1, unsigned k2, unsigned delta, unsigned r, KoptOracle oracle);

/// Reports for the dimension form, the distance form and the CM form.
std::vector<BoundReport> classify_quantum(const CssCode& q, unsigned r);

/// Exhaustive oracles are run only for q in {2, 3} and n <= this.
inline constexpr std::size_t kTransferMaxLength = 8;

/// The three transfer inequalities against exhaustive extremal-code oracles
/// with locality at most r:
///   2 delta <= d_opt(k1, kappa; r) + d_opt(k2, kappa; r)
///   2 kappa <= k_opt(k1, delta; r) + k_opt(k2, delta; r)
///   n + kappa >= 2 n_opt(kappa, delta; r)
/// Outside the oracle range each report is skipped with a note.
std::vector<BoundReport> transfer_relations_check(const CssCode& q, unsigned r);

struct OptimalityVerdict {
    bool applicable = false;  // the code is pure
    bool singleton_optimal_1 = false;
    bool singleton_optimal_2 = false;
    bool condition_a = false;  // both ingredients meet the classical Singleton-like bound
    bool condition_b = false;  // k1 = k2 and ceil(k1/r) = ceil(kappa/r)
    bool distance_form_equality = false;
    bool dimension_form_equality = false;
    bool biconditional_holds = false;  // equality in the distance form <=> (a and b)
    bool implication_holds = false;    // equality in the distance form => equality in the dimension form
    bool unequal_distances = false;    // d1 != d2, where equality in the distance form is impossible
    std::string note;
};

/// Optimality characterization for pure codes. For impure codes only the
/// equality flags are filled in and `applicable` is false.
OptimalityVerdict pure_optimal_check(const CssCode& q, unsigned r);

/// Everything that is certified about a CSS code with a given locality.
struct CssCertification {
    CssCode code;
    QuantumLocalityCertificate locality;
    std::array<LocalityCertificate, 2> classical;  // for C1 and C2
    std::vector<BoundReport> reports;
    OptimalityVerdict optimality;

    bool any_violated() const;
};

/// Classical reports for both ingredients (input "code" = 1 or 2), quantum
/// reports, transfer checks and the optimality verdict.
CssCertification certify_css(const CssCode& q, const QuantumLocalityCertificate& locality);

}  // namespace qlrc
