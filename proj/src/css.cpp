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

#include "qlrc/css.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "detail.hpp"
#include "qlrc/errors.hpp"

namespace qlrc {

std::string to_string(Purity p) { return p == Purity::pure ? "pure" : "impure"; }

namespace {

void check_pair(const LinearCode& c1, const LinearCode& c2) {
    if (!same_field(c1.field(), c2.field())) throw InputError("C1 and C2 are over different fields");
    if (c1.length() != c2.length()) throw InputError("C1 and C2 have different lengths");
    const LinearCode d1 = dual_code(c1);
    if (!is_subcode(d1, c2)) throw PreconditionError("dual(C1) is not contained in C2");
    if (d1.dimension() == c2.dimension()) throw PreconditionError("dual(C1) = C2 gives a code of dimension zero");
}

}  // namespace

CssCode css_compose(const LinearCode& c1, const LinearCode& c2, const SearchLimits& limits,
                    std::optional<OracleMethod> method) {
    check_pair(c1, c2);
    const bool same = c1 == c2;
    LinearCode a = c1.certified_distance() ? c1 : with_certified_distance(c1, limits);
    LinearCode b = same ? a : (c2.certified_distance() ? c2 : with_certified_distance(c2, limits));
    CssCode q{std::move(a), std::move(b)};
    q.n = c1.length();
    q.kappa = c1.dimension() + c2.dimension() - q.n;
    q.same_codes = same;

    auto r0 = relative_min_weight(q.c2, dual_code(q.c1), limits, method);
    q.relative[0] = r0.weight;
    q.relative_witness[0] = std::move(r0.witness);
    q.relative_method[0] = r0.method;
    if (q.same_codes) {
        q.relative[1] = q.relative[0];
        q.relative_witness[1] = q.relative_witness[0];
        q.relative_method[1] = q.relative_method[0];
    } else {
        auto r1 = relative_min_weight(q.c1, dual_code(q.c2), limits, method);
        q.relative[1] = r1.weight;
        q.relative_witness[1] = std::move(r1.witness);
        q.relative_method[1] = r1.method;
    }
    q.delta = std::min(q.relative[0], q.relative[1]);
    q.delta_provenance = Provenance::certified;
    const unsigned dmin = std::min(q.d1(), q.d2());
    if (q.delta < dmin) throw VerificationFailure("relative weight below the minimum distance");
    q.purity = q.delta == dmin ? Purity::pure : Purity::impure;
    return q;
}

CssCode css_claimed(const LinearCode& c1, const LinearCode& c2, unsigned claimed_delta) {
    check_pair(c1, c2);
    auto claim = [&](const LinearCode& c) {
        return c.cached_distance() ? c : c.with_distance({claimed_delta, Provenance::claimed, {}});
    };
    CssCode q{claim(c1), claim(c2)};
    q.n = c1.length();
    q.kappa = c1.dimension() + c2.dimension() - q.n;
    q.same_codes = c1 == c2;
    q.relative = {claimed_delta, claimed_delta};
    q.delta = claimed_delta;
    q.delta_provenance = Provenance::claimed;
    return q;
}

// ---------------------------------------------------------------------------
// Quantum locality

bool verify_quantum_locality(const CssCode& q, const QuantumLocalityCertificate& cert, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const Field& f = *q.c1.field();
    if (cert.witnesses.size() != q.n)
        return fail("expected " + std::to_string(q.n) + " witness pairs, got " + std::to_string(cert.witnesses.size()));
    if (cert.shared && !q.same_codes) return fail("shared witnesses need C1 = C2");
    for (std::size_t j = 0; j < q.n; ++j) {
        const auto& w = cert.witnesses[j];
        const std::string at = "witness pair for coordinate " + std::to_string(j);
        if (w.coordinate != j) return fail(at + " is out of order");
        if (w.word1.size() != q.n || w.word2.size() != q.n) return fail(at + " has the wrong length");
        for (std::size_t i = 0; i < q.n; ++i)
            if (!f.valid(w.word1[i]) || !f.valid(w.word2[i])) return fail(at + " has an invalid entry");
        if (w.scale1 == 0 || w.scale2 == 0 || !f.valid(w.scale1) || !f.valid(w.scale2))
            return fail(at + " has a zero scale");
        if (!q.c1.dual_contains(w.word1)) return fail(at + ": first word is not in dual(C1)");
        if (!q.c2.dual_contains(w.word2)) return fail(at + ": second word is not in dual(C2)");
        if (cert.shared && w.word1 != w.word2) return fail(at + " is marked shared but the words differ");
        if (w.word1[j] != 1 || w.word2[j] != 1) return fail(at + " is not normalized to 1 at the coordinate");
        std::size_t u = 0;
        for (std::size_t i = 0; i < q.n; ++i) u += (w.word1[i] != 0 || w.word2[i] != 0);
        if (u != w.union_size) return fail(at + " records union size " + std::to_string(w.union_size) + " but has " +
                                           std::to_string(u));
        if (u > std::size_t{cert.r} + 1) return fail(at + " has a support union larger than r + 1");
    }
    return true;
}

namespace {

QuantumLocalityWitness make_pair(const Field& f, std::size_t j, Word a, Word b) {
    QuantumLocalityWitness w;
    w.coordinate = j;
    w.scale1 = f.inv(a[j]);
    w.scale2 = f.inv(b[j]);
    for (auto& x : a) x = f.mul(x, w.scale1);
    for (auto& x : b) x = f.mul(x, w.scale2);
    for (std::size_t i = 0; i < a.size(); ++i) w.union_size += (a[i] != 0 || b[i] != 0);
    w.word1 = std::move(a);
    w.word2 = std::move(b);
    return w;
}

QuantumLocalityResult by_pair_support_search(const CssCode& q, unsigned r, const SearchLimits& limits) {
    const Field& f = *q.c1.field();
    const std::size_t n = q.n;
    const std::size_t s = std::min<std::size_t>(std::size_t{r} + 1, n);
    std::vector<std::optional<QuantumLocalityWitness>> found(n);
    std::size_t remaining = n;
    bool budget_hit = false;
    std::uint64_t seen = 0;
    detail::for_each_subset(n, s, [&](std::span<const std::size_t> set) {
        if (seen++ >= limits.budget) {
            budget_hit = true;
            return false;
        }
        bool useful = false;
        for (std::size_t j : set) useful = useful || !found[j];
        if (!useful) return true;
        const auto ns1 = null_space_on_support(q.c1.generator(), set);
        if (ns1.empty()) return true;
        const auto ns2 = null_space_on_support(q.c2.generator(), set);
        for (std::size_t t = 0; t < set.size(); ++t) {
            if (found[set[t]]) continue;
            auto a = std::find_if(ns1.begin(), ns1.end(), [&](const Word& v) { return v[t] != 0; });
            auto b = std::find_if(ns2.begin(), ns2.end(), [&](const Word& v) { return v[t] != 0; });
            if (a == ns1.end() || b == ns2.end()) continue;
            found[set[t]] = make_pair(f, set[t], scatter(*a, set, n), scatter(*b, set, n));
            --remaining;
        }
        return remaining > 0;
    });
    QuantumLocalityResult res;
    res.method = OracleMethod::support_search;
    res.evaluated = std::min(seen, limits.budget);
    if (remaining > 0) {
        res.outcome = budget_hit ? LocalityOutcome::inconclusive : LocalityOutcome::refused;
        for (std::size_t i = 0; i < n && !budget_hit; ++i) {
            if (!found[i]) {
                res.uncovered = i;
                break;
            }
        }
        return res;
    }
    QuantumLocalityCertificate cert;
    cert.r = r;
    for (auto& w : found) cert.witnesses.push_back(std::move(*w));
    res.outcome = LocalityOutcome::certified;
    res.certificate = std::move(cert);
    return res;
}

// Distinct supports of dual codewords with weight <= cap, each with the first
// word found for it.
std::map<std::uint64_t, Word> light_dual_supports(const LinearCode& c, std::size_t cap, unsigned threads) {
    const Field& f = *c.field();
    const std::size_t n = c.length();
    const auto basis = detail::additive_basis(c.parity_check());
    struct Acc {
        std::size_t cap;
        std::map<std::uint64_t, Word> seen;
        void operator()(const Word& w, std::size_t wt) {
            if (wt == 0 || wt > cap) return;
            seen.try_emplace(detail::support_mask(w), w);
        }
    };
    auto parts = detail::parallel_enumerate<Acc>(f, basis, n, threads, [&] { return Acc{cap, {}}; });
    std::map<std::uint64_t, Word> out;
    for (auto& p : parts)
        for (auto& [mask, w] : p.seen) out.try_emplace(mask, std::move(w));
    return out;
}

QuantumLocalityResult by_pair_enumeration(const CssCode& q, unsigned r, const SearchLimits& limits) {
    const Field& f = *q.c1.field();
    const std::size_t n = q.n;
    const std::size_t cap = std::size_t{r} + 1;
    const auto s1 = light_dual_supports(q.c1, cap, limits.threads);
    const auto s2 = light_dual_supports(q.c2, cap, limits.threads);
    QuantumLocalityResult res;
    res.method = OracleMethod::enumeration;
    res.evaluated = saturating_pow(f.order(), n - q.c1.dimension()) + saturating_pow(f.order(), n - q.c2.dimension());
    QuantumLocalityCertificate cert;
    cert.r = r;
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        const Word* best1 = nullptr;
        const Word* best2 = nullptr;
        int best = -1;
        for (const auto& [m1, w1] : s1) {
            if (!(m1 & bit)) continue;
            for (const auto& [m2, w2] : s2) {
                if (!(m2 & bit)) continue;
                const int u = std::popcount(m1 | m2);
                if (u <= static_cast<int>(cap) && (best < 0 || u < best)) {
                    best = u;
                    best1 = &w1;
                    best2 = &w2;
                }
            }
        }
        if (best < 0) {
            res.outcome = LocalityOutcome::refused;
            res.uncovered = j;
            return res;
        }
        cert.witnesses.push_back(make_pair(f, j, *best1, *best2));
    }
    res.outcome = LocalityOutcome::certified;
    res.certificate = std::move(cert);
    return res;
}

}  // namespace

QuantumLocalityResult quantum_locality_certificate(const CssCode& q, unsigned r, const SearchLimits& limits,
                                                   std::optional<OracleMethod> method) {
    if (r < 1) throw InputError("locality must be at least 1");
    QuantumLocalityResult res;
    if (q.same_codes) {
        auto classical = locality_certificate(q.c1, r, limits, method);
        res.outcome = classical.outcome;
        res.uncovered = classical.uncovered;
        res.evaluated = classical.evaluated;
        res.method = classical.method;
        if (classical.certificate) {
            QuantumLocalityCertificate cert;
            cert.r = r;
            cert.shared = true;
            for (auto& w : classical.certificate->witnesses)
                cert.witnesses.push_back({w.coordinate, w.word, w.word, 1, 1, w.weight});
            res.certificate = std::move(cert);
        }
    } else {
        const std::size_t n = q.n;
        const std::uint64_t qq = q.q();
        const std::uint64_t enum_cost =
            saturating_pow(qq, n - q.c1.dimension()) + saturating_pow(qq, n - q.c2.dimension());
        const std::uint64_t subset_cost = saturating_binomial(n, std::min<std::size_t>(std::size_t{r} + 1, n));
        OracleMethod chosen = method.value_or(enum_cost <= limits.budget && enum_cost < subset_cost && n <= 64
                                                  ? OracleMethod::enumeration
                                                  : OracleMethod::support_search);
        if (chosen == OracleMethod::enumeration && (n > 64 || enum_cost > limits.budget)) {
            res.method = chosen;
            return res;
        }
        res = chosen == OracleMethod::enumeration ? by_pair_enumeration(q, r, limits)
                                                  : by_pair_support_search(q, r, limits);
    }
    if (res.certificate) {
        std::string why;
        if (!verify_quantum_locality(q, *res.certificate, &why))
            throw VerificationFailure("quantum locality certificate: " + why);
        res.certificate->verified = true;
    }
    return res;
}

QuantumLocalityResult minimal_quantum_locality(const CssCode& q, const SearchLimits& limits) {
    QuantumLocalityResult last;
    for (unsigned r = 1; r < std::max<std::size_t>(q.n, 2); ++r) {
        last = quantum_locality_certificate(q, r, limits);
        if (last.outcome != LocalityOutcome::refused) return last;
    }
    return last;
}

QuantumLocalityCertificate pair_witnesses(const CssCode& q, unsigned r, const LocalityCertificate& dual1,
                                          const LocalityCertificate& dual2) {
    if (dual1.witnesses.size() != q.n || dual2.witnesses.size() != q.n)
        throw InputError("witness lists must cover all " + std::to_string(q.n) + " coordinates");
    const Field& f = *q.c1.field();
    QuantumLocalityCertificate cert;
    cert.r = r;
    for (std::size_t j = 0; j < q.n; ++j) {
        const Word& a = dual1.witnesses[j].word;
        const Word& b = dual2.witnesses[j].word;
        if (a.size() != q.n || b.size() != q.n || a[j] == 0 || b[j] == 0)
            throw VerificationFailure("construction witness for coordinate " + std::to_string(j) + " does not cover it");
        cert.witnesses.push_back(make_pair(f, j, a, b));
    }
    cert.shared = q.same_codes && std::all_of(cert.witnesses.begin(), cert.witnesses.end(),
                                              [](const auto& w) { return w.word1 == w.word2; });
    std::string why;
    if (!verify_quantum_locality(q, cert, &why)) throw VerificationFailure("construction witnesses: " + why);
    cert.verified = true;
    return cert;
}

LocalityCertificate classical_projection(const QuantumLocalityCertificate& cert, int which) {
    if (which != 1 && which != 2) throw InputError("code index must be 1 or 2");
    LocalityCertificate out;
    out.r = cert.r;
    for (const auto& w : cert.witnesses) {
        const Word& word = which == 1 ? w.word1 : w.word2;
        out.witnesses.push_back({w.coordinate, word, hamming_weight(word)});
    }
    out.verified = cert.verified;
    return out;
}

// ---------------------------------------------------------------------------
// Quantum bounds

std::int64_t q_singleton_dim_bound(std::int64_t n, std::int64_t delta, std::int64_t r) {
    if (r < 1) throw InputError("locality must be at least 1");
    const std::int64_t a = n - 2 * (delta - 1) - (n - (delta - 1)) / (r + 1);
    return a - a / (r + 1);
}

std::int64_t q_singleton_rhs(std::int64_t n, std::int64_t kappa, std::int64_t r) {
    if (r < 1) throw InputError("locality must be at least 1");
    return n - kappa - 2 * ((kappa + r - 1) / r) + 4;
}

std::int64_t q_singleton_bound(std::int64_t n, std::int64_t kappa, std::int64_t r) {
    const std::int64_t rhs = q_singleton_rhs(n, kappa, r);
    return rhs >= 0 ? rhs / 2 : -((-rhs + 1) / 2);
}

std::int64_t q_cm_sum(std::uint64_t q, unsigned k1, unsigned k2, unsigned delta, unsigned r, KoptOracle oracle) {
    return std::int64_t{cm_bound(q, k1, delta, r, oracle)} + cm_bound(q, k2, delta, r, oracle);
}

std::int64_t q_cm_bound(std::uint64_t q, unsigned k1, unsigned k2, unsigned delta, unsigned r, KoptOracle oracle) {
    return q_cm_sum(q, k1, k2, delta, r, oracle) / 2;
}

std::vector<BoundReport> classify_quantum(const CssCode& q, unsigned r) {
    const auto n = static_cast<std::int64_t>(q.n);
    const auto kappa = static_cast<std::int64_t>(q.kappa);
    const std::int64_t delta = q.delta;
    const std::int64_t rr = r;
    const auto k1 = static_cast<unsigned>(q.c1.dimension());
    const auto k2 = static_cast<unsigned>(q.c2.dimension());
    std::vector<BoundReport> out;
    out.push_back(make_report(BoundId::q_singleton_dim, {{"n", n}, {"delta", delta}, {"r", rr}},
                              q_singleton_dim_bound(n, delta, rr), kappa, Sense::at_most, Provider::exact));
    out.push_back(make_report(BoundId::q_singleton, {{"n", n}, {"kappa", kappa}, {"r", rr}},
                              q_singleton_rhs(n, kappa, rr), 2 * delta, Sense::at_most, Provider::exact));
    const KoptOracle oracle = preferred_oracle(q.q(), std::max(k1, k2));
    out.push_back(make_report(BoundId::q_cm,
                              {{"k1", k1}, {"k2", k2}, {"delta", delta}, {"r", rr},
                               {"q", static_cast<std::int64_t>(q.q())}},
                              q_cm_sum(q.q(), k1, k2, q.delta, r, oracle), 2 * kappa, Sense::at_most,
                              oracle == KoptOracle::exact ? Provider::exact : Provider::upper));
    return out;
}

std::vector<BoundReport> transfer_relations_check(const CssCode& q, unsigned r) {
    const auto n = static_cast<std::int64_t>(q.n);
    const auto kappa = static_cast<std::int64_t>(q.kappa);
    const std::int64_t delta = q.delta;
    const auto k1 = static_cast<unsigned>(q.c1.dimension());
    const auto k2 = static_cast<unsigned>(q.c2.dimension());
    const auto kap = static_cast<unsigned>(q.kappa);
    const std::map<std::string, std::int64_t> inputs{
        {"n", n}, {"k1", k1}, {"k2", k2}, {"kappa", kappa}, {"delta", delta}, {"r", r},
        {"q", static_cast<std::int64_t>(q.q())}};
    std::vector<BoundReport> out;
    auto skip_all = [&](const std::string& note) {
        out.clear();
        for (auto id : {BoundId::transfer_distance, BoundId::transfer_dimension, BoundId::transfer_length})
            out.push_back(skipped_report(id, inputs, note));
        return out;
    };
    if (q.q() != 2 && q.q() != 3) return skip_all("exhaustive oracles run only for q in {2, 3}");
    if (q.n > kTransferMaxLength)
        return skip_all("exhaustive oracles run only for n <= " + std::to_string(kTransferMaxLength));
    try {
        const std::uint64_t qq = q.q();
        out.push_back(make_report(BoundId::transfer_distance, inputs,
                                  std::int64_t{dopt_exact(qq, k1, kap, r)} + dopt_exact(qq, k2, kap, r), 2 * delta,
                                  Sense::at_most, Provider::exact));
        out.push_back(make_report(BoundId::transfer_dimension, inputs,
                                  std::int64_t{kopt_exact(qq, k1, q.delta, r)} + kopt_exact(qq, k2, q.delta, r),
                                  2 * kappa, Sense::at_most, Provider::exact));
        // Searching past (n + kappa) / 2 cannot change the verdict.
        const auto limit = static_cast<unsigned>((n + kappa) / 2);
        const auto len = nopt_exact(qq, kap, q.delta, r, limit);
        auto rep = make_report(BoundId::transfer_length, inputs, 2 * std::int64_t{len.value_or(limit + 1)},
                               n + kappa, Sense::at_least, Provider::exact);
        if (!len) rep.note = "no code found up to length " + std::to_string(limit) + "; bound is a lower estimate";
        out.push_back(std::move(rep));
    } catch (const BudgetExceeded& e) {
        return skip_all(std::string("oracle infeasible: ") + e.what());
    }
    return out;
}

OptimalityVerdict pure_optimal_check(const CssCode& q, unsigned r) {
    OptimalityVerdict v;
    const auto n = static_cast<std::int64_t>(q.n);
    const auto k1 = static_cast<std::int64_t>(q.c1.dimension());
    const auto k2 = static_cast<std::int64_t>(q.c2.dimension());
    const auto kappa = static_cast<std::int64_t>(q.kappa);
    const std::int64_t rr = r;
    v.distance_form_equality = 2 * std::int64_t{q.delta} == q_singleton_rhs(n, kappa, rr);
    v.dimension_form_equality = kappa == q_singleton_dim_bound(n, q.delta, rr);
    v.unequal_distances = q.d1() != q.d2();
    v.singleton_optimal_1 = std::int64_t{q.d1()} == singleton_like_bound(n, k1, rr);
    v.singleton_optimal_2 = std::int64_t{q.d2()} == singleton_like_bound(n, k2, rr);
    v.condition_a = v.singleton_optimal_1 && v.singleton_optimal_2;
    v.condition_b = k1 == k2 && (k1 + rr - 1) / rr == (kappa + rr - 1) / rr;
    v.applicable = q.delta_provenance == Provenance::certified && q.purity == Purity::pure;
    v.biconditional_holds = v.distance_form_equality == (v.condition_a && v.condition_b);
    v.implication_holds = !v.distance_form_equality || v.dimension_form_equality;
    if (!v.applicable) {
        v.note = "characterization applies to pure codes with certified distance; not applicable";
    } else if (v.unequal_distances) {
        v.note = "d1 != d2, so equality in the distance form cannot hold";
    }
    return v;
}

bool CssCertification::any_violated() const {
    for (const auto& r : reports)
        if (r.verdict == Verdict::violated) return true;
    return optimality.applicable && (!optimality.biconditional_holds || !optimality.implication_holds);
}

CssCertification certify_css(const CssCode& q, const QuantumLocalityCertificate& locality) {
    if (q.delta_provenance != Provenance::certified) throw PreconditionError("certification needs a certified delta");
    std::string why;
    if (!verify_quantum_locality(q, locality, &why)) throw PreconditionError("locality certificate rejected: " + why);
    CssCertification out{q, locality, {classical_projection(locality, 1), classical_projection(locality, 2)}, {}, {}};
    const LinearCode* codes[2] = {&q.c1, &q.c2};
    for (int i = 0; i < 2; ++i) {
        for (auto rep : classify_classical(*codes[i], out.classical[i])) {
            rep.inputs["code"] = i + 1;
            out.reports.push_back(std::move(rep));
        }
    }
    for (auto& rep : classify_quantum(q, locality.r)) out.reports.push_back(std::move(rep));
    for (auto& rep : transfer_relations_check(q, locality.r)) out.reports.push_back(std::move(rep));
    out.optimality = pure_optimal_check(q, locality.r);
    return out;
}

}  // namespace qlrc
