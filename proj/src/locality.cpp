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

#include "qlrc/locality.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <tuple>

#include "detail.hpp"
#include "qlrc/errors.hpp"

namespace qlrc {

std::string to_string(LocalityOutcome o) {
    switch (o) {
        case LocalityOutcome::certified:
            return "certified";
        case LocalityOutcome::refused:
            return "refused";
        case LocalityOutcome::inconclusive:
            return "inconclusive";
    }
    return "?";
}

bool verify_locality(const LinearCode& c, const LocalityCertificate& cert, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const std::size_t n = c.length();
    if (cert.witnesses.size() != n)
        return fail("expected " + std::to_string(n) + " witnesses, got " + std::to_string(cert.witnesses.size()));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& w = cert.witnesses[i];
        const std::string at = "witness for coordinate " + std::to_string(i);
        if (w.coordinate != i) return fail(at + " is out of order");
        if (w.word.size() != n) return fail(at + " has the wrong length");
        for (Elem x : w.word)
            if (!c.field()->valid(x)) return fail(at + " has an invalid entry");
        if (!c.dual_contains(w.word)) return fail(at + " is not a dual codeword");
        const std::size_t wt = hamming_weight(w.word);
        if (wt != w.weight) return fail(at + " records weight " + std::to_string(w.weight) + " but has " +
                                        std::to_string(wt));
        if (wt > std::size_t{cert.r} + 1) return fail(at + " is heavier than r + 1");
        if (w.word[i] == 0) return fail(at + " does not cover it");
    }
    return true;
}

namespace {

LocalityWitness normalized_witness(const Field& f, std::size_t i, Word w) {
    const Elem s = f.inv(w[i]);
    for (auto& x : w) x = f.mul(x, s);
    const std::size_t wt = hamming_weight(w);
    return {i, std::move(w), wt};
}

LocalityResult by_support_search(const LinearCode& c, unsigned r, const SearchLimits& limits) {
    const Field& f = *c.field();
    const std::size_t n = c.length();
    const std::size_t s = std::min<std::size_t>(std::size_t{r} + 1, n);
    std::vector<std::optional<Word>> found(n);
    std::size_t remaining = n;
    bool budget_hit = false;
    LocalityResult res;
    res.method = OracleMethod::support_search;
    std::uint64_t seen = 0;
    detail::for_each_subset(n, s, [&](std::span<const std::size_t> set) {
        if (seen++ >= limits.budget) {
            budget_hit = true;
            return false;
        }
        bool useful = false;
        for (std::size_t j : set) useful = useful || !found[j];
        if (!useful) return true;
        const auto ns = null_space_on_support(c.generator(), set);
        for (const auto& v : ns) {
            for (std::size_t t = 0; t < set.size(); ++t) {
                if (v[t] == 0 || found[set[t]]) continue;
                found[set[t]] = scatter(v, set, n);
                --remaining;
            }
        }
        return remaining > 0;
    });
    res.evaluated = std::min(seen, limits.budget);
    if (remaining > 0) {
        res.outcome = budget_hit ? LocalityOutcome::inconclusive : LocalityOutcome::refused;
        for (std::size_t i = 0; i < n && !res.uncovered && !budget_hit; ++i)
            if (!found[i]) res.uncovered = i;
        return res;
    }
    LocalityCertificate cert;
    cert.r = r;
    for (std::size_t i = 0; i < n; ++i) cert.witnesses.push_back(normalized_witness(f, i, std::move(*found[i])));
    res.outcome = LocalityOutcome::certified;
    res.certificate = std::move(cert);
    return res;
}

LocalityResult by_enumeration(const LinearCode& c, unsigned r, const SearchLimits& limits) {
    const Field& f = *c.field();
    const std::size_t n = c.length();
    const auto basis = detail::additive_basis(c.parity_check());
    struct Acc {
        std::size_t n;
        std::size_t cap;
        std::vector<std::size_t> weight;
        std::vector<Word> word;
        void operator()(const Word& w, std::size_t wt) {
            if (wt == 0 || wt > cap) return;
            for (std::size_t i = 0; i < n; ++i) {
                if (w[i] == 0 || weight[i] <= wt) continue;
                weight[i] = wt;
                word[i] = w;
            }
        }
    };
    const std::size_t none = n + 1;
    auto parts = detail::parallel_enumerate<Acc>(f, basis, n, limits.threads, [&] {
        return Acc{n, std::size_t{r} + 1, std::vector<std::size_t>(n, none), std::vector<Word>(n)};
    });
    std::vector<std::size_t> weight(n, none);
    std::vector<Word> word(n);
    for (auto& p : parts) {
        for (std::size_t i = 0; i < n; ++i) {
            if (p.weight[i] < weight[i]) {
                weight[i] = p.weight[i];
                word[i] = std::move(p.word[i]);
            }
        }
    }
    LocalityResult res;
    res.method = OracleMethod::enumeration;
    res.evaluated = saturating_pow(f.order(), n - c.dimension());
    for (std::size_t i = 0; i < n; ++i) {
        if (weight[i] == none) {
            res.outcome = LocalityOutcome::refused;
            res.uncovered = i;
            return res;
        }
    }
    LocalityCertificate cert;
    cert.r = r;
    for (std::size_t i = 0; i < n; ++i) cert.witnesses.push_back(normalized_witness(f, i, std::move(word[i])));
    res.outcome = LocalityOutcome::certified;
    res.certificate = std::move(cert);
    return res;
}

}  // namespace

LocalityResult locality_certificate(const LinearCode& c, unsigned r, const SearchLimits& limits,
                                    std::optional<OracleMethod> method) {
    if (r < 1) throw InputError("locality must be at least 1");
    const std::size_t n = c.length();
    if (c.dimension() == n) {
        // The dual is zero: nothing covers any coordinate.
        LocalityResult res;
        res.outcome = LocalityOutcome::refused;
        res.uncovered = 0;
        return res;
    }
    const std::uint64_t enum_cost = saturating_pow(c.field()->order(), n - c.dimension());
    const std::uint64_t subset_cost = saturating_binomial(n, std::min<std::size_t>(std::size_t{r} + 1, n));
    OracleMethod chosen;
    if (method) {
        chosen = *method;
    } else {
        chosen = (enum_cost <= limits.budget && enum_cost < subset_cost) ? OracleMethod::enumeration
                                                                         : OracleMethod::support_search;
    }
    LocalityResult res;
    if (chosen == OracleMethod::enumeration) {
        if (enum_cost > limits.budget) {
            res.method = chosen;
            return res;
        }
        res = by_enumeration(c, r, limits);
    } else {
        res = by_support_search(c, r, limits);
    }
    if (res.certificate) {
        std::string why;
        if (!verify_locality(c, *res.certificate, &why)) throw VerificationFailure("locality certificate: " + why);
        res.certificate->verified = true;
    }
    return res;
}

LocalityResult minimal_locality(const LinearCode& c, const SearchLimits& limits) {
    const std::size_t n = c.length();
    LocalityResult last;
    for (unsigned r = 1; r < std::max<std::size_t>(n, 2); ++r) {
        last = locality_certificate(c, r, limits);
        if (last.outcome != LocalityOutcome::refused) return last;
    }
    return last;
}

// ---------------------------------------------------------------------------
// Classical bounds

std::int64_t singleton_like_bound(std::int64_t n, std::int64_t k, std::int64_t r) {
    if (r < 1) throw InputError("locality must be at least 1");
    return n - k - (k + r - 1) / r + 2;
}

namespace {

struct ExistenceKey {
    std::uint64_t q;
    unsigned n, k, d;
    long r;
    auto operator<=>(const ExistenceKey&) const = default;
};

std::mutex g_exist_mu;
std::map<ExistenceKey, bool>& existence_memo() {
    static std::map<ExistenceKey, bool> memo;
    return memo;
}

// Depth-first search over systematic generators [I_k | A]. Rows of A are
// scaled to start with 1 and listed in nondecreasing order, which loses no
// code up to column permutation and scaling (both preserve distance and
// locality).
class SystematicSearch {
public:
    SystematicSearch(FieldPtr f, unsigned n, unsigned k, unsigned d, std::optional<unsigned> r)
        : field_(std::move(f)), n_(n), k_(k), d_(d), r_(r) {
        const Field& F = *field_;
        const unsigned m = n - k;
        const std::uint64_t total = saturating_pow(F.order(), m);
        for (std::uint64_t code = 1; code < total; ++code) {
            Word a(m);
            std::uint64_t t = code;
            for (unsigned i = 0; i < m; ++i) {
                a[i] = static_cast<Elem>(t % F.order());
                t /= F.order();
            }
            const auto first = std::find_if(a.begin(), a.end(), [](Elem x) { return x != 0; });
            if (*first != 1) continue;
            if (hamming_weight(a) + 1 < std::max(d, 2u)) continue;
            candidates_.push_back(std::move(a));
        }
        if (r_) {
            full_mask_ = (n >= 64) ? ~0ull : ((std::uint64_t{1} << n) - 1);
            const unsigned cap = std::min(n, *r_ + 1);
            for (unsigned w = 1; w <= cap; ++w) {
                detail::for_each_subset(n, w, [&](std::span<const std::size_t> s) {
                    // all normalized words with support exactly s
                    std::vector<Elem> vals(w, 1);
                    for (;;) {
                        Word word(n, 0);
                        std::uint64_t mask = 0;
                        for (unsigned t = 0; t < w; ++t) {
                            word[s[t]] = vals[t];
                            mask |= std::uint64_t{1} << s[t];
                        }
                        low_.push_back({std::move(word), mask});
                        unsigned j = 1;
                        for (; j < w; ++j) {
                            if (++vals[j] < F.order()) break;
                            vals[j] = 1;
                        }
                        if (j >= w) break;
                    }
                    return true;
                });
            }
        }
    }

    bool run() {
        std::vector<Word> span{Word(n_, 0)};
        std::vector<std::uint32_t> alive(low_.size());
        for (std::uint32_t i = 0; i < alive.size(); ++i) alive[i] = i;
        return dfs(0, 0, span, alive);
    }

private:
    struct LowWord {
        Word word;
        std::uint64_t mask;
    };

    bool covered(const std::vector<std::uint32_t>& alive) const {
        std::uint64_t m = 0;
        for (auto i : alive) m |= low_[i].mask;
        return m == full_mask_;
    }

    bool dfs(unsigned row, std::size_t start, const std::vector<Word>& span, const std::vector<std::uint32_t>& alive) {
        if (row == k_) return true;
        const Field& F = *field_;
        for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
            Word x(n_, 0);
            x[row] = 1;
            std::copy(candidates_[idx].begin(), candidates_[idx].end(), x.begin() + k_);
            std::vector<Word> next = span;
            next.reserve(span.size() * F.order());
            bool ok = true;
            for (Elem lambda = 1; lambda < F.order() && ok; ++lambda) {
                for (const auto& cw : span) {
                    Word y(n_);
                    for (unsigned i = 0; i < n_; ++i) y[i] = F.add(cw[i], F.mul(lambda, x[i]));
                    if (hamming_weight(y) < d_) {
                        ok = false;
                        break;
                    }
                    next.push_back(std::move(y));
                }
            }
            if (!ok) continue;
            std::vector<std::uint32_t> still;
            if (r_) {
                for (auto i : alive) {
                    Elem s = 0;
                    for (unsigned t = 0; t < n_; ++t) s = F.add(s, F.mul(low_[i].word[t], x[t]));
                    if (s == 0) still.push_back(i);
                }
                // a subcode of a code with locality r has locality r
                if (!covered(still)) continue;
            }
            if (dfs(row + 1, idx, next, still)) return true;
        }
        return false;
    }

    FieldPtr field_;
    unsigned n_, k_, d_;
    std::optional<unsigned> r_;
    std::vector<Word> candidates_;
    std::vector<LowWord> low_;
    std::uint64_t full_mask_ = 0;
};

void check_space(std::uint64_t q, unsigned n) {
    if (saturating_pow(q, n) > kExhaustiveSpaceLimit)
        throw BudgetExceeded("exhaustive code search over GF(" + std::to_string(q) + ")^" + std::to_string(n) +
                             " exceeds the supported size");
}

}  // namespace

bool linear_code_exists(std::uint64_t q, unsigned n, unsigned k, unsigned d, std::optional<unsigned> r) {
    if (k > n) return false;
    if (k == 0) return true;
    if (r && *r < 1) throw InputError("locality must be at least 1");
    if (d > n - k + 1) return false;
    if (k == n) return !r && d <= 1;
    if (!r && d <= 1) return true;
    check_space(q, n);
    const ExistenceKey key{q, n, k, d, r ? static_cast<long>(*r) : -1L};
    {
        std::lock_guard lock(g_exist_mu);
        auto it = existence_memo().find(key);
        if (it != existence_memo().end()) return it->second;
    }
    const bool found = SystematicSearch(Field::of_order(q), n, k, d, r).run();
    std::lock_guard lock(g_exist_mu);
    existence_memo()[key] = found;
    return found;
}

unsigned kopt_exact(std::uint64_t q, unsigned n, unsigned d, std::optional<unsigned> r) {
    if (n < d) return 0;
    if (!r && d <= 1) return n;
    check_space(q, n);
    for (unsigned k = kopt_upper(q, n, d); k >= 1; --k)
        if (linear_code_exists(q, n, k, d, r)) return k;
    return 0;
}

unsigned dopt_exact(std::uint64_t q, unsigned n, unsigned k, std::optional<unsigned> r) {
    if (k < 1 || k > n) throw InputError("dopt needs 1 <= k <= n");
    for (unsigned d = n - k + 1; d >= 1; --d)
        if (linear_code_exists(q, n, k, d, r)) return d;
    return 0;
}

std::optional<unsigned> nopt_exact(std::uint64_t q, unsigned k, unsigned d, std::optional<unsigned> r,
                                   unsigned n_max) {
    if (k < 1) throw InputError("nopt needs k >= 1");
    for (unsigned n = k; n <= n_max; ++n)
        if (linear_code_exists(q, n, k, d, r)) return n;
    return std::nullopt;
}

unsigned kopt_upper(std::uint64_t q, unsigned n, unsigned d) {
    if (n < d) return 0;
    if (d <= 1) return n;
    unsigned best = n - d + 1;
    // Griesmer: sum_{i<k} ceil(d / q^i) <= n
    {
        std::uint64_t sum = 0, qi = 1;
        unsigned k = 0;
        for (;;) {
            const std::uint64_t term = (d + qi - 1) / qi;
            if (sum + term > n) break;
            sum += term;
            ++k;
            if (qi <= std::numeric_limits<std::uint64_t>::max() / q) qi *= q;
        }
        best = std::min(best, k);
    }
    // Plotkin: q^k <= dq / (dq - n(q-1)) when dq > n(q-1)
    {
        const std::uint64_t dq = std::uint64_t{d} * q;
        const std::uint64_t nq = std::uint64_t{n} * (q - 1);
        if (dq > nq) {
            const std::uint64_t gap = dq - nq;
            unsigned k = 0;
            std::uint64_t qk = q;
            while (qk * gap <= dq) {
                ++k;
                qk *= q;
            }
            best = std::min(best, k);
        }
    }
    return best;
}

KoptOracle preferred_oracle(std::uint64_t q, unsigned n) {
    return saturating_pow(q, n) <= kExhaustiveSpaceLimit ? KoptOracle::exact : KoptOracle::upper;
}

unsigned cm_bound(std::uint64_t q, unsigned n, unsigned d, unsigned r, KoptOracle oracle) {
    if (r < 1) throw InputError("locality must be at least 1");
    std::int64_t best = -1;
    for (std::int64_t l = 0;; ++l) {
        const std::int64_t len = static_cast<std::int64_t>(n) - l * (r + 1);
        std::int64_t term = l * r;
        const bool last = len < static_cast<std::int64_t>(d);
        if (!last) {
            const auto ulen = static_cast<unsigned>(len);
            term += oracle == KoptOracle::exact ? kopt_exact(q, ulen, d) : kopt_upper(q, ulen, d);
        }
        if (best < 0 || term < best) best = term;
        if (last) break;
    }
    return static_cast<unsigned>(best);
}

// ---------------------------------------------------------------------------
// Reports

std::string to_string(BoundId id) {
    switch (id) {
        case BoundId::c_singleton:
            return "c_singleton";
        case BoundId::c_cm:
            return "c_cm";
        case BoundId::q_singleton_dim:
            return "q_singleton_dim";
        case BoundId::q_singleton:
            return "q_singleton";
        case BoundId::q_cm:
            return "q_cm";
        case BoundId::transfer_distance:
            return "transfer_distance";
        case BoundId::transfer_dimension:
            return "transfer_dimension";
        case BoundId::transfer_length:
            return "transfer_length";
    }
    return "?";
}

std::string to_string(Sense s) { return s == Sense::at_most ? "at_most" : "at_least"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::meets_with_equality:
            return "meets_with_equality";
        case Verdict::satisfied_strict:
            return "satisfied_strict";
        case Verdict::violated:
            return "violated";
        case Verdict::skipped:
            return "skipped";
    }
    return "?";
}

std::string to_string(Provider p) {
    switch (p) {
        case Provider::exact:
            return "exact";
        case Provider::upper:
            return "upper";
        case Provider::skipped:
            return "skipped";
    }
    return "?";
}

namespace {

std::mutex g_tally_mu;
ReportTally g_tally;

void record(const BoundReport& r) {
    std::lock_guard lock(g_tally_mu);
    ++g_tally.total;
    if (r.verdict == Verdict::violated) {
        ++g_tally.violated;
        g_tally.violations.push_back(r);
    }
    if (r.verdict == Verdict::skipped) ++g_tally.skipped;
}

}  // namespace

Verdict verdict_for(std::int64_t bound, std::int64_t achieved, Sense sense) {
    if (achieved == bound) return Verdict::meets_with_equality;
    const bool ok = sense == Sense::at_most ? achieved < bound : achieved > bound;
    return ok ? Verdict::satisfied_strict : Verdict::violated;
}

BoundReport make_report(BoundId id, std::map<std::string, std::int64_t> inputs, std::int64_t bound,
                        std::int64_t achieved, Sense sense, Provider oracle) {
    BoundReport r;
    r.id = id;
    r.inputs = std::move(inputs);
    r.bound = bound;
    r.achieved = achieved;
    r.sense = sense;
    r.oracle = oracle;
    r.verdict = verdict_for(bound, achieved, sense);
    record(r);
    return r;
}

BoundReport skipped_report(BoundId id, std::map<std::string, std::int64_t> inputs, std::string note) {
    BoundReport r;
    r.id = id;
    r.inputs = std::move(inputs);
    r.verdict = Verdict::skipped;
    r.oracle = Provider::skipped;
    r.note = std::move(note);
    record(r);
    return r;
}

ReportTally report_tally() {
    std::lock_guard lock(g_tally_mu);
    return g_tally;
}

std::vector<BoundReport> classify_classical(const LinearCode& c, const LocalityCertificate& cert) {
    if (c.is_degenerate()) throw PreconditionError("bounds are not evaluated for degenerate codes");
    const auto d = c.certified_distance();
    if (!d) throw PreconditionError("classical bounds need a certified distance");
    std::string why;
    if (!verify_locality(c, cert, &why)) throw PreconditionError("locality certificate rejected: " + why);
    const auto n = static_cast<std::int64_t>(c.length());
    const auto k = static_cast<std::int64_t>(c.dimension());
    const std::int64_t r = cert.r;
    const std::uint64_t q = c.field()->order();
    std::vector<BoundReport> out;
    out.push_back(make_report(BoundId::c_singleton, {{"n", n}, {"k", k}, {"r", r}}, singleton_like_bound(n, k, r),
                              *d, Sense::at_most, Provider::exact));
    const KoptOracle oracle = preferred_oracle(q, static_cast<unsigned>(n));
    const unsigned cm = cm_bound(q, static_cast<unsigned>(n), *d, cert.r, oracle);
    out.push_back(make_report(BoundId::c_cm,
                              {{"n", n}, {"d", static_cast<std::int64_t>(*d)}, {"r", r},
                               {"q", static_cast<std::int64_t>(q)}},
                              cm, k, Sense::at_most, oracle == KoptOracle::exact ? Provider::exact : Provider::upper));
    return out;
}

}  // namespace qlrc
