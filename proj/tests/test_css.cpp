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

#include <random>

#include "doctest.h"
#include "qlrc/css.hpp"
#include "qlrc/cyclotomic.hpp"
#include "qlrc/errors.hpp"
#include "test_util.hpp"

using namespace qlrc;

namespace {

std::vector<Word> words_of(const FieldPtr& f, const Matrix& rows) {
    std::vector<Word> out;
    testing::for_each_combination(f, rows.row_words(), rows.cols(), [&](const Word& w) { out.push_back(w); });
    return out;
}

bool orthogonal_to_rows(const FieldPtr& f, const Word& w, const Matrix& rows) {
    for (const auto& g : rows.row_words())
        if (testing::dot(f, w, g) != 0) return false;
    return true;
}

// wt(C \ dual D) by listing every codeword of C.
unsigned brute_relative(const FieldPtr& f, const LinearCode& c, const LinearCode& d) {
    unsigned best = 0;
    for (const auto& w : words_of(f, c.generator())) {
        if (orthogonal_to_rows(f, w, d.generator())) continue;
        const auto wt = static_cast<unsigned>(hamming_weight(w));
        if (best == 0 || wt < best) best = wt;
    }
    return best;
}

// Smallest r with a witness pair for every coordinate; 0 when none exists.
unsigned brute_quantum_locality(const FieldPtr& f, const LinearCode& c1, const LinearCode& c2) {
    const auto d1 = words_of(f, c1.parity_check());
    const auto d2 = words_of(f, c2.parity_check());
    const std::size_t n = c1.length();
    unsigned r = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t best = 0;
        for (const auto& a : d1) {
            if (a[j] == 0) continue;
            for (const auto& b : d2) {
                if (b[j] == 0) continue;
                std::size_t u = 0;
                for (std::size_t i = 0; i < n; ++i) u += a[i] != 0 || b[i] != 0;
                if (best == 0 || u < best) best = u;
            }
        }
        if (best == 0) return 0;
        r = std::max<unsigned>(r, static_cast<unsigned>(best - 1));
    }
    return r;
}

LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    for (;;) {
        auto c = LinearCode::from_generator(testing::random_matrix(f, k, n, rng));
        if (c.dimension() == k) return c;
    }
}

// A random pair with dual(C1) strictly inside C2.
std::pair<LinearCode, LinearCode> random_pair(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        const std::size_t k1 = 1 + rng() % (n - 1);
        auto c1 = random_code(f, n, k1, rng);
        auto rows = c1.parity_check().row_words();
        const std::size_t extra = 1 + rng() % k1;
        auto more = testing::random_matrix(f, extra, n, rng).row_words();
        rows.insert(rows.end(), more.begin(), more.end());
        auto c2 = LinearCode::from_generator(Matrix::from_rows(f, rows, n));
        if (c2.dimension() > n - k1) return {c1, c2};
    }
}

CssCode cyclic_4_3_13() {
    auto gf13 = Field::of_order(13);
    auto c = build_cyclic_code(gf13, make_defining_set(4, 13, {1})).code;
    return css_compose(c, c);
}

}  // namespace

TEST_CASE("quantum bound arithmetic") {
    CHECK(q_singleton_dim_bound(4, 2, 3) == 2);
    CHECK(q_singleton_dim_bound(5, 3, 4) == 1);
    CHECK(q_singleton_dim_bound(12, 3, 5) == 6);

    CHECK(q_singleton_bound(4, 2, 3) == 2);
    CHECK(q_singleton_bound(5, 1, 4) == 3);
    CHECK(q_singleton_bound(12, 6, 5) == 3);
    CHECK(q_singleton_rhs(12, 6, 5) == 6);

    CHECK(q_cm_bound(2, 3, 3, 2, 3, KoptOracle::exact) == 2);
    CHECK(q_cm_sum(2, 3, 3, 2, 3, KoptOracle::exact) == 4);
    for (unsigned k = 2; k <= 7; ++k)
        CHECK(q_cm_sum(2, k, k, 2, 2, KoptOracle::exact) == 2 * std::int64_t{cm_bound(2, k, 2, 2, KoptOracle::exact)});
    // delta above the length: the l = 0 term is already past the end
    CHECK(q_cm_sum(2, 2, 2, 3, 1, KoptOracle::exact) == 0);
}

TEST_CASE("composition examples") {
    auto q = cyclic_4_3_13();
    CHECK(q.n == 4);
    CHECK(q.kappa == 2);
    CHECK(q.delta == 2);
    CHECK(q.purity == Purity::pure);
    CHECK(q.same_codes);
    CHECK(q.delta_provenance == Provenance::certified);
    CHECK(hamming_weight(q.relative_witness[0]) == 2);
    CHECK(q.c2.contains(q.relative_witness[0]));
    CHECK_FALSE(dual_code(q.c1).contains(q.relative_witness[0]));

    auto gf13 = Field::of_order(13);
    auto c = build_cyclic_code(gf13, make_defining_set(4, 13, {1})).code;
    CHECK_THROWS_AS(css_compose(c, dual_code(c)), PreconditionError);
    CHECK_THROWS_AS(css_compose(dual_code(c), dual_code(c)), PreconditionError);
    auto gf7 = Field::of_order(7);
    CHECK_THROWS_AS(css_compose(c, LinearCode::from_generator(Matrix::identity(gf7, 4))), InputError);

    auto claimed = css_claimed(c, c, 2);
    CHECK(claimed.delta_provenance == Provenance::claimed);
    CHECK(claimed.kappa == 2);
}

TEST_CASE("quantum locality examples") {
    auto q = cyclic_4_3_13();
    auto res = minimal_quantum_locality(q);
    REQUIRE(res.certificate);
    CHECK(res.certificate->r == 3);
    CHECK(res.certificate->shared);
    CHECK(res.certificate->witnesses[0].word1 == Word{1, 5, 12, 8});
    CHECK(quantum_locality_certificate(q, 2).outcome == LocalityOutcome::refused);
    // r = n - 1 covers with whole-support words
    CHECK(quantum_locality_certificate(q, 3).outcome == LocalityOutcome::certified);

    auto p1 = classical_projection(*res.certificate, 1);
    CHECK(verify_locality(q.c1, p1));
    CHECK_THROWS_AS(classical_projection(*res.certificate, 3), InputError);
}

TEST_CASE("tampered quantum certificates are rejected") {
    auto q = cyclic_4_3_13();
    auto cert = *minimal_quantum_locality(q).certificate;
    CHECK(verify_quantum_locality(q, cert));
    std::string why;

    auto bad = cert;
    bad.witnesses[1].union_size = 3;
    CHECK_FALSE(verify_quantum_locality(q, bad, &why));

    bad = cert;
    bad.r = 2;
    CHECK_FALSE(verify_quantum_locality(q, bad, &why));

    bad = cert;
    bad.witnesses[2].word2[0] = 0;
    bad.witnesses[2].word1[0] = 0;
    CHECK_FALSE(verify_quantum_locality(q, bad, &why));
    CHECK_FALSE(why.empty());

    bad = cert;
    bad.witnesses[0].word1 = Word{2, 10, 11, 3};  // a multiple, not normalized
    CHECK_FALSE(verify_quantum_locality(q, bad));
}

TEST_CASE("certification of the [[4,2,2]] code over GF(13)") {
    auto q = cyclic_4_3_13();
    auto loc = *minimal_quantum_locality(q).certificate;
    auto cert = certify_css(q, loc);
    CHECK_FALSE(cert.any_violated());
    CHECK(cert.optimality.applicable);
    CHECK(cert.optimality.condition_a);
    CHECK(cert.optimality.condition_b);
    CHECK(cert.optimality.distance_form_equality);
    CHECK(cert.optimality.dimension_form_equality);
    CHECK(cert.optimality.biconditional_holds);
    CHECK(cert.optimality.implication_holds);
    int skipped = 0;
    for (const auto& r : cert.reports) {
        CHECK(r.verdict != Verdict::violated);
        if (r.id == BoundId::transfer_length) CHECK(r.verdict == Verdict::skipped);
        skipped += r.verdict == Verdict::skipped;
    }
    CHECK(skipped == 3);
}

TEST_CASE("unequal dimensions fail the second condition") {
    auto gf2 = Field::of_order(2);
    // C1 = even-weight [4,3], C2 = [4,2] containing the all-ones word
    auto c1 = LinearCode::from_generator(Matrix::from_rows(gf2, {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}, 4));
    auto c2 = LinearCode::from_generator(Matrix::from_rows(gf2, {{1, 1, 1, 1}, {0, 1, 0, 1}}, 4));
    REQUIRE(is_subcode(dual_code(c1), c2, true));
    auto q = css_compose(c1, c2);
    CHECK(q.kappa == 1);
    auto v = pure_optimal_check(q, 3);
    CHECK_FALSE(v.condition_b);
    CHECK(v.biconditional_holds);
}

TEST_CASE("composition and quantum locality agree with brute force") {
    std::mt19937_64 rng(31337);
    int pure = 0, impure = 0, located = 0;
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t n = 3 + rng() % (q == 2 ? 5 : 3);
            auto [c1, c2] = random_pair(f, n, rng);
            auto code = css_compose(c1, c2);
            CAPTURE(q);
            CAPTURE(n);
            CHECK(code.kappa == c1.dimension() + c2.dimension() - n);
            CHECK(code.relative[0] == brute_relative(f, c2, c1));
            CHECK(code.relative[1] == brute_relative(f, c1, c2));
            const unsigned dmin = std::min(code.d1(), code.d2());
            CHECK((code.purity == Purity::pure) == (code.delta == dmin));
            (code.purity == Purity::pure ? pure : impure)++;

            const unsigned expect = brute_quantum_locality(f, c1, c2);
            for (auto m : {OracleMethod::support_search, OracleMethod::enumeration}) {
                for (unsigned r = 1; r < n; ++r) {
                    auto res = quantum_locality_certificate(code, r, {}, m);
                    const bool has = expect != 0 && r >= expect;
                    CHECK(res.outcome == (has ? LocalityOutcome::certified : LocalityOutcome::refused));
                }
            }
            auto min = minimal_quantum_locality(code);
            if (expect == 0) {
                CHECK(min.outcome == LocalityOutcome::refused);
                continue;
            }
            REQUIRE(min.certificate);
            CHECK(min.certificate->r == expect);
            ++located;
            auto cert = certify_css(code, *min.certificate);
            for (const auto& rep : cert.reports) CHECK(rep.verdict != Verdict::violated);
            CHECK_FALSE(cert.any_violated());
        }
    }
    CHECK(pure > 10);
    CHECK(impure > 0);
    CHECK(located > 10);
}

TEST_CASE("construction witnesses are paired and checked") {
    auto q = cyclic_4_3_13();
    auto classical = *minimal_locality(q.c1).certificate;
    auto pairs = pair_witnesses(q, 3, classical, classical);
    CHECK(pairs.verified);
    CHECK(pairs.shared);
    CHECK_THROWS_AS(pair_witnesses(q, 2, classical, classical), VerificationFailure);
    auto short_list = classical;
    short_list.witnesses.pop_back();
    CHECK_THROWS_AS(pair_witnesses(q, 3, short_list, classical), InputError);
}
