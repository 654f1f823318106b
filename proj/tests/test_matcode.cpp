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
#include "qlrc/errors.hpp"
#include "qlrc/matcode.hpp"
#include "test_util.hpp"

using namespace qlrc;

namespace {

LinearCode code_from(const FieldPtr& f, const std::vector<Word>& rows) {
    return LinearCode::from_generator(Matrix::from_rows(f, rows, rows.at(0).size()));
}

// Vandermonde-style [n, k] generator with evaluation points 0..n-1.
LinearCode rs_code(const FieldPtr& f, std::size_t n, std::size_t k) {
    std::vector<Word> rows(k, Word(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = f->pow(static_cast<Elem>(j), i);
    return code_from(f, rows);
}

LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    for (;;) {
        auto g = testing::random_matrix(f, k, n, rng);
        auto c = LinearCode::from_generator(g);
        if (c.dimension() == k) return c;
    }
}

}  // namespace

TEST_CASE("rref examples") {
    auto gf2 = Field::of_order(2);
    auto id = Matrix::identity(gf2, 3);
    auto r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.matrix == id);

    auto zero = Matrix(gf2, 2, 3);
    CHECK(rref(zero).rank == 0);
    CHECK(rref(zero).matrix.is_zero());

    auto m = Matrix::from_rows(gf2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
    auto red = rref(m);
    CHECK(red.rank == 2);
    CHECK(red.pivots == std::vector<std::size_t>{0, 1});
    CHECK(red.matrix == Matrix::from_rows(gf2, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}, 3));
}

TEST_CASE("rref properties on random matrices") {
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {2u, 3u, 4u, 7u, 9u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 7;
            auto m = testing::random_matrix(f, rows, cols, rng);
            auto red = rref(m);
            // the row space is preserved: every original row is in the span of the reduced rows
            auto basis = red.matrix.top_rows(red.rank).row_words();
            for (const auto& row : m.row_words()) {
                if (basis.empty()) {
                    CHECK(hamming_weight(row) == 0);
                } else {
                    CHECK(testing::in_span(f, basis, row));
                }
            }
            for (std::size_t i = 0; i < red.rank; ++i) {
                CHECK(red.matrix.at(i, red.pivots[i]) == 1);
                for (std::size_t j = 0; j < rows; ++j)
                    if (j != i) CHECK(red.matrix.at(j, red.pivots[i]) == 0);
            }
            const auto ns = null_space(m);
            CHECK(ns.size() + red.rank == cols);
            for (const auto& x : ns)
                for (const auto& row : m.row_words()) CHECK(testing::dot(f, row, x) == 0);
        }
    }
}

TEST_CASE("duals and membership") {
    auto gf2 = Field::of_order(2);
    auto rep = code_from(gf2, {{1, 1, 1}});
    auto even = dual_code(rep);
    CHECK(even.dimension() == 2);
    for (const auto& row : even.generator().row_words()) CHECK(hamming_weight(row) % 2 == 0);
    CHECK(certify_distance(even).weight == 2);

    auto full = LinearCode::from_generator(Matrix::identity(gf2, 4));
    auto zero = dual_code(full);
    CHECK(zero.dimension() == 0);
    CHECK(zero.is_degenerate());
    CHECK(full.is_degenerate());
    CHECK(is_subcode(zero, full));

    auto even4 = dual_code(code_from(gf2, {{1, 1, 1, 1}}));
    CHECK(even4.contains(Word{0, 0, 0, 0}));
    CHECK(even4.contains(even4.generator().row(0)));
    CHECK_FALSE(even4.contains(Word{1, 0, 0, 0}));
    CHECK_THROWS_AS((void)even4.contains(Word{1, 0, 0}), InputError);

    CHECK(is_subcode(even4, even4));
    CHECK_FALSE(is_subcode(even4, even4, true));

    std::mt19937_64 rng(5);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + rng() % 7, k = 1 + rng() % (n - 1);
            auto c = random_code(f, n, k, rng);
            auto d = dual_code(c);
            CHECK(d.dimension() == n - k);
            CHECK((c.generator() * d.generator().transpose()).is_zero());
            CHECK(dual_code(d) == c);
            for (const auto& row : d.generator().row_words()) CHECK(c.dual_contains(row));
        }
    }
}

TEST_CASE("subcodes of nested Reed-Solomon codes") {
    auto gf7 = Field::of_order(7);
    auto small = rs_code(gf7, 5, 1);
    auto big = rs_code(gf7, 5, 3);
    CHECK(is_subcode(small, big, true));
    CHECK_FALSE(is_subcode(big, small));
    CHECK_THROWS_AS(is_subcode(small, rs_code(gf7, 6, 3)), InputError);
}

TEST_CASE("minimum weight examples") {
    auto gf7 = Field::of_order(7);
    auto rep = code_from(gf7, {{3, 3, 3, 3, 3}});
    auto r = min_weight(rep);
    CHECK(r.weight == 5);
    CHECK(rep.contains(r.witness));

    auto mds = rs_code(gf7, 5, 3);
    auto m = min_weight(mds);
    CHECK(m.weight == 3);
    CHECK(m.evaluated == 343);
    CHECK(hamming_weight(m.witness) == 3);
    CHECK(mds.contains(m.witness));

    auto zero = dual_code(LinearCode::from_generator(Matrix::identity(gf7, 3)));
    CHECK_THROWS_AS(min_weight(zero), PreconditionError);
    CHECK_THROWS_AS(min_weight(mds, {.budget = 100}), BudgetExceeded);
}

TEST_CASE("low-weight search") {
    auto gf7 = Field::of_order(7);
    auto mds = rs_code(gf7, 5, 3);
    auto rep = low_weight_search(mds, 2);
    CHECK(rep.hits.empty());
    CHECK(rep.supports_examined == 5 + 10);
    CHECK(low_weight_search(mds, 0).hits.empty());

    auto full = low_weight_search(mds, 5, {}, true);
    REQUIRE(full.hits.size() == 3);
    // an MDS [5,3] code has codewords of weight 3 on every 3-subset
    CHECK(full.hits[0].weight == 3);
    CHECK(full.hits[0].supports == 10);
    CHECK(full.hits[1].supports == 5);
    CHECK(full.hits[2].supports == 1);
    for (const auto& h : full.hits) {
        CHECK(mds.contains(h.witness));
        CHECK(hamming_weight(h.witness) == h.weight);
    }
    CHECK_THROWS_AS(low_weight_search(mds, 3, {.budget = 20}), BudgetExceeded);
}

TEST_CASE("oracles agree with plain enumeration on random codes") {
    std::mt19937_64 rng(17);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 2 + rng() % 7;
            const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 4);
            auto c = random_code(f, n, k, rng);
            const auto spec = testing::spectrum(f, c.generator().row_words(), n);
            CAPTURE(q);
            CAPTURE(n);
            CAPTURE(k);

            auto e = min_weight(c);
            CHECK(e.weight == spec.min_weight);
            auto auto_d = certify_distance(c);
            CHECK(auto_d.weight == spec.min_weight);
            CHECK(c.contains(auto_d.witness));

            auto threaded = min_weight(c, {.threads = 4});
            CHECK(threaded.weight == e.weight);
            CHECK(threaded.witness == e.witness);

            auto low = low_weight_search(c, static_cast<unsigned>(n), {}, true);
            for (unsigned w = 1; w <= n; ++w) {
                bool reported = false;
                for (const auto& h : low.hits) reported = reported || h.weight == w;
                CHECK(reported == (spec.count[w] > 0));
            }
            REQUIRE_FALSE(low.hits.empty());
            CHECK(low.hits.front().weight == spec.min_weight);
        }
    }
}

TEST_CASE("relative minimum weight") {
    auto gf2 = Field::of_order(2);
    auto plane = LinearCode::from_generator(Matrix::identity(gf2, 2));
    auto diag = code_from(gf2, {{1, 1}});
    auto r = relative_min_weight(plane, diag);
    CHECK(r.weight == 1);
    CHECK_FALSE(diag.contains(r.witness));
    CHECK_THROWS_AS(relative_min_weight(plane, plane), PreconditionError);
    CHECK_THROWS_AS(relative_min_weight(diag, plane), PreconditionError);

    std::mt19937_64 rng(23);
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 3 + rng() % 5;
            const std::size_t k = 2 + rng() % std::min<std::size_t>(n - 1, 3);
            auto c = random_code(f, n, k, rng);
            // subcode spanned by a random subset of codewords
            std::vector<Word> sub;
            const std::size_t kd = rng() % k;
            for (std::size_t i = 0; i < kd; ++i) {
                Word msg(k);
                for (auto& x : msg) x = static_cast<Elem>(rng() % q);
                sub.push_back(c.encode(msg));
            }
            auto d = sub.empty() ? dual_code(LinearCode::from_generator(Matrix::identity(f, n)))
                                 : code_from(f, sub);
            if (d.dimension() == c.dimension()) continue;

            unsigned expect = std::numeric_limits<unsigned>::max();
            testing::for_each_combination(f, c.generator().row_words(), n, [&](const Word& w) {
                const auto wt = static_cast<unsigned>(hamming_weight(w));
                if (wt == 0 || d.contains(w)) return;
                expect = std::min(expect, wt);
            });
            auto en = relative_min_weight(c, d, {}, OracleMethod::enumeration);
            auto ss = relative_min_weight(c, d, {}, OracleMethod::support_search);
            auto au = relative_min_weight(c, d);
            CHECK(en.weight == expect);
            CHECK(ss.weight == expect);
            CHECK(au.weight == expect);
            CHECK(en.weight >= min_weight(c).weight);
        }
    }
}

TEST_CASE("certified distance records") {
    auto gf7 = Field::of_order(7);
    auto mds = with_certified_distance(rs_code(gf7, 5, 3));
    REQUIRE(mds.certified_distance());
    CHECK(*mds.certified_distance() == 3);
    CHECK_THROWS_AS(mds.with_distance({2, Provenance::certified, mds.cached_distance()->witness}),
                    VerificationFailure);
    auto claimed = mds.with_distance({3, Provenance::claimed, {}});
    CHECK_FALSE(claimed.certified_distance());
}

TEST_CASE("saturating helpers") {
    CHECK(saturating_pow(2, 10) == 1024);
    CHECK(saturating_pow(29, 24) == std::numeric_limits<std::uint64_t>::max());
    CHECK(saturating_binomial(28, 2) == 378);
    CHECK(saturating_binomial(5, 7) == 0);
    CHECK(saturating_binomial(200, 100) == std::numeric_limits<std::uint64_t>::max());
}
