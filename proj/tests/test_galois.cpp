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
#include "qlrc/galois.hpp"
#include "qlrc/matcode.hpp"
#include "test_util.hpp"

using namespace qlrc;

namespace {

// Schoolbook multiplication of two base-p digit strings modulo the field's
// modulus, written independently of the library's table code.
Elem slow_mul(const Field& f, Elem a, Elem b) {
    const std::uint32_t p = f.characteristic();
    const unsigned m = f.degree();
    std::vector<std::uint64_t> da(m), db(m), prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& mod = f.modulus();
    for (unsigned d = 2 * m - 1; d >= m; --d) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * mod[i]) % p;
    }
    Elem out = 0;
    for (unsigned i = m; i-- > 0;) out = out * p + static_cast<Elem>(prod[i]);
    return out;
}

}  // namespace

TEST_CASE("field construction") {
    auto gf2 = Field::make(2, 1);
    CHECK(gf2->order() == 2);
    CHECK(gf2->modulus() == std::vector<std::uint32_t>{0, 1});

    auto gf4 = Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    CHECK(gf4->order() == 4);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(Field::make(4, 1), PreconditionError);
    CHECK_THROWS_AS(Field::of_order(12), PreconditionError);

    // default moduli: smallest monic irreducible in the x^(m-1)..x^0 order
    CHECK(smallest_irreducible(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(smallest_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(smallest_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(smallest_irreducible(2, 4) == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("irreducibility agrees with root counting for quadratics and cubics") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (unsigned deg : {2u, 3u}) {
            std::vector<std::uint32_t> c(deg + 1, 0);
            c[deg] = 1;
            const std::uint64_t count = std::uint64_t{p} * p * (deg == 3 ? p : 1);
            for (std::uint64_t code = 0; code < count; ++code) {
                std::uint64_t t = code;
                for (unsigned i = 0; i < deg; ++i) {
                    c[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                bool has_root = false;
                for (std::uint64_t x = 0; x < p; ++x) {
                    std::uint64_t v = 0;
                    for (unsigned i = deg + 1; i-- > 0;) v = (v * x + c[i]) % p;
                    has_root = has_root || v == 0;
                }
                CHECK(is_irreducible_mod_p(p, c) == !has_root);
            }
        }
    }
}

TEST_CASE("field arithmetic examples") {
    auto gf4 = Field::of_order(4);
    CHECK(gf4->mul(2, 2) == 3);
    CHECK(gf4->add(2, 3) == 1);
    auto gf13 = Field::of_order(13);
    CHECK(gf13->inv(5) == 8);
    CHECK(gf13->neg(5) == 8);
    CHECK(gf13->pow(5, 4) == 1);
    CHECK_THROWS_AS(gf13->inv(0), PreconditionError);
    CHECK(gf13->from_int(-1) == 12);
}

TEST_CASE("field axioms hold for every element of small fields") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 125u,
                            128u, 169u, 243u, 256u}) {
        auto f = Field::of_order(q);
        CAPTURE(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->pow(a, q - 1) == 1);
            }
        }
        CHECK(f->multiplicative_order(f->generator()) == q - 1);
    }
}

TEST_CASE("table multiplication matches schoolbook multiplication") {
    for (std::uint64_t q : {4u, 8u, 9u, 16u, 27u, 49u, 64u, 121u, 256u}) {
        auto f = Field::of_order(q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) REQUIRE(f->mul(a, b) == slow_mul(*f, a, b));
    }
    // beyond the table range
    auto big = Field::make(2, 17);
    CHECK_FALSE(big->has_tables());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        Elem a = static_cast<Elem>(rng() % big->order());
        Elem b = static_cast<Elem>(rng() % big->order());
        CHECK(big->mul(a, b) == slow_mul(*big, a, b));
        if (a != 0) CHECK(big->mul(a, big->inv(a)) == 1);
    }
}

TEST_CASE("polynomial arithmetic") {
    auto gf2 = Field::of_order(2);
    Poly a(gf2, {1, 1, 1});
    Poly b(gf2, {1, 1});
    CHECK(a * b == Poly(gf2, {1, 0, 0, 1}));
    CHECK(a * Poly::constant(gf2, 1) == a);

    auto gf13 = Field::of_order(13);
    auto [quo, rem] = divmod(Poly::x_pow_minus_one(gf13, 4), Poly(gf13, {8, 1}));
    CHECK(quo == Poly(gf13, {8, 12, 5, 1}));
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(divmod(a, Poly(gf2)), PreconditionError);

    CHECK(Poly(gf13, {0, 0}).degree() == -1);
    CHECK(gcd(Poly(gf13, {12, 0, 1}), Poly(gf13, {1, 1})) == Poly(gf13, {1, 1}));
}

TEST_CASE("divmod round trip on random polynomials") {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {2u, 5u, 9u, 16u, 13u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 200; ++trial) {
            Poly a = testing::random_poly(f, rng() % 12, rng);
            Poly b = testing::random_poly(f, rng() % 6, rng);
            if (b.is_zero()) continue;
            auto [qq, rr] = divmod(a, b);
            CHECK(qq * b + rr == a);
            CHECK(rr.degree() < b.degree());
        }
    }
}

TEST_CASE("roots of unity") {
    auto gf13 = Field::of_order(13);
    auto r4 = nth_root_of_unity(4, gf13);
    CHECK(r4.t() == 1);
    CHECK(r4.alpha == 5);

    auto r1 = nth_root_of_unity(1, gf13);
    CHECK(r1.alpha == 1);

    auto gf2 = Field::of_order(2);
    auto r15 = nth_root_of_unity(15, gf2);
    CHECK(r15.t() == 4);
    CHECK(r15.embedding.ext->order() == 16);
    CHECK(r15.embedding.ext->multiplicative_order(r15.alpha) == 15);

    CHECK_THROWS_AS(nth_root_of_unity(6, Field::of_order(9)), PreconditionError);

    // the smallest-encoded element of exact order n, found by scanning
    for (std::uint64_t q : {3u, 4u, 7u, 8u, 13u}) {
        auto f = Field::of_order(q);
        for (std::uint32_t n : {3u, 5u, 7u, 12u, 13u}) {
            if (std::gcd<std::uint64_t>(n, q) != 1 || multiplicative_order_mod(q, n) > 4) continue;
            auto ru = nth_root_of_unity(n, f);
            const Field& e = *ru.embedding.ext;
            Elem first = 0;
            for (Elem x = 1; x < e.order() && first == 0; ++x)
                if (e.multiplicative_order(x) == n) first = x;
            CHECK(ru.alpha == first);
        }
    }

    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 13u}) {
        auto f = Field::of_order(q);
        for (std::uint32_t n = 1; n <= 30; ++n) {
            if (std::gcd<std::uint64_t>(n, q) != 1) continue;
            if (saturating_pow(q, multiplicative_order_mod(q, n)) > (1u << 20)) continue;
            auto ru = nth_root_of_unity(n, f);
            const Field& e = *ru.embedding.ext;
            CHECK(e.pow(ru.alpha, n) == 1);
            for (std::uint64_t d = 1; d < n; ++d)
                if (n % d == 0) CHECK(e.pow(ru.alpha, d) != 1);
            CHECK(ru.t() == multiplicative_order_mod(q, n));
        }
    }
}

TEST_CASE("field embeddings are ring homomorphisms") {
    for (auto [q, t] : {std::pair{4u, 2u}, {4u, 3u}, {9u, 2u}, {8u, 2u}, {7u, 2u}, {2u, 5u}}) {
        auto base = Field::of_order(q);
        auto emb = extend_field(base, t);
        const Field& e = *emb.ext;
        CAPTURE(q);
        CAPTURE(t);
        CHECK(e.order() == testing::ipow(q, t));
        for (Elem a = 0; a < q; ++a) {
            CHECK(emb.restrict(emb.embed(a)) == a);
            for (Elem b = 0; b < q; ++b) {
                CHECK(emb.embed(base->add(a, b)) == e.add(emb.embed(a), emb.embed(b)));
                CHECK(emb.embed(base->mul(a, b)) == e.mul(emb.embed(a), emb.embed(b)));
            }
        }
        std::size_t fixed = 0;
        for (Elem x = 0; x < e.order(); ++x) fixed += e.pow(x, q) == x;
        CHECK(fixed == q);
    }
}

TEST_CASE("minimal polynomials") {
    auto gf2 = Field::of_order(2);
    auto r15 = nth_root_of_unity(15, gf2);
    Poly mp = minimal_polynomial(r15.alpha, r15.embedding);
    CHECK(mp.degree() == 4);
    CHECK((mp == Poly(gf2, {1, 1, 0, 0, 1}) || mp == Poly(gf2, {1, 0, 0, 1, 1})));

    auto gf13 = Field::of_order(13);
    auto id = extend_field(gf13, 1);
    CHECK(minimal_polynomial(5, id) == Poly(gf13, {8, 1}));
    CHECK(minimal_polynomial(0, id) == Poly(gf13, {0, 1}));

    for (std::uint64_t q : {2u, 3u, 4u}) {
        auto base = Field::of_order(q);
        for (unsigned t : {2u, 3u}) {
            auto emb = extend_field(base, t);
            const Field& e = *emb.ext;
            for (Elem beta = 0; beta < e.order(); ++beta) {
                Poly m = minimal_polynomial(beta, emb);
                CHECK(m.is_monic());
                CHECK(t % static_cast<unsigned>(m.degree()) == 0);
                Elem acc = 0;
                for (std::size_t i = m.coeffs().size(); i-- > 0;)
                    acc = e.add(e.mul(acc, beta), emb.embed(m.coeffs()[i]));
                CHECK(acc == 0);
            }
        }
    }
}
