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

#include "qlrc/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qlrc/errors.hpp"

namespace qlrc {

namespace {

void check_coprime(std::uint32_t n, std::uint64_t q) {
    if (n == 0) throw InputError("cyclic code length must be positive");
    if (std::gcd<std::uint64_t>(n, q) != 1)
        throw PreconditionError("gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
}

}  // namespace

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t i, std::uint32_t n, std::uint64_t q) {
    check_coprime(n, q);
    std::vector<std::uint32_t> out;
    const std::uint64_t start = i % n;
    std::uint64_t x = start;
    do {
        out.push_back(static_cast<std::uint32_t>(x));
        x = x * (q % n) % n;
    } while (x != start);
    std::sort(out.begin(), out.end());
    return out;
}

bool DefiningSet::contains(std::uint32_t i) const {
    return std::binary_search(members.begin(), members.end(), i % n);
}

DefiningSet make_defining_set(std::uint32_t n, std::uint64_t q, const std::vector<std::uint32_t>& seeds) {
    check_coprime(n, q);
    DefiningSet d;
    d.n = n;
    d.q = q;
    std::set<std::uint32_t> seed_set, all;
    for (auto s : seeds) seed_set.insert(s % n);
    for (auto s : seed_set) {
        if (all.count(s)) continue;
        auto coset = cyclotomic_coset(s, n, q);
        all.insert(coset.begin(), coset.end());
    }
    d.members.assign(all.begin(), all.end());
    std::set<std::uint32_t> seen;
    for (auto m : d.members) {
        if (seen.count(m)) continue;
        auto coset = cyclotomic_coset(m, n, q);
        seen.insert(coset.begin(), coset.end());
        d.cosets.push_back(std::move(coset));
    }
    d.enlarged = all.size() > seed_set.size();
    return d;
}

DefiningSet negated(const DefiningSet& d) {
    std::vector<std::uint32_t> neg;
    for (auto i : d.members) neg.push_back((d.n - i) % d.n);
    return make_defining_set(d.n, d.q, neg);
}

Word cyclic_shift(std::span<const Elem> w, std::size_t s) {
    const std::size_t n = w.size();
    Word out(n);
    for (std::size_t j = 0; j < n; ++j) out[(j + s) % n] = w[j];
    return out;
}

CyclicCode build_cyclic_code(const FieldPtr& field, const DefiningSet& d) {
    if (field->order() != d.q)
        throw InputError("defining set is for q = " + std::to_string(d.q) + " but the field is " + field->name());
    const std::uint32_t n = d.n;
    CyclicCode out{d, nth_root_of_unity(n, field), Poly(field), LinearCode::from_generator(Matrix(field, 0, n))};
    const FieldEmbedding& emb = out.root.embedding;
    const Field& E = *emb.ext;

    Poly g_ext = Poly::constant(emb.ext, 1);
    for (auto i : d.members) g_ext = g_ext * Poly(emb.ext, {E.neg(E.pow(out.root.alpha, i)), 1});
    std::vector<Elem> coeffs;
    for (Elem x : g_ext.coeffs()) {
        auto b = emb.restrict(x);
        if (!b) throw VerificationFailure("generator polynomial has a coefficient outside " + field->name() +
                                          "; the defining set is not a union of cyclotomic cosets");
        coeffs.push_back(*b);
    }
    out.generator_poly = Poly(field, std::move(coeffs));
    if (!divmod(Poly::x_pow_minus_one(field, n), out.generator_poly).second.is_zero())
        throw VerificationFailure("generator polynomial does not divide x^n - 1");

    const std::size_t k = n - d.size();
    Matrix g(field, k, n);
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t j = 0; j < out.generator_poly.coeffs().size(); ++j)
            g.set(row, row + j, out.generator_poly.coeffs()[j]);
    out.code = LinearCode::from_generator(g);
    if (out.code.dimension() != k) throw VerificationFailure("cyclic code dimension differs from n - |D|");
    if (!satisfies_root_checks(out)) throw VerificationFailure("root check matrix does not annihilate the code");
    return out;
}

Matrix root_check_matrix(const CyclicCode& c) {
    const auto& d = c.defining_set;
    const Field& E = *c.root.embedding.ext;
    Matrix h(c.root.embedding.ext, d.size(), d.n);
    for (std::size_t row = 0; row < d.size(); ++row)
        for (std::uint32_t j = 0; j < d.n; ++j)
            h.set(row, j, E.pow(c.root.alpha, (std::uint64_t{d.members[row]} * j) % d.n));
    return h;
}

bool satisfies_root_checks(const CyclicCode& c) {
    const Matrix h = root_check_matrix(c);
    const Field& E = *c.root.embedding.ext;
    const Matrix& g = c.code.generator();
    for (std::size_t gr = 0; gr < g.rows(); ++gr) {
        for (std::size_t hr = 0; hr < h.rows(); ++hr) {
            Elem s = 0;
            for (std::size_t j = 0; j < g.cols(); ++j) s = E.add(s, E.mul(h.at(hr, j), c.root.embedding.embed(g.at(gr, j))));
            if (s != 0) return false;
        }
    }
    return true;
}

BchRun bch_bound(const DefiningSet& d) {
    BchRun best;
    if (d.members.empty()) return best;
    const std::uint32_t n = d.n;
    for (std::uint32_t m = 1; m < std::max<std::uint32_t>(n, 2); ++m) {
        if (std::gcd(m, n) != 1) continue;
        for (auto s : d.members) {
            unsigned len = 0;
            std::uint64_t x = s;
            while (len < n && d.contains(static_cast<std::uint32_t>(x))) {
                ++len;
                x = (x + m) % n;
            }
            if (len + 1 > best.lambda) best = {len + 1, m, s};
        }
    }
    return best;
}

std::vector<std::uint32_t> locality_index_set(unsigned u, unsigned r) {
    std::vector<std::uint32_t> out;
    for (unsigned i = 0; i < u; ++i) out.push_back(i * (r + 1) + 1);
    return out;
}

bool has_cyclic_locality(const DefiningSet& d, unsigned u, unsigned r) {
    if (std::uint64_t{u} * (r + 1) != d.n)
        throw InputError("length " + std::to_string(d.n) + " is not u(r+1) = " + std::to_string(u * (r + 1)));
    for (auto i : locality_index_set(u, r))
        if (!d.contains(i)) return false;
    return true;
}

LocalityCertificate cyclic_locality_certificate(const CyclicCode& c, unsigned u, unsigned r) {
    if (!has_cyclic_locality(c.defining_set, u, r))
        throw PreconditionError("defining set does not contain {i(r+1)+1 : i in [0, u-1]}");
    const std::size_t n = c.defining_set.n;
    const Field& f = *c.code.field();
    std::vector<std::size_t> positions;
    for (unsigned j = 0; j <= r; ++j) positions.push_back(std::size_t{j} * u);

    // base[j]: a dual codeword supported on `positions`, nonzero at j*u
    std::vector<Word> base(r + 1);
    if (c.root.t() == 1) {
        Word w(n, 0);
        for (auto p : positions) w[p] = f.pow(c.root.alpha, p);
        if (!c.code.dual_contains(w)) throw VerificationFailure("summed check row is not a dual codeword");
        std::fill(base.begin(), base.end(), w);
    } else {
        const auto ns = null_space_on_support(c.code.generator(), positions);
        for (unsigned j = 0; j <= r; ++j) {
            for (const auto& v : ns) {
                if (v[j] != 0) {
                    base[j] = scatter(v, positions, n);
                    break;
                }
            }
            if (base[j].empty()) throw VerificationFailure("no dual codeword on the locality positions");
        }
    }
    LocalityCertificate cert;
    cert.r = r;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t s = i % u;
        Word w = cyclic_shift(base[(i - s) / u], s);
        const Elem scale = f.inv(w[i]);
        for (auto& x : w) x = f.mul(x, scale);
        const std::size_t wt = hamming_weight(w);
        cert.witnesses.push_back({i, std::move(w), wt});
    }
    std::string why;
    if (!verify_locality(c.code, cert, &why)) throw VerificationFailure("cyclic locality certificate: " + why);
    cert.verified = true;
    return cert;
}

bool is_dual_containing(const DefiningSet& d) {
    for (auto i : d.members)
        if (d.contains((d.n - i) % d.n)) return false;
    return true;
}

}  // namespace qlrc
