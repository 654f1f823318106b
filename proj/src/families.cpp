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

#include "qlrc/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail.hpp"
#include "qlrc/errors.hpp"

namespace qlrc {

namespace {

void check_points(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& v) {
    if (a.size() != v.size()) throw InputError("evaluation points and multipliers differ in length");
    std::set<Elem> seen;
    for (Elem x : a) {
        if (!f.valid(x)) throw InputError("evaluation point " + std::to_string(x) + " is not in " + f.name());
        if (!seen.insert(x).second) throw InputError("repeated evaluation point " + std::to_string(x));
    }
    for (Elem x : v)
        if (x == 0 || !f.valid(x)) throw InputError("column multipliers must be nonzero field elements");
}

// Every entry of a * b^T is zero.
bool orthogonal(const Matrix& a, const Matrix& b) {
    const Field& f = *a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            Elem s = 0;
            for (std::size_t c = 0; c < a.cols(); ++c) s = f.add(s, f.mul(a.at(i, c), b.at(j, c)));
            if (s != 0) return false;
        }
    }
    return true;
}

}  // namespace

Matrix grs_generator(const FieldPtr& field, const GrsSpec& spec) {
    const Field& f = *field;
    check_points(f, spec.a, spec.v);
    const std::size_t n = spec.a.size();
    if (spec.k > n) throw InputError("GRS dimension exceeds the number of points");
    Matrix g(field, spec.k, n);
    for (std::size_t i = 0; i < spec.k; ++i)
        for (std::size_t j = 0; j < n; ++j) g.set(i, j, f.mul(spec.v[j], f.pow(spec.a[j], i)));
    return g;
}

LinearCode grs_build(const FieldPtr& field, const GrsSpec& spec, const SearchLimits& limits) {
    auto code = LinearCode::from_generator(grs_generator(field, spec));
    if (code.dimension() != spec.k) throw VerificationFailure("GRS generator is not of full rank");
    if (spec.k == 0) return code;
    code = with_certified_distance(code, limits);
    const std::size_t expect = spec.a.size() - spec.k + 1;
    if (*code.certified_distance() != expect)
        throw VerificationFailure("GRS code has distance " + std::to_string(*code.certified_distance()) +
                                  ", expected n - k + 1 = " + std::to_string(expect));
    return code;
}

std::vector<Elem> grs_dual_multipliers(const FieldPtr& field, const std::vector<Elem>& a, const std::vector<Elem>& v) {
    const Field& f = *field;
    check_points(f, a, v);
    const std::size_t n = a.size();
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem p = v[i];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) p = f.mul(p, f.sub(a[i], a[j]));
        out[i] = f.inv(p);
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (!orthogonal(grs_generator(field, {k, a, v}), grs_generator(field, {n - k, a, out})))
            throw VerificationFailure("dual multipliers fail orthogonality at k = " + std::to_string(k));
    }
    return out;
}

std::vector<Block> default_blocks(const FieldPtr& field, unsigned d, unsigned u, unsigned r) {
    const std::uint64_t q = field->order();
    if (std::uint64_t{r} + 1 > q) throw PreconditionError("block length r + 1 exceeds q");
    std::vector<Block> out(u);
    for (unsigned i = 0; i < u; ++i) {
        const std::uint64_t base = d <= 4 ? 0 : std::uint64_t{i} * (r + 1);
        if (base + r + 1 > q)
            throw PreconditionError("disjoint evaluation points need u(r+1) <= q; construction refused");
        for (unsigned t = 0; t <= r; ++t) out[i].a.push_back(static_cast<Elem>(base + t));
        out[i].v.assign(r + 1, 1);
    }
    return out;
}

void validate_blocks(const FieldPtr& field, unsigned d, unsigned u, unsigned r, const std::vector<Block>& blocks) {
    if (blocks.size() != u) throw InputError("expected " + std::to_string(u) + " blocks");
    for (const auto& b : blocks) {
        if (b.a.size() != std::size_t{r} + 1) throw InputError("every block needs r + 1 points");
        check_points(*field, b.a, b.v);
    }
    if (d <= 4) {
        for (const auto& b : blocks)
            if (b.a != blocks[0].a || b.v != blocks[0].v)
                throw PreconditionError("for d <= 4 all blocks must share the points and the multipliers");
        return;
    }
    const unsigned max_size = (d - 1) / 2;
    std::vector<std::set<Elem>> points;
    for (const auto& b : blocks) points.emplace_back(b.a.begin(), b.a.end());
    for (unsigned s = 1; s <= std::min(max_size, u); ++s) {
        detail::for_each_subset(u, s, [&](std::span<const std::size_t> set) {
            std::set<Elem> all;
            for (auto i : set) all.insert(points[i].begin(), points[i].end());
            if (all.size() < std::size_t{r} * s + 1)
                throw PreconditionError("blocks " + std::to_string(set[0]) + ".. cover only " +
                                        std::to_string(all.size()) + " points, need r|S| + 1 = " +
                                        std::to_string(std::size_t{r} * s + 1));
            return true;
        });
    }
}

Matrix block_parity_check(const FieldPtr& field, unsigned d, unsigned u, unsigned r, const std::vector<Block>& blocks) {
    const Field& f = *field;
    const std::size_t len = std::size_t{r} + 1;
    Matrix h(field, u + (d - 2), u * len);
    for (unsigned i = 0; i < u; ++i) {
        for (std::size_t t = 0; t < len; ++t) {
            h.set(i, i * len + t, blocks[i].v[t]);
            for (unsigned j = 1; j + 1 < d; ++j)
                h.set(u + j - 1, i * len + t, f.mul(blocks[i].v[t], f.pow(blocks[i].a[t], j)));
        }
    }
    return h;
}

namespace {

void check_lrc_parameters(const Field& f, unsigned d, unsigned u, unsigned r) {
    if (u < 1 || d < 2) throw InputError("need u >= 1 and d >= 2");
    if (r + 2 <= d) throw PreconditionError("guard r>d-2 violated");
    if (std::uint64_t{r} + 1 > f.order()) throw PreconditionError("guard r<=q-1 violated");
    if (std::size_t{u} * r + 2 <= d) throw PreconditionError("guard ur-d+2>0 violated");
}

LocalityCertificate block_row_witnesses(const LinearCode& code, const Matrix& h, unsigned u, unsigned r) {
    const Field& f = *code.field();
    LocalityCertificate cert;
    cert.r = r;
    const std::size_t len = std::size_t{r} + 1;
    for (std::size_t j = 0; j < u * len; ++j) {
        Word w = h.row_word(j / len);
        const Elem s = f.inv(w[j]);
        for (auto& x : w) x = f.mul(x, s);
        const std::size_t wt = hamming_weight(w);
        cert.witnesses.push_back({j, std::move(w), wt});
    }
    std::string why;
    if (!verify_locality(code, cert, &why)) throw VerificationFailure("block row witnesses: " + why);
    cert.verified = true;
    return cert;
}

}  // namespace

LrcBuild chen_lrc_build(const FieldPtr& field, unsigned d, unsigned u, unsigned r, const std::vector<Block>& blocks,
                        const SearchLimits& limits) {
    check_lrc_parameters(*field, d, u, r);
    validate_blocks(field, d, u, r, blocks);
    Matrix h = block_parity_check(field, d, u, r, blocks);
    auto code = LinearCode::from_parity_check(h);
    const std::size_t k = std::size_t{u} * r - d + 2;
    if (code.dimension() != k)
        throw VerificationFailure("block LRC has dimension " + std::to_string(code.dimension()) + ", expected ur - d + 2 = " +
                                  std::to_string(k));
    code = with_certified_distance(code, limits);
    if (*code.certified_distance() != d)
        throw VerificationFailure("block LRC has distance " + std::to_string(*code.certified_distance()) +
                                  ", expected " + std::to_string(d));
    auto cert = block_row_witnesses(code, h, u, r);
    return {std::move(code), std::move(h), std::move(cert)};
}

bool FamilyResult::claims_hold() const {
    const auto& opt = certification.optimality;
    return !certification.any_violated() && opt.distance_form_equality && opt.dimension_form_equality;
}

namespace {

void check_claims(const FamilyResult& res) {
    const auto& q = res.certification.code;
    const auto& c = res.claimed;
    auto mismatch = [&](const std::string& what, std::size_t claimed, std::size_t got) {
        throw VerificationFailure(res.family + ": claimed " + what + " = " + std::to_string(claimed) +
                                  " but certified " + std::to_string(got));
    };
    if (q.n != c.n) mismatch("n", c.n, q.n);
    if (q.kappa != c.kappa) mismatch("kappa", c.kappa, q.kappa);
    if (q.delta != c.delta) mismatch("delta", c.delta, q.delta);
    if (res.certification.locality.r != c.r) mismatch("r", c.r, res.certification.locality.r);
}

FamilyResult finish(std::string family, std::map<std::string, std::int64_t> inputs, FamilyParameters claimed,
                    const CssCode& code, const QuantumLocalityCertificate& loc, std::vector<std::string> checks) {
    FamilyResult res{std::move(family), std::move(inputs), claimed, certify_css(code, loc), std::move(checks), {}, {}};
    check_claims(res);
    return res;
}

}  // namespace

FamilyResult css_grs_pair_build(std::uint64_t q, unsigned d, unsigned u, unsigned r,
                                std::optional<std::vector<Block>> blocks, const SearchLimits& limits) {
    auto field = Field::of_order(q);
    if (u < 1 || d < 2) throw InputError("need u >= 1 and d >= 2");
    if (r <= 2 * (d - 2) + u) throw PreconditionError("guard r>2(d-2)+u violated");
    if (std::uint64_t{r} + 1 > q) throw PreconditionError("guard r<=q-1 violated");
    const auto b1 = blocks ? *blocks : default_blocks(field, d, u, r);
    auto b2 = b1;
    for (auto& b : b2) b.v = grs_dual_multipliers(field, b.a, b.v);

    auto l1 = chen_lrc_build(field, d, u, r, b1, limits);
    auto l2 = chen_lrc_build(field, d, u, r, b2, limits);
    std::vector<std::string> checks;
    if (!orthogonal(l1.parity_check, l2.parity_check))
        throw VerificationFailure("H H'^T is not the zero matrix");
    checks.push_back("H H'^T = 0");
    if (!is_subcode(dual_code(l2.code), l1.code, true))
        throw VerificationFailure("dual(C2) is not a strict subcode of C1");
    checks.push_back("dual(C2) strictly inside C1");

    auto code = css_compose(l1.code, l2.code, limits);
    auto loc = pair_witnesses(code, r, l1.locality, l2.locality);
    checks.push_back("witness pairs from the rows of H and H'");
    const std::size_t n = std::size_t{u} * (r + 1);
    FamilyParameters claimed{n, std::size_t{u} * r - 2 * (d - 2) - u, d, r};
    return finish("grs-pair",
                  {{"q", static_cast<std::int64_t>(q)}, {"d", d}, {"u", u}, {"r", r}}, claimed, code, loc,
                  std::move(checks));
}

namespace {

FamilyResult finish_cyclic(std::string family, std::map<std::string, std::int64_t> inputs, FamilyParameters claimed,
                           const FieldPtr& field, const DefiningSet& ds, unsigned u, unsigned r,
                           std::vector<std::string> checks, const SearchLimits& limits) {
    auto cyc = build_cyclic_code(field, ds);
    checks.push_back("generator polynomial divides x^n - 1 and matches the root checks");
    if (!is_dual_containing(ds)) throw VerificationFailure("defining set meets its negation");
    if (!is_subcode(dual_code(cyc.code), cyc.code, true))
        throw VerificationFailure("the cyclic code does not contain its dual");
    checks.push_back("D and -D are disjoint and dual(C) is inside C");
    auto cert = cyclic_locality_certificate(cyc, u, r);
    checks.push_back("locality from shifts of a structured dual codeword");
    auto code = css_compose(cyc.code, cyc.code, limits);
    auto loc = pair_witnesses(code, r, cert, cert);
    const BchRun bch = bch_bound(ds);
    if (bch.lambda > code.d1()) throw VerificationFailure("BCH bound exceeds the certified distance");
    checks.push_back("BCH bound " + std::to_string(bch.lambda) + " <= certified distance");
    auto res = finish(std::move(family), std::move(inputs), claimed, code, loc, std::move(checks));
    res.defining_set = ds;
    res.bch = bch;
    return res;
}

}  // namespace

FamilyResult cyclic_family_one(std::uint64_t q, unsigned u, unsigned r, unsigned l, const SearchLimits& limits) {
    auto field = Field::of_order(q);
    if (u < 1 || r < 1 || l < 1) throw InputError("need u, r, l >= 1");
    if (u + 2 * l >= r + 2) throw PreconditionError("guard u+2l<r+2 violated");
    const std::uint64_t n = std::uint64_t{u} * (r + 1);
    if ((q - 1) % n != 0) throw PreconditionError("guard u(r+1)|q-1 violated");
    auto seeds = locality_index_set(u, r);
    for (unsigned i = 1; i <= l; ++i) seeds.push_back(i);
    const auto ds = make_defining_set(static_cast<std::uint32_t>(n), q, seeds);
    std::vector<std::string> checks;
    if (ds.enlarged) throw VerificationFailure("defining set is not a union of cyclotomic cosets");
    checks.push_back("every residue is its own cyclotomic coset");
    FamilyParameters claimed{n, std::size_t{u} * (r - 1) - 2 * (l - 1), l + 1, r};
    auto res = finish_cyclic("cyclic-1", {{"q", static_cast<std::int64_t>(q)}, {"u", u}, {"r", r}, {"l", l}}, claimed,
                             field, ds, u, r, std::move(checks), limits);
    if (res.bch->lambda != l + 1)
        throw VerificationFailure("BCH bound " + std::to_string(res.bch->lambda) + " differs from l + 1");
    return res;
}

std::optional<unsigned> fixed_residue_offset(std::uint64_t q, unsigned u, unsigned r) {
    const std::uint64_t n = std::uint64_t{u} * (r + 1);
    for (unsigned y = 0; y < u; ++y) {
        const std::uint64_t b = std::uint64_t{y} * (r + 1) + 2;
        if ((q % n) * (b % n) % n == b % n) return y;
    }
    return std::nullopt;
}

FamilyResult cyclic_family_two(std::uint64_t q, unsigned u, unsigned r, const SearchLimits& limits) {
    auto field = Field::of_order(q);
    if (u < 1 || r < 1) throw InputError("need u, r >= 1");
    if (u + 2 >= r) throw PreconditionError("guard u+2<r violated");
    if (std::gcd<std::uint64_t>(u, q) != 1) throw PreconditionError("guard gcd(u,q)=1 violated");
    if ((q - 1) % (r + 1) != 0) throw PreconditionError("guard (r+1)|q-1 violated");
    if ((2 * (q - 1) / (r + 1)) % std::gcd<std::uint64_t>(u, q - 1) != 0)
        throw PreconditionError("guard gcd(u,q-1)|2(q-1)/(r+1) violated");
    const auto y = fixed_residue_offset(q, u, r);
    if (!y) throw VerificationFailure("no y in [0, u-1] with q(y(r+1)+2) = y(r+1)+2 mod u(r+1)");
    const auto n = static_cast<std::uint32_t>(std::uint64_t{u} * (r + 1));
    const std::uint32_t b = *y * (r + 1) + 2;
    std::vector<std::string> checks;
    if (cyclotomic_coset(b, n, q) != std::vector<std::uint32_t>{b % n})
        throw VerificationFailure("the extra residue is not fixed by multiplication by q");
    auto seeds = locality_index_set(u, r);
    const auto a_set = make_defining_set(n, q, seeds);
    if (a_set.enlarged) throw VerificationFailure("the locality residues are not closed under multiplication by q");
    checks.push_back("locality residues and the extra residue are unions of cyclotomic cosets");
    seeds.push_back(b);
    const auto ds = make_defining_set(n, q, seeds);
    FamilyParameters claimed{n, std::size_t{u} * (r - 1) - 2, 3, r};
    return finish_cyclic("cyclic-2", {{"q", static_cast<std::int64_t>(q)}, {"u", u}, {"r", r}, {"y", *y}}, claimed,
                         field, ds, u, r, std::move(checks), limits);
}

}  // namespace qlrc
