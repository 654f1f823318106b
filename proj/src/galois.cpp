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

#include "qlrc/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qlrc/errors.hpp"

namespace qlrc {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of f modulo monic g over GF(p); both little-endian.
Digits poly_mod_p(Digits f, const Digits& g, std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = f.size(); i-- > dg;) {
        const std::uint32_t c = f[i] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) {
            const std::uint64_t sub = std::uint64_t{c} * g[j] % p;
            f[i - dg + j] = static_cast<std::uint32_t>((f[i - dg + j] + p - sub) % p);
        }
    }
    f.resize(std::min(f.size(), dg));
    return f;
}

bool all_zero(const Digits& d) {
    return std::all_of(d.begin(), d.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    const std::size_t m = coeffs.size() - 1;
    if (m <= 1) return m == 1;
    for (std::size_t dg = 1; dg <= m / 2; ++dg) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(dg));
        for (std::uint64_t v = 0; v < count; ++v) {
            Digits g(dg + 1, 0);
            std::uint64_t t = v;
            for (std::size_t j = 0; j < dg; ++j) {
                g[j] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[dg] = 1;
            if (all_zero(poly_mod_p(coeffs, g, p))) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned m) {
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t v = 0; v < count; ++v) {
        Digits f(m + 1, 0);
        std::uint64_t t = v;
        for (unsigned j = 0; j < m; ++j) {
            f[j] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible_mod_p(p, f)) return f;
    }
    throw VerificationFailure("no irreducible polynomial found");  // unreachable
}

FieldPtr Field::make(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw PreconditionError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw PreconditionError("field order exceeds 2^31");
    }
    std::vector<std::uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1 || mod.back() != 1)
            throw PreconditionError("modulus must be monic of degree " + std::to_string(m));
        for (auto c : mod)
            if (c >= p) throw PreconditionError("modulus coefficient out of range");
        if (!is_irreducible_mod_p(p, mod)) throw PreconditionError("modulus is reducible");
    } else {
        mod = smallest_irreducible(p, m);
    }
    return std::make_shared<const Field>(p, m, std::move(mod));
}

FieldPtr Field::of_order(std::uint64_t q) {
    if (q < 2) throw PreconditionError("field order must be at least 2");
    const auto f = prime_factors(q);
    if (f.size() != 1) throw PreconditionError(std::to_string(q) + " is not a prime power");
    unsigned m = 0;
    for (std::uint64_t t = q; t > 1; t /= f[0]) ++m;
    return make(static_cast<std::uint32_t>(f[0]), m);
}

Field::Field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {
    order_factors_ = prime_factors(q_ - 1);
    if (p_ != 2 && m_ > 1 && q_ <= 1024) {
        add_table_.resize(std::size_t{q_} * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
    }
    generator_ = find_generator();
    if (q_ <= kTableLimit) {
        const std::uint32_t n = q_ - 1;
        exp_.assign(2 * std::size_t{n}, 0);
        log_.assign(q_, 0);
        Elem x = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_[i] = x;
            exp_[i + n] = x;
            log_[x] = i;
            x = m_ == 1 ? static_cast<Elem>(std::uint64_t{x} * generator_ % p_) : mul_poly(x, generator_);
        }
    }
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::neg_digits(Elem a) const noexcept {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::mul_poly(Elem a, Elem b) const noexcept {
    Digits da(m_), db(m_);
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    Digits prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
    prod = poly_mod_p(std::move(prod), modulus_, p_);
    Elem out = 0;
    for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + prod[i];
    return out;
}

Elem Field::find_generator() const {
    if (q_ == 2) return 1;
    for (Elem e = 1; e < q_; ++e) {
        bool primitive = true;
        for (auto f : order_factors_) {
            if (pow(e, (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return e;
    }
    throw VerificationFailure("multiplicative group has no generator");  // unreachable
}

Elem Field::inv(Elem a) const {
    if (a == 0 || a >= q_) throw PreconditionError("inverse of zero or invalid element");
    if (has_tables()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (has_tables()) return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
    Elem result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem Field::from_int(std::int64_t v) const noexcept {
    const std::int64_t p = p_;
    return static_cast<Elem>(((v % p) + p) % p);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    if (a == 0 || a >= q_) throw PreconditionError("order of zero or invalid element");
    const std::uint64_t n = q_ - 1;
    if (has_tables()) return n / std::gcd<std::uint64_t>(log_[a], n);
    std::uint64_t order = n;
    for (auto f : order_factors_)
        while (order % f == 0 && pow(a, order / f) == 1) order /= f;
    return order;
}

std::string Field::name() const {
    if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (!field_->valid(c)) throw InputError("polynomial coefficient is not a field element");
    trim();
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(FieldPtr field, std::size_t n) {
    std::vector<Elem> v(n + 1, 0);
    v[n] = 1;
    v[0] = field->add(v[0], field->neg(1));
    return Poly(std::move(field), std::move(v));
}

Elem Poly::eval(Elem x) const noexcept {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
    return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& f = *a.field_;
    std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    const auto& f = *a.field_;
    std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const auto& f = *a.field_;
    std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(a.field_, std::move(v));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Elem c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << (c != 1 ? "*x" : "x");
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw PreconditionError("polynomial division by zero");
    if (!same_field(f.field(), g.field())) throw InputError("polynomials over different fields");
    const auto& F = *f.field();
    std::vector<Elem> rem = f.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly(f.field()), f};
    std::vector<Elem> quo(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    const Elem lead_inv = F.inv(g.lead());
    for (int i = f.degree(); i >= dg; --i) {
        const Elem c = F.mul(rem[i], lead_inv);
        if (c == 0) continue;
        quo[i - dg] = c;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, g.coeffs()[j]));
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Poly(f.field(), std::move(quo)), Poly(f.field(), std::move(rem))};
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

unsigned multiplicative_order_mod(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw PreconditionError("modulus must be positive");
    if (std::gcd(q, n) != 1) throw PreconditionError("gcd(n, q) != 1");
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    for (unsigned t = 1;; ++t) {
        if (x == 1) return t;
        x = x * (q % n) % n;
    }
}

// ---------------------------------------------------------------------------
// Extensions

std::optional<Elem> FieldEmbedding::restrict(Elem b) const {
    auto it = preimage.find(b);
    if (it == preimage.end()) return std::nullopt;
    return it->second;
}

FieldEmbedding extend_field(const FieldPtr& base, unsigned t) {
    if (t < 1) throw PreconditionError("extension degree must be at least 1");
    FieldEmbedding emb;
    emb.base = base;
    emb.relative_degree = t;
    const std::uint32_t q = base->order();
    emb.image.resize(q);
    if (t == 1) {
        emb.ext = base;
        for (Elem a = 0; a < q; ++a) emb.image[a] = a;
    } else {
        const std::uint32_t p = base->characteristic();
        const unsigned m = base->degree();
        emb.ext = Field::make(p, m * t);
        const Field& E = *emb.ext;
        if (m == 1) {
            for (Elem a = 0; a < q; ++a) emb.image[a] = a;
        } else {
            // Constants 0..p-1 share their encoding between GF(p^m) and GF(p^(mt)).
            const Poly base_modulus(emb.ext, std::vector<Elem>(base->modulus().begin(), base->modulus().end()));
            Elem gamma = 0;
            bool found = false;
            for (Elem e = 0; e < E.order() && !found; ++e) {
                if (base_modulus.eval(e) == 0) {
                    gamma = e;
                    found = true;
                }
            }
            if (!found) throw VerificationFailure("base modulus has no root in the extension");
            for (Elem a = 0; a < q; ++a) {
                Elem acc = 0, power = 1, rest = a;
                for (unsigned s = 0; s < m; ++s) {
                    acc = E.add(acc, E.mul(rest % p, power));
                    rest /= p;
                    power = E.mul(power, gamma);
                }
                emb.image[a] = acc;
            }
        }
    }
    for (Elem a = 0; a < q; ++a) emb.preimage.emplace(emb.image[a], a);
    return emb;
}

RootOfUnity nth_root_of_unity(std::uint32_t n, const FieldPtr& base) {
    if (n == 0) throw PreconditionError("root-of-unity order must be positive");
    if (std::gcd<std::uint64_t>(n, base->order()) != 1)
        throw PreconditionError("gcd(n, q) != 1 for n = " + std::to_string(n));
    RootOfUnity root;
    root.n = n;
    root.embedding = extend_field(base, multiplicative_order_mod(base->order(), n));
    const Field& E = *root.embedding.ext;
    // The elements of order n are the powers g^j, j coprime to n, of one
    // primitive n-th root g; the smallest encoding among them is taken.
    const Elem g = E.pow(E.generator(), (E.order() - 1) / n);
    Elem x = 1;
    bool found = false;
    for (std::uint32_t j = 1; j <= n; ++j) {
        x = E.mul(x, g);
        if (std::gcd(j, n) == 1 && (!found || x < root.alpha)) {
            root.alpha = x;
            found = true;
        }
    }
    if (!found || E.multiplicative_order(root.alpha) != n)
        throw VerificationFailure("no element of order " + std::to_string(n));
    return root;
}

Poly minimal_polynomial(Elem beta, const FieldEmbedding& emb) {
    const Field& E = *emb.ext;
    if (!E.valid(beta)) throw InputError("element does not belong to the extension field");
    std::vector<Elem> conjugates;
    Elem c = beta;
    do {
        conjugates.push_back(c);
        c = E.pow(c, emb.base->order());
    } while (c != beta);
    Poly prod = Poly::constant(emb.ext, 1);
    for (Elem r : conjugates) prod = prod * Poly(emb.ext, {E.neg(r), 1});
    std::vector<Elem> coeffs;
    coeffs.reserve(prod.coeffs().size());
    for (Elem x : prod.coeffs()) {
        auto b = emb.restrict(x);
        if (!b) throw VerificationFailure("minimal polynomial coefficient outside the base field");
        coeffs.push_back(*b);
    }
    return Poly(emb.base, std::move(coeffs));
}

}  // namespace qlrc
