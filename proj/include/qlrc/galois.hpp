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
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qlrc {

/// A field element. Elements of GF(p^m) are encoded as integers in [0, q-1]
/// whose base-p digits (least significant first) are the coefficients of the
/// element in the polynomial basis 1, x, ..., x^(m-1).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Trial-division irreducibility test for a monic polynomial over GF(p).
/// `coeffs` is little-endian and includes the leading 1.
bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// GF(p), comparing coefficients from x^(m-1) down to x^0.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned m);

/// GF(p^m) with a fixed modulus. Immutable after construction.
///
/// Fields of order at most 2^16 use exp/log tables built from the
/// smallest-encoded primitive element; larger fields multiply polynomials
/// directly.
class Field {
public:
    static constexpr std::uint64_t kTableLimit = 1u << 16;
    static constexpr std::uint64_t kMaxOrder = 1ull << 31;

    /// Builds GF(p^m). Without a modulus, `smallest_irreducible(p, m)` is used;
    /// for m = 1 that is the polynomial x.
    static FieldPtr make(std::uint32_t p, unsigned m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// GF(q) for a prime power q with the default modulus.
    static FieldPtr of_order(std::uint64_t q);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !log_.empty(); }

    bool valid(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return (a + b) % p_;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2 || a == 0) return a;
        if (m_ == 1) return p_ - a;
        return neg_digits(a);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
        if (has_tables()) {
            std::uint32_t s = log_[a] + log_[b];
            return exp_[s];
        }
        return mul_poly(a, b);
    }
    /// Throws PreconditionError for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const noexcept;

    /// Smallest-encoded primitive element.
    Elem generator() const noexcept { return generator_; }
    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Elem a) const;

    bool same_as(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }
    std::string name() const;

    Field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

private:
    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem neg_digits(Elem a) const noexcept;
    Elem mul_poly(Elem a, Elem b) const noexcept;
    Elem find_generator() const;

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> order_factors_;  // prime factors of q - 1
    std::vector<Elem> exp_;                     // length 2(q-1)
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_table_;
    Elem generator_ = 1;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

/// Univariate polynomial over a Field, little-endian with no trailing zeros.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
    /// x^n - 1
    static Poly x_pow_minus_one(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    Elem eval(Elem x) const noexcept;
    Poly monic() const;
    Poly scaled(Elem c) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    void trim() noexcept;

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor). Throws
/// PreconditionError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

/// Monic greatest common divisor (zero when both inputs are zero).
Poly gcd(const Poly& f, const Poly& g);

/// ord_n(q): least t >= 1 with q^t = 1 mod n. Requires gcd(n, q) = 1.
unsigned multiplicative_order_mod(std::uint64_t q, std::uint64_t n);

/// Embedding of a base field into an extension of relative degree t.
struct FieldEmbedding {
    FieldPtr base;
    FieldPtr ext;
    unsigned relative_degree = 1;
    std::vector<Elem> image;  // image[a] is the embedded base element a

    Elem embed(Elem a) const { return image.at(a); }
    /// Preimage of an extension element, if it lies in the base field.
    std::optional<Elem> restrict(Elem b) const;

    std::unordered_map<Elem, Elem> preimage;
};

/// GF(q^t) over GF(q) = base. For t = 1 the extension is the base itself.
/// Otherwise the extension is GF(p^(mt)) with its default modulus and the base
/// is embedded through the smallest-encoded root of the base modulus.
FieldEmbedding extend_field(const FieldPtr& base, unsigned t);

struct RootOfUnity {
    std::uint32_t n = 1;
    FieldEmbedding embedding;
    Elem alpha = 1;  // element of the extension of multiplicative order n
    unsigned t() const noexcept { return embedding.relative_degree; }
};

/// Primitive n-th root of unity in GF(q^t), t = ord_n(q): the smallest-encoded
/// element of multiplicative order exactly n. Throws PreconditionError when
/// gcd(n, q) != 1.
RootOfUnity nth_root_of_unity(std::uint32_t n, const FieldPtr& base);

/// Minimal polynomial over the base field of an extension element, computed as
/// the product of (x - beta^(q^j)) over the conjugacy class of beta.
Poly minimal_polynomial(Elem beta, const FieldEmbedding& emb);

}  // namespace qlrc
