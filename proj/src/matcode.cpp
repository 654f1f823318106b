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

#include "qlrc/matcode.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "detail.hpp"
#include "qlrc/errors.hpp"

namespace qlrc {

std::size_t hamming_weight(std::span<const Elem> w) noexcept {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }));
}

std::vector<std::size_t> support(std::span<const Elem> w) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) s.push_back(i);
    return s;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw InputError("matrix without a field");
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Word>& rows, std::size_t cols) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                             ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            if (!m.field_->valid(rows[r][c]))
                throw InputError("entry " + std::to_string(rows[r][c]) + " is not an element of " +
                                 m.field_->name());
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<Word> Matrix::row_words() const {
    std::vector<Word> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_word(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix s(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) s.set(r, j, at(r, cols[j]));
    return s;
}

Matrix Matrix::top_rows(std::size_t count) const {
    count = std::min(count, rows_);
    Matrix s(field_, count, cols_);
    std::copy_n(data_.begin(), count * cols_, s.data_.begin());
    return s;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field_, b.field_)) throw InputError("matrix product over different fields");
    if (a.cols_ != b.rows_)
        throw InputError("matrix product shape mismatch: " + std::to_string(a.cols_) + " vs " +
                         std::to_string(b.rows_));
    const Field& f = *a.field_;
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Elem x = a.at(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.set(i, j, f.add(out.at(i, j), f.mul(x, b.at(l, j))));
        }
    }
    return out;
}

RrefResult rref(Matrix m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pr = rank;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != rank) {
            auto a = m.row(pr);
            auto b = m.row(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Elem inv = f.inv(m.at(rank, c));
        for (auto& x : m.row(rank)) x = f.mul(x, inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            const Elem factor = m.at(r, c);
            if (factor == 0) continue;
            const Elem neg = f.neg(factor);
            for (std::size_t j = c; j < m.cols(); ++j) m.set(r, j, f.add(m.at(r, j), f.mul(neg, m.at(rank, j))));
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(m), rank, std::move(pivots)};
}

std::vector<Word> null_space(const Matrix& m) {
    const Field& f = *m.field();
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    std::vector<Word> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Word x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = f.neg(red.matrix.at(i, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

std::string to_string(Provenance p) { return p == Provenance::certified ? "certified" : "claimed"; }

OracleWork oracle_work() { return {detail::g_codewords.load(), detail::g_supports.load()}; }

std::string to_string(OracleMethod m) {
    return m == OracleMethod::enumeration ? "enumeration" : "support_search";
}

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(Matrix generator, Matrix parity_check, std::vector<std::size_t> pivots)
    : generator_(std::move(generator)), parity_check_(std::move(parity_check)), pivots_(std::move(pivots)) {}

LinearCode LinearCode::from_generator(const Matrix& g) {
    RrefResult red = rref(g);
    Matrix gen = red.matrix.top_rows(red.rank);
    const std::vector<Word> dual = null_space(gen);
    Matrix h = rref(Matrix::from_rows(g.field(), dual, g.cols())).matrix;
    return LinearCode(std::move(gen), std::move(h), std::move(red.pivots));
}

LinearCode LinearCode::from_parity_check(const Matrix& h) {
    return from_generator(Matrix::from_rows(h.field(), null_space(h), h.cols()));
}

std::optional<unsigned> LinearCode::certified_distance() const noexcept {
    if (cached_d_ && cached_d_->provenance == Provenance::certified) return cached_d_->value;
    return std::nullopt;
}

LinearCode LinearCode::with_distance(DistanceRecord d) const {
    if (d.provenance == Provenance::certified) {
        if (d.witness.size() != length() || !contains(d.witness) || hamming_weight(d.witness) != d.value)
            throw VerificationFailure("distance witness is not a codeword of weight " + std::to_string(d.value));
    }
    LinearCode out = *this;
    out.cached_d_ = std::move(d);
    return out;
}

Word LinearCode::encode(std::span<const Elem> message) const {
    if (message.size() != dimension())
        throw InputError("message length " + std::to_string(message.size()) + " != k = " +
                         std::to_string(dimension()));
    const Field& f = *field();
    Word w(length(), 0);
    for (std::size_t r = 0; r < dimension(); ++r) {
        if (message[r] == 0) continue;
        for (std::size_t c = 0; c < length(); ++c) w[c] = f.add(w[c], f.mul(message[r], generator_.at(r, c)));
    }
    return w;
}

namespace {

bool orthogonal_to_rows(const Matrix& m, std::span<const Elem> w) {
    const Field& f = *m.field();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Elem s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s = f.add(s, f.mul(m.at(r, c), w[c]));
        if (s != 0) return false;
    }
    return true;
}

void check_word(const LinearCode& c, std::span<const Elem> w) {
    if (w.size() != c.length())
        throw InputError("word length " + std::to_string(w.size()) + " != n = " + std::to_string(c.length()));
    for (Elem x : w)
        if (!c.field()->valid(x)) throw InputError("word entry " + std::to_string(x) + " out of range");
}

}  // namespace

bool LinearCode::contains(std::span<const Elem> w) const {
    check_word(*this, w);
    return orthogonal_to_rows(parity_check_, w);
}

bool LinearCode::dual_contains(std::span<const Elem> w) const {
    check_word(*this, w);
    return orthogonal_to_rows(generator_, w);
}

LinearCode dual_code(const LinearCode& c) { return LinearCode::from_generator(c.parity_check()); }

bool is_subcode(const LinearCode& a, const LinearCode& b, bool strict) {
    if (!same_field(a.field(), b.field())) throw InputError("subcode test across different fields");
    if (a.length() != b.length()) throw InputError("subcode test across different lengths");
    for (std::size_t r = 0; r < a.dimension(); ++r)
        if (!b.contains(a.generator().row(r))) return false;
    return !strict || a.dimension() < b.dimension();
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > kMax / base) return kMax;
        out *= base;
    }
    return out;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // out * (n-k+i) is divisible by i, so i / gcd(out, i) divides n-k+i
        const std::uint64_t g = std::gcd(out, i);
        if (__builtin_mul_overflow(out / g, (n - k + i) / (i / g), &out)) return kMax;
    }
    return out;
}

std::vector<Word> null_space_on_support(const Matrix& checks, std::span<const std::size_t> support) {
    return null_space(checks.select_columns(support));
}

Word scatter(std::span<const Elem> values, std::span<const std::size_t> support, std::size_t n) {
    Word w(n, 0);
    for (std::size_t i = 0; i < support.size(); ++i) w[support[i]] = values[i];
    return w;
}

// ---------------------------------------------------------------------------
// Weight oracles

namespace {

struct BestWord {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    Word witness;
};

std::uint64_t message_space(const LinearCode& c) {
    return saturating_pow(c.field()->order(), c.dimension());
}

WeightResult enumerate_min_weight(const LinearCode& c, const SearchLimits& limits) {
    const auto basis = detail::additive_basis(c.generator());
    struct Acc {
        BestWord best;
        void operator()(const Word& w, std::size_t weight) {
            if (weight != 0 && weight < best.weight) {
                best.weight = weight;
                best.witness = w;
            }
        }
    };
    auto parts = detail::parallel_enumerate<Acc>(*c.field(), basis, c.length(), limits.threads, [] { return Acc{}; });
    BestWord best;
    for (auto& p : parts)
        if (p.best.weight < best.weight) best = std::move(p.best);
    return {static_cast<unsigned>(best.weight), std::move(best.witness), message_space(c), OracleMethod::enumeration};
}

/// Exact-weight-w codeword with support search, for w at or below the
/// minimum distance (any nonzero null vector then has full support).
std::optional<Word> first_codeword_of_weight(const LinearCode& c, std::size_t w, std::uint64_t& examined) {
    std::optional<Word> hit;
    examined += detail::for_each_subset(c.length(), w, [&](std::span<const std::size_t> s) {
        const auto ns = null_space_on_support(c.parity_check(), s);
        if (ns.empty()) return true;
        hit = scatter(ns.front(), s, c.length());
        return false;
    });
    return hit;
}

}  // namespace

WeightResult min_weight(const LinearCode& c, const SearchLimits& limits) {
    if (c.dimension() == 0) throw PreconditionError("minimum weight of the zero code is undefined");
    const std::uint64_t words = message_space(c);
    if (words > limits.budget)
        throw BudgetExceeded("enumerating " + std::to_string(c.field()->order()) + "^" +
                             std::to_string(c.dimension()) + " codewords exceeds budget " +
                             std::to_string(limits.budget));
    return enumerate_min_weight(c, limits);
}

LowWeightReport low_weight_search(const LinearCode& c, unsigned w_max, const SearchLimits& limits, bool exhaustive) {
    const std::size_t n = c.length();
    w_max = static_cast<unsigned>(std::min<std::size_t>(w_max, n));
    std::uint64_t cost = 0;
    for (unsigned w = 1; w <= w_max; ++w) {
        cost += saturating_binomial(n, w);
        if (cost > limits.budget)
            throw BudgetExceeded("support search up to weight " + std::to_string(w_max) + " examines more than " +
                                 std::to_string(limits.budget) + " supports");
    }
    LowWeightReport report;
    if (c.dimension() == 0) return report;
    const Field& f = *c.field();
    for (unsigned w = 1; w <= w_max; ++w) {
        LowWeightHit hit;
        hit.weight = w;
        report.supports_examined += detail::for_each_subset(n, w, [&](std::span<const std::size_t> s) {
            const auto ns = null_space_on_support(c.parity_check(), s);
            if (ns.empty()) return true;
            const Word v = detail::full_support_combination(f, ns);
            if (v.empty()) return true;
            if (hit.supports == 0) hit.witness = scatter(v, s, n);
            ++hit.supports;
            return exhaustive;
        });
        if (hit.supports > 0) report.hits.push_back(std::move(hit));
    }
    return report;
}

WeightResult certify_distance(const LinearCode& c, const SearchLimits& limits) {
    if (c.dimension() == 0) throw PreconditionError("minimum weight of the zero code is undefined");
    const std::uint64_t words = message_space(c);
    const std::uint64_t cap = std::min(words, limits.budget);
    const std::size_t n = c.length();
    std::uint64_t planned = 0;
    std::uint64_t examined = 0;
    // Support search weight by weight while it stays cheaper than enumeration;
    // the Singleton bound guarantees a hit by weight n - k + 1.
    for (std::size_t w = 1; w <= n - c.dimension() + 1; ++w) {
        planned += saturating_binomial(n, w);
        if (planned > cap) break;
        if (auto hit = first_codeword_of_weight(c, w, examined))
            return {static_cast<unsigned>(w), std::move(*hit), examined, OracleMethod::support_search};
    }
    if (words > limits.budget)
        throw BudgetExceeded("distance of [" + std::to_string(n) + "," + std::to_string(c.dimension()) + "]_" +
                             std::to_string(c.field()->order()) + " code exceeds budget " +
                             std::to_string(limits.budget));
    return enumerate_min_weight(c, limits);
}

LinearCode with_certified_distance(const LinearCode& c, const SearchLimits& limits) {
    WeightResult r = certify_distance(c, limits);
    return c.with_distance({r.weight, Provenance::certified, std::move(r.witness)});
}

namespace {

WeightResult relative_by_enumeration(const LinearCode& c, const LinearCode& d, const SearchLimits& limits) {
    const auto basis = detail::additive_basis(c.generator());
    struct Acc {
        const LinearCode* sub;
        BestWord best;
        void operator()(const Word& w, std::size_t weight) {
            if (weight != 0 && weight < best.weight && !sub->contains(w)) {
                best.weight = weight;
                best.witness = w;
            }
        }
    };
    auto parts =
        detail::parallel_enumerate<Acc>(*c.field(), basis, c.length(), limits.threads, [&] { return Acc{&d, {}}; });
    BestWord best;
    for (auto& p : parts)
        if (p.best.weight < best.weight) best = std::move(p.best);
    return {static_cast<unsigned>(best.weight), std::move(best.witness), message_space(c), OracleMethod::enumeration};
}

// The first support S where the codewords of c inside S outnumber those of d
// has minimal size, so every codeword of c \ d inside it has support exactly S.
std::optional<Word> relative_at_weight(const LinearCode& c, const LinearCode& d, std::size_t w,
                                       std::uint64_t& examined) {
    std::optional<Word> hit;
    const std::size_t n = c.length();
    examined += detail::for_each_subset(n, w, [&](std::span<const std::size_t> s) {
        const auto nc = null_space_on_support(c.parity_check(), s);
        if (nc.empty()) return true;
        const auto nd = null_space_on_support(d.parity_check(), s);
        if (nc.size() == nd.size()) return true;
        for (const auto& v : nc) {
            Word x = scatter(v, s, n);
            if (!d.contains(x)) {
                hit = std::move(x);
                return false;
            }
        }
        throw VerificationFailure("support search found a dimension gap without a separating basis vector");
    });
    return hit;
}

}  // namespace

WeightResult relative_min_weight(const LinearCode& c, const LinearCode& d, const SearchLimits& limits,
                                 std::optional<OracleMethod> method) {
    if (!is_subcode(d, c, true)) throw PreconditionError("relative weight needs a strict subcode");
    const std::uint64_t words = message_space(c);
    const std::size_t n = c.length();
    WeightResult out;
    bool done = false;
    if (method != OracleMethod::enumeration) {
        const std::uint64_t cap = method ? limits.budget : std::min(words, limits.budget);
        std::uint64_t planned = 0;
        std::uint64_t examined = 0;
        for (std::size_t w = 1; w <= n && !done; ++w) {
            planned += saturating_binomial(n, w);
            if (planned > cap) break;
            if (auto hit = relative_at_weight(c, d, w, examined)) {
                out = {static_cast<unsigned>(w), std::move(*hit), examined, OracleMethod::support_search};
                done = true;
            }
        }
        if (!done && method == OracleMethod::support_search)
            throw BudgetExceeded("relative support search exceeds budget " + std::to_string(limits.budget));
    }
    if (!done) {
        if (words > limits.budget)
            throw BudgetExceeded("relative enumeration of " + std::to_string(c.field()->order()) + "^" +
                                 std::to_string(c.dimension()) + " codewords exceeds budget " +
                                 std::to_string(limits.budget));
        out = relative_by_enumeration(c, d, limits);
    }
    if (!c.contains(out.witness) || d.contains(out.witness) || hamming_weight(out.witness) != out.weight)
        throw VerificationFailure("relative weight witness failed re-verification");
    return out;
}

}  // namespace qlrc
