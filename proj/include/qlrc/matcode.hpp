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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlrc/galois.hpp"

namespace qlrc {

using Word = std::vector<Elem>;

std::size_t hamming_weight(std::span<const Elem> w) noexcept;
std::vector<std::size_t> support(std::span<const Elem> w);

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(FieldPtr field, const std::vector<Word>& rows, std::size_t cols);
    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Word row_word(std::size_t r) const { return Word(row(r).begin(), row(r).end()); }
    std::vector<Word> row_words() const;

    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    Matrix top_rows(std::size_t count) const;
    bool is_zero() const noexcept;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with leading ones. Pivots are taken in the
/// leftmost available column, choosing the smallest row index.
RrefResult rref(Matrix m);

/// Basis of { x : M x^T = 0 }, one vector per free column of rref(M).
std::vector<Word> null_space(const Matrix& m);

enum class Provenance { claimed, certified };
std::string to_string(Provenance p);

struct DistanceRecord {
    unsigned value = 0;
    Provenance provenance = Provenance::claimed;
    Word witness;  // a codeword of weight `value` when certified
};

/// A linear [n, k]_q code. The generator is kept in reduced row-echelon form,
/// so two codes compare equal exactly when they are the same subspace.
class LinearCode {
public:
    static LinearCode from_generator(const Matrix& g);
    static LinearCode from_parity_check(const Matrix& h);

    const FieldPtr& field() const noexcept { return generator_.field(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const Matrix& generator() const noexcept { return generator_; }
    /// (n-k) x n generator of the dual code, also in reduced row-echelon form.
    const Matrix& parity_check() const noexcept { return parity_check_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// k = 0 or k = n. Such codes are excluded from bound evaluation.
    bool is_degenerate() const noexcept { return dimension() == 0 || dimension() == length(); }

    const std::optional<DistanceRecord>& cached_distance() const noexcept { return cached_d_; }
    std::optional<unsigned> certified_distance() const noexcept;
    LinearCode with_distance(DistanceRecord d) const;

    Word encode(std::span<const Elem> message) const;
    /// Membership by syndrome against the parity-check matrix.
    bool contains(std::span<const Elem> w) const;
    /// True when w is orthogonal to every codeword, i.e. w lies in the dual.
    bool dual_contains(std::span<const Elem> w) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.generator_ == b.generator_;
    }

private:
    LinearCode(Matrix generator, Matrix parity_check, std::vector<std::size_t> pivots);

    Matrix generator_;
    Matrix parity_check_;
    std::vector<std::size_t> pivots_;
    std::optional<DistanceRecord> cached_d_;
};

LinearCode dual_code(const LinearCode& c);

/// Every generator row of a lies in b; `strict` also requires dim a < dim b.
bool is_subcode(const LinearCode& a, const LinearCode& b, bool strict = false);

struct SearchLimits {
    static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

/// q^k with saturation at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;
std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) noexcept;

struct OracleWork {
    std::uint64_t codewords = 0;  // enumerated
    std::uint64_t supports = 0;   // examined by support searches
};

/// Totals over every oracle run since start-up.
OracleWork oracle_work();

enum class OracleMethod { enumeration, support_search };
std::string to_string(OracleMethod m);

struct WeightResult {
    unsigned weight = 0;
    Word witness;
    std::uint64_t evaluated = 0;  // codewords enumerated or supports examined
    OracleMethod method = OracleMethod::enumeration;
};

/// Exact minimum distance by enumerating all q^k codewords. Throws
/// BudgetExceeded when q^k > budget and PreconditionError for k = 0.
WeightResult min_weight(const LinearCode& c, const SearchLimits& limits = {});

struct LowWeightHit {
    unsigned weight = 0;
    Word witness;
    std::uint64_t supports = 0;  // exact supports of this weight found (1 unless exhaustive)
};
struct LowWeightReport {
    std::vector<LowWeightHit> hits;  // ascending weight; empty proves d > w_max
    std::uint64_t supports_examined = 0;
};

/// Column-dependency search: for each support S with |S| <= w_max, the
/// codewords supported inside S are the null space of the parity-check
/// columns indexed by S. Reports every weight at which a codeword exists.
/// With `exhaustive` every support up to w_max is examined and counted;
/// otherwise the scan of a weight stops at its first witness.
LowWeightReport low_weight_search(const LinearCode& c, unsigned w_max, const SearchLimits& limits = {},
                                  bool exhaustive = false);

/// Minimum distance with automatic choice between enumeration and support
/// search, whichever the cost model says finishes first.
WeightResult certify_distance(const LinearCode& c, const SearchLimits& limits = {});

/// The code with its minimum distance certified and the witness stored.
LinearCode with_certified_distance(const LinearCode& c, const SearchLimits& limits = {});

/// Minimum weight over codewords of c that are not in d, where d is a strict
/// subcode of c. The witness is re-verified for membership in c and
/// non-membership in d.
WeightResult relative_min_weight(const LinearCode& c, const LinearCode& d, const SearchLimits& limits = {},
                                 std::optional<OracleMethod> method = std::nullopt);

/// Basis of the vectors x supported inside `support` with checks * x^T = 0,
/// each given on the support coordinates only.
std::vector<Word> null_space_on_support(const Matrix& checks, std::span<const std::size_t> support);

/// Expands a vector given on `support` coordinates to a length-n word.
Word scatter(std::span<const Elem> values, std::span<const std::size_t> support, std::size_t n);

}  // namespace qlrc
