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

// Test-side oracles and generators. Nothing here calls into the search code
// it is used to check.

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "qlrc/galois.hpp"
#include "qlrc/matcode.hpp"

namespace testing {

using qlrc::Elem;
using qlrc::FieldPtr;
using qlrc::Word;

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t out = 1;
    while (e--) out *= b;
    return out;
}

inline qlrc::Poly random_poly(const FieldPtr& f, std::size_t len, std::mt19937_64& rng) {
    std::vector<Elem> c(len);
    for (auto& x : c) x = static_cast<Elem>(rng() % f->order());
    return qlrc::Poly(f, std::move(c));
}

inline qlrc::Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    qlrc::Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<Elem>(rng() % f->order()));
    return m;
}

/// Calls fn(word) for every linear combination of `rows` (q^|rows| calls,
/// duplicates included when rows are dependent).
inline void for_each_combination(const FieldPtr& f, const std::vector<Word>& rows, std::size_t n,
                                 const std::function<void(const Word&)>& fn) {
    const std::uint32_t q = f->order();
    std::vector<Elem> coeff(rows.size(), 0);
    for (;;) {
        Word w(n, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) w[c] = f->add(w[c], f->mul(coeff[r], rows[r][c]));
        fn(w);
        std::size_t j = 0;
        for (; j < coeff.size(); ++j) {
            if (++coeff[j] < q) break;
            coeff[j] = 0;
        }
        if (j == coeff.size()) return;
    }
}

inline bool in_span(const FieldPtr& f, const std::vector<Word>& rows, const Word& w) {
    bool found = false;
    for_each_combination(f, rows, w.size(), [&](const Word& x) { found = found || x == w; });
    return found;
}

/// Minimum nonzero weight over the span of `rows` by plain enumeration, and
/// the number of distinct codewords at each weight.
struct Spectrum {
    unsigned min_weight = std::numeric_limits<unsigned>::max();
    std::vector<std::uint64_t> count;  // count[w], with repetition over dependent rows
};

inline Spectrum spectrum(const FieldPtr& f, const std::vector<Word>& rows, std::size_t n) {
    Spectrum s;
    s.count.assign(n + 1, 0);
    for_each_combination(f, rows, n, [&](const Word& w) {
        const auto wt = static_cast<unsigned>(qlrc::hamming_weight(w));
        ++s.count[wt];
        if (wt != 0 && wt < s.min_weight) s.min_weight = wt;
    });
    return s;
}

inline Elem dot(const FieldPtr& f, const Word& a, const Word& b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f->add(s, f->mul(a[i], b[i]));
    return s;
}

}  // namespace testing
