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

// Internal enumeration machinery shared by the exhaustive oracles.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "qlrc/matcode.hpp"

namespace qlrc::detail {

// Process-wide work counters read by oracle_work().
inline std::atomic<std::uint64_t> g_codewords{0};
inline std::atomic<std::uint64_t> g_supports{0};

struct SparseVec {
    std::vector<std::uint32_t> index;
    std::vector<Elem> value;
};

inline SparseVec sparsify(std::span<const Elem> w) {
    SparseVec s;
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        s.index.push_back(i);
        s.value.push_back(w[i]);
    }
    return s;
}

/// GF(p)-basis of the row space of `rows`: x^s * row_i for each row and
/// s < m. Every codeword is reached exactly once by digits in [0, p).
inline std::vector<SparseVec> additive_basis(const Matrix& rows) {
    const Field& f = *rows.field();
    std::vector<SparseVec> out;
    Elem scalar = 1;
    std::vector<Elem> scalars;
    for (unsigned s = 0; s < f.degree(); ++s) {
        scalars.push_back(scalar);
        scalar *= f.characteristic();  // encoding of x^(s+1)
    }
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        for (Elem sc : scalars) {
            Word w(rows.cols());
            for (std::size_t c = 0; c < rows.cols(); ++c) w[c] = f.mul(sc, rows.at(r, c));
            out.push_back(sparsify(w));
        }
    }
    return out;
}

/// Walks every GF(p)-combination of `basis` whose top `split` digits spell
/// `chunk`. Successive words differ by one basis vector per changed digit, so
/// each step costs O(support) field additions. visit(word, weight).
template <class Visitor>
void enumerate_chunk(const Field& f, const std::vector<SparseVec>& basis, std::size_t n, std::uint64_t chunk,
                     unsigned split, Visitor& visit) {
    const std::uint32_t p = f.characteristic();
    Word word(n, 0);
    std::size_t weight = 0;
    auto add = [&](const SparseVec& v) {
        for (std::size_t t = 0; t < v.index.size(); ++t) {
            const std::uint32_t i = v.index[t];
            const Elem old = word[i];
            const Elem now = f.add(old, v.value[t]);
            weight += (now != 0);
            weight -= (old != 0);
            word[i] = now;
        }
    };
    const std::size_t low = basis.size() - split;
    for (std::size_t j = low; j < basis.size(); ++j) {
        const std::uint64_t digit = chunk % p;
        chunk /= p;
        for (std::uint64_t t = 0; t < digit; ++t) add(basis[j]);
    }
    std::vector<std::uint32_t> digits(low, 0);
    for (;;) {
        visit(static_cast<const Word&>(word), weight);
        std::size_t j = 0;
        for (; j < low; ++j) {
            add(basis[j]);
            if (++digits[j] < p) break;
            digits[j] = 0;
        }
        if (j == low) return;
    }
}

/// Enumerates the full GF(p)-span of `basis` on `threads` workers. Returns
/// one accumulator per chunk, in enumeration order, so callers can fold them
/// deterministically regardless of scheduling.
template <class Acc, class MakeAcc>
std::vector<Acc> parallel_enumerate(const Field& f, const std::vector<SparseVec>& basis, std::size_t n,
                                    unsigned threads, MakeAcc make) {
    const std::uint32_t p = f.characteristic();
    threads = std::max(1u, threads);
    unsigned split = 0;
    std::uint64_t chunks = 1;
    while (threads > 1 && split < basis.size() && chunks < 4ull * threads) {
        ++split;
        chunks *= p;
    }
    g_codewords += saturating_pow(p, basis.size());
    std::vector<Acc> out;
    out.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) out.push_back(make());
    if (chunks == 1) {
        enumerate_chunk(f, basis, n, 0, 0, out[0]);
        return out;
    }
    std::atomic<std::uint64_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < chunks; c = next++) enumerate_chunk(f, basis, n, c, split, out[c]);
            });
        }
    }
    return out;
}

/// Calls fn(subset) for every w-subset of [0, n) in lexicographic order until
/// fn returns false. Returns the number of subsets visited.
template <class Fn>
std::uint64_t for_each_subset(std::size_t n, std::size_t w, Fn&& fn) {
    if (w > n) return 0;
    std::vector<std::size_t> idx(w);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::uint64_t visited = 0;
    for (;;) {
        ++visited;
        if (!fn(std::span<const std::size_t>(idx))) break;
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
    g_supports += visited;
    return visited;
}

/// A vector in span(basis) with every coordinate nonzero, or an empty word if
/// none exists. Greedy: each basis vector is added with the first scalar that
/// keeps all previously nonzero coordinates nonzero; if that ever fails the
/// coefficient space is searched exhaustively.
inline Word full_support_combination(const Field& f, const std::vector<Word>& basis) {
    if (basis.empty()) return {};
    const std::size_t len = basis[0].size();
    for (std::size_t c = 0; c < len; ++c) {
        bool covered = false;
        for (const auto& b : basis) covered = covered || b[c] != 0;
        if (!covered) return {};
    }
    auto full = [](const Word& v) { return std::all_of(v.begin(), v.end(), [](Elem x) { return x != 0; }); };
    const std::uint32_t q = f.order();
    Word v(len, 0);
    bool greedy_ok = true;
    for (const auto& b : basis) {
        bool placed = false;
        for (Elem c = 1; c < q && !placed; ++c) {
            Word t = v;
            bool keeps = true;
            for (std::size_t i = 0; i < len; ++i) {
                t[i] = f.add(t[i], f.mul(c, b[i]));
                if ((v[i] != 0 || b[i] != 0) && t[i] == 0) keeps = false;
            }
            if (keeps) {
                v = std::move(t);
                placed = true;
            }
        }
        if (!placed) {
            greedy_ok = false;
            break;
        }
    }
    if (greedy_ok && full(v)) return v;
    std::vector<Elem> coeff(basis.size(), 0);
    for (;;) {
        std::size_t j = 0;
        for (; j < coeff.size(); ++j) {
            if (++coeff[j] < q) break;
            coeff[j] = 0;
        }
        if (j == coeff.size()) return {};
        Word w(len, 0);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (coeff[b] == 0) continue;
            for (std::size_t c = 0; c < len; ++c) w[c] = f.add(w[c], f.mul(coeff[b], basis[b][c]));
        }
        if (full(w)) return w;
    }
}

inline std::uint64_t support_mask(std::span<const Elem> w) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < w.size() && i < 64; ++i)
        if (w[i] != 0) m |= std::uint64_t{1} << i;
    return m;
}

}  // namespace qlrc::detail
