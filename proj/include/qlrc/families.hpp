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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlrc/css.hpp"
#include "qlrc/cyclotomic.hpp"
#include "qlrc/galois.hpp"
#include "qlrc/locality.hpp"
#include "qlrc/matcode.hpp"

namespace qlrc {

// ---------------------------------------------------------------------------
// Generalized Reed-Solomon codes

struct GrsSpec {
    std::size_t k = 0;
    std::vector<Elem> a;  // distinct evaluation points
    std::vector<Elem> v;  // nonzero column multipliers
};

/// k x n matrix with entry (i, j) = v_j a_j^i. Throws InputError for repeated
/// points, zero multipliers, mismatched lengths or k > n.
Matrix grs_generator(const FieldPtr& field, const GrsSpec& spec);

/// The GRS code with its distance certified by an oracle and checked against
/// n - k + 1.
LinearCode grs_build(const FieldPtr& field, const GrsSpec& spec, const SearchLimits& limits = {});

/// v'_i = (v_i prod_{j != i} (a_i - a_j))^-1, so that GRS_k(a, v) and
/// GRS_{n-k}(a, v') are orthogonal for every k. The orthogonality is checked
/// by matrix product for every split before returning.
std::vector<Elem> grs_dual_multipliers(const FieldPtr& field, const std::vector<Elem>& a,
                                       const std::vector<Elem>& v);

// ---------------------------------------------------------------------------
// Optimal LRCs from GRS blocks

struct Block {
    std::vector<Elem> a;  // r + 1 distinct points
    std::vector<Elem> v;  // r + 1 nonzero multipliers
};

/// Deterministic block data: for d <= 4 every block uses points 0..r and
/// all-ones multipliers; for d >= 5 block i uses points i(r+1)..i(r+1)+r,
/// which needs u(r+1) <= q.
std::vector<Block> default_blocks(const FieldPtr& field, unsigned d, unsigned u, unsigned r);

/// Checks the block conditions: for d <= 4 all blocks share a and v; for
/// d >= 5 every set S of at most floor((d-1)/2) blocks has at least r|S| + 1
/// distinct points in total. Throws PreconditionError naming the failure.
void validate_blocks(const FieldPtr& field, unsigned d, unsigned u, unsigned r, const std::vector<Block>& blocks);

/// Parity-check matrix with u block rows (v_i on block i) followed by d - 2
/// rows whose block i part is (v_i a_i^j) for j = 1..d-2.
Matrix block_parity_check(const FieldPtr& field, unsigned d, unsigned u, unsigned r, const std::vector<Block>& blocks);

struct LrcBuild {
    LinearCode code;  // distance certified
    Matrix parity_check;
    LocalityCertificate locality;  // block rows as witnesses
};

/// [u(r+1), ur - d + 2, d]_q LRC with locality r. Requires d - 2 < r <= q - 1.
/// The distance is certified by an oracle and must equal d.
LrcBuild chen_lrc_build(const FieldPtr& field, unsigned d, unsigned u, unsigned r, const std::vector<Block>& blocks,
                        const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// Quantum families

struct FamilyParameters {
    std::size_t n = 0;
    std::size_t kappa = 0;
    unsigned delta = 0;
    unsigned r = 0;
};

struct FamilyResult {
    std::string family;  // "grs-pair", "cyclic-1" or "cyclic-2"
    std::map<std::string, std::int64_t> inputs;
    FamilyParameters claimed;
    CssCertification certification;
    std::vector<std::string> checks;  // construction identities verified on the way
    std::optional<DefiningSet> defining_set;
    std::optional<BchRun> bch;

    /// No bound is violated and both quantum Singleton-like forms hold with
    /// equality.
    bool claims_hold() const;
};

/// [[u(r+1), ur - 2(d-2) - u, d]]_q from a pair of block LRCs whose check
/// matrices H, H' satisfy H H'^T = 0. Requires 2(d-2) + u < r <= q - 1.
FamilyResult css_grs_pair_build(std::uint64_t q, unsigned d, unsigned u, unsigned r,
                                std::optional<std::vector<Block>> blocks = std::nullopt,
                                const SearchLimits& limits = {});

/// [[u(r+1), u(r-1) - 2(l-1), l+1]]_q from the cyclic code with defining set
/// {i(r+1)+1 : i in [0, u-1]} and {1..l}. Requires u + 2l < r + 2 and
/// u(r+1) | q - 1.
FamilyResult cyclic_family_one(std::uint64_t q, unsigned u, unsigned r, unsigned l, const SearchLimits& limits = {});

/// [[u(r+1), u(r-1) - 2, 3]]_q from the cyclic code with defining set
/// {i(r+1)+1 : i in [0, u-1]} and one extra residue y(r+1)+2 fixed by
/// multiplication by q. Requires u + 2 < r, gcd(u, q) = 1, (r+1) | q - 1 and
/// gcd(u, q-1) | 2(q-1)/(r+1).
FamilyResult cyclic_family_two(std::uint64_t q, unsigned u, unsigned r, const SearchLimits& limits = {});

/// The y in [0, u-1] with q(y(r+1)+2) = y(r+1)+2 mod u(r+1), if any.
std::optional<unsigned> fixed_residue_offset(std::uint64_t q, unsigned u, unsigned r);

}  // namespace qlrc
