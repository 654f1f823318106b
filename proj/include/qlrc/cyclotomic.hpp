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
#include <vector>

#include "qlrc/galois.hpp"
#include "qlrc/locality.hpp"
#include "qlrc/matcode.hpp"

namespace qlrc {

/// Orbit of i under multiplication by q modulo n, sorted. Requires
/// gcd(n, q) = 1.
std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t i, std::uint32_t n, std::uint64_t q);

/// A union of q-cyclotomic cosets modulo n: the exponents i with
/// g(alpha^i) = 0 for the generator polynomial g of a cyclic code.
struct DefiningSet {
    std::uint32_t n = 1;
    std::uint64_t q = 2;
    std::vector<std::uint32_t> members;              // sorted
    std::vector<std::vector<std::uint32_t>> cosets;  // partition of members, by smallest element
    bool enlarged = false;                           // closure added residues beyond the seeds

    bool contains(std::uint32_t i) const;
    std::size_t size() const noexcept { return members.size(); }
};

/// Closure of `seeds` (reduced mod n) under multiplication by q.
DefiningSet make_defining_set(std::uint32_t n, std::uint64_t q, const std::vector<std::uint32_t>& seeds);

/// {-i mod n : i in D}.
DefiningSet negated(const DefiningSet& d);

struct CyclicCode {
    DefiningSet defining_set;
    RootOfUnity root;  // alpha and the extension it lives in
    Poly generator_poly;
    LinearCode code;
};

/// The cyclic code of length n over `field` with defining set D. The
/// generator polynomial is the product of (x - alpha^i) over D, computed in the
/// extension and restricted to the base field; the result is cross-checked
/// against the evaluation matrix of root_check_matrix.
CyclicCode build_cyclic_code(const FieldPtr& field, const DefiningSet& d);

/// |D| x n matrix over the extension field with entry (i, j) = alpha^(D_i j);
/// a word w lies in the code iff this matrix annihilates w.
Matrix root_check_matrix(const CyclicCode& c);

/// True when every generator row is annihilated by root_check_matrix.
bool satisfies_root_checks(const CyclicCode& c);

/// Shift of w by s positions to the right: (w_{n-s}, ..., w_{n-1}, w_0, ...).
Word cyclic_shift(std::span<const Elem> w, std::size_t s);

struct BchRun {
    unsigned lambda = 1;      // d >= lambda
    std::uint32_t step = 1;   // common difference, coprime to n
    std::uint32_t start = 0;  // first element of the progression
};

/// Largest lambda such that D contains an arithmetic progression of length
/// lambda - 1 whose step is coprime to n.
BchRun bch_bound(const DefiningSet& d);

/// {i(r+1) + 1 : i in [0, u-1]}.
std::vector<std::uint32_t> locality_index_set(unsigned u, unsigned r);

/// True when the defining set of a length-u(r+1) code contains
/// locality_index_set(u, r). Throws InputError when n != u(r+1).
bool has_cyclic_locality(const DefiningSet& d, unsigned u, unsigned r);

/// Locality certificate built from the structure of the code: a dual codeword
/// supported on {ju : j in [0, r]} and its cyclic shifts. Requires
/// has_cyclic_locality. For t = 1 the word is (alpha^(ju)) on those positions;
/// otherwise it is taken from the dual codewords supported there.
LocalityCertificate cyclic_locality_certificate(const CyclicCode& c, unsigned u, unsigned r);

/// D and -D are disjoint.
bool is_dual_containing(const DefiningSet& d);

}  // namespace qlrc
