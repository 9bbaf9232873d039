#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nur4/genmat.hpp"

namespace nur4 {

// Coefficients A_0..A_n of W_C(z) = sum A_i z^i, A_i = number of codewords
// of weight i. A_0 is included, so sum A_i = |C|.
struct WeightEnumerator {
    int n = 0;
    std::vector<uint64_t> coeff;

    // Compact polynomial, e.g. "1+3z^2".
    std::string str() const;

    friend bool operator==(const WeightEnumerator&,
                           const WeightEnumerator&) = default;
};

// One monomial X0^n0 Xa^na Xb^nb Xc^nc with its codeword count.
struct CweTerm {
    uint8_t n0 = 0, na = 0, nb = 0, nc = 0;
    uint64_t count = 0;

    friend bool operator==(const CweTerm&, const CweTerm&) = default;
};

// Complete weight enumerator: homogeneous of degree n in X0, Xa, Xb, Xc.
// Terms are kept in descending lexicographic order of (n0, na, nb, nc).
struct CompleteWeightEnumerator {
    int n = 0;
    std::vector<CweTerm> terms;

    // Compact polynomial, e.g. "X0^2+Xa^2+Xb^2+Xc^2".
    std::string str() const;

    // Specialization X0 -> 1, Xa,Xb,Xc -> z; definitionally equal to the
    // plain weight enumerator.
    WeightEnumerator specialize() const;

    friend bool operator==(const CompleteWeightEnumerator&,
                           const CompleteWeightEnumerator&) = default;
};

// Binary linear code as a sorted set of n-bit masks.
struct BinaryCode {
    int n = 0;
    std::vector<uint32_t> words;

    uint64_t size() const { return words.size(); }
    bool contains(uint32_t w) const;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;
};

// Minimum pairwise Hamming distance. For these additively closed codes this
// equals the minimum weight over nonzero codewords, which is what the
// production path computes; the O(|C|^2) pairwise scan stays in the test
// oracles. Throws TooFewCodewords when |code| < 2.
int min_distance(const Code& code);

WeightEnumerator weight_enumerator(const Code& code);

CompleteWeightEnumerator complete_weight_enumerator(const Code& code);

// res(C) = { tau(u) : u in C }.
BinaryCode residue_code(const Code& code);

// tor(C) = { v in F2^n : the word with c at supp(v) lies in C }.
BinaryCode torsion_code(const Code& code);

// F2 rank of a set of n-bit masks.
int rank_f2(std::vector<uint32_t> rows);

// log2 |bc|, cross-checked against the rank of the word set as generators
// and against closure of the reduced basis span. Throws NotLinear when the
// set is not an F2-linear code.
int binary_dimension(const BinaryCode& bc);

}  // namespace nur4
