#pragma once

// Slow reference implementations used only by the tests. Everything here
// goes through the Cayley tables coordinate by coordinate, or scans whole
// word spaces, independently of the packed shortcuts and generating-set
// contracts the production code uses.

#include <vector>

#include "nur4/genmat.hpp"

namespace nur4::oracle {

// Coordinatewise table arithmetic.
EWord ref_add(const EWord& u, const EWord& v);
EWord ref_scalar(Side side, Elem s, const EWord& u);
int ref_weight(const EWord& u);
int ref_distance(const EWord& u, const EWord& v);
Elem ref_inner(const EWord& u, const EWord& v);
BitWord ref_tau(const EWord& u);

// Span by explicit subset sums (no Gray walk).
Code ref_span(const EMatrix& g);

// Pairwise minimum distance over all codeword pairs.
int pairwise_min_distance(const Code& code);

// Dual sets by scanning all 4^n words against every codeword.
Code brute_left_dual(const Code& code);
Code brute_right_dual(const Code& code);

// All 4^n words of length n, ascending by packed value.
std::vector<EWord> all_words(int n);

// Self-orthogonality via the containment C <= C_L ^ C_R.
bool self_orthogonal_by_containment(const Code& code);

}  // namespace nur4::oracle
