#pragma once

#include <string>
#include <vector>

#include "daha.hpp"

namespace macvv {

// Bruhat order on permutations (one-line form), by the rank-matrix criterion.
bool bruhat_le(const std::vector<int>& u, const std::vector<int>& w);

// Minimal-length permutation w with beta_{w(j)} = sort_desc(beta)_j
// (ties resolved left to right).
std::vector<int> min_sorting_perm(const std::vector<int>& beta);

// Strict order on exponent vectors used for triangularity statements: beta is
// below nu when its decreasing sort is dominated by nu's, with the dominant
// rearrangement maximal inside each sorting class.
bool composition_bruhat_less(const std::vector<int>& beta, const std::vector<int>& nu);

// Checks the triangular expansion of F_{Top(T)}: leading coefficient t^{-b_T}
// on X^{nu(T)} (x) S(T) and every other exponent strictly below nu(T).
// Returns an empty string on success, else a description of the violation.
std::string check_top_triangularity(FBuilder& fb, const Partition& shape, const Filling& T);

} // namespace macvv
