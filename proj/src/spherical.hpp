#pragma once

#include "daha.hpp"

namespace macvv {

// [n]_t! = prod_{i=1}^n (1-t^i)/(1-t) as a polynomial in t.
RatFun t_factorial(int n);
// [mu]_t! = prod_i [mu_i]_t!.
RatFun t_factorial(const std::vector<int>& mu);

// T_{i_1}...T_{i_r} on the induced module, rightmost factor first.
VElement act_word(const HeckeWord& w, const VElement& v);

bool is_eps_invariant(const VElement& v);

// The normalized trivial idempotent, evaluated by the coset-sum
// factorization: n(n-1)/2 generator applications instead of n! words.
VElement epsilon_project(const VElement& v);
// Reference evaluation streaming over all permutations in lexicographic
// order; exponentially slower, used to certify the factorized path.
VElement epsilon_project_streaming(const VElement& v);

// The explicit expansion of the symmetric vector-valued Macdonald polynomial
// over the weight basis of its class; requires T in RSSYT.
VElement compute_P_formula(FBuilder& fb, const Partition& shape, const Filling& T);

// Inversion-pair coefficient of tau inside P_T.
RatFun p_inversion_coeff(const Filling& T, const Psyt& tau);

// Projection oracle: the image of the class span under epsilon.
struct EpsLine {
    int dim = 0;        // 0 or 1; anything else throws
    VElement generator; // some nonzero epsilon(F_tau) when dim = 1
};
EpsLine eps_line_of_class(FBuilder& fb, const Partition& shape, const Filling& T);

// Pieri scalar K_T(q,t).
RatFun k_coeff(const Partition& shape, const Filling& T);

// Action of the degree-zero Macdonald element: on invariant vectors the
// trailing idempotent is redundant and the cheap path applies sum theta_i^ell
// directly; the full path keeps both idempotents for cross-checks.
VElement act_P0l(int ell, const VElement& v, bool full_path = false);
// q^ell p_ell[X] multiplication (with optional trailing idempotent).
VElement act_Pl0(int ell, const VElement& v, bool full_path = false);

// Eigenvalue of P_{0,ell} on P_T: sum over boxes of q^{ell T(box)} t^{ell c(box)}.
RatFun p0l_eigenvalue(const Filling& T, int ell);

// True iff w == s * v exactly.
bool is_multiple_of(const VElement& w, const VElement& v, const RatFun& s);
// If w is proportional to nonzero v, return the ratio.
std::optional<RatFun> proportionality_ratio(const VElement& w, const VElement& v);

} // namespace macvv
