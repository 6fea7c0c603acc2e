#pragma once

// Test-support oracle: classical symmetric-function Macdonald polynomials by
// Gram-Schmidt over the monomial basis, kept fully independent of the module
// machinery it is used to check. Only tableaux-free scalar arithmetic from the
// core is reused.

#include <map>
#include <vector>

#include "ratfun.hpp"
#include "tableaux.hpp"

namespace macvv::classical {

// Graded symmetric function in the monomial basis.
using SymFun = std::map<Partition, RatFun>;

std::vector<Partition> partitions_of(int d);

SymFun m_basis(const Partition& mu);
SymFun add(const SymFun& a, const SymFun& b);
SymFun scale(const SymFun& a, const RatFun& c);
SymFun multiply(const SymFun& a, const SymFun& b);

// p_r and p_mu in the monomial basis.
SymFun power_sum(int r);
SymFun power_sum_product(const Partition& mu);

// Macdonald's (q,t) Hall pairing.
RatFun hall_pairing(const SymFun& f, const SymFun& g, int degree);

// Monic Macdonald polynomial P_mu(x; q, t) in the monomial basis.
SymFun macdonald_P(const Partition& mu);

// Pieri expansion e_1 * P_mu = sum c_nu P_nu via the pairing.
std::map<Partition, RatFun> classical_e1_pieri(const Partition& mu);

// q -> 1/q on coefficients.
RatFun subst_q_inverse(const RatFun& f);
SymFun subst_q_inverse(const SymFun& f);
// q -> t (Schur specialization check).
RatFun subst_q_to_t(const RatFun& f);

// Expansion into monomials of n variables; partitions longer than n drop out.
std::map<std::vector<int>, RatFun> to_monomials(const SymFun& f, int nvars);

} // namespace macvv::classical
