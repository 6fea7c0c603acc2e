#pragma once

#include "limits.hpp"

namespace macvv {

// All strictly-column-decreasing fillings reachable from T by adding r ones,
// at most one per box.
std::vector<Filling> pieri_candidates(const Filling& T, int r);
std::vector<OmegaFilling> pieri_candidates(const OmegaFilling& T, int r);

// e_r(1, t, ..., t^{n-1}).
RatFun e_r_geometric(int r, int n);
// Gaussian binomial coefficient as a polynomial in t.
RatFun gauss_binomial(int n, int r);

// The closed Pieri coefficient d^{(r)}_{S,T} at finite rank.
RatFun pieri_coeff_formula(const Partition& shape, const Filling& S, const Filling& T, int r);

// Oracle: expand e_r P_T over the weight bases of the candidate classes, read
// each coefficient at F_{Top(S)}, and certify that subtracting the combination
// leaves exactly zero.
struct PieriTable {
    std::vector<std::pair<Filling, RatFun>> entries;
    bool residual_zero = false;
};
PieriTable pieri_bruteforce(FBuilder& fb, const Partition& shape, const Filling& T, int r);

// The stable coefficient: evaluated at rank rk(T)+r and certified equal at
// rank rk(T)+r+1.
RatFun stable_pieri_coeff(const OmegaFilling& S, const OmegaFilling& T, int r);

} // namespace macvv
