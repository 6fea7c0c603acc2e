#pragma once

#include "spherical.hpp"

namespace macvv {

// Finitely supported filling of the infinite padded diagram, stored through a
// window rank: the filling lives on base^(window) and is zero beyond it.
// Every restriction to a valid rank must be strictly column-decreasing.
class OmegaFilling {
  public:
    OmegaFilling(Partition base, Filling on_window);

    const Partition& base() const { return base_; }
    int window() const { return window_; }
    const Filling& window_filling() const { return filling_; }

    // Minimal n >= n_lambda with the filling zero outside base^(n).
    int rank() const;
    int degree() const { return filling_.degree(); }
    // Restriction to base^(n); requires n >= rank().
    Filling restrict_to(int n) const;

    bool operator==(const OmegaFilling&) const = default;
    std::string str() const;

  private:
    Partition base_;
    int window_;
    Filling filling_;
};

// The connecting map: kills terms with positive last exponent and restricts
// the tableau factor.
VElement phi_map(const Partition& base, int n, const VElement& v);

// sum over boxes of base^(n) of t^{ell * content}.
RatFun content_scalar(const Partition& base, int n, int ell);

// The recentred Macdonald operator at finite rank.
VElement delta_truncated(const Partition& base, int n, int ell, const VElement& v);
// Its eigenvalue on P_{T|n}: sum over boxes of (q^{ell T} - 1) t^{ell c},
// independent of n for n >= rank.
RatFun delta_eigenvalue(const OmegaFilling& T, int ell);

// Operator identity of the connecting maps against the recentred Macdonald
// element, checked on every X^alpha (x) tau with |alpha| <= degree.
struct IntertwineReport {
    long checked = 0;
    bool pass = true;
    std::string counterexample;
};
IntertwineReport intertwine_check(const Partition& base, int n, int ell, int degree);

// Window of symmetric Macdonald polynomials P_{T|n} for consecutive ranks,
// with the connecting-map compatibility certified on construction.
class CompatibleFamily {
  public:
    CompatibleFamily(OmegaFilling T, int lo, int hi);
    const OmegaFilling& omega() const { return T_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const VElement& at(int n) const;

  private:
    OmegaFilling T_;
    int lo_, hi_;
    std::vector<VElement> entries_;
};

} // namespace macvv
