#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke.hpp"

namespace macvv {

// Certification failures (a constructed object violating its spectral
// contract) are logic errors: they indicate convention drift, not bad input.
struct certification_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct VKey {
    std::vector<int> alpha;
    int tab = 0;
    auto operator<=>(const VKey&) const = default;
};

// Element of the induced module of a shape: a finite combination of
// monomial-tensor-tableau basis vectors X^alpha (x) tau.
class VElement {
  public:
    VElement() = default;
    explicit VElement(Partition shape);
    static VElement basis(const Partition& shape, std::vector<int> alpha, int tab);
    static VElement unit(const Partition& shape, int tab); // 1 (x) tau

    const Partition& shape() const { return shape_; }
    int rank() const { return n_; }
    const std::map<VKey, RatFun>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;

    void add(const VKey& k, const RatFun& c);
    VElement operator+(const VElement& o) const;
    VElement operator-(const VElement& o) const;
    VElement scaled(const RatFun& c) const;
    bool operator==(const VElement& o) const;

    RatFun coeff(const VKey& k) const;
    std::string str() const;

  private:
    Partition shape_;
    int n_ = 0;
    std::map<VKey, RatFun> terms_;
};

// Monomial multiplication by X^alpha.
VElement act_X(const std::vector<int>& alpha, const VElement& v);
VElement act_X_i(int i, const VElement& v);

// The normal-ordered generator action
//   T_i(f (x) u) = (s_i f) (x) T_i(u) - (t-1) (X_i (f - s_i f)/(X_i - X_{i+1})) (x) u.
VElement act_T(int i, const VElement& v);
VElement act_T_inv(int i, const VElement& v);

// Rotation: pi(X^alpha (x) u) = q^{alpha_n} X^{rot alpha} (x)
// t^{n-1} T_1^{-1}...T_{n-1}^{-1}(u), and its inverse.
VElement act_pi(const VElement& v);
VElement act_pi_inv(const VElement& v);

// theta_1 = t^{1-n} pi T_{n-1}...T_1, theta_{i+1} = t T_i^{-1} theta_i T_i^{-1}.
VElement act_theta(int i, const VElement& v);

// Multiplication by elementary/power-sum symmetric polynomials in the X's.
VElement mul_elementary(int r, const VElement& v);
VElement mul_powersum(int ell, const VElement& v);

// Weight-vector builder: constructs F_tau by the descent recursion with full
// spectrum certification, memoized per shape.
class FBuilder {
  public:
    static FBuilder& of(const Partition& shape);
    const VElement& F(const Psyt& tau);
    // Eigenvalue of theta_i on F_tau: q^{w_tau(i)} t^{c_tau(i)}.
    static RatFun theta_eigenvalue(const Psyt& tau, int i);
    const Partition& shape() const { return shape_; }
    std::size_t built() const { return memo_.size(); }

  private:
    explicit FBuilder(Partition shape) : shape_(std::move(shape)) {}
    VElement build(const Psyt& tau);
    Partition shape_;
    std::map<Psyt, VElement> memo_;
};

// Exhaustive check of the defining relations on the basis of bounded degree.
struct RelationReport {
    struct Entry {
        std::string name;
        long checked = 0;
        bool pass = true;
        std::string counterexample;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

RelationReport relation_suite(const Partition& shape, int degree);

// All exponent vectors alpha in Z_{>=0}^n with |alpha| <= degree and
// |alpha| == degree, in lexicographic order.
std::vector<std::vector<int>> compositions_up_to(int n, int degree);
std::vector<std::vector<int>> compositions_of(int n, int degree);

} // namespace macvv
