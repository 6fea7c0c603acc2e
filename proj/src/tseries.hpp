#pragma once

#include <string>
#include <vector>

#include "ratfun.hpp"

namespace macvv {

// Truncated Laurent series in t with coefficients in Q(q): the ambient ring
// for the product-sum identity checks.
//
// A series knows its coefficients exactly on the exponent window
// [valuation, order]; everything above order is unknown, everything below
// valuation is zero. Coefficients are RatFun values with no t dependence.
class TSeries {
  public:
    // The zero series, exact through the given order.
    static TSeries zero(long order);
    // c * t^e, exact through `order`.
    static TSeries monomial(const RatFun& c, long e, long order);

    // Expands f as a Laurent series around t = 0 to the given order.
    // f may have negative valuation (a pure power of t in the denominator).
    static TSeries expand(const RatFun& f, long order);

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool is_zero_through_order() const;

    // Coefficient of t^e; throws if e > order.
    RatFun coeff(long e) const;

    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator*(const TSeries& o) const;
    TSeries scaled(const RatFun& c) const;
    TSeries shifted(long e) const; // multiply by t^e
    TSeries truncated(long order) const;

    bool equal_through(const TSeries& o, long n) const;

    std::string str() const;

  private:
    long val_ = 0;   // exponent of the first stored coefficient
    long order_ = -1; // highest exponent known exactly
    std::vector<RatFun> c_; // c_[k] is the coefficient of t^(val_+k)
    void renormalize();
};

} // namespace macvv
