#pragma once

#include <optional>
#include <string>

#include "poly_qt.hpp"

namespace macvv {

// Element of Q(q,t), the coefficient field of the whole library.
//
// Always kept in normalized form: num/den coprime, den primitive with integer
// coefficients and positive leading coefficient in the canonical (q-exp,
// t-exp) term order. Negative powers of q or t are represented as honest
// denominators: q^{-k} is 1/q^k, never a Laurent exponent.
class RatFun {
  public:
    RatFun() : num_(), den_(PolyQT::constant(rat(1))) {}
    RatFun(long c) : RatFun(PolyQT::constant(rat(c))) {}
    RatFun(const Rat& c) : RatFun(PolyQT::constant(c)) {}
    explicit RatFun(PolyQT num) : num_(std::move(num)), den_(PolyQT::constant(rat(1))) {}
    RatFun(PolyQT num, PolyQT den);

    // q^e or t^e for any integer e (negative exponents go to the denominator).
    static RatFun q_pow(int e);
    static RatFun t_pow(int e);
    static RatFun q() { return q_pow(1); }
    static RatFun t() { return t_pow(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const PolyQT& num() const { return num_; }
    const PolyQT& den() const { return den_; }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inverse() const;

    // Equality of field elements by cross-multiplication; it never computes a
    // gcd, so it is independent of normalization quality.
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // Field-by-field comparison of the stored normal forms (test support).
    bool identical_form(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Evaluation at rational (q,t); nullopt when the denominator vanishes.
    std::optional<Rat> evaluate(const Rat& qv, const Rat& tv) const;

    std::string str() const;

  private:
    PolyQT num_, den_;
    void normalize();
};

inline RatFun operator*(long c, const RatFun& f) { return RatFun(c) * f; }

} // namespace macvv
