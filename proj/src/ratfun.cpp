#include "ratfun.hpp"

namespace macvv {

RatFun::RatFun(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = PolyQT::constant(rat(1));
        return;
    }
    if (!den_.is_constant()) {
        PolyQT g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
    }
    // Scale so den is integer-coprime with positive leading coefficient.
    Rat c = den_.content();
    if (c != 1) {
        den_ = den_.scaled(1 / c);
        num_ = num_.scaled(1 / c);
    }
}

RatFun RatFun::q_pow(int e) {
    RatFun f;
    if (e >= 0) {
        f.num_ = PolyQT::q_pow(e);
    } else {
        f.num_ = PolyQT::constant(rat(1));
        f.den_ = PolyQT::q_pow(-e);
    }
    return f;
}

RatFun RatFun::t_pow(int e) {
    RatFun f;
    if (e >= 0) {
        f.num_ = PolyQT::t_pow(e);
    } else {
        f.num_ = PolyQT::constant(rat(1));
        f.den_ = PolyQT::t_pow(-e);
    }
    return f;
}

RatFun RatFun::operator-() const {
    RatFun f(*this);
    f.num_ = -f.num_;
    return f;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return RatFun(num_ + o.num_);
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    // Henrici: with g = gcd(d1,d2), only gcd(num, g) can survive uncancelled.
    PolyQT g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        RatFun f;
        f.num_ = num_ * o.den_ + o.num_ * den_;
        f.den_ = den_ * o.den_;
        if (f.num_.is_zero()) {
            f.den_ = PolyQT::constant(rat(1));
            return f;
        }
        Rat c = f.den_.content();
        if (c != 1) {
            f.den_ = f.den_.scaled(1 / c);
            f.num_ = f.num_.scaled(1 / c);
        }
        return f;
    }
    PolyQT d1 = poly_div_exact(den_, g);
    PolyQT d2 = poly_div_exact(o.den_, g);
    PolyQT n = num_ * d2 + o.num_ * d1;
    if (n.is_zero()) return RatFun();
    PolyQT h = poly_gcd(n, g);
    RatFun f;
    if (h.is_one()) {
        f.num_ = std::move(n);
        f.den_ = den_ * d2;
    } else {
        f.num_ = poly_div_exact(n, h);
        f.den_ = poly_div_exact(den_, h) * d2;
    }
    Rat c = f.den_.content();
    if (c != 1) {
        f.den_ = f.den_.scaled(1 / c);
        f.num_ = f.num_.scaled(1 / c);
    }
    return f;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    if (den_.is_one() && o.den_.is_one()) return RatFun(num_ * o.num_);
    // Cross-cancel before multiplying; inputs are reduced, so the result is too.
    PolyQT g1 = poly_gcd(num_, o.den_);
    PolyQT g2 = poly_gcd(o.num_, den_);
    PolyQT n1 = g1.is_one() ? num_ : poly_div_exact(num_, g1);
    PolyQT d2 = g1.is_one() ? o.den_ : poly_div_exact(o.den_, g1);
    PolyQT n2 = g2.is_one() ? o.num_ : poly_div_exact(o.num_, g2);
    PolyQT d1 = g2.is_one() ? den_ : poly_div_exact(den_, g2);
    RatFun f;
    f.num_ = n1 * n2;
    f.den_ = d1 * d2;
    Rat c = f.den_.content();
    if (c != 1) {
        f.den_ = f.den_.scaled(1 / c);
        f.num_ = f.num_.scaled(1 / c);
    }
    return f;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: division by zero");
    RatFun f;
    f.num_ = den_;
    f.den_ = num_;
    Rat c = f.den_.content();
    if (c != 1) {
        f.den_ = f.den_.scaled(1 / c);
        f.num_ = f.num_.scaled(1 / c);
    }
    return f;
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    return *this * o.inverse();
}

bool RatFun::operator==(const RatFun& o) const {
    if (num_.is_zero()) return o.num_.is_zero();
    if (o.num_.is_zero()) return false;
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<Rat> RatFun::evaluate(const Rat& qv, const Rat& tv) const {
    Rat d = den_.evaluate(qv, tv);
    if (rat_is_zero(d)) return std::nullopt;
    return num_.evaluate(qv, tv) / d;
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace macvv
