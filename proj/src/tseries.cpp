#include "tseries.hpp"

#include <algorithm>

namespace macvv {

void TSeries::renormalize() {
    // Strip leading zeros (keep at least the all-zero window representation).
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k == c_.size()) {
        val_ = std::min<long>(0, order_);
        c_.assign(order_ - val_ + 1, RatFun());
        return;
    }
    if (k > 0) {
        c_.erase(c_.begin(), c_.begin() + k);
        val_ += (long)k;
    }
}

TSeries TSeries::zero(long order) {
    TSeries s;
    s.order_ = order;
    s.val_ = std::min<long>(0, order);
    s.c_.assign(order - s.val_ + 1, RatFun());
    return s;
}

TSeries TSeries::monomial(const RatFun& c, long e, long order) {
    if (c.is_zero()) return zero(order);
    TSeries s;
    s.order_ = order;
    s.val_ = e;
    if (e > order) return zero(order);
    s.c_.assign(order - e + 1, RatFun());
    s.c_[0] = c;
    return s;
}

bool TSeries::is_zero_through_order() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

RatFun TSeries::coeff(long e) const {
    if (e > order_) throw std::domain_error("TSeries::coeff beyond truncation order");
    if (e < val_) return RatFun();
    return c_[e - val_];
}

TSeries TSeries::operator+(const TSeries& o) const {
    TSeries s;
    s.order_ = std::min(order_, o.order_);
    s.val_ = std::min(val_, o.val_);
    if (s.val_ > s.order_) s.val_ = std::min<long>(0, s.order_);
    s.c_.assign(s.order_ - s.val_ + 1, RatFun());
    for (long e = s.val_; e <= s.order_; ++e) {
        RatFun v;
        if (e >= val_ && e <= order_) v += coeff(e);
        if (e >= o.val_ && e <= o.order_) v += o.coeff(e);
        s.c_[e - s.val_] = std::move(v);
    }
    s.renormalize();
    return s;
}

TSeries TSeries::operator-(const TSeries& o) const { return *this + o.scaled(RatFun(-1)); }

TSeries TSeries::operator*(const TSeries& o) const {
    // Known windows [v1,N1], [v2,N2] give an exact product through
    // min(N1+v2, N2+v1).
    TSeries s;
    s.order_ = std::min(order_ + o.val_, o.order_ + val_);
    s.val_ = val_ + o.val_;
    if (s.val_ > s.order_) return zero(s.order_);
    s.c_.assign(s.order_ - s.val_ + 1, RatFun());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            long e = val_ + (long)i + o.val_ + (long)j;
            if (e > s.order_) break;
            if (o.c_[j].is_zero()) continue;
            s.c_[e - s.val_] += c_[i] * o.c_[j];
        }
    }
    s.renormalize();
    return s;
}

TSeries TSeries::scaled(const RatFun& c) const {
    if (c.is_zero()) return zero(order_);
    TSeries s(*this);
    for (auto& x : s.c_) x *= c;
    return s;
}

TSeries TSeries::shifted(long e) const {
    TSeries s(*this);
    s.val_ += e;
    s.order_ += e;
    return s;
}

TSeries TSeries::truncated(long order) const {
    if (order >= order_) {
        if (order > order_) throw std::domain_error("TSeries::truncated cannot extend precision");
        return *this;
    }
    TSeries s;
    s.order_ = order;
    s.val_ = val_;
    if (s.val_ > order) return zero(order);
    s.c_.assign(c_.begin(), c_.begin() + (order - val_ + 1));
    s.renormalize();
    return s;
}

bool TSeries::equal_through(const TSeries& o, long n) const {
    if (order_ < n || o.order_ < n) throw std::domain_error("TSeries::equal_through beyond known order");
    long lo = std::min(val_, o.val_);
    for (long e = lo; e <= n; ++e)
        if (!(coeff(e) == o.coeff(e))) return false;
    return true;
}

std::string TSeries::str() const {
    std::string s = "t^" + std::to_string(val_) + "*(";
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c_[k].str() + ")";
        if (k == 1) s += "*t";
        if (k > 1) s += "*t^" + std::to_string(k);
    }
    if (first) s += "0";
    s += ")";
    return s;
}

TSeries TSeries::expand(const RatFun& f, long order) {
    if (f.is_zero()) return zero(order);
    const PolyQT& num = f.num();
    const PolyQT& den = f.den();
    const int a = num.min_t();
    const int b = den.min_t();
    // Pull out the pure t-powers; the remaining denominator must be a unit in
    // Q(q)[[t]], i.e. have a nonzero t^0 slice.
    PolyQT n0 = num.div_monomial(0, a);
    PolyQT d0 = den.div_monomial(0, b);
    PolyQT d_const = d0.t_slice(0);
    if (d_const.is_zero()) throw std::domain_error("TSeries::expand: denominator is not a unit");

    const long val0 = (long)a - (long)b;
    TSeries s;
    s.order_ = order;
    if (val0 > order) return zero(order);
    s.val_ = val0;
    const long len = order - val0 + 1;
    s.c_.assign(len, RatFun());

    const RatFun d_inv = RatFun(d_const).inverse();
    // c_k = (n_k - sum_{j<k} c_j d_{k-j}) / d_0 with n_k, d_j in Q[q].
    std::vector<PolyQT> nsl(len), dsl(len);
    for (long k = 0; k < len; ++k) {
        nsl[k] = n0.t_slice((int)k);
        dsl[k] = d0.t_slice((int)k);
    }
    for (long k = 0; k < len; ++k) {
        RatFun acc = RatFun(nsl[k]);
        for (long j = 0; j < k; ++j) {
            if (s.c_[j].is_zero() || dsl[k - j].is_zero()) continue;
            acc -= s.c_[j] * RatFun(dsl[k - j]);
        }
        s.c_[k] = acc * d_inv;
    }
    s.renormalize();
    return s;
}

} // namespace macvv
