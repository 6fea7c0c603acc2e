#include "series.hpp"

namespace macvv {

namespace {

RatFun inversion_factor(int dv, int dc, int shift_num, int shift_den) {
    RatFun one(1);
    RatFun num = one - RatFun::q_pow(dv) * RatFun::t_pow(dc + shift_num);
    RatFun den = one - RatFun::q_pow(dv) * RatFun::t_pow(dc + shift_den);
    return num / den;
}

long ratfun_t_valuation(const RatFun& f) {
    if (f.is_zero()) throw std::domain_error("ratfun_t_valuation of zero");
    return (long)f.num().min_t() - (long)f.den().min_t();
}

// One tableau's contribution, exact through `order`, or nullopt when its
// valuation already exceeds the order.
std::optional<TSeries> term_series(const Filling& T, const Psyt& tau, long order) {
    const auto inv = inversions(tau);
    std::vector<RatFun> factors;
    long val = (long)inv.size();
    for (auto& [b1, b2] : inv) {
        RatFun f = inversion_factor(T.at(b2) - T.at(b1), content(b2) - content(b1), -1, +1);
        val += ratfun_t_valuation(f);
        factors.push_back(std::move(f));
    }
    if (val > order) return std::nullopt;
    const long rel = order - val;
    TSeries acc = TSeries::monomial(RatFun(1), (long)inv.size(), (long)inv.size() + rel);
    for (auto& f : factors) acc = acc * TSeries::expand(f, ratfun_t_valuation(f) + rel);
    return acc;
}

} // namespace

std::vector<Psyt> enumerate_apsyt_bounded(const OmegaFilling& T, long max_inv, int window) {
    if (window < T.rank()) throw std::invalid_argument("enumerate_apsyt_bounded: window below rank");
    const Partition shape = extended_shape(T.base(), window);
    std::vector<Psyt> out;
    for (auto& tau : enumerate_psyt(shape, T.restrict_to(window)))
        if ((long)inversion_count(tau) <= max_inv) out.push_back(tau);
    return out;
}

Psyt embed_window(const Partition& base, const Psyt& tau) {
    const int n = tau.size();
    const Partition bigger = extended_shape(base, n + 1);
    auto rows = tau.rows();
    rows[0].push_back(PLabel{n + 1, 0});
    return Psyt(bigger, std::move(rows));
}

bool window_embedding_preserves_inversions(const Partition& base, const Psyt& tau) {
    auto small = inversions(tau);
    auto big = inversions(embed_window(base, tau));
    return small == big;
}

TSeries lhs_series(const OmegaFilling& T, long order) {
    const int rk = T.rank();
    const Partition shape = extended_shape(T.base(), rk);
    const Filling Tr = T.restrict_to(rk);
    const RatFun one(1);

    RatFun f(1);
    for (auto& b : shape.boxes_row_major())
        f *= one - RatFun::q_pow(-Tr.at(b)) * RatFun::t_pow(rk - T.base().box_count() - content(b));
    RatFun den = t_factorial(stats(shape, Tr).mu);
    for (int i = 0; i < rk; ++i) den *= one - RatFun::t();
    f /= den;
    for (auto& [b1, b2] : inversions(min_of(shape, Tr)))
        f *= inversion_factor(Tr.at(b2) - Tr.at(b1), content(b2) - content(b1), 0, +1);
    return TSeries::expand(f, order);
}

TSeries rhs_series(const OmegaFilling& T, long order, int window_cap, int* window_used,
                   bool* stabilized) {
    if (window_cap <= 0) window_cap = T.rank() + (int)order + 6;
    auto window_sum = [&](int m) {
        TSeries acc = TSeries::zero(order);
        const Filling Tm = T.restrict_to(m);
        for (auto& tau : enumerate_psyt(extended_shape(T.base(), m), Tm)) {
            auto term = term_series(Tm, tau, order);
            if (term) acc = acc + term->truncated(order);
        }
        return acc;
    };
    TSeries prev = window_sum(T.rank());
    int m = T.rank();
    bool stable = false;
    while (m < window_cap) {
        ++m;
        TSeries cur = window_sum(m);
        if (cur.equal_through(prev, order)) {
            stable = true;
            prev = cur;
            break;
        }
        prev = cur;
    }
    if (window_used) *window_used = m;
    if (stabilized) *stabilized = stable;
    return prev;
}

IdentityReport verify_identity(const OmegaFilling& T, long order, int window_cap) {
    IdentityReport rep{T, order, TSeries::zero(order), TSeries::zero(order)};
    rep.lhs = lhs_series(T, order);
    rep.rhs = rhs_series(T, order, window_cap, &rep.window_used, &rep.stabilized);
    rep.verdict = rep.stabilized && rep.lhs.equal_through(rep.rhs, order);
    return rep;
}

} // namespace macvv
