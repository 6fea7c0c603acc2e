#include "limits.hpp"

namespace macvv {

OmegaFilling::OmegaFilling(Partition base, Filling on_window)
    : base_(std::move(base)), filling_(std::move(on_window)) {
    const int boxes = filling_.shape().box_count();
    window_ = boxes;
    if (window_ < min_rank(base_))
        throw std::invalid_argument("OmegaFilling: window below the minimal rank");
    if (filling_.shape() != extended_shape(base_, window_))
        throw std::invalid_argument("OmegaFilling: window filling is not on base^(window)");
    if (!filling_.is_rssyt())
        throw std::invalid_argument("OmegaFilling: restriction must be strictly column-decreasing");
}

int OmegaFilling::rank() const {
    // Zero outside base^(n) iff the first row carries no nonzero value past
    // column n - |base|.
    int last_nonzero_col = 0;
    for (int c = 1; c <= filling_.shape().part(1); ++c)
        if (filling_.at({1, c}) != 0) last_nonzero_col = c;
    return std::max(min_rank(base_), base_.box_count() + last_nonzero_col);
}

Filling OmegaFilling::restrict_to(int n) const {
    if (n < rank()) throw std::invalid_argument("OmegaFilling: restriction below the rank");
    const Partition shape = extended_shape(base_, n);
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= shape.rows(); ++r) {
        rows.emplace_back();
        for (int c = 1; c <= shape.part(r); ++c)
            rows.back().push_back(r == 1 && c > filling_.shape().part(1) ? 0
                                                                         : filling_.at({r, c}));
    }
    return Filling(shape, std::move(rows));
}

std::string OmegaFilling::str() const {
    return "base=" + base_.str() + " T=" + filling_.str();
}

VElement phi_map(const Partition& base, int n, const VElement& v) {
    const Partition big = extended_shape(base, n + 1);
    const Partition small = extended_shape(base, n);
    if (v.shape() != big) throw std::invalid_argument("phi_map: shape mismatch");
    const SytTable& tbl_small = SytTable::of(small);
    VElement out(small);
    for (auto& [k, c] : v.terms()) {
        if (k.alpha[n] != 0) continue;
        SemiElt r = restrict_q(base, n, SemiElt::basis(big, k.tab));
        if (r.is_zero()) continue;
        std::vector<int> alpha(k.alpha.begin(), k.alpha.end() - 1);
        for (auto& [tab2, c2] : r.coords()) out.add(VKey{alpha, tab2}, c * c2);
    }
    (void)tbl_small;
    return out;
}

RatFun content_scalar(const Partition& base, int n, int ell) {
    RatFun acc(0);
    for (auto& b : extended_shape(base, n).boxes_row_major())
        acc += RatFun::t_pow(ell * content(b));
    return acc;
}

VElement delta_truncated(const Partition& base, int n, int ell, const VElement& v) {
    if (v.shape() != extended_shape(base, n))
        throw std::invalid_argument("delta_truncated: shape mismatch");
    return act_P0l(ell, v) - v.scaled(content_scalar(base, n, ell));
}

RatFun delta_eigenvalue(const OmegaFilling& T, int ell) {
    RatFun acc(0);
    const Filling& f = T.window_filling();
    for (auto& b : f.shape().boxes_row_major()) {
        if (f.at(b) == 0) continue;
        acc += (RatFun::q_pow(ell * f.at(b)) - RatFun(1)) * RatFun::t_pow(ell * content(b));
    }
    return acc;
}

IntertwineReport intertwine_check(const Partition& base, int n, int ell, int degree) {
    IntertwineReport rep;
    const Partition big = extended_shape(base, n + 1);
    const SytTable& tbl = SytTable::of(big);
    const RatFun c_big = content_scalar(base, n + 1, ell);
    const RatFun c_small = content_scalar(base, n, ell);
    for (auto& alpha : compositions_up_to(n + 1, degree)) {
        for (int k = 0; k < tbl.size(); ++k) {
            VElement v = VElement::basis(big, alpha, k);
            VElement lhs = phi_map(base, n, act_P0l(ell, v, true) - v.scaled(c_big));
            VElement pv = phi_map(base, n, v);
            VElement rhs = act_P0l(ell, pv, true) - pv.scaled(c_small);
            ++rep.checked;
            if (!(lhs == rhs)) {
                rep.pass = false;
                if (rep.counterexample.empty())
                    rep.counterexample = "alpha/tab " + std::to_string(k);
            }
        }
    }
    return rep;
}

CompatibleFamily::CompatibleFamily(OmegaFilling T, int lo, int hi) : T_(T), lo_(lo), hi_(hi) {
    if (lo < T.rank() || hi < lo) throw std::invalid_argument("CompatibleFamily: bad window");
    for (int n = lo; n <= hi; ++n) {
        Partition shape = extended_shape(T.base(), n);
        entries_.push_back(compute_P_formula(FBuilder::of(shape), shape, T.restrict_to(n)));
    }
    for (int n = lo; n < hi; ++n) {
        if (!(phi_map(T.base(), n, at(n + 1)) == at(n)))
            throw certification_error("CompatibleFamily: connecting maps do not match at rank " +
                                      std::to_string(n));
    }
}

const VElement& CompatibleFamily::at(int n) const {
    if (n < lo_ || n > hi_) throw std::invalid_argument("CompatibleFamily: rank out of window");
    return entries_[n - lo_];
}

} // namespace macvv
