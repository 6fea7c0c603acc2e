#include "pieri.hpp"

#include "linsolve.hpp"

namespace macvv {

std::vector<Filling> pieri_candidates(const Filling& T, int r) {
    if (r < 1) throw std::invalid_argument("pieri_candidates: r must be positive");
    const auto boxes = T.shape().boxes_row_major();
    const int n = (int)boxes.size();
    std::vector<Filling> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)pick.size() == r) {
            auto rows = T.rows();
            for (int p : pick) rows[boxes[p].row - 1][boxes[p].col - 1] += 1;
            Filling s(T.shape(), std::move(rows));
            if (s.is_rssyt()) out.push_back(std::move(s));
            return;
        }
        for (int p = from; p < n; ++p) {
            pick.push_back(p);
            self(self, p + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<OmegaFilling> pieri_candidates(const OmegaFilling& T, int r) {
    // Any box receiving a 1 lies within base^(rank+1), so a window of
    // rank + r always suffices.
    const int w = T.rank() + r;
    std::vector<OmegaFilling> out;
    for (auto& s : pieri_candidates(T.restrict_to(w), r)) out.emplace_back(T.base(), s);
    return out;
}

RatFun e_r_geometric(int r, int n) {
    // prod_i (1 + t^{i-1} z), coefficient of z^r.
    std::vector<PolyQT> coeffs(r + 1);
    coeffs[0] = PolyQT::constant(rat(1));
    for (int i = 0; i < n; ++i)
        for (int k = std::min(r, i + 1); k >= 1; --k)
            coeffs[k] += coeffs[k - 1] * PolyQT::t_pow(i);
    return RatFun(coeffs[r]);
}

RatFun gauss_binomial(int n, int r) {
    RatFun acc(1);
    for (int i = 1; i <= r; ++i) {
        PolyQT num = PolyQT::constant(rat(1)) - PolyQT::t_pow(n - r + i);
        PolyQT den = PolyQT::constant(rat(1)) - PolyQT::t_pow(i);
        acc *= RatFun(num, den);
    }
    return acc;
}

namespace {

// Reversed inversion product attached to the target class: the factor per
// inversion pair of Psi^r(tau) is (hi - lo)/(hi - lo*t).
RatFun pieri_target_coeff(const Filling& S, const Psyt& tau) {
    RatFun acc(1);
    for (auto& [b1, b2] : inversions(tau)) {
        RatFun hi = RatFun::q_pow(S.at(b1)) * RatFun::t_pow(content(b1));
        RatFun lo = RatFun::q_pow(S.at(b2)) * RatFun::t_pow(content(b2));
        acc *= (hi - lo) / (hi - lo * RatFun::t());
    }
    return acc;
}

} // namespace

RatFun pieri_coeff_formula(const Partition& shape, const Filling& S, const Filling& T, int r) {
    const int n = shape.box_count();
    if (r < 1 || r > n) throw std::invalid_argument("pieri_coeff_formula: r out of range");
    {
        bool found = false;
        for (auto& c : pieri_candidates(T, r)) found |= (c == S);
        if (!found) throw std::invalid_argument("pieri_coeff_formula: S is not a candidate target");
    }
    RatFun sum(0);
    for (auto& tau : enumerate_psyt(shape, T)) {
        Psyt up = psi_pow(tau, r);
        if (!(up.power_filling() == S)) continue;
        int csum = 0;
        for (int i = 1; i <= r; ++i) csum += tau.content_of_index(i);
        sum += RatFun::t_pow(csum) * p_inversion_coeff(T, tau) * pieri_target_coeff(S, up);
    }
    return RatFun::t_pow(r * (r - 1) / 2) * e_r_geometric(r, n) * k_coeff(shape, S) * sum;
}

PieriTable pieri_bruteforce(FBuilder& fb, const Partition& shape, const Filling& T, int r) {
    PieriTable table;
    const VElement w = mul_elementary(r, compute_P_formula(fb, shape, T));

    const auto cands = pieri_candidates(T, r);
    std::vector<VElement> cols;
    std::vector<std::size_t> top_index;
    std::vector<std::vector<Psyt>> classes;
    for (auto& S : cands) {
        auto cls = enumerate_psyt(shape, S);
        const Psyt top = top_of(shape, S);
        for (std::size_t j = 0; j < cls.size(); ++j) {
            if (cls[j] == top) top_index.push_back(cols.size() + j);
        }
        for (auto& tau : cls) cols.push_back(fb.F(tau));
        classes.push_back(std::move(cls));
    }

    auto coords = express_in_span(cols, w);
    if (!coords) return table; // support escaped the candidate classes

    VElement residual = w;
    for (std::size_t s = 0; s < cands.size(); ++s) {
        RatFun d = (*coords)[top_index[s]];
        table.entries.emplace_back(cands[s], d);
        residual = residual - compute_P_formula(fb, shape, cands[s]).scaled(d);
    }
    table.residual_zero = residual.is_zero();
    return table;
}

RatFun stable_pieri_coeff(const OmegaFilling& S, const OmegaFilling& T, int r) {
    const int n0 = T.rank() + r;
    RatFun d0 = pieri_coeff_formula(extended_shape(T.base(), n0), S.restrict_to(n0),
                                     T.restrict_to(n0), r);
    RatFun d1 = pieri_coeff_formula(extended_shape(T.base(), n0 + 1), S.restrict_to(n0 + 1),
                                     T.restrict_to(n0 + 1), r);
    if (!(d0 == d1))
        throw certification_error("stable_pieri_coeff: values differ across ranks for " + S.str());
    return d0;
}

} // namespace macvv
