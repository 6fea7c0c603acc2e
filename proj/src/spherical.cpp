#include "spherical.hpp"

#include <algorithm>

namespace macvv {

RatFun t_factorial(int n) {
    PolyQT acc = PolyQT::constant(rat(1));
    for (int i = 1; i <= n; ++i) {
        PolyQT bracket; // 1 + t + ... + t^{i-1}
        for (int k = 0; k < i; ++k) bracket += PolyQT::t_pow(k);
        acc *= bracket;
    }
    return RatFun(acc);
}

RatFun t_factorial(const std::vector<int>& mu) {
    RatFun acc(1);
    for (int m : mu) acc *= t_factorial(m);
    return acc;
}

VElement act_word(const HeckeWord& w, const VElement& v) {
    VElement out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = act_T(*it, out);
    return out;
}

bool is_eps_invariant(const VElement& v) {
    for (int i = 1; i < v.rank(); ++i)
        if (!(act_T(i, v) == v)) return false;
    return true;
}

VElement epsilon_project(const VElement& v) {
    const int n = v.rank();
    const RatFun tinv = RatFun::t_pow(-1);
    // sum_sigma t^{-l(sigma)} T_sigma factors over nested coset sums.
    VElement s = v;
    for (int m = 2; m <= n; ++m) {
        VElement acc = s;
        VElement u = s;
        for (int j = m - 1; j >= 1; --j) {
            u = act_T(j, u).scaled(tinv);
            acc = acc + u;
        }
        s = std::move(acc);
    }
    return s.scaled(RatFun::t_pow(n * (n - 1) / 2) / t_factorial(n));
}

VElement epsilon_project_streaming(const VElement& v) {
    const int n = v.rank();
    const int choose2 = n * (n - 1) / 2;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    VElement acc(v.shape());
    do {
        const HeckeWord w = lex_first_reduced_word(perm);
        acc = acc + act_word(w, v).scaled(RatFun::t_pow(choose2 - perm_inversions(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.scaled(RatFun(1) / t_factorial(n));
}

RatFun p_inversion_coeff(const Filling& T, const Psyt& tau) {
    RatFun acc(1);
    for (auto& [b1, b2] : inversions(tau)) {
        RatFun hi = RatFun::q_pow(T.at(b1)) * RatFun::t_pow(content(b1));
        RatFun lo = RatFun::q_pow(T.at(b2)) * RatFun::t_pow(content(b2));
        acc *= (hi * RatFun::t() - lo) / (hi - lo);
    }
    return acc;
}

VElement compute_P_formula(FBuilder& fb, const Partition& shape, const Filling& T) {
    if (!T.is_rssyt())
        throw std::invalid_argument("compute_P_formula: filling must be strictly column-decreasing");
    VElement out(shape);
    for (auto& tau : enumerate_psyt(shape, T))
        out = out + fb.F(tau).scaled(p_inversion_coeff(T, tau));
    return out;
}

std::optional<RatFun> proportionality_ratio(const VElement& w, const VElement& v) {
    if (v.is_zero()) return std::nullopt;
    const auto& [k0, c0] = *v.terms().begin();
    RatFun r = w.coeff(k0) / c0;
    if (is_multiple_of(w, v, r)) return r;
    return std::nullopt;
}

bool is_multiple_of(const VElement& w, const VElement& v, const RatFun& s) {
    return w == v.scaled(s);
}

EpsLine eps_line_of_class(FBuilder& fb, const Partition& shape, const Filling& T) {
    EpsLine line;
    for (auto& tau : enumerate_psyt(shape, T)) {
        VElement g = epsilon_project(fb.F(tau));
        if (g.is_zero()) continue;
        if (line.dim == 0) {
            line.dim = 1;
            line.generator = std::move(g);
        } else if (!proportionality_ratio(g, line.generator)) {
            throw certification_error("eps_line_of_class: image dimension exceeds 1 for T=" +
                                      T.str());
        }
    }
    return line;
}

RatFun k_coeff(const Partition& shape, const Filling& T) {
    const FillingStats st = stats(shape, T);
    RatFun acc = t_factorial(st.mu) / t_factorial(shape.box_count());
    for (auto& [b1, b2] : inversions(min_of(shape, T))) {
        RatFun hi = RatFun::q_pow(T.at(b1)) * RatFun::t_pow(content(b1));
        RatFun lo = RatFun::q_pow(T.at(b2)) * RatFun::t_pow(content(b2));
        acc *= (hi - lo * RatFun::t()) / (hi - lo);
    }
    return acc;
}

VElement act_P0l(int ell, const VElement& v, bool full_path) {
    if (ell < 1) throw std::invalid_argument("act_P0l: ell must be positive");
    VElement u = full_path ? epsilon_project(v) : v;
    VElement acc(v.shape());
    for (int i = 1; i <= v.rank(); ++i) {
        VElement w = u;
        for (int k = 0; k < ell; ++k) w = act_theta(i, w);
        acc = acc + w;
    }
    return full_path ? epsilon_project(acc) : acc;
}

VElement act_Pl0(int ell, const VElement& v, bool full_path) {
    if (ell < 1) throw std::invalid_argument("act_Pl0: ell must be positive");
    VElement u = full_path ? epsilon_project(v) : v;
    VElement out = mul_powersum(ell, u).scaled(RatFun::q_pow(ell));
    return full_path ? epsilon_project(out) : out;
}

RatFun p0l_eigenvalue(const Filling& T, int ell) {
    RatFun acc(0);
    for (auto& b : T.shape().boxes_row_major())
        acc += RatFun::q_pow(ell * T.at(b)) * RatFun::t_pow(ell * content(b));
    return acc;
}

} // namespace macvv
