#include "bruhat.hpp"

#include <algorithm>
#include <numeric>

namespace macvv {

bool bruhat_le(const std::vector<int>& u, const std::vector<int>& w) {
    const int n = (int)u.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cw = 0;
            for (int k = 0; k < i; ++k) {
                cu += u[k] >= j;
                cw += w[k] >= j;
            }
            if (cu > cw) return false;
        }
    return true;
}

std::vector<int> min_sorting_perm(const std::vector<int>& beta) {
    const int n = (int)beta.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return beta[a] > beta[b]; });
    std::vector<int> w(n);
    for (int j = 0; j < n; ++j) w[j] = idx[j] + 1;
    return w;
}

bool composition_bruhat_less(const std::vector<int>& beta, const std::vector<int>& nu) {
    if (beta == nu) return false;
    std::vector<int> sb(beta), sn(nu);
    std::sort(sb.begin(), sb.end(), std::greater<int>());
    std::sort(sn.begin(), sn.end(), std::greater<int>());
    if (sb != sn) {
        // Strict dominance of the sorted vectors.
        long pa = 0, pb = 0;
        for (std::size_t i = 0; i < sb.size(); ++i) {
            pa += sb[i];
            pb += sn[i];
            if (pa > pb) return false;
        }
        return pa == pb;
    }
    // Same orbit: the dominant rearrangement is the maximum; more scrambled
    // compositions have Bruhat-larger minimal sorting permutations.
    return bruhat_le(min_sorting_perm(nu), min_sorting_perm(beta));
}

std::string check_top_triangularity(FBuilder& fb, const Partition& shape, const Filling& T) {
    const SytTable& tbl = SytTable::of(shape);
    const FillingStats st = stats(shape, T);
    const Psyt top = top_of(shape, T);
    const VElement& f = fb.F(top);

    const VKey lead{st.nu, tbl.index_of(st.s)};
    const RatFun expect = RatFun::t_pow((int)-st.b);
    if (!(f.coeff(lead) == expect))
        return "leading coefficient is not t^{-b_T} for T=" + T.str();
    for (auto& [k, c] : f.terms()) {
        if (k.alpha == st.nu) {
            if (k.tab != lead.tab) return "extra tableau at the leading exponent for T=" + T.str();
            continue;
        }
        if (!composition_bruhat_less(k.alpha, st.nu))
            return "non-comparable exponent in F_Top for T=" + T.str();
    }
    return {};
}

} // namespace macvv
