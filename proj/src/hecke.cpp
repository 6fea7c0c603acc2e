#include "hecke.hpp"

#include <stdexcept>

namespace macvv {

namespace {

// Seminormal 2x2 data for a swap pair, written from the side of tau with
// a = c_tau(i), b = c_tau(i+1). The diagonal entry is (1-t)t^a/(t^a - t^b);
// the off-diagonal entry is 1 from the lower element and
// t - (t-1)^2 t^{a+b}/(t^a - t^b)^2 from the upper one. Both are pinned by
// the eigenvalue rules together with the quadratic relation.
RatFun swap_diag(int a, int b) {
    RatFun ta = RatFun::t_pow(a), tb = RatFun::t_pow(b);
    return (RatFun(1) - RatFun::t()) * ta / (ta - tb);
}

RatFun swap_off_upper(int a, int b) {
    RatFun ta = RatFun::t_pow(a), tb = RatFun::t_pow(b);
    RatFun d = ta - tb;
    RatFun tm1 = RatFun::t() - RatFun(1);
    return RatFun::t() - tm1 * tm1 * RatFun::t_pow(a + b) / (d * d);
}

} // namespace

SytTable::SytTable(const Partition& shape) : shape_(shape), n_(shape.box_count()) {
    tabs_ = enumerate_syt(shape);
    for (int k = 0; k < (int)tabs_.size(); ++k) index_[tabs_[k]] = k;
    contents_.resize(tabs_.size());
    boxes_.resize(tabs_.size());
    gens_.resize(tabs_.size());
    for (int k = 0; k < (int)tabs_.size(); ++k) {
        contents_[k].resize(n_);
        boxes_[k].resize(n_);
        for (int i = 1; i <= n_; ++i) {
            Box b = box_of_label(tabs_[k], i);
            boxes_[k][i - 1] = b;
            contents_[k][i - 1] = content(b);
        }
    }
    for (int k = 0; k < (int)tabs_.size(); ++k) {
        gens_[k].resize(std::max(0, n_ - 1));
        for (int i = 1; i <= n_ - 1; ++i) {
            Gen g;
            Box bi = boxes_[k][i - 1], bj = boxes_[k][i];
            if (bi.row == bj.row) {
                g.kind = GenKind::SameRow;
                g.diag = RatFun(1);
            } else if (bi.col == bj.col) {
                g.kind = GenKind::SameCol;
                g.diag = -RatFun::t();
            } else {
                g.kind = GenKind::Swap;
                Syt swapped = tabs_[k];
                swapped[bi.row - 1][bi.col - 1] = i + 1;
                swapped[bj.row - 1][bj.col - 1] = i;
                g.partner = index_.at(swapped);
                const int a = contents_[k][i - 1], b = contents_[k][i];
                g.diag = swap_diag(a, b);
                g.off = a > b ? RatFun(1) : swap_off_upper(a, b);
            }
            gens_[k][i - 1] = std::move(g);
        }
    }
}

const SytTable& SytTable::of(const Partition& shape) {
    static std::map<Partition, SytTable> registry;
    auto it = registry.find(shape);
    if (it == registry.end()) it = registry.emplace(shape, SytTable(shape)).first;
    return it->second;
}

int SytTable::index_of(const Syt& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("SytTable: unknown tableau");
    return it->second;
}

SemiElt SemiElt::basis(const Partition& shape, int tab_index) {
    SemiElt v(shape);
    v.c_[tab_index] = RatFun(1);
    return v;
}

void SemiElt::add(int tab, const RatFun& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(tab, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SemiElt SemiElt::operator+(const SemiElt& o) const {
    SemiElt out(*this);
    for (auto& [k, c] : o.c_) out.add(k, c);
    return out;
}

SemiElt SemiElt::operator-(const SemiElt& o) const {
    SemiElt out(*this);
    for (auto& [k, c] : o.c_) out.add(k, -c);
    return out;
}

SemiElt SemiElt::scaled(const RatFun& s) const {
    SemiElt out(shape_);
    if (s.is_zero()) return out;
    for (auto& [k, c] : c_) out.c_[k] = c * s;
    return out;
}

bool SemiElt::operator==(const SemiElt& o) const {
    if (c_.size() != o.c_.size()) return false;
    auto it = o.c_.begin();
    for (auto& [k, c] : c_) {
        if (it->first != k || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

SemiElt act_T(int i, const SemiElt& v) {
    const SytTable& tbl = SytTable::of(v.shape());
    if (i < 1 || i >= tbl.n()) throw std::invalid_argument("act_T: generator out of range");
    SemiElt out(v.shape());
    for (auto& [k, c] : v.coords()) {
        const auto& g = tbl.gen(k, i);
        out.add(k, c * g.diag);
        if (g.kind == SytTable::GenKind::Swap) out.add(g.partner, c * g.off);
    }
    return out;
}

SemiElt act_T_inv(int i, const SemiElt& v) {
    // T_i^{-1} = t^{-1}(T_i + (t-1)) from the quadratic relation.
    const RatFun tinv = RatFun::t_pow(-1);
    SemiElt out = act_T(i, v);
    out = out + v.scaled(RatFun::t() - RatFun(1));
    return out.scaled(tinv);
}

SemiElt act_theta_bar(int i, const SemiElt& v) {
    const SytTable& tbl = SytTable::of(v.shape());
    if (i < 1 || i > tbl.n()) throw std::invalid_argument("act_theta_bar: index out of range");
    SemiElt out(v.shape());
    for (auto& [k, c] : v.coords()) out.add(k, c * RatFun::t_pow(tbl.content_of(k, i)));
    return out;
}

SemiElt act_word(const HeckeWord& w, const SemiElt& v) {
    SemiElt out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = act_T(*it, out);
    return out;
}

SemiElt restrict_q(const Partition& base, int n, const SemiElt& v) {
    const Partition big = extended_shape(base, n + 1);
    const Partition small = extended_shape(base, n);
    if (v.shape() != big) throw std::invalid_argument("restrict_q: shape mismatch");
    const SytTable& tbl = SytTable::of(big);
    const SytTable& tbl_small = SytTable::of(small);
    const Box added{1, big.part(1)};
    SemiElt out(small);
    for (auto& [k, c] : v.coords()) {
        if (tbl.box_of(k, n + 1) != added) continue;
        Syt s = tbl.tab(k);
        s[0].pop_back();
        out.add(tbl_small.index_of(s), c);
    }
    return out;
}

int perm_inversions(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

HeckeWord lex_first_reduced_word(std::vector<int> p) {
    const int n = (int)p.size();
    std::vector<int> pos(n + 1);
    for (int j = 0; j < n; ++j) pos[p[j]] = j;
    HeckeWord w;
    for (;;) {
        int best = 0;
        for (int i = 1; i < n; ++i)
            if (pos[i] > pos[i + 1]) {
                best = i;
                break;
            }
        if (!best) break;
        w.push_back(best);
        std::swap(p[pos[best]], p[pos[best + 1]]);
        std::swap(pos[best], pos[best + 1]);
    }
    return w;
}

} // namespace macvv
