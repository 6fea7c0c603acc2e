#include "daha.hpp"

#include <algorithm>

namespace macvv {

VElement::VElement(Partition shape) : shape_(std::move(shape)), n_(shape_.box_count()) {}

VElement VElement::basis(const Partition& shape, std::vector<int> alpha, int tab) {
    VElement v(shape);
    if ((int)alpha.size() != v.n_) throw std::invalid_argument("VElement: exponent length mismatch");
    for (int e : alpha)
        if (e < 0) throw std::invalid_argument("VElement: negative exponent");
    v.terms_[VKey{std::move(alpha), tab}] = RatFun(1);
    return v;
}

VElement VElement::unit(const Partition& shape, int tab) {
    return basis(shape, std::vector<int>(shape.box_count(), 0), tab);
}

int VElement::max_degree() const {
    int d = 0;
    for (auto& [k, c] : terms_) {
        int s = 0;
        for (int e : k.alpha) s += e;
        d = std::max(d, s);
    }
    return d;
}

void VElement::add(const VKey& k, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VElement VElement::operator+(const VElement& o) const {
    VElement out(*this);
    for (auto& [k, c] : o.terms_) out.add(k, c);
    return out;
}

VElement VElement::operator-(const VElement& o) const {
    VElement out(*this);
    for (auto& [k, c] : o.terms_) out.add(k, -c);
    return out;
}

VElement VElement::scaled(const RatFun& s) const {
    VElement out(shape_);
    if (s.is_zero()) return out;
    for (auto& [k, c] : terms_) out.terms_[k] = c * s;
    return out;
}

bool VElement::operator==(const VElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (auto& [k, c] : terms_) {
        if (it->first != k || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

RatFun VElement::coeff(const VKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFun() : it->second;
}

std::string VElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const SytTable& tbl = SytTable::of(shape_);
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ")*X^[";
        for (std::size_t i = 0; i < k.alpha.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(k.alpha[i]);
        }
        s += "]*tab" + std::to_string(k.tab);
        (void)tbl;
    }
    return s;
}

VElement act_X(const std::vector<int>& alpha, const VElement& v) {
    if ((int)alpha.size() != v.rank()) throw std::invalid_argument("act_X: rank mismatch");
    VElement out(v.shape());
    for (auto& [k, c] : v.terms()) {
        VKey nk = k;
        for (int i = 0; i < v.rank(); ++i) nk.alpha[i] += alpha[i];
        out.add(nk, c);
    }
    return out;
}

VElement act_X_i(int i, const VElement& v) {
    std::vector<int> alpha(v.rank(), 0);
    alpha.at(i - 1) = 1;
    return act_X(alpha, v);
}

VElement act_T(int i, const VElement& v) {
    const SytTable& tbl = SytTable::of(v.shape());
    const int n = tbl.n();
    if (i < 1 || i >= n) throw std::invalid_argument("act_T: generator out of range");
    const RatFun tm1 = RatFun::t() - RatFun(1);
    VElement out(v.shape());
    for (auto& [k, c] : v.terms()) {
        // (s_i f) (x) T_i(u)
        VKey swapped = k;
        std::swap(swapped.alpha[i - 1], swapped.alpha[i]);
        const auto& g = tbl.gen(k.tab, i);
        out.add(VKey{swapped.alpha, k.tab}, c * g.diag);
        if (g.kind == SytTable::GenKind::Swap)
            out.add(VKey{swapped.alpha, g.partner}, c * g.off);
        // -(t-1) X_i (f - s_i f)/(X_i - X_{i+1}) (x) u
        const int a = k.alpha[i - 1], b = k.alpha[i];
        if (a != b) {
            const int lo = std::min(a, b), hi = std::max(a, b);
            const RatFun coef = (a > b) ? -(tm1 * c) : tm1 * c;
            VKey m = k;
            for (int kk = 0; kk < hi - lo; ++kk) {
                m.alpha[i - 1] = hi - kk;
                m.alpha[i] = lo + kk;
                out.add(m, coef);
            }
        }
    }
    return out;
}

VElement act_T_inv(int i, const VElement& v) {
    VElement out = act_T(i, v) + v.scaled(RatFun::t() - RatFun(1));
    return out.scaled(RatFun::t_pow(-1));
}

namespace {

// Per-shape cache of the rotation's tableau factor: t^{n-1} T_1^{-1} ...
// T_{n-1}^{-1} on each basis tableau, and t^{1-n} T_{n-1} ... T_1 for the
// inverse. The rotation is applied once per term, so these are hot.
struct PiWordCache {
    std::vector<SemiElt> fwd, bwd;
    static const PiWordCache& of(const Partition& shape) {
        static std::map<Partition, PiWordCache> registry;
        auto it = registry.find(shape);
        if (it != registry.end()) return it->second;
        PiWordCache c;
        const SytTable& tbl = SytTable::of(shape);
        const int n = tbl.n();
        for (int k = 0; k < tbl.size(); ++k) {
            SemiElt u = SemiElt::basis(shape, k);
            for (int j = n - 1; j >= 1; --j) u = act_T_inv(j, u);
            c.fwd.push_back(u.scaled(RatFun::t_pow(n - 1)));
            SemiElt w = SemiElt::basis(shape, k);
            for (int j = 1; j <= n - 1; ++j) w = act_T(j, w);
            c.bwd.push_back(w.scaled(RatFun::t_pow(1 - n)));
        }
        return registry.emplace(shape, std::move(c)).first->second;
    }
};

} // namespace

VElement act_pi(const VElement& v) {
    const int n = v.rank();
    const PiWordCache& cache = PiWordCache::of(v.shape());
    VElement out(v.shape());
    for (auto& [k, c] : v.terms()) {
        // Monomial part: q^{alpha_n} X^{rot alpha}.
        std::vector<int> rot(n);
        rot[0] = k.alpha[n - 1];
        for (int i = 1; i < n; ++i) rot[i] = k.alpha[i - 1];
        const RatFun coef = c * RatFun::q_pow(k.alpha[n - 1]);
        for (auto& [tab2, c2] : cache.fwd[k.tab].coords()) out.add(VKey{rot, tab2}, coef * c2);
    }
    return out;
}

VElement act_pi_inv(const VElement& v) {
    const int n = v.rank();
    const PiWordCache& cache = PiWordCache::of(v.shape());
    VElement out(v.shape());
    for (auto& [k, c] : v.terms()) {
        std::vector<int> rot(n);
        rot[n - 1] = k.alpha[0];
        for (int i = 0; i + 1 < n; ++i) rot[i] = k.alpha[i + 1];
        const RatFun coef = c * RatFun::q_pow(-k.alpha[0]);
        for (auto& [tab2, c2] : cache.bwd[k.tab].coords()) out.add(VKey{rot, tab2}, coef * c2);
    }
    return out;
}

namespace {

VElement act_theta1(const VElement& v) {
    const int n = v.rank();
    VElement u = v;
    for (int j = 1; j <= n - 1; ++j) u = act_T(j, u);
    u = act_pi(u);
    return u.scaled(RatFun::t_pow(1 - n));
}

} // namespace

VElement act_theta(int i, const VElement& v) {
    const int n = v.rank();
    if (i < 1 || i > n) throw std::invalid_argument("act_theta: index out of range");
    VElement u = v;
    for (int j = i - 1; j >= 1; --j) u = act_T_inv(j, u);
    u = act_theta1(u);
    for (int j = 1; j <= i - 1; ++j) u = act_T_inv(j, u);
    return u.scaled(RatFun::t_pow(i - 1));
}

VElement mul_elementary(int r, const VElement& v) {
    const int n = v.rank();
    if (r < 0 || r > n) throw std::invalid_argument("mul_elementary: r out of range");
    if (r == 0) return v;
    VElement out(v.shape());
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)pick.size() == r) {
            std::vector<int> alpha(n, 0);
            for (int p : pick) alpha[p] = 1;
            out = out + act_X(alpha, v);
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

VElement mul_powersum(int ell, const VElement& v) {
    const int n = v.rank();
    if (ell < 1) throw std::invalid_argument("mul_powersum: ell must be positive");
    VElement out(v.shape());
    for (int i = 0; i < n; ++i) {
        std::vector<int> alpha(n, 0);
        alpha[i] = ell;
        out = out + act_X(alpha, v);
    }
    return out;
}

FBuilder& FBuilder::of(const Partition& shape) {
    static std::map<Partition, FBuilder> registry;
    auto it = registry.find(shape);
    if (it == registry.end()) it = registry.emplace(shape, FBuilder(shape)).first;
    return it->second;
}

RatFun FBuilder::theta_eigenvalue(const Psyt& tau, int i) {
    return RatFun::q_pow(tau.power_of_index(i)) * RatFun::t_pow(tau.content_of_index(i));
}

const VElement& FBuilder::F(const Psyt& tau) {
    if (tau.shape() != shape_) throw std::invalid_argument("FBuilder: shape mismatch");
    auto it = memo_.find(tau);
    if (it != memo_.end()) return it->second;
    VElement built = build(tau);
    // Full spectrum certificate before the vector is ever used.
    for (int i = 1; i <= tau.size(); ++i) {
        if (!(act_theta(i, built) == built.scaled(theta_eigenvalue(tau, i))))
            throw certification_error("F_tau spectrum certificate failed at theta_" +
                                      std::to_string(i) + " for " + tau.str());
    }
    return memo_.emplace(tau, std::move(built)).first->second;
}

VElement FBuilder::build(const Psyt& tau) {
    const SytTable& tbl = SytTable::of(shape_);
    const int n = tau.size();
    if (tau.is_syt()) return VElement::unit(shape_, tbl.index_of(tau.to_syt()));

    // Prefer a descent s_i step; the intertwiner raises sigma = s_i(tau) back
    // to tau. Weights are taken on the lower tableau sigma.
    for (int i = 1; i < n; ++i) {
        if (!cover_down(tau, i)) continue;
        const Psyt sigma = *si_move(tau, i);
        const VElement& fs = F(sigma);
        RatFun a = theta_eigenvalue(sigma, i);
        RatFun b = theta_eigenvalue(sigma, i + 1);
        RatFun gap = (RatFun::t() - RatFun(1)) * b / (a - b);
        VElement out = act_T_inv(i, fs).scaled(RatFun::t()) + fs.scaled(gap);
        return out;
    }

    // No descent and not standard: the rotation applies.
    const Psyt sigma = psi_inv(tau);
    const VElement& fs = F(sigma);
    VElement out = act_pi_inv(fs);
    out = act_X_i(n, out);
    return out.scaled(RatFun::q_pow(sigma.power_of_index(1)));
}

bool RelationReport::all_pass() const {
    for (auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::vector<std::vector<int>> compositions_of(int n, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    if (n == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

std::vector<std::vector<int>> compositions_up_to(int n, int degree) {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= degree; ++d) {
        auto part = compositions_of(n, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

RelationReport relation_suite(const Partition& shape, int degree) {
    const SytTable& tbl = SytTable::of(shape);
    const int n = tbl.n();
    RelationReport rep;

    auto run = [&](const std::string& name, auto&& body) {
        RelationReport::Entry e;
        e.name = name;
        for (const auto& alpha : compositions_up_to(n, degree)) {
            for (int k = 0; k < tbl.size(); ++k) {
                VElement v = VElement::basis(shape, alpha, k);
                std::string why = body(v);
                ++e.checked;
                if (!why.empty()) {
                    e.pass = false;
                    if (e.counterexample.empty())
                        e.counterexample = why + " on X^alpha (x) tab" + std::to_string(k);
                }
            }
        }
        rep.entries.push_back(std::move(e));
    };

    const RatFun one(1), t = RatFun::t(), q = RatFun::q();

    run("hecke_quadratic", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i) {
            VElement lhs = act_T(i, act_T(i, v));
            VElement rhs = act_T(i, v).scaled(one - t) + v.scaled(t);
            if (!(lhs == rhs)) return "(T_i-1)(T_i+t) != 0 at i=" + std::to_string(i);
        }
        return {};
    });
    run("hecke_braid", [&](const VElement& v) -> std::string {
        for (int i = 1; i + 1 < n; ++i)
            if (!(act_T(i, act_T(i + 1, act_T(i, v))) == act_T(i + 1, act_T(i, act_T(i + 1, v)))))
                return "braid fails at i=" + std::to_string(i);
        return {};
    });
    run("hecke_commute", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (!(act_T(i, act_T(j, v)) == act_T(j, act_T(i, v))))
                    return "T_i T_j != T_j T_i";
        return {};
    });
    run("theta_commute", [&](const VElement& v) -> std::string {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!(act_theta(i, act_theta(j, v)) == act_theta(j, act_theta(i, v))))
                    return "theta_i theta_j != theta_j theta_i";
        return {};
    });
    run("theta_recursion", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i) {
            VElement rhs = act_T_inv(i, act_theta(i, act_T_inv(i, v))).scaled(t);
            if (!(act_theta(i + 1, v) == rhs)) return "theta_{i+1} != t T_i^-1 theta_i T_i^-1";
        }
        return {};
    });
    run("theta_T_commute", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                if (!(act_T(i, act_theta(j, v)) == act_theta(j, act_T(i, v))))
                    return "T_i theta_j != theta_j T_i";
            }
        return {};
    });
    run("x_commute", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!(act_X_i(i, act_X_i(j, v)) == act_X_i(j, act_X_i(i, v))))
                    return "X_i X_j != X_j X_i";
        return {};
    });
    run("x_recursion", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i) {
            VElement rhs = act_T_inv(i, act_X_i(i, act_T_inv(i, v))).scaled(t);
            if (!(act_X_i(i + 1, v) == rhs)) return "X_{i+1} != t T_i^-1 X_i T_i^-1";
        }
        return {};
    });
    run("x_T_commute", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                if (!(act_T(i, act_X_i(j, v)) == act_X_i(j, act_T(i, v))))
                    return "T_i X_j != X_j T_i";
            }
        return {};
    });
    run("pi_x_rotation", [&](const VElement& v) -> std::string {
        for (int i = 1; i < n; ++i)
            if (!(act_pi(act_X_i(i, v)) == act_X_i(i + 1, act_pi(v))))
                return "pi X_i != X_{i+1} pi";
        if (!(act_pi(act_X_i(n, v)) == act_X_i(1, act_pi(v)).scaled(q)))
            return "pi X_n != q X_1 pi";
        return {};
    });
    run("pi_invertible", [&](const VElement& v) -> std::string {
        if (!(act_pi_inv(act_pi(v)) == v)) return "pi_inv pi != id";
        if (!(act_pi(act_pi_inv(v)) == v)) return "pi pi_inv != id";
        return {};
    });
    run("rho_degree_zero", [&](const VElement& v) -> std::string {
        // On degree-0 vectors theta reduces to the finite seminormal action.
        bool deg0 = true;
        for (auto& [k, c] : v.terms())
            for (int e : k.alpha) deg0 &= (e == 0);
        if (!deg0) return {};
        for (int i = 1; i <= n; ++i) {
            VElement lhs = act_theta(i, v);
            VElement rhs(v.shape());
            for (auto& [k, c] : v.terms()) {
                SemiElt u = act_theta_bar(i, SemiElt::basis(v.shape(), k.tab));
                for (auto& [tb, cc] : u.coords()) rhs.add(VKey{k.alpha, tb}, c * cc);
            }
            if (!(lhs == rhs)) return "theta_i != theta_bar_i in degree 0";
        }
        return {};
    });

    return rep;
}

} // namespace macvv
