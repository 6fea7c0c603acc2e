#include "poly_qt.hpp"

#include <algorithm>
#include <map>

namespace macvv {

void PolyQT::prune() {
    std::erase_if(terms_, [](const Term& t) { return rat_is_zero(t.second); });
}

PolyQT PolyQT::from_terms(std::vector<Term> raw) {
    std::map<QTExp, Rat> acc;
    for (auto& [e, c] : raw) acc[e] += c;
    PolyQT p;
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!rat_is_zero(c)) p.terms_.emplace_back(e, std::move(c));
    return p;
}

PolyQT PolyQT::constant(const Rat& c) {
    PolyQT p;
    if (!rat_is_zero(c)) p.terms_.emplace_back(QTExp{0, 0}, c);
    return p;
}

PolyQT PolyQT::monomial(const Rat& c, int qe, int te) {
    if (qe < 0 || te < 0) throw std::invalid_argument("PolyQT: negative exponent");
    PolyQT p;
    if (!rat_is_zero(c)) p.terms_.emplace_back(QTExp{qe, te}, c);
    return p;
}

bool PolyQT::is_one() const {
    return terms_.size() == 1 && terms_[0].first == QTExp{0, 0} && terms_[0].second == 1;
}

bool PolyQT::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == QTExp{0, 0});
}

int PolyQT::deg_q() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, (int)e.q);
    return d;
}

int PolyQT::deg_t() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, (int)e.t);
    return d;
}

int PolyQT::min_q() const {
    if (terms_.empty()) return 0;
    int d = terms_[0].first.q;
    for (auto& [e, c] : terms_) d = std::min(d, (int)e.q);
    return d;
}

int PolyQT::min_t() const {
    if (terms_.empty()) return 0;
    int d = terms_[0].first.t;
    for (auto& [e, c] : terms_) d = std::min(d, (int)e.t);
    return d;
}

Rat PolyQT::coeff(int qe, int te) const {
    QTExp key{qe, te};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const QTExp& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return Rat(0);
}

const PolyQT::Term& PolyQT::lead() const {
    if (terms_.empty()) throw std::domain_error("PolyQT::lead on zero polynomial");
    return terms_.back();
}

PolyQT PolyQT::operator-() const {
    PolyQT p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

PolyQT PolyQT::operator+(const PolyQT& o) const {
    PolyQT out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first < b->first) {
            out.terms_.push_back(*a++);
        } else if (b->first < a->first) {
            out.terms_.push_back(*b++);
        } else {
            Rat c = a->second + b->second;
            if (!rat_is_zero(c)) out.terms_.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, o.terms_.end());
    return out;
}

PolyQT PolyQT::operator-(const PolyQT& o) const { return *this + (-o); }

bool PolyQT::operator<(const PolyQT& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
        int c = cmp(terms_[i].second, o.terms_[i].second);
        if (c != 0) return c < 0;
    }
    return false;
}

PolyQT PolyQT::operator*(const PolyQT& o) const {
    if (is_zero() || o.is_zero()) return PolyQT();
    if (is_monomial()) return o.mul_monomial(terms_[0].second, terms_[0].first.q, terms_[0].first.t);
    if (o.is_monomial()) return mul_monomial(o.terms_[0].second, o.terms_[0].first.q, o.terms_[0].first.t);
    std::map<QTExp, Rat> acc;
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_)
            acc[QTExp{ea.q + eb.q, ea.t + eb.t}] += ca * cb;
    PolyQT out;
    out.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!rat_is_zero(c)) out.terms_.emplace_back(e, std::move(c));
    return out;
}

PolyQT PolyQT::scaled(const Rat& c) const {
    if (rat_is_zero(c)) return PolyQT();
    PolyQT p(*this);
    for (auto& [e, cc] : p.terms_) cc *= c;
    return p;
}

PolyQT PolyQT::mul_monomial(const Rat& c, int qe, int te) const {
    if (rat_is_zero(c)) return PolyQT();
    PolyQT p(*this);
    for (auto& [e, cc] : p.terms_) {
        e.q += qe;
        e.t += te;
        cc *= c;
    }
    return p;
}

PolyQT PolyQT::div_monomial(int qe, int te) const {
    PolyQT p(*this);
    for (auto& [e, cc] : p.terms_) {
        if (e.q < qe || e.t < te) throw std::domain_error("PolyQT::div_monomial: not divisible");
        e.q -= qe;
        e.t -= te;
    }
    return p;
}

Rat PolyQT::evaluate(const Rat& qv, const Rat& tv) const {
    Rat out(0);
    std::vector<Rat> qp{Rat(1)}, tp{Rat(1)};
    for (auto& [e, c] : terms_) {
        while ((int)qp.size() <= e.q) qp.push_back(qp.back() * qv);
        while ((int)tp.size() <= e.t) tp.push_back(tp.back() * tv);
        out += c * qp[e.q] * tp[e.t];
    }
    return out;
}

Rat PolyQT::content() const {
    if (terms_.empty()) return Rat(0);
    mpz_class g(0), l(1);
    for (auto& [e, c] : terms_) {
        mpz_class num = c.get_num();
        mpz_class den = c.get_den();
        mpz_class an = abs(num);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), an.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Rat cont(g, l);
    cont.canonicalize();
    if (sgn(terms_.back().second) < 0) cont = -cont;
    return cont;
}

PolyQT PolyQT::primitive_part() const {
    if (terms_.empty()) return PolyQT();
    Rat c = content();
    PolyQT p(*this);
    for (auto& [e, cc] : p.terms_) cc /= c;
    return p;
}

PolyQT PolyQT::t_slice(int te) const {
    PolyQT p;
    for (auto& [e, c] : terms_)
        if (e.t == te) p.terms_.emplace_back(QTExp{e.q, 0}, c);
    return p;
}

std::string PolyQT::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += rat_str(c);
        if (e.q == 1)
            s += "*q";
        else if (e.q > 1)
            s += "*q^" + std::to_string(e.q);
        if (e.t == 1)
            s += "*t";
        else if (e.t > 1)
            s += "*t^" + std::to_string(e.t);
    }
    return s;
}

// ---------------------------------------------------------------------------
// gcd machinery: primitive PRS on Q[q][t], with a univariate PRS underneath
// and a modular coprimality filter in front of it.
// ---------------------------------------------------------------------------

namespace {

// Arithmetic mod a fixed 61-bit prime for the coprimality filter.
constexpr uint64_t kP = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) { return (uint64_t)((__uint128_t)a * b % kP); }

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// Rational coefficient mod p; false when the denominator vanishes.
// mpz_fdiv_ui uses floor division, so the result is already in [0, p).
bool coeff_mod(const Rat& c, uint64_t& out) {
    uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), kP);
    if (den == 0) return false;
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), kP);
    out = mulmod(num, powmod(den, kP - 2));
    return true;
}

// Collapse one variable at a fixed point, returning a dense polynomial in the
// other; true on success.
bool project_mod(const PolyQT& a, bool keep_t, uint64_t point, std::vector<uint64_t>& out) {
    int deg = keep_t ? a.deg_t() : a.deg_q();
    out.assign(deg + 1, 0);
    for (auto& [e, c] : a.terms()) {
        uint64_t cc;
        if (!coeff_mod(c, cc)) return false;
        uint64_t scale = powmod(point % kP, keep_t ? e.q : e.t);
        int idx = keep_t ? e.t : e.q;
        out[idx] = (out[idx] + mulmod(cc, scale)) % kP;
    }
    return true;
}

int gcd_degree_mod(std::vector<uint64_t> a, std::vector<uint64_t> b) {
    auto trim = [](std::vector<uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        uint64_t inv = powmod(b.back(), kP - 2);
        while (a.size() >= b.size()) {
            uint64_t f = mulmod(a.back(), inv);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = mulmod(f, b[i]);
                a[off + i] = (a[off + i] + kP - sub) % kP;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? -1 : (int)a.size() - 1;
}

// Certified coprimality: projections can only lose gcd degree when the guarded
// leading coefficient vanishes, so "trivial in both projections with nonzero
// projected leading terms" proves the gcd is a unit.
bool surely_coprime(const PolyQT& a, const PolyQT& b) {
    constexpr uint64_t q0 = 1009, t0 = 2003;
    std::vector<uint64_t> pa, pb;
    // t-side: evaluate q = q0.
    if (!project_mod(a, true, q0, pa) || !project_mod(b, true, q0, pb)) return false;
    if (pa.empty() || pa.back() == 0) return false; // leading-coefficient guard
    if (gcd_degree_mod(pa, pb) != 0) return false;
    // q-side: evaluate t = t0.
    if (!project_mod(a, false, t0, pa) || !project_mod(b, false, t0, pb)) return false;
    if (pa.empty() || pa.back() == 0) return false;
    return gcd_degree_mod(pa, pb) == 0;
}

// Dense univariate polynomial in q, coefficient of q^i at index i.
using UniQ = std::vector<Rat>;

void uq_trim(UniQ& a) {
    while (!a.empty() && rat_is_zero(a.back())) a.pop_back();
}

bool uq_is_zero(const UniQ& a) { return a.empty(); }

UniQ uq_scale(const UniQ& a, const Rat& c) {
    UniQ out(a);
    for (auto& x : out) x *= c;
    uq_trim(out);
    return out;
}

UniQ uq_mul(const UniQ& a, const UniQ& b) {
    if (a.empty() || b.empty()) return {};
    UniQ out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    uq_trim(out);
    return out;
}

UniQ uq_sub(const UniQ& a, const UniQ& b) {
    UniQ out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    uq_trim(out);
    return out;
}

Rat uq_content(const UniQ& a) {
    mpz_class g(0), l(1);
    for (auto& c : a) {
        if (rat_is_zero(c)) continue;
        mpz_class an = abs(mpz_class(c.get_num()));
        mpz_class den = c.get_den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), an.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Rat cont(g, l);
    cont.canonicalize();
    if (!a.empty() && sgn(a.back()) < 0) cont = -cont;
    return cont;
}

UniQ uq_primitive(const UniQ& a) {
    if (a.empty()) return a;
    Rat c = uq_content(a);
    UniQ out(a);
    for (auto& x : out) x /= c;
    return out;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero).
UniQ uq_pseudo_rem(UniQ a, const UniQ& b) {
    const Rat lc = b.back();
    const int db = (int)b.size() - 1;
    while (!a.empty() && (int)a.size() - 1 >= db) {
        const int shift = (int)a.size() - 1 - db;
        const Rat top = a.back();
        UniQ scaled = uq_scale(a, lc);
        UniQ sub(shift, Rat(0));
        for (auto& c : b) sub.push_back(c * top);
        a = uq_sub(scaled, sub);
    }
    return a;
}

UniQ uq_gcd(UniQ a, UniQ b) {
    uq_trim(a);
    uq_trim(b);
    if (a.empty()) return uq_primitive(b);
    if (b.empty()) return uq_primitive(a);
    a = uq_primitive(a);
    b = uq_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        UniQ r = uq_pseudo_rem(a, b);
        a = std::move(b);
        b = uq_primitive(r);
    }
    return a;
}

// Exact division of univariates; remainder must vanish.
UniQ uq_div_exact(const UniQ& a, const UniQ& b) {
    if (b.empty()) throw std::domain_error("uq_div_exact: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::domain_error("uq_div_exact: not divisible");
    UniQ rem(a), quot(a.size() - b.size() + 1, Rat(0));
    const Rat lc = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        const int shift = (int)(rem.size() - b.size());
        Rat f = rem.back() / lc;
        quot[shift] = f;
        UniQ sub(shift, Rat(0));
        for (auto& c : b) sub.push_back(c * f);
        rem = uq_sub(rem, sub);
    }
    if (!rem.empty()) throw std::domain_error("uq_div_exact: not divisible");
    uq_trim(quot);
    return quot;
}

// Bivariate as a dense vector in t with UniQ coefficients.
using BiT = std::vector<UniQ>;

void bt_trim(BiT& a) {
    while (!a.empty() && uq_is_zero(a.back())) a.pop_back();
}

BiT to_bit(const PolyQT& p) {
    BiT out(p.is_zero() ? 0 : p.deg_t() + 1);
    for (auto& [e, c] : p.terms()) {
        auto& slice = out[e.t];
        if ((int)slice.size() <= e.q) slice.resize(e.q + 1, Rat(0));
        slice[e.q] = c;
    }
    for (auto& s : out) uq_trim(s);
    bt_trim(out);
    return out;
}

PolyQT from_bit(const BiT& a) {
    std::vector<PolyQT::Term> raw;
    for (int te = 0; te < (int)a.size(); ++te)
        for (int qe = 0; qe < (int)a[te].size(); ++qe)
            if (!rat_is_zero(a[te][qe])) raw.emplace_back(QTExp{qe, te}, a[te][qe]);
    return PolyQT::from_terms(std::move(raw));
}

UniQ bt_content(const BiT& a) {
    UniQ g;
    for (auto& s : a) {
        if (uq_is_zero(s)) continue;
        g = uq_gcd(g, s);
        if (g.size() == 1) break;
    }
    return g;
}

BiT bt_div_uq(const BiT& a, const UniQ& d) {
    BiT out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = uq_is_zero(a[i]) ? UniQ{} : uq_div_exact(a[i], d);
    return out;
}

BiT bt_primitive(const BiT& a) {
    if (a.empty()) return a;
    return bt_div_uq(a, bt_content(a));
}

BiT bt_scale_uq(const BiT& a, const UniQ& c) {
    BiT out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = uq_mul(a[i], c);
    bt_trim(out);
    return out;
}

BiT bt_sub(const BiT& a, const BiT& b) {
    BiT out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        UniQ x = i < a.size() ? a[i] : UniQ{};
        UniQ y = i < b.size() ? b[i] : UniQ{};
        out[i] = uq_sub(x, y);
    }
    bt_trim(out);
    return out;
}

// Pseudo-remainder in t of a by b (deg_t a >= deg_t b, b nonzero).
BiT bt_pseudo_rem(BiT a, const BiT& b) {
    const UniQ lc = b.back();
    const int db = (int)b.size() - 1;
    while (!a.empty() && (int)a.size() - 1 >= db) {
        const int shift = (int)a.size() - 1 - db;
        const UniQ top = a.back();
        BiT scaled = bt_scale_uq(a, lc);
        BiT sub(shift);
        for (auto& s : b) sub.push_back(uq_mul(s, top));
        a = bt_sub(scaled, sub);
    }
    return a;
}

} // namespace

PolyQT poly_gcd(const PolyQT& a, const PolyQT& b) {
    if (a.is_zero()) return b.is_zero() ? PolyQT() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_monomial() || b.is_monomial()) {
        int qe = std::min(a.min_q(), b.min_q());
        int te = std::min(a.min_t(), b.min_t());
        return PolyQT::monomial(rat(1), qe, te);
    }
    if (a == b) return a.primitive_part();
    // Common monomial factor first; it keeps the PRS small.
    const int mq = std::min(a.min_q(), b.min_q());
    const int mt = std::min(a.min_t(), b.min_t());
    const PolyQT a1 = a.div_monomial(a.min_q(), a.min_t());
    const PolyQT b1 = b.div_monomial(b.min_q(), b.min_t());
    if (surely_coprime(a1, b1) || surely_coprime(b1, a1))
        return PolyQT::monomial(rat(1), mq, mt);

    // The expensive pairs recur heavily (denominators are drawn from a small
    // pool of eigenvalue-difference products), so the PRS result is cached.
    static std::map<std::pair<PolyQT, PolyQT>, PolyQT> memo;
    const bool flip = b1 < a1;
    std::pair<PolyQT, PolyQT> key = flip ? std::make_pair(b1, a1) : std::make_pair(a1, b1);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second.mul_monomial(rat(1), mq, mt);

    BiT A = to_bit(a1);
    BiT B = to_bit(b1);

    UniQ ca = bt_content(A), cb = bt_content(B);
    BiT pa = bt_div_uq(A, ca), pb = bt_div_uq(B, cb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty() && (int)pb.size() - 1 > 0) {
        BiT r = bt_pseudo_rem(pa, pb);
        pa = std::move(pb);
        pb = bt_primitive(r);
    }
    BiT pp_gcd;
    if (pb.empty()) {
        pp_gcd = pa;
    } else {
        // Remainder of t-degree 0: primitive parts are coprime in t.
        pp_gcd = BiT{UniQ{Rat(1)}};
    }
    UniQ cg = uq_gcd(ca, cb);
    BiT g = bt_scale_uq(pp_gcd, cg);
    PolyQT out = from_bit(g).primitive_part();
    memo.emplace(std::move(key), out);
    return out.mul_monomial(rat(1), mq, mt);
}

PolyQT poly_div_exact(const PolyQT& a, const PolyQT& b) {
    if (b.is_zero()) throw std::domain_error("poly_div_exact: division by zero");
    if (a.is_zero()) return PolyQT();
    if (b.is_monomial()) {
        auto& [e, c] = b.lead();
        return a.div_monomial(e.q, e.t).scaled(1 / c);
    }
    PolyQT rem(a);
    std::vector<PolyQT::Term> quot;
    const auto& [eb, cb] = b.lead();
    while (!rem.is_zero()) {
        const auto& [ea, ca] = rem.lead();
        if (ea.q < eb.q || ea.t < eb.t) throw std::domain_error("poly_div_exact: not divisible");
        QTExp e{ea.q - eb.q, ea.t - eb.t};
        Rat c = ca / cb;
        quot.emplace_back(e, c);
        rem = rem - b.mul_monomial(c, e.q, e.t);
    }
    return PolyQT::from_terms(std::move(quot));
}

} // namespace macvv
