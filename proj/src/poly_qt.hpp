#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace macvv {

// Exponent pair of a q^a * t^b monomial. Exponents are non-negative here;
// negative powers of either variable live in RatFun denominators.
struct QTExp {
    int32_t q = 0;
    int32_t t = 0;
    auto operator<=>(const QTExp&) const = default;
};

// Sparse bivariate polynomial over Q in the variables q and t.
//
// Terms are kept sorted by (q-exponent, t-exponent) ascending and never store
// a zero coefficient; this is the canonical form used for serialization.
class PolyQT {
  public:
    using Term = std::pair<QTExp, Rat>;

    PolyQT() = default;
    explicit PolyQT(long c) { *this = constant(rat(c)); }
    explicit PolyQT(const Rat& c) { *this = constant(c); }

    static PolyQT constant(const Rat& c);
    static PolyQT monomial(const Rat& c, int qe, int te);
    static PolyQT q_pow(int e) { return monomial(rat(1), e, 0); }
    static PolyQT t_pow(int e) { return monomial(rat(1), 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int deg_q() const;
    int deg_t() const;
    int min_q() const;
    int min_t() const;

    Rat coeff(int qe, int te) const;
    // Leading term in the canonical (q-exp, t-exp) lexicographic order.
    const Term& lead() const;

    PolyQT operator-() const;
    PolyQT operator+(const PolyQT& o) const;
    PolyQT operator-(const PolyQT& o) const;
    PolyQT operator*(const PolyQT& o) const;
    PolyQT& operator+=(const PolyQT& o) { return *this = *this + o; }
    PolyQT& operator-=(const PolyQT& o) { return *this = *this - o; }
    PolyQT& operator*=(const PolyQT& o) { return *this = *this * o; }
    bool operator==(const PolyQT& o) const { return terms_ == o.terms_; }

    // Structural order on canonical forms (container keys, gcd memo).
    bool operator<(const PolyQT& o) const;

    PolyQT scaled(const Rat& c) const;
    PolyQT mul_monomial(const Rat& c, int qe, int te) const;
    // Divide by a monomial that divides every term.
    PolyQT div_monomial(int qe, int te) const;

    Rat evaluate(const Rat& qv, const Rat& tv) const;

    // gcd of numerators / lcm of denominators of the coefficients, signed so
    // that content * primitive_part == *this with an integer-coprime,
    // positive-leading primitive part.
    Rat content() const;
    PolyQT primitive_part() const;

    // Substitutes t = 0 viewing the polynomial in t; returns the pure-q slice.
    PolyQT t_slice(int te) const;

    std::string str() const;

    // Builds from an unsorted/unmerged term list.
    static PolyQT from_terms(std::vector<Term> raw);

  private:
    std::vector<Term> terms_;
    void prune();
};

// Exact gcd over Q[q,t], primitive with positive leading coefficient
// (canonical up to nothing: the result is uniquely normalized).
// gcd(0,0) = 0.
PolyQT poly_gcd(const PolyQT& a, const PolyQT& b);

// Exact division; throws std::domain_error if b is zero or does not divide a.
PolyQT poly_div_exact(const PolyQT& a, const PolyQT& b);

} // namespace macvv
