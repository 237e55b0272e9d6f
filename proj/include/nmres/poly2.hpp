#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nmres/gauss_rat.hpp"

namespace nmres {

/// Exponent pair (i, j) of a monomial a0^i * b0^j.
using ExpPair = std::pair<int, int>;

/// Sparse bivariate polynomial in the formal parameters a0, b0 with
/// Gaussian-rational coefficients. Terms are kept in lexicographic order
/// (a0-major); zero coefficients are never stored.
class Poly2 {
  public:
    Poly2() = default;

    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return constant(GaussRat(1)); }
    static Poly2 constant(const GaussRat& c);
    static Poly2 a0() { return monomial(1, 0, GaussRat(1)); }
    static Poly2 b0() { return monomial(0, 1, GaussRat(1)); }
    static Poly2 monomial(int deg_a, int deg_b, const GaussRat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    int total_degree() const;

    /// Leading term under lex order with a0 > b0. Precondition: nonzero.
    std::pair<ExpPair, GaussRat> leading() const;

    const std::map<ExpPair, GaussRat>& terms() const { return terms_; }

    GaussRat eval(const GaussRat& a, const GaussRat& b) const;

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& p, const Poly2& q);
    friend Poly2 operator-(const Poly2& p, const Poly2& q);
    friend Poly2 operator*(const Poly2& p, const Poly2& q);
    Poly2& operator+=(const Poly2& q) { *this = *this + q; return *this; }
    Poly2& operator-=(const Poly2& q) { *this = *this - q; return *this; }
    Poly2& operator*=(const Poly2& q) { *this = *this * q; return *this; }

    Poly2 scaled(const GaussRat& c) const;
    Poly2 pow(unsigned e) const;

    friend bool operator==(const Poly2& p, const Poly2& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const Poly2& p, const Poly2& q) { return !(p == q); }

    /// Exact quotient p/d, or nullopt when d does not divide p.
    static std::optional<Poly2> div_exact(const Poly2& p, const Poly2& d);

    /// Monic (lex-leading coefficient 1) greatest common divisor over Q(i).
    /// Content-and-primitive-part over Q(i)[b0], primitive pseudo-remainder
    /// sequence in a0.
    static Poly2 gcd(const Poly2& p, const Poly2& q);

    std::string to_string() const;

  private:
    void add_term(ExpPair e, const GaussRat& c);
    std::map<ExpPair, GaussRat> terms_;
};

}  // namespace nmres
