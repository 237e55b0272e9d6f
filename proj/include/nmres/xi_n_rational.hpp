#pragma once

#include <map>

#include "nmres/xi_poly.hpp"

namespace nmres {

/// Pole location: the two roots of 1 + xi_n^2.
enum class Pole { PlusI, MinusI };

/// (pole, multiplicity) key of one partial-fraction term.
struct PoleKey {
    Pole pole;
    int mult;
    friend bool operator<(const PoleKey& x, const PoleKey& y) {
        if (x.pole != y.pole) return x.pole < y.pole;
        return x.mult < y.mult;
    }
    friend bool operator==(const PoleKey& x, const PoleKey& y) {
        return x.pole == y.pole && x.mult == y.mult;
    }
};

/// Rational function of the normal covariable xi_n with matrix-valued
/// (xi'-polynomial) coefficients, poles confined to +-i, held in canonical
/// partial-fraction form: a polynomial part plus numerator/(xi_n - p)^k
/// terms with xi_n-free numerators.
class XiNRational {
  public:
    explicit XiNRational(int n = 4) : n_(n) {}

    /// Decomposes num(xi_n) / (1+xi_n^2)^m exactly. num is indexed by
    /// xi_n power.
    static XiNRational from_quotient(std::vector<FiberPoly> num, int m);

    static XiNRational poly_part_only(std::vector<FiberPoly> poly);

    int n() const { return n_; }
    bool is_zero() const;

    const std::vector<FiberPoly>& poly() const { return poly_; }
    const std::map<PoleKey, FiberPoly>& pole_terms() const { return pole_terms_; }

    void set_pole_term(const PoleKey& k, FiberPoly num);

    friend XiNRational operator+(const XiNRational& x, const XiNRational& y);
    friend XiNRational operator-(const XiNRational& x, const XiNRational& y);
    XiNRational operator-() const;
    XiNRational scaled(const ParamScalar& c) const;
    XiNRational left_mul(const FiberEndo& m) const;

    /// Exact product (re-decomposed into canonical partial fractions).
    friend XiNRational operator*(const XiNRational& x, const XiNRational& y);

    friend bool operator==(const XiNRational& x, const XiNRational& y) {
        return x.poly_ == y.poly_ && x.pole_terms_ == y.pole_terms_;
    }

    /// d/d xi_n, exact: pole terms shift multiplicity, the polynomial part
    /// differentiates by the power rule.
    XiNRational derivative() const;

    /// Evaluation at a rational xi_n (and rational xi'), away from the poles.
    FiberEndo eval(const GaussRat& xin, const std::array<GaussRat, 4>& xi_prime) const;

    /// Projection onto the Hardy-type space of functions extending
    /// analytically to the lower half-plane: keeps the +i pole terms,
    /// drops the -i terms and the polynomial part.
    XiNRational pi_plus() const;

    /// Numerators reduced modulo |xi'|^2 = 1.
    XiNRational reduce_sphere2() const;

    /// Integral over the real line by closing the contour upward:
    /// 2 pi i * (residue at +i). Carries one power of pi. Throws
    /// NonIntegrable when the function decays slower than |xi_n|^-2.
    struct LineIntegral {
        FiberPoly value;
        int pi_power;  // always 1
    };
    LineIntegral integrate() const;

    /// Tr(x(xi_n) * y(xi_n)) as a scalar-valued rational function, returned
    /// through the same partial-fraction machinery (identity-matrix carrier).
    static XiNRational trace_product(const XiNRational& x, const XiNRational& y);

  private:
    // numerator-over-(xi_n-i)^p (xi_n+i)^q view used by products
    struct Quotient {
        std::vector<FiberPoly> num;
        int p = 0, q = 0;
    };
    Quotient to_quotient() const;
    static XiNRational decompose(Quotient q, int n);

    int n_;
    std::vector<FiberPoly> poly_;  // index = xi_n power
    std::map<PoleKey, FiberPoly> pole_terms_;
};

}  // namespace nmres
