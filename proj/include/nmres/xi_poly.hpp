#pragma once

#include <array>
#include <map>

#include "nmres/fiber.hpp"

namespace nmres {

/// Exponent 4-tuple of a monomial in the cotangent coordinates xi_1..xi_4.
/// Boundary code uses only the first three slots for xi' and keeps slot 3
/// (the normal direction) at zero.
using XiExp = std::array<int, 4>;

inline int xi_degree(const XiExp& e) { return e[0] + e[1] + e[2] + e[3]; }

inline XiExp xi_exp_add(const XiExp& x, const XiExp& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

/// Polynomial in xi with exact scalar coefficients.
class ScalarPoly {
  public:
    ScalarPoly() = default;

    static ScalarPoly constant(const ParamScalar& c);
    /// |xi|^2 restricted to the first d coordinates (d = 4 by default).
    static ScalarPoly xi_norm_sq(int d = 4);

    void add_term(const XiExp& e, const ParamScalar& c);
    const std::map<XiExp, ParamScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ScalarPoly operator+(const ScalarPoly& p, const ScalarPoly& q);
    friend ScalarPoly operator-(const ScalarPoly& p, const ScalarPoly& q);
    friend ScalarPoly operator*(const ScalarPoly& p, const ScalarPoly& q);
    ScalarPoly& operator+=(const ScalarPoly& q) { *this = *this + q; return *this; }
    ScalarPoly scaled(const ParamScalar& c) const;

    friend bool operator==(const ScalarPoly& p, const ScalarPoly& q) {
        return p.terms_ == q.terms_;
    }

    ParamScalar eval(const std::array<GaussRat, 4>& xi) const;

    /// Canonical form modulo xi_1^2 + xi_2^2 + xi_3^2 = 1 (the unit two-
    /// sphere in the tangential slots): xi_1 exponents are reduced below 2.
    ScalarPoly reduce_sphere2() const;

  private:
    std::map<XiExp, ParamScalar> terms_;
};

/// Polynomial in xi whose coefficients are fiber endomorphisms. This is the
/// numerator form shared by the interior symbols (all four xi slots) and the
/// boundary calculus (tangential slots only).
class FiberPoly {
  public:
    explicit FiberPoly(int n = 4) : n_(n) {}

    static FiberPoly constant(FiberEndo m);
    /// sum_i xi_i * M_i over the index range [lo, hi)
    static FiberPoly linear(const std::vector<FiberEndo>& coeff, int lo, int hi);

    int n() const { return n_; }
    void add_term(const XiExp& e, const FiberEndo& m);
    const std::map<XiExp, FiberEndo>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend FiberPoly operator+(const FiberPoly& p, const FiberPoly& q);
    friend FiberPoly operator-(const FiberPoly& p, const FiberPoly& q);
    friend FiberPoly operator*(const FiberPoly& p, const FiberPoly& q);
    FiberPoly& operator+=(const FiberPoly& q) { *this = *this + q; return *this; }
    FiberPoly operator-() const;

    FiberPoly scaled(const ParamScalar& c) const;
    FiberPoly scaled_poly(const ScalarPoly& s) const;
    FiberPoly left_mul(const FiberEndo& m) const;
    FiberPoly right_mul(const FiberEndo& m) const;

    friend bool operator==(const FiberPoly& p, const FiberPoly& q) {
        return p.terms_ == q.terms_;
    }

    ScalarPoly trace() const;
    /// Tr(p * q) monomial-by-monomial, without forming the product.
    static ScalarPoly trace_product(const FiberPoly& p, const FiberPoly& q);

    FiberEndo eval(const std::array<GaussRat, 4>& xi) const;

    ScalarPoly entry(int r, int c) const;

    FiberPoly reduce_sphere2() const;

    /// true when every monomial has the given total degree
    bool homogeneous_of_degree(int d) const;

  private:
    int n_;
    std::map<XiExp, FiberEndo> terms_;
};

/// A scalar polynomial carried as a FiberPoly over the one-dimensional
/// (n = 0) fiber, so scalar-valued rational functions can reuse the
/// matrix-valued machinery.
FiberPoly to_fiber_scalar(const ScalarPoly& s);
ScalarPoly from_fiber_scalar(const FiberPoly& p);

}  // namespace nmres
