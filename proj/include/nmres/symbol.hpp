#pragma once

#include <map>

#include "nmres/xi_poly.hpp"

namespace nmres {

/// Matrix-valued symbol homogeneous of a fixed order at the working point:
/// a polynomial-in-xi numerator matrix divided by |xi|^(2*denom_pow). Every
/// numerator monomial has total degree order + 2*denom_pow.
class HomogSymbol {
  public:
    HomogSymbol(int order, FiberPoly num, int denom_pow);

    static HomogSymbol zero(int order, int n = 4) {
        return HomogSymbol(order, FiberPoly(n), 0);
    }

    int order() const { return order_; }
    int denom_pow() const { return denom_pow_; }
    const FiberPoly& num() const { return num_; }
    bool is_zero() const { return num_.is_zero(); }

    /// same symbol with denominator raised to |xi|^(2k), k >= denom_pow
    HomogSymbol lifted(int k) const;

    friend HomogSymbol operator+(const HomogSymbol& x, const HomogSymbol& y);
    friend HomogSymbol operator-(const HomogSymbol& x, const HomogSymbol& y);
    friend HomogSymbol operator*(const HomogSymbol& x, const HomogSymbol& y);
    HomogSymbol operator-() const { return HomogSymbol(order_, -num_, denom_pow_); }

    HomogSymbol scaled(const ParamScalar& c) const {
        return HomogSymbol(order_, num_.scaled(c), denom_pow_);
    }
    HomogSymbol left_mul(const FiberEndo& m) const {
        return HomogSymbol(order_, num_.left_mul(m), denom_pow_);
    }

    /// equality as rational symbols (after common-denominator lifting)
    friend bool operator==(const HomogSymbol& x, const HomogSymbol& y);

    /// exact value at a rational point xi != 0
    FiberEndo eval(const std::array<GaussRat, 4>& xi) const;

    /// numerator trace with |xi| = 1 substituted (denominator becomes 1)
    ScalarPoly trace_on_sphere() const { return num_.trace(); }

  private:
    int order_;
    FiberPoly num_;
    int denom_pow_;
};

/// Finitely many homogeneous parts keyed by order.
class GradedSymbol {
  public:
    GradedSymbol() = default;

    void set(HomogSymbol s) { parts_.insert_or_assign(s.order(), std::move(s)); }
    bool has(int order) const { return parts_.count(order) != 0; }
    const HomogSymbol& part(int order) const { return parts_.at(order); }
    const std::map<int, HomogSymbol>& parts() const { return parts_; }

  private:
    std::map<int, HomogSymbol> parts_;
};

// --- construction of the operator symbols at the working point ---

/// eps(xi)/iota(xi) as order-1 symbols over the index range [lo, hi)
FiberPoly eps_xi(const Fiber& f, int lo = 0, int hi = 4);
FiberPoly iota_xi(const Fiber& f, int lo = 0, int hi = 4);
FiberPoly c_tilde_xi(const Fiber& f, const Params& p, int lo = 0, int hi = 4);
FiberPoly c_bar_xi(const Fiber& f, const Params& p, int lo = 0, int hi = 4);

/// Graded symbol of the weighted Hodge operator a0*d + b0*delta + i*c(X):
/// order-1 part i*ctilde(xi), order-0 part i*c(X). The adjoint variant
/// carries i*cbar(xi) instead.
GradedSymbol symbol_of_operator(const Covector& X, const Params& p, bool adjoint = false);

/// Order-2 leading symbol of the weighted Laplacian:
/// (b0^2 - a0^2) eps(xi) iota(xi) + a0^2 |xi|^2.
HomogSymbol laplacian_leading(const Params& p);

/// Inverse of a symbol of the shape alpha |xi|^2 + beta eps(xi) iota(xi)
/// (up to an even |xi| power). Two-sided inverse, verified by
/// multiplication. Throws NonInvertibleLeading when alpha or alpha+beta
/// is the zero rational function.
HomogSymbol invert_leading(const HomogSymbol& s);

/// Sum of x.part(p) * y.part(q) over p + q = target.
HomogSymbol graded_product(const GradedSymbol& x, const GradedSymbol& y, int target);

/// Order -4 part of the squared resolvent: the square of the inverse
/// leading symbol.
HomogSymbol sigma_minus4_sq(const Params& p);

/// The closed-form order -4 expression printed alongside the square:
/// (b0^4 |xi|^2 + (a0^4 - b0^4) eps iota) / (a0^4 b0^4 |xi|^6).
HomogSymbol sigma_minus4_printed(const Params& p);

/// Order-1 perturbation of the composed operator from the vector-field
/// term: -(cbar(xi) c(X) + c(X) ctilde(xi)).
HomogSymbol sigma1_perturbation(const Covector& X, const Params& p);

/// Order -5 part of the squared resolvent:
/// -(s_{-2} s_1 s_{-4} + s_{-4} s_1 s_{-2}), x-derivative terms vanish at
/// the working point.
HomogSymbol sigma_minus5_sq(const Covector& X, const Params& p);

}  // namespace nmres
