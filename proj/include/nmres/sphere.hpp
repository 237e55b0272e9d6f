#pragma once

#include "nmres/xi_poly.hpp"

namespace nmres {

/// Exact value coeff * pi^pi_power. Unit-sphere monomial integrals in the
/// dimensions used here are rational multiples of pi^2 (S^3) or pi (S^2).
struct SphereValue {
    ParamScalar coeff;
    int pi_power = 0;

    bool is_zero() const { return coeff.is_zero(); }
    std::string to_string() const;

    friend bool operator==(const SphereValue& x, const SphereValue& y) {
        if (x.is_zero() && y.is_zero()) return true;
        return x.pi_power == y.pi_power && x.coeff == y.coeff;
    }
};

/// Integral over the unit three-sphere of a polynomial in xi_1..xi_4.
/// Monomials integrate by the Gamma-quotient rule (zero when any exponent
/// is odd); the result is an exact rational multiple of pi^2.
/// With require_even set, a monomial of odd total degree raises
/// OddDenomPow instead of vanishing by symmetry.
SphereValue sphere3_integrate(const ScalarPoly& p, bool require_even = false);

/// Integral over the unit two-sphere of a polynomial in xi_1..xi_3 (slot 3
/// must be unused); exact rational multiple of pi.
SphereValue sphere2_integrate(const ScalarPoly& p, bool require_even = false);

}  // namespace nmres
