#pragma once

#include <array>

#include "nmres/residue_report.hpp"
#include "nmres/sphere.hpp"
#include "nmres/xi_n_rational.hpp"

namespace nmres {

/// Exact boundary-term coefficients of the bracket
/// ku*u_n g(v,w) + kv*v_n g(u,w) + kw*w_n g(u,v), carrying pi^pi_power.
struct BoundaryDensity {
    ParamScalar ku, kv, kw;
    int pi_power = 2;

    SphereValue reconstruct(const Covector& u, const Covector& v, const Covector& w) const;
};

/// Leading inverse symbol of the adjoint operator on the boundary cosphere
/// (|xi'| = 1, xi = xi' + xi_n dx_n): the exact two-sided inverse of
/// i*cbar(xi), computed through its Clifford square and verified modulo
/// |xi'|^2 = 1. Throws SingularSymbol when the square is not a nonzero
/// scalar multiple of |xi|^2.
XiNRational sigma_minus1_inverse_adjoint(const Params& p);

/// The printed right-hand side the projected inverse is compared against:
/// (eps(xi') + i eps(dxn))/(2 a0 (xi_n - i)) - (iota(xi') + i iota(dxn))/(2 b0 (xi_n - i)).
XiNRational projected_inverse_printed(const Params& p);

/// xi_n-derivative of the resolvent symbol restricted to the boundary
/// cosphere, in canonical partial fractions.
XiNRational d_xi_n_sigma_minus2(const Params& p);

/// The five-term printed expansion of the same derivative, for comparison.
XiNRational d_xi_n_sigma_minus2_printed(const Params& p);

/// Composition-formula bookkeeping: the (r, l, j, k, |alpha|) tuples that
/// survive at the working point. Must be the singleton (-1, -2, 0, 0, 0).
std::vector<std::array<int, 5>> surviving_composition_terms();

/// Full boundary pipeline value for one tuple: -i times the xi_n line
/// integral of Tr[ct(u)ct(v)ct(w) pi+ sigma_-1 x d_xi_n sigma_-2],
/// integrated over the unit two-sphere in xi'.
SphereValue boundary_value(const Covector& u, const Covector& v, const Covector& w,
                           const Params& p);

struct BoundaryResult {
    BoundaryDensity density;
    ResidueReport report;
};

/// Derives (ku, kv, kw) by structured instantiation, asserts the pattern
/// ku = -kv = kw, verifies the boundary trace identities en route, and
/// compares against the claimed closed form.
BoundaryResult boundary_torsion(const Params& p, std::uint64_t seed = 0x5EED);

}  // namespace nmres
