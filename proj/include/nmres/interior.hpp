#pragma once

#include "nmres/residue_report.hpp"
#include "nmres/sphere.hpp"
#include "nmres/symbol.hpp"

namespace nmres {

/// The three exact coefficients of the trilinear bracket
/// k1*g(u,X)g(v,w) + k2*g(v,X)g(u,w) + k3*g(w,X)g(u,v), carrying a common
/// power of pi.
struct TorsionCoefficients {
    ParamScalar k1, k2, k3;
    int pi_power = 2;

    /// value of the functional on a concrete tuple
    SphereValue reconstruct(const Covector& u, const Covector& v, const Covector& w,
                            const Covector& X) const;
};

/// Order -4 integrand of the trilinear functional:
/// ctilde(u) ctilde(v) ctilde(w) [ i c(X) s_{-4} + i ctilde(xi) s_{-5} ].
HomogSymbol torsion_density(const Covector& u, const Covector& v, const Covector& w,
                            const Covector& X, const Params& p);

/// Order -4 integrand of the linear functional:
/// ctilde(u) [ i c(X) s_{-4} + i ctilde(xi) s_{-5} ].
HomogSymbol one_form_density(const Covector& u, const Covector& X, const Params& p);

/// Cosphere integral of the traced density (the per-point residue value).
SphereValue integrate_density(const HomogSymbol& density);

struct TorsionResult {
    TorsionCoefficients coeffs;
    ResidueReport report;
};

/// Derives (k1, k2, k3) by structured instantiation, asserts the
/// alternating pattern k1 = -k2 = k3 (PatternBroken otherwise), runs a
/// generic-tuple consistency check, and compares against the claimed
/// closed form. The seed drives the consistency tuple and the numeric
/// cross-check points.
TorsionResult spectral_torsion(const Params& p, std::uint64_t seed = 0x5EED);

struct OneFormResult {
    ParamScalar k;  // coefficient of g(u,X)
    int pi_power = 2;
    ResidueReport report;
};

/// Derives the single g(u,X) coefficient; PatternBroken if the extraction
/// detects dependence beyond g(u,X).
OneFormResult spectral_one_form(const Params& p, std::uint64_t seed = 0x5EED);

/// Cosphere integral of Tr(s_{-4}) as a cross-check of the residue
/// normalization; 32*pi^2 at a0 = b0 = 1.
ResidueReport wres_laplacian_sanity(const Params& p);

/// Exact value of the sanity integral (coeff * pi^2).
SphereValue sanity_value(const Params& p);

}  // namespace nmres
