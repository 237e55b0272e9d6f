#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nmres/errors.hpp"
#include "nmres/rng.hpp"
#include "nmres/sphere.hpp"

using namespace nmres;

namespace {

ScalarPoly mono(std::array<int, 4> e, long c = 1) {
    ScalarPoly p;
    p.add_term(e, ParamScalar(c));
    return p;
}

// low-discrepancy numeric quadrature over S^3 via a Halton-type lattice on
// angles; independent of the closed-form route
double quad_s3(const std::array<int, 4>& e) {
    auto halton = [](int idx, int base) {
        double f = 1.0, r = 0.0;
        while (idx > 0) {
            f /= base;
            r += f * (idx % base);
            idx /= base;
        }
        return r;
    };
    const int N = 300000;
    const double pi = 3.14159265358979323846;
    double sum = 0.0;
    for (int k = 1; k <= N; ++k) {
        // psi in [0,pi] with density sin^2, theta in [0,pi] with sin, phi uniform:
        // sample uniformly in the cube and weight
        double psi = pi * halton(k, 2);
        double theta = pi * halton(k, 3);
        double phi = 2 * pi * halton(k, 5);
        double w = std::sin(psi) * std::sin(psi) * std::sin(theta);
        double x1 = std::cos(psi);
        double x2 = std::sin(psi) * std::cos(theta);
        double x3 = std::sin(psi) * std::sin(theta) * std::cos(phi);
        double x4 = std::sin(psi) * std::sin(theta) * std::sin(phi);
        double m = std::pow(x1, e[0]) * std::pow(x2, e[1]) * std::pow(x3, e[2]) *
                   std::pow(x4, e[3]);
        sum += w * m;
    }
    return sum * (pi * pi * 2 * pi) / N;
}

double to_double(const SphereValue& v) {
    const double pi = 3.14159265358979323846;
    GaussRat c = v.coeff.eval(GaussRat(1), GaussRat(1));
    double x = mpq_get_d(c.re().get_mpq_t());
    return x * std::pow(pi, v.pi_power);
}

}  // namespace

TEST_CASE("three-sphere monomial integrals") {
    // Vol(S^3) = 2 pi^2
    SphereValue vol = sphere3_integrate(mono({0, 0, 0, 0}));
    CHECK(vol.coeff == ParamScalar(2));
    CHECK(vol.pi_power == 2);

    // xi_1^2 -> pi^2 / 2 by symmetry (2 pi^2 / 4)
    SphereValue x1sq = sphere3_integrate(mono({2, 0, 0, 0}));
    CHECK(x1sq.coeff == ParamScalar::rational(1, 2));

    // odd symmetry kills mixed monomials
    CHECK(sphere3_integrate(mono({1, 1, 0, 0})).is_zero());
    CHECK(sphere3_integrate(mono({3, 0, 1, 0})).is_zero());

    // degree-4 values used by the residue assembly
    CHECK(sphere3_integrate(mono({4, 0, 0, 0})).coeff == ParamScalar::rational(1, 4));
    CHECK(sphere3_integrate(mono({2, 2, 0, 0})).coeff == ParamScalar::rational(1, 12));

    // degree-6; consistency: summing the multinomial expansion of |xi|^6
    // (4*(5/32) + 12*3*(1/32) + 4*6*(1/96) = 2) recovers Vol(S^3)
    CHECK(sphere3_integrate(mono({6, 0, 0, 0})).coeff == ParamScalar::rational(5, 32));
    CHECK(sphere3_integrate(mono({4, 2, 0, 0})).coeff == ParamScalar::rational(1, 32));
    CHECK(sphere3_integrate(mono({2, 2, 2, 0})).coeff == ParamScalar::rational(1, 96));
}

TEST_CASE("two-sphere monomial integrals") {
    SphereValue vol = sphere2_integrate(mono({0, 0, 0, 0}));
    CHECK(vol.coeff == ParamScalar(4));
    CHECK(vol.pi_power == 1);

    CHECK(sphere2_integrate(mono({2, 0, 0, 0})).coeff == ParamScalar::rational(4, 3));
    CHECK(sphere2_integrate(mono({1, 1, 0, 0})).is_zero());
    CHECK(sphere2_integrate(mono({2, 2, 0, 0})).coeff == ParamScalar::rational(4, 15));
    CHECK(sphere2_integrate(mono({4, 0, 0, 0})).coeff == ParamScalar::rational(4, 5));

    // the normal slot must not be used
    CHECK_THROWS_AS(sphere2_integrate(mono({0, 0, 0, 2})), EngineError);
}

TEST_CASE("parity guard raises on odd-degree densities") {
    CHECK_THROWS_AS(sphere3_integrate(mono({1, 0, 0, 0}), /*require_even=*/true),
                    OddDenomPow);
    CHECK_THROWS_AS(sphere2_integrate(mono({1, 0, 0, 0}), /*require_even=*/true),
                    OddDenomPow);
    // even total degree with odd per-variable exponents is fine (vanishes)
    CHECK(sphere3_integrate(mono({1, 1, 0, 0}), /*require_even=*/true).is_zero());
}

TEST_CASE("closed forms agree with low-discrepancy quadrature") {
    std::vector<std::array<int, 4>> exps = {
        {0, 0, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}, {2, 2, 0, 0},
        {4, 0, 0, 0}, {2, 0, 2, 0}, {0, 0, 2, 2},
    };
    for (const auto& e : exps) {
        double exact = to_double(sphere3_integrate(mono(e)));
        double approx = quad_s3(e);
        CHECK(std::abs(exact - approx) < 2e-3 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("linearity with parameter-valued coefficients") {
    ParamScalar a = ParamScalar::a0(), b = ParamScalar::b0();
    ScalarPoly p;
    p.add_term({2, 0, 0, 0}, a * b);
    p.add_term({0, 2, 0, 0}, a * b);
    p.add_term({1, 0, 1, 0}, a);  // odd, drops out
    SphereValue v = sphere3_integrate(p);
    CHECK(v.coeff == a * b);  // 2 * (1/2) * a b
    CHECK(v.pi_power == 2);
}
