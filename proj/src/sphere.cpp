#include "nmres/sphere.hpp"

#include "nmres/errors.hpp"

namespace nmres {

namespace {

mpz_class factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

// Gamma(m + 1/2) = r_m * sqrt(pi) with r_m = (2m)! / (4^m m!)
mpq_class gamma_half_ratio(int m) {
    mpq_class num(factorial(2 * m));
    mpz_class four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
    mpq_class den(four_m * factorial(m));
    mpq_class r = num / den;
    r.canonicalize();
    return r;
}

}  // namespace

std::string SphereValue::to_string() const {
    if (coeff.is_zero()) return "0";
    std::string s = "(" + coeff.to_string() + ")";
    if (pi_power == 1) s += "*pi";
    if (pi_power > 1) s += "*pi^" + std::to_string(pi_power);
    return s;
}

SphereValue sphere3_integrate(const ScalarPoly& p, bool require_even) {
    ParamScalar total;
    for (const auto& [e, c] : p.terms()) {
        if ((e[0] | e[1] | e[2] | e[3]) < 0) throw EngineError("negative xi exponent");
        bool any_odd = (e[0] % 2) || (e[1] % 2) || (e[2] % 2) || (e[3] % 2);
        if (any_odd) {
            if (require_even && xi_degree(e) % 2)
                throw OddDenomPow("odd-degree monomial where an even density was required");
            continue;
        }
        int big_m = 0;
        mpq_class prod(1);
        for (int i = 0; i < 4; ++i) {
            int m = e[i] / 2;
            big_m += m;
            prod *= gamma_half_ratio(m);
        }
        // 2 * pi^2 * prod / Gamma(M + 2)
        mpq_class val = 2 * prod / mpq_class(factorial(big_m + 1));
        val.canonicalize();
        total += c * ParamScalar(GaussRat(val));
    }
    return SphereValue{total, 2};
}

SphereValue sphere2_integrate(const ScalarPoly& p, bool require_even) {
    ParamScalar total;
    for (const auto& [e, c] : p.terms()) {
        if (e[3] != 0) throw EngineError("two-sphere integrand uses the normal slot");
        bool any_odd = (e[0] % 2) || (e[1] % 2) || (e[2] % 2);
        if (any_odd) {
            if (require_even && xi_degree(e) % 2)
                throw OddDenomPow("odd-degree monomial where an even density was required");
            continue;
        }
        int big_m = 0;
        mpq_class prod(1);
        for (int i = 0; i < 3; ++i) {
            int m = e[i] / 2;
            big_m += m;
            prod *= gamma_half_ratio(m);
        }
        // 2 * pi^(3/2) * prod / Gamma(M + 3/2) = 2 * pi * prod * 4^(M+1) (M+1)! / (2M+2)!
        mpz_class four_pow;
        mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(big_m + 1));
        mpq_class val = 2 * prod * mpq_class(four_pow * factorial(big_m + 1)) /
                        mpq_class(factorial(2 * big_m + 2));
        val.canonicalize();
        total += c * ParamScalar(GaussRat(val));
    }
    return SphereValue{total, 1};
}

}  // namespace nmres
