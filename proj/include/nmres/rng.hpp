#pragma once

#include <array>
#include <cstdint>

#include "nmres/fiber.hpp"

namespace nmres {

/// Deterministic generator (splitmix64) so seeded runs are byte-identical
/// across platforms; standard-library distributions are not portable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static constexpr std::uint64_t kDefaultSeed = 0x5EED;

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// rational with numerator in [-9, 9] \ {0} and denominator in [1, 9]
    GaussRat rat() {
        long num = range(1, 9);
        if (next() & 1) num = -num;
        return GaussRat::rational(num, range(1, 9));
    }

    Covector covector(int n) {
        Covector v(n);
        for (int i = 0; i < n; ++i) v[i] = ParamScalar(rat());
        return v;
    }

    /// Rational point on S^2 embedded in the first three coordinates,
    /// from the Pythagorean-quadruple parameterization
    /// (2p, 2q, p^2+q^2-1) / (p^2+q^2+1).
    Covector sphere2_point() {
        mpq_class p = rat().re(), q = rat().re();
        mpq_class s = p * p + q * q;
        mpq_class d = s + 1;
        Covector v(4);
        v[0] = ParamScalar(GaussRat(2 * p / d));
        v[1] = ParamScalar(GaussRat(2 * q / d));
        v[2] = ParamScalar(GaussRat((s - 1) / d));
        return v;
    }

  private:
    std::uint64_t state_;
};

}  // namespace nmres
