#pragma once

#include <optional>
#include <string>
#include <utility>

#include "nmres/poly2.hpp"

namespace nmres {

/// Exact rational function in (a0, b0) over Q(i), the universal coefficient
/// field of the engine. Always held in canonical form: numerator and
/// denominator gcd-reduced, denominator lex-leading coefficient 1. Equality
/// of canonical forms is decidable and is used everywhere.
class ParamScalar {
  public:
    ParamScalar() : num_(Poly2::zero()), den_(Poly2::one()) {}
    ParamScalar(long v) : num_(Poly2::constant(GaussRat(v))), den_(Poly2::one()) {}
    explicit ParamScalar(const GaussRat& c) : num_(Poly2::constant(c)), den_(Poly2::one()) {}
    explicit ParamScalar(Poly2 p) : num_(std::move(p)), den_(Poly2::one()) {}
    ParamScalar(Poly2 num, Poly2 den);  // canonicalizes; den must be nonzero

    static ParamScalar zero() { return ParamScalar(); }
    static ParamScalar one() { return ParamScalar(1); }
    static ParamScalar i() { return ParamScalar(GaussRat::i()); }
    static ParamScalar a0() { return ParamScalar(Poly2::a0()); }
    static ParamScalar b0() { return ParamScalar(Poly2::b0()); }
    static ParamScalar rational(long num, long den) {
        return ParamScalar(GaussRat::rational(num, den));
    }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    ParamScalar operator-() const;
    friend ParamScalar operator+(const ParamScalar& x, const ParamScalar& y);
    friend ParamScalar operator-(const ParamScalar& x, const ParamScalar& y);
    friend ParamScalar operator*(const ParamScalar& x, const ParamScalar& y);
    /// Throws DegenerateScalar when y == 0.
    friend ParamScalar operator/(const ParamScalar& x, const ParamScalar& y);

    ParamScalar& operator+=(const ParamScalar& y) { *this = *this + y; return *this; }
    ParamScalar& operator-=(const ParamScalar& y) { *this = *this - y; return *this; }
    ParamScalar& operator*=(const ParamScalar& y) { *this = *this * y; return *this; }
    ParamScalar& operator/=(const ParamScalar& y) { *this = *this / y; return *this; }

    friend bool operator==(const ParamScalar& x, const ParamScalar& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const ParamScalar& x, const ParamScalar& y) { return !(x == y); }

    /// Exact evaluation at a rational parameter point. Throws
    /// DegenerateParameters when a*b == 0 (the operator family degenerates)
    /// and PoleAtSample when the denominator vanishes at (a, b).
    GaussRat eval(const GaussRat& a, const GaussRat& b) const;

    /// Canonical text form "P / Q" with explicit i, a0, b0 tokens.
    std::string to_string() const;

  private:
    Poly2 num_, den_;
};

/// The (a0, b0) parameter pair a derivation runs at: fully symbolic, or a
/// fixed rational point with a*b != 0.
class Params {
  public:
    static Params symbolic() { return Params(); }
    static Params numeric(const GaussRat& a, const GaussRat& b);

    bool is_symbolic() const { return !point_.has_value(); }

    ParamScalar a() const {
        return is_symbolic() ? ParamScalar::a0() : ParamScalar(point_->first);
    }
    ParamScalar b() const {
        return is_symbolic() ? ParamScalar::b0() : ParamScalar(point_->second);
    }

    const std::pair<GaussRat, GaussRat>& point() const { return *point_; }

  private:
    Params() = default;
    std::optional<std::pair<GaussRat, GaussRat>> point_;
};

}  // namespace nmres
