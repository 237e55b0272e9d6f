#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "nmres/errors.hpp"

namespace nmres {

/// Exact Gaussian rational: an element of Q(i) held as two arbitrary
/// precision rationals. Closed under +, -, *, and / by nonzero values.
class GaussRat {
  public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat rational(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return GaussRat(q);
    }
    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    // |z|^2, exact.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
        return GaussRat(x.re_ + y.re_, x.im_ + y.im_);
    }
    friend GaussRat operator-(const GaussRat& x, const GaussRat& y) {
        return GaussRat(x.re_ - y.re_, x.im_ - y.im_);
    }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return GaussRat(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
    }
    friend GaussRat operator/(const GaussRat& x, const GaussRat& y) {
        if (y.is_zero()) throw DegenerateScalar("division by zero Gaussian rational");
        mpq_class n = y.norm();
        GaussRat t = x * y.conj();
        return GaussRat(t.re_ / n, t.im_ / n);
    }

    GaussRat& operator+=(const GaussRat& y) { *this = *this + y; return *this; }
    GaussRat& operator-=(const GaussRat& y) { *this = *this - y; return *this; }
    GaussRat& operator*=(const GaussRat& y) { *this = *this * y; return *this; }
    GaussRat& operator/=(const GaussRat& y) { *this = *this / y; return *this; }

    friend bool operator==(const GaussRat& x, const GaussRat& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const GaussRat& x, const GaussRat& y) { return !(x == y); }

    /// Stable text form: "0", "3/4", "-i", "1/2+3*i", "2-5/7*i".
    std::string to_string() const;

  private:
    mpq_class re_, im_;
};

}  // namespace nmres
