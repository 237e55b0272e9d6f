#include "nmres/param_scalar.hpp"

#include "nmres/errors.hpp"

namespace nmres {

ParamScalar::ParamScalar(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DegenerateScalar("zero denominator polynomial");
    if (num_.is_zero()) {
        den_ = Poly2::one();
        return;
    }
    if (!den_.is_one()) {
        Poly2 g = Poly2::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *Poly2::div_exact(num_, g);
            den_ = *Poly2::div_exact(den_, g);
        }
    }
    GaussRat lc = den_.leading().second;
    if (!lc.is_one()) {
        GaussRat inv = GaussRat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamScalar operator+(const ParamScalar& x, const ParamScalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return ParamScalar(x.num_ + y.num_, x.den_);
    return ParamScalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

ParamScalar operator-(const ParamScalar& x, const ParamScalar& y) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return -y;
    if (x.den_ == y.den_) return ParamScalar(x.num_ - y.num_, x.den_);
    return ParamScalar(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

ParamScalar operator*(const ParamScalar& x, const ParamScalar& y) {
    if (x.is_zero() || y.is_zero()) return ParamScalar::zero();
    if (x.is_one()) return y;
    if (y.is_one()) return x;
    // cross-cancel before multiplying to keep intermediates reduced
    Poly2 g1 = Poly2::gcd(x.num_, y.den_);
    Poly2 g2 = Poly2::gcd(y.num_, x.den_);
    Poly2 n = *Poly2::div_exact(x.num_, g1) * *Poly2::div_exact(y.num_, g2);
    Poly2 d = *Poly2::div_exact(x.den_, g2) * *Poly2::div_exact(y.den_, g1);
    return ParamScalar(std::move(n), std::move(d));
}

ParamScalar operator/(const ParamScalar& x, const ParamScalar& y) {
    if (y.is_zero()) throw DegenerateScalar("division by zero rational function");
    if (x.is_zero()) return ParamScalar::zero();
    return x * ParamScalar(y.den_, y.num_);
}

GaussRat ParamScalar::eval(const GaussRat& a, const GaussRat& b) const {
    if (a.is_zero() || b.is_zero())
        throw DegenerateParameters("parameter sample with a0*b0 == 0");
    GaussRat d = den_.eval(a, b);
    if (d.is_zero()) throw PoleAtSample("denominator vanishes at the sample point");
    return num_.eval(a, b) / d;
}

std::string ParamScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Params Params::numeric(const GaussRat& a, const GaussRat& b) {
    if (a.is_zero() || b.is_zero())
        throw DegenerateParameters("numeric parameters require a0*b0 != 0");
    Params p;
    p.point_ = {a, b};
    return p;
}

}  // namespace nmres
