#include "nmres/xi_n_rational.hpp"

#include "nmres/errors.hpp"

namespace nmres {

namespace {

using TPoly = std::vector<FiberPoly>;  // polynomial in xi_n, FiberPoly coefficients

void tp_trim(TPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TPoly tp_add(const TPoly& x, const TPoly& y) {
    int n = x.empty() ? (y.empty() ? 4 : y[0].n()) : x[0].n();
    TPoly r(std::max(x.size(), y.size()), FiberPoly(n));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < x.size()) r[k] += x[k];
        if (k < y.size()) r[k] += y[k];
    }
    tp_trim(r);
    return r;
}

TPoly tp_scale(const TPoly& x, const GaussRat& c) {
    TPoly r = x;
    ParamScalar pc{c};
    for (auto& f : r) f = f.scaled(pc);
    tp_trim(r);
    return r;
}

// multiply by the monic linear factor (t - root)
TPoly tp_mul_linear(const TPoly& x, const GaussRat& root) {
    if (x.empty()) return x;
    TPoly r(x.size() + 1, FiberPoly(x[0].n()));
    for (size_t k = 0; k < x.size(); ++k) {
        r[k + 1] += x[k];
        r[k] += x[k].scaled(ParamScalar(-root));
    }
    tp_trim(r);
    return r;
}

FiberPoly tp_eval(const TPoly& x, const GaussRat& z, int n) {
    FiberPoly acc(n);
    GaussRat zk(1);
    for (size_t k = 0; k < x.size(); ++k) {
        acc += x[k].scaled(ParamScalar(zk));
        zk *= z;
    }
    return acc;
}

// exact division by (t - root); the remainder must vanish
TPoly tp_div_linear(const TPoly& x, const GaussRat& root, int n) {
    if (x.empty()) return x;
    TPoly q(x.size() - 1, FiberPoly(n));
    FiberPoly carry(n);
    for (size_t k = x.size(); k-- > 1;) {
        carry = (k == x.size() - 1) ? x[k] : x[k] + carry.scaled(ParamScalar(root));
        q[k - 1] = carry;
    }
    FiberPoly rem = x.empty() ? FiberPoly(n) : x[0] + carry.scaled(ParamScalar(root));
    if (!rem.is_zero()) throw EngineError("inexact division by a linear factor");
    return q;
}

GaussRat pole_value(Pole p) {
    return p == Pole::PlusI ? GaussRat::i() : -GaussRat::i();
}

}  // namespace

bool XiNRational::is_zero() const { return poly_.empty() && pole_terms_.empty(); }

void XiNRational::set_pole_term(const PoleKey& k, FiberPoly num) {
    if (num.is_zero()) return;
    auto it = pole_terms_.find(k);
    if (it == pole_terms_.end()) {
        pole_terms_.emplace(k, std::move(num));
        return;
    }
    it->second += num;
    if (it->second.is_zero()) pole_terms_.erase(it);
}

XiNRational XiNRational::poly_part_only(std::vector<FiberPoly> poly) {
    XiNRational r(poly.empty() ? 4 : poly[0].n());
    r.poly_ = std::move(poly);
    tp_trim(r.poly_);
    return r;
}

XiNRational XiNRational::decompose(Quotient qt, int n) {
    XiNRational r(n);
    tp_trim(qt.num);
    while ((qt.p > 0 || qt.q > 0) && !qt.num.empty()) {
        Pole pole = qt.p > 0 ? Pole::PlusI : Pole::MinusI;
        int& mult = qt.p > 0 ? qt.p : qt.q;
        int other_pow = qt.p > 0 ? qt.q : 0;
        GaussRat z = pole_value(pole);
        GaussRat other = -z;

        // coefficient of 1/(t-z)^mult: N(z) / (z - other)^other_pow
        GaussRat scale(1);
        for (int k = 0; k < other_pow; ++k) scale *= (z - other);
        FiberPoly coeff = tp_eval(qt.num, z, n).scaled(ParamScalar(GaussRat(1) / scale));
        r.set_pole_term({pole, mult}, coeff);

        // N <- (N - coeff * (t - other)^other_pow) / (t - z)
        TPoly sub{coeff};
        for (int k = 0; k < other_pow; ++k) sub = tp_mul_linear(sub, other);
        TPoly reduced = tp_add(qt.num, tp_scale(sub, GaussRat(-1)));
        qt.num = tp_div_linear(reduced, z, n);
        tp_trim(qt.num);
        --mult;
    }
    if (qt.num.empty()) return r;
    if (qt.p > 0 || qt.q > 0)
        throw EngineError("partial fraction peeling left a denominator behind");
    r.poly_ = std::move(qt.num);
    return r;
}

XiNRational XiNRational::from_quotient(std::vector<FiberPoly> num, int m) {
    int n = num.empty() ? 4 : num[0].n();
    Quotient qt;
    qt.num = std::move(num);
    qt.p = m;
    qt.q = m;
    return decompose(std::move(qt), n);
}

XiNRational::Quotient XiNRational::to_quotient() const {
    int P = 0, Q = 0;
    for (const auto& [k, c] : pole_terms_) {
        (void)c;
        if (k.pole == Pole::PlusI)
            P = std::max(P, k.mult);
        else
            Q = std::max(Q, k.mult);
    }
    GaussRat zi = GaussRat::i();
    Quotient qt;
    qt.p = P;
    qt.q = Q;
    TPoly acc = poly_;
    for (int k = 0; k < P; ++k) acc = tp_mul_linear(acc, zi);
    for (int k = 0; k < Q; ++k) acc = tp_mul_linear(acc, -zi);
    for (const auto& [key, c] : pole_terms_) {
        TPoly t{c};
        int at_plus = key.pole == Pole::PlusI ? P - key.mult : P;
        int at_minus = key.pole == Pole::MinusI ? Q - key.mult : Q;
        for (int k = 0; k < at_plus; ++k) t = tp_mul_linear(t, zi);
        for (int k = 0; k < at_minus; ++k) t = tp_mul_linear(t, -zi);
        acc = tp_add(acc, t);
    }
    qt.num = std::move(acc);
    return qt;
}

XiNRational operator+(const XiNRational& x, const XiNRational& y) {
    XiNRational r = x;
    r.poly_ = tp_add(r.poly_, y.poly_);
    for (const auto& [k, c] : y.pole_terms_) r.set_pole_term(k, c);
    return r;
}

XiNRational operator-(const XiNRational& x, const XiNRational& y) { return x + (-y); }

XiNRational XiNRational::operator-() const { return scaled(ParamScalar(-1)); }

XiNRational XiNRational::scaled(const ParamScalar& c) const {
    XiNRational r(n_);
    if (c.is_zero()) return r;
    r.poly_ = poly_;
    for (auto& f : r.poly_) f = f.scaled(c);
    for (const auto& [k, f] : pole_terms_) r.pole_terms_.emplace(k, f.scaled(c));
    return r;
}

XiNRational XiNRational::left_mul(const FiberEndo& m) const {
    XiNRational r(n_);
    r.poly_ = poly_;
    for (auto& f : r.poly_) f = f.left_mul(m);
    tp_trim(r.poly_);
    for (const auto& [k, f] : pole_terms_) r.set_pole_term(k, f.left_mul(m));
    return r;
}

XiNRational operator*(const XiNRational& x, const XiNRational& y) {
    XiNRational::Quotient qx = x.to_quotient(), qy = y.to_quotient();
    XiNRational::Quotient qt;
    qt.p = qx.p + qy.p;
    qt.q = qx.q + qy.q;
    if (!qx.num.empty() && !qy.num.empty()) {
        qt.num.assign(qx.num.size() + qy.num.size() - 1, FiberPoly(x.n()));
        for (size_t ix = 0; ix < qx.num.size(); ++ix)
            for (size_t iy = 0; iy < qy.num.size(); ++iy)
                qt.num[ix + iy] += qx.num[ix] * qy.num[iy];
    }
    return XiNRational::decompose(std::move(qt), x.n());
}

XiNRational XiNRational::derivative() const {
    XiNRational r(n_);
    if (poly_.size() > 1) {
        TPoly d(poly_.size() - 1, FiberPoly(n_));
        for (size_t k = 1; k < poly_.size(); ++k)
            d[k - 1] = poly_[k].scaled(ParamScalar(static_cast<long>(k)));
        r.poly_ = std::move(d);
        tp_trim(r.poly_);
    }
    for (const auto& [key, c] : pole_terms_)
        r.set_pole_term({key.pole, key.mult + 1},
                        c.scaled(ParamScalar(static_cast<long>(-key.mult))));
    return r;
}

FiberEndo XiNRational::eval(const GaussRat& xin,
                            const std::array<GaussRat, 4>& xi_prime) const {
    FiberEndo acc = FiberEndo::zero(n_);
    GaussRat tk(1);
    for (const auto& f : poly_) {
        acc += f.eval(xi_prime).scaled(ParamScalar(tk));
        tk *= xin;
    }
    for (const auto& [key, c] : pole_terms_) {
        GaussRat den(1);
        for (int k = 0; k < key.mult; ++k) den *= (xin - pole_value(key.pole));
        acc += c.eval(xi_prime).scaled(ParamScalar(GaussRat(1) / den));
    }
    return acc;
}

XiNRational XiNRational::pi_plus() const {
    XiNRational r(n_);
    for (const auto& [key, c] : pole_terms_)
        if (key.pole == Pole::PlusI) r.pole_terms_.emplace(key, c);
    return r;
}

XiNRational XiNRational::reduce_sphere2() const {
    XiNRational r(n_);
    r.poly_ = poly_;
    for (auto& f : r.poly_) f = f.reduce_sphere2();
    tp_trim(r.poly_);
    for (const auto& [key, c] : pole_terms_) r.set_pole_term(key, c.reduce_sphere2());
    return r;
}

XiNRational::LineIntegral XiNRational::integrate() const {
    if (!poly_.empty()) throw NonIntegrable("polynomial part does not decay");
    FiberPoly tail(n_);  // coefficient of 1/xi_n at infinity
    for (const auto& [key, c] : pole_terms_)
        if (key.mult == 1) tail += c;
    if (!tail.is_zero())
        throw NonIntegrable("only |xi_n|^-1 decay; the contour does not close");
    FiberPoly res(n_);
    if (auto it = pole_terms_.find({Pole::PlusI, 1}); it != pole_terms_.end())
        res = it->second;
    // 2 pi i * residue at +i
    return LineIntegral{res.scaled(ParamScalar(GaussRat(2) * GaussRat::i())), 1};
}

XiNRational XiNRational::trace_product(const XiNRational& x, const XiNRational& y) {
    Quotient qx = x.to_quotient(), qy = y.to_quotient();
    Quotient qt;
    qt.p = qx.p + qy.p;
    qt.q = qx.q + qy.q;
    if (!qx.num.empty() && !qy.num.empty()) {
        qt.num.assign(qx.num.size() + qy.num.size() - 1, FiberPoly(0));
        for (size_t ix = 0; ix < qx.num.size(); ++ix)
            for (size_t iy = 0; iy < qy.num.size(); ++iy)
                qt.num[ix + iy] +=
                    to_fiber_scalar(FiberPoly::trace_product(qx.num[ix], qy.num[iy]));
    }
    return decompose(std::move(qt), 0);
}

}  // namespace nmres
