#include "nmres/xi_poly.hpp"

namespace nmres {

ScalarPoly ScalarPoly::constant(const ParamScalar& c) {
    ScalarPoly p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

ScalarPoly ScalarPoly::xi_norm_sq(int d) {
    ScalarPoly p;
    for (int i = 0; i < d; ++i) {
        XiExp e{0, 0, 0, 0};
        e[i] = 2;
        p.add_term(e, ParamScalar::one());
    }
    return p;
}

void ScalarPoly::add_term(const XiExp& e, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ScalarPoly operator+(const ScalarPoly& p, const ScalarPoly& q) {
    ScalarPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

ScalarPoly operator-(const ScalarPoly& p, const ScalarPoly& q) {
    ScalarPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

ScalarPoly operator*(const ScalarPoly& p, const ScalarPoly& q) {
    ScalarPoly r;
    for (const auto& [ep, cp] : p.terms_)
        for (const auto& [eq, cq] : q.terms_) r.add_term(xi_exp_add(ep, eq), cp * cq);
    return r;
}

ScalarPoly ScalarPoly::scaled(const ParamScalar& c) const {
    ScalarPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.add_term(e, t * c);
    return r;
}

ParamScalar ScalarPoly::eval(const std::array<GaussRat, 4>& xi) const {
    ParamScalar s;
    for (const auto& [e, c] : terms_) {
        GaussRat m(1);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k) m *= xi[i];
        s += c * ParamScalar(m);
    }
    return s;
}

ScalarPoly ScalarPoly::reduce_sphere2() const {
    ScalarPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[0] < 2) {
            r.add_term(e, c);
            continue;
        }
        // xi_1^2 -> 1 - xi_2^2 - xi_3^2, one step; recurse via re-adding
        XiExp base = e;
        base[0] -= 2;
        ScalarPoly sub;
        sub.add_term(base, c);
        XiExp e2 = base, e3 = base;
        e2[1] += 2;
        e3[2] += 2;
        sub.add_term(e2, -c);
        sub.add_term(e3, -c);
        r += sub.reduce_sphere2();
    }
    return r;
}

FiberPoly FiberPoly::constant(FiberEndo m) {
    FiberPoly p(m.n());
    p.add_term({0, 0, 0, 0}, m);
    return p;
}

FiberPoly FiberPoly::linear(const std::vector<FiberEndo>& coeff, int lo, int hi) {
    FiberPoly p(coeff.empty() ? 4 : coeff[0].n());
    for (int i = lo; i < hi; ++i) {
        XiExp e{0, 0, 0, 0};
        e[i] = 1;
        p.add_term(e, coeff[i]);
    }
    return p;
}

void FiberPoly::add_term(const XiExp& e, const FiberEndo& m) {
    if (m.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, m);
        return;
    }
    it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
}

FiberPoly operator+(const FiberPoly& p, const FiberPoly& q) {
    FiberPoly r = p;
    for (const auto& [e, m] : q.terms_) r.add_term(e, m);
    return r;
}

FiberPoly operator-(const FiberPoly& p, const FiberPoly& q) {
    FiberPoly r = p;
    for (const auto& [e, m] : q.terms_) r.add_term(e, -m);
    return r;
}

FiberPoly operator*(const FiberPoly& p, const FiberPoly& q) {
    FiberPoly r(p.n_);
    for (const auto& [ep, mp] : p.terms_)
        for (const auto& [eq, mq] : q.terms_) r.add_term(xi_exp_add(ep, eq), mp * mq);
    return r;
}

FiberPoly FiberPoly::operator-() const {
    FiberPoly r(n_);
    for (const auto& [e, m] : terms_) r.terms_.emplace(e, -m);
    return r;
}

FiberPoly FiberPoly::scaled(const ParamScalar& c) const {
    FiberPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, m] : terms_) r.add_term(e, m.scaled(c));
    return r;
}

FiberPoly FiberPoly::scaled_poly(const ScalarPoly& s) const {
    FiberPoly r(n_);
    for (const auto& [es, cs] : s.terms())
        for (const auto& [e, m] : terms_) r.add_term(xi_exp_add(es, e), m.scaled(cs));
    return r;
}

FiberPoly FiberPoly::left_mul(const FiberEndo& m) const {
    FiberPoly r(n_);
    for (const auto& [e, t] : terms_) r.add_term(e, m * t);
    return r;
}

FiberPoly FiberPoly::right_mul(const FiberEndo& m) const {
    FiberPoly r(n_);
    for (const auto& [e, t] : terms_) r.add_term(e, t * m);
    return r;
}

ScalarPoly FiberPoly::trace() const {
    ScalarPoly s;
    for (const auto& [e, m] : terms_) s.add_term(e, m.trace());
    return s;
}

ScalarPoly FiberPoly::trace_product(const FiberPoly& p, const FiberPoly& q) {
    ScalarPoly s;
    for (const auto& [ep, mp] : p.terms_)
        for (const auto& [eq, mq] : q.terms_)
            s.add_term(xi_exp_add(ep, eq), FiberEndo::trace_product(mp, mq));
    return s;
}

FiberEndo FiberPoly::eval(const std::array<GaussRat, 4>& xi) const {
    FiberEndo r = FiberEndo::zero(n_);
    for (const auto& [e, m] : terms_) {
        GaussRat c(1);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k) c *= xi[i];
        if (c.is_zero()) continue;
        r += m.scaled(ParamScalar(c));
    }
    return r;
}

ScalarPoly FiberPoly::entry(int r, int c) const {
    ScalarPoly s;
    for (const auto& [e, m] : terms_) s.add_term(e, m.at(r, c));
    return s;
}

FiberPoly FiberPoly::reduce_sphere2() const {
    FiberPoly r(n_);
    for (const auto& [e, m] : terms_) {
        if (e[0] < 2) {
            r.add_term(e, m);
            continue;
        }
        XiExp base = e;
        base[0] -= 2;
        FiberPoly sub(n_);
        sub.add_term(base, m);
        XiExp e2 = base, e3 = base;
        e2[1] += 2;
        e3[2] += 2;
        sub.add_term(e2, -m);
        sub.add_term(e3, -m);
        r += sub.reduce_sphere2();
    }
    return r;
}

bool FiberPoly::homogeneous_of_degree(int d) const {
    for (const auto& [e, m] : terms_) {
        (void)m;
        if (xi_degree(e) != d) return false;
    }
    return true;
}

FiberPoly to_fiber_scalar(const ScalarPoly& s) {
    FiberPoly p(0);
    for (const auto& [e, c] : s.terms()) {
        FiberEndo m(0, 1);
        m.at(0, 0) = c;
        p.add_term(e, m);
    }
    return p;
}

ScalarPoly from_fiber_scalar(const FiberPoly& p) {
    ScalarPoly s;
    for (const auto& [e, m] : p.terms()) s.add_term(e, m.at(0, 0));
    return s;
}

}  // namespace nmres
