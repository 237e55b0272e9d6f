#include "nmres/fiber.hpp"

#include <algorithm>
#include <bit>

#include "nmres/errors.hpp"

namespace nmres {

Covector operator+(const Covector& u, const Covector& v) {
    Covector r(u.n());
    for (int i = 0; i < u.n(); ++i) r[i] = u[i] + v[i];
    return r;
}

Covector Covector::scaled(const ParamScalar& c) const {
    Covector r(n());
    for (int i = 0; i < n(); ++i) r[i] = comp_[i] * c;
    return r;
}

ParamScalar inner(const Covector& u, const Covector& v) {
    ParamScalar s;
    for (int i = 0; i < u.n(); ++i) s += u[i] * v[i];
    return s;
}

bool Covector::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(),
                       [](const ParamScalar& c) { return c.is_zero(); });
}

FiberEndo FiberEndo::zero(int n) { return FiberEndo(n, 1 << n); }

FiberEndo FiberEndo::identity(int n) {
    FiberEndo m(n, 1 << n);
    for (int k = 0; k < m.dim_; ++k) m.at(k, k) = ParamScalar::one();
    return m;
}

bool FiberEndo::is_zero() const {
    return std::all_of(m_.begin(), m_.end(),
                       [](const ParamScalar& c) { return c.is_zero(); });
}

ParamScalar FiberEndo::trace() const {
    ParamScalar s;
    for (int k = 0; k < dim_; ++k) s += at(k, k);
    return s;
}

FiberEndo FiberEndo::operator-() const {
    FiberEndo r(n_, dim_);
    for (size_t k = 0; k < m_.size(); ++k) r.m_[k] = -m_[k];
    return r;
}

FiberEndo operator+(const FiberEndo& x, const FiberEndo& y) {
    FiberEndo r(x.n_, x.dim_);
    for (size_t k = 0; k < r.m_.size(); ++k) r.m_[k] = x.m_[k] + y.m_[k];
    return r;
}

FiberEndo operator-(const FiberEndo& x, const FiberEndo& y) {
    FiberEndo r(x.n_, x.dim_);
    for (size_t k = 0; k < r.m_.size(); ++k) r.m_[k] = x.m_[k] - y.m_[k];
    return r;
}

FiberEndo& FiberEndo::operator+=(const FiberEndo& y) {
    for (size_t k = 0; k < m_.size(); ++k) {
        if (!y.m_[k].is_zero()) m_[k] += y.m_[k];
    }
    return *this;
}

FiberEndo operator*(const FiberEndo& x, const FiberEndo& y) {
    FiberEndo r(x.n_, x.dim_);
    for (int i = 0; i < x.dim_; ++i) {
        for (int k = 0; k < x.dim_; ++k) {
            const ParamScalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < x.dim_; ++j) {
                const ParamScalar& ykj = y.at(k, j);
                if (ykj.is_zero()) continue;
                r.at(i, j) += xik * ykj;
            }
        }
    }
    return r;
}

FiberEndo FiberEndo::scaled(const ParamScalar& c) const {
    FiberEndo r(n_, dim_);
    if (c.is_zero()) return r;
    for (size_t k = 0; k < m_.size(); ++k)
        if (!m_[k].is_zero()) r.m_[k] = m_[k] * c;
    return r;
}

ParamScalar FiberEndo::trace_product(const FiberEndo& x, const FiberEndo& y) {
    ParamScalar s;
    for (int i = 0; i < x.dim_; ++i)
        for (int j = 0; j < x.dim_; ++j) {
            const ParamScalar& xij = x.at(i, j);
            if (xij.is_zero()) continue;
            const ParamScalar& yji = y.at(j, i);
            if (yji.is_zero()) continue;
            s += xij * yji;
        }
    return s;
}

Fiber::Fiber(int n) : n_(n), dim_(1 << n) {
    masks_.resize(dim_);
    for (int m = 0; m < dim_; ++m) masks_[m] = static_cast<unsigned>(m);
    std::sort(masks_.begin(), masks_.end(), [](unsigned p, unsigned q) {
        int cp = std::popcount(p), cq = std::popcount(q);
        if (cp != cq) return cp < cq;
        // lexicographic on the sorted element lists: smaller lowest set bit first
        while (p && q) {
            unsigned lp = p & -p, lq = q & -q;
            if (lp != lq) return lp < lq;
            p &= p - 1;
            q &= q - 1;
        }
        return p < q;
    });
    index_.resize(dim_);
    for (int k = 0; k < dim_; ++k) index_[masks_[k]] = k;
}

FiberEndo Fiber::eps(const Covector& v) const {
    FiberEndo m = zero();
    for (int k = 0; k < dim_; ++k) {
        unsigned J = masks_[k];
        for (int i = 0; i < n_; ++i) {
            if (v[i].is_zero()) continue;
            unsigned bit = 1u << i;
            if (J & bit) continue;
            int sign = std::popcount(J & (bit - 1)) % 2 ? -1 : 1;
            ParamScalar& e = m.at(index_[J | bit], k);
            e += sign > 0 ? v[i] : -v[i];
        }
    }
    return m;
}

FiberEndo Fiber::iota(const Covector& v) const {
    FiberEndo m = zero();
    for (int k = 0; k < dim_; ++k) {
        unsigned J = masks_[k];
        for (int i = 0; i < n_; ++i) {
            if (v[i].is_zero()) continue;
            unsigned bit = 1u << i;
            if (!(J & bit)) continue;
            int sign = std::popcount(J & (bit - 1)) % 2 ? -1 : 1;
            ParamScalar& e = m.at(index_[J & ~bit], k);
            e += sign > 0 ? v[i] : -v[i];
        }
    }
    return m;
}

FiberEndo Fiber::c(const Covector& v) const { return eps(v) - iota(v); }

FiberEndo Fiber::c_hat(const Covector& v) const { return eps(v) + iota(v); }

FiberEndo Fiber::c_tilde(const Covector& v, const Params& p) const {
    return eps(v).scaled(p.a()) - iota(v).scaled(p.b());
}

FiberEndo Fiber::c_bar(const Covector& v, const Params& p) const {
    return eps(v).scaled(p.b()) - iota(v).scaled(p.a());
}

ParamScalar Fiber::trace_permuted(const FiberEndo& m, const std::vector<int>& perm) const {
    // conjugating by a basis permutation leaves the diagonal sum intact;
    // recompute it through the permuted indexing as an independent route
    ParamScalar s;
    for (int k = 0; k < dim_; ++k) s += m.at(perm[k], perm[k]);
    return s;
}

const Fiber& fiber4() {
    static const Fiber f(4);
    return f;
}

}  // namespace nmres
