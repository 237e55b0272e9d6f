#include "nmres/poly2.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace nmres {

namespace {

// --- univariate helpers over Q(i), used by the bivariate gcd ---

// coefficient vector, index = degree; no trailing zeros
using UPoly = std::vector<GaussRat>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool uzero(const UPoly& p) { return p.empty(); }

UPoly uadd(const UPoly& p, const UPoly& q) {
    UPoly r(std::max(p.size(), q.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        GaussRat c;
        if (k < p.size()) c += p[k];
        if (k < q.size()) c += q[k];
        r[k] = c;
    }
    utrim(r);
    return r;
}

UPoly uscale(const UPoly& p, const GaussRat& c) {
    if (c.is_zero()) return {};
    UPoly r = p;
    for (auto& x : r) x *= c;
    return r;
}

UPoly umul(const UPoly& p, const UPoly& q) {
    if (uzero(p) || uzero(q)) return {};
    UPoly r(p.size() + q.size() - 1);
    for (size_t ip = 0; ip < p.size(); ++ip)
        for (size_t iq = 0; iq < q.size(); ++iq)
            r[ip + iq] += p[ip] * q[iq];
    utrim(r);
    return r;
}

// remainder of p by monic-normalized d (field coefficients)
UPoly urem(UPoly p, const UPoly& d) {
    while (!uzero(p) && p.size() >= d.size()) {
        GaussRat f = p.back() / d.back();
        size_t shift = p.size() - d.size();
        for (size_t k = 0; k < d.size(); ++k) p[shift + k] -= f * d[k];
        utrim(p);
    }
    return p;
}

UPoly udiv_exact(UPoly p, const UPoly& d) {
    UPoly q(p.size() >= d.size() ? p.size() - d.size() + 1 : 0);
    while (!uzero(p) && p.size() >= d.size()) {
        GaussRat f = p.back() / d.back();
        size_t shift = p.size() - d.size();
        q[shift] = f;
        for (size_t k = 0; k < d.size(); ++k) p[shift + k] -= f * d[k];
        utrim(p);
    }
    if (!uzero(p)) throw EngineError("inexact univariate division");
    utrim(q);
    return q;
}

UPoly umonic(UPoly p) {
    if (uzero(p)) return p;
    GaussRat lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

UPoly ugcd(UPoly p, UPoly q) {
    while (!uzero(q)) {
        UPoly r = urem(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    return umonic(p);
}

// --- recursive view: polynomial in a0 with UPoly-in-b0 coefficients ---

using RPoly = std::vector<UPoly>;  // index = a0 degree

void rtrim(RPoly& p) {
    while (!p.empty() && uzero(p.back())) p.pop_back();
}

RPoly to_recursive(const Poly2& p) {
    RPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.first >= static_cast<int>(r.size())) r.resize(e.first + 1);
        UPoly& u = r[e.first];
        if (e.second >= static_cast<int>(u.size())) u.resize(e.second + 1);
        u[e.second] = c;
    }
    for (auto& u : r) utrim(u);
    rtrim(r);
    return r;
}

Poly2 from_recursive(const RPoly& r) {
    Poly2 p;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j)
            if (!r[i][j].is_zero())
                p += Poly2::monomial(static_cast<int>(i), static_cast<int>(j), r[i][j]);
    return p;
}

UPoly rcontent(const RPoly& p) {
    UPoly c;
    for (const auto& u : p) {
        if (uzero(u)) continue;
        c = uzero(c) ? umonic(u) : ugcd(c, u);
        if (c.size() == 1) break;  // unit content
    }
    return c;
}

RPoly rdiv_content(const RPoly& p, const UPoly& c) {
    RPoly r = p;
    for (auto& u : r)
        if (!uzero(u)) u = udiv_exact(u, c);
    return r;
}

RPoly rscale(const RPoly& p, const UPoly& c) {
    RPoly r = p;
    for (auto& u : r) u = umul(u, c);
    return r;
}

RPoly rsub(const RPoly& p, const RPoly& q) {
    RPoly r(std::max(p.size(), q.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        UPoly x = k < p.size() ? p[k] : UPoly{};
        UPoly y = k < q.size() ? uscale(q[k], GaussRat(-1)) : UPoly{};
        r[k] = uadd(x, y);
    }
    rtrim(r);
    return r;
}

RPoly rshift(const RPoly& p, size_t s) {
    if (p.empty()) return p;
    RPoly r(p.size() + s);
    for (size_t k = 0; k < p.size(); ++k) r[k + s] = p[k];
    return r;
}

// pseudo-remainder of p by d in the main variable a0
RPoly rprem(RPoly p, const RPoly& d) {
    const UPoly& lcd = d.back();
    while (!p.empty() && p.size() >= d.size()) {
        size_t shift = p.size() - d.size();
        UPoly lcp = p.back();
        p = rsub(rscale(p, lcd), rscale(rshift(d, shift), lcp));
    }
    return p;
}

// min exponent pair over all terms (monomial content exponents)
ExpPair min_exponents(const Poly2& p) {
    int ma = std::numeric_limits<int>::max(), mb = ma;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        ma = std::min(ma, e.first);
        mb = std::min(mb, e.second);
    }
    return {ma, mb};
}

}  // namespace

Poly2 Poly2::constant(const GaussRat& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int deg_a, int deg_b, const GaussRat& c) {
    Poly2 p;
    if (!c.is_zero()) p.terms_[{deg_a, deg_b}] = c;
    return p;
}

bool Poly2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
           terms_.begin()->second.is_one();
}

bool Poly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0});
}

int Poly2::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        d = std::max(d, e.first + e.second);
    }
    return d;
}

std::pair<ExpPair, GaussRat> Poly2::leading() const {
    return *terms_.rbegin();  // map ordered by (i, j): rbegin is lex-largest
}

GaussRat Poly2::eval(const GaussRat& a, const GaussRat& b) const {
    GaussRat r;
    for (const auto& [e, c] : terms_) {
        GaussRat t = c;
        for (int k = 0; k < e.first; ++k) t *= a;
        for (int k = 0; k < e.second; ++k) t *= b;
        r += t;
    }
    return r;
}

void Poly2::add_term(ExpPair e, const GaussRat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly2 operator+(const Poly2& p, const Poly2& q) {
    Poly2 r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

Poly2 operator-(const Poly2& p, const Poly2& q) {
    Poly2 r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

Poly2 operator*(const Poly2& p, const Poly2& q) {
    Poly2 r;
    for (const auto& [ep, cp] : p.terms_)
        for (const auto& [eq, cq] : q.terms_)
            r.add_term({ep.first + eq.first, ep.second + eq.second}, cp * cq);
    return r;
}

Poly2 Poly2::scaled(const GaussRat& c) const {
    Poly2 r;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 r = one();
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
}

std::optional<Poly2> Poly2::div_exact(const Poly2& p, const Poly2& d) {
    if (d.is_zero()) return std::nullopt;
    if (p.is_zero()) return zero();
    if (d.is_one()) return p;
    if (d.is_constant()) {
        GaussRat inv = GaussRat(1) / d.terms_.begin()->second;
        return p.scaled(inv);
    }
    Poly2 rem = p, quot;
    auto [de, dc] = d.leading();
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading();
        int ea = re.first - de.first;
        int eb = re.second - de.second;
        if (ea < 0 || eb < 0) return std::nullopt;
        Poly2 t = monomial(ea, eb, rc / dc);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

Poly2 Poly2::gcd(const Poly2& p, const Poly2& q) {
    auto normalize = [](const Poly2& g) {
        if (g.is_zero()) return g;
        return g.scaled(GaussRat(1) / g.leading().second);
    };
    if (p.is_zero()) return normalize(q);
    if (q.is_zero()) return normalize(p);
    if (p.is_constant() || q.is_constant()) return one();

    // monomial fast path: exponent-wise minimum against every term
    if (p.is_monomial() || q.is_monomial()) {
        ExpPair mp = min_exponents(p), mq = min_exponents(q);
        return monomial(std::min(mp.first, mq.first), std::min(mp.second, mq.second),
                        GaussRat(1));
    }

    RPoly rp = to_recursive(p), rq = to_recursive(q);

    // pure-b0 case: both degree 0 in a0
    if (rp.size() == 1 && rq.size() == 1) {
        UPoly g = ugcd(rp[0], rq[0]);
        return normalize(from_recursive({g}));
    }

    UPoly cp = rcontent(rp), cq = rcontent(rq);
    RPoly pp = rdiv_content(rp, cp), qq = rdiv_content(rq, cq);
    UPoly cg = ugcd(cp, cq);

    // primitive pseudo-remainder sequence in a0
    if (pp.size() < qq.size()) std::swap(pp, qq);
    while (!qq.empty()) {
        RPoly r = rprem(pp, qq);
        if (!r.empty()) {
            UPoly cr = rcontent(r);
            r = rdiv_content(r, cr);
        }
        pp = std::move(qq);
        qq = std::move(r);
    }

    Poly2 g = from_recursive(rscale(pp, cg));
    return normalize(g);
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    // print highest lex term first
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool needs_paren = cs.find('+') != std::string::npos ||
                           cs.find('-', 1) != std::string::npos;
        std::string mono;
        if (e.first > 0) mono += "a0" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "b0" + (e.second > 1 ? "^" + std::to_string(e.second) : "");
        }
        std::string term;
        if (mono.empty()) {
            term = needs_paren ? "(" + cs + ")" : cs;
        } else if (c.is_one()) {
            term = mono;
        } else if (c == GaussRat(-1)) {
            term = "-" + mono;
        } else {
            term = (needs_paren ? "(" + cs + ")" : cs) + "*" + mono;
        }
        if (first) {
            s = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s;
}

}  // namespace nmres
