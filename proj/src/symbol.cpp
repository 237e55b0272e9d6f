#include "nmres/symbol.hpp"

#include "nmres/errors.hpp"

namespace nmres {

HomogSymbol::HomogSymbol(int order, FiberPoly num, int denom_pow)
    : order_(order), num_(std::move(num)), denom_pow_(denom_pow) {
    if (denom_pow_ < 0) throw EngineError("negative |xi| denominator power");
    if (!num_.homogeneous_of_degree(order_ + 2 * denom_pow_) && !num_.is_zero())
        throw EngineError("inhomogeneous symbol numerator");
}

HomogSymbol HomogSymbol::lifted(int k) const {
    if (k == denom_pow_) return *this;
    if (k < denom_pow_) throw EngineError("cannot lower a symbol denominator");
    ScalarPoly lift = ScalarPoly::constant(ParamScalar::one());
    ScalarPoly nsq = ScalarPoly::xi_norm_sq();
    for (int j = denom_pow_; j < k; ++j) lift = lift * nsq;
    return HomogSymbol(order_, num_.scaled_poly(lift), k);
}

HomogSymbol operator+(const HomogSymbol& x, const HomogSymbol& y) {
    if (x.order_ != y.order_) throw EngineError("adding symbols of different orders");
    int k = std::max(x.denom_pow_, y.denom_pow_);
    return HomogSymbol(x.order_, x.lifted(k).num_ + y.lifted(k).num_, k);
}

HomogSymbol operator-(const HomogSymbol& x, const HomogSymbol& y) {
    if (x.order_ != y.order_) throw EngineError("subtracting symbols of different orders");
    int k = std::max(x.denom_pow_, y.denom_pow_);
    return HomogSymbol(x.order_, x.lifted(k).num_ - y.lifted(k).num_, k);
}

HomogSymbol operator*(const HomogSymbol& x, const HomogSymbol& y) {
    return HomogSymbol(x.order_ + y.order_, x.num_ * y.num_, x.denom_pow_ + y.denom_pow_);
}

bool operator==(const HomogSymbol& x, const HomogSymbol& y) {
    if (x.order() != y.order()) return false;
    int k = std::max(x.denom_pow(), y.denom_pow());
    return x.lifted(k).num() == y.lifted(k).num();
}

FiberEndo HomogSymbol::eval(const std::array<GaussRat, 4>& xi) const {
    GaussRat nsq;
    for (const auto& c : xi) nsq += c * c;
    if (nsq.is_zero()) throw EngineError("symbol evaluation at xi = 0");
    GaussRat den(1);
    for (int k = 0; k < denom_pow_; ++k) den *= nsq;
    return num_.eval(xi).scaled(ParamScalar(GaussRat(1) / den));
}

FiberPoly eps_xi(const Fiber& f, int lo, int hi) {
    std::vector<FiberEndo> coeff;
    coeff.reserve(f.n());
    for (int i = 0; i < f.n(); ++i) coeff.push_back(f.eps(Covector::basis(f.n(), i)));
    return FiberPoly::linear(coeff, lo, hi);
}

FiberPoly iota_xi(const Fiber& f, int lo, int hi) {
    std::vector<FiberEndo> coeff;
    coeff.reserve(f.n());
    for (int i = 0; i < f.n(); ++i) coeff.push_back(f.iota(Covector::basis(f.n(), i)));
    return FiberPoly::linear(coeff, lo, hi);
}

FiberPoly c_tilde_xi(const Fiber& f, const Params& p, int lo, int hi) {
    return eps_xi(f, lo, hi).scaled(p.a()) - iota_xi(f, lo, hi).scaled(p.b());
}

FiberPoly c_bar_xi(const Fiber& f, const Params& p, int lo, int hi) {
    return eps_xi(f, lo, hi).scaled(p.b()) - iota_xi(f, lo, hi).scaled(p.a());
}

GradedSymbol symbol_of_operator(const Covector& X, const Params& p, bool adjoint) {
    const Fiber& f = fiber4();
    GradedSymbol s;
    FiberPoly lead = adjoint ? c_bar_xi(f, p) : c_tilde_xi(f, p);
    s.set(HomogSymbol(1, lead.scaled(ParamScalar::i()), 0));
    s.set(HomogSymbol(0, FiberPoly::constant(f.c(X).scaled(ParamScalar::i())), 0));
    return s;
}

HomogSymbol laplacian_leading(const Params& p) {
    const Fiber& f = fiber4();
    FiberPoly ei = eps_xi(f) * iota_xi(f);
    FiberPoly idn = FiberPoly::constant(f.identity()).scaled_poly(ScalarPoly::xi_norm_sq());
    ParamScalar a = p.a(), b = p.b();
    return HomogSymbol(2, ei.scaled(b * b - a * a) + idn.scaled(a * a), 0);
}

namespace {

// recognize num as alpha*|xi|^2*Id + beta*eps(xi)iota(xi); the empty-set
// diagonal entry isolates alpha, the first one-form diagonal entry carries
// alpha + beta on xi_1^2
std::pair<ParamScalar, ParamScalar> split_leading(const HomogSymbol& s) {
    const Fiber& f = fiber4();
    ScalarPoly e00 = s.num().entry(0, 0);
    ScalarPoly e11 = s.num().entry(f.index_of(1u), f.index_of(1u));
    XiExp x1sq{2, 0, 0, 0};
    ParamScalar alpha, apb;
    if (auto it = e00.terms().find(x1sq); it != e00.terms().end()) alpha = it->second;
    if (auto it = e11.terms().find(x1sq); it != e11.terms().end()) apb = it->second;
    ParamScalar beta = apb - alpha;
    // confirm the assumed shape by reconstruction
    FiberPoly ei = eps_xi(f) * iota_xi(f);
    FiberPoly idn = FiberPoly::constant(f.identity()).scaled_poly(ScalarPoly::xi_norm_sq());
    if (!(idn.scaled(alpha) + ei.scaled(beta) == s.num()))
        throw NonInvertibleLeading("symbol is not of the alpha*|xi|^2 + beta*eps*iota shape");
    return {alpha, beta};
}

}  // namespace

HomogSymbol invert_leading(const HomogSymbol& s) {
    if ((s.order() + 2 * s.denom_pow()) != 2)
        throw NonInvertibleLeading("inverse requires a degree-2 numerator");
    auto [alpha, beta] = split_leading(s);
    ParamScalar apb = alpha + beta;
    if (alpha.is_zero() || apb.is_zero())
        throw NonInvertibleLeading("leading coefficients alpha, alpha+beta must be nonzero");

    const Fiber& f = fiber4();
    FiberPoly ei = eps_xi(f) * iota_xi(f);
    FiberPoly idn = FiberPoly::constant(f.identity()).scaled_poly(ScalarPoly::xi_norm_sq());
    ParamScalar scale = ParamScalar::one() / (alpha * apb);
    FiberPoly num = (idn.scaled(apb) - ei.scaled(beta)).scaled(scale);
    int tk = 2 - s.denom_pow();
    for (; tk < 0; ++tk) num = num.scaled_poly(ScalarPoly::xi_norm_sq());
    HomogSymbol t(-s.order(), num, tk);

    // verified two-sided inverse at order 0
    HomogSymbol id0(0, FiberPoly::constant(f.identity()), 0);
    if (!((s * t) == id0) || !((t * s) == id0))
        throw NonInvertibleLeading("inverse verification failed");
    return t;
}

HomogSymbol graded_product(const GradedSymbol& x, const GradedSymbol& y, int target) {
    HomogSymbol acc = HomogSymbol::zero(target);
    for (const auto& [px, sx] : x.parts()) {
        int need = target - px;
        if (!y.has(need)) continue;
        acc = acc + sx * y.part(need);
    }
    return acc;
}

HomogSymbol sigma_minus4_sq(const Params& p) {
    HomogSymbol inv = invert_leading(laplacian_leading(p));
    return inv * inv;
}

HomogSymbol sigma_minus4_printed(const Params& p) {
    const Fiber& f = fiber4();
    ParamScalar a = p.a(), b = p.b();
    ParamScalar a4 = a * a * a * a, b4 = b * b * b * b;
    FiberPoly ei = eps_xi(f) * iota_xi(f);
    FiberPoly idn = FiberPoly::constant(f.identity()).scaled_poly(ScalarPoly::xi_norm_sq());
    ParamScalar scale = ParamScalar::one() / (a4 * b4);
    return HomogSymbol(-4, (idn.scaled(b4) + ei.scaled(a4 - b4)).scaled(scale), 3);
}

HomogSymbol sigma1_perturbation(const Covector& X, const Params& p) {
    const Fiber& f = fiber4();
    FiberEndo cx = f.c(X);
    FiberPoly num = -(c_bar_xi(f, p).right_mul(cx) + c_tilde_xi(f, p).left_mul(cx));
    return HomogSymbol(1, num, 0);
}

HomogSymbol sigma_minus5_sq(const Covector& X, const Params& p) {
    HomogSymbol m2 = invert_leading(laplacian_leading(p));
    HomogSymbol m4 = m2 * m2;
    HomogSymbol s1 = sigma1_perturbation(X, p);
    return -(m2 * s1 * m4 + m4 * s1 * m2);
}

}  // namespace nmres
