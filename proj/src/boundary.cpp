#include "nmres/boundary.hpp"

#include "nmres/errors.hpp"
#include "nmres/identities.hpp"
#include "nmres/rng.hpp"
#include "nmres/symbol.hpp"

namespace nmres {

namespace {

const Fiber& f4 = fiber4();

// i * cbar(xi' + xi_n dx_n) as a linear polynomial in xi_n; tangential
// slots 0..2 carry xi', slot 3 is the normal direction
std::vector<FiberPoly> adjoint_leading_boundary(const Params& p) {
    ParamScalar i = ParamScalar::i();
    FiberPoly tangential = c_bar_xi(f4, p, 0, 3).scaled(i);
    Covector dxn = Covector::basis(4, 3);
    FiberPoly normal = FiberPoly::constant(f4.c_bar(dxn, p).scaled(i));
    return {tangential, normal};
}

std::string point_text(const GaussRat& a, const GaussRat& b) {
    return "(a0,b0)=(" + a.to_string() + "," + b.to_string() + ")";
}

}  // namespace

SphereValue BoundaryDensity::reconstruct(const Covector& u, const Covector& v,
                                         const Covector& w) const {
    ParamScalar val = ku * u[3] * inner(v, w) + kv * v[3] * inner(u, w) +
                      kw * w[3] * inner(u, v);
    return SphereValue{val, pi_power};
}

XiNRational sigma_minus1_inverse_adjoint(const Params& p) {
    std::vector<FiberPoly> m = adjoint_leading_boundary(p);

    // Clifford square: m(xi)^2 must be phi * (1 + xi_n^2) Id modulo |xi'|^2 = 1
    std::vector<FiberPoly> sq(3, FiberPoly(4));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sq[i + j] += m[i] * m[j];
    for (auto& f : sq) f = f.reduce_sphere2();

    FiberPoly id = FiberPoly::constant(f4.identity());
    XiExp zero_exp{0, 0, 0, 0};
    ParamScalar phi;
    if (auto it = sq[2].terms().find(zero_exp); it != sq[2].terms().end())
        phi = it->second.at(0, 0);
    if (phi.is_zero() || !(sq[2] == id.scaled(phi)) || !sq[1].is_zero() ||
        !(sq[0] == id.scaled(phi)))
        throw SingularSymbol("adjoint leading symbol has no scalar Clifford square");

    ParamScalar inv_phi = ParamScalar::one() / phi;
    XiNRational t = XiNRational::from_quotient(
        {m[0].scaled(inv_phi), m[1].scaled(inv_phi)}, 1);

    // verification: both products reduce to the identity
    XiNRational m_rat = XiNRational::poly_part_only(m);
    XiNRational idr = XiNRational::poly_part_only({id});
    if (!((m_rat * t).reduce_sphere2() == idr) || !((t * m_rat).reduce_sphere2() == idr))
        throw SingularSymbol("inverse verification failed");
    return t;
}

XiNRational projected_inverse_printed(const Params& p) {
    Covector dxn = Covector::basis(4, 3);
    ParamScalar i = ParamScalar::i();
    ParamScalar half_a = ParamScalar::one() / (ParamScalar(2) * p.a());
    ParamScalar half_b = ParamScalar::one() / (ParamScalar(2) * p.b());
    FiberPoly num = (eps_xi(f4, 0, 3) + FiberPoly::constant(f4.eps(dxn).scaled(i)))
                        .scaled(half_a) -
                    (iota_xi(f4, 0, 3) + FiberPoly::constant(f4.iota(dxn).scaled(i)))
                        .scaled(half_b);
    XiNRational r;
    r.set_pole_term({Pole::PlusI, 1}, num);
    return r;
}

XiNRational d_xi_n_sigma_minus2(const Params& p) {
    // resolvent numerator on the boundary cosphere, |xi|^2 = 1 + xi_n^2
    ParamScalar a = p.a(), b = p.b();
    ParamScalar ab2_inv = ParamScalar::one() / (a * a * b * b);
    FiberPoly id = FiberPoly::constant(f4.identity());
    FiberPoly ei_tt = eps_xi(f4, 0, 3) * iota_xi(f4, 0, 3);
    Covector dxn = Covector::basis(4, 3);
    FiberPoly eps_n = FiberPoly::constant(f4.eps(dxn));
    FiberPoly iota_n = FiberPoly::constant(f4.iota(dxn));
    FiberPoly cross = eps_xi(f4, 0, 3) * iota_n + eps_n * iota_xi(f4, 0, 3);
    FiberPoly ei_nn = eps_n * iota_n;

    ParamScalar bb = b * b, diff = a * a - b * b;
    std::vector<FiberPoly> num{
        (id.scaled(bb) + ei_tt.scaled(diff)).scaled(ab2_inv),
        cross.scaled(diff * ab2_inv),
        (id.scaled(bb) + ei_nn.scaled(diff)).scaled(ab2_inv),
    };
    return XiNRational::from_quotient(std::move(num), 2).derivative();
}

XiNRational d_xi_n_sigma_minus2_printed(const Params& p) {
    ParamScalar a = p.a(), b = p.b();
    ParamScalar lead = ParamScalar::one() / (a * a);
    ParamScalar diff = (a * a - b * b) / (a * a * b * b);
    FiberPoly id = FiberPoly::constant(f4.identity());
    FiberPoly ei_tt = eps_xi(f4, 0, 3) * iota_xi(f4, 0, 3);
    Covector dxn = Covector::basis(4, 3);
    FiberPoly eps_n = FiberPoly::constant(f4.eps(dxn));
    FiberPoly iota_n = FiberPoly::constant(f4.iota(dxn));
    FiberPoly ei_nn = eps_n * iota_n;
    FiberPoly cross_en = eps_xi(f4, 0, 3) * iota_n;
    FiberPoly cross_ne = eps_n * iota_xi(f4, 0, 3);

    // -2 xi_n/(1+xi_n^2)^2 on the identity part
    XiNRational r = XiNRational::from_quotient(
        {FiberPoly(4), id.scaled(ParamScalar(-2) * lead)}, 2);
    // (a0^2-b0^2)/(a0^2 b0^2) * [ -4 xi_n/(1+xi_n^2)^3 ei_nn
    //   + (-2 xi_n^2 + 2 xi_n)/(1+xi_n^2)^3 ei_tt
    //   + (1 - 3 xi_n^2)/(1+xi_n^2)^3 (cross terms) ]
    r = r + XiNRational::from_quotient(
                {FiberPoly(4), ei_nn.scaled(ParamScalar(-4) * diff), FiberPoly(4)}, 3);
    r = r + XiNRational::from_quotient({FiberPoly(4), ei_tt.scaled(ParamScalar(2) * diff),
                                        ei_tt.scaled(ParamScalar(-2) * diff)},
                                       3);
    FiberPoly cross = (cross_en + cross_ne).scaled(diff);
    r = r + XiNRational::from_quotient({cross, FiberPoly(4), cross.scaled(ParamScalar(-3))},
                                       3);
    return r;
}

std::vector<std::array<int, 5>> surviving_composition_terms() {
    // r - k + |alpha| + l - j - 1 = -4 with r <= -1, l <= -2; any positive
    // j, k or |alpha| differentiates an x-independent symbol at the working
    // point and dies. Search a generous window.
    std::vector<std::array<int, 5>> out;
    for (int r = -1; r >= -6; --r)
        for (int l = -2; l >= -6; --l)
            for (int j = 0; j <= 3; ++j)
                for (int k = 0; k <= 3; ++k)
                    for (int alpha = 0; alpha <= 3; ++alpha) {
                        if (r - k + alpha + l - j - 1 != -4) continue;
                        if (j > 0 || k > 0 || alpha > 0) continue;
                        out.push_back({r, l, j, k, alpha});
                    }
    return out;
}

SphereValue boundary_value(const Covector& u, const Covector& v, const Covector& w,
                           const Params& p) {
    FiberEndo m0 = f4.c_tilde(u, p) * f4.c_tilde(v, p) * f4.c_tilde(w, p);
    XiNRational lead = sigma_minus1_inverse_adjoint(p).pi_plus().left_mul(m0);
    XiNRational dres = d_xi_n_sigma_minus2(p);
    XiNRational traced = XiNRational::trace_product(lead, dres);

    XiNRational::LineIntegral line = traced.integrate();
    ScalarPoly over_sphere = from_fiber_scalar(line.value);
    SphereValue sphere = sphere2_integrate(over_sphere.reduce_sphere2());

    // composition-formula prefactor (-i) for the single surviving term
    return SphereValue{sphere.coeff * (-ParamScalar::i()), line.pi_power + sphere.pi_power};
}

BoundaryResult boundary_torsion(const Params& p, std::uint64_t seed) {
    auto surviving = surviving_composition_terms();
    if (surviving.size() != 1 || !(surviving[0] == std::array<int, 5>{-1, -2, 0, 0, 0}))
        throw EngineError("surviving composition-term set is not the expected singleton");

    const int n = 4;
    Covector e1 = Covector::basis(n, 0), e4 = Covector::basis(n, 3);

    SphereValue vu = boundary_value(e4, e1, e1, p);
    SphereValue vv = boundary_value(e1, e4, e1, p);
    SphereValue vw = boundary_value(e1, e1, e4, p);
    BoundaryDensity d{vu.coeff, vv.coeff, vw.coeff, 2};
    if (!((d.ku == -d.kv) && (d.ku == d.kw)))
        throw PatternBroken("boundary bracket pattern ku = -kv = kw failed");

    Rng rng(seed ^ 0xB0u);
    Covector ug = rng.covector(n), vg = rng.covector(n), wg = rng.covector(n);
    SphereValue direct = boundary_value(ug, vg, wg, p);
    if (!(direct == d.reconstruct(ug, vg, wg)))
        throw PatternBroken("boundary functional is not spanned by the three brackets");

    // claimed (theorem reading): numerator/(16 a0^2 b0^2) * pi * Vol(S^2)
    ParamScalar a = p.a(), b = p.b();
    ParamScalar a4 = a * a * a * a, b4 = b * b * b * b;
    ParamScalar numerator =
        a4 - b4 -
        ParamScalar::i() * (ParamScalar(2) * a4 + ParamScalar(2) * a * a * b * b -
                            ParamScalar(4) * a4);
    ParamScalar claimed = numerator * ParamScalar(4) / (ParamScalar(16) * a * a * b * b);

    ResidueReport rep;
    rep.functional = "boundary";
    rep.derived = SphereValue{d.ku, 2}.to_string();
    rep.claimed = SphereValue{claimed, 2}.to_string();
    rep.verdict = (d.ku == claimed) ? "Match" : "Mismatch";
    if (!rep.matched()) rep.delta = SphereValue{d.ku - claimed, 2}.to_string();
    rep.echoes.emplace_back(
        "theorem closed form x pi x Vol(S^2), Vol(S^2) = 4*pi",
        "(a0^4-b0^4-i*(2*a0^4+2*a0^2*b0^2-4*a0^4)) / (16*a0^2*b0^2)");
    rep.echoes.emplace_back(
        "intermediate form (x Tr(Id) x vol(S^2), denominator 64)",
        "(a0^4-b0^4-i*(2*a0^4+2*a0^2*b0^2-4*a0^4)) / (64*a0^2*b0^2)");

    // en-route verifications
    XiNRational projected = sigma_minus1_inverse_adjoint(p).pi_plus();
    rep.notes.push_back(projected == projected_inverse_printed(p)
                            ? "projected leading inverse equals its printed closed form"
                            : "projected leading inverse DIFFERS from its printed closed form");
    XiNRational deriv_delta = d_xi_n_sigma_minus2(p) - d_xi_n_sigma_minus2_printed(p);
    rep.notes.push_back(
        deriv_delta.is_zero()
            ? "resolvent xi_n-derivative equals its printed five-term expansion"
            : "resolvent xi_n-derivative DIFFERS from its printed five-term expansion "
              "(engine derivative kept; the printed tangential/normal eps-iota numerators "
              "disagree)");
    rep.notes.push_back("surviving composition term verified to be the singleton "
                        "(r,l,j,k,|alpha|) = (-1,-2,0,0,0)");
    {
        Rng irng(seed ^ 0x56u);
        for (const char* tag : {"Eq5.6", "Eq5.7", "Eq5.8-eps", "Eq5.8-iota", "Eq5.8-iei",
                                "Eq5.8-pair"}) {
            OracleCase c = find_identity(tag).run(irng, p);
            rep.notes.push_back(std::string("en-route ") + tag + ": " + c.verdict);
        }
    }
    if (p.is_symbolic()) {
        GaussRat one(1);
        rep.notes.push_back("derived coefficient at a0=b0=1: " +
                            SphereValue{ParamScalar(d.ku.eval(one, one)), 2}.to_string() +
                            " (claimed numerator vanishes there)");
        Rng prng(seed ^ 0x72u);
        for (int t = 0; t < 5; ++t) {
            GaussRat av = prng.rat(), bv = prng.rat();
            BoundaryResult numeric = boundary_torsion(Params::numeric(av, bv), seed);
            bool agree = numeric.density.ku == ParamScalar(d.ku.eval(av, bv));
            rep.cross_checks.emplace_back(point_text(av, bv), agree);
        }
    }
    return BoundaryResult{d, rep};
}

}  // namespace nmres
