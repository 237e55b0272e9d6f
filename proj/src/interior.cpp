#include "nmres/interior.hpp"

#include "nmres/errors.hpp"
#include "nmres/identities.hpp"
#include "nmres/rng.hpp"

namespace nmres {

namespace {

ParamScalar pow_ps(const ParamScalar& x, int e) {
    ParamScalar r = ParamScalar::one();
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}

FiberEndo triple_c_tilde(const Covector& u, const Covector& v, const Covector& w,
                         const Params& p) {
    const Fiber& f = fiber4();
    return f.c_tilde(u, p) * f.c_tilde(v, p) * f.c_tilde(w, p);
}

// shared assembly of [ i c(X) s_{-4} + i ctilde(xi) s_{-5} ] left-multiplied
// by a constant endomorphism
HomogSymbol density_core(const FiberEndo& front, const Covector& X, const Params& p) {
    const Fiber& f = fiber4();
    HomogSymbol m4 = sigma_minus4_sq(p);
    HomogSymbol m5 = sigma_minus5_sq(X, p);
    ParamScalar i = ParamScalar::i();

    HomogSymbol part1 = m4.left_mul((front * f.c(X)).scaled(i));
    HomogSymbol ct_xi(1, c_tilde_xi(f, p), 0);
    HomogSymbol part2 = (ct_xi * m5).left_mul(front.scaled(i));
    return part1 + part2;
}

std::string pi_text(const ParamScalar& coeff, int pi_power) {
    return SphereValue{coeff, pi_power}.to_string();
}

// the four perturbation traces of the linear functional, by brute force
ParamScalar linear_pert_trace(int which, const Covector& u, const Covector& X,
                              const Covector& xi, const Params& p) {
    const Fiber& f = fiber4();
    FiberEndo ei = f.eps(xi) * f.iota(xi);
    FiberEndo pert = f.c_bar(xi, p) * f.c(X) + f.c(X) * f.c_tilde(xi, p);
    FiberEndo mid = f.zero();
    switch (which) {
        case 1: mid = pert; break;
        case 2: mid = pert * ei; break;
        case 3: mid = ei * pert; break;
        case 4: mid = ei * pert * ei; break;
    }
    return (f.c_tilde(u, p) * f.c_tilde(xi, p) * mid).trace();
}

// determine the true bilinear shape
//   Tr = c1 |xi|^(d-2) xi(X) xi(u) + c2 |xi|^d g(u,X)
// of a degree-d perturbation trace by structured instantiation, then verify
// it on a mixed and a random tuple
struct BilinearFit {
    ParamScalar c1, c2;
    bool consistent = false;
};

BilinearFit fit_linear_pert(int which, int degree, const Params& p, std::uint64_t seed) {
    const int n = 4;
    Covector e1 = Covector::basis(n, 0), e2 = Covector::basis(n, 1);
    BilinearFit fit;
    ParamScalar v11 = linear_pert_trace(which, e1, e1, e1, p);
    fit.c2 = linear_pert_trace(which, e1, e1, e2, p);
    fit.c1 = v11 - fit.c2;

    ParamScalar two_half = ParamScalar(1);
    for (int k = 0; k < (degree - 2) / 2; ++k) two_half *= ParamScalar(2);
    bool ok = linear_pert_trace(which, e1, e2, e1 + e2, p) == fit.c1 * two_half;

    Rng rng(seed ^ 0x43u);
    Covector ug = rng.covector(n), Xg = rng.covector(n), xig = rng.covector(n);
    ParamScalar nsq = inner(xig, xig);
    ParamScalar powm2 = ParamScalar::one(), pow0 = ParamScalar::one();
    for (int k = 0; k < (degree - 2) / 2; ++k) powm2 *= nsq;
    for (int k = 0; k < degree / 2; ++k) pow0 *= nsq;
    ok = ok && linear_pert_trace(which, ug, Xg, xig, p) ==
                   fit.c1 * powm2 * inner(xig, Xg) * inner(xig, ug) +
                       fit.c2 * pow0 * inner(ug, Xg);
    fit.consistent = ok;
    return fit;
}

std::string point_text(const GaussRat& a, const GaussRat& b) {
    return "(a0,b0)=(" + a.to_string() + "," + b.to_string() + ")";
}

// claimed torsion coefficient including the Vol(S^3) = 2 pi^2 factor:
// 12 i (a^4-b^4)(2b^2-3a^2-ab) / (16 a^4 b^3) * 2
ParamScalar claimed_torsion(const Params& p) {
    ParamScalar a = p.a(), b = p.b();
    ParamScalar a4 = pow_ps(a, 4), b4 = pow_ps(b, 4);
    ParamScalar num = ParamScalar(12) * ParamScalar::i() * (a4 - b4) *
                      (ParamScalar(2) * b * b - ParamScalar(3) * a * a - a * b);
    return num * ParamScalar(2) / (ParamScalar(16) * a4 * b * b * b);
}

// claimed one-form coefficient including Vol(S^3):
// i (a^2-b^2)(a-b)(11a^4+16a^3b+4a^2b^3+11a^2b^2+4ab^4+8ab^3-8b^4)/(4a^6b^4) * 2
ParamScalar claimed_one_form(const Params& p) {
    ParamScalar a = p.a(), b = p.b();
    ParamScalar big = ParamScalar(11) * pow_ps(a, 4) + ParamScalar(16) * pow_ps(a, 3) * b +
                      ParamScalar(4) * a * a * pow_ps(b, 3) +
                      ParamScalar(11) * a * a * b * b + ParamScalar(4) * a * pow_ps(b, 4) +
                      ParamScalar(8) * a * pow_ps(b, 3) - ParamScalar(8) * pow_ps(b, 4);
    ParamScalar num = ParamScalar::i() * (a * a - b * b) * (a - b) * big;
    return num * ParamScalar(2) / (ParamScalar(4) * pow_ps(a, 6) * pow_ps(b, 4));
}

}  // namespace

SphereValue TorsionCoefficients::reconstruct(const Covector& u, const Covector& v,
                                             const Covector& w, const Covector& X) const {
    ParamScalar val = k1 * inner(u, X) * inner(v, w) + k2 * inner(v, X) * inner(u, w) +
                      k3 * inner(w, X) * inner(u, v);
    return SphereValue{val, pi_power};
}

HomogSymbol torsion_density(const Covector& u, const Covector& v, const Covector& w,
                            const Covector& X, const Params& p) {
    return density_core(triple_c_tilde(u, v, w, p), X, p);
}

HomogSymbol one_form_density(const Covector& u, const Covector& X, const Params& p) {
    return density_core(fiber4().c_tilde(u, p), X, p);
}

SphereValue integrate_density(const HomogSymbol& density) {
    return sphere3_integrate(density.trace_on_sphere(), /*require_even=*/true);
}

TorsionResult spectral_torsion(const Params& p, std::uint64_t seed) {
    const int n = 4;
    Covector e1 = Covector::basis(n, 0), e2 = Covector::basis(n, 1);

    SphereValue v1 = integrate_density(torsion_density(e1, e2, e2, e1, p));
    SphereValue v2 = integrate_density(torsion_density(e1, e2, e1, e2, p));
    SphereValue v3 = integrate_density(torsion_density(e1, e1, e2, e2, p));

    TorsionCoefficients k{v1.coeff, v2.coeff, v3.coeff, 2};
    if (!((k.k1 == -k.k2) && (k.k1 == k.k3)))
        throw PatternBroken("torsion bracket pattern k1 = -k2 = k3 failed");

    // generic-tuple guard against functionals the bracket cannot carry
    Rng rng(seed);
    Covector ug = rng.covector(n), vg = rng.covector(n), wg = rng.covector(n),
             Xg = rng.covector(n);
    SphereValue direct = integrate_density(torsion_density(ug, vg, wg, Xg, p));
    if (!(direct == k.reconstruct(ug, vg, wg, Xg)))
        throw PatternBroken("torsion functional is not spanned by the three brackets");

    ParamScalar claimed = claimed_torsion(p);
    ResidueReport rep;
    rep.functional = "torsion";
    rep.derived = pi_text(k.k1, 2);
    rep.claimed = pi_text(claimed, 2);
    rep.verdict = (k.k1 == claimed) ? "Match" : "Mismatch";
    if (!rep.matched()) rep.delta = pi_text(k.k1 - claimed, 2);
    rep.echoes.emplace_back("closed form x Vol(S^3), Vol(S^3) = 2*pi^2",
                            "12*i*(a0^4-b0^4)*(2*b0^2-3*a0^2-a0*b0) / (16*a0^4*b0^3)");
    rep.echoes.emplace_back(
        "intermediate cosphere integral as printed (x Tr(Id), no explicit pi^2)",
        "3*i*(a0^4-b0^4)*(2*b0^2-3*a0^2-a0*b0) / (16*a0^4*b0^3) * 16");
    rep.notes.push_back(
        "normal coordinates at the working point: x-derivative composition terms and the "
        "order -3 resolvent part vanish there (assumed, not recomputed)");
    rep.notes.push_back(
        "bracket pattern k1 = -k2 = k3 verified; generic-tuple reconstruction verified");

    if (p.is_symbolic()) {
        Rng prng(seed ^ 0x70u);
        for (int t = 0; t < 5; ++t) {
            GaussRat a = prng.rat(), b = prng.rat();
            TorsionResult numeric = spectral_torsion(Params::numeric(a, b), seed);
            bool agree = numeric.coeffs.k1 == ParamScalar(k.k1.eval(a, b));
            rep.cross_checks.emplace_back(point_text(a, b), agree);
        }
    }
    return TorsionResult{k, rep};
}

OneFormResult spectral_one_form(const Params& p, std::uint64_t seed) {
    const int n = 4;
    Covector e1 = Covector::basis(n, 0), e2 = Covector::basis(n, 1);

    SphereValue diag = integrate_density(one_form_density(e1, e1, p));
    SphereValue off = integrate_density(one_form_density(e1, e2, p));
    if (!off.is_zero())
        throw PatternBroken("one-form residue depends on more than g(u,X)");

    Rng rng(seed ^ 0x1Fu);
    Covector ug = rng.covector(n), Xg = rng.covector(n);
    SphereValue direct = integrate_density(one_form_density(ug, Xg, p));
    if (!(direct.coeff == diag.coeff * inner(ug, Xg)))
        throw PatternBroken("one-form residue is not proportional to g(u,X)");

    ParamScalar claimed = claimed_one_form(p);
    ResidueReport rep;
    rep.functional = "one-form";
    rep.derived = pi_text(diag.coeff, 2);
    rep.claimed = pi_text(claimed, 2);
    rep.verdict = (diag.coeff == claimed) ? "Match" : "Mismatch";
    if (!rep.matched()) rep.delta = pi_text(diag.coeff - claimed, 2);
    rep.echoes.emplace_back(
        "closed form x Vol(S^3)",
        "i*(a0^2-b0^2)*(a0-b0)*(11*a0^4+16*a0^3*b0+4*a0^2*b0^3+11*a0^2*b0^2+4*a0*b0^4"
        "+8*a0*b0^3-8*b0^4) / (4*a0^6*b0^4)");
    rep.echoes.emplace_back(
        "intermediate cosphere integral as printed (x Tr(Id), no explicit pi^2)",
        "i*(a0^2-b0^2)*(a0-b0)*(11*a0^4+16*a0^3*b0+4*a0^2*b0^3+11*a0^2*b0^2+4*a0*b0^4"
        "+8*a0*b0^3-8*b0^4) / (16*a0^6*b0^4) * 16");
    rep.notes.push_back("off-diagonal instantiation vanished; generic reconstruction verified");

    // the perturbation trace identities feeding this functional, checked
    // against brute force; on a mismatch the true bilinear shape is fitted
    // and named
    {
        Rng irng(seed ^ 0x42u);
        for (const char* tag : {"Lemma4.2-1", "Lemma4.2-2"}) {
            OracleCase c = find_identity(tag).run(irng, p);
            rep.notes.push_back(std::string("en-route ") + tag + ": " + c.verdict);
        }
        const int degrees[4] = {2, 4, 4, 6};
        for (int which = 1; which <= 4; ++which) {
            std::string tag = "Lemma4.3-" + std::to_string(which);
            OracleCase c = find_identity(tag).run(irng, p);
            std::string note = "en-route " + tag + ": " + c.verdict;
            if (!c.matched()) {
                int d = degrees[which - 1];
                BilinearFit fit = fit_linear_pert(which, d, p, seed);
                ParamScalar per_trid(16);
                note += "; oracle bilinear form: (" + (fit.c1 / per_trid).to_string() +
                        ") * |xi|^" + std::to_string(d - 2) + " xi(X)xi(u) Tr(Id) + (" +
                        (fit.c2 / per_trid).to_string() + ") * |xi|^" + std::to_string(d) +
                        " g(u,X) Tr(Id)" +
                        (fit.consistent ? "" : " [shape check FAILED]");
            }
            rep.notes.push_back(note);
        }
    }

    if (p.is_symbolic()) {
        Rng prng(seed ^ 0x71u);
        for (int t = 0; t < 5; ++t) {
            GaussRat a = prng.rat(), b = prng.rat();
            OneFormResult numeric = spectral_one_form(Params::numeric(a, b), seed);
            bool agree = numeric.k == ParamScalar(diag.coeff.eval(a, b));
            rep.cross_checks.emplace_back(point_text(a, b), agree);
        }
    }
    return OneFormResult{diag.coeff, 2, rep};
}

SphereValue sanity_value(const Params& p) {
    return integrate_density(sigma_minus4_sq(p));
}

ResidueReport wres_laplacian_sanity(const Params& p) {
    SphereValue v = sanity_value(p);

    ResidueReport rep;
    rep.functional = "sanity";
    rep.derived = v.to_string();
    rep.claimed = "(32)*pi^2 at a0 = b0 = 1 (fiber dimension 16 times Vol(S^3))";

    ParamScalar a = p.a(), b = p.b();
    ParamScalar a4 = pow_ps(a, 4), b4 = pow_ps(b, 4);
    ParamScalar general = ParamScalar(16) * (a4 + b4) / (a4 * b4);

    bool ok = v.coeff == general && v.pi_power == 2;
    if (p.is_symbolic()) {
        GaussRat one(1);
        ok = ok && v.coeff.eval(one, one) == GaussRat(32);
    }
    rep.verdict = ok ? "Match" : "Mismatch";
    if (!ok) rep.delta = pi_text(v.coeff - general, 2);
    rep.echoes.emplace_back("general closed form of the derived integral",
                            "8*(a0^4+b0^4)/(a0^4*b0^4) * 2*pi^2");
    rep.notes.push_back("invariant under swapping a0 and b0");
    return rep;
}

}  // namespace nmres
