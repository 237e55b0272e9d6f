#include "nmres/identities.hpp"

#include "nmres/errors.hpp"

namespace nmres {

namespace {

const Fiber& f4 = fiber4();

std::string vec_text(const char* name, const Covector& v) {
    std::string s = std::string(name) + "=(";
    for (int i = 0; i < v.n(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s + ")";
}

ParamScalar g(const Covector& u, const Covector& v) { return inner(u, v); }

// g(u,X)g(v,w) - g(v,X)g(u,w) + g(w,X)g(u,v)
ParamScalar bracket_g(const Covector& u, const Covector& v, const Covector& w,
                      const Covector& X) {
    return g(u, X) * g(v, w) - g(v, X) * g(u, w) + g(w, X) * g(u, v);
}

// xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)
ParamScalar bracket_xi(const Covector& u, const Covector& v, const Covector& w,
                       const Covector& xi) {
    return bracket_g(u, v, w, xi);
}

// u_n g(v,w) - v_n g(u,w) + w_n g(u,v)
ParamScalar bracket_n(const Covector& u, const Covector& v, const Covector& w) {
    return bracket_g(u, v, w, Covector::basis(4, 3));
}

OracleCase make_case(std::string tag, std::string inst, ParamScalar closed,
                     ParamScalar brute) {
    OracleCase c;
    c.tag = std::move(tag);
    c.instantiation = std::move(inst);
    c.delta = brute - closed;
    c.verdict = c.delta.is_zero() ? "Match" : "Mismatch";
    c.closed_form = std::move(closed);
    c.brute_force = std::move(brute);
    return c;
}

// first nonzero entry of a matrix, as a discrepancy witness
ParamScalar witness(const FiberEndo& m) {
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (!m.at(r, c).is_zero()) return m.at(r, c);
    return ParamScalar::zero();
}

using Maker = std::function<OracleCase(Rng&, const Params&)>;

// matrix relation LHS(u,v) == scale * g(u,v) * Id
Maker relation(std::string tag,
               std::function<FiberEndo(const Covector&, const Covector&, const Params&)> lhs,
               std::function<ParamScalar(const Params&)> scale) {
    return [tag = std::move(tag), lhs = std::move(lhs),
            scale = std::move(scale)](Rng& rng, const Params& p) {
        Covector u = rng.covector(4), v = rng.covector(4);
        FiberEndo diff = lhs(u, v, p) - f4.identity().scaled(scale(p) * g(u, v));
        return make_case(tag, vec_text("u", u) + " " + vec_text("v", v),
                         ParamScalar::zero(), witness(diff));
    };
}

struct Tuple5 {
    Covector u{4}, v{4}, w{4}, X{4}, xi{4};
    std::string text;
};

Tuple5 draw5(Rng& rng) {
    Tuple5 t;
    t.u = rng.covector(4);
    t.v = rng.covector(4);
    t.w = rng.covector(4);
    t.X = rng.covector(4);
    t.xi = rng.covector(4);
    t.text = vec_text("u", t.u) + " " + vec_text("v", t.v) + " " + vec_text("w", t.w) +
             " " + vec_text("X", t.X) + " " + vec_text("xi", t.xi);
    return t;
}

// (u, v, w) random, xi' a rational point on the two-sphere, normal slot empty
Tuple5 draw_boundary(Rng& rng) {
    Tuple5 t;
    t.u = rng.covector(4);
    t.v = rng.covector(4);
    t.w = rng.covector(4);
    t.xi = rng.sphere2_point();
    t.text = vec_text("u", t.u) + " " + vec_text("v", t.v) + " " + vec_text("w", t.w) +
             " " + vec_text("xi'", t.xi);
    return t;
}

const ParamScalar kTrId(16);

}  // namespace

const std::vector<Identity>& identity_catalog() {
    static const std::vector<Identity> catalog = [] {
        std::vector<Identity> ids;
        auto add = [&ids](std::string tag, std::string desc, Maker run) {
            ids.push_back(Identity{std::move(tag), std::move(desc), std::move(run)});
        };

        // --- anticommutator relations (matrix identities) ---
        add("Eq2.2-c", "c(u)c(v) + c(v)c(u) = -2 g(u,v)",
            relation("Eq2.2-c",
                     [](const Covector& u, const Covector& v, const Params&) {
                         return f4.c(u) * f4.c(v) + f4.c(v) * f4.c(u);
                     },
                     [](const Params&) { return ParamScalar(-2); }));
        add("Eq2.2-chat", "chat(u)chat(v) + chat(v)chat(u) = 2 g(u,v)",
            relation("Eq2.2-chat",
                     [](const Covector& u, const Covector& v, const Params&) {
                         return f4.c_hat(u) * f4.c_hat(v) + f4.c_hat(v) * f4.c_hat(u);
                     },
                     [](const Params&) { return ParamScalar(2); }));
        add("Eq2.2-mixed", "c(u)chat(v) + chat(v)c(u) = 0",
            relation("Eq2.2-mixed",
                     [](const Covector& u, const Covector& v, const Params&) {
                         return f4.c(u) * f4.c_hat(v) + f4.c_hat(v) * f4.c(u);
                     },
                     [](const Params&) { return ParamScalar::zero(); }));
        add("Lemma3.6-1", "ctilde(u)c(v) + c(v)ctilde(u) = -(a0+b0) g(u,v)",
            relation("Lemma3.6-1",
                     [](const Covector& u, const Covector& v, const Params& p) {
                         return f4.c_tilde(u, p) * f4.c(v) + f4.c(v) * f4.c_tilde(u, p);
                     },
                     [](const Params& p) { return -(p.a() + p.b()); }));
        add("Lemma3.6-2", "ctilde(u)ctilde(v) + ctilde(v)ctilde(u) = -2 a0 b0 g(u,v)",
            relation("Lemma3.6-2",
                     [](const Covector& u, const Covector& v, const Params& p) {
                         return f4.c_tilde(u, p) * f4.c_tilde(v, p) +
                                f4.c_tilde(v, p) * f4.c_tilde(u, p);
                     },
                     [](const Params& p) { return ParamScalar(-2) * p.a() * p.b(); }));
        add("Lemma3.6-3", "ctilde(u)chat(v) + chat(v)ctilde(u) = (a0-b0) g(u,v)",
            relation("Lemma3.6-3",
                     [](const Covector& u, const Covector& v, const Params& p) {
                         return f4.c_tilde(u, p) * f4.c_hat(v) +
                                f4.c_hat(v) * f4.c_tilde(u, p);
                     },
                     [](const Params& p) { return p.a() - p.b(); }));

        // --- trilinear trace identities ---
        add("Lemma3.7-1",
            "Tr(ct(u)ct(v)ct(w)c(X)) = a0 b0 (a0+b0)/2 [bracket_g] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.c(t.X))
                                        .trace();
                ParamScalar closed = p.a() * p.b() * (p.a() + p.b()) / ParamScalar(2) *
                                     bracket_g(t.u, t.v, t.w, t.X) * kTrId;
                return make_case("Lemma3.7-1", t.text, closed, brute);
            });
        add("Lemma3.7-2",
            "Tr(ct(u)ct(v)ct(w)c(X)ei) = a0 b0 |xi|^2 (a0+b0)/4 [bracket_g] Tr(Id) + "
            "(a0^2 b0 - a0 b0^2)/4 xi(X) [bracket_xi] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.c(t.X) * ei)
                                        .trace();
                ParamScalar nsq = g(t.xi, t.xi);
                ParamScalar closed =
                    p.a() * p.b() * nsq * (p.a() + p.b()) / ParamScalar(4) *
                        bracket_g(t.u, t.v, t.w, t.X) * kTrId +
                    (p.a() * p.a() * p.b() - p.a() * p.b() * p.b()) / ParamScalar(4) *
                        g(t.xi, t.X) * bracket_xi(t.u, t.v, t.w, t.xi) * kTrId;
                return make_case("Lemma3.7-2", t.text, closed, brute);
            });

        // --- auxiliary traces, first printed variant (/4 coefficients) ---
        add("Eq3.29-pair", "Tr(ct(u)ct(v)ei) = -a0 b0/2 |xi|^2 g(u,v) Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * ei).trace();
                ParamScalar closed = -(p.a() * p.b()) / ParamScalar(2) * g(t.xi, t.xi) *
                                     g(t.u, t.v) * kTrId;
                return make_case("Eq3.29-pair", t.text, closed, brute);
            });
        add("Eq3.29-iota",
            "Tr(ct(u)ct(v)ct(w)iota(xi)) = -a0^2 b0/4 [bracket_xi] Tr(Id) (as printed)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.iota(t.xi))
                                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b()) / ParamScalar(4) *
                                     bracket_xi(t.u, t.v, t.w, t.xi) * kTrId;
                return make_case("Eq3.29-iota", t.text, closed, brute);
            });
        add("Eq3.29-eps",
            "Tr(ct(u)ct(v)ct(w)eps(xi)) = a0 b0^2/4 [bracket_xi] Tr(Id) (as printed)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.eps(t.xi))
                                        .trace();
                ParamScalar closed = (p.a() * p.b() * p.b()) / ParamScalar(4) *
                                     bracket_xi(t.u, t.v, t.w, t.xi) * kTrId;
                return make_case("Eq3.29-eps", t.text, closed, brute);
            });

        // --- auxiliary traces, second printed variant (/2 coefficients) ---
        add("Eq3.39-quad",
            "Tr(ct(u)ct(v)ct(w)ct(xi)) = a0^2 b0^2 [bracket_xi] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.c_tilde(t.xi, p))
                                        .trace();
                ParamScalar closed = p.a() * p.a() * p.b() * p.b() *
                                     bracket_xi(t.u, t.v, t.w, t.xi) * kTrId;
                return make_case("Eq3.39-quad", t.text, closed, brute);
            });
        add("Eq3.39-pair-iota",
            "Tr(ct(v)ct(w)ct(xi)iota(xi)) = -a0^2 b0/2 |xi|^2 g(v,w) Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute = (f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                                     f4.c_tilde(t.xi, p) * f4.iota(t.xi))
                                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b()) / ParamScalar(2) *
                                     g(t.xi, t.xi) * g(t.v, t.w) * kTrId;
                return make_case("Eq3.39-pair-iota", t.text, closed, brute);
            });
        add("Eq3.39-triple-iota",
            "Tr(ct(u)ct(v)ct(w)iota(xi)) = -a0^2 b0/2 [bracket_xi] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.iota(t.xi))
                                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b()) / ParamScalar(2) *
                                     bracket_xi(t.u, t.v, t.w, t.xi) * kTrId;
                return make_case("Eq3.39-triple-iota", t.text, closed, brute);
            });
        add("Eq3.40",
            "Tr(ct ct ct ct(xi) c(X) iota(xi)) = a0^2 b0 (a0+3 b0)/4 xi(X) [bracket_xi] "
            "Tr(Id) - a0^2 b0 (a0+b0)/4 |xi|^2 [bracket_g] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.c_tilde(t.xi, p) * f4.c(t.X) * f4.iota(t.xi))
                        .trace();
                ParamScalar a = p.a(), b = p.b();
                ParamScalar closed =
                    a * a * b * (a + ParamScalar(3) * b) / ParamScalar(4) * g(t.xi, t.X) *
                        bracket_xi(t.u, t.v, t.w, t.xi) * kTrId -
                    a * a * b * (a + b) / ParamScalar(4) * g(t.xi, t.xi) *
                        bracket_g(t.u, t.v, t.w, t.X) * kTrId;
                return make_case("Eq3.40", t.text, closed, brute);
            });
        add("Eq3.41",
            "Tr(ct ct ct ct(xi) ei) = a0^2 b0^2/2 |xi|^2 [bracket_xi] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.c_tilde(t.xi, p) * ei)
                                        .trace();
                ParamScalar closed = p.a() * p.a() * p.b() * p.b() / ParamScalar(2) *
                                     g(t.xi, t.xi) * bracket_xi(t.u, t.v, t.w, t.xi) *
                                     kTrId;
                return make_case("Eq3.41", t.text, closed, brute);
            });

        // --- quadrilinear perturbation traces ---
        auto pert = [](const Covector& xi, const Covector& X, const Params& p) {
            return f4.c_bar(xi, p) * f4.c(X) + f4.c(X) * f4.c_tilde(xi, p);
        };
        add("Lemma3.8-1",
            "Tr(ct ct ct ct(xi)(cbar(xi)c(X)+c(X)ct(xi))) = -a0^2 b0^2 (a0+b0) xi(X) "
            "[bracket_xi] Tr(Id)",
            [pert](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.c_tilde(t.xi, p) * pert(t.xi, t.X, p))
                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b() * p.b()) * (p.a() + p.b()) *
                                     g(t.xi, t.X) * bracket_xi(t.u, t.v, t.w, t.xi) *
                                     kTrId;
                return make_case("Lemma3.8-1", t.text, closed, brute);
            });
        add("Lemma3.8-2",
            "Tr(ct ct ct ct(xi)(pert)ei) = (a0^4 b0 - 5 a0^2 b0^3)/4 |xi|^2 xi(X) "
            "[bracket_xi] Tr(Id) - a0^2 b0 (a0+b0)(a0-b0)/4 |xi|^4 [bracket_g] Tr(Id)",
            [pert](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.c_tilde(t.xi, p) * pert(t.xi, t.X, p) * ei)
                        .trace();
                ParamScalar a = p.a(), b = p.b();
                ParamScalar nsq = g(t.xi, t.xi);
                ParamScalar closed =
                    (a * a * a * a * b - ParamScalar(5) * a * a * b * b * b) /
                        ParamScalar(4) * nsq * g(t.xi, t.X) *
                        bracket_xi(t.u, t.v, t.w, t.xi) * kTrId -
                    a * a * b * (a + b) * (a - b) / ParamScalar(4) * nsq * nsq *
                        bracket_g(t.u, t.v, t.w, t.X) * kTrId;
                return make_case("Lemma3.8-2", t.text, closed, brute);
            });
        add("Lemma3.8-3",
            "Tr(ct ct ct ct(xi)(ei cbar(xi)c(X) + ei c(X)ct(xi))) = -a0^2 b0^3 |xi|^2 "
            "xi(X) [bracket_xi] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                FiberEndo mid = ei * f4.c_bar(t.xi, p) * f4.c(t.X) +
                                ei * f4.c(t.X) * f4.c_tilde(t.xi, p);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.c_tilde(t.xi, p) * mid)
                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b() * p.b() * p.b()) *
                                     g(t.xi, t.xi) * g(t.xi, t.X) *
                                     bracket_xi(t.u, t.v, t.w, t.xi) * kTrId;
                return make_case("Lemma3.8-3", t.text, closed, brute);
            });
        add("Lemma3.8-4",
            "Tr(ct ct ct ct(xi)(ei cbar(xi)c(X) ei + ei c(X)ct(xi) ei)) = -a0^2 b0^3 "
            "|xi|^4 xi(X) [bracket_xi] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                FiberEndo mid = ei * f4.c_bar(t.xi, p) * f4.c(t.X) * ei +
                                ei * f4.c(t.X) * f4.c_tilde(t.xi, p) * ei;
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.c_tilde(t.xi, p) * mid)
                        .trace();
                ParamScalar nsq = g(t.xi, t.xi);
                ParamScalar closed = -(p.a() * p.a() * p.b() * p.b() * p.b()) * nsq * nsq *
                                     g(t.xi, t.X) * bracket_xi(t.u, t.v, t.w, t.xi) *
                                     kTrId;
                return make_case("Lemma3.8-4", t.text, closed, brute);
            });

        // --- linear-functional traces ---
        add("Lemma4.2-1", "Tr(ct(u)c(X)) = -(a0+b0)/2 g(u,X) Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c(t.X)).trace();
                ParamScalar closed =
                    -(p.a() + p.b()) / ParamScalar(2) * g(t.u, t.X) * kTrId;
                return make_case("Lemma4.2-1", t.text, closed, brute);
            });
        add("Lemma4.2-2",
            "Tr(ct(u)c(X)ei) = 1/4 (-a0 xi(X)xi(u) + b0 xi(X)xi(u) - (a0+b0)|xi|^2 "
            "g(u,X)) Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c(t.X) * ei).trace();
                ParamScalar closed =
                    (-(p.a()) * g(t.xi, t.X) * g(t.xi, t.u) +
                     p.b() * g(t.xi, t.X) * g(t.xi, t.u) -
                     (p.a() + p.b()) * g(t.xi, t.xi) * g(t.u, t.X)) /
                    ParamScalar(4) * kTrId;
                return make_case("Lemma4.2-2", t.text, closed, brute);
            });
        add("Lemma4.3-1",
            "Tr(ct(u)ct(xi)(cbar(xi)c(X)+c(X)ct(xi))) = a0 b0 (a0+b0) xi(X) xi(u) Tr(Id)",
            [pert](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.xi, p) * pert(t.xi, t.X, p)).trace();
                ParamScalar closed = p.a() * p.b() * (p.a() + p.b()) * g(t.xi, t.X) *
                                     g(t.xi, t.u) * kTrId;
                return make_case("Lemma4.3-1", t.text, closed, brute);
            });
        add("Lemma4.3-2",
            "Tr(ct(u)ct(xi)(pert)ei) = a0(3 b0^2 - a0^2)/2 |xi|^2 xi(X)xi(u) Tr(Id) + "
            "a0(a0^2-b0^2)/2 |xi|^2 g(u,X) Tr(Id)  [printed g(u,v) read as g(u,X)]",
            [pert](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.xi, p) *
                                     pert(t.xi, t.X, p) * ei)
                                        .trace();
                ParamScalar a = p.a(), b = p.b();
                ParamScalar nsq = g(t.xi, t.xi);
                ParamScalar closed =
                    (a * (ParamScalar(3) * b * b - a * a) / ParamScalar(2) * nsq *
                         g(t.xi, t.X) * g(t.xi, t.u) +
                     a * (a * a - b * b) / ParamScalar(2) * nsq * g(t.u, t.X)) *
                    kTrId;
                return make_case("Lemma4.3-2", t.text, closed, brute);
            });
        add("Lemma4.3-3",
            "Tr(ct(u)ct(xi)(ei cbar(xi)c(X) + ei c(X)ct(xi))) = (a0^3 b0 - a0 b0^3 + "
            "2 a0 b0^2)/2 |xi|^2 xi(X)xi(u) Tr(Id) - b0(a0^2-b0^2)/4 |xi|^2 g(u,X) "
            "Tr(Id)  [printed g(u,v) read as g(u,X)]",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                FiberEndo mid = ei * f4.c_bar(t.xi, p) * f4.c(t.X) +
                                ei * f4.c(t.X) * f4.c_tilde(t.xi, p);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.xi, p) * mid).trace();
                ParamScalar a = p.a(), b = p.b();
                ParamScalar nsq = g(t.xi, t.xi);
                ParamScalar closed =
                    ((a * a * a * b - a * b * b * b + ParamScalar(2) * a * b * b) /
                         ParamScalar(2) * nsq * g(t.xi, t.X) * g(t.xi, t.u) -
                     b * (a * a - b * b) / ParamScalar(4) * nsq * g(t.u, t.X)) *
                    kTrId;
                return make_case("Lemma4.3-3", t.text, closed, brute);
            });
        add("Lemma4.3-4",
            "Tr(ct(u)ct(xi)(ei cbar(xi)c(X) ei + ei c(X)ct(xi) ei)) = a0 b0^2 (a0+b0) "
            "|xi|^4 xi(X)xi(u) Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw5(rng);
                FiberEndo ei = f4.eps(t.xi) * f4.iota(t.xi);
                FiberEndo mid = ei * f4.c_bar(t.xi, p) * f4.c(t.X) * ei +
                                ei * f4.c(t.X) * f4.c_tilde(t.xi, p) * ei;
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.xi, p) * mid).trace();
                ParamScalar nsq = g(t.xi, t.xi);
                ParamScalar closed = p.a() * p.b() * p.b() * (p.a() + p.b()) * nsq * nsq *
                                     g(t.xi, t.X) * g(t.xi, t.u) * kTrId;
                return make_case("Lemma4.3-4", t.text, closed, brute);
            });

        // --- boundary traces at |xi'| = 1, normal covector dx_n = e4 ---
        add("Eq5.6",
            "Tr(ct(u)ct(v)ct(w)eps(xi')eps(dxn)iota(xi')) = -a0 b0^2/4 |xi'|^2 "
            "[bracket_n] Tr(Id)  [Tr(Id) factor included]",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw_boundary(rng);
                Covector dxn = Covector::basis(4, 3);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.eps(t.xi) * f4.eps(dxn) * f4.iota(t.xi))
                        .trace();
                ParamScalar closed = -(p.a() * p.b() * p.b()) / ParamScalar(4) *
                                     bracket_n(t.u, t.v, t.w) * kTrId;
                return make_case("Eq5.6", t.text, closed, brute);
            });
        add("Eq5.7",
            "Tr(ct(u)ct(v)ct(w)iota(xi')eps(xi')iota(dxn)) = -a0^2 b0/4 |xi'|^2 "
            "[bracket_n] Tr(Id)  [Tr(Id) factor included]",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw_boundary(rng);
                Covector dxn = Covector::basis(4, 3);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.iota(t.xi) * f4.eps(t.xi) * f4.iota(dxn))
                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b()) / ParamScalar(4) *
                                     bracket_n(t.u, t.v, t.w) * kTrId;
                return make_case("Eq5.7", t.text, closed, brute);
            });
        add("Eq5.8-eps", "Tr(ct(u)ct(v)ct(w)eps(dxn)) = a0 b0^2/2 [bracket_n] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw_boundary(rng);
                Covector dxn = Covector::basis(4, 3);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.eps(dxn))
                                        .trace();
                ParamScalar closed = p.a() * p.b() * p.b() / ParamScalar(2) *
                                     bracket_n(t.u, t.v, t.w) * kTrId;
                return make_case("Eq5.8-eps", t.text, closed, brute);
            });
        add("Eq5.8-iota", "Tr(ct(u)ct(v)ct(w)iota(dxn)) = -a0^2 b0/2 [bracket_n] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw_boundary(rng);
                Covector dxn = Covector::basis(4, 3);
                ParamScalar brute = (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) *
                                     f4.c_tilde(t.w, p) * f4.iota(dxn))
                                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b()) / ParamScalar(2) *
                                     bracket_n(t.u, t.v, t.w) * kTrId;
                return make_case("Eq5.8-iota", t.text, closed, brute);
            });
        add("Eq5.8-iei",
            "Tr(ct(u)ct(v)ct(w)iota(dxn)eps(dxn)iota(dxn)) = -a0^2 b0/2 [bracket_n] "
            "Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw_boundary(rng);
                Covector dxn = Covector::basis(4, 3);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.iota(dxn) * f4.eps(dxn) * f4.iota(dxn))
                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b()) / ParamScalar(2) *
                                     bracket_n(t.u, t.v, t.w) * kTrId;
                return make_case("Eq5.8-iei", t.text, closed, brute);
            });
        add("Eq5.8-pair",
            "Tr(ct(u)ct(v)ct(w)iota(dxn)eps(xi')iota(xi')) = -a0^2 b0/4 |xi'|^2 "
            "[bracket_n] Tr(Id)",
            [](Rng& rng, const Params& p) {
                Tuple5 t = draw_boundary(rng);
                Covector dxn = Covector::basis(4, 3);
                ParamScalar brute =
                    (f4.c_tilde(t.u, p) * f4.c_tilde(t.v, p) * f4.c_tilde(t.w, p) *
                     f4.iota(dxn) * f4.eps(t.xi) * f4.iota(t.xi))
                        .trace();
                ParamScalar closed = -(p.a() * p.a() * p.b()) / ParamScalar(4) *
                                     bracket_n(t.u, t.v, t.w) * kTrId;
                return make_case("Eq5.8-pair", t.text, closed, brute);
            });

        return ids;
    }();
    return catalog;
}

const Identity& find_identity(const std::string& tag) {
    for (const auto& id : identity_catalog())
        if (id.tag == tag) return id;
    throw UnknownTag("no identity registered under tag '" + tag + "'");
}

std::vector<std::string> tags_with_prefix(const std::string& prefix) {
    std::vector<std::string> out;
    for (const auto& id : identity_catalog())
        if (id.tag.rfind(prefix, 0) == 0) out.push_back(id.tag);
    return out;
}

}  // namespace nmres
