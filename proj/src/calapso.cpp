#include "lisurf/calapso.hpp"

#include <cmath>
#include <limits>

namespace lisurf {

namespace {

TrivializationOptions unchecked_seed(const LinMap31& seed) {
    TrivializationOptions o;
    o.seed = seed;
    o.flat_tol = -1.0;
    return o;
}

Net<Complex> project_net(const Net<Vec31>& g, const char* who) {
    return g.map([&](const Vec31& v) {
        const auto z = stereo_project(v, 1e-8);
        if (!z) throw DegenerateError(std::string(who) + ": a vertex of the Gauss map projects to infinity");
        return *z;
    });
}

LinMap31 frame_seed(const SurfaceBundle& b) {
    if (b.frame) return sl2_to_o31(b.frame->at({0, 0}).inverse());
    return LinMap31::identity();
}

}  // namespace

CalapsoState calapso(const Net<Vec31>& x, const Net<Vec31>& g, const EdgeLabelling& labels, double t,
                     const LinMap31& seed) {
    if (!(x.domain() == g.domain())) throw InputError("calapso: domain mismatch");
    if (!labels.matches(g.domain())) throw InputError("calapso: labelling does not match domain");
    CalapsoState s;
    s.t = t;
    s.T = integrate_T(g, labels, t, unchecked_seed(seed));
    s.g = apply_pointwise(s.T, g);
    s.labels = labels.shifted(t);

    EdgeDiff dx(x.domain());
    dx.for_each_edge([&](VertexId i, VertexId j, Vec31& d) {
        const LinMap31& ti = s.T.at(i);
        const LinMap31& tj = s.T.at(j);
        const Vec31& gi = g.at(i);
        const Vec31& gj = g.at(j);
        const Vec31& xi = x.at(i);
        const Vec31& xj = x.at(j);
        const double c = t / (labels.edge(i, j) * inner(gi, gj));
        d = ti.apply(xi) - tj.apply(xj) + c * (inner(gi, xi) * tj.apply(gj) - inner(gj, xj) * ti.apply(gi));
    });
    s.closure = closure(dx, 1e-9);
    s.x = integrate_differences(dx, s.T.at({0, 0}).apply(x.at({0, 0})), {}, PathOrder::rows_first,
                                std::numeric_limits<double>::infinity());
    return s;
}

SurfaceBundle calapso_bundle(const SurfaceBundle& b, double t) {
    const CalapsoState s = calapso(b.x, b.gn, b.labels, t);
    SurfaceBundle out;
    out.x = s.x;
    out.gn = s.g;
    out.space = {b.space.mu, SpaceKind::general};
    out.labels = s.labels;
    out.phi = project_net(s.g, "calapso_bundle");
    out.prov.representation = "calapso";
    out.prov.params = {{"t", t}, {"base_mu", b.space.mu}};
    out.prov.notes = {{"base", b.prov.representation}, {"seed", "T(0,0) = id, x(t)(0,0) = x(0,0)"}};
    return out;
}

CheckReport label_shift_check(const CalapsoState& s, double tol) {
    CheckReport r = is_discrete_holomorphic(project_net(s.g, "label_shift_check"), s.labels, tol);
    r.check = "label_shift";
    return r;
}

double additivity_check(const Net<Vec31>& g, const EdgeLabelling& labels, double t, double s) {
    const auto id = unchecked_seed(LinMap31::identity());
    const Net<LinMap31> tt = integrate_T(g, labels, t, id);
    const Net<LinMap31> tts = integrate_T(g, labels, t + s, id);
    const Net<LinMap31> ts = integrate_T(apply_pointwise(tt, g), labels.shifted(t), s, id);
    double r = 0.0;
    for (std::size_t k = 0; k < tt.values().size(); ++k)
        r = std::max(r, (tts.values()[k] - ts.values()[k] * tt.values()[k]).op_norm());
    return r;
}

double inverse_check(const Net<Vec31>& g, const EdgeLabelling& labels, double t) {
    const auto id = unchecked_seed(LinMap31::identity());
    const Net<LinMap31> tt = integrate_T(g, labels, t, id);
    const Net<LinMap31> inv = integrate_T(apply_pointwise(tt, g), labels.shifted(t), -t, id);
    double r = 0.0;
    for (std::size_t k = 0; k < tt.values().size(); ++k)
        r = std::max(r, (tt.values()[k] * inv.values()[k] - LinMap31::identity()).op_norm());
    return r;
}

SurfaceBundle lawson_transform(const SurfaceBundle& quadric, double m) {
    if (quadric.space.kind != SpaceKind::quadric) throw InputError("lawson_transform: input is not a quadric net");
    const double built = quadric.prov.param("m", std::numeric_limits<double>::quiet_NaN());
    if (!(std::abs(built - m) <= 1e-12 * std::max(1.0, std::abs(m))))
        throw InputError("lawson_transform: m does not match the parameter the bundle was built with");
    const double mu = quadric.space.mu;
    const Vec31 p = quadric_point(mu);
    const LinMap31 seed = frame_seed(quadric);
    if ((seed.apply(quadric.x.at({0, 0})) - p).max_abs() > 1e-9 * std::max(1.0, p.max_abs()))
        throw InputError("lawson_transform: bundle is not T(m)^-1 p for the recorded frame");

    const Net<Vec31> g = light_cone_lift(quadric.phi);
    const Net<LinMap31> T = integrate_T(g, quadric.labels, m, unchecked_seed(seed));
    const Net<Vec31> gm = apply_pointwise(T, g);
    const EdgeLabelling lm = quadric.labels.shifted(m);
    EdgeForm zeta = zeta_from_lift(gm, lm);
    zeta.for_each_edge([&](VertexId, VertexId, Bivector& b) { b *= m; });

    // (x, p) = -1 is needed on the isotropic side.
    Vec31 x0 = p;
    if (mu == 0.0) x0 = x0 + (1.0 + inner(x0, p)) * kIsotropicOrigin;

    SurfaceBundle out;
    out.x = integrate_edge_form(zeta, p, x0);
    out.space = {-mu, SpaceKind::hyperplane};
    out.labels = lm;
    out.phi = project_net(gm, "lawson_transform");
    out.gn = section_gn(gm, p);
    if (mu != 0.0) out.normal = out.gn.map([&](const Vec31& v) { return v + p / mu; });
    out.prov.representation = "lawson";
    out.prov.params = {{"m", m}, {"base_mu", mu}, {"mu", -mu}};
    out.prov.notes = {{"increment", "dx(m)_ij = -m zeta(m)_ij(p)"},
                      {"seed", mu == 0.0 ? "x(m)(0,0) = p + o" : "x(m)(0,0) = p"}};
    return out;
}

Net<Complex> secondary_gauss(const SurfaceBundle& quadric, double m) {
    if (quadric.space.kind != SpaceKind::quadric) throw InputError("secondary_gauss: input is not a quadric net");
    const Net<Vec31> g = light_cone_lift(quadric.phi);
    const Net<LinMap31> T = integrate_T(g, quadric.labels, m, unchecked_seed(frame_seed(quadric)));
    return project_net(apply_pointwise(T, g), "secondary_gauss");
}

}  // namespace lisurf
