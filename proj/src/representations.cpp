#include "lisurf/representations.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lisurf {

namespace {

constexpr double kNoTol = std::numeric_limits<double>::infinity();

Herm diag_herm(double p, double q) { return Herm{p, q, Complex{}}; }

Herm negate(const Herm& h) { return Herm{-h.p, -h.q, -h.z}; }

void require_holomorphic_domain(const Net<Complex>& phi, const EdgeLabelling& labels, const char* who) {
    if (!labels.matches(phi.domain())) throw InputError(std::string(who) + ": labelling does not match domain");
}

// Psi_j = Psi_i B(-m)_ij for psi with labels l - m.
Net<SL2> rep2_frame(const Net<Complex>& psi, const EdgeLabelling& labels, double m, const SL2& seed) {
    require_holomorphic_domain(psi, labels, "rep2");
    check_pole(labels, m);
    const EdgeLabelling lpsi = labels.shifted(m);
    return propagate<SL2>(psi.domain(), {}, seed, [&](VertexId i, VertexId j, const SL2& pi) {
        return pi * b_matrix(psi.at(i), psi.at(j), lpsi.edge(i, j), -m);
    });
}

}  // namespace

const char* to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::hyperplane: return "hyperplane";
        case SpaceKind::quadric: return "quadric";
        case SpaceKind::general: return "general";
    }
    return "general";
}

Vec31 hyperplane_normal(double mu) { return 0.5 * (1.0 + mu) * e0 + 0.5 * (1.0 - mu) * e3; }
Vec31 quadric_point(double mu) { return 0.5 * (1.0 - mu) * e0 + 0.5 * (1.0 + mu) * e3; }

Vec31 SpaceForm::p() const {
    if (kind == SpaceKind::general) throw InputError("SpaceForm::p: general nets carry no space-form vector");
    return kind == SpaceKind::hyperplane ? hyperplane_normal(mu) : quadric_point(mu);
}

double Provenance::param(const std::string& key, double fallback) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return fallback;
}

Net<Vec31> section_gn(const Net<Vec31>& g, const Vec31& anchor) {
    return section_gn(g, Net<Vec31>(g.domain(), anchor));
}

Net<Vec31> section_gn(const Net<Vec31>& g, const Net<Vec31>& anchor) {
    if (!(g.domain() == anchor.domain())) throw InputError("section_gn: domain mismatch");
    std::vector<Vec31> out;
    out.reserve(g.values().size());
    std::ostringstream bad;
    int nbad = 0;
    const auto& dom = g.domain();
    for (int n = 0; n <= dom.N(); ++n)
        for (int m = 0; m <= dom.M(); ++m) {
            const Vec31& gv = g(n, m);
            const Vec31& av = anchor(n, m);
            const double p = inner(gv, av);
            if (std::abs(p) <= 1e-12 * gv.norm_euclid() * std::max(1.0, av.norm_euclid())) {
                if (nbad++ < 8) bad << " (" << n << "," << m << ")";
                out.push_back(gv);
                continue;
            }
            out.push_back(gv / -p);
        }
    if (nbad > 0)
        throw DegenerateError("section_gn: lift orthogonal to the anchor at " + std::to_string(nbad) +
                              " vertices:" + bad.str());
    return Net<Vec31>(dom, std::move(out));
}

SurfaceBundle weier_hyperplane(const Net<Complex>& phi, const EdgeLabelling& labels, double mu,
                               std::optional<Vec31> seed) {
    require_holomorphic_domain(phi, labels, "weier_hyperplane");
    const Vec31 p = hyperplane_normal(mu);
    Vec31 x0 = mu == 0.0 ? kIsotropicOrigin : Vec31{};
    if (seed) x0 = *seed;
    if (mu == 0.0 && std::abs(inner(x0, p) + 1.0) > 1e-12)
        throw InputError("weier_hyperplane: for mu = 0 the seed must satisfy (seed, p) = -1");
    const Net<Vec31> g = light_cone_lift(phi);
    const Net<Vec31> gn = section_gn(g, p);
    const EdgeForm zeta = zeta_from_lift(g, labels);

    SurfaceBundle b;
    b.x = integrate_edge_form(zeta, p, x0);
    b.gn = gn;
    b.space = {mu, SpaceKind::hyperplane};
    b.labels = labels;
    b.phi = phi;
    if (mu != 0.0) b.normal = gn.map([&](const Vec31& v) { return v - p / mu; });
    b.prov.representation = "hyperplane";
    b.prov.params = {{"mu", mu}, {"seed_x0", x0[0]}, {"seed_x1", x0[1]}, {"seed_x2", x0[2]}, {"seed_x3", x0[3]}};
    b.prov.notes = {{"increment", "dx_ij = -zeta_ij(p)"}};
    return b;
}

SurfaceBundle weier_quadric(const Net<Complex>& phi, const EdgeLabelling& labels, double m, double mu,
                            const SL2& seed) {
    require_holomorphic_domain(phi, labels, "weier_quadric");
    check_pole(labels, m);
    const auto& dom = phi.domain();
    for (int n = 0; n < dom.N(); ++n)
        for (int k = 0; k < dom.M(); ++k) {
            const double h = check_flat_sl2(phi, labels, m, n, k);
            if (h > 1e-8)
                throw NotClosedError("weier_quadric: projective holonomy " + std::to_string(h) + " at face " +
                                     to_string(Site{Site::Kind::face, n, k}));
        }
    const Net<SL2> frame = propagate<SL2>(dom, {}, seed, [&](VertexId i, VertexId j, const SL2& fi) {
        return b_matrix(phi.at(i), phi.at(j), labels.edge(i, j), m).inverse() * fi;
    });
    const Herm base = diag_herm(1.0, -mu);

    SurfaceBundle b;
    b.x = frame.map([&](const SL2& f) { return from_herm(act(f, base)); });
    b.gn = section_gn(light_cone_lift(phi), b.x);
    if (mu != 0.0) b.normal = hyperbolic_gauss_lift(b.x, b.gn, mu);
    b.space = {mu, SpaceKind::quadric};
    b.labels = labels;
    b.phi = phi;
    b.frame = frame;
    b.prov.representation = "quadric";
    b.prov.params = {{"mu", mu}, {"m", m}};
    b.prov.notes = {{"frame", "Phi_j = B(m)_ij^-1 Phi_i, Phi(0,0) = seed"}};
    return b;
}

SurfaceBundle rep2(const Net<Complex>& psi, const EdgeLabelling& labels, double m, double mu, const SL2& seed) {
    const Net<SL2> frame = rep2_frame(psi, labels, m, seed);
    const Herm base = diag_herm(1.0, -mu);
    const auto& dom = psi.domain();

    std::vector<Complex> phi;
    phi.reserve(psi.values().size());
    for (std::size_t k = 0; k < psi.values().size(); ++k) phi.push_back(mobius(frame.values()[k].mat(), psi.values()[k]));

    SurfaceBundle b;
    b.x = frame.map([&](const SL2& f) { return from_herm(act(f, base)); });
    b.phi = Net<Complex>(dom, std::move(phi));
    b.gn = section_gn(light_cone_lift(b.phi), b.x);
    if (mu != 0.0) b.normal = hyperbolic_gauss_lift(b.x, b.gn, mu);
    b.space = {mu, SpaceKind::quadric};
    b.labels = labels;
    b.frame = frame;
    b.prov.representation = "rep2";
    b.prov.params = {{"mu", mu}, {"m", m}};
    b.prov.notes = {{"frame", "Psi_j = Psi_i B(-m)_ij on labels l - m, Psi(0,0) = seed"}};
    return b;
}

Mat2 hoffmann_step(Complex psi_i, Complex psi_j, double l, double lambda) {
    const Complex d = psi_i - psi_j;
    if (d == Complex{}) throw DegenerateError("hoffmann_step: coincident endpoints");
    const Complex s = l * d;
    const Mat2 mtx{s - lambda * psi_i, lambda * psi_i * psi_j, Complex(-lambda), s + lambda * psi_j};
    return (1.0 / s) * mtx;
}

Net<Mat2> hoffmann_E(const Net<Complex>& psi, const EdgeLabelling& labels, double lambda, const Mat2& seed) {
    require_holomorphic_domain(psi, labels, "hoffmann_E");
    return propagate<Mat2>(psi.domain(), {}, seed, [&](VertexId i, VertexId j, const Mat2& ei) {
        return ei * hoffmann_step(psi.at(i), psi.at(j), labels.edge(i, j), lambda);
    });
}

CheckReport hoffmann_det_check(const Net<Mat2>& e, const EdgeLabelling& labels, double lambda, double tol) {
    CheckReport r{"hoffmann_det", {}};
    for_each_edge(e.domain(), [&](VertexId i, VertexId j) {
        const double l = labels.edge(i, j);
        const Complex di = e.at(i).det();
        const Complex dj = e.at(j).det();
        const double res = std::abs(dj - (l - lambda) / l * di) / std::max(std::abs(di), 1e-300);
        r.items.push_back({edge_site(i, j), {{"det_recurrence", res, tol}}});
    });
    return r;
}

Net<Herm> hoffmann_Y(const Net<Mat2>& e) {
    return e.map([](const Mat2& m) { return Herm::from_mat((1.0 / m.det()) * (m * m.adjoint())); });
}

CheckReport duality_formula_check(const Net<Mat2>& e, const Net<Complex>& psi, const EdgeLabelling& labels,
                                  double lambda, double tol) {
    CheckReport r{"duality_formula", {}};
    for_each_edge(e.domain(), [&](VertexId i, VertexId j) {
        const Complex phi_i = mobius(e.at(i), psi.at(i));
        const Complex phi_j = mobius(e.at(j), psi.at(j));
        const double l = labels.edge(i, j);
        const Mat2 predicted = e.at(i).inverse() * hoffmann_step(phi_i, phi_j, l - lambda, -lambda);
        const Mat2 actual = e.at(j).inverse();
        const double res = (predicted - actual).max_abs() / std::max(actual.max_abs(), 1e-300);
        r.items.push_back({edge_site(i, j), {{"duality", res, tol}}});
    });
    return r;
}

Net<Herm> dual_cmc(const Net<SL2>& psi, double mu) {
    const Herm base = diag_herm(1.0, -mu);
    return psi.map([&](const SL2& f) { return act(f.inverse(), base); });
}

CheckReport dual_recursion_check(const Net<SL2>& psi, const Net<Complex>& phi, const EdgeLabelling& labels, double m,
                                 double tol) {
    CheckReport r{"dual_recursion", {}};
    for_each_edge(psi.domain(), [&](VertexId i, VertexId j) {
        const SL2 b = b_matrix(phi.at(i), phi.at(j), labels.edge(i, j), m);
        const SL2 inv_i = psi.at(i).inverse();
        const SL2 inv_j = psi.at(j).inverse();
        r.items.push_back({edge_site(i, j),
                           {{"right", projective_distance(inv_j, inv_i * b), tol},
                            {"left", projective_distance(inv_j, b * inv_i), kNoTol}}});
    });
    return r;
}

LinearWeingartenPair brlw_pair(const Net<Vec31>& xM, const Net<Vec31>& g, double mu) {
    if (!(xM.domain() == g.domain())) throw InputError("brlw_pair: domain mismatch");
    const auto& dom = xM.domain();
    LinearWeingartenPair out{Net<Vec31>(dom), Net<Vec31>(dom), Net<Vec31>(dom), Net<Vec31>(dom), Net<Vec31>(dom)};
    for (std::size_t k = 0; k < xM.values().size(); ++k) {
        const Vec31& x = xM.values()[k];
        const Vec31& gv = g.values()[k];
        const double p = inner(gv, x);
        if (std::abs(p) <= 1e-14 * gv.norm_euclid() * std::max(1.0, x.norm_euclid()))
            throw DegenerateError("brlw_pair: (g, x^M) vanishes at a vertex");
        const Vec31 gt = gv / p;
        out.gt.values()[k] = gt;
        out.x_plus.values()[k] = x - (mu + 1.0) / (2.0 * p) * gv;
        out.x_minus.values()[k] = x - (mu - 1.0) / (2.0 * p) * gv;
        out.n_plus.values()[k] = -gt - out.x_plus.values()[k];
        out.n_minus.values()[k] = gt - out.x_minus.values()[k];
    }
    return out;
}

double weingarten_residual(const Net<Vec31>& x, const Net<Vec31>& n, double mu, int sign, int fn, int fm) {
    if (sign != 1 && sign != -1) throw InputError("weingarten_residual: sign must be +1 or -1");
    const double s = sign;
    const double h = mean_curvature(x, n, fn, fm).value;
    const double k = gauss_curvature(x, n, fn, fm).value;
    return std::abs((mu + s) * k - 2.0 * mu * h + (mu - s));
}

CheckReport weingarten_check(const Net<Vec31>& x, const Net<Vec31>& n, double mu, int sign, double tol) {
    CheckReport r{"weingarten", {}};
    for (int fn = 0; fn < x.domain().N(); ++fn)
        for (int fm = 0; fm < x.domain().M(); ++fm) {
            const CurvatureValue h = mean_curvature(x, n, fn, fm);
            const CurvatureValue k = gauss_curvature(x, n, fn, fm);
            r.items.push_back({{Site::Kind::face, fn, fm},
                               {{"weingarten", weingarten_residual(x, n, mu, sign, fn, fm), tol},
                                {"parallel_H", h.parallelism, tol},
                                {"parallel_K", k.parallelism, tol}}});
        }
    return r;
}

Herm bryant_C(Complex psi, double mu, int sign) {
    if (sign != 1 && sign != -1) throw InputError("bryant_C: sign must be +1 or -1");
    const double s = sign;
    const double r2 = std::norm(psi);
    const double d = 1.0 - mu * r2;
    if (std::abs(d) <= 1e-12) throw DegenerateError("bryant_C: 1 - mu |psi|^2 vanishes");
    return Herm{(1.0 + s * r2) / d, (s + mu * mu * r2) / d, (mu + s) * psi / d};
}

BryantNets bryant_rep(const Net<Complex>& psi, const EdgeLabelling& labels, double m, double mu, const SL2& seed) {
    const Net<SL2> frame = rep2_frame(psi, labels, m, seed);
    const auto& dom = psi.domain();
    BryantNets out{Net<Herm>(dom), Net<Herm>(dom), frame};
    for (std::size_t k = 0; k < psi.values().size(); ++k) {
        out.x_plus.values()[k] = act(frame.values()[k], bryant_C(psi.values()[k], mu, 1));
        out.x_minus.values()[k] = act(frame.values()[k], bryant_C(psi.values()[k], mu, -1));
    }
    return out;
}

ELWeingartenNets el_weingarten(const Net<Complex>& psi, const EdgeLabelling& labels, double lambda, double t,
                        const Mat2& seed) {
    require_holomorphic_domain(psi, labels, "el_weingarten");
    const auto& dom = psi.domain();
    ELWeingartenNets out;
    out.E = propagate<Mat2>(dom, {}, seed, [&](VertexId i, VertexId j, const Mat2& ei) {
        const double l = labels.edge(i, j);
        if (std::abs(1.0 - lambda / l) <= 1e-14) throw PoleError("el_weingarten: 1 - lambda / l vanishes");
        const Complex d = psi.at(j) - psi.at(i);
        if (d == Complex{}) throw DegenerateError("el_weingarten: coincident endpoints");
        const Complex s = 1.0 / std::sqrt(Complex(1.0 - lambda / l));
        return ei * Mat2{s, s * d, s * lambda / (l * d), s};
    });
    out.f_plus = Net<Herm>(dom);
    out.f_minus = Net<Herm>(dom);
    for (std::size_t k = 0; k < psi.values().size(); ++k) {
        const Complex p = psi.values()[k];
        const double tt = 1.0 + t * std::norm(p);
        if (std::abs(tt) <= 1e-12) throw DegenerateError("el_weingarten: 1 + t |psi|^2 vanishes");
        const Complex r = std::sqrt(Complex(tt));
        const Mat2 lmat{Complex{}, r, -1.0 / r, -t * std::conj(p) / r};
        const Mat2 el = out.E.values()[k] * lmat;
        const double sg = tt > 0.0 ? 1.0 : -1.0;
        const Mat2 dp{1.0, 0.0, 0.0, 1.0};
        const Mat2 dm{1.0, 0.0, 0.0, -1.0};
        out.f_plus.values()[k] = Herm::from_mat(Complex(sg) * (el * dp * el.adjoint()));
        out.f_minus.values()[k] = Herm::from_mat(Complex(sg) * (el * dm * el.adjoint()));
    }
    return out;
}

Net<Herm> to_herm_net(const Net<Vec31>& x) {
    return x.map([](const Vec31& v) { return to_herm(v); });
}

Net<Vec31> from_herm_net(const Net<Herm>& x) {
    return x.map([](const Herm& h) { return from_herm(h); });
}

double max_deviation(const Net<Herm>& x, const Net<Herm>& y, bool up_to_sign) {
    if (!(x.domain() == y.domain())) throw InputError("max_deviation: domain mismatch");
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t k = 0; k < x.values().size(); ++k) {
        plus = std::max(plus, x.values()[k].max_abs_diff(y.values()[k]));
        minus = std::max(minus, x.values()[k].max_abs_diff(negate(y.values()[k])));
    }
    return up_to_sign ? std::min(plus, minus) : plus;
}

CheckReport hyperplane_membership(const Net<Vec31>& x, const Vec31& p, double tol) {
    CheckReport r{"hyperplane", {}};
    const Vec31 x0 = x(0, 0);
    const auto& dom = x.domain();
    for (int n = 0; n <= dom.N(); ++n)
        for (int m = 0; m <= dom.M(); ++m) {
            const Vec31 d = x(n, m) - x0;
            const double s = d.norm_euclid() * p.norm_euclid();
            r.items.push_back({{Site::Kind::vertex, n, m}, {{"hyperplane", s > 0.0 ? std::abs(inner(d, p)) / s : 0.0, tol}}});
        }
    return r;
}

CheckReport edge_orthogonality(const Net<Vec31>& x, const Vec31& p, double tol) {
    CheckReport r{"edge_orthogonality", {}};
    for_each_edge(x.domain(), [&](VertexId i, VertexId j) {
        const Vec31 d = x.at(i) - x.at(j);
        const double s = d.norm_euclid() * p.norm_euclid();
        r.items.push_back({edge_site(i, j), {{"dx_p", s > 0.0 ? std::abs(inner(d, p)) / s : 0.0, tol}}});
    });
    return r;
}

CheckReport lightcone_curvature_check(const Net<Vec31>& x, const Net<Vec31>& g, double expected, double tol) {
    CheckReport r{"lightcone_mean_curvature", {}};
    for (int n = 0; n < x.domain().N(); ++n)
        for (int m = 0; m < x.domain().M(); ++m) {
            const CurvatureValue h = lightcone_mean_curvature(x, g, n, m);
            r.items.push_back({{Site::Kind::face, n, m},
                               {{"H_g", std::abs(h.value - expected), tol}, {"parallel", h.parallelism, tol}}});
        }
    return r;
}

std::vector<CheckReport> verify_bundle(const SurfaceBundle& b, double tol) {
    std::vector<CheckReport> out;
    const double mu = b.space.mu;
    if (b.space.kind == SpaceKind::hyperplane) out.push_back(edge_orthogonality(b.x, b.space.p(), tol));
    if (b.space.kind == SpaceKind::quadric) out.push_back(quadric_membership(b.x, mu, tol));
    out.push_back(planarity(b.x, tol));
    out.push_back(circularity(b.x, tol));
    out.push_back(christoffel_check(b.x, b.gn, tol));
    if (b.space.kind == SpaceKind::general) return out;
    out.push_back(lightcone_curvature_check(b.x, b.gn, 0.0, tol));
    if (b.normal) {
        const double h = b.space.kind == SpaceKind::hyperplane ? 0.0 : 1.0 / std::sqrt(std::abs(mu));
        out.push_back(mean_curvature_check(b.x, *b.normal, h, tol));
    }
    return out;
}

}  // namespace lisurf
