#include "lisurf/connection.hpp"

#include <cmath>
#include <sstream>

namespace lisurf {

Net<Vec31> light_cone_lift(const Net<Complex>& phi) {
    return phi.map([](const Complex& z) { return stereo_lift(z); });
}

Net<Vec31> moutard_lift(const Net<Vec31>& g, const EdgeLabelling& labels, double seed_scale, double tol) {
    if (!labels.matches(g.domain())) throw InputError("moutard_lift: labelling does not match domain");
    if (seed_scale == 0.0) throw InputError("moutard_lift: zero seed scale");
    const Net<double> rho = propagate<double>(g.domain(), {}, seed_scale, [&](VertexId i, VertexId j, double ri) {
        const double p = inner(g.at(i), g.at(j));
        if (p == 0.0) throw DegenerateError("moutard_lift: orthogonal lifts on edge " + to_string(edge_site(i, j)));
        return 1.0 / (ri * labels.edge(i, j) * p);
    });
    std::vector<Vec31> out;
    out.reserve(g.values().size());
    for (std::size_t k = 0; k < g.values().size(); ++k) out.push_back(rho.values()[k] * g.values()[k]);
    Net<Vec31> gt(g.domain(), std::move(out));
    double worst = 0.0;
    for_each_edge(g.domain(), [&](VertexId i, VertexId j) {
        worst = std::max(worst, std::abs(labels.edge(i, j) * inner(gt.at(i), gt.at(j)) - 1.0));
    });
    if (worst > tol) {
        std::ostringstream os;
        os << "moutard_lift: scale propagation inconsistent (max edge residual " << worst
           << "); input is not isothermic for this labelling";
        throw NotClosedError(os.str());
    }
    return gt;
}

CheckReport moutard_check(const Net<Vec31>& gt, const EdgeLabelling& labels, double tol) {
    CheckReport r{"moutard", {}};
    for_each_edge(gt.domain(), [&](VertexId i, VertexId j) {
        r.items.push_back(
            {edge_site(i, j), {{"edge_product", std::abs(labels.edge(i, j) * inner(gt.at(i), gt.at(j)) - 1.0), tol}}});
    });
    for (int n = 0; n < gt.domain().N(); ++n)
        for (int m = 0; m < gt.domain().M(); ++m) {
            const Diagonals d = diagonals(gt, n, m);
            const double s = d.ik.norm_euclid() * d.jl.norm_euclid();
            r.items.push_back({{Site::Kind::face, n, m}, {{"diagonal", s > 0.0 ? wedge(d.ik, d.jl).norm() / s : 0.0, tol}}});
        }
    return r;
}

void check_pole(const EdgeLabelling& labels, double t) {
    std::ostringstream os;
    bool hit = false;
    for (std::size_t n = 0; n < labels.a().size(); ++n)
        if (std::abs(t - labels.a()[n]) <= 1e-8 * std::abs(labels.a()[n])) {
            os << " a[" << n << "]";
            hit = true;
        }
    for (std::size_t m = 0; m < labels.b().size(); ++m)
        if (std::abs(t - labels.b()[m]) <= 1e-8 * std::abs(labels.b()[m])) {
            os << " b[" << m << "]";
            hit = true;
        }
    if (hit) throw PoleError("spectral parameter " + std::to_string(t) + " hits a pole at labels" + os.str());
}

LinMap31 gamma_edge(const Vec31& gi, const Vec31& gj, double l, double t) {
    if (std::abs(t - l) <= 1e-8 * std::abs(l)) throw PoleError("gamma_edge: t coincides with the edge label");
    if (t == 0.0) return LinMap31::identity();
    return hyperbolic_rotation(gi, gj, 1.0 - t / l);
}

double check_flat(const Net<Vec31>& g, const EdgeLabelling& labels, double t, int n, int m) {
    const Face f = g.domain().face(n, m);
    const LinMap31 h = gamma_edge(g.at(f.i), g.at(f.j), labels.horizontal(n), t) *
                       gamma_edge(g.at(f.j), g.at(f.k), labels.vertical(m), t) *
                       gamma_edge(g.at(f.k), g.at(f.l), labels.horizontal(n), t) *
                       gamma_edge(g.at(f.l), g.at(f.i), labels.vertical(m), t);
    return (h - LinMap31::identity()).op_norm();
}

CheckReport flatness(const Net<Vec31>& g, const EdgeLabelling& labels, double t, double tol) {
    if (!labels.matches(g.domain())) throw InputError("flatness: labelling does not match domain");
    check_pole(labels, t);
    CheckReport r{"flatness", {}};
    for (int n = 0; n < g.domain().N(); ++n)
        for (int m = 0; m < g.domain().M(); ++m)
            r.items.push_back({{Site::Kind::face, n, m}, {{"holonomy", check_flat(g, labels, t, n, m), tol}}});
    return r;
}

Net<LinMap31> integrate_T(const Net<Vec31>& g, const EdgeLabelling& labels, double t, const TrivializationOptions& opt) {
    if (!labels.matches(g.domain())) throw InputError("integrate_T: labelling does not match domain");
    check_pole(labels, t);
    if (opt.flat_tol > 0.0) {
        const CheckReport f = flatness(g, labels, t, opt.flat_tol);
        if (!f.pass())
            throw NotClosedError("integrate_T: connection is not flat (max holonomy " + std::to_string(f.max_residual()) + ")");
    }
    return propagate<LinMap31>(
        g.domain(), opt.seed_vertex, opt.seed,
        [&](VertexId i, VertexId j, const LinMap31& ti) {
            return ti * gamma_edge(g.at(i), g.at(j), labels.edge(i, j), t);
        },
        opt.order);
}

SL2 b_matrix(Complex phi_i, Complex phi_j, double l, double m) {
    if (phi_i == phi_j) throw DegenerateError("b_matrix: coincident endpoints");
    if (!(l * (l - m) > 0.0)) throw InputError("b_matrix: l (l - m) must be positive");
    const Complex d = phi_i - phi_j;
    const Complex norm = d * std::sqrt(Complex(l)) * std::sqrt(Complex(l - m));
    const Mat2 b{(l * d - m * phi_i) / norm, m * phi_i * phi_j / norm, -m / norm, (l * d + m * phi_j) / norm};
    return SL2(b, 1e-8);
}

double check_flat_sl2(const Net<Complex>& phi, const EdgeLabelling& labels, double m, int n, int mm) {
    const Face f = phi.domain().face(n, mm);
    const SL2 h = b_matrix(phi.at(f.i), phi.at(f.j), labels.horizontal(n), m) *
                  b_matrix(phi.at(f.j), phi.at(f.k), labels.vertical(mm), m) *
                  b_matrix(phi.at(f.k), phi.at(f.l), labels.horizontal(n), m) *
                  b_matrix(phi.at(f.l), phi.at(f.i), labels.vertical(mm), m);
    return projective_distance(h, SL2::identity());
}

Net<SL2> integrate_F(const Net<Complex>& phi, const EdgeLabelling& labels, double m, const SL2Options& opt) {
    if (!labels.matches(phi.domain())) throw InputError("integrate_F: labelling does not match domain");
    check_pole(labels, m);
    if (opt.flat_tol > 0.0)
        for (int n = 0; n < phi.domain().N(); ++n)
            for (int k = 0; k < phi.domain().M(); ++k) {
                const double h = check_flat_sl2(phi, labels, m, n, k);
                if (h > opt.flat_tol)
                    throw NotClosedError("integrate_F: projective holonomy " + std::to_string(h) + " at face " +
                                         to_string(Site{Site::Kind::face, n, k}));
            }
    return propagate<SL2>(
        phi.domain(), opt.seed_vertex, opt.seed,
        [&](VertexId i, VertexId j, const SL2& fi) {
            return fi * b_matrix(phi.at(i), phi.at(j), labels.edge(i, j), m);
        },
        opt.order);
}

Net<Vec31> parallel_section(const Net<Vec31>& g, const EdgeLabelling& labels, double m, const Vec31& seed,
                            VertexId seed_vertex, double flat_tol) {
    if (!labels.matches(g.domain())) throw InputError("parallel_section: labelling does not match domain");
    check_pole(labels, m);
    if (flat_tol > 0.0) {
        const CheckReport f = flatness(g, labels, m, flat_tol);
        if (!f.pass())
            throw NotClosedError("parallel_section: connection is not flat (max holonomy " +
                                 std::to_string(f.max_residual()) + ")");
    }
    return propagate<Vec31>(g.domain(), seed_vertex, seed, [&](VertexId i, VertexId j, const Vec31& xi) {
        return gamma_edge(g.at(j), g.at(i), labels.edge(i, j), m).apply(xi);
    });
}

Net<Vec31> apply_pointwise(const Net<LinMap31>& t, const Net<Vec31>& x) {
    if (!(t.domain() == x.domain())) throw InputError("apply_pointwise: domain mismatch");
    std::vector<Vec31> out;
    out.reserve(x.values().size());
    for (std::size_t k = 0; k < x.values().size(); ++k) out.push_back(t.values()[k].apply(x.values()[k]));
    return Net<Vec31>(x.domain(), std::move(out));
}

double max_deviation(const Net<LinMap31>& a, const Net<LinMap31>& b) {
    if (!(a.domain() == b.domain())) throw InputError("max_deviation: domain mismatch");
    double r = 0.0;
    for (std::size_t k = 0; k < a.values().size(); ++k) r = std::max(r, a.values()[k].max_abs_diff(b.values()[k]));
    return r;
}

double max_orthogonality_residual(const Net<LinMap31>& t) {
    double r = 0.0;
    for (const auto& v : t.values()) r = std::max(r, v.orthogonality_residual());
    return r;
}

}  // namespace lisurf
