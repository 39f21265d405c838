#include "lisurf/netops.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace lisurf {

namespace {

Eigen::Vector4d ev(const Vec31& v) { return {v[0], v[1], v[2], v[3]}; }

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// B + c A = 0 with A, B proportional bivectors.
CurvatureValue proportionality(const Bivector& a, const Bivector& b, const char* what) {
    const double aa = pairing(a, a);
    const double scale = std::max(a.norm(), b.norm());
    if (!(a.norm() > 1e-14 * std::max(scale, 1e-300)) || aa == 0.0)
        throw DegenerateError(std::string(what) + ": degenerate face (vanishing mixed area)");
    const double c = -pairing(a, b) / aa;
    const Bivector r = b + c * a;
    return {c, r.norm() / scale};
}

}  // namespace

EdgeDiff edge_differences(const Net<Vec31>& x) {
    EdgeDiff d(x.domain());
    d.for_each_edge([&](VertexId i, VertexId j, Vec31& v) { v = x.at(i) - x.at(j); });
    return d;
}

Vec31 edge_midpoint(const Net<Vec31>& x, VertexId i, VertexId j) { return 0.5 * (x.at(i) + x.at(j)); }

Diagonals diagonals(const Net<Vec31>& x, int n, int m) {
    const Face f = x.domain().face(n, m);
    return {x.at(f.i) - x.at(f.k), x.at(f.j) - x.at(f.l)};
}

FaceReport is_planar(const Net<Vec31>& x, int n, int m, double tol) {
    const Face f = x.domain().face(n, m);
    Eigen::Matrix<double, 4, 3> a;
    a.col(0) = ev(x.at(f.j) - x.at(f.i));
    a.col(1) = ev(x.at(f.k) - x.at(f.i));
    a.col(2) = ev(x.at(f.l) - x.at(f.i));
    const Eigen::Vector3d s = a.jacobiSvd().singularValues();
    if (s(0) == 0.0) throw DegenerateError("is_planar: all vertices of the face coincide");
    return {{Site::Kind::face, n, m}, {{"planarity", s(2) / s(0), tol}}};
}

CheckReport planarity(const Net<Vec31>& x, double tol) {
    CheckReport r{"planarity", {}};
    for (int n = 0; n < x.domain().N(); ++n)
        for (int m = 0; m < x.domain().M(); ++m) r.items.push_back(is_planar(x, n, m, tol));
    return r;
}

namespace {

struct CircleFit {
    Vec31 center;
    double residual;
};

CircleFit fit_circle(const Net<Vec31>& x, int n, int m) {
    const Face f = x.domain().face(n, m);
    const Vec31 xi = x.at(f.i);
    const Vec31 d[3] = {x.at(f.j) - xi, x.at(f.k) - xi, x.at(f.l) - xi};
    Eigen::Matrix<double, 3, 4> a;
    Eigen::Vector3d rhs;
    double scale = 0.0;
    for (int r = 0; r < 3; ++r) {
        a.row(r) << -2.0 * d[r][0], 2.0 * d[r][1], 2.0 * d[r][2], 2.0 * d[r][3];
        rhs(r) = inner(d[r], d[r]);
        scale = std::max(scale, d[r].norm_euclid() * d[r].norm_euclid());
    }
    if (scale == 0.0) throw DegenerateError("is_circular: all vertices of the face coincide");
    const Eigen::Vector4d c = a.completeOrthogonalDecomposition().solve(rhs);
    const double res = (a * c - rhs).cwiseAbs().maxCoeff() / scale;
    return {xi + Vec31(c(0), c(1), c(2), c(3)), res};
}

}  // namespace

FaceReport is_circular(const Net<Vec31>& x, int n, int m, double tol) {
    return {{Site::Kind::face, n, m}, {{"circularity", fit_circle(x, n, m).residual, tol}}};
}

Vec31 circumcenter(const Net<Vec31>& x, int n, int m) { return fit_circle(x, n, m).center; }

CheckReport circularity(const Net<Vec31>& x, double tol) {
    CheckReport r{"circularity", {}};
    for (int n = 0; n < x.domain().N(); ++n)
        for (int m = 0; m < x.domain().M(); ++m) r.items.push_back(is_circular(x, n, m, tol));
    return r;
}

Bivector mixed_area(const Net<Vec31>& x, const Net<Vec31>& y, int n, int m) {
    const Diagonals dx = diagonals(x, n, m);
    const Diagonals dy = diagonals(y, n, m);
    return 0.25 * (wedge(dx.ik, dy.jl) - wedge(dx.jl, dy.ik));
}

CheckReport is_edge_parallel(const Net<Vec31>& x, const Net<Vec31>& y, double tol) {
    if (!(x.domain() == y.domain())) throw InputError("is_edge_parallel: domain mismatch");
    CheckReport r{"edge_parallel", {}};
    for_each_edge(x.domain(), [&](VertexId i, VertexId j) {
        const Vec31 a = x.at(i) - x.at(j);
        const Vec31 b = y.at(i) - y.at(j);
        const double na = a.norm_euclid();
        const double nb = b.norm_euclid();
        double res = 0.0;
        if ((na == 0.0) != (nb == 0.0)) res = 1.0;
        else if (na > 0.0) res = std::min(1.0, wedge(a, b).norm() / (na * nb));
        r.items.push_back({edge_site(i, j), {{"edge_parallel", res, tol}}});
    });
    return r;
}

CheckReport christoffel_check(const Net<Vec31>& x, const Net<Vec31>& y, double tol) {
    if (!(x.domain() == y.domain())) throw InputError("christoffel_check: domain mismatch");
    CheckReport r{"christoffel", {}};
    for (int n = 0; n < x.domain().N(); ++n)
        for (int m = 0; m < x.domain().M(); ++m) {
            const Diagonals dx = diagonals(x, n, m);
            const Diagonals dy = diagonals(y, n, m);
            const double scale = std::max(dx.ik.norm_euclid(), dx.jl.norm_euclid()) *
                                 std::max(dy.ik.norm_euclid(), dy.jl.norm_euclid());
            r.items.push_back({{Site::Kind::face, n, m},
                               {{"circularity_x", fit_circle(x, n, m).residual, tol},
                                {"circularity_y", fit_circle(y, n, m).residual, tol},
                                {"mixed_area", ratio(mixed_area(x, y, n, m).norm(), scale), tol}}});
        }
    r.append(is_edge_parallel(x, y, tol));
    return r;
}

EdgeForm zeta_from_pair(const Net<Vec31>& g, const Net<Vec31>& x) {
    if (!(x.domain() == g.domain())) throw InputError("zeta_from_pair: domain mismatch");
    EdgeForm w(g.domain());
    w.for_each_edge([&](VertexId i, VertexId j, Bivector& b) {
        b = wedge(edge_midpoint(g, i, j), x.at(i) - x.at(j));
    });
    return w;
}

EdgeForm zeta_from_lift(const Net<Vec31>& g, const EdgeLabelling& labels) {
    if (!labels.matches(g.domain())) throw InputError("zeta_from_lift: labelling does not match domain");
    EdgeForm w(g.domain());
    w.for_each_edge([&](VertexId i, VertexId j, Bivector& b) {
        const Vec31& gi = g.at(i);
        const Vec31& gj = g.at(j);
        const double p = inner(gi, gj);
        if (std::abs(p) <= 1e-14 * gi.norm_euclid() * gj.norm_euclid())
            throw DegenerateError("zeta_from_lift: orthogonal lifts on edge " + to_string(edge_site(i, j)));
        b = (-1.0 / (labels.edge(i, j) * p)) * wedge(gi, gj);
    });
    return w;
}

namespace {

template <class T>
double norm_of(const T& v) {
    if constexpr (std::is_same_v<T, Bivector>) return v.norm();
    else return v.norm_euclid();
}

template <class T>
CheckReport closure_impl(const EdgeField<T>& w, double tol) {
    const auto& dom = w.domain();
    CheckReport r{"closure", {}};
    for (int n = 0; n < dom.N(); ++n)
        for (int m = 0; m < dom.M(); ++m) {
            const Face f = dom.face(n, m);
            const double scale = norm_of(w.value(f.i, f.j)) + norm_of(w.value(f.j, f.k)) +
                                 norm_of(w.value(f.k, f.l)) + norm_of(w.value(f.l, f.i));
            r.items.push_back({{Site::Kind::face, n, m}, {{"closure", ratio(norm_of(w.circulation(n, m)), scale), tol}}});
        }
    return r;
}

}  // namespace

CheckReport closure(const EdgeForm& w, double tol) { return closure_impl(w, tol); }
CheckReport closure(const EdgeDiff& w, double tol) { return closure_impl(w, tol); }

Net<Vec31> integrate_differences(const EdgeDiff& dx, const Vec31& seed, VertexId seed_vertex, PathOrder order,
                                 double tol) {
    const CheckReport c = closure(dx, tol);
    if (!c.pass())
        throw NotClosedError("integrate_differences: " + std::to_string(c.failures()) +
                             " faces fail closure, max residual " + std::to_string(c.max_residual()));
    return propagate<Vec31>(
        dx.domain(), seed_vertex, seed,
        [&](VertexId from, VertexId to, const Vec31& xf) { return xf - dx.value(from, to); }, order);
}

EdgeDiff apply_form(const EdgeForm& w, const Vec31& p) {
    EdgeDiff d(w.domain());
    d.for_each_edge([&](VertexId i, VertexId j, Vec31& v) { v = -apply(w.value(i, j), p); });
    return d;
}

Net<Vec31> integrate_edge_form(const EdgeForm& w, const Vec31& p, const Vec31& seed, VertexId seed_vertex,
                               PathOrder order, double tol) {
    return integrate_differences(apply_form(w, p), seed, seed_vertex, order, tol);
}

double max_deviation(const Net<Vec31>& x, const Net<Vec31>& y) {
    if (!(x.domain() == y.domain())) throw InputError("max_deviation: domain mismatch");
    double r = 0.0;
    for (std::size_t k = 0; k < x.values().size(); ++k)
        r = std::max(r, (x.values()[k] - y.values()[k]).norm_euclid());
    return r;
}

CheckReport check_legendre(const Net<Vec31>& x, const Net<Vec31>& g, double tol) {
    if (!(x.domain() == g.domain())) throw InputError("check_legendre: domain mismatch");
    CheckReport r{"legendre", {}};
    for_each_edge(x.domain(), [&](VertexId i, VertexId j) {
        const Eigen::Vector4d d = ev(x.at(i) - x.at(j));
        double res = 0.0;
        if (d.norm() > 0.0) {
            Eigen::Matrix<double, 4, 2> a;
            a.col(0) = ev(g.at(i)).normalized();
            a.col(1) = ev(g.at(j)).normalized();
            const Eigen::Vector2d c = a.completeOrthogonalDecomposition().solve(d);
            res = (a * c - d).norm() / d.norm();
        }
        r.items.push_back({edge_site(i, j), {{"legendre", res, tol}}});
    });
    return r;
}

CurvatureValue lightcone_mean_curvature(const Net<Vec31>& x, const Net<Vec31>& g, int n, int m) {
    return proportionality(mixed_area(x, x, n, m), mixed_area(x, g, n, m), "lightcone_mean_curvature");
}

CurvatureValue mean_curvature(const Net<Vec31>& f, const Net<Vec31>& nrm, int n, int m) {
    return proportionality(mixed_area(f, f, n, m), mixed_area(f, nrm, n, m), "mean_curvature");
}

CurvatureValue gauss_curvature(const Net<Vec31>& f, const Net<Vec31>& nrm, int n, int m) {
    CurvatureValue c = proportionality(mixed_area(f, f, n, m), -1.0 * mixed_area(nrm, nrm, n, m), "gauss_curvature");
    return c;
}

CheckReport mean_curvature_check(const Net<Vec31>& f, const Net<Vec31>& nrm, double expected, double tol) {
    CheckReport r{"mean_curvature", {}};
    for (int n = 0; n < f.domain().N(); ++n)
        for (int m = 0; m < f.domain().M(); ++m) {
            const CurvatureValue h = mean_curvature(f, nrm, n, m);
            r.items.push_back({{Site::Kind::face, n, m},
                               {{"H", std::abs(h.value - expected), tol}, {"parallel", h.parallelism, tol}}});
        }
    return r;
}

Net<Vec31> hyperbolic_gauss_lift(const Net<Vec31>& x, const Net<Vec31>& g, double mu) {
    if (mu == 0.0) throw InputError("hyperbolic_gauss_lift: mu must be nonzero");
    if (!(x.domain() == g.domain())) throw InputError("hyperbolic_gauss_lift: domain mismatch");
    const double s = std::sqrt(std::abs(mu));
    std::vector<Vec31> out;
    out.reserve(x.values().size());
    for (std::size_t k = 0; k < x.values().size(); ++k) {
        const Vec31& xv = x.values()[k];
        const Vec31& gv = g.values()[k];
        const double p = inner(xv, gv);
        if (std::abs(p) <= 1e-14 * xv.norm_euclid() * gv.norm_euclid())
            throw DegenerateError("hyperbolic_gauss_lift: (x, g) vanishes at a vertex");
        out.push_back((mu / p * gv - xv) / s);
    }
    return Net<Vec31>(x.domain(), std::move(out));
}

CheckReport quadric_membership(const Net<Vec31>& x, double mu, double tol) {
    CheckReport r{"quadric", {}};
    const auto& dom = x.domain();
    for (int n = 0; n <= dom.N(); ++n)
        for (int m = 0; m <= dom.M(); ++m) {
            const Vec31& v = x(n, m);
            r.items.push_back({{Site::Kind::vertex, n, m}, {{"quadric", std::abs(inner(v, v) - mu), tol}}});
        }
    return r;
}

}  // namespace lisurf
