#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lisurf/netops.hpp"
#include "lisurf/representations.hpp"

using namespace lisurf;

namespace {

Net<Vec31> quad(const Vec31& i, const Vec31& j, const Vec31& k, const Vec31& l) {
    Net<Vec31> x(GridDomain(1, 1));
    x(0, 0) = i;
    x(1, 0) = j;
    x(1, 1) = k;
    x(0, 1) = l;
    return x;
}

Net<Vec31> scale(const Net<Vec31>& x, double s) {
    return x.map([&](const Vec31& v) { return s * v; });
}

// Coefficient display of zeta for g = stereo_lift(phi).
Bivector zeta_display(Complex pi, Complex pj, double l) {
    const Complex f = 1.0 / (l * (pi - pj));
    const Complex I(0.0, 1.0);
    const Complex c[6] = {1.0 - pi * pj, I * (1.0 + pi * pj), pi + pj, I * (pi + pj), 1.0 + pi * pj, I * (1.0 - pi * pj)};
    Bivector b;
    for (int k = 0; k < 6; ++k) b.c[static_cast<std::size_t>(k)] = (f * c[k]).real();
    return b;
}

}  // namespace

TEST_CASE("edge and diagonal differences") {
    const Net<Vec31> c(GridDomain(2, 2), e1 + e2);
    const EdgeDiff d = edge_differences(c);
    d.for_each_edge([](VertexId, VertexId, const Vec31& v) { CHECK(v.max_abs() == 0.0); });
    std::mt19937_64 rng(21);
    const Net<Vec31> x = fixtures::random_net(GridDomain(3, 3), rng);
    const EdgeDiff dx = edge_differences(x);
    CHECK((dx.value({1, 1}, {2, 1}) + dx.value({2, 1}, {1, 1})).max_abs() == 0.0);
    const Diagonals dg = diagonals(x, 1, 1);
    CHECK((dg.ik - (dx.value({1, 1}, {2, 1}) + dx.value({2, 1}, {2, 2}))).max_abs() <= 1e-14);
    CHECK((edge_midpoint(x, {0, 0}, {1, 0}) - 0.5 * (x(0, 0) + x(1, 0))).max_abs() == 0.0);
}

TEST_CASE("planarity") {
    const Vec31 a{0.3, 1, 2, 0}, b{1, 0, 1, 1}, c{2, 2, 0, -1};
    CHECK(is_planar(quad(a, b, c, 0.2 * a + 0.5 * b + 0.3 * c), 0, 0).pass());
    std::mt19937_64 rng(22);
    const Net<Vec31> r = fixtures::random_net(GridDomain(1, 1), rng);
    CHECK_FALSE(is_planar(r, 0, 0).pass());
}

TEST_CASE("circularity") {
    const Net<Vec31> sq = quad(e0, e0 + e1, e0 + e1 + e2, e0 + e2);
    CHECK(is_circular(sq, 0, 0).pass());
    CHECK((circumcenter(sq, 0, 0) - (e0 + 0.5 * e1 + 0.5 * e2)).max_abs() <= 1e-14);
    const Net<Vec31> trap = quad(Vec31{}, 3.0 * e1, 2.0 * e1 + e2, e2);
    CHECK_FALSE(is_circular(trap, 0, 0).pass());
    // Light-cone nets of holomorphic data are circular.
    const HoloData h = gen_power(10, 10, 2.0 / 3.0);
    CHECK(circularity(light_cone_lift(h.phi), 1e-9).pass());
}

TEST_CASE("mixed area") {
    const Net<Vec31> sq = quad(Vec31{}, e1, e1 + e2, e2);
    const Bivector a = mixed_area(sq, sq, 0, 0);
    CHECK((a - wedge(e1, e2)).norm() <= 1e-15);
    std::mt19937_64 rng(23);
    const GridDomain d(2, 2);
    const Net<Vec31> x = fixtures::random_net(d, rng), y = fixtures::random_net(d, rng), z = fixtures::random_net(d, rng);
    CHECK((mixed_area(x, y, 1, 0) - mixed_area(y, x, 1, 0)).norm() == 0.0);
    Net<Vec31> yz(d);
    for (std::size_t k = 0; k < yz.values().size(); ++k) yz.values()[k] = 2.0 * y.values()[k] - 3.0 * z.values()[k];
    const Bivector lin = 2.0 * mixed_area(x, y, 1, 1) - 3.0 * mixed_area(x, z, 1, 1);
    CHECK((mixed_area(x, yz, 1, 1) - lin).norm() <= 1e-13);
    const Net<Vec31> seg = quad(Vec31{}, e1, 2.0 * e1, e1);
    CHECK(mixed_area(seg, seg, 0, 0).norm() == 0.0);
}

TEST_CASE("edge parallelism and Christoffel pairs") {
    std::mt19937_64 rng(24);
    const GridDomain d(4, 4);
    const Net<Vec31> x = fixtures::random_net(d, rng);
    const Net<Vec31> y = x.map([](const Vec31& v) { return -2.5 * v + e2; });
    CHECK(is_edge_parallel(x, y).pass());
    CHECK_FALSE(is_edge_parallel(x, fixtures::random_net(d, rng)).pass());
    Net<Vec31> flat = x;
    flat(1, 0) = flat(0, 0);
    CHECK_FALSE(is_edge_parallel(flat, x).pass());

    const HoloData h = fixtures::power(8, 8);
    const SurfaceBundle b = weier_hyperplane(h.phi, h.labels, 1.0);
    CHECK(christoffel_check(b.x, b.gn).pass());
    CHECK(christoffel_check(scale(b.x, 7.0), scale(b.gn, -0.2)).pass());
    CHECK_FALSE(christoffel_check(b.x, b.x).pass());
}

TEST_CASE("zeta forms") {
    std::mt19937_64 rng(25);
    const GridDomain d(5, 5);
    const Net<Vec31> g = fixtures::random_net(d, rng);
    const Net<Vec31> c(d, e1 - 2.0 * e3);
    zeta_from_pair(g, c).for_each_edge([](VertexId, VertexId, const Bivector& b) { CHECK(b.norm() == 0.0); });

    // Circulation i -> j -> k -> l of g_ij ^ (x_i - x_j) is -2 A(x, g).
    const Net<Vec31> x = fixtures::random_net(d, rng);
    const EdgeForm z = zeta_from_pair(g, x);
    for (int n = 0; n < d.N(); ++n)
        for (int m = 0; m < d.M(); ++m) CHECK((z.circulation(n, m) + 2.0 * mixed_area(x, g, n, m)).norm() <= 1e-12);

    const HoloData h = gen_power(20, 20, 2.0 / 3.0);
    const Net<Vec31> lift = light_cone_lift(h.phi);
    CHECK(closure(zeta_from_lift(lift, h.labels), 1e-11).pass());

    // Christoffel pairs integrate to closed forms.
    const HoloData p = fixtures::power(8, 8);
    const SurfaceBundle b = weier_hyperplane(p.phi, p.labels, -1.0);
    CHECK(closure(zeta_from_pair(b.gn, b.x), 1e-10).pass());
}

TEST_CASE("zeta from the lift matches the closed form up to the bivector orientation") {
    const HoloData h = gen_exponential(6, 6, 1.2, std::polar(1.0, 0.5));
    const EdgeForm z = zeta_from_lift(light_cone_lift(h.phi), h.labels);
    double worst = 0.0;
    z.for_each_edge([&](VertexId i, VertexId j, const Bivector& b) {
        const Bivector ref = zeta_display(h.phi.at(i), h.phi.at(j), h.labels.edge(i, j));
        worst = std::max(worst, (b + ref).norm() / std::max(1.0, ref.norm()));
    });
    CHECK(worst <= 1e-12);
}

TEST_CASE("zeta is invariant under vertex rescaling of the lift") {
    const HoloData h = gen_power(6, 6, 2.0 / 3.0);
    const Net<Vec31> g = light_cone_lift(h.phi);
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    const Net<Vec31> rg = g.map([&](const Vec31& v) { return (u(rng) * (rng() % 2 ? 1.0 : -1.0)) * v; });
    const EdgeForm a = zeta_from_lift(g, h.labels);
    const EdgeForm b = zeta_from_lift(rg, h.labels);
    double worst = 0.0;
    a.for_each_edge([&](VertexId i, VertexId j, const Bivector& v) {
        worst = std::max(worst, (v - b.value(i, j)).norm() / v.norm());
    });
    CHECK(worst <= 1e-12);
}

TEST_CASE("integration of edge forms") {
    const GridDomain d(3, 3);
    const EdgeForm zero(d);
    const Net<Vec31> c = integrate_edge_form(zero, e0, e2);
    for (const auto& v : c.values()) CHECK((v - e2).max_abs() == 0.0);

    const HoloData h = fixtures::power(12, 12);
    const EdgeForm z = zeta_from_lift(light_cone_lift(h.phi), h.labels);
    const Vec31 p = hyperplane_normal(1.0);
    const Net<Vec31> rows = integrate_edge_form(z, p, Vec31{}, {}, PathOrder::rows_first);
    const Net<Vec31> cols = integrate_edge_form(z, p, Vec31{}, {}, PathOrder::columns_first);
    CHECK(max_deviation(rows, cols) <= 1e-10);
    const Net<Vec31> mid = integrate_edge_form(z, p, rows(5, 7), {5, 7});
    CHECK(max_deviation(rows, mid) <= 1e-10);
    CHECK(edge_orthogonality(rows, p, 1e-11).pass());

    std::mt19937_64 rng(27);
    EdgeDiff bad = edge_differences(fixtures::random_net(d, rng));
    bad.h(1, 1) = bad.h(1, 1) + e1;
    CHECK_THROWS_AS(integrate_differences(bad, Vec31{}), NotClosedError);
}

TEST_CASE("Legendre condition") {
    const HoloData h = gen_power(6, 6, 2.0 / 3.0);
    const Net<Vec31> g = light_cone_lift(h.phi);
    CHECK(check_legendre(Net<Vec31>(g.domain(), e1), g).pass());
    CHECK(check_legendre(g.map([](const Vec31& v) { return 3.0 * v + e2; }), g).pass());
    std::mt19937_64 rng(28);
    CHECK_FALSE(check_legendre(fixtures::random_net(g.domain(), rng), g).pass());
}

TEST_CASE("curvature functionals") {
    std::mt19937_64 rng(29);
    const Net<Vec31> x = fixtures::random_net(GridDomain(2, 2), rng);
    const Net<Vec31> mx = scale(x, -1.0);
    CHECK(lightcone_mean_curvature(x, mx, 0, 0).value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(mean_curvature(x, x, 1, 1).value == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(gauss_curvature(x, x, 1, 1).value == doctest::Approx(1.0).epsilon(1e-13));
    const Net<Vec31> seg = quad(Vec31{}, e1, 2.0 * e1, e1);
    CHECK_THROWS_AS(lightcone_mean_curvature(seg, seg, 0, 0), DegenerateError);
    // Non-proportional bivectors are reported through the parallelism residual.
    CHECK(lightcone_mean_curvature(x, fixtures::random_net(x.domain(), rng), 0, 0).parallelism > 1e-3);
}

TEST_CASE("minimal nets have vanishing mean curvature") {
    const HoloData h = fixtures::power(10, 10);
    const SurfaceBundle b = weier_hyperplane(h.phi, h.labels, 1.0);
    CHECK(mean_curvature_check(b.x, *b.normal, 0.0, 1e-9).pass());
    CHECK(lightcone_curvature_check(b.x, b.gn, 0.0, 1e-9).pass());
}

TEST_CASE("hyperbolic Gauss lift of cmc nets") {
    const HoloData h = fixtures::power(10, 10);
    for (double mu : {-1.0, 1.0, -0.25}) {
        const SurfaceBundle b = weier_quadric(h.phi, h.labels, fixtures::kM, mu);
        const Net<Vec31> n = hyperbolic_gauss_lift(b.x, b.gn, mu);
        double worst_nx = 0.0, worst_nn = 0.0, worst_g = 0.0;
        for (std::size_t k = 0; k < n.values().size(); ++k) {
            const Vec31& nv = n.values()[k];
            const Vec31& xv = b.x.values()[k];
            worst_nx = std::max(worst_nx, std::abs(inner(nv, xv)));
            worst_nn = std::max(worst_nn, std::abs(inner(nv, nv) + (mu > 0 ? 1.0 : -1.0)));
            const Vec31 g = xv + std::sqrt(std::abs(mu)) * nv;
            worst_g = std::max(worst_g, wedge(g, b.gn.values()[k]).norm() / (g.norm_euclid() * b.gn.values()[k].norm_euclid()));
        }
        CHECK(worst_nx <= 1e-12);
        CHECK(worst_nn <= 1e-12);
        CHECK(worst_g <= 1e-10);
        // H_g + 1 = sqrt|mu| H_mu with g = x + sqrt|mu| n.
        Net<Vec31> gl(b.x.domain());
        for (std::size_t k = 0; k < gl.values().size(); ++k)
            gl.values()[k] = b.x.values()[k] + std::sqrt(std::abs(mu)) * n.values()[k];
        for (int fn = 0; fn < 10; fn += 3)
            for (int fm = 0; fm < 10; fm += 3) {
                const double hg = lightcone_mean_curvature(b.x, gl, fn, fm).value;
                const double hm = mean_curvature(b.x, n, fn, fm).value;
                CHECK(std::abs(hg + 1.0 - std::sqrt(std::abs(mu)) * hm) <= 1e-8);
            }
    }
}
