#include <doctest.h>

#include <numbers>
#include <random>

#include "lisurf/grid.hpp"

using namespace lisurf;

TEST_CASE("domain combinatorics") {
    const GridDomain d(3, 2);
    CHECK(d.vertex_count() == 12);
    CHECK(d.face_count() == 6);
    CHECK(d.index({1, 2}) == 5);
    const Face f = d.face(2, 1);
    CHECK(f.i == VertexId{2, 1});
    CHECK(f.j == VertexId{3, 1});
    CHECK(f.k == VertexId{3, 2});
    CHECK(f.l == VertexId{2, 2});
    CHECK_FALSE(d.has_face(3, 0));
    CHECK_THROWS_AS(GridDomain(0, 3), InputError);
    CHECK_THROWS_AS(Net<double>(d, std::vector<double>(5)), InputError);
}

TEST_CASE("edge labelling") {
    const EdgeLabelling l({1.0, 2.0}, {-1.0, -3.0, -0.5});
    CHECK(l.edge({1, 2}, {0, 2}) == 1.0);
    CHECK(l.edge({1, 2}, {1, 3}) == -0.5);
    CHECK(l.face_ratio(1, 1) == -1.5);
    CHECK(l.matches(GridDomain(2, 3)));
    CHECK_THROWS_AS(l.edge({0, 0}, {1, 1}), InputError);
    CHECK_THROWS_AS(EdgeLabelling({1.0}, {1.0}), InputError);
    CHECK_THROWS_AS(EdgeLabelling({0.0}, {-1.0}), InputError);
    CHECK_NOTHROW(EdgeLabelling::unchecked({1.0}, {1.0}));
    const EdgeLabelling s = l.shifted(0.5);
    CHECK(s.a()[1] == 1.5);
    CHECK(s.b()[0] == -1.5);
}

TEST_CASE("cross ratio") {
    CHECK(std::abs(cross_ratio(0.0, 1.0, Complex(1, 1), Complex(0, 1)) + 1.0) <= 1e-15);
    CHECK_THROWS_AS(cross_ratio(0.0, 1.0, 1.0, Complex(0, 1)), DegenerateError);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        const Complex z[4] = {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        const Mat2 b = SL2::normalized(Mat2{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}).mat();
        const Complex before = cross_ratio(z[0], z[1], z[2], z[3]);
        const Complex after = cross_ratio(mobius(b, z[0]), mobius(b, z[1]), mobius(b, z[2]), mobius(b, z[3]));
        CHECK(std::abs(before - after) <= 1e-10 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("lifted cross ratio matches the planar one") {
    // For lightlike points, |cr|^2 = (g_i,g_j)(g_k,g_l) / ((g_j,g_k)(g_l,g_i)).
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
        Complex z[4];
        for (auto& w : z) w = {u(rng), u(rng)};
        Vec31 g[4];
        for (int i = 0; i < 4; ++i) g[i] = stereo_lift(z[i]);
        const double lifted = inner(g[0], g[1]) * inner(g[2], g[3]) / (inner(g[1], g[2]) * inner(g[3], g[0]));
        const double planar = std::norm(cross_ratio(z[0], z[1], z[2], z[3]));
        CHECK(std::abs(lifted - planar) <= 1e-9 * std::max(1.0, planar));
    }
}

TEST_CASE("identity datum") {
    const HoloData h = gen_identity(6, 5);
    CHECK(h.phi(2, 3) == Complex(2, 3));
    CHECK(is_discrete_holomorphic(h.phi, h.labels, 1e-12).pass());
    CHECK(h.labels.a()[0] == 1.0);
    CHECK(h.labels.b()[0] == -1.0);
    const HoloData t = gen_identity(2, 2, 0.5, Complex(1, -1));
    CHECK(t.phi(2, 2) == Complex(2, 0));
}

TEST_CASE("holomorphicity fails on a perturbed datum") {
    HoloData h = gen_identity(5, 5);
    h.phi(2, 2) += Complex(1e-2, 0.0);
    const CheckReport r = is_discrete_holomorphic(h.phi, h.labels, 1e-10);
    CHECK_FALSE(r.pass());
    CHECK(r.failures() == 4);
}

TEST_CASE("exponential datum") {
    const Complex A = 1.3, B = std::polar(1.0, 0.4);
    const HoloData h = gen_exponential(8, 8, A, B);
    CHECK(h.phi(0, 0) == Complex(1.0));
    CHECK(is_discrete_holomorphic(h.phi, h.labels, 1e-12).pass());
    // Constant cross ratio B (1-A)^2 / (A (1-B)^2), negative for unimodular B.
    const Complex cr = B * (1.0 - A) * (1.0 - A) / (A * (1.0 - B) * (1.0 - B));
    CHECK(std::abs(cr.imag()) <= 1e-14);
    CHECK(cr.real() < 0.0);
    // (1 - B)^2 / B = -4 sin^2(theta / 2).
    CHECK(std::abs((1.0 - B) * (1.0 - B) / B + 4.0 * std::pow(std::sin(0.2), 2)) <= 1e-15);
    CHECK(std::abs(h.labels.face_ratio(0, 0) - cr.real()) <= 1e-12);
    CHECK_THROWS_AS(gen_exponential(2, 2, 1.0, B), InputError);
    CHECK_THROWS_AS(gen_exponential(2, 2, 1.3, 2.0), InputError);
}

TEST_CASE("power datum") {
    const HoloData one = gen_power(6, 6, 1.0);
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m) CHECK(std::abs(one.phi(n, m) - Complex(n, m)) <= 1e-12);
    const HoloData p = gen_power(20, 20, 2.0 / 3.0);
    CHECK(is_discrete_holomorphic(p.phi, p.labels, 1e-10).pass());
    for (int m = 1; m <= 20; ++m) CHECK(std::abs(std::arg(p.phi(0, m)) - std::numbers::pi / 3.0) <= 1e-12);
    for (int n = 1; n <= 20; ++n) CHECK(std::abs(p.phi(n, 0).imag()) <= 1e-12);
    CHECK_THROWS_AS(gen_power(3, 3, 2.0), InputError);
}

TEST_CASE("Mobius action on data") {
    const HoloData h = gen_power(8, 8, 2.0 / 3.0);
    const SL2 b = SL2::normalized(Mat2{Complex(1, 0.2), 0.3, Complex(0.1, -0.1), 1.0});
    CHECK(mobius_apply(SL2::identity(), h.phi).values() == h.phi.values());
    const Net<Complex> w = mobius_apply(b, h.phi);
    CHECK(is_discrete_holomorphic(w, h.labels, 1e-11).pass());
    for (std::size_t k = 0; k < w.values().size(); ++k) {
        const Vec31 a = stereo_lift(w.values()[k]);
        const Vec31 c = act(b, stereo_lift(h.phi.values()[k]));
        // Projective equality: a and c are proportional lightlike vectors.
        CHECK(wedge(a, c).norm() <= 1e-11 * a.norm_euclid() * c.norm_euclid());
    }
    CHECK_THROWS_AS(mobius(Mat2{1.0, 0.0, 1.0, 0.0}, 0.0), DegenerateError);
}

TEST_CASE("spanning-tree propagation and edge fields") {
    const GridDomain d(3, 4);
    const Net<int> hops = propagate<int>(d, {1, 2}, 0, [](VertexId, VertexId, int h) { return h + 1; });
    CHECK(hops(1, 2) == 0);
    CHECK(hops(3, 0) == 4);
    CHECK(hops(0, 4) == 3);
    EdgeField<double> f(d);
    f.for_each_edge([](VertexId a, VertexId b, double& v) { v = (b.n - a.n) + 10.0 * (b.m - a.m); });
    CHECK(f.value({1, 1}, {0, 1}) == -1.0);
    CHECK(f.value({1, 1}, {1, 0}) == -10.0);
    CHECK(f.circulation(1, 1) == 0.0);
    CHECK_THROWS_AS(f.value({0, 0}, {1, 1}), InputError);
}
