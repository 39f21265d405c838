#include <doctest.h>

#include "fixtures.hpp"
#include "lisurf/calapso.hpp"
#include "lisurf/representations.hpp"

using namespace lisurf;

namespace {

// Closed-form edge increment in terms of phi. The integrated net has
// x_i - x_j = -weier_dx.
Vec31 weier_dx(Complex pi, Complex pj, double l, double mu) {
    const Complex f = 1.0 / (l * (pi - pj));
    const Complex I(0.0, 1.0);
    return {(f * (0.5 * (1.0 - mu) * (pi + pj))).real(), (f * (1.0 - mu * pi * pj)).real(),
            (f * (I * (1.0 + mu * pi * pj))).real(), (f * (0.5 * (1.0 + mu) * (pi + pj))).real()};
}

double rel_diff(const Vec31& a, const Vec31& b) { return (a - b).max_abs() / std::max(1e-300, b.max_abs()); }

bool all_pass(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass()) {
            MESSAGE(r.check << " max residual " << r.max_residual());
            return false;
        }
    return true;
}

}  // namespace

TEST_CASE("space-form vectors") {
    CHECK((hyperplane_normal(1.0) - e0).max_abs() == 0.0);
    CHECK((hyperplane_normal(-1.0) - e3).max_abs() == 0.0);
    CHECK((quadric_point(-1.0) - e0).max_abs() == 0.0);
    CHECK((quadric_point(1.0) - e3).max_abs() == 0.0);
    for (double mu : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
        CHECK(inner(hyperplane_normal(mu), hyperplane_normal(mu)) == doctest::Approx(-mu));
        CHECK(inner(quadric_point(mu), quadric_point(mu)) == doctest::Approx(mu));
    }
    CHECK(inner(kIsotropicOrigin, hyperplane_normal(0.0)) == -1.0);
    CHECK_THROWS_AS((SpaceForm{1.0, SpaceKind::general}.p()), InputError);
}

TEST_CASE("hyperplane representation: identity datum edge") {
    const HoloData h = gen_identity(2, 2);
    const SurfaceBundle b = weier_hyperplane(h.phi, h.labels, 1.0);
    const Vec31 dx = b.x(0, 0) - b.x(1, 0);
    CHECK((dx - (e1 + e3)).max_abs() <= 1e-15);
}

TEST_CASE("hyperplane representation matches the closed form") {
    const HoloData h = fixtures::power(10, 10);
    for (double mu : {1.0, -1.0, 0.0, 0.5}) {
        const SurfaceBundle b = weier_hyperplane(h.phi, h.labels, mu);
        double worst = 0.0, worst_gn = 0.0;
        for_each_edge(h.phi.domain(), [&](VertexId i, VertexId j) {
            const double l = h.labels.edge(i, j);
            worst = std::max(worst, rel_diff(b.x.at(j) - b.x.at(i), weier_dx(h.phi.at(i), h.phi.at(j), l, mu)));
            const Vec31 pred = (b.gn.at(i) - b.gn.at(j)) / (l * inner(b.gn.at(i), b.gn.at(j)));
            worst_gn = std::max(worst_gn, rel_diff(b.x.at(i) - b.x.at(j), pred));
        });
        CHECK(worst <= 1e-10);
        CHECK(worst_gn <= 1e-10);
        double norm = 0.0;
        for (const auto& g : b.gn.values()) norm = std::max(norm, std::abs(inner(g, hyperplane_normal(mu)) + 1.0));
        CHECK(norm <= 1e-13);
        CHECK(all_pass(verify_bundle(b)));
    }
}

TEST_CASE("isotropic representation") {
    const HoloData h = fixtures::power(8, 8);
    const Vec31 p = hyperplane_normal(0.0);
    const SurfaceBundle b = weier_hyperplane(h.phi, h.labels, 0.0);
    double worst = 0.0;
    for_each_edge(h.phi.domain(), [&](VertexId i, VertexId j) {
        const Complex f = 1.0 / (h.labels.edge(i, j) * (h.phi.at(i) - h.phi.at(j)));
        const Complex s = h.phi.at(i) + h.phi.at(j);
        const Vec31 ref{(f * s).real() * p[0], f.real(), (f * Complex(0, 1)).real(), (f * s).real() * p[3]};
        worst = std::max(worst, rel_diff(b.x.at(j) - b.x.at(i), ref));
    });
    CHECK(worst <= 1e-10);
    for (const auto& v : b.x.values()) CHECK(std::abs(inner(v, p) + 1.0) <= 1e-11);
    CHECK_THROWS_AS(weier_hyperplane(h.phi, h.labels, 0.0, Vec31{}), InputError);
}

TEST_CASE("degenerate vertices are refused") {
    // |phi| = 1 puts G orthogonal to p = e3.
    const HoloData h = gen_power(3, 3, 2.0 / 3.0);
    CHECK_THROWS_AS(weier_hyperplane(h.phi, h.labels, -1.0), DegenerateError);
}

TEST_CASE("quadric representation") {
    const HoloData h = fixtures::power(12, 12);
    const double m = fixtures::kM;
    for (double mu : {-1.0, 1.0, 0.0, -0.5}) {
        const SurfaceBundle b = weier_quadric(h.phi, h.labels, m, mu);
        double det = 0.0;
        for (const auto& v : b.x.values()) det = std::max(det, std::abs(-to_herm(v).det() - mu));
        CHECK(det <= 1e-10);
        CHECK(all_pass(verify_bundle(b)));
        // Vector path: x = T(m)^-1 p.
        const Net<Vec31> ps = parallel_section(light_cone_lift(h.phi), h.labels, m, quadric_point(mu));
        CHECK(max_deviation(ps, b.x) <= 1e-9);
        double pair = 0.0;
        for_each_edge(h.phi.domain(), [&](VertexId i, VertexId j) {
            pair = std::max(pair, std::abs(inner(b.x.at(i), b.gn.at(j)) + (1.0 - m / h.labels.edge(i, j))));
        });
        CHECK(pair <= 1e-10);
    }
    const SurfaceBundle flat = weier_quadric(h.phi, h.labels, 0.0, -1.0);
    for (const auto& v : flat.x.values()) CHECK((v - e0).max_abs() <= 1e-14);
    CHECK_THROWS_AS(weier_quadric(h.phi, h.labels, h.labels.a()[0], -1.0), PoleError);
}

TEST_CASE("secondary Gauss map representation") {
    const HoloData h = fixtures::power(10, 10);
    const double m = fixtures::kM;
    const EdgeLabelling lg = h.labels.shifted(-m);
    const SurfaceBundle b = rep2(h.phi, lg, m, -1.0);
    for (const auto& v : b.x.values()) {
        const Herm X = to_herm(v);
        CHECK(X.p > 0.0);
        CHECK(X.det() > 0.0);
    }
    CHECK(all_pass(verify_bundle(b)));
    for (std::size_t k = 0; k < b.phi.values().size(); ++k)
        CHECK(std::abs(b.phi.values()[k] - mobius(b.frame->values()[k].mat(), h.phi.values()[k])) == 0.0);
    CHECK(is_discrete_holomorphic(b.phi, lg, 1e-9).pass());
}

TEST_CASE("rep2 reproduces the quadric net from its secondary Gauss map") {
    const HoloData h = fixtures::power(10, 10);
    const double m = fixtures::kM;
    for (double mu : {-1.0, 1.0, 0.0}) {
        const SL2 seed(Mat2{1.1, 0.2, 0.0, 1.0 / 1.1});
        const SurfaceBundle q = weier_quadric(h.phi, h.labels, m, mu, seed);
        const Net<Complex> psi = secondary_gauss(q, m);
        const SurfaceBundle r = rep2(psi, h.labels, m, mu, q.frame->at({0, 0}));
        CHECK(max_deviation(r.x, q.x) <= 1e-8);
        double worst = 0.0;
        for (std::size_t k = 0; k < psi.values().size(); ++k)
            worst = std::max(worst, std::abs(r.phi.values()[k] - h.phi.values()[k]));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("Hoffmann E-matrices") {
    const HoloData h = fixtures::power(10, 10);
    const double m = fixtures::kM;
    const Net<Mat2> e0 = hoffmann_E(h.phi, h.labels, 0.0);
    for (const auto& e : e0.values()) CHECK((e - Mat2::identity()).max_abs() <= 1e-14);
    const Net<Mat2> e = hoffmann_E(h.phi, h.labels, -m);
    CHECK(hoffmann_det_check(e, h.labels, -m, 1e-11).pass());
    const SurfaceBundle b = rep2(h.phi, h.labels.shifted(-m), m, -1.0);
    CHECK(max_deviation(hoffmann_Y(e), to_herm_net(b.x)) <= 1e-9);
    CHECK(duality_formula_check(e, h.phi, h.labels, -m, 1e-10).pass());
}

TEST_CASE("dual cmc surfaces") {
    const HoloData h = fixtures::power(10, 10);
    const double m = fixtures::kM;
    const EdgeLabelling lg = h.labels.shifted(-m);
    const SurfaceBundle b = rep2(h.phi, lg, m, -1.0);
    const Net<Herm> xd = dual_cmc(*b.frame, -1.0);
    for (const auto& x : xd.values()) CHECK(std::abs(x.det() - 1.0) <= 1e-10);
    const Net<SL2> inv = b.frame->map([](const SL2& f) { return f.inverse(); });
    CHECK(max_deviation(dual_cmc(inv, -1.0), to_herm_net(b.x)) <= 1e-10);

    const CheckReport rec = dual_recursion_check(*b.frame, b.phi, lg, m, 1e-9);
    CHECK(rec.max_residual("right") <= 1e-9);
    CHECK(rec.max_residual("left") > 1e-6);

    // The dual is a quadric net of the same representation built from phi.
    const Net<Vec31> xdv = from_herm_net(xd);
    CHECK(christoffel_check(xdv, section_gn(light_cone_lift(h.phi), xdv)).pass());
}

TEST_CASE("linear Weingarten pairs") {
    const HoloData h = fixtures::power(15, 15);
    const double m = fixtures::kM;
    const EdgeLabelling lg = h.labels.shifted(-m);
    for (double mu : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const SurfaceBundle b = rep2(h.phi, lg, m, mu);
        const LinearWeingartenPair p = brlw_pair(b.x, b.gn, mu);
        double norms = 0.0, gt = 0.0, anti = 0.0;
        for (std::size_t k = 0; k < p.x_plus.values().size(); ++k) {
            norms = std::max(norms, std::abs(inner(p.x_plus.values()[k], p.x_plus.values()[k]) + 1.0));
            norms = std::max(norms, std::abs(inner(p.x_minus.values()[k], p.x_minus.values()[k]) - 1.0));
            gt = std::max(gt, std::abs(inner(p.x_plus.values()[k], p.gt.values()[k]) - 1.0));
            anti = std::max(anti, (p.n_plus.values()[k] + p.x_minus.values()[k]).max_abs());
        }
        CHECK(norms <= 1e-11);
        CHECK(gt <= 1e-12);
        CHECK(anti <= 1e-12);
        CHECK(check_legendre(p.x_plus, b.gn).pass());
        CHECK(check_legendre(p.x_minus, b.gn).pass());
        CHECK(weingarten_check(p.x_plus, p.n_plus, mu, 1, 1e-8).pass());
        CHECK(weingarten_check(p.x_minus, p.n_minus, mu, -1, 1e-8).pass());
        CHECK(weingarten_residual(p.x_plus, p.x_plus, mu, 1, 2, 3) == doctest::Approx(std::abs(4.0 * mu)));
    }
    const SurfaceBundle b = rep2(h.phi, lg, m, -1.0);
    const LinearWeingartenPair p = brlw_pair(b.x, b.gn, -1.0);
    CHECK(mean_curvature_check(p.x_plus, p.n_plus, 1.0, 1e-8).pass());
}

TEST_CASE("Bryant-type representation") {
    const HoloData h = fixtures::power(10, 10);
    const double m = fixtures::kM;
    const EdgeLabelling lg = h.labels.shifted(-m);
    for (double mu : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const BryantNets br = bryant_rep(h.phi, lg, m, mu);
        for (std::size_t k = 0; k < br.x_plus.values().size(); ++k) {
            CHECK(std::abs(-br.x_plus.values()[k].det() + 1.0) <= 1e-10);
            CHECK(std::abs(-br.x_minus.values()[k].det() - 1.0) <= 1e-10);
        }
    }
    const Complex z(0.3, -0.2);
    const Herm cp = bryant_C(z, 0.0, 1), cm = bryant_C(z, 0.0, -1);
    CHECK(cp.max_abs_diff(Herm{1.0 + std::norm(z), 1.0, z}) <= 1e-15);
    CHECK(cm.max_abs_diff(Herm{1.0 - std::norm(z), -1.0, -z}) <= 1e-15);
    CHECK_THROWS_AS(bryant_C(1.0, 1.0, 1), DegenerateError);
}

TEST_CASE("linear Weingarten nets through the E, L matrices") {
    const HoloData h = fixtures::power(10, 10);
    const double m = fixtures::kM;
    const EdgeLabelling lg = h.labels.shifted(-m);
    for (double mu : {-1.0, 0.0, 0.5}) {
        const BryantNets br = bryant_rep(h.phi, lg, m, mu);
        const Mat2 seed{1.0, h.phi(0, 0), 0.0, 1.0};
        const ELWeingartenNets y = el_weingarten(h.phi, h.labels, -m, -mu, seed);
        CHECK(max_deviation(y.f_plus, br.x_plus, true) <= 1e-9);
        CHECK(max_deviation(y.f_minus, br.x_minus, true) <= 1e-9);
        // E / sqrt(det E) is the rep2 frame up to the seed factor.
        double worst = 0.0;
        for (std::size_t k = 0; k < y.E.values().size(); ++k) {
            const Mat2 psi = y.E.values()[k] * Mat2{1.0, -h.phi.values()[k], 0.0, 1.0};
            worst = std::max(worst, projective_distance(SL2::normalized(psi), br.psi_frame.values()[k]));
        }
        CHECK(worst <= 1e-9);
    }
}
