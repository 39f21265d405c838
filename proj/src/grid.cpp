#include "lisurf/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lisurf {

GridDomain::GridDomain(int N, int M) : N_(N), M_(M) {
    if (N < 1 || M < 1) throw InputError("GridDomain: need N >= 1 and M >= 1");
}

Face GridDomain::face(int n, int m) const {
    if (!has_face(n, m)) throw InputError("GridDomain::face: face out of range");
    return {{n, m}, {n + 1, m}, {n + 1, m + 1}, {n, m + 1}};
}

EdgeLabelling::EdgeLabelling(std::vector<double> a, std::vector<double> b)
    : EdgeLabelling(unchecked(std::move(a), std::move(b))) {
    for (double x : a_)
        for (double y : b_)
            if (!(x * y < 0.0))
                throw InputError("EdgeLabelling: a_n * b_m must be negative for all n, m");
}

EdgeLabelling EdgeLabelling::unchecked(std::vector<double> a, std::vector<double> b) {
    EdgeLabelling l;
    l.a_ = std::move(a);
    l.b_ = std::move(b);
    if (l.a_.empty() || l.b_.empty()) throw InputError("EdgeLabelling: empty label vector");
    for (double x : l.a_)
        if (x == 0.0 || !std::isfinite(x)) throw InputError("EdgeLabelling: labels must be finite and nonzero");
    for (double x : l.b_)
        if (x == 0.0 || !std::isfinite(x)) throw InputError("EdgeLabelling: labels must be finite and nonzero");
    return l;
}

double EdgeLabelling::edge(VertexId u, VertexId v) const {
    if (u.m == v.m && std::abs(u.n - v.n) == 1) return horizontal(std::min(u.n, v.n));
    if (u.n == v.n && std::abs(u.m - v.m) == 1) return vertical(std::min(u.m, v.m));
    throw InputError("EdgeLabelling::edge: vertices are not adjacent");
}

EdgeLabelling EdgeLabelling::shifted(double t) const {
    auto a = a_;
    auto b = b_;
    for (auto& x : a) x -= t;
    for (auto& x : b) x -= t;
    return unchecked(std::move(a), std::move(b));
}

EdgeLabelling EdgeLabelling::scaled(double s) const {
    if (s == 0.0) throw InputError("EdgeLabelling::scaled: zero factor");
    auto a = a_;
    auto b = b_;
    for (auto& x : a) x *= s;
    for (auto& x : b) x *= s;
    return unchecked(std::move(a), std::move(b));
}

Complex cross_ratio(Complex zi, Complex zj, Complex zk, Complex zl) {
    const Complex den = (zj - zk) * (zl - zi);
    if (den == Complex{}) throw DegenerateError("cross_ratio: repeated consecutive points");
    return (zi - zj) * (zk - zl) / den;
}

CheckReport is_discrete_holomorphic(const Net<Complex>& phi, const EdgeLabelling& labels, double tol) {
    const auto& dom = phi.domain();
    if (!labels.matches(dom)) throw InputError("is_discrete_holomorphic: labelling does not match domain");
    CheckReport rep{"holomorphic", {}};
    for (int n = 0; n < dom.N(); ++n)
        for (int m = 0; m < dom.M(); ++m) {
            const Complex cr = cross_ratio(phi(n, m), phi(n + 1, m), phi(n + 1, m + 1), phi(n, m + 1));
            rep.items.push_back({{Site::Kind::face, n, m}, {{"cross_ratio", std::abs(cr - labels.face_ratio(n, m)), tol}}});
        }
    return rep;
}

namespace {

// Solves cr(zi, zj, zk, zl) = q for zk.
Complex complete_face(Complex zi, Complex zj, Complex zl, double q) {
    const Complex den = (zi - zj) + q * (zl - zi);
    if (std::abs(den) <= 1e-14 * (std::abs(zi - zj) + std::abs(zl - zi)))
        throw DegenerateError("complete_face: cross-ratio equation is singular");
    return (zl * (zi - zj) + q * zj * (zl - zi)) / den;
}

void fill_interior(Net<Complex>& phi, const EdgeLabelling& labels) {
    const auto& dom = phi.domain();
    for (int n = 0; n < dom.N(); ++n)
        for (int m = 0; m < dom.M(); ++m)
            phi(n + 1, m + 1) = complete_face(phi(n, m), phi(n + 1, m), phi(n, m + 1), labels.face_ratio(n, m));
}

// gamma p_k (p_{k+1} - p_{k-1}) = 2k (p_{k+1} - p_k)(p_k - p_{k-1}), solved for p_{k+1}.
Complex power_axis_step(Complex pk, Complex pkm1, int k, double gamma) {
    const Complex den = gamma * pk - 2.0 * k * (pk - pkm1);
    if (std::abs(den) <= 1e-14 * std::abs(pk)) throw DegenerateError("gen_power: recurrence denominator vanishes");
    return (gamma * pk * pkm1 - 2.0 * k * pk * (pk - pkm1)) / den;
}

void translate(Net<Complex>& phi, Complex offset) {
    if (offset == Complex{}) return;
    for (auto& z : phi.values()) z += offset;
}

}  // namespace

HoloData gen_identity(int N, int M, double eps, Complex offset) {
    if (eps == 0.0) throw InputError("gen_identity: eps must be nonzero");
    GridDomain dom(N, M);
    Net<Complex> phi(dom);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= M; ++m) phi(n, m) = eps * Complex(n, m) + offset;
    return {std::move(phi), EdgeLabelling(std::vector<double>(N, 1.0), std::vector<double>(M, -1.0))};
}

HoloData gen_exponential(int N, int M, Complex A, Complex B, Complex offset) {
    if (std::abs(A.imag()) > 1e-14 || !(A.real() > 0.0) || A.real() == 1.0)
        throw InputError("gen_exponential: A must be real, positive and != 1");
    if (std::abs(std::abs(B) - 1.0) > 1e-12 || std::abs(B - 1.0) < 1e-14)
        throw InputError("gen_exponential: B must be unimodular and != 1");
    GridDomain dom(N, M);
    const double a = A.real() / ((1.0 - A.real()) * (1.0 - A.real()));
    const double b = (B / ((1.0 - B) * (1.0 - B))).real();
    Net<Complex> phi(dom);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= M; ++m) phi(n, m) = std::pow(A.real(), n) * std::pow(B, m);
    translate(phi, offset);
    return {std::move(phi), EdgeLabelling(std::vector<double>(N, a), std::vector<double>(M, b))};
}

HoloData gen_power(int N, int M, double gamma, Complex offset) {
    if (!(gamma > 0.0 && gamma < 2.0)) throw InputError("gen_power: need 0 < gamma < 2");
    GridDomain dom(N, M);
    EdgeLabelling labels(std::vector<double>(N, 1.0), std::vector<double>(M, -1.0));
    Net<Complex> phi(dom);
    phi(0, 0) = 0.0;
    phi(1, 0) = 1.0;
    phi(0, 1) = std::exp(Complex(0.0, std::numbers::pi * gamma / 2.0));
    for (int n = 1; n < N; ++n) phi(n + 1, 0) = power_axis_step(phi(n, 0), phi(n - 1, 0), n, gamma);
    for (int m = 1; m < M; ++m) phi(0, m + 1) = power_axis_step(phi(0, m), phi(0, m - 1), m, gamma);
    fill_interior(phi, labels);
    translate(phi, offset);
    return {std::move(phi), std::move(labels)};
}

Complex mobius(const Mat2& B, Complex z) {
    const Complex den = B.c * z + B.d;
    if (std::abs(den) <= 1e-300) throw DegenerateError("mobius: point is mapped to infinity");
    return (B.a * z + B.b) / den;
}

Net<Complex> mobius_apply(const SL2& B, const Net<Complex>& phi) {
    return phi.map([&](const Complex& z) { return mobius(B.mat(), z); });
}

}  // namespace lisurf
