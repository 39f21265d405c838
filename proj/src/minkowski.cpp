#include "lisurf/minkowski.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lisurf/error.hpp"

namespace lisurf {

namespace {

constexpr std::array<double, 4> kEta{-1.0, 1.0, 1.0, 1.0};
constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

Eigen::Matrix4d to_eigen(const LinMap31& a) {
    Eigen::Matrix4d e;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) e(r, c) = a(r, c);
    return e;
}

LinMap31 from_eigen(const Eigen::Matrix4d& e) {
    LinMap31 a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a(r, c) = e(r, c);
    return a;
}

}  // namespace

double Vec31::norm_euclid() const {
    return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
}

double Vec31::max_abs() const {
    double r = 0.0;
    for (double x : c) r = std::max(r, std::abs(x));
    return r;
}

double inner(const Vec31& v, const Vec31& w) {
    return -v.c[0] * w.c[0] + v.c[1] * w.c[1] + v.c[2] * w.c[2] + v.c[3] * w.c[3];
}

Causal causal_character(const Vec31& v, double tol) {
    if (tol < 0.0) throw InputError("causal_character: negative tolerance");
    const double q = inner(v, v);
    const double scale = v.norm_euclid();
    if (std::abs(q) <= tol * scale * scale) return Causal::lightlike;
    return q > 0.0 ? Causal::spacelike : Causal::timelike;
}

const char* to_string(Causal c) {
    switch (c) {
        case Causal::spacelike: return "spacelike";
        case Causal::timelike: return "timelike";
        case Causal::lightlike: return "lightlike";
    }
    return "?";
}

int Bivector::slot(int n, int m) {
    for (int k = 0; k < 6; ++k)
        if (kPairs[k][0] == n && kPairs[k][1] == m) return k;
    throw InputError("Bivector::slot: need 0 <= n < m <= 3");
}

double Bivector::coeff(int n, int m) const {
    if (n == m) return 0.0;
    return n < m ? c[slot(n, m)] : -c[slot(m, n)];
}

double Bivector::norm() const {
    double s = 0.0;
    for (double x : c) s += x * x;
    return std::sqrt(s);
}

Bivector wedge(const Vec31& v, const Vec31& w) {
    Bivector b;
    for (int k = 0; k < 6; ++k) {
        const int n = kPairs[k][0];
        const int m = kPairs[k][1];
        b.c[k] = v[n] * w[m] - v[m] * w[n];
    }
    return b;
}

Vec31 apply(const Bivector& b, const Vec31& u) {
    Vec31 out;
    for (int k = 0; k < 6; ++k) {
        const int n = kPairs[k][0];
        const int m = kPairs[k][1];
        // (e_n ^ e_m) u = (e_n, u) e_m - (e_m, u) e_n
        out[m] += b.c[k] * kEta[n] * u[n];
        out[n] -= b.c[k] * kEta[m] * u[m];
    }
    return out;
}

double pairing(const Bivector& a, const Bivector& b) {
    double s = 0.0;
    for (int k = 0; k < 6; ++k) s += a.c[k] * b.c[k];
    return s;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2 operator*(Complex s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

Mat2 Mat2::inverse() const {
    const Complex dt = det();
    if (std::abs(dt) <= 1e-300 * std::max(1.0, max_abs() * max_abs()))
        throw DegenerateError("Mat2::inverse: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

double Mat2::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Herm Herm::from_mat(const Mat2& m) {
    return {m.a.real(), m.d.real(), 0.5 * (m.b + std::conj(m.c))};
}

double Herm::max_abs_diff(const Herm& o) const {
    return std::max({std::abs(p - o.p), std::abs(q - o.q), std::abs(z - o.z)});
}

Herm to_herm(const Vec31& v) { return {v[0] + v[3], v[0] - v[3], Complex{v[1], v[2]}}; }

Vec31 from_herm(const Herm& h) {
    return {0.5 * (h.p + h.q), h.z.real(), h.z.imag(), 0.5 * (h.p - h.q)};
}

SL2::SL2(const Mat2& m, double tol) : m_(m) {
    if (det_error() > tol) {
        std::ostringstream os;
        os << "SL2: |det - 1| = " << det_error() << " exceeds " << tol;
        throw InputError(os.str());
    }
}

SL2 SL2::normalized(const Mat2& m) {
    const Complex dt = m.det();
    if (std::abs(dt) == 0.0) throw DegenerateError("SL2::normalized: singular matrix");
    return SL2{(1.0 / std::sqrt(dt)) * m, Unchecked{}};
}

SL2 SL2::inverse() const { return SL2{{m_.d, -m_.b, -m_.c, m_.a}, Unchecked{}}; }

SL2 operator*(const SL2& x, const SL2& y) { return SL2{x.m_ * y.m_, SL2::Unchecked{}}; }

SL2 canonical_sign(const SL2& b) {
    const Mat2& m = b.mat();
    for (const Complex& e : {m.a, m.b, m.c, m.d}) {
        if (e == Complex{}) continue;
        if (e.real() < 0.0 || (e.real() == 0.0 && e.imag() < 0.0)) return SL2{(-1.0) * m};
        return b;
    }
    return b;
}

double projective_distance(const SL2& x, const SL2& y) {
    return std::min((x.mat() - y.mat()).max_abs(), (x.mat() + y.mat()).max_abs());
}

Herm act(const SL2& b, const Herm& h) { return Herm::from_mat(b.mat() * h.mat() * b.mat().adjoint()); }

Vec31 act(const SL2& b, const Vec31& v) { return from_herm(act(b, to_herm(v))); }

Vec31 sl2_act_skew(const Mat2& a, const Vec31& v, double tol) {
    if (std::abs(a.trace()) > tol * std::max(1.0, a.max_abs()))
        throw InputError("sl2_act_skew: matrix is not traceless");
    const Mat2 h = to_herm(v).mat();
    return from_herm(Herm::from_mat(a * h + h * a.adjoint()));
}

Mat2 skew_matrix(const Bivector& b) {
    const Complex i{0.0, 1.0};
    auto sigma = [](int k) { return to_herm(Vec31::basis(k)).mat(); };
    Mat2 out = Mat2::zero();
    for (int k = 1; k <= 3; ++k) out = out + Complex{-0.5 * b.coeff(0, k)} * sigma(k);
    out = out + (0.5 * i * b.coeff(1, 2)) * sigma(3);
    out = out + (-0.5 * i * b.coeff(1, 3)) * sigma(2);
    out = out + (0.5 * i * b.coeff(2, 3)) * sigma(1);
    return out;
}

LinMap31 LinMap31::identity() {
    LinMap31 a;
    for (int k = 0; k < 4; ++k) a(k, k) = 1.0;
    return a;
}

Vec31 LinMap31::apply(const Vec31& v) const {
    Vec31 out;
    for (int r = 0; r < 4; ++r) {
        double s = 0.0;
        for (int c = 0; c < 4; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

Vec31 LinMap31::column(int k) const {
    return {(*this)(0, k), (*this)(1, k), (*this)(2, k), (*this)(3, k)};
}

LinMap31 LinMap31::orthogonal_inverse() const {
    LinMap31 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = kEta[r] * (*this)(c, r) * kEta[c];
    return out;
}

LinMap31 LinMap31::inverse() const {
    const Eigen::Matrix4d e = to_eigen(*this);
    Eigen::FullPivLU<Eigen::Matrix4d> lu(e);
    if (!lu.isInvertible()) throw DegenerateError("LinMap31::inverse: singular map");
    return from_eigen(lu.inverse());
}

double LinMap31::orthogonality_residual() const {
    double r = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            const double want = a == b ? kEta[a] : 0.0;
            r = std::max(r, std::abs(inner(column(a), column(b)) - want));
        }
    return r;
}

double LinMap31::max_abs() const {
    double r = 0.0;
    for (double x : m) r = std::max(r, std::abs(x));
    return r;
}

double LinMap31::max_abs_diff(const LinMap31& o) const {
    double r = 0.0;
    for (int k = 0; k < 16; ++k) r = std::max(r, std::abs(m[k] - o.m[k]));
    return r;
}

double LinMap31::op_norm() const {
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(to_eigen(*this));
    return svd.singularValues()(0);
}

LinMap31 operator*(const LinMap31& x, const LinMap31& y) {
    LinMap31 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += x(r, k) * y(k, c);
            out(r, c) = s;
        }
    return out;
}

LinMap31 operator-(const LinMap31& x, const LinMap31& y) {
    LinMap31 out;
    for (int k = 0; k < 16; ++k) out.m[k] = x.m[k] - y.m[k];
    return out;
}

LinMap31 sl2_to_o31(const SL2& b) {
    LinMap31 out;
    for (int k = 0; k < 4; ++k) {
        const Vec31 col = act(b, Vec31::basis(k));
        for (int r = 0; r < 4; ++r) out(r, k) = col[r];
    }
    return out;
}

Vec31 stereo_lift(Complex z) {
    const double n2 = std::norm(z);
    return {n2 + 1.0, 2.0 * z.real(), 2.0 * z.imag(), n2 - 1.0};
}

std::optional<Complex> stereo_project(const Vec31& v, double tol) {
    if (causal_character(v, tol) != Causal::lightlike)
        throw InputError("stereo_project: vector is not lightlike");
    const Herm h = to_herm(v);
    const double scale = v.norm_euclid();
    if (scale == 0.0) throw InputError("stereo_project: zero vector");
    if (std::abs(h.q) <= tol * scale) return std::nullopt;
    return h.z / h.q;
}

LinMap31 hyperbolic_rotation(const Vec31& g1, const Vec31& g2, double t) {
    const double g12 = inner(g1, g2);
    if (std::abs(g12) <= 1e-14 * g1.norm_euclid() * g2.norm_euclid())
        throw DegenerateError("hyperbolic_rotation: (g1, g2) vanishes");
    if (std::abs(t) <= 1e-300) throw InputError("hyperbolic_rotation: t must be nonzero");
    // v + (1-t)/(g1,g2) [ (1/t)(g1,v) g2 - (g2,v) g1 ]
    const double s = (1.0 - t) / g12;
    LinMap31 out = LinMap31::identity();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) += s * (g2[r] * kEta[c] * g1[c] / t - g1[r] * kEta[c] * g2[c]);
    return out;
}

SL2 hyperbolic_rotation_sl2(Complex z1, Complex z2, double t) {
    if (z1 == z2) throw DegenerateError("hyperbolic_rotation_sl2: coincident fixed points");
    if (!(t > 0.0))
        throw InputError("hyperbolic_rotation_sl2: requires t > 0 (use the vector form otherwise)");
    const Complex k = 1.0 / ((z1 - z2) * std::sqrt(t));
    const Mat2 m{k * (t * z1 - z2), k * (z1 * z2 * (1.0 - t)), k * (t - 1.0), k * (z1 - t * z2)};
    return canonical_sign(SL2{m});
}

}  // namespace lisurf
