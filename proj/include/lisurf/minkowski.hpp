#pragma once

// Linear algebra of Minkowski space R^{3,1}: vectors, bivectors (skew
// endomorphisms), the Hermitian 2x2 model and the SL(2,C) -> O(3,1) cover.
//
// Signature is (-,+,+,+) w.r.t. the basis e0..e3. In the Hermitian model
//   v  <->  [[v0 + v3, v1 + i v2], [v1 - i v2, v0 - v3]],
// so that (v, v) = -det.

#include <array>
#include <complex>
#include <optional>

namespace lisurf {

using Complex = std::complex<double>;

struct Vec31 {
    std::array<double, 4> c{};

    constexpr Vec31() = default;
    constexpr Vec31(double v0, double v1, double v2, double v3) : c{v0, v1, v2, v3} {}

    static constexpr Vec31 basis(int k) {
        Vec31 v;
        v.c[static_cast<std::size_t>(k)] = 1.0;
        return v;
    }

    constexpr double operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
    constexpr double& operator[](int k) { return c[static_cast<std::size_t>(k)]; }

    Vec31& operator+=(const Vec31& o) {
        for (int k = 0; k < 4; ++k) c[k] += o.c[k];
        return *this;
    }
    Vec31& operator-=(const Vec31& o) {
        for (int k = 0; k < 4; ++k) c[k] -= o.c[k];
        return *this;
    }
    Vec31& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }

    /// Euclidean norm of the coordinate vector (used for scale-relative tolerances).
    double norm_euclid() const;
    double max_abs() const;
};

inline Vec31 operator+(Vec31 a, const Vec31& b) { return a += b; }
inline Vec31 operator-(Vec31 a, const Vec31& b) { return a -= b; }
inline Vec31 operator-(Vec31 a) { return a *= -1.0; }
inline Vec31 operator*(double s, Vec31 a) { return a *= s; }
inline Vec31 operator*(Vec31 a, double s) { return a *= s; }
inline Vec31 operator/(Vec31 a, double s) { return a *= 1.0 / s; }

inline constexpr Vec31 e0{1, 0, 0, 0};
inline constexpr Vec31 e1{0, 1, 0, 0};
inline constexpr Vec31 e2{0, 0, 1, 0};
inline constexpr Vec31 e3{0, 0, 0, 1};

/// Minkowski product, signature (-,+,+,+).
double inner(const Vec31& v, const Vec31& w);

enum class Causal { spacelike, timelike, lightlike };

/// Default relative tolerance for the lightlike test |(v,v)| <= tol * |v|^2.
inline constexpr double kLightlikeTol = 1e-10;

Causal causal_character(const Vec31& v, double tol = kLightlikeTol);
const char* to_string(Causal c);

/// Element of Lambda^2 R^{3,1}, coefficients on e_nm = e_n ^ e_m (n < m)
/// in the order 01, 02, 03, 12, 13, 23.
struct Bivector {
    std::array<double, 6> c{};

    static int slot(int n, int m);
    /// Coefficient of e_n ^ e_m for any n != m (antisymmetric extension).
    double coeff(int n, int m) const;

    Bivector& operator+=(const Bivector& o) {
        for (int k = 0; k < 6; ++k) c[k] += o.c[k];
        return *this;
    }
    Bivector& operator-=(const Bivector& o) {
        for (int k = 0; k < 6; ++k) c[k] -= o.c[k];
        return *this;
    }
    Bivector& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    /// Euclidean norm on the six coefficients.
    double norm() const;
};

inline Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
inline Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
inline Bivector operator*(double s, Bivector a) { return a *= s; }

Bivector wedge(const Vec31& v, const Vec31& w);
/// Bivector acting as a skew endomorphism: (v ^ w) u = (v,u) w - (w,u) v.
Vec31 apply(const Bivector& b, const Vec31& u);
/// Euclidean pairing of coefficient vectors.
double pairing(const Bivector& a, const Bivector& b);

/// Plain 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static constexpr Mat2 identity() { return {}; }
    static constexpr Mat2 zero() { return {Complex{}, Complex{}, Complex{}, Complex{}}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    /// Inverse; throws DegenerateError for a singular matrix.
    Mat2 inverse() const;
    double max_abs() const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& x);

/// Hermitian 2x2 matrix [[p, z], [conj z, q]]; Hermitian by construction.
struct Herm {
    double p = 0.0;
    double q = 0.0;
    Complex z{};

    Mat2 mat() const { return {Complex{p}, z, std::conj(z), Complex{q}}; }
    double det() const { return p * q - std::norm(z); }
    double trace() const { return p + q; }
    /// Hermitian part of an arbitrary matrix ((M + M*) / 2).
    static Herm from_mat(const Mat2& m);
    double max_abs_diff(const Herm& o) const;
};

Herm to_herm(const Vec31& v);
Vec31 from_herm(const Herm& h);

/// Element of SL(2,C). Construction checks |det - 1| <= tol.
class SL2 {
public:
    static constexpr double kDetTol = 1e-9;

    SL2() = default;
    /// Throws InputError if |det m - 1| > tol.
    explicit SL2(const Mat2& m, double tol = kDetTol);

    static SL2 identity() { return SL2{}; }
    /// Normalizes m by a square root of its determinant. Throws on singular m.
    static SL2 normalized(const Mat2& m);

    const Mat2& mat() const { return m_; }
    SL2 inverse() const;
    double det_error() const { return std::abs(m_.det() - 1.0); }

    friend SL2 operator*(const SL2& x, const SL2& y);

private:
    struct Unchecked {};
    SL2(const Mat2& m, Unchecked) : m_(m) {}
    Mat2 m_{};
};

/// Resolves the +-B ambiguity: first nonzero entry (row-major) gets
/// nonnegative real part.
SL2 canonical_sign(const SL2& b);
/// min(|B - B'|, |B + B'|), entrywise max norm.
double projective_distance(const SL2& x, const SL2& y);

/// B H B*.
Herm act(const SL2& b, const Herm& h);
Vec31 act(const SL2& b, const Vec31& v);

/// A in sl(2,C) acting on R^{3,1} by v -> A v + v A*. Throws InputError if
/// |tr A| exceeds tol.
Vec31 sl2_act_skew(const Mat2& a, const Vec31& v, double tol = 1e-12);
/// Traceless matrix representing a bivector, via e_0n = -e_n/2,
/// e_12 = (i/2) e3, e_13 = -(i/2) e2, e_23 = (i/2) e1.
Mat2 skew_matrix(const Bivector& b);

/// 4x4 real matrix acting on Vec31 coordinates (row-major).
struct LinMap31 {
    std::array<double, 16> m{};

    static LinMap31 identity();
    double operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }

    Vec31 apply(const Vec31& v) const;
    Vec31 column(int k) const;
    /// Inverse of a Lorentz transformation, eta M^T eta.
    LinMap31 orthogonal_inverse() const;
    /// General inverse via LU.
    LinMap31 inverse() const;
    /// max |(Mu, Mv) - (u, v)| over basis pairs.
    double orthogonality_residual() const;
    double max_abs() const;
    double max_abs_diff(const LinMap31& o) const;
    /// Induced operator norm for the Euclidean coordinate metric.
    double op_norm() const;
};

LinMap31 operator*(const LinMap31& x, const LinMap31& y);
LinMap31 operator-(const LinMap31& x, const LinMap31& y);

LinMap31 sl2_to_o31(const SL2& b);

/// Inverse stereographic projection, z -> (|z|^2+1) e0 + 2 Re z e1 + 2 Im z e2 + (|z|^2-1) e3,
/// which in the Hermitian model is 2 [[|z|^2, z], [conj z, 1]].
Vec31 stereo_lift(Complex z);
/// Inverse of stereo_lift on the projective light cone; nullopt encodes infinity.
/// Throws InputError for a non-lightlike vector.
std::optional<Complex> stereo_project(const Vec31& v, double tol = kLightlikeTol);

/// Hyperbolic rotation acting by t on <g1>, by 1/t on <g2> and trivially on
/// <g1, g2>^perp. Throws DegenerateError if (g1, g2) ~ 0, InputError if t ~ 0.
LinMap31 hyperbolic_rotation(const Vec31& g1, const Vec31& g2, double t);
/// The SL(2,C) representative of hyperbolic_rotation(stereo_lift(z1), stereo_lift(z2), t),
/// sign-canonicalized. Requires t > 0 and z1 != z2.
SL2 hyperbolic_rotation_sl2(Complex z1, Complex z2, double t);

}  // namespace lisurf
