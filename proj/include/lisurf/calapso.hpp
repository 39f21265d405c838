#pragma once

// Calapso transforms of L-isothermic nets x + <g>, additivity of the
// trivializations, the Lawson correspondence and secondary Gauss maps.

#include "lisurf/connection.hpp"
#include "lisurf/representations.hpp"

namespace lisurf {

struct CalapsoState {
    double t = 0.0;
    Net<LinMap31> T;
    /// x(t), with x(t) at the seed vertex equal to T_seed x_seed.
    Net<Vec31> x;
    /// g(t) = T(t) g.
    Net<Vec31> g;
    /// l - t.
    EdgeLabelling labels;
    /// Closure of the increments dx(t) before integration.
    CheckReport closure;
};

/// dx(t)_ij = T_i x_i - T_j x_j + t / (l_ij (g_i, g_j)) ((g_i, x_i) T_j g_j - (g_j, x_j) T_i g_i).
CalapsoState calapso(const Net<Vec31>& x, const Net<Vec31>& g, const EdgeLabelling& labels, double t,
                     const LinMap31& seed = LinMap31::identity());
/// Calapso transform of a bundle; the result is tagged SpaceKind::general.
SurfaceBundle calapso_bundle(const SurfaceBundle& b, double t);

/// Per face cross ratio of stereo_project(g(t)) against (l(t)_b / l(t)_a).
CheckReport label_shift_check(const CalapsoState& s, double tol = 1e-10);

/// Max over vertices of the operator norm of T(t+s) - T^t(s) T(t), all seeds identity at (0,0).
double additivity_check(const Net<Vec31>& g, const EdgeLabelling& labels, double t, double s);
/// Max over vertices of the operator norm of T(t) T^t(-t) - id.
double inverse_check(const Net<Vec31>& g, const EdgeLabelling& labels, double t);

/// dx(m)_ij = -m zeta(m)_ij(p) for a quadric bundle built at parameter m.
/// The result lies in the hyperplane perpendicular to p (mu' = -mu).
SurfaceBundle lawson_transform(const SurfaceBundle& quadric, double m);

/// psi with stereo_lift(psi) ~ T(m) g, T(m) seeded with the inverse of the
/// bundle's frame at (0,0). Throws DegenerateError if a vertex maps to infinity.
Net<Complex> secondary_gauss(const SurfaceBundle& quadric, double m);

}  // namespace lisurf
