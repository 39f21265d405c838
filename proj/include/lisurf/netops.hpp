#pragma once

// Face and edge operators on nets in R^{3,1}: planarity, circularity, mixed
// area, Christoffel duality, bivector-valued edge forms, envelopes and the
// curvature functionals defined through mixed areas.
//
// Residuals are scale-relative unless stated otherwise.

#include "lisurf/grid.hpp"

namespace lisurf {

inline constexpr double kDefaultTol = 1e-9;

using EdgeForm = EdgeField<Bivector>;
using EdgeDiff = EdgeField<Vec31>;

/// dx_ij = x_i - x_j on every edge (positive orientation).
EdgeDiff edge_differences(const Net<Vec31>& x);
/// Midpoint (x_i + x_j) / 2.
Vec31 edge_midpoint(const Net<Vec31>& x, VertexId i, VertexId j);

struct Diagonals {
    Vec31 ik;  ///< x_i - x_k
    Vec31 jl;  ///< x_j - x_l
};
Diagonals diagonals(const Net<Vec31>& x, int n, int m);

/// sigma_min / sigma_max of the three edge vectors from vertex i.
FaceReport is_planar(const Net<Vec31>& x, int n, int m, double tol = kDefaultTol);
CheckReport planarity(const Net<Vec31>& x, double tol = kDefaultTol);

/// Residual: max_v |2 (d_v, c') - (d_v, d_v)| / max_v |d_v|^2 over the
/// least-squares centre c' (relative to x_i), d_v = x_v - x_i.
FaceReport is_circular(const Net<Vec31>& x, int n, int m, double tol = kDefaultTol);
/// Solved centre of the face (meaningful when the residual is small).
Vec31 circumcenter(const Net<Vec31>& x, int n, int m);
CheckReport circularity(const Net<Vec31>& x, double tol = kDefaultTol);

/// 1/4 (dx_ik ^ dy_jl - dx_jl ^ dy_ik).
Bivector mixed_area(const Net<Vec31>& x, const Net<Vec31>& y, int n, int m);

/// Per edge: |dx ^ dy| / (|dx| |dy|) (Euclidean sine of the angle).
CheckReport is_edge_parallel(const Net<Vec31>& x, const Net<Vec31>& y, double tol = kDefaultTol);

/// Circularity of both nets, edge-parallelism and |A(x,y)| relative to the
/// diagonal lengths, per face.
CheckReport christoffel_check(const Net<Vec31>& x, const Net<Vec31>& y, double tol = kDefaultTol);

/// zeta_ij = g_ij ^ dx_ij with g_ij the edge midpoint.
EdgeForm zeta_from_pair(const Net<Vec31>& g, const Net<Vec31>& x);
/// zeta_ij = g_ij ^ dg_ij / (l_ij (g_i, g_j)) = -g_i ^ g_j / (l_ij (g_i, g_j)).
EdgeForm zeta_from_lift(const Net<Vec31>& g, const EdgeLabelling& labels);

/// Per-face |sum of the form around the face| relative to the summed edge norms.
CheckReport closure(const EdgeForm& w, double tol = kDefaultTol);
CheckReport closure(const EdgeDiff& w, double tol = kDefaultTol);

/// Integrates a difference form dx_ij = x_i - x_j. Throws NotClosedError if a
/// face fails closure at tol.
Net<Vec31> integrate_differences(const EdgeDiff& dx, const Vec31& seed, VertexId seed_vertex = {},
                                 PathOrder order = PathOrder::rows_first, double tol = kDefaultTol);
/// x with dx_ij = -w_ij(p).
Net<Vec31> integrate_edge_form(const EdgeForm& w, const Vec31& p, const Vec31& seed, VertexId seed_vertex = {},
                               PathOrder order = PathOrder::rows_first, double tol = kDefaultTol);
/// Difference form dx_ij = -w_ij(p) before integration.
EdgeDiff apply_form(const EdgeForm& w, const Vec31& p);

/// Max vertexwise Euclidean distance between two nets.
double max_deviation(const Net<Vec31>& x, const Net<Vec31>& y);

/// Per edge: distance of dx_ij from span{g_i, g_j}, relative to |dx_ij|.
CheckReport check_legendre(const Net<Vec31>& x, const Net<Vec31>& g, double tol = kDefaultTol);

/// Ratio c with B + c A = 0 for proportional bivectors A, B, and the
/// relative deviation from proportionality.
struct CurvatureValue {
    double value = 0.0;
    double parallelism = 0.0;
};

/// A(x,g) + H A(x,x) = 0. Throws DegenerateError when A(x,x) vanishes.
CurvatureValue lightcone_mean_curvature(const Net<Vec31>& x, const Net<Vec31>& g, int n, int m);
/// A(f,nrm) + H A(f,f) = 0.
CurvatureValue mean_curvature(const Net<Vec31>& f, const Net<Vec31>& nrm, int n, int m);
/// A(nrm,nrm) - K A(f,f) = 0.
CurvatureValue gauss_curvature(const Net<Vec31>& f, const Net<Vec31>& nrm, int n, int m);

/// Per face residuals "H" = |H - expected| and "parallel" for A(f,nrm) + H A(f,f) = 0.
CheckReport mean_curvature_check(const Net<Vec31>& f, const Net<Vec31>& nrm, double expected,
                                 double tol = kDefaultTol);

/// n = (mu g / (x, g) - x) / sqrt|mu| for x in the quadric (x, x) = mu.
/// Satisfies (n, x) = 0, (n, n) = -sgn(mu), x + sqrt|mu| n ~ g.
Net<Vec31> hyperbolic_gauss_lift(const Net<Vec31>& x, const Net<Vec31>& g, double mu);

/// Vertexwise |(x, x) - mu|.
CheckReport quadric_membership(const Net<Vec31>& x, double mu, double tol = kDefaultTol);

}  // namespace lisurf
