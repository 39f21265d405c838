#pragma once

// Moutard lifts, the edge connection Gamma(t) of a discrete isothermic
// light-cone net, its trivializations T(t) and the SL(2,C) representatives
// B(m), F(m).
//
// Conventions: T_j = T_i Gamma_ij, F_j = F_i B_ij, Gamma_ji = Gamma_ij^{-1}.

#include "lisurf/grid.hpp"
#include "lisurf/netops.hpp"

namespace lisurf {

/// Lifts stereo_lift(phi) vertexwise.
Net<Vec31> light_cone_lift(const Net<Complex>& phi);

/// Rescaling gt = rho g with (gt_i, gt_j) = 1 / l_ij on every edge, rho(seed) = seed_scale.
/// Throws NotClosedError if the propagated scales disagree around a face.
Net<Vec31> moutard_lift(const Net<Vec31>& g, const EdgeLabelling& labels, double seed_scale = 1.0,
                        double tol = 1e-9);
/// Per edge "edge_product" = |l_ij (gt_i, gt_j) - 1|; per face "diagonal" = parallelism of the diagonals.
CheckReport moutard_check(const Net<Vec31>& gt, const EdgeLabelling& labels, double tol = 1e-10);

/// Throws PoleError if |t - l| <= 1e-8 |l| for some edge label l.
void check_pole(const EdgeLabelling& labels, double t);

/// Gamma(t)_ij = hyperbolic_rotation(g_i, g_j, 1 - t / l_ij).
LinMap31 gamma_edge(const Vec31& gi, const Vec31& gj, double l, double t);

/// Operator norm of Gamma_ij Gamma_jk Gamma_kl Gamma_li - id.
double check_flat(const Net<Vec31>& g, const EdgeLabelling& labels, double t, int n, int m);
CheckReport flatness(const Net<Vec31>& g, const EdgeLabelling& labels, double t, double tol = 1e-10);

struct TrivializationOptions {
    LinMap31 seed = LinMap31::identity();
    VertexId seed_vertex{};
    PathOrder order = PathOrder::rows_first;
    /// Face holonomy tolerance; <= 0 skips the flatness precheck.
    double flat_tol = 1e-8;
};

/// T(t) with T at the seed vertex equal to the seed.
Net<LinMap31> integrate_T(const Net<Vec31>& g, const EdgeLabelling& labels, double t,
                          const TrivializationOptions& opt = {});

/// B(m)_ij, the SL(2,C) form of Gamma(m)_ij for g = stereo_lift(phi).
/// Requires phi_i != phi_j and l (l - m) > 0.
SL2 b_matrix(Complex phi_i, Complex phi_j, double l, double m);

struct SL2Options {
    SL2 seed = SL2::identity();
    VertexId seed_vertex{};
    PathOrder order = PathOrder::rows_first;
    /// Projective face holonomy tolerance; <= 0 skips the check.
    double flat_tol = 1e-8;
};

/// Projective distance of the face holonomy B_ij B_jk B_kl B_li from +-I.
double check_flat_sl2(const Net<Complex>& phi, const EdgeLabelling& labels, double m, int n, int mm);

/// F(m) with F_j = F_i B(m)_ij.
Net<SL2> integrate_F(const Net<Complex>& phi, const EdgeLabelling& labels, double m, const SL2Options& opt = {});

/// x_j = Gamma(m)_ji x_i with x at the seed vertex equal to seed.
Net<Vec31> parallel_section(const Net<Vec31>& g, const EdgeLabelling& labels, double m, const Vec31& seed,
                            VertexId seed_vertex = {}, double flat_tol = 1e-8);

/// Vertexwise T_v applied to x_v.
Net<Vec31> apply_pointwise(const Net<LinMap31>& t, const Net<Vec31>& x);
/// Max entrywise deviation between two nets of linear maps.
double max_deviation(const Net<LinMap31>& a, const Net<LinMap31>& b);
/// Max over vertices of the orthogonality residual.
double max_orthogonality_residual(const Net<LinMap31>& t);

}  // namespace lisurf
