#pragma once

// Weierstrass-type representations built from a discrete holomorphic datum:
// zero mean curvature nets in hyperplanes, cmc nets in quadrics, the
// secondary-Gauss-map form, E-matrix recurrences, dual cmc nets and the
// linear Weingarten pairs x^+ / x^-.
//
//   hyperplane kind: p = (1+mu)/2 e0 + (1-mu)/2 e3, (p,p) = -mu
//     mu =  1: p = e0,            Euclidean R^3, minimal
//     mu = -1: p = e3,            Lorentz R^{2,1}, maximal
//     mu =  0: p = (e0+e3)/2,     isotropic space, i-minimal
//   quadric kind:    p = (1-mu)/2 e0 + (1+mu)/2 e3 = diag(1, -mu), (p,p) = mu
//     mu = -1: p = e0,            H^3, cmc 1
//     mu =  1: p = e3,            de Sitter S^{2,1}, cmc 1
//     mu =  0: p = (e0+e3)/2,     light cone, intrinsically flat

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lisurf/connection.hpp"
#include "lisurf/grid.hpp"
#include "lisurf/netops.hpp"

namespace lisurf {

/// general: no space-form constraint (e.g. Calapso transforms).
enum class SpaceKind { hyperplane, quadric, general };
const char* to_string(SpaceKind k);

struct SpaceForm {
    double mu = 1.0;
    SpaceKind kind = SpaceKind::hyperplane;

    Vec31 p() const;
};

Vec31 hyperplane_normal(double mu);
Vec31 quadric_point(double mu);
/// Isotropic origin o = e0 - e3 with (o, p) = -1 for p = (e0 + e3)/2.
inline constexpr Vec31 kIsotropicOrigin{1.0, 0.0, 0.0, -1.0};

struct Provenance {
    std::string representation;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::pair<std::string, std::string>> notes;

    double param(const std::string& key, double fallback = 0.0) const;
};

struct SurfaceBundle {
    Net<Vec31> x;
    /// Lift of the lightlike Gauss map G with the normalization of the representation.
    Net<Vec31> gn;
    std::optional<Net<Vec31>> normal;
    SpaceForm space;
    /// Labelling of G.
    EdgeLabelling labels;
    /// G = <stereo_lift(phi)>.
    Net<Complex> phi;
    /// Hermitian frame (Phi for the quadric representation, Psi for rep2).
    std::optional<Net<SL2>> frame;
    Provenance prov;
};

/// Rescales g so that (g, anchor) = -1.
Net<Vec31> section_gn(const Net<Vec31>& g, const Vec31& anchor);
/// Rescales g so that (g_v, anchor_v) = -1 vertexwise.
Net<Vec31> section_gn(const Net<Vec31>& g, const Net<Vec31>& anchor);

/// x with dx_ij = -zeta_ij(p), zeta from the lift of phi. Default seed:
/// origin for mu != 0, kIsotropicOrigin for mu = 0 (which needs (seed, p) = -1).
SurfaceBundle weier_hyperplane(const Net<Complex>& phi, const EdgeLabelling& labels, double mu,
                               std::optional<Vec31> seed = std::nullopt);
/// X = Phi diag(1, -mu) Phi*, Phi_j = B(m)_ij^{-1} Phi_i.
SurfaceBundle weier_quadric(const Net<Complex>& phi, const EdgeLabelling& labels, double m, double mu,
                            const SL2& seed = SL2::identity());

/// X = Psi diag(1, -mu) Psi*, Psi_j = Psi_i B(-m)_ij built from psi with labels l - m.
/// `labels` are the labels of the hyperbolic Gauss map G (psi carries l - m).
SurfaceBundle rep2(const Net<Complex>& psi, const EdgeLabelling& labels, double m, double mu,
                   const SL2& seed = SL2::identity());

/// E_j = E_i M_ij / (l (psi_i - psi_j)) with
/// M_ij = [[l (psi_i - psi_j) - lambda psi_i, lambda psi_i psi_j], [-lambda, l (psi_i - psi_j) + lambda psi_j]].
Mat2 hoffmann_step(Complex psi_i, Complex psi_j, double l, double lambda);
Net<Mat2> hoffmann_E(const Net<Complex>& psi, const EdgeLabelling& labels, double lambda,
                     const Mat2& seed = Mat2::identity());
/// Per edge |det E_j - (l - lambda)/l det E_i| relative to |det E_i|.
CheckReport hoffmann_det_check(const Net<Mat2>& e, const EdgeLabelling& labels, double lambda, double tol = 1e-11);
/// Y = E E* / det E.
Net<Herm> hoffmann_Y(const Net<Mat2>& e);
/// Per edge: E^{-1}_j versus E^{-1}_i hoffmann_step(phi_i, phi_j, l - lambda, -lambda), phi_v = E_v . psi_v.
CheckReport duality_formula_check(const Net<Mat2>& e, const Net<Complex>& psi, const EdgeLabelling& labels,
                                  double lambda, double tol = 1e-10);

/// X# = Psi^{-1} diag(1, -mu) (Psi^{-1})*.
Net<Herm> dual_cmc(const Net<SL2>& psi, double mu);
/// Per edge, projective residual of Psi^{-1}_j against Psi^{-1}_i B(m)_ij ("right") and
/// B(m)_ij Psi^{-1}_i ("left"), with B(m) built from phi and labels.
CheckReport dual_recursion_check(const Net<SL2>& psi, const Net<Complex>& phi, const EdgeLabelling& labels, double m,
                                 double tol = 1e-9);

struct LinearWeingartenPair {
    Net<Vec31> x_plus, x_minus;
    Net<Vec31> n_plus, n_minus;
    /// The common lift g / (g, x^M), satisfying (x^+-, gt) = 1.
    Net<Vec31> gt;
};

/// x^+- = x^M - (mu +- 1) / (2 (g, x^M)) g, n^+- = -+gt - x^+-.
LinearWeingartenPair brlw_pair(const Net<Vec31>& xM, const Net<Vec31>& g, double mu);

/// |(mu +- 1) K - 2 mu H + (mu -+ 1)|, sign = +1 or -1.
double weingarten_residual(const Net<Vec31>& x, const Net<Vec31>& n, double mu, int sign, int fn, int fm);
CheckReport weingarten_check(const Net<Vec31>& x, const Net<Vec31>& n, double mu, int sign, double tol = 1e-8);

/// C^+- = [[1 +- |psi|^2, (mu +- 1) psi], [(mu +- 1) conj psi, +-1 + mu^2 |psi|^2]] / (1 - mu |psi|^2).
Herm bryant_C(Complex psi, double mu, int sign);

struct BryantNets {
    Net<Herm> x_plus, x_minus;
    Net<SL2> psi_frame;
};
/// X^+- = Psi C^+- Psi* with Psi from rep2.
BryantNets bryant_rep(const Net<Complex>& psi, const EdgeLabelling& labels, double m, double mu,
                      const SL2& seed = SL2::identity());

struct ELWeingartenNets {
    Net<Mat2> E;
    Net<Herm> f_plus, f_minus;
};
/// E_i^{-1} E_j = [[1, psi_j - psi_i], [lambda / (l (psi_j - psi_i)), 1]] / sqrt(1 - lambda / l),
/// L_i = [[0, sqrt T_i], [-1/sqrt T_i, -t conj(psi_i) / sqrt T_i]], T_i = 1 + t |psi_i|^2,
/// f^+- = sgn(T) E L diag(1, +-1) (E L)*. `labels` are the labels of psi.
ELWeingartenNets el_weingarten(const Net<Complex>& psi, const EdgeLabelling& labels, double lambda, double t,
                        const Mat2& seed = Mat2::identity());

Net<Herm> to_herm_net(const Net<Vec31>& x);
Net<Vec31> from_herm_net(const Net<Herm>& x);
/// Max entrywise difference; with up_to_sign also tries -y and returns the smaller.
double max_deviation(const Net<Herm>& x, const Net<Herm>& y, bool up_to_sign = false);

/// Standard verification suite for a bundle: space-form membership,
/// planarity, circularity, Christoffel duality with gn, light-cone mean
/// curvature and (when a normal is present) mean curvature.
std::vector<CheckReport> verify_bundle(const SurfaceBundle& b, double tol = kDefaultTol);

/// Vertexwise (x, p) - (x_0, p) relative to |x - x_0| for hyperplane nets.
CheckReport hyperplane_membership(const Net<Vec31>& x, const Vec31& p, double tol = 1e-11);
/// Per edge |(dx, p)| / (|dx| |p|).
CheckReport edge_orthogonality(const Net<Vec31>& x, const Vec31& p, double tol = 1e-11);
/// Per-face light-cone mean curvature report, "H_g" = |H_g - expected|.
CheckReport lightcone_curvature_check(const Net<Vec31>& x, const Net<Vec31>& g, double expected,
                                      double tol = kDefaultTol);

}  // namespace lisurf
