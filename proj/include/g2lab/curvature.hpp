#pragma once

#include <Eigen/Dense>

#include "g2lab/lie_algebra.hpp"
#include "g2lab/metric.hpp"

namespace g2lab {

struct CurvatureData {
  Eigen::MatrixXd ricci_bilinear;  // Ric(e_i, e_j), symmetric
  Eigen::MatrixXd ricci_endo;      // g^{-1} Ric
  double scalar_curv;
  Eigen::VectorXd mean_curvature;  // H with g(H, x) = tr(ad_x)
};

/// Ricci curvature via the Koszul formula for the Levi-Civita connection,
/// evaluated on a g-orthonormal frame (Cholesky).
CurvatureData ricci_koszul(const LieAlgebra& L, const Metric& g);

/// Ricci curvature via the moment-map formula Ric = M - B/2 - S(ad_H);
/// independent of the Koszul route and used as its cross-check oracle.
CurvatureData ricci_algebraic(const LieAlgebra& L, const Metric& g);

/// Both methods, with the agreement enforced as a hard error; returns the
/// Koszul result, which downstream soliton code consumes.
CurvatureData ricci(const LieAlgebra& L, const Metric& g);

namespace detail {
/// Koszul Ricci from an arbitrary g-orthonormal frame F (columns f_a with
/// F^T g F = Id); exposed so frame-independence is testable.
Eigen::MatrixXd ricci_bilinear_in_frame(const LieAlgebra& L, const Eigen::MatrixXd& F);
}  // namespace detail

}  // namespace g2lab
