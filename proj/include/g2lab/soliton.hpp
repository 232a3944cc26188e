#pragma once

#include <Eigen/Dense>
#include <string>

#include "g2lab/curvature.hpp"
#include "g2lab/g2_structure.hpp"

namespace g2lab {

enum class SolitonType { shrinking, steady, expanding, torsion_free };

std::string to_string(SolitonType t);

struct SolitonCertificate {
  double lambda = 0.0;
  Eigen::MatrixXd D;          // derivation from the least-squares solve
  double residual = 0.0;      // ||Q + (lambda/3)Id + D||_F / (1 + ||Q||_F)
  SolitonType type = SolitonType::steady;
  bool algebraic = false;     // g-adjoint of D is also a derivation
  double pointwise_residual = 0.0;  // ||Delta phi - lambda phi - theta(D) phi||
  bool is_soliton = false;    // residual below tol::soliton_residual
};

/// Left-hand side of the algebraic soliton equation:
/// Q = Ric(g_phi) - (1/12) tr(tau_endo^2) Id + (1/2) tau_endo^2.
Eigen::MatrixXd as_lhs(const G2Structure& g2, const TorsionData& t, const CurvatureData& curv);

/// Least-squares solve of Q = -(lambda/3) Id - D over lambda in R and D in
/// Der(g). A nonzero residual is a valid "not an algebraic soliton" verdict.
/// Torsion-free input short-circuits to the minimal certificate
/// (lambda = 0, D = 0, type torsion_free).
SolitonCertificate solve_soliton(const G2Structure& g2, const LieAlgebra& L,
                                 const TorsionData& t, const CurvatureData& curv);

/// Sup-norm defect of Delta phi = lambda phi + theta(D) phi.
double verify_pointwise(const G2Structure& g2, const LieAlgebra& L, double lambda,
                        const Eigen::MatrixXd& D);

/// Lie derivative of phi along the left-invariant field X for closed phi:
/// Cartan's formula collapses to d(iota_X phi).
Form lie_derivative_left_invariant(const Eigen::VectorXd& X, const G2Structure& g2,
                                   const LieAlgebra& L);

}  // namespace g2lab
