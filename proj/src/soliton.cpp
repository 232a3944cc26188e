#include "g2lab/soliton.hpp"

#include <cmath>

#include "g2lab/errors.hpp"
#include "g2lab/tolerances.hpp"

namespace g2lab {

std::string to_string(SolitonType t) {
  switch (t) {
    case SolitonType::shrinking: return "shrinking";
    case SolitonType::steady: return "steady";
    case SolitonType::expanding: return "expanding";
    case SolitonType::torsion_free: return "torsion-free";
  }
  return "?";
}

Eigen::MatrixXd as_lhs(const G2Structure& g2, const TorsionData& t, const CurvatureData& curv) {
  const int n = g2.phi().dim();
  return curv.ricci_endo - (t.tr_tau_sq / 12.0) * Eigen::MatrixXd::Identity(n, n) +
         0.5 * (t.tau_endo * t.tau_endo);
}

SolitonCertificate solve_soliton(const G2Structure& g2, const LieAlgebra& L,
                                 const TorsionData& t, const CurvatureData& curv) {
  const int n = L.dim();
  SolitonCertificate cert;
  cert.D = Eigen::MatrixXd::Zero(n, n);

  if (is_torsion_free(t)) {
    // (LS) holds trivially; report the minimal-norm certificate
    Eigen::MatrixXd Q = as_lhs(g2, t, curv);
    cert.residual = Q.norm() / (1.0 + Q.norm());
    cert.type = SolitonType::torsion_free;
    cert.algebraic = true;
    cert.is_soliton = cert.residual < tol::soliton_residual;
    cert.pointwise_residual = verify_pointwise(g2, L, 0.0, cert.D);
    return cert;
  }

  Eigen::MatrixXd Q = as_lhs(g2, t, curv);
  const auto& der = L.derivation_space().basis;
  const int m = int(der.size());

  Eigen::MatrixXd A(n * n, 1 + m);
  Eigen::MatrixXd id3 = Eigen::MatrixXd::Identity(n, n) / 3.0;
  A.col(0) = Eigen::Map<const Eigen::VectorXd>(id3.data(), n * n);
  for (int k = 0; k < m; ++k)
    A.col(1 + k) = Eigen::Map<const Eigen::VectorXd>(der[size_t(k)].data(), n * n);
  Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(Q.data(), n * n);

  // min-norm least squares keeps degenerate inputs well defined
  Eigen::VectorXd sol = A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);

  const double floor = 1e-13 * std::max(1.0, sol.cwiseAbs().maxCoeff());
  for (long i = 0; i < sol.size(); ++i)
    if (std::abs(sol(i)) < floor) sol(i) = 0.0;

  cert.lambda = sol(0);
  for (int k = 0; k < m; ++k) cert.D += sol(1 + k) * der[size_t(k)];
  cert.D = (cert.D.cwiseAbs().array() < floor).select(Eigen::MatrixXd::Zero(n, n), cert.D);

  Eigen::MatrixXd defect =
      Q + (cert.lambda / 3.0) * Eigen::MatrixXd::Identity(n, n) + cert.D;
  cert.residual = defect.norm() / (1.0 + Q.norm());
  cert.is_soliton = cert.residual < tol::soliton_residual;

  if (std::abs(cert.lambda) < tol::steady_lambda)
    cert.type = SolitonType::steady;
  else
    cert.type = cert.lambda < 0 ? SolitonType::shrinking : SolitonType::expanding;

  const Eigen::MatrixXd& G = g2.metric().matrix();
  Eigen::MatrixXd adjoint = g2.metric().inverse() * cert.D.transpose() * G;
  cert.algebraic = L.is_derivation(adjoint).ok;

  cert.pointwise_residual = verify_pointwise(g2, L, cert.lambda, cert.D);
  return cert;
}

double verify_pointwise(const G2Structure& g2, const LieAlgebra& L, double lambda,
                        const Eigen::MatrixXd& D) {
  TorsionData t = torsion(g2, L);
  Form defect = t.laplacian_phi - lambda * g2.phi() - gl_action(D, g2.phi());
  return defect.inf_norm();
}

Form lie_derivative_left_invariant(const Eigen::VectorXd& X, const G2Structure& g2,
                                   const LieAlgebra& L) {
  return L.ce_differential(interior(X, g2.phi()));
}

}  // namespace g2lab
