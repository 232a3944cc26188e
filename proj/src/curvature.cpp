#include "g2lab/curvature.hpp"

#include <cmath>
#include <vector>

#include "g2lab/errors.hpp"
#include "g2lab/tolerances.hpp"

namespace g2lab {

namespace {

// K[a][b](c) = <[f_a, f_b], f_c> for an orthonormal frame given by the
// columns of F.
std::vector<Eigen::MatrixXd> frame_brackets(const LieAlgebra& L, const Eigen::MatrixXd& F) {
  const int n = L.dim();
  Eigen::MatrixXd Fi = F.inverse();
  std::vector<Eigen::MatrixXd> K(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    K[size_t(a)] = Eigen::MatrixXd(n, n);  // row b, col c
    for (int b = 0; b < n; ++b) K[size_t(a)].row(b) = (Fi * L.bracket(F.col(a), F.col(b))).transpose();
  }
  return K;
}

Eigen::VectorXd mean_curvature_vector(const LieAlgebra& L, const Metric& g) {
  const int n = L.dim();
  Eigen::VectorXd t(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    ei(i) = 1.0;
    t(i) = L.ad(ei).trace();
  }
  return g.inverse() * t;
}

CurvatureData finish(const LieAlgebra& L, const Metric& g, Eigen::MatrixXd ric_f) {
  // bilinear form back in the e-basis: Ric_e = L ric_f L^T for F = L^{-T}
  const Eigen::MatrixXd& C = g.cholesky_lower();
  CurvatureData out;
  ric_f = 0.5 * (ric_f + ric_f.transpose());
  out.ricci_bilinear = C * ric_f * C.transpose();
  out.ricci_endo = g.inverse() * out.ricci_bilinear;
  out.scalar_curv = out.ricci_endo.trace();
  out.mean_curvature = mean_curvature_vector(L, g);
  return out;
}

Eigen::MatrixXd orthonormal_frame(const Metric& g) {
  const int n = g.dim();
  return g.cholesky_lower()
      .transpose()
      .triangularView<Eigen::Upper>()
      .solve(Eigen::MatrixXd::Identity(n, n));
}

}  // namespace

namespace detail {

Eigen::MatrixXd ricci_bilinear_in_frame(const LieAlgebra& L, const Eigen::MatrixXd& F) {
  const int n = L.dim();
  auto K = frame_brackets(L, F);

  // Gamma[a](b,c) = <nabla_{f_a} f_b, f_c>
  std::vector<Eigen::MatrixXd> Gam(size_t(n), Eigen::MatrixXd::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        Gam[size_t(a)](b, c) = 0.5 * (K[size_t(a)](b, c) - K[size_t(b)](c, a) + K[size_t(c)](a, b));

  // Ric(f_b, f_c) = sum_a <R(f_a, f_b) f_c, f_a>
  Eigen::MatrixXd ric_f = Eigen::MatrixXd::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      double s = 0.0;
      for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d)
          s += Gam[size_t(b)](c, d) * Gam[size_t(a)](d, a) -
               Gam[size_t(a)](c, d) * Gam[size_t(b)](d, a) -
               K[size_t(a)](b, d) * Gam[size_t(d)](c, a);
      ric_f(b, c) = s;
    }

  Eigen::MatrixXd Fi = F.inverse();
  return Fi.transpose() * (0.5 * (ric_f + ric_f.transpose())) * Fi;
}

}  // namespace detail

CurvatureData ricci_koszul(const LieAlgebra& L, const Metric& g) {
  Eigen::MatrixXd F = orthonormal_frame(g);
  CurvatureData out;
  out.ricci_bilinear = detail::ricci_bilinear_in_frame(L, F);
  out.ricci_endo = g.inverse() * out.ricci_bilinear;
  out.scalar_curv = out.ricci_endo.trace();
  out.mean_curvature = mean_curvature_vector(L, g);
  return out;
}

CurvatureData ricci_algebraic(const LieAlgebra& L, const Metric& g) {
  const int n = L.dim();
  Eigen::MatrixXd F = orthonormal_frame(g);
  auto K = frame_brackets(L, F);

  // <M x, x> = -1/2 sum |<[x,f_i],f_j>|^2 + 1/4 sum |<[f_i,f_j],x>|^2
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double m = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m += -0.5 * K[size_t(a)](i, j) * K[size_t(b)](i, j) +
               0.25 * K[size_t(i)](j, a) * K[size_t(i)](j, b);
      M(a, b) = m;
    }

  // ad matrices in the frame: (ad f_a)(c,b) = K[a](b,c)
  std::vector<Eigen::MatrixXd> adf(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) adf[size_t(a)] = K[size_t(a)].transpose();

  Eigen::MatrixXd B(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) B(a, b) = (adf[size_t(a)] * adf[size_t(b)]).trace();

  Eigen::VectorXd H(n);
  for (int a = 0; a < n; ++a) H(a) = adf[size_t(a)].trace();
  Eigen::MatrixXd adH = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a) adH += H(a) * adf[size_t(a)];

  Eigen::MatrixXd ric_f = M - 0.5 * B - 0.5 * (adH + adH.transpose());
  return finish(L, g, std::move(ric_f));
}

CurvatureData ricci(const LieAlgebra& L, const Metric& g) {
  CurvatureData kz = ricci_koszul(L, g);
  CurvatureData mm = ricci_algebraic(L, g);
  double disagreement = (kz.ricci_bilinear - mm.ricci_bilinear).cwiseAbs().maxCoeff();
  if (disagreement > tol::ricci_agreement)
    throw NumericError("Ricci cross-check failed: Koszul and moment-map routes differ by " +
                       std::to_string(disagreement));
  return kz;
}

}  // namespace g2lab
