#include "g2lab/metric.hpp"

#include <cmath>

#include "g2lab/errors.hpp"
#include "g2lab/tolerances.hpp"

namespace g2lab {

Metric::Metric(Eigen::MatrixXd g)
    : g_(std::move(g)), volume_coeff_(0.0), volume_(int(g_.rows()), int(g_.rows())) {
  const long n = g_.rows();
  if (g_.cols() != n) throw InputError("metric matrix must be square");
  if ((g_ - g_.transpose()).cwiseAbs().maxCoeff() > tol::metric_symmetry)
    throw InputError("metric matrix is not symmetric");
  g_ = 0.5 * (g_ + g_.transpose());

  Eigen::LLT<Eigen::MatrixXd> llt(g_);
  if (llt.info() != Eigen::Success)
    throw NumericError("metric is not positive definite");
  chol_ = llt.matrixL();

  inv_ = llt.solve(Eigen::MatrixXd::Identity(n, n));
  if ((g_ * inv_ - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > tol::metric_inverse)
    throw NumericError("metric inverse fails the consistency check");

  volume_coeff_ = 1.0;
  for (long i = 0; i < n; ++i) volume_coeff_ *= chol_(i, i);
  std::vector<int> all(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) all[size_t(i)] = int(i) + 1;
  volume_.add_term(IndexSet::of(all), volume_coeff_);
}

Metric Metric::identity(int dim) { return Metric(Eigen::MatrixXd::Identity(dim, dim)); }

double form_inner(const Form& a, const Form& b, const Metric& g) {
  if (a.dim() != b.dim() || a.dim() != g.dim())
    throw InputError("form_inner: dimension mismatch");
  if (a.grade() != b.grade()) throw InputError("form_inner: grade mismatch");
  const Eigen::MatrixXd& gi = g.inverse();
  const int p = a.grade();
  double total = 0.0;
  Eigen::MatrixXd block(p, p);
  for (const auto& [I, ca] : a.coeffs()) {
    auto iv = I.indices();
    for (const auto& [J, cb] : b.coeffs()) {
      if (p == 0) {
        total += ca * cb;
        continue;
      }
      auto jv = J.indices();
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) block(r, c) = gi(iv[size_t(r)] - 1, jv[size_t(c)] - 1);
      total += ca * cb * block.determinant();
    }
  }
  return total;
}

Form hodge_star(const Form& a, const Metric& g) {
  if (a.dim() != g.dim()) throw InputError("hodge_star: dimension mismatch");
  const int n = a.dim();
  const Eigen::MatrixXd& L = g.cholesky_lower();
  // e^i = sum_b (L^{-T})(i,b) f^b maps coefficients into the orthonormal coframe
  Eigen::MatrixXd Linv = L.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(n, n));
  Form af = substitute(a, Linv.transpose());
  Form sf(n, n - a.grade());
  for (const auto& [I, c] : af.coeffs()) {
    auto [comp, sign] = I.complement(n);
    sf.add_term(comp, sign * c);
  }
  // f^a = sum_i L^T(a,i) e^i maps back
  return substitute(sf, L.transpose());
}

}  // namespace g2lab
