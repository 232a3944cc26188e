#pragma once

#include <Eigen/Dense>

#include "g2lab/form.hpp"

namespace g2lab {

/// A positive-definite inner product on R^n with cached inverse, Cholesky
/// factor and Riemannian volume form sqrt(det g) e^{1..n}. Immutable.
class Metric {
 public:
  explicit Metric(Eigen::MatrixXd g);

  int dim() const { return int(g_.rows()); }
  const Eigen::MatrixXd& matrix() const { return g_; }
  const Eigen::MatrixXd& inverse() const { return inv_; }
  /// Lower-triangular L with g = L L^T.
  const Eigen::MatrixXd& cholesky_lower() const { return chol_; }
  const Form& volume() const { return volume_; }
  double volume_coeff() const { return volume_coeff_; }

  static Metric identity(int dim);

 private:
  Eigen::MatrixXd g_;
  Eigen::MatrixXd inv_;
  Eigen::MatrixXd chol_;
  double volume_coeff_;
  Form volume_;
};

/// Metric inner product of two p-forms: Gram determinants of inverse-metric
/// blocks, extended bilinearly. Orthonormal monomials have unit norm.
double form_inner(const Form& a, const Form& b, const Metric& g);

/// Hodge star: the unique (n-p)-form with beta ^ *a = <beta, a> dV. Computed
/// by passing to a g-orthonormal coframe (Cholesky), starring there, and
/// mapping back.
Form hodge_star(const Form& a, const Metric& g);

}  // namespace g2lab
