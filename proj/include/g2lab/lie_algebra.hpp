#pragma once

#include <Eigen/Dense>
#include <vector>

#include "g2lab/form.hpp"

namespace g2lab {

/// A basis of the derivation space Der(g), each element an n x n matrix.
struct DerivationBasis {
  std::vector<Eigen::MatrixXd> basis;
  int dim() const { return int(basis.size()); }
};

struct IsDerivationResult {
  bool ok;
  double residual;
};

/// A Lie algebra presented by its structure equations (de^1, ..., de^n).
/// Construction validates d^2 = 0 (the Jacobi identity), derives the bracket
/// constants, cross-checks the two representations, and precomputes the
/// derivation space. Immutable afterwards; freely shareable.
class LieAlgebra {
 public:
  static LieAlgebra from_structure_equations(std::vector<Form> diffs);

  static LieAlgebra abelian(int dim);

  int dim() const { return n_; }

  /// de^k, 1-based.
  const Form& diff(int k) const { return diffs_.at(size_t(k - 1)); }
  const std::vector<Form>& diffs() const { return diffs_; }

  /// Chevalley-Eilenberg differential: the antiderivation with d e^k = diff(k).
  Form ce_differential(const Form& a) const;

  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Matrix of ad_x = [x, .].
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

  /// c^k_{ij} with [e_i, e_j] = sum_k c^k_{ij} e_k; entry (i,j) of element k-1.
  const std::vector<Eigen::MatrixXd>& bracket_constants() const { return c_; }

  bool is_unimodular() const { return unimodular_; }
  bool is_solvable() const { return solvable_; }

  const DerivationBasis& derivation_space() const { return der_; }

  IsDerivationResult is_derivation(const Eigen::MatrixXd& D) const;

  /// Largest ||d^2 e^k|| over k; below tol::jacobi by construction.
  double jacobi_residual() const { return jacobi_residual_; }

 private:
  LieAlgebra() = default;
  void derive_brackets();
  void compute_derivations();
  bool compute_solvable() const;

  int n_ = 0;
  std::vector<Form> diffs_;
  std::vector<Eigen::MatrixXd> c_;
  DerivationBasis der_;
  double jacobi_residual_ = 0.0;
  bool unimodular_ = false;
  bool solvable_ = false;
};

}  // namespace g2lab
