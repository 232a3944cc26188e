#include "g2lab/lie_algebra.hpp"

#include <cmath>
#include <string>

#include "g2lab/errors.hpp"
#include "g2lab/tolerances.hpp"

namespace g2lab {

namespace {

Form apply_d(const Form& a, const std::vector<Form>& diffs) {
  const int n = a.dim();
  Form out(n, a.grade() + 1);
  for (const auto& [I, c] : a.coeffs()) {
    auto idx = I.indices();
    for (int pos = 0; pos < int(idx.size()); ++pos) {
      std::vector<int> pre(idx.begin(), idx.begin() + pos);
      std::vector<int> post(idx.begin() + pos + 1, idx.end());
      Form term = wedge(wedge(Form::monomial(n, IndexSet::of(pre)), diffs[size_t(idx[size_t(pos)] - 1)]),
                        Form::monomial(n, IndexSet::of(post)));
      double sign = (pos % 2 == 0) ? 1.0 : -1.0;
      out += (sign * c) * term;
    }
  }
  return out;
}

}  // namespace

LieAlgebra LieAlgebra::from_structure_equations(std::vector<Form> diffs) {
  LieAlgebra L;
  L.n_ = int(diffs.size());
  if (L.n_ < 1 || L.n_ > IndexSet::max_index)
    throw InputError("structure equations must list between 1 and 9 covector differentials");
  for (int k = 0; k < L.n_; ++k) {
    const Form& f = diffs[size_t(k)];
    if (f.dim() != L.n_)
      throw InputError("de" + std::to_string(k + 1) + " has wrong dimension");
    if (f.grade() != 2)
      throw InputError("de" + std::to_string(k + 1) + " must be a 2-form");
  }
  L.diffs_ = std::move(diffs);

  for (int k = 1; k <= L.n_; ++k) {
    double res = apply_d(L.diffs_[size_t(k - 1)], L.diffs_).inf_norm();
    L.jacobi_residual_ = std::max(L.jacobi_residual_, res);
    if (res >= tol::jacobi) throw NotLieAlgebraError(k, res);
  }

  L.derive_brackets();
  L.compute_derivations();

  double trace_max = 0.0;
  for (int i = 0; i < L.n_; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(L.n_);
    ei(i) = 1.0;
    trace_max = std::max(trace_max, std::abs(L.ad(ei).trace()));
  }
  L.unimodular_ = trace_max < tol::unimodular;
  L.solvable_ = L.compute_solvable();
  return L;
}

LieAlgebra LieAlgebra::abelian(int dim) {
  std::vector<Form> diffs;
  diffs.reserve(size_t(dim));
  for (int k = 0; k < dim; ++k) diffs.emplace_back(dim, 2);
  return from_structure_equations(std::move(diffs));
}

void LieAlgebra::derive_brackets() {
  c_.assign(size_t(n_), Eigen::MatrixXd::Zero(n_, n_));
  for (int k = 1; k <= n_; ++k) {
    for (const auto& [I, v] : diffs_[size_t(k - 1)].coeffs()) {
      auto idx = I.indices();
      // de^k(e_i, e_j) = -c^k_{ij}
      c_[size_t(k - 1)](idx[0] - 1, idx[1] - 1) = -v;
      c_[size_t(k - 1)](idx[1] - 1, idx[0] - 1) = v;
    }
  }
  // duality cross-check: e^k([e_i,e_j]) against -de^k(e_i,e_j)
  for (int k = 1; k <= n_; ++k) {
    const Form& d = diffs_[size_t(k - 1)];
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) {
        double lhs = c_[size_t(k - 1)](i - 1, j - 1);
        double rhs = -d.coeff(IndexSet::of({i, j}));
        if (std::abs(lhs - rhs) > 0.0)
          throw NumericError("bracket/differential duality violated");
      }
  }
}

Form LieAlgebra::ce_differential(const Form& a) const {
  if (a.dim() != n_) throw InputError("ce_differential: form dimension mismatch");
  return apply_d(a, diffs_);
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != n_ || y.size() != n_) throw InputError("bracket: dimension mismatch");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
  for (int k = 0; k < n_; ++k) out(k) = x.dot(c_[size_t(k)] * y);
  return out;
}

Eigen::MatrixXd LieAlgebra::ad(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd out(n_, n_);
  for (int k = 0; k < n_; ++k) out.row(k) = x.transpose() * c_[size_t(k)];
  return out;
}

IsDerivationResult LieAlgebra::is_derivation(const Eigen::MatrixXd& D) const {
  if (D.rows() != n_ || D.cols() != n_) throw InputError("is_derivation: shape mismatch");
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      Eigen::VectorXd ei = Eigen::VectorXd::Zero(n_), ej = Eigen::VectorXd::Zero(n_);
      ei(i) = 1.0;
      ej(j) = 1.0;
      Eigen::VectorXd defect =
          D * bracket(ei, ej) - bracket(D * ei, ej) - bracket(ei, D * ej);
      worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
  }
  return {worst < tol::derivation, worst};
}

void LieAlgebra::compute_derivations() {
  // D is a derivation iff D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] = 0 for i<j.
  // Rows: one vector equation per pair; columns: the n^2 entries of D.
  const int pairs = n_ * (n_ - 1) / 2;
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(pairs * n_, n_ * n_);
  int row = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      Eigen::VectorXd brij = Eigen::VectorXd::Zero(n_);
      for (int k = 0; k < n_; ++k) brij(k) = c_[size_t(k)](i, j);
      for (int p = 0; p < n_; ++p) {
        for (int q = 0; q < n_; ++q) {
          Eigen::VectorXd v = Eigen::VectorXd::Zero(n_);
          v(p) += brij(q);
          if (q == i)
            for (int k = 0; k < n_; ++k) v(k) -= c_[size_t(k)](p, j);
          if (q == j)
            for (int k = 0; k < n_; ++k) v(k) -= c_[size_t(k)](i, p);
          E.block(row, p * n_ + q, n_, 1) = v;
        }
      }
      row += n_;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(E, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = tol::svd_cutoff_rel * (sv.size() > 0 ? sv(0) : 0.0);
  der_.basis.clear();
  for (long i = 0; i < E.cols(); ++i) {
    if (i < sv.size() && sv(i) > cutoff) continue;
    Eigen::VectorXd v = svd.matrixV().col(i);
    Eigen::MatrixXd D(n_, n_);
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q) D(p, q) = v(p * n_ + q);
    der_.basis.push_back(std::move(D));
  }
}

bool LieAlgebra::compute_solvable() const {
  // derived series by numeric span: g^{k+1} = span{[x,y] : x,y in g^k}
  Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(n_, n_);
  int dim = n_;
  for (int step = 0; step <= n_; ++step) {
    if (dim == 0) return true;
    Eigen::MatrixXd gen(n_, dim * dim);
    int col = 0;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) gen.col(col++) = bracket(basis.col(a), basis.col(b));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gen, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    double cutoff = tol::svd_cutoff_rel * (sv.size() > 0 ? std::max(sv(0), 1.0) : 1.0);
    int rank = 0;
    for (long i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
    if (rank == 0) return true;
    if (rank >= dim) return false;  // series stabilized above zero
    basis = svd.matrixU().leftCols(rank);
    dim = rank;
  }
  return false;
}

}  // namespace g2lab
