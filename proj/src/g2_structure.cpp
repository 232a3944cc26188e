#include "g2lab/g2_structure.hpp"

#include <cmath>

#include "g2lab/errors.hpp"
#include "g2lab/text.hpp"
#include "g2lab/tolerances.hpp"

namespace g2lab {

std::variant<G2Structure, NotPositive> analyze_positivity(const Form& phi) {
  if (phi.dim() != 7 || phi.grade() != 3)
    return NotPositive{NotPositive::Reason::wrong_shape, 0.0, {},
                       "expected a 3-form on R^7"};

  const int n = 7;
  Eigen::MatrixXd b(n, n);
  std::vector<Form> contractions;
  contractions.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    ei(i) = 1.0;
    contractions.push_back(interior(ei, phi));
  }
  const IndexSet top = IndexSet::of({1, 2, 3, 4, 5, 6, 7});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = wedge(wedge(contractions[size_t(i)], contractions[size_t(j)]), phi).coeff(top) / 6.0;
      b(i, j) = v;
      b(j, i) = v;
    }

  // det(b) scales as ||phi||^21, so the degeneracy gate is normalized to the
  // form's own magnitude (det_b is the threshold at unit coefficient scale)
  const double det = b.determinant();
  const double scale = std::pow(phi.inf_norm(), 21);
  if (std::abs(det) <= tol::det_b * scale || det == 0.0)
    return NotPositive{NotPositive::Reason::degenerate, det, {},
                       "det(b_phi) vanishes"};

  // real odd ninth root keeps the sign of det
  const double root = std::copysign(std::pow(std::abs(det), 1.0 / 9.0), det);
  Eigen::MatrixXd g = b / root;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
  if (eig.eigenvalues().minCoeff() <= 0.0)
    return NotPositive{NotPositive::Reason::not_positive_definite, det, eig.eigenvalues(),
                       "det(b)^{-1/9} b is not positive definite"};

  if (root <= 0.0)
    return NotPositive{NotPositive::Reason::negative_orientation, det, eig.eigenvalues(),
                       "induced volume coefficient is negative; flip the sign of phi "
                       "or reorder the basis"};

  return G2Structure(phi, std::move(b), det, Metric(std::move(g)));
}

G2Structure require_positive(const Form& phi) {
  auto r = analyze_positivity(phi);
  if (auto* np = std::get_if<NotPositive>(&r)) throw GeometryError(describe(*np));
  return std::get<G2Structure>(std::move(r));
}

std::string describe(const NotPositive& np) {
  return "not a positive G2-structure: " + np.detail + " (det b = " + fmt_sig(np.det_b, 6) + ")";
}

namespace {

TorsionData torsion_impl(const G2Structure& g2, const LieAlgebra& L) {
  const Form& phi = g2.phi();
  const Metric& g = g2.metric();

  Form dstar = L.ce_differential(hodge_star(phi, g));

  auto basis2 = monomial_basis(7, 2);
  auto basis5 = monomial_basis(7, 5);
  Eigen::MatrixXd A(basis5.size(), basis2.size());
  for (size_t c = 0; c < basis2.size(); ++c) {
    Form col = wedge(Form::monomial(7, basis2[c]), phi);
    for (size_t r = 0; r < basis5.size(); ++r) A(long(r), long(c)) = col.coeff(basis5[r]);
  }
  Eigen::VectorXd rhs(basis5.size());
  for (size_t r = 0; r < basis5.size(); ++r) rhs(long(r)) = dstar.coeff(basis5[r]);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  const int rank = int(qr.rank());
  if (rank < int(basis2.size()))
    throw NumericError("torsion solve: sigma -> sigma ^ phi is rank deficient (rank " +
                       std::to_string(rank) + "); phi is not a positive G2-structure");
  Eigen::VectorXd sol = qr.solve(rhs);
  double solve_residual = (A * sol - rhs).cwiseAbs().maxCoeff();
  if (solve_residual > tol::torsion_solve)
    throw NumericError("torsion solve: d*phi is not in the image of sigma -> sigma ^ phi");

  TorsionData out{Form(7, 2), 0.0, {}, 0.0, Form(7, 3), solve_residual, 0.0, rank};
  // entries below solve precision are least-squares noise, not torsion
  const double floor = 1e-13 * std::max(1.0, sol.cwiseAbs().maxCoeff());
  for (size_t i = 0; i < basis2.size(); ++i) {
    double v = sol(long(i));
    out.tau.set_term(basis2[i], std::abs(v) < floor ? 0.0 : v);
  }

  out.membership_residual = (wedge(out.tau, phi) + hodge_star(out.tau, g)).inf_norm();
  if (out.membership_residual > tol::torsion_membership)
    throw NumericError("torsion does not satisfy tau ^ phi = -*tau");

  out.tau_norm_sq = form_inner(out.tau, out.tau, g);

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(7, 7);
  for (const auto& [I, v] : out.tau.coeffs()) {
    auto idx = I.indices();
    T(idx[0] - 1, idx[1] - 1) = v;
    T(idx[1] - 1, idx[0] - 1) = -v;
  }
  out.tau_endo = -g.inverse() * T;
  out.tr_tau_sq = (out.tau_endo * out.tau_endo).trace();

  out.laplacian_phi = L.ce_differential(out.tau);
  return out;
}

}  // namespace

TorsionData torsion(const G2Structure& g2, const LieAlgebra& L) {
  double dphi = L.ce_differential(g2.phi()).inf_norm();
  if (dphi >= tol::closed)
    throw GeometryError("phi is not closed: ||d phi|| = " + std::to_string(dphi));
  return torsion_impl(g2, L);
}

TorsionData torsion_unchecked(const G2Structure& g2, const LieAlgebra& L) {
  return torsion_impl(g2, L);
}

ErpResult is_erp(const G2Structure& g2, const TorsionData& t) {
  Form residual = t.laplacian_phi - (t.tau_norm_sq / 6.0) * g2.phi() -
                  (1.0 / 6.0) * hodge_star(wedge(t.tau, t.tau), g2.metric());
  return {residual.inf_norm() < tol::erp, std::move(residual)};
}

bool is_torsion_free(const TorsionData& t) { return t.tau_norm_sq < tol::torsion_free; }

}  // namespace g2lab
