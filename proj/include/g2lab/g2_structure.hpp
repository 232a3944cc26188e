#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>

#include "g2lab/lie_algebra.hpp"
#include "g2lab/metric.hpp"

namespace g2lab {

/// Why a 3-form failed the positivity analysis, with a numeric witness.
struct NotPositive {
  enum class Reason { wrong_shape, degenerate, not_positive_definite, negative_orientation };
  Reason reason;
  double det_b;
  Eigen::VectorXd eigenvalues;  // of det(b)^{-1/9} b, when computed
  std::string detail;
};

/// A positive 3-form on R^7 with its induced data: the bilinear form b_phi,
/// the metric g_phi = det(b)^{-1/9} b and the volume dV = det(b)^{1/9} e^{1..7}.
/// All caches are computed eagerly at construction.
class G2Structure {
 public:
  const Form& phi() const { return phi_; }
  const Eigen::MatrixXd& b_matrix() const { return b_; }
  double det_b() const { return det_b_; }
  const Metric& metric() const { return metric_; }
  const Form& volume() const { return metric_.volume(); }
  double volume_coeff() const { return metric_.volume_coeff(); }

 private:
  friend std::variant<G2Structure, NotPositive> analyze_positivity(const Form&);
  G2Structure(Form phi, Eigen::MatrixXd b, double det_b, Metric metric)
      : phi_(std::move(phi)), b_(std::move(b)), det_b_(det_b), metric_(std::move(metric)) {}

  Form phi_;
  Eigen::MatrixXd b_;
  double det_b_;
  Metric metric_;
};

/// Decide G2-positivity of a 3-form on R^7: b_phi(e_i,e_j) is the e^{1..7}
/// coefficient of (1/6) iota_i phi ^ iota_j phi ^ phi; the form is accepted
/// when det(b) is nonzero, det(b)^{-1/9} b is positive definite (real odd
/// ninth root) and the induced orientation is positive.
std::variant<G2Structure, NotPositive> analyze_positivity(const Form& phi);

/// Like analyze_positivity but throws GeometryError on rejection.
G2Structure require_positive(const Form& phi);

std::string describe(const NotPositive& np);

/// The intrinsic torsion package of a closed G2-structure.
struct TorsionData {
  Form tau;                    // unique 2-form with d*phi = tau ^ phi
  double tau_norm_sq;          // |tau|^2 in g_phi
  Eigen::MatrixXd tau_endo;    // tau(.,.) = g(tau_endo ., .)
  double tr_tau_sq;            // tr(tau_endo^2) = -2 |tau|^2
  Form laplacian_phi;          // Delta phi = d tau
  double solve_residual;       // sup-norm defect of the linear solve
  double membership_residual;  // ||tau ^ phi + *tau||
  int solve_rank;              // rank of the 21x21 map sigma -> sigma ^ phi
};

/// Solve d*phi = tau ^ phi for tau. Requires d phi = 0 (GeometryError
/// otherwise); a singular or inconsistent solve raises NumericError.
TorsionData torsion(const G2Structure& g2, const LieAlgebra& L);

/// Same, without the closedness gate: used by the flow integrator where
/// closedness is preserved analytically and tracked as a diagnostic.
TorsionData torsion_unchecked(const G2Structure& g2, const LieAlgebra& L);

struct ErpResult {
  bool erp;
  Form residual;  // d tau - (1/6)|tau|^2 phi - (1/6) *(tau ^ tau)
};

ErpResult is_erp(const G2Structure& g2, const TorsionData& t);

bool is_torsion_free(const TorsionData& t);

}  // namespace g2lab
