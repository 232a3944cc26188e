#include "g2lab/report.hpp"

#include <sstream>

#include "g2lab/text.hpp"

namespace g2lab {

namespace {

void put(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << key;
  for (size_t i = key.size(); i < 18; ++i) os << ' ';
  os << "= " << value << "\n";
}

void put(std::ostringstream& os, const std::string& key, double v, int digits) {
  put(os, key, fmt_sig(v, digits));
}

void put(std::ostringstream& os, const std::string& key, bool v) {
  put(os, key, std::string(v ? "true" : "false"));
}

std::string row(const Eigen::MatrixXd& m, int r, int digits) {
  std::string out;
  for (int c = 0; c < m.cols(); ++c) {
    if (c) out += ' ';
    out += fmt_sig(m(r, c), digits);
  }
  return out;
}

std::string vec(const Eigen::VectorXd& v, int digits) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += fmt_sig(v(i), digits);
  }
  return out;
}

void put_matrix(std::ostringstream& os, const std::string& key, const Eigen::MatrixXd& m,
                int digits) {
  for (int r = 0; r < m.rows(); ++r)
    put(os, key + "_row" + std::to_string(r + 1), row(m, r, digits));
}

void soliton_sections(std::ostringstream& os, const Analysis& a, int digits) {
  os << "[soliton]\n";
  put(os, "lambda", a.soliton.lambda, digits);
  put_matrix(os, "D", a.soliton.D, digits);
  put(os, "residual", a.soliton.residual, digits);
  put(os, "pointwise_residual", a.soliton.pointwise_residual, digits);
  put(os, "is_soliton", a.soliton.is_soliton);
  put(os, "algebraic", a.soliton.algebraic);
  os << "\n[classification]\n";
  put(os, "type", to_string(a.soliton.type));
}

}  // namespace

std::string render_report(const std::string& source, const LieAlgebra& L, const Analysis& a,
                          int digits) {
  std::ostringstream os;
  os << "# g2lab analysis\n";
  put(os, "source", source);
  os << "\n[algebra]\n";
  put(os, "dim", double(L.dim()), digits);
  for (int k = 1; k <= L.dim(); ++k)
    put(os, "de" + std::to_string(k), render_form(L.diff(k), digits));
  put(os, "jacobi_residual", L.jacobi_residual(), digits);
  put(os, "unimodular", L.is_unimodular());
  put(os, "solvable", L.is_solvable());
  put(os, "der_dim", double(L.derivation_space().dim()), digits);

  os << "\n[positivity]\n";
  put(os, "phi", render_form(a.g2.phi(), digits));
  put(os, "positive", true);
  put(os, "det_b", a.g2.det_b(), digits);
  put(os, "volume_coeff", a.g2.volume_coeff(), digits);

  os << "\n[metric]\n";
  put_matrix(os, "g", a.g2.metric().matrix(), digits);

  os << "\n[torsion]\n";
  put(os, "tau", render_form(a.torsion.tau, digits));
  put(os, "tau_norm_sq", a.torsion.tau_norm_sq, digits);
  put(os, "tr_tau_sq", a.torsion.tr_tau_sq, digits);
  put(os, "laplacian_phi", render_form(a.torsion.laplacian_phi, digits));
  put(os, "solve_residual", a.torsion.solve_residual, digits);
  put(os, "membership_residual", a.torsion.membership_residual, digits);
  put(os, "torsion_free", is_torsion_free(a.torsion));

  os << "\n[erp]\n";
  put(os, "erp", a.erp.erp);
  put(os, "residual_inf", a.erp.residual.inf_norm(), digits);

  os << "\n[curvature]\n";
  put_matrix(os, "ric", a.curvature.ricci_bilinear, digits);
  put(os, "scalar", a.curvature.scalar_curv, digits);
  put(os, "mean_curvature", vec(a.curvature.mean_curvature, digits));

  os << "\n";
  soliton_sections(os, a, digits);
  return os.str();
}

std::string render_certificate(const Analysis& a, int digits) {
  std::ostringstream os;
  soliton_sections(os, a, digits);
  return os.str();
}

}  // namespace g2lab
