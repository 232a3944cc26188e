#include "g2lab/pipeline.hpp"

namespace g2lab {

Analysis analyze(const LieAlgebra& L, const Form& phi) {
  G2Structure g2 = require_positive(phi);
  TorsionData t = torsion(g2, L);
  ErpResult erp = is_erp(g2, t);
  CurvatureData curv = ricci(L, g2.metric());
  SolitonCertificate cert = solve_soliton(g2, L, t, curv);
  return Analysis{std::move(g2), std::move(t), std::move(erp), std::move(curv), std::move(cert)};
}

}  // namespace g2lab
