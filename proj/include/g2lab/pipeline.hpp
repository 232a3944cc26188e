#pragma once

#include "g2lab/curvature.hpp"
#include "g2lab/g2_structure.hpp"
#include "g2lab/soliton.hpp"

namespace g2lab {

/// Everything the full pipeline produces for one (algebra, phi) problem.
struct Analysis {
  G2Structure g2;
  TorsionData torsion;
  ErpResult erp;
  CurvatureData curvature;
  SolitonCertificate soliton;
};

/// positivity -> torsion -> ERP -> curvature (cross-checked) -> soliton solve.
/// Throws GeometryError when phi is not positive or not closed.
Analysis analyze(const LieAlgebra& L, const Form& phi);

}  // namespace g2lab
