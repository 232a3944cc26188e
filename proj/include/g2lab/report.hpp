#pragma once

#include <string>

#include "g2lab/pipeline.hpp"

namespace g2lab {

/// Deterministic plain-text report: fixed section order (algebra, positivity,
/// metric, torsion, erp, curvature, soliton, classification), fixed key order,
/// fixed significant digits. Byte-identical for identical inputs.
std::string render_report(const std::string& source, const LieAlgebra& L, const Analysis& a,
                          int digits = 12);

/// Just the [soliton] and [classification] sections.
std::string render_certificate(const Analysis& a, int digits = 12);

}  // namespace g2lab
