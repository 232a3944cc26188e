#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2lab/lie_algebra.hpp"

namespace g2lab {

/// Closed-form reference values a catalog entry is expected to reproduce
/// through the full pipeline; the backbone of the self-test and acceptance
/// suites.
struct CatalogExpected {
  Eigen::VectorXd metric_diag;
  double volume_coeff = 0.0;
  Form tau{7, 2};
  double tau_norm_sq = 0.0;
  double lambda = 0.0;
  Eigen::VectorXd D_diag;
  std::optional<Form> laplacian_phi;
};

struct CatalogEntry {
  std::string name;
  std::map<std::string, double> params;
  LieAlgebra algebra;
  Form phi{7, 3};
  std::optional<CatalogExpected> expected;
};

struct CatalogInfo {
  std::string name;
  std::string parameter;  // empty when the entry takes none
  std::string range;
};

/// The built-in families: "h", "k_alpha" (alpha > 0), "g_mu" (-1 < mu <= -1/2)
/// and "abelian". Out-of-range or missing parameters raise InputError citing
/// the valid range.
CatalogEntry catalog(const std::string& name, const std::map<std::string, double>& params = {});

const std::vector<CatalogInfo>& catalog_list();

}  // namespace g2lab
