#include "g2lab/catalog.hpp"

#include <cmath>

#include "g2lab/errors.hpp"
#include "g2lab/text.hpp"

namespace g2lab {

namespace {

Form f2(const std::string& expr) { return parse_form(7, expr, 2); }
Form f3(const std::string& expr) { return parse_form(7, expr, 3); }

Eigen::VectorXd diag7(std::initializer_list<double> v) {
  Eigen::VectorXd out(7);
  int i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 const std::string& range) {
  auto it = params.find(key);
  if (it == params.end())
    throw InputError("catalog entry requires parameter '" + key + "' with " + range);
  return it->second;
}

// The standard positive 3-form; every family's phi is a rescaling of it.
const char* kStdPhi = "e127 + e347 + e567 + e135 - e146 - e236 - e245";

CatalogEntry make_h() {
  LieAlgebra algebra = LieAlgebra::from_structure_equations({
      Form(7, 2),
      Form(7, 2),
      f2("-1*e37"),
      f2("e47"),
      f2("2*e14 + e57"),
      f2("-2*e24 + e67"),
      Form(7, 2),
  });
  CatalogEntry e{"h", {}, std::move(algebra), f3(kStdPhi), {}};
  CatalogExpected x;
  x.metric_diag = diag7({1, 1, 1, 1, 1, 1, 1});
  x.volume_coeff = 1.0;
  x.tau = f2("2*e12 + 2*e34 - 4*e56");
  x.tau_norm_sq = 24.0;
  x.lambda = 0.0;
  x.D_diag = diag7({0, 0, -4, 4, 4, 4, 0});
  x.laplacian_phi = f3("-8*e146 - 8*e245 + 8*e567");
  e.expected = x;
  return e;
}

CatalogEntry make_abelian() {
  CatalogEntry e{"abelian", {}, LieAlgebra::abelian(7), f3(kStdPhi), {}};
  CatalogExpected x;
  x.metric_diag = diag7({1, 1, 1, 1, 1, 1, 1});
  x.volume_coeff = 1.0;
  x.tau = Form(7, 2);
  x.tau_norm_sq = 0.0;
  x.lambda = 0.0;
  x.D_diag = diag7({0, 0, 0, 0, 0, 0, 0});
  x.laplacian_phi = Form(7, 3);
  e.expected = x;
  return e;
}

CatalogEntry make_k(double alpha) {
  if (!(alpha > 0.0)) throw InputError("catalog k_alpha: alpha must satisfy alpha > 0");
  Form de1(7, 2), de4(7, 2), de6(7, 2);
  de1.add_term(IndexSet::of({1, 7}), -alpha);
  de4.add_term(IndexSet::of({4, 7}), alpha / 2.0);
  de4.add_term(IndexSet::of({6, 7}), -1.0);
  de6.add_term(IndexSet::of({4, 7}), 1.0);
  de6.add_term(IndexSet::of({6, 7}), alpha / 2.0);
  LieAlgebra algebra = LieAlgebra::from_structure_equations({
      de1,
      f2("-2*e35"),
      f2("-1*e25 - e57"),
      de4,
      f2("e23 + e37"),
      de6,
      Form(7, 2),
  });
  CatalogEntry e{"k_alpha", {{"alpha", alpha}}, std::move(algebra), f3(kStdPhi), {}};
  Form scale(7, 3);
  for (const char* m : {"127", "347", "567"}) {
    auto idx = IndexSet::of({m[0] - '0', m[1] - '0', m[2] - '0'});
    scale.add_term(idx, alpha / 2.0 - 1.0);
  }
  e.phi += scale;  // phi = (alpha/2)(e127+e347+e567) + e135 - e146 - e236 - e245

  CatalogExpected x;
  x.metric_diag = diag7({1, 1, 1, 1, 1, 1, alpha * alpha / 4.0});
  x.volume_coeff = alpha / 2.0;
  x.tau = f2("4*e12 - 2*e34 - 2*e56");
  x.tau_norm_sq = 24.0;
  x.lambda = 6.0;
  x.D_diag = diag7({2, 0, 0, -4, 0, -4, 0});
  e.expected = x;
  return e;
}

double cbrt_signed(double x) { return std::cbrt(x); }
double pow23(double x) {  // real cube root, then squared
  double r = std::cbrt(x);
  return r * r;
}

CatalogEntry make_g(double mu) {
  if (!(mu > -1.0 && mu <= -0.5))
    throw InputError("catalog g_mu: mu must satisfy -1 < mu <= -1/2");
  Form de2(7, 2), de6(7, 2);
  de2.add_term(IndexSet::of({2, 7}), -2.0 * mu);
  de6.add_term(IndexSet::of({6, 7}), 2.0 * (1.0 + mu));
  LieAlgebra algebra = LieAlgebra::from_structure_equations({
      f2("e45"),
      de2,
      f2("-2*e37"),
      f2("2*e15"),
      f2("e14"),
      de6,
      Form(7, 2),
  });
  Form phi(7, 3);
  phi.add_term(IndexSet::of({1, 2, 7}), -2.0 * mu);
  phi.add_term(IndexSet::of({3, 4, 7}), 1.0);
  phi.add_term(IndexSet::of({5, 6, 7}), 2.0 * (1.0 + mu));
  phi.add_term(IndexSet::of({1, 3, 5}), 1.0);
  phi.add_term(IndexSet::of({1, 4, 6}), -1.0);
  phi.add_term(IndexSet::of({2, 3, 6}), -1.0);
  phi.add_term(IndexSet::of({2, 4, 5}), -1.0);
  CatalogEntry e{"g_mu", {{"mu", mu}}, std::move(algebra), std::move(phi), {}};

  const double u = mu * (1.0 + mu);  // negative on the whole range
  CatalogExpected x;
  const double g11 = cbrt_signed(2.0 * mu * mu / (1.0 + mu));
  const double g33 = cbrt_signed(1.0 / (-4.0 * u));
  const double g55 = cbrt_signed(2.0 * (1.0 + mu) * (1.0 + mu) / (-mu));
  const double g77 = pow23(4.0 * u);
  x.metric_diag = diag7({g11, g11, g33, g33, g55, g55, g77});
  x.volume_coeff = cbrt_signed(-4.0 * u);
  x.tau = Form(7, 2);
  x.tau.add_term(IndexSet::of({1, 2}), -2.0 * pow23(2.0 * mu * mu / (1.0 + mu)));
  x.tau.add_term(IndexSet::of({3, 4}), pow23(2.0 / u));
  x.tau.add_term(IndexSet::of({5, 6}), -2.0 * pow23(2.0 * (1.0 + mu) * (1.0 + mu) / mu));
  x.lambda = 2.0 * (mu * mu + mu + 1.0) * pow23(2.0 / u);
  x.tau_norm_sq = 4.0 * x.lambda;  // trace identity of this family
  x.D_diag = diag7({0.0, -2.0 * cbrt_signed(4.0 * (1.0 + mu) / (mu * mu)),
                    -2.0 * cbrt_signed(4.0 * u), 0.0, 0.0,
                    2.0 * cbrt_signed(4.0 * mu / ((1.0 + mu) * (1.0 + mu))), 0.0});
  e.expected = x;
  return e;
}

}  // namespace

CatalogEntry catalog(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "h") return make_h();
  if (name == "abelian") return make_abelian();
  if (name == "k_alpha") return make_k(get_param(params, "alpha", "alpha > 0"));
  if (name == "g_mu") return make_g(get_param(params, "mu", "-1 < mu <= -1/2"));
  throw InputError("unknown catalog entry '" + name +
                   "'; available: abelian, g_mu, h, k_alpha");
}

const std::vector<CatalogInfo>& catalog_list() {
  static const std::vector<CatalogInfo> list = {
      {"abelian", "", ""},
      {"g_mu", "mu", "-1 < mu <= -1/2"},
      {"h", "", ""},
      {"k_alpha", "alpha", "alpha > 0"},
  };
  return list;
}

}  // namespace g2lab
