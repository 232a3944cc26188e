// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion (with per-check detail lines).
// Exit code = number of failed criteria. argv[1] is the CLI binary path,
// needed by criterion 7.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "g2lab/catalog.hpp"
#include "g2lab/flow.hpp"
#include "g2lab/pipeline.hpp"
#include "g2lab/problem_io.hpp"
#include "g2lab/report.hpp"
#include "g2lab/text.hpp"
#include "g2lab/tolerances.hpp"

using namespace g2lab;

namespace {

struct Criterion {
  explicit Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    std::printf("    %s  %s\n", ok ? "[ok]  " : "[FAIL]", what.c_str());
    ok_ = ok_ && ok;
  }

  bool finish() {
    std::printf("%s criterion %d: %s\n", ok_ ? "PASS" : "FAIL", id_, title_.c_str());
    return ok_;
  }

  int id_;
  std::string title_;
  bool ok_ = true;
};

double cbrt(double x) { return std::cbrt(x); }
double p23(double x) {
  double r = std::cbrt(x);
  return r * r;
}

Eigen::MatrixXd diag(std::initializer_list<double> v) {
  Eigen::VectorXd d(long(v.size()));
  int i = 0;
  for (double x : v) d(i++) = x;
  return Eigen::MatrixXd(d.asDiagonal());
}

std::string fnum(double v) { return fmt_sig(v, 6); }

struct Rng {
  uint64_t s;
  double uniform() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return double(s >> 11) * 0x1.0p-53;
  }
  double sym() { return 2.0 * uniform() - 1.0; }
};

Form random_form(Rng& rng, int grade) {
  Form out(7, grade);
  for (const auto& idx : monomial_basis(7, grade)) out.set_term(idx, rng.sym());
  return out;
}

Eigen::MatrixXd random_spd(Rng& rng, int n) {
  Eigen::MatrixXd r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = rng.sym();
  return r * r.transpose() + Eigen::MatrixXd::Identity(n, n);
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  out.push_back(catalog("h"));
  out.push_back(catalog("abelian"));
  for (double a : {0.5, 1.0, 2.0}) out.push_back(catalog("k_alpha", {{"alpha", a}}));
  for (double m : {-0.9, -0.75, -0.5}) out.push_back(catalog("g_mu", {{"mu", m}}));
  return out;
}

std::string entry_label(const CatalogEntry& e) {
  std::string s = e.name;
  for (const auto& [k, v] : e.params) s += " " + k + "=" + fnum(v);
  return s;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  Criterion c(1, "steady example h reproduces the published quantities");
  CatalogEntry e = catalog("h");
  Analysis a = analyze(e.algebra, e.phi);

  Form tau_expect = parse_form(7, "2*e12 + 2*e34 - 4*e56", 2);
  c.check(a.torsion.tau.approx_equal(tau_expect, 1e-9), "tau = 2*e12 + 2*e34 - 4*e56");
  c.check(std::abs(a.torsion.tau_norm_sq - 24.0) < 1e-9, "|tau|^2 = 24");
  Form lap_expect = parse_form(7, "-8*e146 - 8*e245 + 8*e567", 3);
  c.check(a.torsion.laplacian_phi.approx_equal(lap_expect, 1e-9),
          "Delta phi = -8*(e146 + e245 - e567)");
  Form stt = hodge_star(wedge(a.torsion.tau, a.torsion.tau), a.g2.metric());
  c.check(stt.approx_equal(parse_form(7, "-16*e127 - 16*e347 + 8*e567", 3), 1e-9),
          "*(tau^tau) = -16*(e127 + e347) + 8*e567");
  c.check(!a.erp.erp, "ERP = false");
  c.check(std::abs(a.soliton.lambda) < 1e-7, "lambda = 0 (|lambda| < 1e-7)");
  c.check((a.soliton.D - diag({0, 0, -4, 4, 4, 4, 0})).cwiseAbs().maxCoeff() < 1e-7,
          "D = diag(0,0,-4,4,4,4,0) entrywise 1e-7");
  c.check(a.soliton.algebraic, "algebraic flag true");
  Form lie = lie_derivative_left_invariant(-4.0 * Eigen::VectorXd::Unit(7, 6), a.g2, e.algebra);
  c.check(lie.approx_equal(a.torsion.laplacian_phi, 1e-10), "d(iota_{-4 e7} phi) = Delta phi");
  return c.finish();
}

bool criterion2() {
  Criterion c(2, "expanding family k_alpha matches the published data for alpha in {0.5,1,2}");
  for (double alpha : {0.5, 1.0, 2.0}) {
    CatalogEntry e = catalog("k_alpha", {{"alpha", alpha}});
    Analysis a = analyze(e.algebra, e.phi);
    std::string tag = " (alpha=" + fnum(alpha) + ")";

    Eigen::VectorXd gd = Eigen::VectorXd::Ones(7);
    gd(6) = alpha * alpha / 4.0;
    c.check((a.g2.metric().matrix() - Eigen::MatrixXd(gd.asDiagonal())).cwiseAbs().maxCoeff() <
                1e-9,
            "g = diag(1,...,1,alpha^2/4)" + tag);
    c.check(std::abs(a.g2.volume_coeff() - alpha / 2.0) < 1e-9, "dV = alpha/2" + tag);
    c.check(a.torsion.tau.approx_equal(parse_form(7, "4*e12 - 2*e34 - 2*e56", 2), 1e-9),
            "tau = 4*e12 - 2*e34 - 2*e56" + tag);
    c.check(std::abs(a.soliton.lambda - 6.0) < 1e-7, "lambda = 6 +- 1e-7" + tag);
    c.check((a.soliton.D - diag({-2, 0, 0, 4, 0, 4, 0})).cwiseAbs().maxCoeff() < 1e-7,
            "D = diag(-2,0,0,4,0,4,0) +- 1e-7" + tag +
                " [computed D = diag(2,0,0,-4,0,-4,0); the reference value fails the trace "
                "identity |tau|^2 = 7*lambda + 3*tr(D) and the pointwise flow identity]");
    c.check(a.soliton.residual < 1e-8, "residual < 1e-8" + tag);
  }
  return c.finish();
}

bool criterion3() {
  Criterion c(3, "expanding family g_mu matches the published closed forms for mu in {-0.9,-0.75,-0.5}");
  for (double mu : {-0.9, -0.75, -0.5}) {
    CatalogEntry e = catalog("g_mu", {{"mu", mu}});
    Analysis a = analyze(e.algebra, e.phi);
    std::string tag = " (mu=" + fnum(mu) + ")";
    const double u = mu * (1.0 + mu);

    // reference metric as displayed: (2(1+mu)/(-mu))^{1/3} on the e5,e6 slots
    Eigen::VectorXd gd(7);
    const double g11 = cbrt(2.0 * mu * mu / (1.0 + mu));
    const double g33 = cbrt(1.0 / (-4.0 * u));
    const double g55_disp = cbrt(2.0 * (1.0 + mu) / (-mu));
    gd << g11, g11, g33, g33, g55_disp, g55_disp, p23(4.0 * u);
    double gerr = (a.g2.metric().matrix() - Eigen::MatrixXd(gd.asDiagonal()))
                      .cwiseAbs()
                      .maxCoeff() /
                  gd.cwiseAbs().maxCoeff();
    c.check(gerr < 1e-8,
            "g matches the published display (1e-8 rel)" + tag +
                (gerr < 1e-8 ? "" : " [e5/e6 slot: computed " +
                                        fnum(a.g2.metric().matrix()(4, 4)) + " vs displayed " +
                                        fnum(g55_disp) + "; computed matches (2(1+mu)^2/(-mu))^{1/3}]"));
    c.check(std::abs(a.g2.volume_coeff() - cbrt(-4.0 * u)) < 1e-8 * cbrt(-4.0 * u),
            "dV = (-4 mu(1+mu))^{1/3} (1e-8 rel)" + tag);

    // reference torsion as displayed: exponent 1/3 on the e12 coefficient
    Form tau_disp(7, 2);
    tau_disp.add_term(IndexSet::of({1, 2}), -2.0 * cbrt(2.0 * mu * mu / (1.0 + mu)));
    tau_disp.add_term(IndexSet::of({3, 4}), p23(2.0 / u));
    tau_disp.add_term(IndexSet::of({5, 6}), -2.0 * p23(2.0 * (1.0 + mu) * (1.0 + mu) / mu));
    double terr = (a.torsion.tau - tau_disp).inf_norm() / tau_disp.inf_norm();
    c.check(terr < 1e-8,
            "tau matches the published display (1e-8 rel)" + tag +
                (terr < 1e-8 ? "" : " [e12 slot: computed " +
                                        fnum(a.torsion.tau.coeff(IndexSet::of({1, 2}))) +
                                        " vs displayed " +
                                        fnum(tau_disp.coeff(IndexSet::of({1, 2}))) +
                                        "; computed matches -2(2mu^2/(1+mu))^{2/3}]"));

    double lambda_ref = 2.0 * (mu * mu + mu + 1.0) * p23(2.0 / u);
    c.check(std::abs(a.soliton.lambda - lambda_ref) < 1e-7 * (1.0 + lambda_ref),
            "lambda = 2(mu^2+mu+1)(2/(mu(1+mu)))^{2/3}" + tag);
    c.check(a.soliton.lambda > 0.0, "lambda > 0" + tag);

    Eigen::MatrixXd D_ref = diag({0.0, -2.0 * cbrt(4.0 * (1.0 + mu) / (mu * mu)),
                                  -2.0 * cbrt(4.0 * u), 0.0, 0.0,
                                  2.0 * cbrt(4.0 * mu / ((1.0 + mu) * (1.0 + mu))), 0.0});
    c.check((a.soliton.D - D_ref).cwiseAbs().maxCoeff() < 1e-7,
            "D matches the published diagonal +- 1e-7" + tag);
  }
  return c.finish();
}

bool criterion4() {
  Criterion c(4, "least-squares (lambda, D) satisfies the pointwise identity on every entry");
  for (const auto& e : catalog_entries()) {
    Analysis a = analyze(e.algebra, e.phi);
    c.check(a.soliton.pointwise_residual < 1e-6,
            "||Delta phi - lambda phi - theta(D) phi|| < 1e-6 (" + entry_label(e) +
                ", got " + fnum(a.soliton.pointwise_residual) + ")");
  }
  return c.finish();
}

bool criterion5() {
  Criterion c(5, "property suites: d^2, Hodge, scaling, rank, Gram, Ricci agreement, scalar identity");
  auto entries = catalog_entries();

  double worst_jacobi = 0.0;
  for (const auto& e : entries) worst_jacobi = std::max(worst_jacobi, e.algebra.jacobi_residual());
  c.check(worst_jacobi < 1e-12, "d^2 = 0 on all catalog algebras (worst " + fnum(worst_jacobi) + ")");

  Rng rng{71};
  double worst_star = 0.0;
  Metric gid = Metric::identity(7);
  Metric grand{random_spd(rng, 7)};
  for (int p = 0; p <= 7; ++p) {
    Form a = random_form(rng, p);
    worst_star = std::max(worst_star,
                          (hodge_star(hodge_star(a, gid), gid) - a).inf_norm());
    worst_star = std::max(worst_star,
                          (hodge_star(hodge_star(a, grand), grand) - a).inf_norm());
  }
  c.check(worst_star < 1e-10, "** = id on every grade (worst " + fnum(worst_star) + ")");

  double worst_scale = 0.0;
  for (const auto& e : entries) {
    G2Structure base = require_positive(e.phi);
    for (double s : {0.5, 2.0}) {
      G2Structure scaled = require_positive(std::pow(s, 3) * e.phi);
      double rel = (scaled.metric().matrix() - s * s * base.metric().matrix())
                       .cwiseAbs()
                       .maxCoeff() /
                   base.metric().matrix().cwiseAbs().maxCoeff();
      worst_scale = std::max(worst_scale, rel);
    }
  }
  c.check(worst_scale < 1e-9, "metric scaling law g(c^3 phi) = c^2 g(phi) (worst " +
                                  fnum(worst_scale) + ")");

  bool rank_ok = true, gram_ok = true, scalar_ok = true;
  for (const auto& e : entries) {
    G2Structure g2 = require_positive(e.phi);
    TorsionData t = torsion(g2, e.algebra);
    rank_ok = rank_ok && (t.solve_rank == 21);
    gram_ok = gram_ok && std::abs(t.tr_tau_sq + 2.0 * t.tau_norm_sq) < 1e-9;
    CurvatureData curv = ricci(e.algebra, g2.metric());
    scalar_ok = scalar_ok && std::abs(curv.scalar_curv + 0.5 * t.tau_norm_sq) < 1e-8;
  }
  c.check(rank_ok, "torsion-solve matrix has full rank 21 on every entry");
  c.check(gram_ok, "tr(tau_endo^2) = -2 |tau|^2 on every entry");
  c.check(scalar_ok, "scalar curvature = -|tau|^2/2 on every entry (1e-8)");

  double worst_ricci = 0.0;
  for (const auto& e : entries) {
    G2Structure g2 = require_positive(e.phi);
    worst_ricci = std::max(worst_ricci,
                           (ricci_koszul(e.algebra, g2.metric()).ricci_bilinear -
                            ricci_algebraic(e.algebra, g2.metric()).ricci_bilinear)
                               .cwiseAbs()
                               .maxCoeff());
  }
  for (int trial = 0; trial < 20; ++trial) {
    const LieAlgebra& L = entries[size_t(trial) % entries.size()].algebra;
    Metric g{random_spd(rng, 7)};
    worst_ricci = std::max(worst_ricci, (ricci_koszul(L, g).ricci_bilinear -
                                         ricci_algebraic(L, g).ricci_bilinear)
                                            .cwiseAbs()
                                            .maxCoeff());
  }
  c.check(worst_ricci < 1e-9, "Ricci two-method agreement on catalog + 20 random metrics (worst " +
                                  fnum(worst_ricci) + ")");
  return c.finish();
}

bool criterion6() {
  Criterion c(6, "flow: stationarity, steady-orbit conservation, order-4 convergence");

  CatalogEntry ab = catalog("abelian");
  FlowTrace st = integrate(ab.phi, ab.algebra, 1.0, {});
  bool stationary = st.termination == FlowTermination::reached_t_end;
  for (const auto& s : st.samples) {
    Eigen::VectorXd diff = to_vector(s.phi) - to_vector(ab.phi);
    stationary = stationary && diff.cwiseAbs().maxCoeff() == 0.0;
  }
  c.check(stationary, "abelian torsion-free initial data is exactly stationary");

  CatalogEntry h = catalog("h");
  IntegratorConfig cfg;
  cfg.compute_soliton_residual = true;
  FlowTrace tr = integrate(h.phi, h.algebra, 0.5, cfg);
  bool closed_ok = tr.termination == FlowTermination::reached_t_end;
  double worst_dphi = 0.0, worst_tau = 0.0, worst_res = 0.0;
  for (const auto& s : tr.samples) {
    worst_dphi = std::max(worst_dphi, s.dphi_inf);
    worst_tau = std::max(worst_tau, std::abs(s.tau_norm_sq - 24.0));
    worst_res = std::max(worst_res, s.soliton_residual.value_or(1.0));
  }
  c.check(closed_ok && worst_dphi < 1e-10,
          "||d phi(t)|| < 1e-10 along the h orbit (worst " + fnum(worst_dphi) + ")");
  c.check(worst_tau < 1e-6, "|tau(t)|^2 = 24 +- 1e-6 along the h orbit (worst drift " +
                                fnum(worst_tau) + ")");
  c.check(worst_res < 1e-6, "soliton residual < 1e-6 along the h orbit (worst " +
                                fnum(worst_res) + ")");

  auto terminal = [&](double step) {
    IntegratorConfig f;
    f.method = FlowMethod::rk4_fixed;
    f.step = step;
    f.sample_stride = 1 << 20;
    return to_vector(integrate(h.phi, h.algebra, 0.25, f).samples.back().phi);
  };
  Eigen::VectorXd coarse = terminal(0.0125), fine = terminal(0.00625), ref = terminal(0.0015625);
  double ratio = (coarse - ref).cwiseAbs().maxCoeff() / (fine - ref).cwiseAbs().maxCoeff();
  c.check(ratio > 12.0 && ratio < 20.0,
          "fixed-step RK4 halving error ratio in [12, 20] (got " + fnum(ratio) + ")");
  return c.finish();
}

// --- criterion 7: end-to-end CLI ------------------------------------------

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& cli, const std::string& args,
                  const std::filesystem::path& dir) {
  std::filesystem::path errfile = dir / "stderr.txt";
  std::string cmd = cli + " " + args + " 2>" + errfile.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r{-1, "", ""};
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream ef(errfile);
  std::stringstream es;
  es << ef.rdbuf();
  r.err = es.str();
  return r;
}

double parse_report_value(const std::string& report, const std::string& key) {
  size_t at = report.find(key);
  if (at == std::string::npos) return std::nan("");
  size_t eq = report.find('=', at);
  if (eq == std::string::npos) return std::nan("");
  return std::strtod(report.c_str() + eq + 1, nullptr);
}

Eigen::VectorXd parse_report_row(const std::string& report, const std::string& key) {
  Eigen::VectorXd row(7);
  row.setConstant(std::nan(""));
  size_t at = report.find(key);
  if (at == std::string::npos) return row;
  size_t eq = report.find('=', at);
  const char* p = report.c_str() + eq + 1;
  char* end = nullptr;
  for (int i = 0; i < 7; ++i) {
    row(i) = std::strtod(p, &end);
    p = end;
  }
  return row;
}

bool criterion7(const std::string& cli) {
  Criterion c(7, "CLI end-to-end: example commands, exit codes, lossless round trip");
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "g2lab_acceptance";
  fs::create_directories(dir);

  {
    CliResult r = run_cli(cli, "soliton catalog:h", dir);
    bool ok = r.exit_code == 0;
    ok = ok && r.out.find("type              = steady") != std::string::npos;
    ok = ok && std::abs(parse_report_value(r.out, "lambda")) < 1e-7;
    Eigen::VectorXd expect(7);
    expect << 0, 0, -4, 4, 4, 4, 0;
    for (int i = 0; i < 7; ++i) {
      Eigen::VectorXd row = parse_report_row(r.out, "D_row" + std::to_string(i + 1));
      for (int j = 0; j < 7; ++j)
        ok = ok && std::abs(row(j) - (i == j ? expect(i) : 0.0)) < 1e-7;
    }
    c.check(ok, "`soliton catalog:h` exits 0 with a steady certificate, lambda = 0, "
                "D = diag(0,0,-4,4,4,4,0)");
  }
  {
    CliResult r = run_cli(cli, "analyze catalog:k_alpha --alpha 1", dir);
    bool ok = r.exit_code == 0;
    ok = ok && std::abs(parse_report_value(r.out, "lambda") - 6.0) < 1e-7;
    ok = ok && r.out.find("type              = expanding") != std::string::npos;
    c.check(ok, "`analyze catalog:k_alpha --alpha 1` exits 0 with lambda = 6, type expanding");
  }
  {
    fs::path bad = dir / "malformed.g2";
    std::ofstream(bad) << "dim 7\nde 3 = e3^e7\nphi = e123\n";
    CliResult r = run_cli(cli, "check " + bad.string(), dir);
    bool ok = r.exit_code == 1;
    ok = ok && r.err.find("line 2") != std::string::npos;
    ok = ok && r.err.find("col") != std::string::npos;
    c.check(ok, "`check` on the malformed file exits 1 and reports the location (got exit " +
                    std::to_string(r.exit_code) + ")");
  }
  {
    fs::path nonpos = dir / "nonpositive.g2";
    std::ofstream(nonpos) << "dim 7\nphi = e123\n";
    CliResult r = run_cli(cli, "check " + nonpos.string(), dir);
    c.check(r.exit_code == 2, "`check` on a non-positive form exits 2 (got " +
                                  std::to_string(r.exit_code) + ")");
  }
  {
    CliResult r = run_cli(cli, "flow catalog:h --t-end 0.05 --stride 16", dir);
    bool ok = r.exit_code == 0 && r.out.rfind("t,e123,", 0) == 0;
    c.check(ok, "`flow catalog:h` exits 0 and writes a trace with header");
  }
  {
    CatalogEntry h = catalog("h");
    ProblemFile p{7, h.algebra.diffs(), h.phi};
    std::string once = render_problem(p);
    std::string twice = render_problem(parse_problem(once));
    c.check(once == twice, "problem-file round trip is lossless at 12 digits");
  }
  return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  int failures = 0;
  try {
    failures += !criterion1();
    failures += !criterion2();
    failures += !criterion3();
    failures += !criterion4();
    failures += !criterion5();
    failures += !criterion6();
    if (cli.empty()) {
      std::printf("SKIP criterion 7: no CLI path given (pass it as argv[1])\n");
      ++failures;
    } else {
      failures += !criterion7(cli);
    }
  } catch (const std::exception& e) {
    std::printf("FATAL: unhandled exception: %s\n", e.what());
    return 99;
  }
  std::printf("acceptance: %d of 7 criteria failed\n", failures);
  return failures;
}
