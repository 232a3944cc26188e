// g2lab command-line frontend.
//
// Exit codes: 0 success, 1 bad input or parse error, 2 the 3-form is not a
// positive or not a closed G2-structure, 3 numeric failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "g2lab/catalog.hpp"
#include "g2lab/errors.hpp"
#include "g2lab/flow.hpp"
#include "g2lab/pipeline.hpp"
#include "g2lab/problem_io.hpp"
#include "g2lab/report.hpp"
#include "g2lab/text.hpp"
#include "g2lab/tolerances.hpp"

namespace {

struct Problem {
  g2lab::LieAlgebra algebra;
  g2lab::Form phi{7, 3};
  std::string source;
};

struct SourceOptions {
  std::string source;
  double mu = 0.0, alpha = 0.0;
  bool have_mu = false, have_alpha = false;
};

Problem load(const SourceOptions& so) {
  if (so.source.rfind("catalog:", 0) == 0) {
    std::string name = so.source.substr(8);
    std::map<std::string, double> params;
    if (so.have_mu) params["mu"] = so.mu;
    if (so.have_alpha) params["alpha"] = so.alpha;
    g2lab::CatalogEntry entry = g2lab::catalog(name, params);
    return {std::move(entry.algebra), std::move(entry.phi), so.source};
  }
  std::ifstream in(so.source);
  if (!in) throw g2lab::InputError("cannot open file '" + so.source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  g2lab::ProblemFile pf = g2lab::parse_problem(buf.str());
  return {g2lab::LieAlgebra::from_structure_equations(std::move(pf.diffs)), std::move(pf.phi),
          so.source};
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw g2lab::InputError("cannot write to '" + output_path + "'");
  out << text;
}

void add_source_options(CLI::App* cmd, SourceOptions& so) {
  cmd->add_option("source", so.source, "catalog:<name> or a problem file path")->required();
  cmd->add_option("--mu", so.mu, "parameter for catalog:g_mu");
  cmd->add_option("--alpha", so.alpha, "parameter for catalog:k_alpha");
}

int dispatch(int argc, char** argv) {
  CLI::App app{"g2lab: G2-structures, torsion, Laplacian solitons and flow on Lie algebras"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "list catalog entries and parameter ranges");

  SourceOptions check_so;
  auto* check_cmd = app.add_subcommand("check", "validate a problem (Jacobi, closedness, positivity)");
  add_source_options(check_cmd, check_so);

  SourceOptions analyze_so;
  int analyze_precision = 12;
  std::string analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline and emit the report");
  add_source_options(analyze_cmd, analyze_so);
  analyze_cmd->add_option("--precision", analyze_precision, "report significant digits")
      ->check(CLI::Range(1, 17));
  analyze_cmd->add_option("--output", analyze_out, "write the report to a file");

  SourceOptions soliton_so;
  int soliton_precision = 12;
  std::string soliton_out;
  auto* soliton_cmd = app.add_subcommand("soliton", "emit only the soliton certificate");
  add_source_options(soliton_cmd, soliton_so);
  soliton_cmd->add_option("--precision", soliton_precision, "report significant digits")
      ->check(CLI::Range(1, 17));
  soliton_cmd->add_option("--output", soliton_out, "write the certificate to a file");

  SourceOptions flow_so;
  double t_end = 0.5;
  std::string method = "rk45";
  g2lab::IntegratorConfig cfg;
  std::string flow_out;
  auto* flow_cmd = app.add_subcommand("flow", "integrate the Laplacian flow and write a trace");
  add_source_options(flow_cmd, flow_so);
  flow_cmd->add_option("--t-end", t_end, "integration end time (default 0.5)");
  flow_cmd->add_option("--method", method, "rk45 (adaptive) or rk4 (fixed step)")
      ->check(CLI::IsMember({"rk45", "rk4"}));
  flow_cmd->add_option("--step", cfg.step, "fixed RK4 step (default 1e-3)");
  flow_cmd->add_option("--rtol", cfg.rel_tol, "adaptive relative tolerance (default 1e-8)");
  flow_cmd->add_option("--atol", cfg.abs_tol, "adaptive absolute tolerance (default 1e-10)");
  flow_cmd->add_option("--max-steps", cfg.max_steps, "step budget (default 1e6)");
  flow_cmd->add_option("--stride", cfg.sample_stride, "record every k-th accepted step");
  flow_cmd->add_flag("--soliton-residual", cfg.compute_soliton_residual,
                     "record the soliton residual along the trace (expensive)");
  flow_cmd->add_option("--output", flow_out, "trace file path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (list_cmd->parsed()) {
    for (const auto& info : g2lab::catalog_list()) {
      std::cout << info.name;
      if (!info.parameter.empty())
        std::cout << "  (" << info.parameter << ": " << info.range << ")";
      std::cout << "\n";
    }
    return 0;
  }

  auto fill = [](SourceOptions& so, CLI::App* cmd) {
    so.have_mu = cmd->count("--mu") > 0;
    so.have_alpha = cmd->count("--alpha") > 0;
  };

  if (check_cmd->parsed()) {
    fill(check_so, check_cmd);
    Problem p = load(check_so);  // Jacobi validated on construction
    double dphi = p.algebra.ce_differential(p.phi).inf_norm();
    if (dphi >= g2lab::tol::closed)
      throw g2lab::GeometryError("phi is not closed: ||d phi|| = " + g2lab::fmt_sig(dphi, 6));
    g2lab::require_positive(p.phi);
    std::cout << "ok: valid Lie algebra, phi closed and positive\n";
    return 0;
  }

  if (analyze_cmd->parsed()) {
    fill(analyze_so, analyze_cmd);
    Problem p = load(analyze_so);
    g2lab::Analysis a = g2lab::analyze(p.algebra, p.phi);
    emit(g2lab::render_report(p.source, p.algebra, a, analyze_precision), analyze_out);
    return 0;
  }

  if (soliton_cmd->parsed()) {
    fill(soliton_so, soliton_cmd);
    Problem p = load(soliton_so);
    g2lab::Analysis a = g2lab::analyze(p.algebra, p.phi);
    emit(g2lab::render_certificate(a, soliton_precision), soliton_out);
    return 0;
  }

  if (flow_cmd->parsed()) {
    fill(flow_so, flow_cmd);
    cfg.method = (method == "rk4") ? g2lab::FlowMethod::rk4_fixed : g2lab::FlowMethod::rk45_adaptive;
    Problem p = load(flow_so);
    g2lab::FlowTrace trace = g2lab::integrate(p.phi, p.algebra, t_end, cfg);
    std::ostringstream os;
    g2lab::write_trace_csv(os, trace);
    emit(os.str(), flow_out);
    std::cerr << "flow: " << trace.samples.size() << " samples, " << trace.steps_taken
              << " steps, termination: " << g2lab::to_string(trace.termination) << "\n";
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const g2lab::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const g2lab::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const g2lab::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
