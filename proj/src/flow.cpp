#include "g2lab/flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "g2lab/errors.hpp"
#include "g2lab/soliton.hpp"
#include "g2lab/curvature.hpp"
#include "g2lab/tolerances.hpp"

namespace g2lab {

std::string to_string(FlowTermination t) {
  switch (t) {
    case FlowTermination::reached_t_end: return "t_end reached";
    case FlowTermination::positivity_lost: return "positivity lost";
    case FlowTermination::step_underflow: return "step underflow";
    case FlowTermination::max_steps_exceeded: return "max steps exceeded";
  }
  return "?";
}

namespace {

constexpr double kMinStep = 1e-14;

// RHS over coefficient vectors; nullopt when positivity (or the torsion
// solve) fails at the evaluation point.
std::optional<Eigen::VectorXd> try_rhs(const Eigen::VectorXd& y, const LieAlgebra& L) {
  Form phi = from_vector(7, 3, y);
  auto pos = analyze_positivity(phi);
  if (std::holds_alternative<NotPositive>(pos)) return std::nullopt;
  const G2Structure& g2 = std::get<G2Structure>(pos);
  try {
    return to_vector(torsion_unchecked(g2, L).laplacian_phi);
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

struct Sampler {
  const LieAlgebra& L;
  const IntegratorConfig& cfg;
  FlowTrace& trace;

  // Returns false when the state is no longer a positive G2-structure.
  bool record(double t, const Eigen::VectorXd& y) {
    FlowSample s;
    s.t = t;
    s.phi = from_vector(7, 3, y);
    auto pos = analyze_positivity(s.phi);
    if (std::holds_alternative<NotPositive>(pos)) return false;
    const G2Structure& g2 = std::get<G2Structure>(pos);
    s.dphi_inf = L.ce_differential(s.phi).inf_norm();
    TorsionData td = torsion_unchecked(g2, L);
    s.tau_norm_sq = td.tau_norm_sq;
    s.volume_coeff = g2.volume_coeff();
    s.det_b = g2.det_b();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g2.metric().matrix());
    s.min_metric_eig = eig.eigenvalues().minCoeff();
    if (cfg.compute_soliton_residual) {
      CurvatureData curv = ricci(L, g2.metric());
      s.soliton_residual = solve_soliton(g2, L, td, curv).residual;
    }
    trace.samples.push_back(std::move(s));
    return true;
  }
};

FlowTrace integrate_rk4(const Eigen::VectorXd& y0, const LieAlgebra& L, double t_end,
                        const IntegratorConfig& cfg) {
  FlowTrace trace;
  Sampler sampler{L, cfg, trace};
  Eigen::VectorXd y = y0;
  double t = 0.0;
  sampler.record(t, y);
  long accepted = 0;
  while (t < t_end) {
    if (trace.steps_taken >= cfg.max_steps) {
      trace.termination = FlowTermination::max_steps_exceeded;
      return trace;
    }
    double h = std::min(cfg.step, t_end - t);
    if (h <= 0.0 || t + h == t) break;  // t_end reached up to rounding
    auto k1 = try_rhs(y, L);
    auto k2 = k1 ? try_rhs(y + 0.5 * h * *k1, L) : std::nullopt;
    auto k3 = k2 ? try_rhs(y + 0.5 * h * *k2, L) : std::nullopt;
    auto k4 = k3 ? try_rhs(y + h * *k3, L) : std::nullopt;
    if (!k4) {
      trace.termination = FlowTermination::positivity_lost;
      return trace;
    }
    y = y + (h / 6.0) * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
    t += h;
    ++trace.steps_taken;
    ++accepted;
    if (t >= t_end || accepted % cfg.sample_stride == 0) {
      if (!sampler.record(std::min(t, t_end), y)) {
        trace.termination = FlowTermination::positivity_lost;
        return trace;
      }
    }
  }
  trace.termination = FlowTermination::reached_t_end;
  return trace;
}

// Dormand-Prince 5(4) pair.
FlowTrace integrate_rk45(const Eigen::VectorXd& y0, const LieAlgebra& L, double t_end,
                         const IntegratorConfig& cfg) {
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                      a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                      e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                      e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

  FlowTrace trace;
  Sampler sampler{L, cfg, trace};
  Eigen::VectorXd y = y0;
  double t = 0.0;
  sampler.record(t, y);

  double h = std::min(t_end / 10.0, 1e-2);
  long accepted = 0;
  bool last_failure_positivity = false;

  while (t < t_end) {
    if (trace.steps_taken >= cfg.max_steps) {
      trace.termination = FlowTermination::max_steps_exceeded;
      return trace;
    }
    if (t_end - t <= kMinStep) break;  // t_end reached up to rounding
    h = std::min(h, t_end - t);
    if (h < kMinStep || t + h == t) {
      trace.termination = last_failure_positivity ? FlowTermination::positivity_lost
                                                  : FlowTermination::step_underflow;
      return trace;
    }
    ++trace.steps_taken;

    auto k1 = try_rhs(y, L);
    auto k2 = k1 ? try_rhs(y + h * (a21 * *k1), L) : std::nullopt;
    auto k3 = k2 ? try_rhs(y + h * (a31 * *k1 + a32 * *k2), L) : std::nullopt;
    auto k4 = k3 ? try_rhs(y + h * (a41 * *k1 + a42 * *k2 + a43 * *k3), L) : std::nullopt;
    auto k5 = k4 ? try_rhs(y + h * (a51 * *k1 + a52 * *k2 + a53 * *k3 + a54 * *k4), L)
                 : std::nullopt;
    auto k6 = k5 ? try_rhs(y + h * (a61 * *k1 + a62 * *k2 + a63 * *k3 + a64 * *k4 + a65 * *k5), L)
                 : std::nullopt;
    std::optional<Eigen::VectorXd> y5;
    std::optional<Eigen::VectorXd> k7;
    if (k6) {
      y5 = y + h * (b1 * *k1 + b3 * *k3 + b4 * *k4 + b5 * *k5 + b6 * *k6);
      k7 = try_rhs(*y5, L);
    }
    if (!k7) {
      // a stage left the positive cone: shrink and retry
      last_failure_positivity = true;
      ++trace.steps_rejected;
      h *= 0.5;
      continue;
    }
    last_failure_positivity = false;

    Eigen::VectorXd err =
        h * (e1 * *k1 + e3 * *k3 + e4 * *k4 + e5 * *k5 + e6 * *k6 + e7 * *k7);
    double norm = 0.0;
    for (long i = 0; i < y.size(); ++i) {
      double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y(i)), std::abs((*y5)(i)));
      double q = err(i) / sc;
      norm += q * q;
    }
    norm = std::sqrt(norm / double(y.size()));

    if (norm <= 1.0) {
      t += h;
      y = *y5;
      ++accepted;
      bool final = t >= t_end - kMinStep;
      if (final || accepted % cfg.sample_stride == 0) {
        if (!sampler.record(t, y)) {
          trace.termination = FlowTermination::positivity_lost;
          return trace;
        }
      }
      if (final) break;
    } else {
      ++trace.steps_rejected;
    }
    double factor = (norm == 0.0) ? 5.0 : 0.9 * std::pow(norm, -0.2);
    h *= std::clamp(factor, 0.2, 5.0);
  }
  trace.termination = FlowTermination::reached_t_end;
  return trace;
}

}  // namespace

Form flow_rhs(const Form& phi, const LieAlgebra& L) {
  G2Structure g2 = require_positive(phi);
  return torsion(g2, L).laplacian_phi;
}

FlowTrace integrate(const Form& phi0, const LieAlgebra& L, double t_end,
                    const IntegratorConfig& cfg) {
  if (phi0.dim() != 7 || phi0.grade() != 3)
    throw InputError("flow: initial data must be a 3-form on R^7");
  if (t_end <= 0.0) throw InputError("flow: t_end must be positive");
  if (cfg.step <= 0.0 || cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0 || cfg.sample_stride < 1)
    throw InputError("flow: step sizes, tolerances and stride must be positive");
  G2Structure g2 = require_positive(phi0);
  double dphi = L.ce_differential(phi0).inf_norm();
  if (dphi >= tol::closed)
    throw GeometryError("flow: initial form is not closed: ||d phi|| = " + std::to_string(dphi));
  (void)g2;

  Eigen::VectorXd y0 = to_vector(phi0);
  if (cfg.method == FlowMethod::rk4_fixed) return integrate_rk4(y0, L, t_end, cfg);
  return integrate_rk45(y0, L, t_end, cfg);
}

void write_trace_csv(std::ostream& os, const FlowTrace& trace) {
  auto basis = monomial_basis(7, 3);
  os << "t";
  for (const auto& m : basis) os << ",e" << m.label();
  os << ",dphi_inf,tau_norm_sq,vol_coeff,det_b,min_metric_eig";
  bool with_soliton = !trace.samples.empty() && trace.samples.front().soliton_residual.has_value();
  if (with_soliton) os << ",soliton_residual";
  os << "\n";
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (const auto& s : trace.samples) {
    put(s.t);
    Eigen::VectorXd v = to_vector(s.phi);
    for (long i = 0; i < v.size(); ++i) {
      os << ",";
      put(v(i));
    }
    os << ",";
    put(s.dphi_inf);
    os << ",";
    put(s.tau_norm_sq);
    os << ",";
    put(s.volume_coeff);
    os << ",";
    put(s.det_b);
    os << ",";
    put(s.min_metric_eig);
    if (with_soliton) {
      os << ",";
      put(s.soliton_residual.value_or(0.0));
    }
    os << "\n";
  }
  os << "# termination: " << to_string(trace.termination) << "\n";
}

}  // namespace g2lab
