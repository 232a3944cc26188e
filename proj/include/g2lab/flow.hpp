#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "g2lab/g2_structure.hpp"
#include "g2lab/lie_algebra.hpp"

namespace g2lab {

enum class FlowMethod { rk4_fixed, rk45_adaptive };

struct IntegratorConfig {
  FlowMethod method = FlowMethod::rk45_adaptive;
  double step = 1e-3;        // fixed RK4 step
  double rel_tol = 1e-8;     // adaptive
  double abs_tol = 1e-10;    // adaptive
  long max_steps = 1000000;
  int sample_stride = 1;     // record every k-th accepted step
  bool compute_soliton_residual = false;
};

enum class FlowTermination { reached_t_end, positivity_lost, step_underflow, max_steps_exceeded };

std::string to_string(FlowTermination t);

struct FlowSample {
  double t = 0.0;
  Form phi{7, 3};
  double dphi_inf = 0.0;       // closedness drift
  double tau_norm_sq = 0.0;
  double volume_coeff = 0.0;
  double det_b = 0.0;
  double min_metric_eig = 0.0;
  std::optional<double> soliton_residual;  // present when requested
};

struct FlowTrace {
  std::vector<FlowSample> samples;
  FlowTermination termination = FlowTermination::reached_t_end;
  long steps_taken = 0;
  long steps_rejected = 0;
};

/// Right-hand side of the Laplacian flow: Delta phi = d tau, through the full
/// positivity/torsion pipeline. Throws GeometryError when phi is not positive.
Form flow_rhs(const Form& phi, const LieAlgebra& L);

/// Integrate d phi/dt = Delta phi over the 35 coefficients of phi from t = 0
/// to t_end. Closedness is never re-imposed (its drift is a diagnostic).
/// Initial data must be closed and positive (GeometryError otherwise).
FlowTrace integrate(const Form& phi0, const LieAlgebra& L, double t_end,
                    const IntegratorConfig& cfg = {});

/// Delimited trace export: header row, then one row per sample with t, the 35
/// coefficients in canonical monomial order, and the diagnostics columns.
void write_trace_csv(std::ostream& os, const FlowTrace& trace);

}  // namespace g2lab
