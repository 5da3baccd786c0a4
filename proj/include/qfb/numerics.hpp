// Small self-contained numerical kernels: scaling-and-squaring matrix
// exponential, an embedded Dormand-Prince 5(4) integrator, and a
// golden-section maximizer. All sized for <= 16x16 problems.
#pragma once

#include <functional>

#include "qfb/common.hpp"

namespace qfb {

/// exp(m) via Pade-13 scaling and squaring (Higham's parameter choices).
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

/// Right-hand side for the adaptive integrator: y' = f(t, y).
using OdeRhs = std::function<Vec16(double, const Vec16&)>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-4;
};

/// Integrates y' = f(t,y) from (t0, y0) to t1 with Dormand-Prince 5(4)
/// adaptive stepping. Throws "step_underflow" (reporting the failure time)
/// if the controller drives the step below machine-resolvable size.
Vec16 ode_integrate(const OdeRhs& f, double t0, const Vec16& y0, double t1,
                    const OdeOptions& opt = {});

/// Maximizes a unimodal-enough scalar function on [lo, hi] by dense grid
/// bracketing followed by golden-section refinement to |dx| < xtol.
/// Deterministic; returns {x_star, f_star}.
struct ScalarMax {
  double x = 0;
  double value = 0;
};
ScalarMax golden_max(const std::function<double(double)>& f, double lo,
                     double hi, double xtol, int grid_points = 64);

}  // namespace qfb
