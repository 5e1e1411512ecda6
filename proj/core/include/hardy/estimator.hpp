#pragma once
// Derivative-free minimization of Rayleigh quotients over parameterized trial
// families: upper bounds converging toward the sharp constants.

#include "hardy/inequality.hpp"

#include <cstdint>

namespace hardy {

struct TrialFamily {
  std::string name;
  Eigen::VectorXd lo, hi;   // per-parameter bounds (optimizer scale)
  Eigen::VectorXd init;
  std::function<TrialFunction(const Eigen::VectorXd&)> make;

  int dim() const { return static_cast<int>(init.size()); }

  // (ln eps, ln r_out) near-extremizer family
  static TrialFamily extremizer(const InequalityInstance& inst, double eps0 = 0.1,
                                double r_out0 = 100.0);
  // piecewise-linear radial profile with log-spaced knots on [s_lo, s_hi];
  // parameters are the knot values, zero anchors are added at both ends
  static TrialFamily radial_spline(const InequalityInstance& inst, int knots = 8,
                                   double s_lo = 1e-6, double s_hi = 1e6);
  // (ln center, ln half-width) radial bump family
  static TrialFamily bump(const InequalityInstance& inst, double center0, double width0);
  // zero-parameter family returning one fixed trial
  static TrialFamily fixed(TrialFunction u);

  // closed-form knot positions used by radial_spline (including zero anchors)
  static std::vector<double> spline_knots(int knots, double s_lo, double s_hi);
};

struct OptimizerConfig {
  int max_evals = 240;
  double init_scale = 0.5; // simplex edge, as a fraction of the bound box
  double tol = 1e-7;       // convergence tolerance on the ratio spread
  int restarts = 3;
  std::uint64_t seed = 42;
};

struct EvalRecord {
  Eigen::VectorXd params;
  double ratio; // +inf when the parameter point was inadmissible
};

struct MinimizeResult {
  double best_ratio = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_params;
  RatioResult best_detail;
  std::vector<EvalRecord> trace;
};

MinimizeResult minimize_ratio(const InequalityInstance& inst, const TrialFamily& family,
                              const OptimizerConfig& opt, const QuadratureScheme& scheme);

} // namespace hardy
