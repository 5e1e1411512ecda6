#pragma once
// Finite-difference horizontal differential operators and the closed-form
// differential identities they are checked against.

#include "hardy/geometry.hpp"

#include <functional>

namespace hardy {

struct ScalarField {
  std::function<double(const Point&)> eval;
  // Optional analytic horizontal gradient (l-vector) and its magnitude.
  std::function<Point(const Point&)> hgrad;
  std::function<double(const Point&)> hgrad_mag;
  // Radii (in the field's own radial variable) where it is only piecewise C^1.
  std::vector<double> interfaces;

  double operator()(const Point& xi) const { return eval(xi); }
};

struct FDConfig {
  double h_rel = 1e-5;       // step = h_rel * max(1, |xi|), central differences
  bool richardson = false;   // one extrapolation step for convergence fits
  double degenerate_tol = 1e-8; // |grad| threshold for singular prefactors
};

struct degenerate_point_error : domain_error {
  Point where;
  explicit degenerate_point_error(Point xi)
      : domain_error("horizontal gradient below threshold"), where(std::move(xi)) {}
};

// Euclidean central-difference gradient of u.eval.
Eigen::VectorXd fd_gradient(const ScalarField& u, const Point& xi, const FDConfig& cfg);

// mu(xi) * grad u(xi); uses the analytic horizontal gradient when present.
Point horizontal_gradient(const GeometrySpec& g, const ScalarField& u, const Point& xi,
                          const FDConfig& cfg = {});

// Nested (not symmetrized) X_i X_j stencils; entry (i,j) = X_i X_j u.
Matrix horizontal_hessian(const GeometrySpec& g, const ScalarField& u, const Point& xi,
                          const FDConfig& cfg = {});

// L_p u via (p-2)|grad u|^{p-4} Dinf u + |grad u|^{p-2} L_2 u, with
// L_2 = sum_i X_i X_i and Dinf the symmetrized-Hessian infinity operator.
double lp_operator(const GeometrySpec& g, double p, const ScalarField& u, const Point& xi,
                   const FDConfig& cfg = {});

struct RadialProfile {
  std::function<double(double)> f, df, d2f;
};

// For g with L_p(g^alpha) = 0 and u = v(g):
// L_p u = (p-1) |grad g|^p |v'(g)|^{p-2} [v'' + (1-alpha)/g * v'].
double radial_lp_formula(const GeometrySpec& geom, double p, double alpha,
                         const ScalarField& g, const RadialProfile& v, const Point& xi,
                         const FDConfig& cfg = {});

struct ScanResult {
  double max_residual = 0;
  int grid_points_skipped = 0;
  int grid_points_used = 0;
};

// Max |L_p u| over a rectangular grid filtered by in_region; degenerate-gradient
// points are skipped and counted, never extrapolated.
ScanResult harmonicity_scan(const GeometrySpec& g, double p, const ScalarField& u,
                            const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                            const std::function<bool(const Point&)>& in_region,
                            int grid_per_axis, const FDConfig& cfg = {});

} // namespace hardy
