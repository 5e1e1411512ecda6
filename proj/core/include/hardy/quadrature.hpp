#pragma once
// Tensor Gauss-Legendre integration over boxes, homogeneous annuli and slabs,
// with geometric grading toward singular sets and deterministic summation.

#include "hardy/calculus.hpp"
#include "hardy/norms.hpp"

#include <optional>

namespace hardy {

struct integration_error : std::runtime_error {
  Point where;
  integration_error(std::string msg, Point xi)
      : std::runtime_error(std::move(msg)), where(std::move(xi)) {}
};

struct Domain {
  enum class Kind { Box, HomAnnulus, Slab, PuncturedBox, Exterior };
  Kind kind = Kind::Box;
  Eigen::VectorXd lo, hi;             // bounding box actually integrated over
  std::optional<HomogeneousNorm> norm; // indicator norm for non-box kinds
  double r0 = 0, r1 = 0;              // annulus bounds / excision radius / (R, R_out)
  std::vector<std::vector<double>> anchors; // per-axis grading anchors; default {0}
  std::optional<double> tail_degree;  // homogeneity degree of the integrand (Exterior)

  static Domain box(Eigen::VectorXd lo, Eigen::VectorXd hi);
  // {r0 < N(xi) < r1}; r0 = 0 gives the punctured ball.
  static Domain hom_annulus(const HomogeneousNorm& n, double r0, double r1);
  // {|first-layer block| < R} x box in the remaining coordinates.
  static Domain slab(const HomogeneousNorm& first_layer, double R,
                     Eigen::VectorXd rest_lo, Eigen::VectorXd rest_hi);
  static Domain punctured_box(Eigen::VectorXd lo, Eigen::VectorXd hi,
                              const HomogeneousNorm& n, double r0);
  // {N(xi) > R}, truncated at R_out for quadrature.
  static Domain exterior(const HomogeneousNorm& n, double R, double R_out);

  bool contains(const Point& xi) const;
  bool needs_indicator() const;
  int dim() const { return static_cast<int>(lo.size()); }
};

// Closed-form coordinate bounds of {N < r}.
Eigen::VectorXd norm_ball_bound(const HomogeneousNorm& n, double r);

struct QuadratureScheme {
  int shells = 40;            // geometric segments toward each grading anchor
  double grading_ratio = 2.0; // > 1
  int order = 8;              // Gauss-Legendre points per cell per axis
  double target_rel_err = 1e-8;
  std::vector<double> interface_alignment; // radii where integrands are piecewise-C^1
};

struct IntegralResult {
  double value = 0;
  double err_bound = 0;       // difference against a lower-order pass
  double truncation_bound = 0; // homogeneity tail estimate (unbounded domains)
};

IntegralResult integrate(const std::function<double(const Point&)>& f, const Domain& dom,
                         const QuadratureScheme& scheme);

enum class At { Origin, Infinity };
// delta_lambda-homogeneous weight of degree s: integrable at the origin iff
// s > -Qeff, at infinity iff s < -Qeff.
bool integrability_predicate(double weight_degree, double Qeff, At at);

// Tail of a homogeneous integrand beyond r_outer, estimated from its integral
// over [r_inner, r_outer]; degree_plus_Q = s + Q < 0.
double homogeneous_tail_bound(double shell_value, double r_inner, double r_outer,
                              double degree_plus_Q);

enum class FunctionalKind { UPowerWeight, GradPowerWeight };

// integral of |u|^p w  or  |grad_L u|^p w over dom.
IntegralResult functional_value(FunctionalKind kind, double p,
                                const std::function<double(const Point&)>& w,
                                const ScalarField& u, const GeometrySpec& g, const Domain& dom,
                                const QuadratureScheme& scheme);

// Deterministic fixed-order pairwise sum.
double pairwise_sum(const std::vector<double>& v);

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

} // namespace hardy
