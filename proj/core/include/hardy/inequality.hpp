#pragma once
// Catalog of Hardy/Poincare-type inequality instances: constants, weight
// functionals, admissibility predicates, near-extremizer construction and the
// sharpness machinery.

#include "hardy/quadrature.hpp"

#include <optional>

namespace hardy {

enum class TheoremId {
  GENERAL_H,   // |u|^p A_h  vs  p^p |h|^p A_h^{1-p} |grad u|^p, constant 1
  MAIN,        // d^beta |grad d|^p  vs  d^{beta+p}, c = |(a-1)(p-1)-b-1|/p
  MAIN_PART,   // d^{-p} |grad d|^p  vs  1, c^p = (|a|(p-1)/p)^p
  SPEC,        // |eta|^beta  vs  |eta|^{beta+p}, c = |m+beta|/p
  SPEC_LOG,    // |eta|^{-p} ln^beta(R/|eta|)  vs  ln^{p+beta}(R/|eta|)
  POINCARE,    // 1 vs 1 on a slab of half-width M, c^p = (pM)^{-p}
  COS_STRIP,   // 1/cos^2 x on the strip, constant 1/4 (p = 2)
  GRUSHIN,     // N^beta |grad N|^p  vs  N^{beta+p}, c = |Q+beta|/p
  GRUSHIN_LOG, // N^{-p} ln^beta(R/N) |grad N|^p  vs  ln^{p+beta}(R/N)
  GRUSHIN_Z,   // |z|^beta  vs  |z|^{beta+p}, c = |m+beta|/p
  GREINER,     // gauge-weighted, c = |Q+beta|/p
  GREINER_Z,   // r = |(x,y)| weights, c = |2n+beta|/p
  CARNOT,      // H-type gauge weights, c = |Q+beta|/p
  CARNOT_Z,    // first-layer weights, c = |m+beta|/p
  BOUNDARY,    // (R-N)^{-p} |grad N|^p  vs  1, c^p = ((p-1)/p)^p
  EXTERIOR,    // (N-R)^{-p} |grad N|^p  vs  1, c^p = (|p-Q|/p)^p, p > Q
  DAVIES_HINZ, // |LV|  vs  p^p |grad V|^p |LV|^{1-p}, constant 1
  DH_PLUS      // |L_pV|  vs  p^p |grad V|^{p(p-1)} |L_pV|^{1-p}, constant 1
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& s);

struct InstanceParams {
  double p = 2;
  double alpha = 1; // MAIN / MAIN_PART
  double beta = 0;
  int m = 0;        // first-layer block size for SPEC / *_Z (default: full block)
  double R = 0;     // ball radius (logs, BOUNDARY, EXTERIOR)
  double M = 0;     // POINCARE slab half-width
  int direction = 0; // POINCARE bounded first-layer coordinate

  // MAIN / MAIN_PART: the distance-like field d (eval + hgrad_mag required)
  // together with the effective dimension governing its integrability.
  ScalarField d;
  double Qeff = 0;

  // GENERAL_H: A_h and |h|; DAVIES_HINZ / DH_PLUS: leave empty to get the
  // classical Euclidean choice V built from |xi|.
  std::function<double(const Point&)> Ah, hmag;

  std::optional<Domain> domain; // computational-domain override
  // mark the supplied domain as a computational truncation of an unbounded one
  bool domain_unbounded = false;
};

struct InequalityInstance {
  TheoremId id;
  GeometrySpec geom;
  double p = 2, alpha = 1, beta = 0, R = 0, M = 0;
  int m = 0;
  double c = 0;        // the unpowered constant
  double constant = 0; // c^p, as it multiplies the u-side
  std::optional<double> equiv_classical; // classical c^p reproduced by presets

  std::function<double(const Point&)> num_weight; // multiplies |grad_L u|^p
  std::function<double(const Point&)> den_weight; // multiplies |u|^p
  Domain dom;
  bool unbounded_domain = false; // dom is a computational truncation of R^N

  // distance-like field driving radial trials; empty for POINCARE/GENERAL_H
  ScalarField d;
  double Qeff = 0;                        // integrability dimension for d
  double den_offset = 0, num_offset = 0;  // d-power carried by the weights
  std::vector<std::pair<std::string, bool>> admissibility;

  bool radial_machinery() const { return static_cast<bool>(d.eval); }
  // Quadrature domain covering a radial trial supported in {d < s}.
  Domain domain_for(double support_outer) const;
};

struct TrialFunction {
  ScalarField field;
  // radial data when the trial is profile(d): F and F'
  std::function<double(double)> profile, dprofile;
  std::vector<double> interfaces; // kink radii in the d variable
  double support_outer = std::numeric_limits<double>::infinity();
  bool radial() const { return static_cast<bool>(profile); }
};

struct RatioResult {
  double ratio = 0, num = 0, den = 0, num_err = 0, den_err = 0;
};

struct SweepRow {
  double epsilon, ratio, gap, num_err, den_err;
};
struct SweepResult {
  std::vector<SweepRow> rows;
  bool converse_ok = true; // c(eps)^p * den > num on the closed-form branches
};

struct DecompositionResult {
  double I = 0, I1 = 0, I2 = 0, lower_bound = 0, err = 0;
};

// ScalarField wrapper (value + closed gradient magnitude) around a norm.
ScalarField distance_field(const HomogeneousNorm& nm);

InequalityInstance make_instance(TheoremId id, const GeometrySpec& geom,
                                 const InstanceParams& params);

RatioResult rayleigh_ratio(const InequalityInstance& inst, const TrialFunction& u,
                           const QuadratureScheme& scheme);
RatioResult rayleigh_ratio(const InequalityInstance& inst, const TrialFunction& u,
                           const Domain& dom, const QuadratureScheme& scheme);

// Profile d^{c(eps)} inside the unit d-ball, d^{-c(eps/2)} outside, smoothly
// truncated over [r_out, 2 r_out]; delta_s > 0 rounds the kink at d = 1.
TrialFunction near_extremizer(const InequalityInstance& inst, double eps, double delta_s,
                              double r_out);

SweepResult sharpness_sweep(const InequalityInstance& inst, const std::vector<double>& eps_list,
                            const QuadratureScheme& scheme, double r_out);

// (x - eta)^s >= x^s - s eta x^{s-1} for x > 0, x > eta, s >= 1.
bool ggm_check(double x, double eta, double s);

// Splits the deficit I(u) of a MAIN_PART instance into the two nonnegative
// functionals of v = d^{-alpha(p-1)/p} u and checks the square-gradient floor.
DecompositionResult achieve_decomposition(const InequalityInstance& inst,
                                          const TrialFunction& u,
                                          const QuadratureScheme& scheme);

// Smooth radial bump exp(-1/((d-a)(b-d))) supported on {a < d < b}.
TrialFunction radial_bump(const InequalityInstance& inst, double a, double b);
TrialFunction radial_profile_trial(const InequalityInstance& inst,
                                   std::function<double(double)> F,
                                   std::function<double(double)> dF,
                                   std::vector<double> interfaces, double support_outer);
TrialFunction trial_from_field(ScalarField f, std::vector<double> interfaces,
                               double support_outer);

// c(eps) = c + eps/p
inline double shifted_exponent(const InequalityInstance& inst, double eps) {
  return inst.c + eps / inst.p;
}

} // namespace hardy
