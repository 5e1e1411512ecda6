#pragma once
// Closed-form homogeneous norms, their horizontal-gradient magnitudes and the
// fundamental-solution profiles.

#include "hardy/geometry.hpp"

#include <optional>

namespace hardy {

enum class NormKind {
  Grushin,          // ((sum x^2)^{1+g} + (1+g)^2 sum y^2)^{1/(2+2g)}
  Greiner,          // (r^{4g} + t^2)^{1/4g}; g = 1 is the Heisenberg gauge
  HTypeGauge,       // (|x|^4 + 16|t|^2)^{1/4}
  SmoothNS,         // (|x|^4 + |t|^2)^{1/4} on step-2 layers
  FirstLayerEuclid  // |z| over the first m coordinates; vanishes on a subspace
};

struct HomogeneousNorm {
  GeometrySpec geom;
  NormKind kind;
  int m = 0; // block size for FirstLayerEuclid

  static HomogeneousNorm canonical(const GeometrySpec& g); // the norm with closed |grad|
  static HomogeneousNorm first_layer(const GeometrySpec& g, int m);
  static HomogeneousNorm smooth_ns(const GeometrySpec& g);

  double value(const Point& xi) const;
  // Closed form where available, finite-difference fallback otherwise.
  double grad_mag(const Point& xi) const;
  bool has_closed_grad() const;
  // m for FirstLayerEuclid, Q otherwise; drives integrability predicates.
  double effective_dim() const;
  bool full_norm() const { return kind != NormKind::FirstLayerEuclid; }
};

// s^{(p-Qeff)/(p-1)} for p != Qeff, -ln s at the p = Qeff endpoint.
double gamma_profile(double p, double Qeff, double s);

} // namespace hardy
