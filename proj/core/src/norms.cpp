#include "hardy/norms.hpp"

#include <cmath>

namespace hardy {

HomogeneousNorm HomogeneousNorm::canonical(const GeometrySpec& g) {
  switch (g.kind) {
  case GeomKind::EuclideanPartial:
    return first_layer(g, g.first_layer);
  case GeomKind::Grushin:
    return {g, NormKind::Grushin};
  case GeomKind::Greiner:
  case GeomKind::Heisenberg:
    return {g, NormKind::Greiner};
  case GeomKind::HType:
    return {g, NormKind::HTypeGauge};
  case GeomKind::Step2:
    return smooth_ns(g);
  }
  throw input_error("unknown geometry");
}

HomogeneousNorm HomogeneousNorm::first_layer(const GeometrySpec& g, int m) {
  if (m < 1 || m > g.first_layer)
    throw input_error("first-layer norm block must satisfy 1 <= m <= first layer size");
  return {g, NormKind::FirstLayerEuclid, m};
}

HomogeneousNorm HomogeneousNorm::smooth_ns(const GeometrySpec& g) {
  if (g.kind != GeomKind::Step2 && g.kind != GeomKind::HType &&
      g.kind != GeomKind::Heisenberg && g.kind != GeomKind::Greiner)
    throw input_error("smooth layered norm needs a two-layer geometry");
  return {g, NormKind::SmoothNS};
}

double HomogeneousNorm::value(const Point& xi) const {
  const GeometrySpec& g = geom;
  switch (kind) {
  case NormKind::Grushin: {
    const double x2 = xi.head(g.n).squaredNorm();
    const double y2 = xi.tail(g.k).squaredNorm();
    const double og = 1.0 + g.gamma;
    return std::pow(std::pow(x2, og) + og * og * y2, 1.0 / (2.0 * og));
  }
  case NormKind::Greiner: {
    const double r2 = xi.head(2 * g.n).squaredNorm();
    const double t = xi(2 * g.n);
    return std::pow(std::pow(r2, 2.0 * g.gamma) + t * t, 1.0 / (4.0 * g.gamma));
  }
  case NormKind::HTypeGauge: {
    const double x2 = xi.head(g.horizontal_dim).squaredNorm();
    const double t2 = xi.tail(g.k).squaredNorm();
    return std::pow(x2 * x2 + 16.0 * t2, 0.25);
  }
  case NormKind::SmoothNS: {
    const double x2 = xi.head(g.first_layer).squaredNorm();
    const double t2 = xi.tail(g.ambient_dim - g.first_layer).squaredNorm();
    return std::pow(x2 * x2 + t2, 0.25);
  }
  case NormKind::FirstLayerEuclid:
    return xi.head(m).norm();
  }
  throw input_error("unknown norm");
}

bool HomogeneousNorm::has_closed_grad() const { return kind != NormKind::SmoothNS; }

double HomogeneousNorm::effective_dim() const {
  return kind == NormKind::FirstLayerEuclid ? static_cast<double>(m) : geom.Q;
}

double HomogeneousNorm::grad_mag(const Point& xi) const {
  const GeometrySpec& g = geom;
  switch (kind) {
  case NormKind::Grushin: {
    const double nv = value(xi);
    if (nv == 0) throw domain_error("norm gradient undefined at the origin");
    const double ax = xi.head(g.n).norm();
    return std::pow(ax / nv, g.gamma);
  }
  case NormKind::Greiner: {
    const double nv = value(xi);
    if (nv == 0) throw domain_error("norm gradient undefined at the origin");
    const double r = xi.head(2 * g.n).norm();
    return std::pow(r / nv, 2.0 * g.gamma - 1.0);
  }
  case NormKind::HTypeGauge: {
    const double nv = value(xi);
    if (nv == 0) throw domain_error("norm gradient undefined at the origin");
    return xi.head(g.horizontal_dim).norm() / nv;
  }
  case NormKind::FirstLayerEuclid: {
    if (xi.head(m).norm() == 0)
      throw domain_error("first-layer norm gradient undefined where the block vanishes");
    return 1.0;
  }
  case NormKind::SmoothNS: {
    // central-difference fallback: |mu(xi) * grad N(xi)|
    const double nv = value(xi);
    if (nv == 0) throw domain_error("norm gradient undefined at the origin");
    const int N = g.ambient_dim;
    const double h = 1e-6 * std::max(1.0, xi.norm());
    Eigen::VectorXd grad(N);
    for (int j = 0; j < N; ++j) {
      Point a = xi, b = xi;
      a(j) += h;
      b(j) -= h;
      grad(j) = (value(a) - value(b)) / (2.0 * h);
    }
    return (g.mu(xi) * grad).norm();
  }
  }
  throw input_error("unknown norm");
}

double gamma_profile(double p, double Qeff, double s) {
  if (!(p > 1)) throw domain_error("profile requires p > 1");
  if (!(s > 0)) throw domain_error("profile requires a positive argument");
  if (p == Qeff) return -std::log(s);
  return std::pow(s, (p - Qeff) / (p - 1.0));
}

} // namespace hardy
