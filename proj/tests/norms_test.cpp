#include "hardy/calculus.hpp"
#include "hardy/norms.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hardy;

namespace {

Point pt(std::initializer_list<double> v) {
  Point x(static_cast<int>(v.size()));
  int i = 0;
  for (double e : v) x(i++) = e;
  return x;
}

Matrix symplectic2() {
  Matrix U(2, 2);
  U << 0, 1, -1, 0;
  return U;
}

double fd_grad_mag(const GeometrySpec& g, const HomogeneousNorm& nm, const Point& xi) {
  ScalarField u;
  u.eval = [&nm](const Point& q) { return nm.value(q); };
  FDConfig cfg;
  cfg.h_rel = 1e-6;
  return horizontal_gradient(g, u, xi, cfg).norm();
}

} // namespace

TEST_CASE("frozen norm values") {
  const GeometrySpec gr = GeometrySpec::grushin(1, 1, 1.0);
  const HomogeneousNorm ngr = HomogeneousNorm::canonical(gr);
  CHECK(ngr.value(pt({1, 0})) == doctest::Approx(1.0));
  CHECK(ngr.value(pt({0, 1})) == doctest::Approx(std::sqrt(2.0))); // (4)^{1/4}

  const GeometrySpec ht = GeometrySpec::htype({symplectic2()});
  const HomogeneousNorm nht = HomogeneousNorm::canonical(ht);
  CHECK(nht.value(pt({0, 0, 1})) == doctest::Approx(2.0)); // 16^{1/4}

  const GeometrySpec he = GeometrySpec::heisenberg(1);
  const HomogeneousNorm nhe = HomogeneousNorm::canonical(he);
  CHECK(nhe.value(pt({1, 0, 0})) == doctest::Approx(1.0));

  const GeometrySpec gg = GeometrySpec::greiner(1, 2.0);
  const HomogeneousNorm ngg = HomogeneousNorm::canonical(gg);
  CHECK(ngg.value(pt({1, 0, 0})) == doctest::Approx(1.0));
  CHECK(ngg.value(pt({0, 0, 1})) == doctest::Approx(1.0)); // t^2 = 1
}

TEST_CASE("frozen gradient magnitudes") {
  const GeometrySpec gr = GeometrySpec::grushin(1, 1, 1.0);
  const HomogeneousNorm ngr = HomogeneousNorm::canonical(gr);
  CHECK(ngr.grad_mag(pt({1, 0})) == doctest::Approx(1.0));
  CHECK(ngr.grad_mag(pt({0, 1})) == doctest::Approx(0.0)); // degenerate axis

  const GeometrySpec he = GeometrySpec::heisenberg(1);
  const HomogeneousNorm nhe = HomogeneousNorm::canonical(he);
  CHECK(nhe.grad_mag(pt({1, 0, 0})) == doctest::Approx(1.0)); // |x|/N
}

TEST_CASE("dilation homogeneity to 1e-12") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1.5, 1.5), L(-2, 2);
  for (const GeometrySpec& g :
       {GeometrySpec::grushin(1, 1, 1.0), GeometrySpec::grushin(2, 1, 2.0),
        GeometrySpec::greiner(1, 2.0), GeometrySpec::heisenberg(1),
        GeometrySpec::htype({symplectic2()})}) {
    const HomogeneousNorm nm = HomogeneousNorm::canonical(g);
    for (int rep = 0; rep < 20; ++rep) {
      Point xi(g.ambient_dim);
      for (int i = 0; i < xi.size(); ++i) xi(i) = U(rng);
      if (nm.value(xi) < 1e-3) continue;
      const double lam = std::pow(10.0, L(rng));
      const double lhs = nm.value(g.dilate(lam, xi));
      const double rhs = lam * nm.value(xi);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
  }
}

TEST_CASE("closed gradient magnitude matches finite differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (const GeometrySpec& g :
       {GeometrySpec::grushin(1, 1, 1.0), GeometrySpec::grushin(1, 1, 2.0),
        GeometrySpec::greiner(1, 2.0), GeometrySpec::heisenberg(1),
        GeometrySpec::htype({symplectic2()})}) {
    const HomogeneousNorm nm = HomogeneousNorm::canonical(g);
    REQUIRE(nm.has_closed_grad());
    int tested = 0;
    while (tested < 10) {
      Point xi(g.ambient_dim);
      for (int i = 0; i < xi.size(); ++i) xi(i) = U(rng);
      const double N = nm.value(xi);
      const auto [z, tau] = g.first_layer_split(xi);
      if (N < 0.5 || N > 2.0 || z.norm() < 0.1) continue; // away from the degenerate set
      const double closed = nm.grad_mag(xi);
      const double fd = fd_grad_mag(g, nm, xi);
      CHECK(std::abs(closed - fd) <= 1e-6 * std::max(closed, 1e-3));
      ++tested;
    }
  }
}

TEST_CASE("grushin gradient bound |grad N| <= 1") {
  const GeometrySpec g = GeometrySpec::grushin(1, 2, 1.5);
  const HomogeneousNorm nm = HomogeneousNorm::canonical(g);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int rep = 0; rep < 200; ++rep) {
    Point xi(g.ambient_dim);
    for (int i = 0; i < xi.size(); ++i) xi(i) = U(rng);
    if (nm.value(xi) < 1e-6) continue;
    CHECK(nm.grad_mag(xi) <= 1.0 + 1e-12);
  }
}

TEST_CASE("first-layer norm") {
  const GeometrySpec g = GeometrySpec::heisenberg(1);
  const HomogeneousNorm fl = HomogeneousNorm::first_layer(g, 2);
  CHECK(fl.value(pt({3, 4, 17})) == doctest::Approx(5.0));
  CHECK(fl.effective_dim() == doctest::Approx(2.0));
  CHECK_FALSE(fl.full_norm());
  // |grad_L |z|| = 1 exactly wherever z != 0
  CHECK(fl.grad_mag(pt({3, 4, 17})) == doctest::Approx(1.0));
  CHECK(fl.grad_mag(pt({0.01, 0, -5})) == doctest::Approx(1.0));
}

TEST_CASE("norm equivalence on the smooth step-2 sphere") {
  // gauge / N_S stays within positive finite bounds on the unit N_S sphere
  const GeometrySpec g = GeometrySpec::heisenberg(1);
  const HomogeneousNorm gauge = HomogeneousNorm::canonical(g);
  const HomogeneousNorm ns = HomogeneousNorm::smooth_ns(g);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> U(-1, 1);
  double lo = 1e300, hi = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    Point xi(3);
    for (int i = 0; i < 3; ++i) xi(i) = U(rng);
    const double s = ns.value(xi);
    if (s < 1e-6) continue;
    const Point on_sphere = g.dilate(1.0 / s, xi); // N_S = 1 by homogeneity
    const double ratio = gauge.value(on_sphere) / ns.value(on_sphere);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo > 0);
  CHECK(std::isfinite(hi));
  CHECK(hi >= lo);
}

TEST_CASE("gamma profile") {
  CHECK(gamma_profile(2, 4, 2) == doctest::Approx(0.25));  // 2^{(2-4)/(2-1)}
  CHECK(gamma_profile(2, 3, 4) == doctest::Approx(0.25));  // 4^{-1}
  CHECK(gamma_profile(4, 4, 1) == doctest::Approx(0.0));   // -ln 1 at p = Qeff
  CHECK(gamma_profile(4, 4, std::exp(1.0)) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(gamma_profile(2, 3, 0.0), domain_error);
  CHECK_THROWS_AS(gamma_profile(2, 3, -1.0), domain_error);
}
