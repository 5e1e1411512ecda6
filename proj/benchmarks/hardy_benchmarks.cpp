// Microbenchmarks for the hot paths: coefficient matrices, norms, the L_p
// stencil, 2-D integration and a full Rayleigh quotient.

#include "hardy/inequality.hpp"

#include <benchmark/benchmark.h>

using namespace hardy;

namespace {

Point sample_point(int n) {
  Point xi(n);
  for (int i = 0; i < n; ++i) xi(i) = 0.3 + 0.1 * i;
  return xi;
}

void BM_mu_heisenberg(benchmark::State& state) {
  const GeometrySpec g = GeometrySpec::heisenberg(1);
  const Point xi = sample_point(3);
  for (auto _ : state) benchmark::DoNotOptimize(g.mu(xi));
}
BENCHMARK(BM_mu_heisenberg);

void BM_norm_grushin(benchmark::State& state) {
  const GeometrySpec g = GeometrySpec::grushin(1, 1, 1.0);
  const HomogeneousNorm nm = HomogeneousNorm::canonical(g);
  const Point xi = sample_point(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nm.value(xi));
    benchmark::DoNotOptimize(nm.grad_mag(xi));
  }
}
BENCHMARK(BM_norm_grushin);

void BM_lp_operator(benchmark::State& state) {
  const GeometrySpec g = GeometrySpec::heisenberg(1);
  const HomogeneousNorm nm = HomogeneousNorm::canonical(g);
  ScalarField u;
  u.eval = [nm](const Point& xi) { return nm.value(xi); };
  const Point xi = sample_point(3);
  for (auto _ : state) benchmark::DoNotOptimize(lp_operator(g, 3.0, u, xi));
}
BENCHMARK(BM_lp_operator);

void BM_integrate_2d(benchmark::State& state) {
  const GeometrySpec g = GeometrySpec::grushin(1, 1, 1.0);
  const HomogeneousNorm nm = HomogeneousNorm::canonical(g);
  const Domain dom = Domain::hom_annulus(nm, 0, 1.0);
  QuadratureScheme scheme;
  scheme.shells = 12;
  scheme.order = 6;
  auto f = [&nm](const Point& xi) { return std::pow(nm.value(xi), -1.5); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate(f, dom, scheme));
}
BENCHMARK(BM_integrate_2d);

void BM_rayleigh_grushin(benchmark::State& state) {
  const GeometrySpec g = GeometrySpec::grushin(1, 1, 1.0);
  InstanceParams params;
  params.p = 2;
  params.beta = -2;
  const InequalityInstance inst = make_instance(TheoremId::GRUSHIN, g, params);
  const TrialFunction u = radial_bump(inst, 0.35, 0.85);
  QuadratureScheme scheme;
  scheme.shells = 12;
  scheme.order = 6;
  for (auto _ : state) benchmark::DoNotOptimize(rayleigh_ratio(inst, u, scheme));
}
BENCHMARK(BM_rayleigh_grushin);

} // namespace

BENCHMARK_MAIN();
