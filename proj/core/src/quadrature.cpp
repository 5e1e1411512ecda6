#include "hardy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hardy {

double pairwise_sum(const std::vector<double>& v) {
  // fixed-order pairwise reduction: result independent of evaluation scheduling
  std::function<double(size_t, size_t)> rec = [&](size_t a, size_t b) -> double {
    if (b - a == 0) return 0.0;
    if (b - a == 1) return v[a];
    const size_t mid = a + (b - a) / 2;
    return rec(a, mid) + rec(mid, b);
  };
  return rec(0, v.size());
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  const int n = order;
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n and P'_n
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      const double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[i] = xi;
    w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
  return cache.emplace(order, std::make_pair(std::move(x), std::move(w))).first->second;
}

Eigen::VectorXd norm_ball_bound(const HomogeneousNorm& nm, double r) {
  const GeometrySpec& g = nm.geom;
  Eigen::VectorXd b(g.ambient_dim);
  switch (nm.kind) {
  case NormKind::Grushin:
    b.head(g.n).setConstant(r);
    b.tail(g.k).setConstant(std::pow(r, 1.0 + g.gamma) / (1.0 + g.gamma));
    break;
  case NormKind::Greiner:
    b.head(2 * g.n).setConstant(r);
    b(2 * g.n) = std::pow(r, 2.0 * g.gamma);
    break;
  case NormKind::HTypeGauge:
    b.head(g.horizontal_dim).setConstant(r);
    b.tail(g.k).setConstant(r * r / 4.0);
    break;
  case NormKind::SmoothNS:
    b.head(g.first_layer).setConstant(r);
    b.tail(g.ambient_dim - g.first_layer).setConstant(r * r);
    break;
  case NormKind::FirstLayerEuclid:
    if (nm.m == g.ambient_dim) {
      b.setConstant(r);
      break;
    }
    throw input_error("first-layer norm does not bound a box; use a slab domain");
  }
  return b;
}

Domain Domain::box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
  Domain d;
  d.kind = Kind::Box;
  d.lo = std::move(lo);
  d.hi = std::move(hi);
  for (int j = 0; j < d.dim(); ++j)
    if (!(d.lo(j) < d.hi(j))) throw input_error("box requires lo < hi per coordinate");
  return d;
}

Domain Domain::hom_annulus(const HomogeneousNorm& n, double r0, double r1) {
  if (!(r0 >= 0 && r0 < r1)) throw input_error("annulus requires 0 <= r0 < r1");
  Domain d;
  d.kind = Kind::HomAnnulus;
  d.norm = n;
  d.r0 = r0;
  d.r1 = r1;
  d.hi = norm_ball_bound(n, r1);
  d.lo = -d.hi;
  return d;
}

Domain Domain::slab(const HomogeneousNorm& first_layer, double R, Eigen::VectorXd rest_lo,
                    Eigen::VectorXd rest_hi) {
  if (first_layer.kind != NormKind::FirstLayerEuclid)
    throw input_error("slab requires a first-layer norm");
  if (!(R > 0)) throw input_error("slab requires R > 0");
  Domain d;
  d.kind = Kind::Slab;
  d.norm = first_layer;
  d.r1 = R;
  const int m = first_layer.m;
  const int N = first_layer.geom.ambient_dim;
  if (rest_lo.size() != N - m || rest_hi.size() != N - m)
    throw input_error("slab rest-box has wrong dimension");
  d.lo = Eigen::VectorXd(N);
  d.hi = Eigen::VectorXd(N);
  d.lo.head(m).setConstant(-R);
  d.hi.head(m).setConstant(R);
  d.lo.tail(N - m) = rest_lo;
  d.hi.tail(N - m) = rest_hi;
  return d;
}

Domain Domain::punctured_box(Eigen::VectorXd lo, Eigen::VectorXd hi, const HomogeneousNorm& n,
                             double r0) {
  Domain d = box(std::move(lo), std::move(hi));
  if (!(r0 > 0)) throw input_error("excision radius must be positive");
  d.kind = Kind::PuncturedBox;
  d.norm = n;
  d.r0 = r0;
  return d;
}

Domain Domain::exterior(const HomogeneousNorm& n, double R, double R_out) {
  if (!(0 < R && R < R_out)) throw input_error("exterior requires 0 < R < R_out");
  Domain d;
  d.kind = Kind::Exterior;
  d.norm = n;
  d.r0 = R;
  d.r1 = R_out;
  d.hi = norm_ball_bound(n, R_out);
  d.lo = -d.hi;
  return d;
}

bool Domain::needs_indicator() const { return kind != Kind::Box; }

bool Domain::contains(const Point& xi) const {
  for (int j = 0; j < dim(); ++j)
    if (xi(j) < lo(j) || xi(j) > hi(j)) return false;
  switch (kind) {
  case Kind::Box:
    return true;
  case Kind::HomAnnulus: {
    const double v = norm->value(xi);
    return v > r0 && v < r1;
  }
  case Kind::Slab:
    return xi.head(norm->m).norm() < r1;
  case Kind::PuncturedBox:
    return norm->value(xi) > r0;
  case Kind::Exterior:
    return norm->value(xi) > r0;
  }
  return false;
}

bool integrability_predicate(double s, double Qeff, At at) {
  return at == At::Origin ? s > -Qeff : s < -Qeff;
}

double homogeneous_tail_bound(double shell_value, double r_inner, double r_outer,
                              double degree_plus_Q) {
  if (degree_plus_Q >= 0) return std::numeric_limits<double>::infinity();
  const double sQ = degree_plus_Q;
  const double denom = (std::pow(r_outer, sQ) - std::pow(r_inner, sQ)) / sQ;
  if (denom == 0) return 0;
  const double sphere = std::abs(shell_value) / std::abs(denom);
  return sphere * std::pow(r_outer, sQ) / std::abs(sQ);
}

namespace {

// Geometric refinement of one segment toward its governing anchor.
void refine_segment(double a, double b, double c, int shells, double rho,
                    std::vector<double>& out) {
  const double near = std::min(std::abs(a - c), std::abs(b - c));
  const double far = std::max(std::abs(a - c), std::abs(b - c));
  const double sign = (0.5 * (a + b) >= c) ? 1.0 : -1.0;
  if (far <= 0) return;
  if (near <= far * 1e-300) {
    for (int i = 1; i <= shells; ++i) out.push_back(c + sign * far / std::pow(rho, i));
  } else {
    for (double d = near * rho; d < far * (1.0 - 1e-12); d *= rho) out.push_back(c + sign * d);
  }
}

std::vector<double> build_axis(double lo, double hi, std::vector<double> anchors,
                               const std::vector<double>& marks, int shells, double rho) {
  if (anchors.empty()) anchors.push_back(0.0);
  std::sort(anchors.begin(), anchors.end());
  std::vector<double> pts{lo, hi};
  for (double m : marks)
    if (m > lo && m < hi) pts.push_back(m);
  for (double a : anchors)
    if (a > lo && a < hi) pts.push_back(a);
  for (size_t i = 0; i + 1 < anchors.size(); ++i) {
    const double mid = 0.5 * (anchors[i] + anchors[i + 1]);
    if (mid > lo && mid < hi) pts.push_back(mid);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<double> refined = pts;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    const double mid = 0.5 * (a + b);
    double best = anchors[0];
    for (double c : anchors)
      if (std::abs(mid - c) < std::abs(mid - best)) best = c;
    refine_segment(a, b, best, shells, rho, refined);
  }
  std::sort(refined.begin(), refined.end());
  std::vector<double> dedup;
  for (double v : refined) {
    if (v < lo || v > hi) continue;
    // relative dedup: log-graded axes span many decades, so a span-based
    // tolerance would collapse the finely graded region near the anchors
    const double scale = std::max({std::abs(v), dedup.empty() ? 0.0 : std::abs(dedup.back()),
                                   1e-300});
    if (dedup.empty() || v - dedup.back() > 1e-13 * scale) dedup.push_back(v);
    else if (v == hi) dedup.back() = hi;
  }
  if (dedup.back() != hi) dedup.push_back(hi);

  // enforce a minimum uniform subdivision so short smooth features are resolved
  const int subsplit = std::clamp(shells / 10, 1, 4);
  if (subsplit > 1) {
    std::vector<double> fin;
    for (size_t i = 0; i + 1 < dedup.size(); ++i) {
      for (int s = 0; s < subsplit; ++s)
        fin.push_back(dedup[i] + s * (dedup[i + 1] - dedup[i]) / subsplit);
    }
    fin.push_back(dedup.back());
    return fin;
  }
  return dedup;
}

} // namespace

IntegralResult integrate(const std::function<double(const Point&)>& f, const Domain& dom,
                         const QuadratureScheme& scheme) {
  const int D = dom.dim();

  // interface radii mapped onto each axis through the coordinate bounds of {N = r}
  std::vector<double> radii = scheme.interface_alignment;
  if (dom.r0 > 0) radii.push_back(dom.r0);
  if (dom.r1 > 0) radii.push_back(dom.r1);

  std::vector<std::vector<double>> edges(D);
  for (int j = 0; j < D; ++j) {
    std::vector<double> marks;
    for (double r : radii) {
      if (!(r > 0) || !std::isfinite(r)) continue;
      double bj;
      if (dom.norm && dom.norm->kind != NormKind::FirstLayerEuclid)
        bj = norm_ball_bound(*dom.norm, r)(j);
      else
        bj = r; // slab / plain boxes: radii live on the coordinate axes
      marks.push_back(bj);
      marks.push_back(-bj);
    }
    std::vector<double> anchors =
        j < static_cast<int>(dom.anchors.size()) ? dom.anchors[j] : std::vector<double>{};
    edges[j] = build_axis(dom.lo(j), dom.hi(j), anchors, marks, scheme.shells,
                          scheme.grading_ratio);
  }

  const int fine = std::max(2, scheme.order);
  const int coarse = std::max(2, fine - 2);
  const auto& [xf, wf] = gauss_legendre(fine);
  const auto& [xc, wc] = gauss_legendre(coarse);

  const bool indicator = dom.needs_indicator();
  std::vector<double> cell_fine, cell_coarse, outer_shell;
  std::vector<int> cell(D, 0);
  Point pt(D);

  auto cell_rule = [&](const std::vector<double>& xs, const std::vector<double>& ws) {
    const int q = static_cast<int>(xs.size());
    std::vector<int> ni(D, 0);
    double acc = 0;
    while (true) {
      double wprod = 1.0;
      for (int j = 0; j < D; ++j) {
        const double a = edges[j][cell[j]], b = edges[j][cell[j] + 1];
        pt(j) = 0.5 * (a + b) + 0.5 * (b - a) * xs[ni[j]];
        wprod *= 0.5 * (b - a) * ws[ni[j]];
      }
      if (!indicator || dom.contains(pt)) {
        const double fv = f(pt);
        if (!std::isfinite(fv)) throw integration_error("non-finite integrand value", pt);
        acc += wprod * fv;
      }
      int j = 0;
      for (; j < D; ++j) {
        if (++ni[j] < q) break;
        ni[j] = 0;
      }
      if (j == D) break;
    }
    return acc;
  };

  while (true) {
    const double vf = cell_rule(xf, wf);
    cell_fine.push_back(vf);
    cell_coarse.push_back(cell_rule(xc, wc));
    if (dom.kind == Domain::Kind::Exterior && dom.tail_degree) {
      Point center(D);
      for (int j = 0; j < D; ++j) center(j) = 0.5 * (edges[j][cell[j]] + edges[j][cell[j] + 1]);
      if (dom.norm->value(center) >= dom.r1 / 2.0) outer_shell.push_back(vf);
    }
    int j = 0;
    for (; j < D; ++j) {
      if (++cell[j] + 1 < static_cast<int>(edges[j].size())) break;
      cell[j] = 0;
    }
    if (j == D) break;
  }

  IntegralResult res;
  res.value = pairwise_sum(cell_fine);
  // per-cell absolute differences: a signed global difference lets cell errors
  // cancel and under-reports the error of singular integrands
  std::vector<double> cell_diff(cell_fine.size());
  for (size_t i = 0; i < cell_fine.size(); ++i)
    cell_diff[i] = std::abs(cell_fine[i] - cell_coarse[i]);
  res.err_bound = pairwise_sum(cell_diff);
  if (!outer_shell.empty()) {
    const double sQ = *dom.tail_degree + dom.norm->effective_dim();
    res.truncation_bound =
        homogeneous_tail_bound(pairwise_sum(outer_shell), dom.r1 / 2.0, dom.r1, sQ);
  }
  return res;
}

IntegralResult functional_value(FunctionalKind kind, double p,
                                const std::function<double(const Point&)>& w,
                                const ScalarField& u, const GeometrySpec& g, const Domain& dom,
                                const QuadratureScheme& scheme) {
  std::function<double(const Point&)> integrand;
  if (kind == FunctionalKind::UPowerWeight) {
    integrand = [&u, &w, p](const Point& xi) {
      const double uv = u.eval(xi);
      if (uv == 0) return 0.0;
      return std::pow(std::abs(uv), p) * w(xi);
    };
  } else {
    FDConfig cfg;
    integrand = [&u, &w, &g, p, cfg](const Point& xi) {
      double gm;
      if (u.hgrad_mag) gm = u.hgrad_mag(xi);
      else gm = horizontal_gradient(g, u, xi, cfg).norm();
      if (gm == 0) return 0.0;
      return std::pow(gm, p) * w(xi);
    };
  }
  return integrate(integrand, dom, scheme);
}

} // namespace hardy
