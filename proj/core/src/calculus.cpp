#include "hardy/calculus.hpp"

#include <cmath>

namespace hardy {

namespace {

Eigen::VectorXd central_gradient(const std::function<double(const Point&)>& f, const Point& xi,
                                 double h) {
  const int N = static_cast<int>(xi.size());
  Eigen::VectorXd grad(N);
  for (int j = 0; j < N; ++j) {
    Point a = xi, b = xi;
    a(j) += h;
    b(j) -= h;
    grad(j) = (f(a) - f(b)) / (2.0 * h);
  }
  return grad;
}

double step_size(const Point& xi, const FDConfig& cfg) {
  return cfg.h_rel * std::max(1.0, xi.norm());
}

} // namespace

Eigen::VectorXd fd_gradient(const ScalarField& u, const Point& xi, const FDConfig& cfg) {
  const double h = step_size(xi, cfg);
  Eigen::VectorXd g = central_gradient(u.eval, xi, h);
  if (cfg.richardson) {
    Eigen::VectorXd g2 = central_gradient(u.eval, xi, h / 2.0);
    g = (4.0 * g2 - g) / 3.0;
  }
  return g;
}

Point horizontal_gradient(const GeometrySpec& g, const ScalarField& u, const Point& xi,
                          const FDConfig& cfg) {
  if (u.hgrad) return u.hgrad(xi);
  return g.mu(xi) * fd_gradient(u, xi, cfg);
}

namespace {

Matrix hessian_at_step(const GeometrySpec& g, const ScalarField& u, const Point& xi, double h) {
  const int l = g.horizontal_dim;
  const int N = g.ambient_dim;
  // X_j u as a function of the base point, then one more stencil for X_i.
  auto xj_u = [&](int j, const Point& z) -> double {
    if (u.hgrad) return u.hgrad(z)(j);
    return g.mu(z).row(j).dot(central_gradient(u.eval, z, h));
  };
  Matrix H(l, l);
  const Matrix mu0 = g.mu(xi);
  for (int j = 0; j < l; ++j) {
    Eigen::VectorXd grad_j(N);
    for (int c = 0; c < N; ++c) {
      Point a = xi, b = xi;
      a(c) += h;
      b(c) -= h;
      grad_j(c) = (xj_u(j, a) - xj_u(j, b)) / (2.0 * h);
    }
    for (int i = 0; i < l; ++i) H(i, j) = mu0.row(i).dot(grad_j);
  }
  return H;
}

double lp_at_step(const GeometrySpec& g, double p, const ScalarField& u, const Point& xi,
                  const FDConfig& cfg, double h) {
  FDConfig local = cfg;
  local.h_rel = h / std::max(1.0, xi.norm());
  local.richardson = false;
  const Point grad = horizontal_gradient(g, u, xi, local);
  const double gn = grad.norm();
  if (p != 2.0 && p < 4.0 && gn < cfg.degenerate_tol) throw degenerate_point_error(xi);
  const Matrix H = hessian_at_step(g, u, xi, h);
  const double l2 = H.trace();
  if (p == 2.0) return l2;
  const Matrix Hs = 0.5 * (H + H.transpose());
  const double dinf = grad.dot(Hs * grad);
  return (p - 2.0) * std::pow(gn, p - 4.0) * dinf + std::pow(gn, p - 2.0) * l2;
}

} // namespace

Matrix horizontal_hessian(const GeometrySpec& g, const ScalarField& u, const Point& xi,
                          const FDConfig& cfg) {
  return hessian_at_step(g, u, xi, step_size(xi, cfg));
}

double lp_operator(const GeometrySpec& g, double p, const ScalarField& u, const Point& xi,
                   const FDConfig& cfg) {
  const double h = step_size(xi, cfg);
  const double v1 = lp_at_step(g, p, u, xi, cfg, h);
  if (!cfg.richardson) return v1;
  const double v2 = lp_at_step(g, p, u, xi, cfg, h / 2.0);
  return (4.0 * v2 - v1) / 3.0;
}

double radial_lp_formula(const GeometrySpec& geom, double p, double alpha,
                         const ScalarField& g, const RadialProfile& v, const Point& xi,
                         const FDConfig& cfg) {
  const double gv = g.eval(xi);
  if (!(gv > 0)) throw domain_error("radial formula requires g > 0");
  const double dv = v.df(gv);
  if (dv == 0) throw domain_error("radial formula requires v' != 0");
  const double gm =
      g.hgrad_mag ? g.hgrad_mag(xi) : horizontal_gradient(geom, g, xi, cfg).norm();
  return (p - 1.0) * std::pow(gm, p) * std::pow(std::abs(dv), p - 2.0) *
         (v.d2f(gv) + (1.0 - alpha) / gv * dv);
}

ScanResult harmonicity_scan(const GeometrySpec& g, double p, const ScalarField& u,
                            const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                            const std::function<bool(const Point&)>& in_region,
                            int grid_per_axis, const FDConfig& cfg) {
  const int N = static_cast<int>(lo.size());
  ScanResult res;
  std::vector<int> idx(N, 0);
  Point xi(N);
  while (true) {
    for (int j = 0; j < N; ++j)
      xi(j) = lo(j) + (idx[j] + 0.5) * (hi(j) - lo(j)) / grid_per_axis;
    if (!in_region || in_region(xi)) {
      try {
        res.max_residual = std::max(res.max_residual, std::abs(lp_operator(g, p, u, xi, cfg)));
        ++res.grid_points_used;
      } catch (const degenerate_point_error&) {
        ++res.grid_points_skipped;
      }
    }
    int j = 0;
    for (; j < N; ++j) {
      if (++idx[j] < grid_per_axis) break;
      idx[j] = 0;
    }
    if (j == N) break;
  }
  return res;
}

} // namespace hardy
