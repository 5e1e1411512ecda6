#include "hardy/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hardy {

TrialFamily TrialFamily::extremizer(const InequalityInstance& inst, double eps0,
                                    double r_out0) {
  TrialFamily f;
  f.name = "extremizer";
  f.lo = Eigen::Vector2d(std::log(1e-4), std::log(2.0));
  f.hi = Eigen::Vector2d(std::log(1.0), std::log(1e8));
  f.init = Eigen::Vector2d(std::log(eps0), std::log(r_out0));
  f.make = [inst](const Eigen::VectorXd& x) {
    return near_extremizer(inst, std::exp(x(0)), 0.0, std::exp(x(1)));
  };
  return f;
}

std::vector<double> TrialFamily::spline_knots(int knots, double s_lo, double s_hi) {
  if (knots < 2 || !(0 < s_lo && s_lo < s_hi)) throw input_error("bad spline knot request");
  std::vector<double> k;
  k.push_back(s_lo / 2.0); // zero anchor
  for (int i = 0; i < knots; ++i)
    k.push_back(s_lo * std::pow(s_hi / s_lo, static_cast<double>(i) / (knots - 1)));
  k.push_back(2.0 * s_hi); // zero anchor
  return k;
}

TrialFamily TrialFamily::radial_spline(const InequalityInstance& inst, int knots, double s_lo,
                                       double s_hi) {
  if (!inst.radial_machinery())
    throw input_error("spline family needs an instance with a distance-like field");
  TrialFamily f;
  f.name = "radial-spline";
  f.lo = Eigen::VectorXd::Zero(knots);
  f.hi = Eigen::VectorXd::Constant(knots, 10.0);
  // initial shape: the profile s^c / s^{-c/2} of the instance, clipped
  f.init = Eigen::VectorXd(knots);
  const std::vector<double> kpos = spline_knots(knots, s_lo, s_hi);
  for (int i = 0; i < knots; ++i) {
    const double s = kpos[i + 1];
    const double v = s <= 1.0 ? std::pow(s, inst.c) : std::pow(s, -inst.c / 2.0);
    f.init(i) = std::clamp(v, 0.0, 10.0);
  }
  f.make = [inst, kpos, knots](const Eigen::VectorXd& x) {
    std::vector<double> vals(kpos.size(), 0.0);
    for (int i = 0; i < knots; ++i) vals[i + 1] = std::max(0.0, x(i));
    auto F = [kpos, vals](double s) {
      if (s <= kpos.front() || s >= kpos.back()) return 0.0;
      const auto it = std::upper_bound(kpos.begin(), kpos.end(), s);
      const size_t j = static_cast<size_t>(it - kpos.begin());
      const double a = kpos[j - 1], b = kpos[j];
      const double t = (s - a) / (b - a);
      return vals[j - 1] * (1.0 - t) + vals[j] * t;
    };
    auto dF = [kpos, vals](double s) {
      if (s <= kpos.front() || s >= kpos.back()) return 0.0;
      const auto it = std::upper_bound(kpos.begin(), kpos.end(), s);
      const size_t j = static_cast<size_t>(it - kpos.begin());
      return (vals[j] - vals[j - 1]) / (kpos[j] - kpos[j - 1]);
    };
    std::vector<double> interfaces(kpos.begin(), kpos.end());
    return radial_profile_trial(inst, F, dF, std::move(interfaces), kpos.back());
  };
  return f;
}

TrialFamily TrialFamily::bump(const InequalityInstance& inst, double center0, double width0) {
  if (!(center0 > width0 && width0 > 0)) throw input_error("bump family needs center > width > 0");
  TrialFamily f;
  f.name = "bump";
  f.lo = Eigen::Vector2d(std::log(1e-4), std::log(1e-5));
  f.hi = Eigen::Vector2d(std::log(1e6), std::log(1e6));
  f.init = Eigen::Vector2d(std::log(center0), std::log(width0));
  f.make = [inst](const Eigen::VectorXd& x) {
    const double c = std::exp(x(0)), w = std::exp(x(1));
    if (!(c > w)) throw input_error("bump would touch the singular set");
    return radial_bump(inst, c - w, c + w);
  };
  return f;
}

TrialFamily TrialFamily::fixed(TrialFunction u) {
  TrialFamily f;
  f.name = "fixed";
  f.lo = f.hi = f.init = Eigen::VectorXd();
  f.make = [u](const Eigen::VectorXd&) { return u; };
  return f;
}

namespace {

Eigen::VectorXd clamp_to(const TrialFamily& fam, Eigen::VectorXd x) {
  for (int i = 0; i < x.size(); ++i) x(i) = std::clamp(x(i), fam.lo(i), fam.hi(i));
  return x;
}

} // namespace

MinimizeResult minimize_ratio(const InequalityInstance& inst, const TrialFamily& family,
                              const OptimizerConfig& opt, const QuadratureScheme& scheme) {
  if (opt.max_evals <= 0) throw input_error("optimizer needs max_evals > 0");
  MinimizeResult res;
  int evals_left = opt.max_evals;
  int admissible = 0;

  auto objective = [&](const Eigen::VectorXd& x) -> double {
    if (evals_left <= 0) return std::numeric_limits<double>::infinity();
    --evals_left;
    double val = std::numeric_limits<double>::infinity();
    RatioResult detail;
    try {
      const TrialFunction u = family.make(x);
      detail = rayleigh_ratio(inst, u, scheme);
      val = detail.ratio;
      ++admissible;
    } catch (const std::runtime_error&) {
      // inadmissible parameter point
    }
    res.trace.push_back({x, val});
    if (val < res.best_ratio) {
      res.best_ratio = val;
      res.best_params = x;
      res.best_detail = detail;
    }
    return val;
  };

  const int n = family.dim();
  if (n == 0) {
    objective(Eigen::VectorXd());
    if (admissible == 0) throw input_error("trial family produced no admissible trial");
    return res;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  const int budget = std::max(n + 2, opt.max_evals / std::max(1, opt.restarts));

  for (int restart = 0; restart < std::max(1, opt.restarts); ++restart) {
    Eigen::VectorXd x0 = family.init;
    if (restart > 0)
      for (int i = 0; i < n; ++i)
        x0(i) += 0.25 * jitter(rng) * (family.hi(i) - family.lo(i));
    x0 = clamp_to(family, x0);

    // Nelder-Mead simplex
    std::vector<Eigen::VectorXd> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd p = x0;
      p(i) += opt.init_scale * 0.2 * (family.hi(i) - family.lo(i));
      pts[i + 1] = clamp_to(family, p);
    }
    for (int i = 0; i <= n; ++i) fv[i] = objective(pts[i]);

    int used = n + 1;
    while (used < budget && evals_left > 0) {
      std::vector<int> ord(n + 1);
      for (int i = 0; i <= n; ++i) ord[i] = i;
      std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
      std::vector<Eigen::VectorXd> p2(n + 1);
      std::vector<double> f2(n + 1);
      for (int i = 0; i <= n; ++i) {
        p2[i] = pts[ord[i]];
        f2[i] = fv[ord[i]];
      }
      pts.swap(p2);
      fv.swap(f2);
      if (std::isfinite(fv[0]) && std::isfinite(fv[n]) && fv[n] - fv[0] < opt.tol) break;

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < n; ++i) centroid += pts[i];
      centroid /= n;

      const Eigen::VectorXd xr = clamp_to(family, centroid + (centroid - pts[n]));
      const double fr = objective(xr);
      ++used;
      if (fr < fv[0]) {
        const Eigen::VectorXd xe = clamp_to(family, centroid + 2.0 * (centroid - pts[n]));
        const double fe = objective(xe);
        ++used;
        if (fe < fr) {
          pts[n] = xe;
          fv[n] = fe;
        } else {
          pts[n] = xr;
          fv[n] = fr;
        }
      } else if (fr < fv[n - 1]) {
        pts[n] = xr;
        fv[n] = fr;
      } else {
        const Eigen::VectorXd xc = clamp_to(family, centroid + 0.5 * (pts[n] - centroid));
        const double fc = objective(xc);
        ++used;
        if (fc < fv[n]) {
          pts[n] = xc;
          fv[n] = fc;
        } else {
          for (int i = 1; i <= n; ++i) {
            pts[i] = clamp_to(family, pts[0] + 0.5 * (pts[i] - pts[0]));
            fv[i] = objective(pts[i]);
            ++used;
          }
        }
      }
    }
  }

  if (admissible == 0) throw input_error("trial family produced no admissible trial");
  return res;
}

} // namespace hardy
