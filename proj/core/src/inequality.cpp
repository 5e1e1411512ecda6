#include "hardy/inequality.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

namespace {

const std::vector<std::pair<TheoremId, const char*>>& name_table() {
  static const std::vector<std::pair<TheoremId, const char*>> t = {
      {TheoremId::GENERAL_H, "GENERAL_H"},     {TheoremId::MAIN, "MAIN"},
      {TheoremId::MAIN_PART, "MAIN_PART"},     {TheoremId::SPEC, "SPEC"},
      {TheoremId::SPEC_LOG, "SPEC_LOG"},       {TheoremId::POINCARE, "POINCARE"},
      {TheoremId::COS_STRIP, "COS_STRIP"},     {TheoremId::GRUSHIN, "GRUSHIN"},
      {TheoremId::GRUSHIN_LOG, "GRUSHIN_LOG"}, {TheoremId::GRUSHIN_Z, "GRUSHIN_Z"},
      {TheoremId::GREINER, "GREINER"},         {TheoremId::GREINER_Z, "GREINER_Z"},
      {TheoremId::CARNOT, "CARNOT"},           {TheoremId::CARNOT_Z, "CARNOT_Z"},
      {TheoremId::BOUNDARY, "BOUNDARY"},       {TheoremId::EXTERIOR, "EXTERIOR"},
      {TheoremId::DAVIES_HINZ, "DAVIES_HINZ"}, {TheoremId::DH_PLUS, "DH_PLUS"}};
  return t;
}

bool origin_excluded(const Domain& dom) {
  switch (dom.kind) {
  case Domain::Kind::Exterior:
    return true;
  case Domain::Kind::HomAnnulus:
  case Domain::Kind::PuncturedBox:
    // the norm constraint is strict, so even r0 = 0 excludes the zero set
    return true;
  case Domain::Kind::Box:
  case Domain::Kind::Slab:
    for (int j = 0; j < dom.dim(); ++j)
      if (dom.lo(j) > 0 || dom.hi(j) < 0) return true;
    return false;
  }
  return false;
}

struct AdmissibilityCollector {
  std::vector<std::pair<std::string, bool>> checks;
  void require(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
  void finish(InequalityInstance& inst) {
    inst.admissibility = checks;
    for (const auto& [name, ok] : checks)
      if (!ok) throw input_error("admissibility predicate failed: " + name);
  }
};

// gauge-type builder shared by GRUSHIN / GREINER / CARNOT
void fill_gauge(InequalityInstance& inst, const HomogeneousNorm& nm,
                AdmissibilityCollector& adm) {
  const double p = inst.p, beta = inst.beta, Q = nm.effective_dim();
  inst.c = std::abs(Q + beta) / p;
  inst.d = distance_field(nm);
  inst.Qeff = Q;
  inst.den_offset = beta;
  inst.num_offset = beta + p;
  inst.den_weight = [nm, beta, p](const Point& xi) {
    return std::pow(nm.value(xi), beta) * std::pow(nm.grad_mag(xi), p);
  };
  inst.num_weight = [nm, beta, p](const Point& xi) {
    return std::pow(nm.value(xi), beta + p);
  };
  const bool excl = origin_excluded(inst.dom);
  adm.require("den_weight_locally_integrable", beta > -Q || excl);
  adm.require("num_weight_locally_integrable", beta + p > -Q || excl);
}

// first-layer |z| builder shared by SPEC / *_Z
void fill_block(InequalityInstance& inst, const HomogeneousNorm& nm,
                AdmissibilityCollector& adm) {
  const double p = inst.p, beta = inst.beta;
  const int m = nm.m;
  inst.m = m;
  inst.c = std::abs(m + beta) / p;
  inst.d = distance_field(nm);
  inst.Qeff = m;
  inst.den_offset = beta;
  inst.num_offset = beta + p;
  inst.den_weight = [nm, beta](const Point& xi) { return std::pow(nm.value(xi), beta); };
  inst.num_weight = [nm, beta, p](const Point& xi) {
    return std::pow(nm.value(xi), beta + p);
  };
  // the weight is singular on the subspace {z = 0}; only a domain cut by the
  // same first-layer norm stays clear of it
  const bool z_excluded =
      inst.dom.norm && inst.dom.norm->kind == NormKind::FirstLayerEuclid &&
      (inst.dom.kind == Domain::Kind::HomAnnulus ||
       inst.dom.kind == Domain::Kind::PuncturedBox || inst.dom.kind == Domain::Kind::Exterior);
  adm.require("den_weight_locally_integrable", beta > -m || z_excluded);
  adm.require("num_weight_locally_integrable", beta + p > -m || z_excluded);
  adm.require("domain_avoids_block_zero_set_when_m_plus_beta_negative",
              m + beta >= 0 || z_excluded);
}

} // namespace

ScalarField distance_field(const HomogeneousNorm& nm) {
  ScalarField f;
  f.eval = [nm](const Point& xi) { return nm.value(xi); };
  f.hgrad_mag = [nm](const Point& xi) { return nm.grad_mag(xi); };
  return f;
}

std::string theorem_name(TheoremId id) {
  for (const auto& [k, v] : name_table())
    if (k == id) return v;
  throw input_error("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& s) {
  for (const auto& [k, v] : name_table())
    if (s == v) return k;
  throw input_error("unknown theorem name: " + s);
}

Domain InequalityInstance::domain_for(double support_outer) const {
  if (!std::isfinite(support_outer) || support_outer <= 0) return dom;
  if (id == TheoremId::COS_STRIP) {
    Eigen::VectorXd lo(2), hi(2);
    lo << -M_PI / 2.0, -60.0;
    hi << M_PI / 2.0, std::log(std::max(support_outer, std::exp(1.0)));
    Domain box = Domain::box(lo, hi);
    box.anchors = {{-M_PI / 2.0, M_PI / 2.0}, {}};
    return box;
  }
  if (dom.kind == Domain::Kind::HomAnnulus && dom.norm) {
    const double r1 = unbounded_domain ? support_outer : std::min(support_outer, dom.r1);
    Domain d2 = Domain::hom_annulus(*dom.norm, dom.r0, std::max(r1, dom.r0 * 2 + 1e-12));
    d2.anchors = dom.anchors;
    return d2;
  }
  return dom;
}

InequalityInstance make_instance(TheoremId id, const GeometrySpec& geom,
                                 const InstanceParams& params) {
  if (!(params.p > 1)) throw input_error("instances require p > 1");
  InequalityInstance inst;
  inst.id = id;
  inst.geom = geom;
  inst.p = params.p;
  inst.alpha = params.alpha;
  inst.beta = params.beta;
  inst.R = params.R;
  inst.M = params.M;
  inst.m = params.m;
  const double p = params.p, alpha = params.alpha, beta = params.beta;
  AdmissibilityCollector adm;

  auto default_annulus = [&](const HomogeneousNorm& nm, double r1) {
    inst.dom = Domain::hom_annulus(nm, 0, r1);
    inst.unbounded_domain = true;
  };
  auto full_euclid = [&]() {
    if (geom.kind != GeomKind::EuclideanPartial || geom.first_layer != geom.ambient_dim)
      throw input_error("Euclidean preset requires the full-gradient Euclidean geometry");
    return HomogeneousNorm::first_layer(geom, geom.ambient_dim);
  };

  switch (id) {
  case TheoremId::MAIN:
  case TheoremId::MAIN_PART: {
    if (!params.d.eval || !params.d.hgrad_mag)
      throw input_error("MAIN instances need a distance-like field with a closed gradient");
    if (!params.domain) throw input_error("MAIN instances need an explicit domain");
    if (!(params.Qeff > 0)) throw input_error("MAIN instances need the effective dimension");
    inst.dom = *params.domain;
    inst.unbounded_domain = params.domain_unbounded;
    inst.d = params.d;
    inst.Qeff = params.Qeff;
    const ScalarField d = params.d;
    const double b_eff = (id == TheoremId::MAIN) ? beta : -p;
    inst.beta = b_eff;
    inst.den_offset = b_eff;
    inst.num_offset = (id == TheoremId::MAIN) ? beta + p : 0.0;
    if (id == TheoremId::MAIN) {
      inst.c = std::abs((alpha - 1.0) * (p - 1.0) - beta - 1.0) / p;
      inst.den_weight = [d, b_eff, p](const Point& xi) {
        return std::pow(d.eval(xi), b_eff) * std::pow(d.hgrad_mag(xi), p);
      };
      inst.num_weight = [d, beta, p](const Point& xi) {
        return std::pow(d.eval(xi), beta + p);
      };
      adm.require("sign_condition",
                  alpha * ((alpha - 1.0) * (p - 1.0) - beta - 1.0) != 0.0);
    } else {
      inst.c = std::abs(alpha) * (p - 1.0) / p;
      inst.den_weight = [d, p](const Point& xi) {
        return std::pow(d.eval(xi), -p) * std::pow(d.hgrad_mag(xi), p);
      };
      inst.num_weight = [](const Point&) { return 1.0; };
      adm.require("sign_condition", alpha != 0.0);
    }
    const bool excl = origin_excluded(inst.dom);
    adm.require("alpha_exponent_range", (alpha - 1.0) * (p - 1.0) > -inst.Qeff);
    adm.require("den_weight_locally_integrable", inst.den_offset > -inst.Qeff || excl);
    adm.require("num_weight_locally_integrable",
                inst.num_offset > -inst.Qeff || excl || id == TheoremId::MAIN_PART);
    break;
  }
  case TheoremId::SPEC: {
    const int m = params.m > 0 ? params.m : geom.first_layer;
    HomogeneousNorm nm = HomogeneousNorm::first_layer(geom, m);
    if (params.domain) inst.dom = *params.domain;
    else if (m == geom.ambient_dim) default_annulus(nm, std::max(params.R, 1.0));
    else throw input_error("SPEC with a partial block needs an explicit domain");
    fill_block(inst, nm, adm);
    break;
  }
  case TheoremId::SPEC_LOG: {
    const int m = params.m > 0 ? params.m : geom.first_layer;
    if (std::abs(p - m) > 1e-12) throw input_error("SPEC_LOG needs p = m");
    if (!(beta < -1.0)) throw input_error("SPEC_LOG needs beta < -1");
    if (!(params.R > 0)) throw input_error("SPEC_LOG needs the ball radius R");
    HomogeneousNorm nm = HomogeneousNorm::first_layer(geom, m);
    if (params.domain) inst.dom = *params.domain;
    else if (m == geom.ambient_dim) inst.dom = Domain::hom_annulus(nm, 0, params.R);
    else throw input_error("SPEC_LOG with a partial block needs an explicit domain");
    inst.m = m;
    inst.c = std::abs(beta + 1.0) / p;
    inst.d = distance_field(nm);
    inst.Qeff = m;
    inst.den_offset = -p;
    inst.num_offset = 0;
    const double R = params.R;
    inst.den_weight = [nm, R, beta, p](const Point& xi) {
      const double v = nm.value(xi);
      return std::pow(v, -p) * std::pow(std::log(R / v), beta);
    };
    inst.num_weight = [nm, R, beta, p](const Point& xi) {
      return std::pow(std::log(R / nm.value(xi)), p + beta);
    };
    adm.require("log_weight_exponent_range", beta < -1.0);
    break;
  }
  case TheoremId::POINCARE: {
    if (!(params.M > 0)) throw input_error("POINCARE needs the slab half-width M");
    if (!params.domain) throw input_error("POINCARE needs an explicit bounded domain");
    if (params.direction < 0 || params.direction >= geom.first_layer)
      throw input_error("POINCARE direction must index a first-layer coordinate");
    inst.dom = *params.domain;
    inst.c = 1.0 / (p * params.M);
    inst.num_weight = [](const Point&) { return 1.0; };
    inst.den_weight = [](const Point&) { return 1.0; };
    const int j = params.direction;
    adm.require("domain_bounded_in_direction",
                inst.dom.hi(j) - inst.dom.lo(j) <= 2.0 * params.M + 1e-12);
    break;
  }
  case TheoremId::COS_STRIP: {
    if (std::abs(p - 2.0) > 1e-12) throw input_error("COS_STRIP is a p = 2 instance");
    if (geom.kind != GeomKind::EuclideanPartial || geom.ambient_dim != 2 ||
        geom.first_layer != 2)
      throw input_error("COS_STRIP lives on the full-gradient Euclidean plane");
    inst.c = 0.5;
    inst.beta = -2.0;
    inst.Qeff = 2;
    inst.den_offset = -2.0;
    inst.num_offset = 0;
    ScalarField d;
    d.eval = [](const Point& xi) { return std::exp(xi(1)) * std::cos(xi(0)); };
    d.hgrad_mag = [](const Point& xi) { return std::exp(xi(1)); };
    inst.d = d;
    inst.den_weight = [](const Point& xi) {
      const double cx = std::cos(xi(0));
      return 1.0 / (cx * cx);
    };
    inst.num_weight = [](const Point&) { return 1.0; };
    if (params.domain) inst.dom = *params.domain;
    else {
      Eigen::VectorXd lo(2), hi(2);
      lo << -M_PI / 2.0, -60.0;
      hi << M_PI / 2.0, 10.0;
      inst.dom = Domain::box(lo, hi);
      inst.dom.anchors = {{-M_PI / 2.0, M_PI / 2.0}, {}};
    }
    inst.unbounded_domain = true;
    adm.require("strip_geometry", true);
    break;
  }
  case TheoremId::GRUSHIN:
  case TheoremId::GREINER:
  case TheoremId::CARNOT: {
    if (id == TheoremId::GRUSHIN && geom.kind != GeomKind::Grushin)
      throw input_error("GRUSHIN instance needs a Grushin geometry");
    if (id == TheoremId::GREINER &&
        geom.kind != GeomKind::Greiner && geom.kind != GeomKind::Heisenberg)
      throw input_error("GREINER instance needs a Greiner/Heisenberg geometry");
    if (id == TheoremId::CARNOT && geom.kind != GeomKind::HType)
      throw input_error("CARNOT instance needs an H-type geometry");
    HomogeneousNorm nm = HomogeneousNorm::canonical(geom);
    if (params.domain) inst.dom = *params.domain;
    else default_annulus(nm, std::max(params.R, 1.0));
    fill_gauge(inst, nm, adm);
    break;
  }
  case TheoremId::GRUSHIN_LOG: {
    if (geom.kind != GeomKind::Grushin) throw input_error("GRUSHIN_LOG needs a Grushin geometry");
    if (std::abs(p - geom.Q) > 1e-12) throw input_error("GRUSHIN_LOG needs p = Q");
    if (!(beta < -1.0)) throw input_error("GRUSHIN_LOG needs beta < -1");
    if (!(params.R > 0)) throw input_error("GRUSHIN_LOG needs the ball radius R");
    HomogeneousNorm nm = HomogeneousNorm::canonical(geom);
    inst.dom = params.domain ? *params.domain : Domain::hom_annulus(nm, 0, params.R);
    inst.c = std::abs(beta + 1.0) / p;
    inst.d = distance_field(nm);
    inst.Qeff = geom.Q;
    inst.den_offset = -p;
    inst.num_offset = 0;
    const double R = params.R;
    inst.den_weight = [nm, R, beta, p](const Point& xi) {
      const double v = nm.value(xi);
      return std::pow(v, -p) * std::pow(std::log(R / v), beta) *
             std::pow(nm.grad_mag(xi), p);
    };
    inst.num_weight = [nm, R, beta, p](const Point& xi) {
      return std::pow(std::log(R / nm.value(xi)), p + beta);
    };
    adm.require("log_weight_exponent_range", beta < -1.0);
    break;
  }
  case TheoremId::GRUSHIN_Z:
  case TheoremId::GREINER_Z:
  case TheoremId::CARNOT_Z: {
    int m = params.m;
    if (id == TheoremId::GRUSHIN_Z) {
      if (geom.kind != GeomKind::Grushin) throw input_error("GRUSHIN_Z needs a Grushin geometry");
      if (m == 0) m = geom.n;
      if (m > geom.n) throw input_error("GRUSHIN_Z block must lie in the x variables");
    } else if (id == TheoremId::GREINER_Z) {
      if (geom.kind != GeomKind::Greiner && geom.kind != GeomKind::Heisenberg)
        throw input_error("GREINER_Z needs a Greiner/Heisenberg geometry");
      m = 2 * geom.n; // the weight is r = |(x,y)|
    } else {
      if (geom.kind != GeomKind::HType) throw input_error("CARNOT_Z needs an H-type geometry");
      if (m == 0) m = geom.first_layer;
    }
    HomogeneousNorm nm = HomogeneousNorm::first_layer(geom, m);
    if (params.domain) inst.dom = *params.domain;
    else default_annulus(HomogeneousNorm::canonical(geom), std::max(params.R, 1.0));
    fill_block(inst, nm, adm);
    break;
  }
  case TheoremId::BOUNDARY: {
    if (!(params.R > 0)) throw input_error("BOUNDARY needs the ball radius R");
    HomogeneousNorm nm = HomogeneousNorm::canonical(geom);
    inst.dom = params.domain ? *params.domain : Domain::hom_annulus(nm, 0, params.R);
    inst.c = (p - 1.0) / p;
    inst.d = distance_field(nm);
    inst.Qeff = nm.effective_dim();
    const double R = params.R;
    inst.den_weight = [nm, R, p](const Point& xi) {
      return std::pow(R - nm.value(xi), -p) * std::pow(nm.grad_mag(xi), p);
    };
    inst.num_weight = [](const Point&) { return 1.0; };
    adm.require("ball_radius_positive", R > 0);
    break;
  }
  case TheoremId::EXTERIOR: {
    if (!(params.R > 0)) throw input_error("EXTERIOR needs the ball radius R");
    HomogeneousNorm nm = HomogeneousNorm::canonical(geom);
    const double Q = nm.effective_dim();
    inst.dom =
        params.domain ? *params.domain : Domain::exterior(nm, params.R, 8.0 * params.R);
    inst.c = std::abs(p - Q) / p;
    inst.d = distance_field(nm);
    inst.Qeff = Q;
    const double R = params.R;
    inst.den_weight = [nm, R, p](const Point& xi) {
      return std::pow(nm.value(xi) - R, -p) * std::pow(nm.grad_mag(xi), p);
    };
    inst.num_weight = [](const Point&) { return 1.0; };
    adm.require("supercritical_exponent", p > Q);
    break;
  }
  case TheoremId::GENERAL_H:
  case TheoremId::DAVIES_HINZ:
  case TheoremId::DH_PLUS: {
    std::function<double(const Point&)> Ah = params.Ah, hmag = params.hmag;
    inst.c = 1.0;
    if (!Ah || !hmag) {
      // classical Euclidean preset built from powers of |xi|
      HomogeneousNorm nm = full_euclid();
      const int N = geom.ambient_dim;
      if (!(p < N)) throw input_error("Euclidean preset needs p < N");
      if (id == TheoremId::DH_PLUS) {
        // h = |grad V|^{p-2} grad V with V = ln|xi|
        Ah = [nm, N, p](const Point& xi) {
          return (N - p) * std::pow(nm.value(xi), -p);
        };
        hmag = [nm](const Point& xi) { return 1.0 / nm.value(xi); };
      } else if (std::abs(p - 2.0) < 1e-12) {
        // V = ln|xi|
        if (N <= 2) throw input_error("Euclidean preset with p = 2 needs N > 2");
        Ah = [nm, N](const Point& xi) {
          const double v = nm.value(xi);
          return (N - 2.0) / (v * v);
        };
        hmag = [nm](const Point& xi) { return 1.0 / nm.value(xi); };
      } else {
        // V = sign(2-p) |xi|^{2-p}
        const double a = std::abs(2.0 - p);
        Ah = [nm, N, p, a](const Point& xi) {
          return a * (N - p) * std::pow(nm.value(xi), -p);
        };
        hmag = [nm, p, a](const Point& xi) { return a * std::pow(nm.value(xi), 1.0 - p); };
      }
      inst.equiv_classical = std::pow((N - p) / p, p);
      inst.d = distance_field(nm);
      inst.Qeff = N;
      inst.den_offset = -p;
      inst.num_offset = 0;
      if (params.domain) inst.dom = *params.domain;
      else default_annulus(nm, 1.0);
    } else {
      if (!params.domain)
        throw input_error("custom vector-field instances need an explicit domain");
      inst.dom = *params.domain;
      inst.d = params.d;
      inst.Qeff = params.Qeff > 0 ? params.Qeff : static_cast<double>(geom.ambient_dim);
    }
    inst.constant = 1.0;
    inst.den_weight = Ah;
    if (id == TheoremId::DH_PLUS) {
      inst.num_weight = [Ah, hmag, p](const Point& xi) {
        return std::pow(p, p) * std::pow(hmag(xi), p * (p - 1.0)) *
               std::pow(Ah(xi), 1.0 - p);
      };
    } else {
      inst.num_weight = [Ah, hmag, p](const Point& xi) {
        return std::pow(p, p) * std::pow(hmag(xi), p) * std::pow(Ah(xi), 1.0 - p);
      };
    }
    adm.require("comparison_function_supplied", static_cast<bool>(inst.den_weight));
    inst.constant = 1.0;
    adm.finish(inst);
    return inst;
  }
  }

  inst.constant = std::pow(inst.c, p);
  adm.finish(inst);
  return inst;
}

TrialFunction trial_from_field(ScalarField f, std::vector<double> interfaces,
                               double support_outer) {
  TrialFunction t;
  t.field = std::move(f);
  t.interfaces = std::move(interfaces);
  t.support_outer = support_outer;
  return t;
}

TrialFunction radial_profile_trial(const InequalityInstance& inst,
                                   std::function<double(double)> F,
                                   std::function<double(double)> dF,
                                   std::vector<double> interfaces, double support_outer) {
  if (!inst.radial_machinery())
    throw input_error("instance has no distance-like field for radial trials");
  const ScalarField d = inst.d;
  TrialFunction t;
  t.profile = F;
  t.dprofile = dF;
  t.interfaces = std::move(interfaces);
  t.support_outer = support_outer;
  t.field.eval = [d, F](const Point& xi) { return F(d.eval(xi)); };
  t.field.hgrad_mag = [d, F, dF](const Point& xi) {
    const double s = d.eval(xi);
    const double fp = dF(s);
    if (fp == 0) return 0.0;
    return std::abs(fp) * d.hgrad_mag(xi);
  };
  t.field.interfaces = t.interfaces;
  return t;
}

TrialFunction radial_bump(const InequalityInstance& inst, double a, double b) {
  if (!(0 < a && a < b)) throw input_error("radial bump needs 0 < a < b");
  auto F = [a, b](double s) {
    if (s <= a || s >= b) return 0.0;
    return std::exp(-1.0 / ((s - a) * (b - s)));
  };
  auto dF = [a, b, F](double s) {
    if (s <= a || s >= b) return 0.0;
    const double g = (s - a) * (b - s);
    const double gp = a + b - 2.0 * s;
    return F(s) * gp / (g * g);
  };
  return radial_profile_trial(inst, F, dF, {}, b);
}

namespace {

bool power_type(TheoremId id) {
  switch (id) {
  case TheoremId::MAIN:
  case TheoremId::MAIN_PART:
  case TheoremId::SPEC:
  case TheoremId::COS_STRIP:
  case TheoremId::GRUSHIN:
  case TheoremId::GREINER:
  case TheoremId::CARNOT:
  case TheoremId::GRUSHIN_Z:
  case TheoremId::GREINER_Z:
  case TheoremId::CARNOT_Z:
    return true;
  default:
    return false;
  }
}

// smooth descent from 1 to 0 over [r, 2r]
double outer_cutoff(double s, double r) {
  if (s <= r) return 1.0;
  if (s >= 2.0 * r) return 0.0;
  const double th = M_PI * (s - r) / (2.0 * r);
  const double c = std::cos(th);
  return c * c;
}

double outer_cutoff_deriv(double s, double r) {
  if (s <= r || s >= 2.0 * r) return 0.0;
  const double th = M_PI * (s - r) / (2.0 * r);
  return -(M_PI / (2.0 * r)) * std::sin(2.0 * th);
}

} // namespace

TrialFunction near_extremizer(const InequalityInstance& inst, double eps, double delta_s,
                              double r_out) {
  if (!power_type(inst.id))
    throw input_error("no power-type near-extremizer for " + theorem_name(inst.id));
  if (!(eps > 0)) throw input_error("near-extremizer needs eps > 0");
  if (!(r_out > 1)) throw input_error("near-extremizer needs r_out > 1");
  const double p = inst.p;
  const double c1 = inst.c + eps / p;
  const double c2 = inst.c + eps / (2.0 * p);

  // integrability gate: refuse divergent weights instead of regularizing
  if (!(c1 * p + inst.den_offset + inst.Qeff > 0))
    throw domain_error("near-extremizer inner integrability predicate failed");
  if (inst.unbounded_domain && inst.id != TheoremId::COS_STRIP &&
      !(-c2 * p + inst.den_offset + inst.Qeff < 0))
    throw domain_error("near-extremizer outer integrability predicate failed");

  const bool cutoff = inst.id != TheoremId::COS_STRIP && inst.unbounded_domain;
  auto raw = [c1, c2](double s) {
    if (s <= 0) return 0.0;
    return s <= 1.0 ? std::pow(s, c1) : std::pow(s, -c2);
  };
  auto draw = [c1, c2](double s) {
    if (s <= 0) return 0.0;
    return s <= 1.0 ? c1 * std::pow(s, c1 - 1.0) : -c2 * std::pow(s, -c2 - 1.0);
  };
  std::function<double(double)> F, dF;
  if (delta_s > 0) {
    // cubic Hermite bridge over [1 - delta, 1 + delta] rounds the kink
    const double a = 1.0 - delta_s, b = 1.0 + delta_s;
    const double fa = raw(a), fb = raw(b), da = draw(a), db = draw(b);
    auto bridge = [a, b, fa, fb, da, db](double s, bool deriv) {
      const double h = b - a, t = (s - a) / h;
      const double h00 = 2 * t * t * t - 3 * t * t + 1, h10 = t * t * t - 2 * t * t + t;
      const double h01 = -2 * t * t * t + 3 * t * t, h11 = t * t * t - t * t;
      if (!deriv) return h00 * fa + h10 * h * da + h01 * fb + h11 * h * db;
      const double d00 = (6 * t * t - 6 * t) / h, d10 = (3 * t * t - 4 * t + 1);
      const double d01 = (-6 * t * t + 6 * t) / h, d11 = (3 * t * t - 2 * t);
      return d00 * fa + d10 * da + d01 * fb + d11 * db;
    };
    F = [raw, bridge, a, b](double s) {
      return (s > a && s < b) ? bridge(s, false) : raw(s);
    };
    dF = [draw, bridge, a, b](double s) {
      return (s > a && s < b) ? bridge(s, true) : draw(s);
    };
  } else {
    F = raw;
    dF = draw;
  }

  if (inst.id == TheoremId::COS_STRIP) {
    // truncate in the y variable: u = F(d) * chi(e^y); d = e^y cos x
    TrialFunction t;
    t.profile = F;
    t.dprofile = dF;
    t.interfaces = {std::log(r_out), std::log(2.0 * r_out)};
    t.support_outer = 2.0 * r_out;
    t.field.eval = [F, r_out](const Point& xi) {
      const double ey = std::exp(xi(1));
      return F(ey * std::cos(xi(0))) * outer_cutoff(ey, r_out);
    };
    t.field.hgrad_mag = [F, dF, r_out](const Point& xi) {
      const double ey = std::exp(xi(1));
      const double cx = std::cos(xi(0)), sx = std::sin(xi(0));
      const double d = ey * cx;
      const double chi = outer_cutoff(ey, r_out);
      const double dchi = outer_cutoff_deriv(ey, r_out);
      const double gx = -dF(d) * chi * ey * sx;
      const double gy = dF(d) * chi * ey * cx + F(d) * dchi * ey;
      return std::hypot(gx, gy);
    };
    return t;
  }

  std::function<double(double)> Fc = F, dFc = dF;
  if (cutoff) {
    Fc = [F, r_out](double s) { return F(s) * outer_cutoff(s, r_out); };
    dFc = [F, dF, r_out](double s) {
      return dF(s) * outer_cutoff(s, r_out) + F(s) * outer_cutoff_deriv(s, r_out);
    };
  }
  std::vector<double> interfaces = {1.0};
  double support = inst.dom.r1 > 0 && !inst.unbounded_domain
                       ? inst.dom.r1
                       : std::numeric_limits<double>::infinity();
  if (cutoff) {
    interfaces.push_back(r_out);
    interfaces.push_back(2.0 * r_out);
    support = 2.0 * r_out;
  }
  return radial_profile_trial(inst, Fc, dFc, interfaces, support);
}

RatioResult rayleigh_ratio(const InequalityInstance& inst, const TrialFunction& u,
                           const Domain& dom, const QuadratureScheme& scheme) {
  QuadratureScheme s2 = scheme;
  for (double r : u.interfaces) s2.interface_alignment.push_back(r);
  const IntegralResult num = functional_value(FunctionalKind::GradPowerWeight, inst.p,
                                              inst.num_weight, u.field, inst.geom, dom, s2);
  const IntegralResult den = functional_value(FunctionalKind::UPowerWeight, inst.p,
                                              inst.den_weight, u.field, inst.geom, dom, s2);
  RatioResult r;
  r.num = num.value;
  r.den = den.value;
  r.num_err = num.err_bound + num.truncation_bound;
  r.den_err = den.err_bound + den.truncation_bound;
  if (!(r.den > r.den_err)) throw domain_error("trial function outside admissible family");
  r.ratio = r.num / r.den;
  return r;
}

RatioResult rayleigh_ratio(const InequalityInstance& inst, const TrialFunction& u,
                           const QuadratureScheme& scheme) {
  return rayleigh_ratio(inst, u, inst.domain_for(u.support_outer), scheme);
}

SweepResult sharpness_sweep(const InequalityInstance& inst, const std::vector<double>& eps_list,
                            const QuadratureScheme& scheme, double r_out) {
  for (size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] > eps_list[i + 1]) || !(eps_list[i + 1] > 0))
      throw input_error("sweep needs a positive decreasing eps list");
  SweepResult res;
  for (double eps : eps_list) {
    const TrialFunction u = near_extremizer(inst, eps, 0.0, r_out);
    const RatioResult r = rayleigh_ratio(inst, u, scheme);
    res.rows.push_back({eps, r.ratio, r.ratio - inst.constant, r.num_err, r.den_err});

    // converse check on the untruncated closed-form branches, when computable:
    // on each branch the grad-side integrand is exactly c(.)^p times the
    // u-side one, so c(eps)^p * den > num reduces to c(eps) > c(eps/2).
    const double p = inst.p;
    const double c1 = inst.c + eps / p, c2 = inst.c + eps / (2.0 * p);
    const double e_in = c1 * p + inst.den_offset + inst.Qeff;
    const double e_out = c2 * p - inst.den_offset - inst.Qeff;
    if (e_in > 0 && e_out > 0) {
      const double den_in = 1.0 / e_in, den_out = 1.0 / e_out;
      const double lhs = std::pow(c1, p) * (den_in + den_out);
      const double rhs = std::pow(c1, p) * den_in + std::pow(c2, p) * den_out;
      res.converse_ok = res.converse_ok && lhs > rhs;
    }
  }
  return res;
}

bool ggm_check(double x, double eta, double s) {
  if (!(x > 0)) throw input_error("ggm check needs x > 0");
  if (!(x > eta)) throw input_error("ggm check needs x > eta");
  if (!(s >= 1)) throw input_error("ggm check needs s >= 1");
  const double lhs = std::pow(x - eta, s);
  const double rhs = std::pow(x, s) - s * eta * std::pow(x, s - 1.0);
  const double slack = 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs >= rhs - slack;
}

DecompositionResult achieve_decomposition(const InequalityInstance& inst,
                                          const TrialFunction& u,
                                          const QuadratureScheme& scheme) {
  if (inst.id != TheoremId::MAIN_PART)
    throw input_error("decomposition applies to the critical-power instance");
  if (!(inst.p >= 2)) throw input_error("decomposition needs p >= 2");
  if (!u.radial()) throw input_error("decomposition needs a radial trial");
  const double p = inst.p, alpha = inst.alpha;
  const double gh = alpha * (p - 1.0) / p;
  const double e = (alpha - 1.0) * (p - 1.0);
  const ScalarField d = inst.d;
  const auto F = u.profile;
  const auto dF = u.dprofile;

  auto G = [F, gh](double s) { return std::pow(s, -gh) * F(s); };
  auto dG = [F, dF, gh](double s) {
    return -gh * std::pow(s, -gh - 1.0) * F(s) + std::pow(s, -gh) * dF(s);
  };

  const Domain dom = inst.domain_for(u.support_outer);
  QuadratureScheme s2 = scheme;
  for (double r : u.interfaces) s2.interface_alignment.push_back(r);

  const IntegralResult num = functional_value(FunctionalKind::GradPowerWeight, p,
                                              inst.num_weight, u.field, inst.geom, dom, s2);
  const IntegralResult den = functional_value(FunctionalKind::UPowerWeight, p,
                                              inst.den_weight, u.field, inst.geom, dom, s2);

  const double cg = std::pow(std::abs(gh), p - 2.0);
  auto i1 = [&](const Point& xi) {
    const double s = d.eval(xi);
    const double g = G(s);
    if (g == 0) return 0.0;
    return p * cg * gh * std::pow(std::abs(g), p - 2.0) * g * dG(s) * std::pow(s, e) *
           std::pow(d.hgrad_mag(xi), p);
  };
  auto i2 = [&](const Point& xi) {
    const double s = d.eval(xi);
    const double g = G(s), gp = dG(s);
    if (g == 0 && p < 2.0) return 0.0;
    return (p / 2.0) * cg * std::pow(std::abs(g), p - 2.0) * gp * gp *
           std::pow(s, e + 1.0) * std::pow(d.hgrad_mag(xi), p);
  };
  auto ilow = [&](const Point& xi) {
    const double s = d.eval(xi);
    const double g = std::abs(G(s));
    if (g == 0) return 0.0;
    // |grad |v|^{p/2}| = (p/2) |v|^{p/2-1} |v'| |grad d|
    const double dv = (p / 2.0) * std::pow(g, p / 2.0 - 1.0) * std::abs(dG(s));
    return (2.0 / p) * cg * std::pow(s, e + 1.0) * std::pow(d.hgrad_mag(xi), p - 2.0) *
           dv * dv * d.hgrad_mag(xi) * d.hgrad_mag(xi);
  };

  const IntegralResult I1 = integrate(i1, dom, s2);
  const IntegralResult I2 = integrate(i2, dom, s2);
  const IntegralResult Ilow = integrate(ilow, dom, s2);

  DecompositionResult r;
  r.I = num.value - inst.constant * den.value;
  r.I1 = I1.value;
  r.I2 = I2.value;
  r.lower_bound = Ilow.value;
  r.err = num.err_bound + inst.constant * den.err_bound + Ilow.err_bound;
  return r;
}

} // namespace hardy
