#include "hardy/config.hpp"

#include "hardy/geometry.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hardy {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
  if (!j.is_object()) throw input_error("config section '" + where + "' must be an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key))
      throw input_error("unknown config key '" + key + "' in " + where);
}

template <typename T>
void get_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("config parse error: ") + e.what());
  }
  reject_unknown(j,
                 {"experiment", "seed", "geometry", "instance", "scheme", "fd", "sweep",
                  "estimate", "harmonicity", "ggm", "trials", "out_dir"},
                 "top level");
  ExperimentConfig c;
  if (!j.contains("experiment")) throw input_error("config needs an 'experiment' key");
  c.experiment = j.at("experiment").get<std::string>();
  static const std::set<std::string> kinds = {"verify",  "sweep", "harmonicity", "estimate",
                                              "ggm",     "poincare", "decomposition"};
  if (!kinds.count(c.experiment)) throw input_error("unknown experiment '" + c.experiment + "'");
  get_if(j, "seed", c.seed);
  get_if(j, "out_dir", c.out_dir);
  get_if(j, "trials", c.trials);

  if (j.contains("geometry")) {
    const json& g = j.at("geometry");
    reject_unknown(g, {"kind", "n", "k", "m", "N", "gamma"}, "geometry");
    get_if(g, "kind", c.geometry.kind);
    get_if(g, "n", c.geometry.n);
    get_if(g, "k", c.geometry.k);
    get_if(g, "m", c.geometry.m);
    get_if(g, "N", c.geometry.N);
    get_if(g, "gamma", c.geometry.gamma);
  }
  if (j.contains("instance")) {
    const json& i = j.at("instance");
    reject_unknown(i, {"theorem", "p", "alpha", "beta", "R", "M", "m"}, "instance");
    get_if(i, "theorem", c.theorem);
    get_if(i, "p", c.p);
    get_if(i, "alpha", c.alpha);
    get_if(i, "beta", c.beta);
    get_if(i, "R", c.R);
    get_if(i, "M", c.M);
    get_if(i, "m", c.m);
  }
  if (j.contains("scheme")) {
    const json& s = j.at("scheme");
    reject_unknown(s, {"shells", "grading_ratio", "order", "rel_err"}, "scheme");
    get_if(s, "shells", c.shells);
    get_if(s, "grading_ratio", c.grading_ratio);
    get_if(s, "order", c.order);
    get_if(s, "rel_err", c.rel_err);
  }
  if (j.contains("fd")) {
    const json& f = j.at("fd");
    reject_unknown(f, {"h", "richardson"}, "fd");
    get_if(f, "h", c.fd_h);
    get_if(f, "richardson", c.fd_richardson);
  }
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    reject_unknown(s, {"eps_list", "epsilon", "r_out"}, "sweep");
    get_if(s, "eps_list", c.eps_list);
    get_if(s, "epsilon", c.epsilon);
    get_if(s, "r_out", c.r_out);
  }
  if (j.contains("estimate")) {
    const json& e = j.at("estimate");
    reject_unknown(e, {"family", "max_evals", "restarts"}, "estimate");
    get_if(e, "family", c.family);
    get_if(e, "max_evals", c.max_evals);
    get_if(e, "restarts", c.restarts);
  }
  if (j.contains("harmonicity")) {
    const json& h = j.at("harmonicity");
    reject_unknown(h, {"grid", "tolerance", "profile"}, "harmonicity");
    get_if(h, "grid", c.grid);
    get_if(h, "tolerance", c.tolerance);
    get_if(h, "profile", c.profile);
  }
  if (j.contains("ggm")) {
    const json& g = j.at("ggm");
    reject_unknown(g, {"draws"}, "ggm");
    get_if(g, "draws", c.draws);
  }
  c.echo = j.dump();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

} // namespace hardy
