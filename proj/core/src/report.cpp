#include "hardy/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace hardy {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_csv(const Report& r) {
  std::string out;
  out += "# artifact_version=" + r.artifact_version + "\n";
  out += "# experiment=" + r.experiment + "\n";
  out += "# seed=" + std::to_string(r.seed) + "\n";
  out += "# config=" + r.config_echo + "\n";
  out += "theorem_id,p,alpha,beta,gamma,n,k,m,R,epsilon,constant,ratio,gap,num_err,den_err,"
         "pass\n";
  for (const CsvRow& row : r.rows) {
    out += row.theorem_id;
    for (double v : {row.p, row.alpha, row.beta, row.gamma}) out += "," + format_double(v);
    for (int v : {row.n, row.k, row.m}) out += "," + std::to_string(v);
    for (double v : {row.R, row.epsilon, row.constant, row.ratio, row.gap, row.num_err,
                     row.den_err})
      out += "," + format_double(v);
    out += row.pass ? ",1\n" : ",0\n";
  }
  return out;
}

std::string emit_json(const Report& r) {
  nlohmann::ordered_json j;
  j["artifact_version"] = r.artifact_version;
  j["experiment"] = r.experiment;
  j["seed"] = r.seed;
  j["config"] = r.config_echo;
  j["rows"] = nlohmann::ordered_json::array();
  for (const CsvRow& row : r.rows) {
    nlohmann::ordered_json jr;
    jr["theorem_id"] = row.theorem_id;
    jr["p"] = row.p;
    jr["alpha"] = row.alpha;
    jr["beta"] = row.beta;
    jr["gamma"] = row.gamma;
    jr["n"] = row.n;
    jr["k"] = row.k;
    jr["m"] = row.m;
    jr["R"] = row.R;
    jr["epsilon"] = row.epsilon;
    jr["constant"] = row.constant;
    jr["ratio"] = row.ratio;
    jr["gap"] = row.gap;
    jr["num_err"] = row.num_err;
    jr["den_err"] = row.den_err;
    jr["pass"] = row.pass;
    j["rows"].push_back(jr);
  }
  j["notes"] = r.notes;
  j["summary_pass"] = r.summary_pass;
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.artifact_version = j.at("artifact_version").get<std::string>();
  r.experiment = j.at("experiment").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config_echo = j.at("config").get<std::string>();
  for (const auto& jr : j.at("rows")) {
    CsvRow row;
    row.theorem_id = jr.at("theorem_id").get<std::string>();
    row.p = jr.at("p").get<double>();
    row.alpha = jr.at("alpha").get<double>();
    row.beta = jr.at("beta").get<double>();
    row.gamma = jr.at("gamma").get<double>();
    row.n = jr.at("n").get<int>();
    row.k = jr.at("k").get<int>();
    row.m = jr.at("m").get<int>();
    row.R = jr.at("R").get<double>();
    row.epsilon = jr.at("epsilon").get<double>();
    row.constant = jr.at("constant").get<double>();
    row.ratio = jr.at("ratio").get<double>();
    row.gap = jr.at("gap").get<double>();
    row.num_err = jr.at("num_err").get<double>();
    row.den_err = jr.at("den_err").get<double>();
    row.pass = jr.at("pass").get<bool>();
    r.rows.push_back(row);
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.summary_pass = j.at("summary_pass").get<bool>();
  return r;
}

} // namespace hardy
