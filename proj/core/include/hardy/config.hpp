#pragma once
// Experiment configuration: one strict JSON document per run; unknown keys
// are errors so no experiment parameter is silently ignored.

#include <cstdint>
#include <string>
#include <vector>

namespace hardy {

struct GeometryConfig {
  std::string kind = "euclidean"; // euclidean|grushin|greiner|heisenberg|htype
  int n = 1, k = 1;
  int m = 0, N = 0; // euclidean: gradient block m inside R^N
  double gamma = 1.0;
};

struct ExperimentConfig {
  std::string experiment; // verify|sweep|harmonicity|estimate|ggm|poincare|decomposition
  std::uint64_t seed = 42;
  GeometryConfig geometry;

  // instance
  std::string theorem = "GRUSHIN";
  double p = 2, alpha = 1, beta = 0, R = 0, M = 0;
  int m = 0;

  // quadrature scheme
  int shells = 40;
  double grading_ratio = 2.0;
  int order = 8;
  double rel_err = 1e-8;

  // finite differences
  double fd_h = 1e-5;
  bool fd_richardson = false;

  // sweep / near-extremizer
  std::vector<double> eps_list;
  double epsilon = 0.1;
  double r_out = 100.0;

  // estimator
  std::string family = "extremizer";
  int max_evals = 240;
  int restarts = 3;

  // harmonicity scan
  int grid = 6;
  double tolerance = 1e-3;
  std::string profile = "power"; // power|log

  // randomized experiments
  int draws = 100000; // ggm
  int trials = 20;    // poincare / decomposition

  std::string out_dir;
  std::string echo; // canonical one-line echo of the parsed document
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

} // namespace hardy
