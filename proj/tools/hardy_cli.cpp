// Experiment runner: one config file in, CSV + JSON reports out.

#include "hardy/runner.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hardy::input_error("cannot write " + path.string());
  out << content;
}

void list_geometries() {
  using hardy::GeometrySpec;
  std::vector<GeometrySpec> cat = {
      GeometrySpec::euclidean_partial(2, 3), GeometrySpec::grushin(1, 1, 1.0),
      GeometrySpec::grushin(1, 1, 2.0),      GeometrySpec::greiner(1, 2.0),
      GeometrySpec::heisenberg(1)};
  hardy::Matrix U(2, 2);
  U << 0, 1, -1, 0;
  cat.push_back(GeometrySpec::htype({U}));
  std::cout << "name ambient_dim horizontal_dim Q\n";
  for (const auto& g : cat)
    std::cout << g.name() << " " << g.ambient_dim << " " << g.horizontal_dim << " " << g.Q
              << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardy-type inequality verification for degenerate quasilinear operators"};
  app.require_subcommand(1);

  std::string config_path, out_dir, family;
  long long seed = -1;
  double rel_err = -1, fd_h = -1, r_out = -1;
  int shells = -1, order = -1, max_evals = -1, restarts = -1;
  bool fd_richardson = false;

  app.add_option("--config", config_path, "experiment config file (JSON)");
  app.add_option("--out", out_dir, "output directory for reports");
  app.add_option("--seed", seed, "override the config seed");
  app.add_option("--rel-err", rel_err, "override the quadrature target relative error");
  app.add_option("--fd-h", fd_h, "override the finite-difference relative step");
  app.add_flag("--fd-richardson", fd_richardson, "enable FD Richardson extrapolation");
  app.add_option("--shells", shells, "override the quadrature shell count");
  app.add_option("--order", order, "override the Gauss-Legendre order");
  app.add_option("--rout", r_out, "override the outer truncation radius");
  app.add_option("--family", family, "override the estimator trial family");
  app.add_option("--max-evals", max_evals, "override the optimizer evaluation budget");
  app.add_option("--restarts", restarts, "override the optimizer restart count");

  const std::vector<std::string> experiments = {"verify",  "sweep",    "harmonicity",
                                                "estimate", "ggm",     "poincare",
                                                "decomposition"};
  for (const std::string& e : experiments)
    app.add_subcommand(e, "run the '" + e + "' experiment")->fallthrough();
  app.add_subcommand("list-geometries", "print the geometry catalog")->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const std::string sub = app.get_subcommands().front()->get_name();

  try {
    if (sub == "list-geometries") {
      list_geometries();
      return 0;
    }
    if (config_path.empty()) throw hardy::input_error("--config is required");
    hardy::ExperimentConfig cfg = hardy::load_config(config_path);
    cfg.experiment = sub;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (rel_err > 0) cfg.rel_err = rel_err;
    if (fd_h > 0) cfg.fd_h = fd_h;
    if (fd_richardson) cfg.fd_richardson = true;
    if (shells > 0) cfg.shells = shells;
    if (order > 0) cfg.order = order;
    if (r_out > 0) cfg.r_out = r_out;
    if (!family.empty()) cfg.family = family;
    if (max_evals > 0) cfg.max_evals = max_evals;
    if (restarts > 0) cfg.restarts = restarts;

    const hardy::Report rep = hardy::run(cfg);

    const std::filesystem::path dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
    std::filesystem::create_directories(dir);
    const std::string stem = rep.experiment + "_seed" + std::to_string(rep.seed);
    write_file(dir / (stem + ".csv"), hardy::emit_csv(rep));
    write_file(dir / (stem + ".json"), hardy::emit_json(rep));

    std::cout << rep.experiment << ": " << (rep.summary_pass ? "pass" : "FAIL") << " ("
              << rep.rows.size() << " rows)\n";
    for (const std::string& n : rep.notes) std::cout << "  " << n << "\n";
    return rep.summary_pass ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
