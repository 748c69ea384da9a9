// squeeze-jump: closed-form observables of a harmonic oscillator whose
// frequency jumps omega0 -> omega1 at t = 0 and back at t = tau, plus a
// truncated number-basis cross-check suite.
//
//   squeeze-jump figure <id> [--omega1 X --tau Y --out DIR --svg]
//   squeeze-jump verify [--n N --seed S --fock-n K --json]
//   squeeze-jump probe --omega0 A --omega1 B --tau C --t T --lambda L
//
// Options may also come from a JSON config file (--config PATH) with the
// same keys as the long flags; explicit flags win.  SQUEEZE_JUMP_FOCK_N
// overrides the default truncation of `verify`.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqjump/errors.hpp"
#include "sqjump/figures.hpp"
#include "sqjump/probe.hpp"
#include "sqjump/protocol.hpp"
#include "sqjump/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sqjump::UsageError("cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw sqjump::UsageError("config file '" + path + "': " + e.what());
  }
}

// Fill an option from the config when the flag was not given on the command
// line.
template <typename T>
void merge(const CLI::Option* opt, const json& cfg, const char* key, T& value) {
  if (opt != nullptr && opt->count() > 0) return;
  if (cfg.contains(key)) {
    try {
      value = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
      throw sqjump::UsageError(std::string("config key '") + key + "': " + e.what());
    }
  }
}

template <typename T>
void merge_optional(const CLI::Option* opt, const json& cfg, const char* key,
                    std::optional<T>& value) {
  if (opt != nullptr && opt->count() > 0) return;
  if (cfg.contains(key)) {
    try {
      value = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
      throw sqjump::UsageError(std::string("config key '") + key + "': " + e.what());
    }
  }
}

int run_figure(const std::string& id_name, const sqjump::FigureOverrides& ov,
               const std::string& out_dir, bool svg) {
  const sqjump::FigureId id = sqjump::parse_figure_id(id_name);
  std::vector<sqjump::DataSeries> series;
  try {
    series = sqjump::figure_series(id, ov);
  } catch (const std::invalid_argument& e) {
    throw sqjump::UsageError(e.what());
  }

  fs::create_directories(out_dir);
  for (const auto& s : series) {
    const fs::path path = fs::path(out_dir) / (s.name + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sqjump::UsageError("cannot write '" + path.string() + "'");
    out << sqjump::to_csv(s);
    std::cout << path.string() << "\n";
  }
  if (svg) {
    const std::string image = sqjump::to_svg(series, id_name);
    if (image.empty()) {
      std::cerr << "note: no line plot for surface output; CSV only\n";
    } else {
      const fs::path path = fs::path(out_dir) / (id_name + ".svg");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw sqjump::UsageError("cannot write '" + path.string() + "'");
      out << image;
      std::cout << path.string() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-jump oscillator squeezing calculator"};
  app.require_subcommand(1);

  // figure
  auto* fig = app.add_subcommand("figure", "emit a data series as CSV");
  std::string fig_id;
  std::optional<double> fig_w0, fig_w1, fig_tau;
  std::optional<int> fig_points;
  std::string fig_out = ".";
  bool fig_svg = false;
  std::string fig_config;
  fig->add_option("id", fig_id, "fig2..fig8")->required();
  auto* o_w0 = fig->add_option("--omega0", fig_w0, "reference frequency");
  auto* o_w1 = fig->add_option("--omega1", fig_w1, "intermediate frequency");
  auto* o_tau = fig->add_option("--tau", fig_tau, "first-interval duration");
  auto* o_pts = fig->add_option("--points", fig_points, "grid points per axis");
  auto* o_out = fig->add_option("--out", fig_out, "output directory");
  fig->add_flag("--svg", fig_svg, "also write a line plot");
  fig->add_option("--config", fig_config, "JSON config file");

  // verify
  auto* ver = app.add_subcommand("verify", "run the self-check suite");
  int ver_n = 50;
  unsigned long long ver_seed = 42;
  int ver_fock = 128;
  bool ver_json = false;
  std::string ver_config;
  auto* o_n = ver->add_option("--n", ver_n, "random samples per check");
  auto* o_seed = ver->add_option("--seed", ver_seed, "RNG seed");
  auto* o_fock = ver->add_option("--fock-n", ver_fock, "oracle truncation");
  ver->add_flag("--json", ver_json, "JSON report");
  ver->add_option("--config", ver_config, "JSON config file");

  // probe
  auto* prb = app.add_subcommand("probe", "report one parameter point");
  double prb_w0 = 1.0, prb_w1 = 3.0, prb_tau = 1.0, prb_t = 0.0, prb_lambda = 0.0;
  bool prb_json = false;
  std::string prb_config;
  auto* p_w0 = prb->add_option("--omega0", prb_w0, "reference frequency");
  auto* p_w1 = prb->add_option("--omega1", prb_w1, "intermediate frequency");
  auto* p_tau = prb->add_option("--tau", prb_tau, "first-interval duration");
  auto* p_t = prb->add_option("--t", prb_t, "probe time");
  auto* p_l = prb->add_option("--lambda", prb_lambda, "quadrature angle");
  prb->add_flag("--json", prb_json, "JSON record");
  prb->add_option("--config", prb_config, "JSON config file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig->parsed()) {
      if (!fig_config.empty()) {
        const json cfg = load_config(fig_config);
        merge_optional(o_w0, cfg, "omega0", fig_w0);
        merge_optional(o_w1, cfg, "omega1", fig_w1);
        merge_optional(o_tau, cfg, "tau", fig_tau);
        merge_optional(o_pts, cfg, "points", fig_points);
        merge(o_out, cfg, "out", fig_out);
      }
      sqjump::FigureOverrides ov{fig_w0, fig_w1, fig_tau, fig_points};
      return run_figure(fig_id, ov, fig_out, fig_svg);
    }

    if (ver->parsed()) {
      // precedence: flag > config > environment > built-in default
      if (o_fock->count() == 0) {
        if (const char* env = std::getenv("SQUEEZE_JUMP_FOCK_N")) {
          try {
            ver_fock = std::stoi(env);
          } catch (const std::exception&) {
            throw sqjump::UsageError("SQUEEZE_JUMP_FOCK_N is not an integer");
          }
        }
      }
      if (!ver_config.empty()) {
        const json cfg = load_config(ver_config);
        merge(o_n, cfg, "n", ver_n);
        merge(o_seed, cfg, "seed", ver_seed);
        merge(o_fock, cfg, "fock_n", ver_fock);
      }
      sqjump::VerifyOptions options{ver_n, ver_seed, ver_fock};
      const sqjump::RunReport report = sqjump::run_verification(options);
      if (ver_json) {
        std::cout << sqjump::report_to_json(report, options);
      } else {
        std::cout << sqjump::format_report(report);
      }
      return report.all_passed() ? 0 : 1;
    }

    if (prb->parsed()) {
      if (!prb_config.empty()) {
        const json cfg = load_config(prb_config);
        merge(p_w0, cfg, "omega0", prb_w0);
        merge(p_w1, cfg, "omega1", prb_w1);
        merge(p_tau, cfg, "tau", prb_tau);
        merge(p_t, cfg, "t", prb_t);
        merge(p_l, cfg, "lambda", prb_lambda);
      }
      std::optional<sqjump::JumpProtocol> protocol;
      try {
        protocol.emplace(prb_w0, prb_w1, prb_tau);
      } catch (const std::invalid_argument& e) {
        throw sqjump::UsageError(e.what());
      }
      if (prb_t < 0.0) throw sqjump::UsageError("probe: --t must be >= 0");
      const sqjump::ProbeRecord rec = sqjump::probe(*protocol, prb_t, prb_lambda);
      std::cout << (prb_json ? sqjump::format_probe_json(rec)
                             : sqjump::format_probe_text(rec));
      return 0;
    }
  } catch (const sqjump::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
