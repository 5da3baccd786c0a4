// Command-line front end: deterministic and stochastic propagation,
// stationary-state analysis, the short-time entanglement criterion, and
// the weak-coupling compatibility test.
//
// Exit codes: 0 success, 1 input error (flags, config, files),
// 2 numerical failure during computation.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qfb/entangle.hpp"
#include "qfb/evolve.hpp"
#include "qfb/feedback.hpp"
#include "qfb/io.hpp"
#include "qfb/stationary.hpp"
#include "qfb/stochastic.hpp"
#include "qfb/wclcheck.hpp"

namespace {

using qfb::Error;
using qfb::Json;

void report(const Error& e) {
  std::fprintf(stderr, "error [%s]: %s\n", e.code().c_str(), e.what());
}

Json load_config(const std::string& path) {
  const std::string text = qfb::read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("config_error",
                qfb::strfmt("%s: %s", path.c_str(), e.what()));
  }
}

double need_number(const Json& j, const char* key, const char* where) {
  const Json& v = j.at(key);
  if (!v.is_number()) {
    throw Error("bad_value",
                qfb::strfmt("%s: field '%s' must be a number", where, key));
  }
  return v.get<double>();
}

double opt_number(const Json& j, const char* key, double dflt,
                  const char* where) {
  if (!j.contains(key)) return dflt;
  return need_number(j, key, where);
}

std::int64_t need_int(const Json& j, const char* key, const char* where) {
  const Json& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw Error("bad_value", qfb::strfmt("%s: field '%s' must be an integer",
                                         where, key));
  }
  return v.get<std::int64_t>();
}

std::uint64_t need_uint(const Json& j, const char* key, const char* where) {
  const std::int64_t v = need_int(j, key, where);
  if (v < 0) {
    throw Error("bad_value", qfb::strfmt("%s: field '%s' must be >= 0",
                                         where, key));
  }
  return static_cast<std::uint64_t>(v);
}

std::string need_string(const Json& j, const char* key, const char* where) {
  const Json& v = j.at(key);
  if (!v.is_string()) {
    throw Error("bad_value",
                qfb::strfmt("%s: field '%s' must be a string", where, key));
  }
  return v.get<std::string>();
}

qfb::Vec3d vec3_from(const Json& j, const char* where) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() ||
      !j[1].is_number() || !j[2].is_number()) {
    throw Error("bad_value",
                qfb::strfmt("%s: expected an array of 3 numbers", where));
  }
  return qfb::Vec3d(j[0].get<double>(), j[1].get<double>(),
                    j[2].get<double>());
}

void check_unit_couplings(const Json& cfg, const char* where) {
  if (opt_number(cfg, "gamma", 1.0, where) != 1.0 ||
      opt_number(cfg, "delta", 1.0, where) != 1.0) {
    throw Error("config_error",
                qfb::strfmt("%s: stationary analysis is specific to "
                            "gamma = delta = 1",
                            where));
  }
}

struct SymmetricSetup {
  qfb::SymmetricScenario sc;
  double eta = 1.0;
  qfb::ScenarioParts parts;
};

SymmetricSetup symmetric_setup(const Json& cfg, const char* where) {
  SymmetricSetup s;
  s.sc.a = need_number(cfg, "a", where);
  s.sc.f = opt_number(cfg, "f", 0.0, where);
  s.sc.gamma = opt_number(cfg, "gamma", 1.0, where);
  s.sc.delta = opt_number(cfg, "delta", 0.0, where);
  s.eta = opt_number(cfg, "eta", 1.0, where);
  s.parts = qfb::symmetric_scenario_parts(s.sc);
  s.parts.fb.eta = s.eta;
  return s;
}

qfb::Liouvillian setup_generator(const SymmetricSetup& s) {
  if (s.eta == 1.0) return qfb::symmetric_scenario(s.sc);
  return qfb::feedback_liouvillian(s.parts.h, s.parts.k, s.parts.monitored,
                                   s.parts.fb);
}

qfb::Liouvillian custom_generator(const Json& cfg, const char* where) {
  const auto k = qfb::kossakowski_from_json(cfg.at("kossakowski"));
  const auto h = qfb::matrix_from_json(cfg.at("hamiltonian"));
  if (!cfg.contains("feedback")) return qfb::liouvillian(h, k);
  const Json& fj = cfg.at("feedback");
  qfb::require_fields(fj, {"f", "g"}, {"eta"}, "feedback");
  qfb::FeedbackConfig fb;
  fb.f = vec3_from(fj.at("f"), "feedback.f");
  fb.g = vec3_from(fj.at("g"), "feedback.g");
  fb.eta = opt_number(fj, "eta", 1.0, "feedback");
  const auto channels = qfb::lindblad_extract(k);
  if (channels.empty()) {
    throw Error("config_error",
                qfb::strfmt("%s: feedback requires a nonzero dissipator; "
                            "the monitored channel is the dominant one",
                            where));
  }
  return qfb::feedback_liouvillian(h, k, channels.front(), fb);
}

/// Builds the generator named by cfg["scenario"] ("symmetric" or "custom").
qfb::Liouvillian scenario_generator(const Json& cfg, const char* where) {
  const std::string kind = need_string(cfg, "scenario", where);
  if (kind == "symmetric") return setup_generator(symmetric_setup(cfg, where));
  if (kind == "custom") return custom_generator(cfg, where);
  throw Error("config_error",
              qfb::strfmt("%s: scenario must be 'symmetric' or 'custom', "
                          "got '%s'",
                          where, kind.c_str()));
}

qfb::DensityMatrix parse_initial_state(const Json& j) {
  if (j.is_string()) return qfb::catalog(j.get<std::string>());
  return qfb::density_from_json(j);
}

std::vector<double> parse_grid(const Json& j) {
  qfb::require_fields(j, {"t_max", "n_points"}, {}, "grid");
  const double t_max = need_number(j, "t_max", "grid");
  const std::int64_t n = need_int(j, "n_points", "grid");
  if (t_max < 0) {
    throw Error("config_error", "grid: t_max must be >= 0");
  }
  if (n < 1 || n > 2000000) {
    throw Error("config_error", "grid: n_points must be in [1, 2000000]");
  }
  if (t_max == 0.0 || n == 1) {
    return {t_max};
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    grid[static_cast<std::size_t>(k)] =
        t_max * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  return grid;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    qfb::write_text_file(out_path, content);
  }
}

int finish_compute(const std::function<void()>& work) {
  try {
    work();
  } catch (const Error& e) {
    report(e);
    return e.code() == "io_error" ? 1 : 2;
  }
  return 0;
}

int run_evolve(const std::string& cfg_path, const std::string& out_path) {
  Json cfg;
  qfb::Liouvillian lio;
  qfb::DensityMatrix rho0;
  std::vector<double> grid;
  try {
    cfg = load_config(cfg_path);
    const char* where = "evolve config";
    const std::string kind = need_string(cfg, "scenario", where);
    if (kind == "custom") {
      qfb::require_fields(
          cfg, {"scenario", "hamiltonian", "kossakowski", "initial_state",
                "grid"},
          {"feedback"}, where);
    } else {
      qfb::require_fields(cfg, {"scenario", "a", "initial_state", "grid"},
                          {"f", "gamma", "delta", "eta"}, where);
    }
    lio = scenario_generator(cfg, where);
    rho0 = parse_initial_state(cfg.at("initial_state"));
    grid = parse_grid(cfg.at("grid"));
  } catch (const Error& e) {
    report(e);
    return 1;
  }
  return finish_compute([&] {
    const qfb::Trajectory tr = qfb::integrate(lio, rho0, grid);
    emit(out_path, qfb::trajectory_csv(tr, cfg));
  });
}

int run_stationary(const std::string& cfg_path, const std::string& out_path) {
  Json cfg;
  double a = 0;
  std::vector<double> f_values;
  std::vector<double> taus;
  try {
    cfg = load_config(cfg_path);
    const char* where = "stationary config";
    qfb::require_fields(cfg,
                        {"a", "f_values", "tau_min", "tau_max", "tau_step"},
                        {"gamma", "delta"}, where);
    check_unit_couplings(cfg, where);
    a = need_number(cfg, "a", where);
    const Json& fv = cfg.at("f_values");
    if (!fv.is_array() || fv.empty()) {
      throw Error("bad_value", "stationary config: f_values must be a "
                               "nonempty array of numbers");
    }
    for (const Json& v : fv) {
      if (!v.is_number()) {
        throw Error("bad_value", "stationary config: f_values must be a "
                                 "nonempty array of numbers");
      }
      f_values.push_back(v.get<double>());
    }
    const double tau_min = need_number(cfg, "tau_min", where);
    const double tau_max = need_number(cfg, "tau_max", where);
    const double tau_step = need_number(cfg, "tau_step", where);
    if (tau_min < -3.0 || tau_max > 1.0 || tau_min > tau_max) {
      throw Error("tau_out_of_range",
                  qfb::strfmt("correlation sums must satisfy "
                              "-3 <= tau_min <= tau_max <= 1, got [%g, %g]",
                              tau_min, tau_max));
    }
    if (!(tau_step > 0)) {
      throw Error("config_error", "stationary config: tau_step must be > 0");
    }
    const auto n_steps =
        static_cast<std::int64_t>((tau_max - tau_min) / tau_step + 1e-9);
    for (std::int64_t k = 0; k <= n_steps; ++k) {
      taus.push_back(
          std::min(tau_min + tau_step * static_cast<double>(k), 1.0));
    }
  } catch (const Error& e) {
    report(e);
    return 1;
  }
  return finish_compute([&] {
    std::vector<qfb::SurfaceRow> rows;
    for (double f : f_values) {
      for (double tau : taus) {
        const auto ac = qfb::asymptotic_concurrence(tau, a, f);
        rows.push_back({a, f, tau, ac.D1, ac.D2, ac.C});
      }
    }
    emit(out_path, qfb::surface_csv(rows, cfg));
  });
}

int run_entangle_check(const std::string& cfg_path,
                       const std::string& out_path) {
  Json cfg;
  qfb::Liouvillian lio;
  try {
    cfg = load_config(cfg_path);
    const char* where = "entangle-check config";
    const std::string kind = need_string(cfg, "scenario", where);
    if (kind == "custom") {
      qfb::require_fields(cfg, {"scenario", "hamiltonian", "kossakowski"},
                          {"feedback"}, where);
    } else {
      qfb::require_fields(cfg, {"scenario", "a"},
                          {"f", "gamma", "delta", "eta"}, where);
    }
    lio = scenario_generator(cfg, where);
  } catch (const Error& e) {
    report(e);
    return 1;
  }
  return finish_compute([&] {
    qfb::ShortTimeInput in;
    const auto& ktot = lio.kossakowski();
    in.A = ktot.A();
    in.B = ktot.B();
    in.C = ktot.C();
    in.h12 =
        (qfb::fano_decompose(lio.hamiltonian()).rij / 4.0).cast<qfb::cd>();

    const qfb::Mat2 id2 = qfb::Mat2::Identity();
    const qfb::Mat2& flip = qfb::pauli(1);
    const struct {
      const char* name;
      qfb::Mat2 u_loc, v_loc;
    } cases[] = {{"rho1", flip, flip},
                 {"rho2", id2, flip},
                 {"rho3", flip, id2},
                 {"rho4", id2, id2}};

    Json states = Json::object();
    for (const auto& c : cases) {
      qfb::uv_vectors(c.u_loc, c.v_loc, in.u, in.v);
      const auto res = qfb::short_time_entangles(in);
      states[c.name] = Json{
          {"verdict", res.verdict},
          {"lhs", res.lhs},
          {"rhs", res.rhs},
          {"reduced_expression_value", res.lhs - res.rhs}};
    }
    Json out{{"command", "entangle-check"}, {"config", cfg},
             {"states", states}};
    emit(out_path, out.dump(2) + "\n");
  });
}

int run_mc(const std::string& cfg_path, const std::string& out_path,
           bool have_seed, std::uint64_t seed_override) {
  Json cfg;
  SymmetricSetup setup;
  qfb::DensityMatrix rho0;
  std::vector<double> grid;
  qfb::SmeConfig scfg;
  qfb::KossakowskiMatrix k_rest;
  std::int64_t n = 0;
  try {
    cfg = load_config(cfg_path);
    const char* where = "mc config";
    qfb::require_fields(
        cfg, {"scenario", "a", "initial_state", "grid", "seed", "ensemble_n"},
        {"f", "gamma", "delta", "eta", "dt"}, where);
    if (need_string(cfg, "scenario", where) != "symmetric") {
      throw Error("config_error",
                  "mc config: only the symmetric scenario is supported");
    }
    if (have_seed) cfg["seed"] = seed_override;
    setup = symmetric_setup(cfg, where);
    rho0 = parse_initial_state(cfg.at("initial_state"));
    grid = parse_grid(cfg.at("grid"));
    n = need_int(cfg, "ensemble_n", where);
    if (n < 1 || n > 1000000) {
      throw Error("config_error",
                  "mc config: ensemble_n must be in [1, 1000000]");
    }
    scfg.L = setup.parts.monitored;
    scfg.F = qfb::feedback_op(setup.parts.fb);
    scfg.eta = setup.eta;
    scfg.dt = opt_number(cfg, "dt", 1e-3, where);
    scfg.T = grid.back();
    scfg.seed = need_uint(cfg, "seed", where);
    k_rest = qfb::KossakowskiMatrix(
        qfb::Mat6(setup.parts.k.entries() -
                  qfb::kossakowski_of(setup.parts.monitored).entries()));
  } catch (const Error& e) {
    report(e);
    return 1;
  }
  return finish_compute([&] {
    const qfb::Trajectory mean =
        qfb::ensemble_mean(static_cast<int>(n), setup.parts.h, k_rest, scfg,
                           rho0, grid);
    const qfb::Liouvillian ref = setup_generator(setup);
    Json devs = Json::array();
    double max_dev = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto exact = qfb::propagate(ref, rho0, grid[k]);
      const double dev = qfb::max_abs(qfb::Mat4(mean.states[k].m - exact.m));
      max_dev = std::max(max_dev, dev);
      devs.push_back(Json{{"t", grid[k]}, {"value", dev}});
    }
    emit(out_path, qfb::trajectory_csv(mean, cfg));
    Json reportj{{"command", "mc"},
                 {"config", cfg},
                 {"max_deviation", max_dev},
                 {"deviation", devs}};
    std::cout << reportj.dump(2) << "\n";
  });
}

int run_wcl(const std::string& cfg_path, const std::string& out_path) {
  Json cfg;
  qfb::Mat4 h;
  qfb::Vec3d a_diag;
  try {
    cfg = load_config(cfg_path);
    const char* where = "wcl config";
    qfb::require_fields(cfg, {"a_diag"}, {"hamiltonian", "h_span"}, where);
    const bool explicit_h = cfg.contains("hamiltonian");
    const bool span_h = cfg.contains("h_span");
    if (explicit_h == span_h) {
      throw Error("config_error",
                  "wcl config: give exactly one of 'hamiltonian' (16 "
                  "[re, im] pairs) or 'h_span' ({sigma, exchange})");
    }
    a_diag = vec3_from(cfg.at("a_diag"), "wcl a_diag");
    if (explicit_h) {
      h = qfb::matrix_from_json(cfg.at("hamiltonian"));
    } else {
      const Json& span = cfg.at("h_span");
      qfb::require_fields(span, {}, {"sigma", "exchange"}, "h_span");
      qfb::Vec3d sig = qfb::Vec3d::Zero();
      if (span.contains("sigma")) sig = vec3_from(span.at("sigma"), "h_span.sigma");
      const double ex = opt_number(span, "exchange", 0.0, "h_span");
      h = qfb::Mat4::Zero();
      for (int i = 0; i < 3; ++i) h += sig(i) * qfb::sigma_sym(i + 1);
      h += ex * qfb::s_total();
    }
  } catch (const Error& e) {
    report(e);
    return 1;
  }
  return finish_compute([&] {
    const qfb::WclResult res = qfb::wcl_compatible(h, a_diag);
    Json out{{"command", "wcl"},
             {"config", cfg},
             {"compatible", res.compatible},
             {"commutator_norm", res.commutator_norm},
             {"commutator_norm_full", res.commutator_norm_full},
             {"offending_components", res.offending}};
    emit(out_path, out.dump(2) + "\n");
  });
}

int run_optimize(const std::string& cfg_path, const std::string& out_path) {
  Json cfg;
  double a = 0, tau = 0, f_min = 0, f_max = 0;
  try {
    cfg = load_config(cfg_path);
    const char* where = "optimize config";
    qfb::require_fields(cfg, {"a", "tau", "f_min", "f_max"},
                        {"gamma", "delta"}, where);
    check_unit_couplings(cfg, where);
    a = need_number(cfg, "a", where);
    tau = need_number(cfg, "tau", where);
    f_min = need_number(cfg, "f_min", where);
    f_max = need_number(cfg, "f_max", where);
    if (tau < -3.0 || tau > 1.0) {
      throw Error("tau_out_of_range",
                  qfb::strfmt("correlation sum must lie in [-3, 1], got %g",
                              tau));
    }
    if (f_max < f_min) {
      throw Error("empty_range",
                  qfb::strfmt("feedback range [%g, %g] is empty", f_min,
                              f_max));
    }
  } catch (const Error& e) {
    report(e);
    return 1;
  }
  return finish_compute([&] {
    const auto res = qfb::optimize_feedback(a, tau, f_min, f_max);
    Json out{{"command", "optimize"},
             {"config", cfg},
             {"f_star", res.f_star},
             {"C_star", res.c_star}};
    emit(out_path, out.dump(2) + "\n");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit dissipative dynamics with homodyne feedback"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::uint64_t seed_override = 0;

  auto add_common = [&](CLI::App* sub, bool out_required) {
    sub->add_option("--config", config_path, "JSON configuration file")
        ->required();
    auto* out_opt =
        sub->add_option("--out", out_path, "Output file (default: stdout)");
    if (out_required) out_opt->required();
  };

  CLI::App* c_evolve = app.add_subcommand(
      "evolve", "Propagate an initial state on a time grid (CSV)");
  add_common(c_evolve, false);
  CLI::App* c_stationary = app.add_subcommand(
      "stationary", "Asymptotic concurrence surface over a tau sweep (CSV)");
  add_common(c_stationary, false);
  CLI::App* c_entangle = app.add_subcommand(
      "entangle-check",
      "Short-time entanglement criterion for the benchmark states (JSON)");
  add_common(c_entangle, false);
  CLI::App* c_mc = app.add_subcommand(
      "mc", "Ensemble of conditioned trajectories vs the averaged "
            "generator (CSV + JSON report)");
  add_common(c_mc, true);
  c_mc->add_option("--seed", seed_override,
                   "Override the config's ensemble seed");
  CLI::App* c_wcl = app.add_subcommand(
      "wcl", "Hamiltonian/dissipator commutation test (JSON)");
  add_common(c_wcl, false);
  CLI::App* c_optimize = app.add_subcommand(
      "optimize", "Maximize asymptotic concurrence over the feedback "
                  "strength (JSON)");
  add_common(c_optimize, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_evolve->parsed()) return run_evolve(config_path, out_path);
    if (c_stationary->parsed()) return run_stationary(config_path, out_path);
    if (c_entangle->parsed()) return run_entangle_check(config_path, out_path);
    if (c_mc->parsed()) {
      return run_mc(config_path, out_path, c_mc->count("--seed") > 0,
                    seed_override);
    }
    if (c_wcl->parsed()) return run_wcl(config_path, out_path);
    if (c_optimize->parsed()) return run_optimize(config_path, out_path);
  } catch (const Json::exception& e) {
    std::fprintf(stderr, "error [config_error]: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error [internal]: %s\n", e.what());
    return 2;
  }
  return 1;
}
