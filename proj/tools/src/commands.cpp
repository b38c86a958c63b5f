// Copyright 2026 The SAT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sat_cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "config.hpp"
#include "sat/errors.hpp"
#include "sat/jcm_assistant.hpp"
#include "sat/spin_assistant.hpp"
#include "sat/tomography.hpp"

namespace sat::cli {

namespace {

constexpr double kMicro = 1e-6;

// ---------------------------------------------------------------------------
// Output artifacts

using Value = std::variant<double, std::int64_t, std::string, bool, Vec3>;

struct Report {
  std::vector<std::pair<std::string, Value>> fields;

  void add(std::string key, Value v) { fields.emplace_back(std::move(key), std::move(v)); }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

using Artifact = std::variant<Report, Table>;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) return fmt(x);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else return fmt(x(0)) + "," + fmt(x(1)) + "," + fmt(x(2));
      },
      v);
}

std::string render_csv(const Artifact& a) {
  std::ostringstream os;
  if (const auto* t = std::get_if<Table>(&a)) {
    for (std::size_t i = 0; i < t->columns.size(); ++i) os << (i ? "," : "") << t->columns[i];
    os << '\n';
    for (const auto& row : t->rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt(row[i]);
      os << '\n';
    }
    return os.str();
  }
  const auto& r = std::get<Report>(a);
  std::string head, body;
  for (const auto& [key, v] : r.fields) {
    const std::string sep = head.empty() ? "" : ",";
    if (std::holds_alternative<Vec3>(v)) {
      head += sep + key + "_x," + key + "_y," + key + "_z";
    } else {
      head += sep + key;
    }
    body += sep + csv_cell(v);
  }
  os << head << '\n' << body << '\n';
  return os.str();
}

std::string render_json(const Artifact& a) {
  nlohmann::ordered_json j;
  if (const auto* t = std::get_if<Table>(&a)) {
    j["columns"] = t->columns;
    j["rows"] = t->rows;
  } else {
    for (const auto& [key, v] : std::get<Report>(a).fields) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Vec3>) j[key] = {x(0), x(1), x(2)};
            else j[key] = x;
          },
          v);
    }
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Config parsing

// Re-labels library argument errors with the config key they came from.
template <typename F>
auto keyed(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw ConfigError(key, e.what());
  }
}

BlochState planted_state(const Config& c) {
  const Vec3 r = c.vec3("planted_r");
  return keyed("planted_r", [&] { return BlochState(r); });
}

spin::AssistantPurity purity(const Config& c, std::optional<double> fallback) {
  const double lambda = fallback && !c.has("lambda") ? *fallback : c.number("lambda");
  return keyed("lambda", [&] { return spin::AssistantPurity(lambda); });
}

tomo::SpinScheme spin_scheme(const Config& c) {
  const std::string ham = c.text_or("hamiltonian", "");
  if (!ham.empty()) {
    const spin::AssistantPurity lambda = purity(c, std::nullopt);
    const double t = c.number_or("t", 1.0);
    CMatrix h;
    if (ham == "pure") {
      h = spin::pure_hamiltonian();
    } else if (ham == "heisenberg_optimum") {
      h = spin::heisenberg_hamiltonian(spin::presets::heisenberg_optimum()).hamiltonian;
    } else if (ham == "heisenberg") {
      spin::HeisenbergParams hp;
      hp.jx = c.number_or("jx", 0.0);
      hp.jy = c.number_or("jy", 0.0);
      hp.jz = c.number_or("jz", 0.0);
      hp.hx = c.number_or("hx", 0.0);
      hp.hy = c.number_or("hy", 0.0);
      hp.hz = c.number_or("hz", 0.0);
      h = spin::heisenberg_general(hp);
    } else {
      throw ConfigError("hamiltonian", "expected pure, heisenberg or heisenberg_optimum");
    }
    return tomo::SpinScheme::from_unitary(unitary_exp(h, t), lambda.value());
  }

  const std::string preset = c.text_or("preset", "");
  spin::SpinSchemeParams p;
  std::optional<double> default_lambda;
  if (preset == "disordered") {
    p = spin::presets::disordered_optimum();
    default_lambda = 0.0;
  } else if (preset == "pure") {
    p = spin::presets::pure_optimum();
    default_lambda = 1.0;
  } else if (!preset.empty()) {
    throw ConfigError("preset", "expected disordered or pure");
  } else {
    p.theta = c.number("theta_rad");
    p.phi = c.number("phi_rad");
    p.psi = c.number("psi_rad");
  }
  if (!preset.empty()) {
    p.theta = c.number_or("theta_rad", p.theta);
    p.phi = c.number_or("phi_rad", p.phi);
    p.psi = c.number_or("psi_rad", p.psi);
  }
  if (c.has("xi")) p.xi = c.unit_vector("xi");
  if (c.has("chi")) p.chi = c.unit_vector("chi");
  if (c.has("eta")) p.eta = c.unit_vector("eta");
  if (c.has("zeta")) p.zeta = c.unit_vector("zeta");
  keyed("spin parameters", [&] {
    p.validate();
    return 0;
  });
  const spin::AssistantPurity lambda = purity(c, default_lambda);
  return tomo::SpinScheme::from_params(p, lambda.value());
}

jcm::JcmConfig jcm_config(const Config& c) {
  jcm::JcmConfig cfg;
  cfg.detuning = c.number("detuning_rad_per_s");
  cfg.coupling = c.number("g_rad_per_s");
  if (c.has("mean_photons")) {
    if (c.has("alpha_re") || c.has("alpha_im")) {
      throw ConfigError("mean_photons", "give either mean_photons or alpha_re/alpha_im");
    }
    const double nbar = c.number("mean_photons");
    if (nbar < 0.0) throw ConfigError("mean_photons", "must be >= 0");
    cfg.alpha = std::sqrt(nbar);
  } else {
    cfg.alpha = Complex(c.number_or("alpha_re", 0.0), c.number_or("alpha_im", 0.0));
  }
  const std::int64_t dim = c.integer_or("fock_dim", 0);
  if (dim < 0 || dim > 100000) throw ConfigError("fock_dim", "out of range");
  cfg.fock_dim = static_cast<int>(dim);
  keyed("jcm parameters", [&] {
    cfg.validate();
    return 0;
  });
  return cfg;
}

std::vector<double> linear_grid(const Config& c, const std::string& stem) {
  const double start = c.number(stem + "_start_us");
  const double stop = c.number(stem + "_stop_us");
  const std::int64_t points = c.integer(stem + "_points");
  if (points < 1 || points > 10'000'000) throw ConfigError(stem + "_points", "must be in [1, 1e7]");
  if (points > 1 && !(stop > start)) throw ConfigError(stem + "_stop_us", "must exceed the start");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (std::int64_t i = 0; i < points; ++i) {
    const double frac = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    grid[static_cast<std::size_t>(i)] = (start + frac * (stop - start)) * kMicro;
  }
  return grid;
}

std::optional<std::int64_t> shots(const Config& c) {
  const bool exact = c.flag_or("exact", false);
  if (c.has("shots")) {
    if (exact) throw ConfigError("shots", "conflicts with exact");
    const std::int64_t n = c.integer("shots");
    if (n < 1) throw ConfigError("shots", "must be >= 1");
    return n;
  }
  return std::nullopt;
}

std::uint64_t seed(const Config& c) {
  const std::int64_t s = c.integer_or("seed", 0);
  if (s < 0) throw ConfigError("seed", "must be >= 0");
  return static_cast<std::uint64_t>(s);
}

Report roundtrip_report(const std::string& kind, const tomo::RoundTripReport& rep) {
  Report out;
  out.add("scheme", kind);
  out.add("planted", rep.planted.vector());
  out.add("recovered", rep.recovered);
  out.add("abs_error", rep.abs_error);
  out.add("max_abs_error", rep.abs_error.maxCoeff());
  out.add("determinant", rep.determinant);
  out.add("condition_number", rep.condition_number);
  if (rep.n_shots) {
    out.add("shots", *rep.n_shots);
  } else {
    out.add("shots", std::string("exact"));
  }
  if (rep.std_error) out.add("std_error", *rep.std_error);
  out.add("inconsistent", rep.inconsistent);
  return out;
}

// ---------------------------------------------------------------------------
// Commands

Artifact spin_recover(const Config& c) {
  const tomo::SpinScheme scheme = spin_scheme(c);
  const BlochState r = planted_state(c);
  const auto n = shots(c);
  const std::uint64_t s = seed(c);
  c.reject_unused();
  return roundtrip_report("spin", tomo::roundtrip(scheme, r, n, s));
}

Artifact spin_optimize(const Config& c) {
  const spin::AssistantPurity lambda = purity(c, std::nullopt);
  spin::OptimizerOptions opts;
  opts.budget = static_cast<int>(std::clamp<std::int64_t>(c.integer_or("budget", opts.budget), -1, 1'000'000'000));
  opts.restarts = static_cast<int>(std::clamp<std::int64_t>(c.integer_or("restarts", opts.restarts), -1, 10'000));
  opts.seed = seed(c);
  if (c.has("fixed_psi_rad")) opts.fixed_psi = c.number("fixed_psi_rad");
  c.reject_unused();
  const spin::OptimizationResult res = keyed("budget", [&] { return spin::optimize_determinant(lambda, opts); });

  Report out;
  out.add("lambda", lambda.value());
  out.add("theta_rad", res.params.theta);
  out.add("phi_rad", res.params.phi);
  out.add("psi_rad", res.params.psi);
  out.add("xi", res.params.xi);
  out.add("chi", res.params.chi);
  out.add("eta", res.params.eta);
  out.add("zeta", res.params.zeta);
  out.add("determinant", res.determinant);
  out.add("abs_determinant", std::abs(res.determinant));
  out.add("evaluations", static_cast<std::int64_t>(res.evaluations));
  out.add("seed", static_cast<std::int64_t>(opts.seed));
  return out;
}

Artifact jcm_sweep(const Config& c) {
  tomo::JcmScheme scheme{jcm_config(c), 0.0, 0.0};
  Table table;
  if (c.has("t0_start_us")) {
    const std::vector<double> grid = linear_grid(c, "t0");
    const std::vector<double> sigmas_us2 = c.numbers("sigma_us2");
    c.reject_unused();
    table.columns = {"t0_us", "sigma", "det_avg"};
    for (double s : sigmas_us2) {
      if (!(s >= 0.0)) throw ConfigError("sigma_us2", "must be >= 0");
      scheme.sigma = s * kMicro * kMicro;
      for (const auto& row : tomo::sweep(scheme, "t0", grid)) {
        table.rows.push_back({row.value / kMicro, s, row.determinant});
      }
    }
  } else {
    const std::vector<double> grid = linear_grid(c, "t");
    c.reject_unused();
    table.columns = {"t_us", "det"};
    for (const auto& row : tomo::sweep(scheme, "t", grid)) {
      table.rows.push_back({row.value / kMicro, row.determinant});
    }
  }
  return table;
}

Artifact jcm_recover(const Config& c) {
  const jcm::JcmConfig cfg = jcm_config(c);
  const double t = c.number("t_us") * kMicro;
  const MeasurementTriple m{c.number("sigma_z"), c.number("photon_number"), c.number("correlator")};
  c.reject_unused();
  const Reconstruction rec = jcm::reconstruct(m, cfg, t);
  const LinearSystem sys = jcm::measurement_matrix(cfg, t);
  Report out;
  out.add("scheme", std::string("jcm"));
  out.add("recovered", rec.r);
  out.add("determinant", rec.determinant);
  out.add("condition_number", sys.condition_number);
  out.add("inconsistent", rec.inconsistent);
  return out;
}

Artifact roundtrip(const Config& c) {
  const std::string kind = c.text_or("scheme", "");
  tomo::Scheme scheme;
  if (kind == "spin") {
    scheme = spin_scheme(c);
  } else if (kind == "jcm") {
    scheme = tomo::JcmScheme{jcm_config(c), c.number("t_us") * kMicro, 0.0};
  } else {
    throw ConfigError("scheme", "expected spin or jcm");
  }
  const BlochState r = planted_state(c);
  const auto n = shots(c);
  const std::uint64_t s = seed(c);
  c.reject_unused();
  return roundtrip_report(kind, tomo::roundtrip(scheme, r, n, s));
}

struct Command {
  const char* name;
  const char* help;
  Artifact (*fn)(const Config&);
  const char* default_format;
};

constexpr Command kCommands[] = {
    {"spin-recover", "Reconstruct a planted Bloch vector with the spin assistant", spin_recover, "json"},
    {"spin-optimize", "Maximize the spin-scheme determinant", spin_optimize, "json"},
    {"jcm-sweep", "Field-assistant determinant (or its Gaussian average) on a time grid", jcm_sweep, "csv"},
    {"jcm-recover", "Invert measured field-assistant averages", jcm_recover, "json"},
    {"roundtrip", "Simulate and reconstruct with either scheme", roundtrip, "json"},
};

struct Flags {
  std::string config;
  std::optional<std::int64_t> seed;
  std::optional<std::int64_t> shots;
  bool exact = false;
  std::string out;
  std::string format;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-apparatus qubit state tomography", "sat"};
  app.require_subcommand(1);
  Flags flags;
  std::map<const CLI::App*, const Command*> lookup;
  for (const Command& cmd : kCommands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--config", flags.config, "Flat JSON configuration file");
    sub->add_option("--seed", flags.seed, "RNG seed")->check(CLI::NonNegativeNumber);
    auto* shots_opt = sub->add_option("--shots", flags.shots, "Number of measurement shots")
                          ->check(CLI::PositiveNumber);
    sub->add_flag("--exact", flags.exact, "Use exact expectation values")->excludes(shots_opt);
    sub->add_option("--out", flags.out, "Output file (default: stdout)");
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    lookup[sub] = &cmd;
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("sat");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const Command* cmd = nullptr;
  for (const auto& [sub, c] : lookup) {
    if (sub->parsed()) cmd = c;
  }

  try {
    Config cfg = flags.config.empty() ? Config() : Config::from_file(flags.config);
    if (flags.seed) cfg.set("seed", *flags.seed);
    if (flags.shots) {
      cfg.set("shots", *flags.shots);
      cfg.set("exact", false);
    }
    if (flags.exact) {
      cfg.set("exact", true);
      cfg.set("shots", nullptr);
    }
    if (!flags.out.empty()) cfg.set("out", flags.out);
    if (!flags.format.empty()) cfg.set("format", flags.format);

    const std::string format = cfg.text_or("format", cmd->default_format);
    if (format != "csv" && format != "json") throw ConfigError("format", "expected csv or json");
    const std::string out_path = cfg.text_or("out", "");

    const Artifact artifact = cmd->fn(cfg);
    const std::string text = format == "csv" ? render_csv(artifact) : render_json(artifact);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw ConfigError("out", "cannot write '" + out_path + "'");
      file << text;
    }
    return kSuccess;
  } catch (const SingularSchemeError& e) {
    err << "error: " << e.what() << '\n';
    return kSingularScheme;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace sat::cli
