// Copyright 2026 The specmode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specmode/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>

#include "specmode/errors.hpp"
#include "specmode/hardness.hpp"
#include "specmode/json_io.hpp"
#include "specmode/photonic_sim.hpp"
#include "specmode/spectral.hpp"

namespace specmode::cli {
namespace {

using nlohmann::json;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  std::string config;
  std::string out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> budget;
  std::optional<int> n;
  std::optional<int> n_hard;
  std::optional<int> m;
  std::optional<double> epsilon;
  std::optional<double> purity;
  std::optional<double> fmin;
  bool oracle = false;
};

// ---------------------------------------------------------------------------
// Tabular output, rendered as CSV or JSON.

struct Cell {
  enum class Kind { Number, String, Bool, Null };
  std::string text;
  Kind kind = Kind::Number;

  static Cell number(double x) { return {format_double(x), Kind::Number}; }
  static Cell integer(std::int64_t x) { return {std::to_string(x), Kind::Number}; }
  static Cell string(std::string_view s) { return {std::string(s), Kind::String}; }
  static Cell boolean(bool b) { return {b ? "true" : "false", Kind::Bool}; }
  static Cell null() { return {"", Kind::Null}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string csv() const {
    std::string s;
    for (std::size_t c = 0; c < columns.size(); ++c) s += (c ? "," : "") + columns[c];
    s += '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) s += (c ? "," : "") + row[c].text;
      s += '\n';
    }
    return s;
  }

  std::string row_json(const std::vector<Cell>& row) const {
    JsonObjectWriter w;
    for (std::size_t c = 0; c < row.size(); ++c) {
      switch (row[c].kind) {
        case Cell::Kind::String: w.field(columns[c], std::string_view(row[c].text)); break;
        case Cell::Kind::Null: w.null_field(columns[c]); break;
        default: w.raw_field(columns[c], row[c].text); break;
      }
    }
    return w.str();
  }

  std::string json_array() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows.size(); ++r) s += (r ? ",\n" : "\n") + row_json(rows[r]);
    return s + "\n]\n";
  }
};

enum class Format { Csv, Json };

Format output_format(const json& config, Format fallback) {
  if (!config.contains("format")) return fallback;
  const std::string f = config.at("format").get<std::string>();
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw ConfigError("format must be csv or json");
}

std::string render(const Table& t, Format f) { return f == Format::Csv ? t.csv() : t.json_array(); }

// ---------------------------------------------------------------------------
// Config access.

json load_config(const Flags& flags) {
  json config = json::object();
  if (!flags.config.empty()) {
    std::ifstream in(flags.config);
    if (!in) throw ConfigError("cannot open config file " + flags.config);
    try {
      config = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!config.is_object()) throw ConfigError("config must be a JSON object");
  }
  // Flags win over the config file.
  if (flags.format) config["format"] = *flags.format;
  if (flags.seed) config["seed"] = *flags.seed;
  if (flags.samples) config["samples"] = *flags.samples;
  if (flags.budget) config["budget"] = *flags.budget;
  if (flags.n) config["n"] = *flags.n;
  if (flags.n_hard) config["n_hard"] = *flags.n_hard;
  if (flags.m) config["m"] = *flags.m;
  if (flags.epsilon) config["epsilon"] = *flags.epsilon;
  if (flags.purity) config["purity"] = *flags.purity;
  if (flags.fmin) config["fmin"] = *flags.fmin;
  if (flags.oracle) config["oracle"] = true;
  return config;
}

const json& required(const json& c, const char* key) {
  if (!c.contains(key)) throw ConfigError(std::string("missing required parameter \"") + key + "\"");
  return c.at(key);
}

int get_int(const json& c, const char* key) {
  const json& v = required(c, key);
  if (!v.is_number_integer()) throw ConfigError(std::string(key) + " must be an integer");
  return v.get<int>();
}

int get_int(const json& c, const char* key, int fallback) {
  return c.contains(key) ? get_int(c, key) : fallback;
}

std::uint64_t get_u64(const json& c, const char* key, std::uint64_t fallback) {
  if (!c.contains(key)) return fallback;
  const json& v = c.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

double get_double(const json& c, const char* key) {
  const json& v = required(c, key);
  if (!v.is_number()) throw ConfigError(std::string(key) + " must be a number");
  return v.get<double>();
}

std::optional<double> get_optional_double(const json& c, const char* key) {
  if (!c.contains(key)) return std::nullopt;
  return get_double(c, key);
}

struct IntRange {
  int min;
  int max;
};

// Either an integer (single point) or {"min":a,"max":b}.
IntRange int_range(const json& c, const char* key, IntRange fallback) {
  if (!c.contains(key)) return fallback;
  const json& v = c.at(key);
  IntRange r{};
  if (v.is_number_integer()) {
    r = {v.get<int>(), v.get<int>()};
  } else if (v.is_object()) {
    r = {get_int(v, "min"), get_int(v, "max")};
  } else {
    throw ConfigError(std::string(key) + " must be an integer or {\"min\",\"max\"}");
  }
  if (r.min > r.max) throw ConfigError(std::string(key) + " range is empty");
  return r;
}

// Either a number (single point) or {"min":a,"max":b,"steps":k}.
std::vector<double> real_grid(const json& c, const char* key, double min, double max, int steps) {
  if (c.contains(key)) {
    const json& v = c.at(key);
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_object()) throw ConfigError(std::string(key) + " must be a number or a grid object");
    min = get_double(v, "min");
    max = get_double(v, "max");
    steps = get_int(v, "steps");
  }
  if (steps <= 0) throw ConfigError(std::string(key) + " grid needs steps > 0");
  if (min > max) throw ConfigError(std::string(key) + " grid range is empty");
  return linear_grid(min, max, steps);
}

MixtureWeights weights_from_config(const json& c) {
  if (c.contains("weights")) {
    const json& w = c.at("weights");
    if (!w.is_array()) throw ConfigError("weights must be an array");
    Eigen::VectorXd v(static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) v[static_cast<Eigen::Index>(i)] = w[i].get<double>();
    return MixtureWeights(std::move(v));
  }
  return MixtureWeights::uniform(get_int(c, "b"));
}

std::vector<PhotonSource> photons_from_config(const json& c) {
  if (c.contains("photons")) {
    std::optional<FunctionBasis> basis;
    if (c.contains("basis")) basis = basis_from_json(c.at("basis"));
    const json& list = c.at("photons");
    if (!list.is_array()) throw ConfigError("photons must be an array");
    std::vector<PhotonSource> photons;
    for (const json& p : list) photons.push_back(photon_from_json(p, basis ? &*basis : nullptr));
    return photons;
  }
  if (!c.contains("preset")) throw ConfigError("config needs \"photons\" or \"preset\"");
  const std::string preset = c.at("preset").get<std::string>();
  const int n = get_int(c, "n");
  if (preset == "identical_pure") return identical_pure_sources(n);
  if (preset == "distinguishable") return distinguishable_pure_sources(n);
  if (preset == "worst_case") return worst_case_pure_sources(get_double(c, "fmin"), n);
  if (preset == "best_case") return best_case_pure_sources(get_double(c, "fmin"), n);
  if (preset == "iid_mixed") return iid_mixed_sources(weights_from_config(c), n);
  throw ConfigError("unknown preset \"" + preset + "\"");
}

HardnessQuery query_from_config(const json& c) {
  return HardnessQuery(photons_from_config(c), get_int(c, "n_hard"), get_double(c, "epsilon"));
}

// ---------------------------------------------------------------------------
// phard

Table hardness_table(const HardnessResult& r, std::optional<double> epsilon) {
  Table t;
  t.columns = {"p_hard", "method", "std_error", "seed", "terms", "epsilon", "exceeds_epsilon",
               "disclaimer"};
  t.rows.push_back({Cell::number(r.p_hard), Cell::string(to_string(r.method)),
                    r.std_error ? Cell::number(*r.std_error) : Cell::null(),
                    r.seed ? Cell{std::to_string(*r.seed), Cell::Kind::Number} : Cell::null(),
                    r.terms ? Cell{std::to_string(*r.terms), Cell::Kind::Number} : Cell::null(),
                    epsilon ? Cell::number(*epsilon) : Cell::null(),
                    epsilon ? Cell::boolean(r.exceeds(*epsilon)) : Cell::null(),
                    Cell::string(kHardnessDisclaimer)});
  return t;
}

std::string emit_hardness(const HardnessResult& r, std::optional<double> epsilon, Format f) {
  if (f == Format::Json) return hardness_result_json(r, epsilon) + "\n";
  return hardness_table(r, epsilon).csv();
}

std::string emit_bound(const char* kind, const char* parameter, double value, int n, int n_hard,
                       const TailBound& bound, std::optional<double> epsilon, Format f) {
  Table t;
  t.columns = {"bound", parameter, "n", "n_hard", "p_hard_lower_bound", "n_hard_exceeds_n",
               "epsilon", "exceeds_epsilon", "disclaimer"};
  t.rows.push_back({Cell::string(kind), Cell::number(value), Cell::integer(n), Cell::integer(n_hard),
                    Cell::number(bound.value), Cell::boolean(bound.n_hard_exceeds_n),
                    epsilon ? Cell::number(*epsilon) : Cell::null(),
                    epsilon ? Cell::boolean(bound.value > *epsilon) : Cell::null(),
                    Cell::string(kHardnessDisclaimer)});
  return f == Format::Csv ? t.csv() : t.row_json(t.rows.front()) + "\n";
}

std::string cmd_phard(const std::string& verb, const json& c, std::ostream& err) {
  const Format f = output_format(c, Format::Json);
  if (verb == "exact") {
    const HardnessQuery q = query_from_config(c);
    EnumerationOptions options;
    options.budget = get_u64(c, "budget", kDefaultEnumerationBudget);
    return emit_hardness(p_hard_exact(q, options), q.epsilon(), f);
  }
  if (verb == "mc") {
    const HardnessQuery q = query_from_config(c);
    const std::uint64_t samples = get_u64(c, "samples", 1'000'000);
    const std::uint64_t seed = get_u64(c, "seed", 0);
    return emit_hardness(p_hard_monte_carlo(q, samples, seed), q.epsilon(), f);
  }
  if (verb == "iid") {
    std::optional<MixtureWeights> weights;
    int n = 0;
    if (c.contains("photons") || c.contains("preset")) {
      const std::vector<PhotonSource> photons = photons_from_config(c);
      for (const PhotonSource& p : photons) {
        if (!p.is_mixed() || !(p == photons.front())) {
          throw ConfigError("iid requires identical mixed photons");
        }
      }
      weights = photons.front().mixed();
      n = static_cast<int>(photons.size());
    } else {
      weights = weights_from_config(c);
      n = get_int(c, "n");
    }
    const HardnessResult r = p_hard_iid_exact(static_cast<int>(weights->size()), n,
                                              get_int(c, "n_hard"), *weights);
    return emit_hardness(r, get_optional_double(c, "epsilon"), f);
  }
  if (verb == "bound-purity" || verb == "bound-fidelity") {
    const bool purity = verb == "bound-purity";
    const double value = get_double(c, purity ? "purity" : "fmin");
    const int n = get_int(c, "n");
    const int n_hard = get_int(c, "n_hard");
    const TailBound b = purity ? p_hard_lower_bound_mixed(value, n, n_hard)
                               : p_hard_lower_bound_fidelity(value, n, n_hard);
    if (b.n_hard_exceeds_n) err << "warning: n_hard > n, the bound is 0\n";
    return emit_bound(purity ? "purity" : "fidelity", purity ? "purity" : "F_min", value, n, n_hard,
                      b, get_optional_double(c, "epsilon"), f);
  }
  throw ConfigError("unknown phard verb " + verb);
}

// ---------------------------------------------------------------------------
// figure

std::string cmd_figure(const std::string& verb, const json& c) {
  const Format f = output_format(c, Format::Csv);
  Table t;
  if (verb == "purity" || verb == "fidelity") {
    const bool purity = verb == "purity";
    const std::vector<double> grid =
        real_grid(c, purity ? "P" : "F_min", 0.0, 1.0, 20);
    const IntRange ns = int_range(c, "n", {1, 20});
    if (ns.min < 1) throw ConfigError("n must be >= 1");
    const int n_hard = get_int(c, "n_hard");
    t.columns = {"n", purity ? "P" : "F_min", "bound"};
    for (int n = ns.min; n <= ns.max; ++n) {
      for (double x : grid) {
        const TailBound b = purity ? p_hard_lower_bound_mixed(x, n, n_hard)
                                   : p_hard_lower_bound_fidelity(x, n, n_hard);
        t.rows.push_back({Cell::integer(n), Cell::number(x), Cell::number(b.value)});
      }
    }
    return render(t, f);
  }
  if (verb == "region") {
    const std::vector<double> grid = real_grid(c, "F_min", 0.0, 1.0, 100);
    const double epsilon = get_double(c, "epsilon");
    const std::string vary = c.contains("vary") ? c.at("vary").get<std::string>() : "n_hard";
    if (vary != "n" && vary != "n_hard") throw ConfigError("vary must be n or n_hard");
    t.columns = {"F_min", vary, "bound", "in_region"};
    const IntRange range = int_range(c, vary.c_str(), vary == "n" ? IntRange{3, 20} : IntRange{2, 9});
    for (int k = range.min; k <= range.max; ++k) {
      const int n = vary == "n" ? k : get_int(c, "n");
      const int n_hard = vary == "n" ? get_int(c, "n_hard") : k;
      for (const RegionRow& row : inequality_region(grid, n, n_hard, epsilon)) {
        t.rows.push_back({Cell::number(row.f_min), Cell::integer(k), Cell::number(row.lower_bound),
                          Cell::boolean(row.in_region)});
      }
    }
    return render(t, f);
  }
  throw ConfigError("unknown figure verb " + verb);
}

// ---------------------------------------------------------------------------
// simulate

UnitaryMatrix unitary_from_config(const json& c, int default_modes) {
  const int m = get_int(c, "m", default_modes);
  const std::uint64_t seed = get_u64(c, "seed", 0);
  if (!c.contains("unitary")) return haar_random_unitary(m, seed);
  const json& u = c.at("unitary");
  if (u.is_string()) {
    const std::string kind = u.get<std::string>();
    if (kind == "haar") return haar_random_unitary(m, seed);
    if (kind == "identity") return UnitaryMatrix::identity(m);
    if (kind == "beamsplitter") return UnitaryMatrix::beamsplitter();
    throw ConfigError("unknown unitary \"" + kind + "\"");
  }
  if (u.is_object() && u.contains("file")) {
    std::ifstream in(u.at("file").get<std::string>());
    if (!in) throw ConfigError("cannot open unitary file");
    try {
      return unitary_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("unitary file parse error: ") + e.what());
    }
  }
  if (u.is_object() && u.contains("matrix")) return unitary_from_json(u.at("matrix"));
  if (u.is_object() && u.contains("permutation")) {
    const std::vector<int> target = u.at("permutation").get<std::vector<int>>();
    return UnitaryMatrix::permutation(target);
  }
  throw ConfigError("unitary must be haar, identity, beamsplitter, {file}, {matrix} or {permutation}");
}

Table distribution_table(const OutputDistribution& d) {
  Table t;
  for (int k = 0; k < d.modes; ++k) t.columns.push_back("n_" + std::to_string(k));
  t.columns.push_back("probability");
  for (std::size_t s = 0; s < d.size(); ++s) {
    std::vector<Cell> row;
    for (int count : d.configurations[s].counts) row.push_back(Cell::integer(count));
    row.push_back(Cell::number(d.probabilities[s]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void report_cost(std::ostream& err, const CostEstimate& cost) {
  err << "cost estimate: configurations=" << cost.configurations << " instances=" << cost.instances
      << " permanent_size=" << cost.permanent_size << " flops~" << cost.permanent_flops << '\n';
}

std::string cmd_simulate(const std::string& verb, const json& c, std::ostream& err) {
  const Format f = output_format(c, Format::Csv);
  if (verb == "hom") {
    const double fid = get_double(c, "fmin");
    if (!(fid >= 0.0 && fid <= 1.0)) throw ConfigError("fmin must lie in [0, 1]");
    Eigen::VectorXcd second(2);
    second << std::sqrt(fid), std::sqrt(1.0 - fid);
    const std::vector<PhotonSource> photons = {SpectralAmplitudes::basis_state(0, 2),
                                               SpectralAmplitudes(second)};
    const OutputDistribution d = spatial_distribution_pure(UnitaryMatrix::beamsplitter(), photons);
    Table t;
    t.columns = {"F", "coincidence", "reference"};
    t.rows.push_back({Cell::number(fid), Cell::number(d.probability({{1, 1}})),
                      Cell::number((1.0 - fid) / 2.0)});
    return render(t, f);
  }
  if (verb == "ideal") {
    OutputConfiguration input;
    int m = 0;
    if (c.contains("input")) {
      input.counts = c.at("input").get<std::vector<int>>();
      m = input.modes();
    } else {
      const int n = get_int(c, "n");
      m = get_int(c, "m", n * n);
      input = standard_input(m, n);
    }
    const UnitaryMatrix u = unitary_from_config(c, m);
    if (u.modes() != input.modes()) {
      throw ConfigError("input has " + std::to_string(input.modes()) + " modes but the unitary has " +
                        std::to_string(u.modes()));
    }
    report_cost(err, estimate_ideal_cost(u.modes(), input.photons()));
    return render(distribution_table(output_distribution(u, input)), f);
  }
  if (verb == "pure" || verb == "mixed") {
    const std::vector<PhotonSource> photons = photons_from_config(c);
    const int n = static_cast<int>(photons.size());
    const UnitaryMatrix u = unitary_from_config(c, n * n);
    int b = 0;
    for (const PhotonSource& p : photons) b = std::max(b, static_cast<int>(p.basis_size()));
    if (verb == "pure") {
      // Wider bases are reduced to the photons' span before simulation.
      report_cost(err, estimate_enlarged_cost(u.modes(), n, std::min(b, n)));
      return render(distribution_table(spatial_distribution_pure(u, photons)), f);
    }
    report_cost(err, estimate_mixture_cost(u.modes(), n, b));
    const OutputDistribution d = spatial_distribution_mixed(u, photons);
    if (c.value("oracle", false)) {
      const OutputDistribution oracle = spatial_distribution_dephased(u, photons);
      err << "oracle max_abs_deviation=" << format_double(max_abs_deviation(d, oracle)) << '\n';
    }
    return render(distribution_table(d), f);
  }
  throw ConfigError("unknown simulate verb " + verb);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + tmp.string());
    file << text;
    if (!file.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void add_flags(CLI::App* app, Flags& flags) {
  app->add_option("--config", flags.config, "JSON config file");
  app->add_option("--out", flags.out, "Output path (stdout if omitted)");
  app->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--seed", flags.seed, "RNG seed");
  app->add_option("--samples", flags.samples, "Monte-Carlo samples");
  app->add_option("--n", flags.n, "Photon count");
  app->add_option("--n-hard", flags.n_hard, "Hardness threshold");
  app->add_option("--epsilon", flags.epsilon, "Threshold epsilon for p_hard > epsilon");
  app->add_option("--purity", flags.purity, "Single-photon purity");
  app->add_option("--fmin", flags.fmin, "Worst-case pairwise fidelity");
  app->add_option("--m", flags.m, "Spatial mode count");
  app->add_option("--budget", flags.budget, "Enumeration budget");
  app->add_flag("--oracle", flags.oracle, "Cross-check mixed simulation against the enlarged space");
}

}  // namespace

std::vector<double> linear_grid(double min, double max, int steps) {
  if (steps <= 0) throw std::invalid_argument("grid needs steps > 0");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps) + 1);
  const double h = (max - min) / steps;
  for (int i = 0; i < steps; ++i) grid.push_back(min + i * h);
  grid.push_back(max);
  return grid;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && cells.size() != rows.front().size()) {
      throw std::invalid_argument("CSV row " + std::to_string(rows.size()) + " has " +
                                  std::to_string(cells.size()) + " columns, header has " +
                                  std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boson-sampling hardness and distinguishability toolkit", "specmode"};
  app.require_subcommand(1);
  Flags flags;
  std::string group;
  std::string verb;

  const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
      {"phard", {"exact", "iid", "mc", "bound-purity", "bound-fidelity"}},
      {"figure", {"purity", "fidelity", "region"}},
      {"simulate", {"ideal", "pure", "mixed", "hom"}},
  };
  for (const auto& [name, verbs] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->require_subcommand(1);
    for (const std::string& v : verbs) {
      CLI::App* leaf = sub->add_subcommand(v);
      add_flags(leaf, flags);
      leaf->callback([&group, &verb, name = name, v] {
        group = name;
        verb = v;
      });
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    const json config = load_config(flags);
    std::string text;
    if (group == "phard") {
      text = cmd_phard(verb, config, err);
    } else if (group == "figure") {
      text = cmd_figure(verb, config);
    } else {
      text = cmd_simulate(verb, config, err);
    }
    write_output(flags.out, text, out);
    return kExitOk;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return kExitBudgetError;
  } catch (const ConvergenceError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace specmode::cli
