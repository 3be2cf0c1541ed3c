// Copyright 2026 The fldrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fldrank/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "fldrank/centrality.hpp"
#include "fldrank/evaluation.hpp"
#include "fldrank/measures.hpp"
#include "fldrank/si.hpp"

namespace fldrank::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<long long, double, std::string, bool>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string fixed6(double x) {
  std::string s = fmt::format("{:.6f}", x);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return fixed6(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "1" : "0";
        else if constexpr (std::is_same_v<T, std::string>) return csv_quote(v);
        else return std::to_string(v);
      },
      c);
}

json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          // Same value the CSV shows.
          const std::string s = fixed6(v);
          double parsed = 0.0;
          std::from_chars(s.data(), s.data() + s.size(), parsed);
          return parsed;
        } else {
          return v;
        }
      },
      c);
}

std::string render(const Table& t, const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = json_cell(row[i]);
      rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
  }
  std::string s;
  for (std::size_t i = 0; i < t.header.size(); ++i) s += (i ? "," : "") + t.header[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += csv_cell(row[i]);
    }
    s += '\n';
  }
  return s;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

double parse_double(const std::string& text, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(fmt::format("invalid {} '{}'", what, text));
  }
  return value;
}

struct LambdaRange {
  double start = 0.01, stop = 0.10, step = 0.01;
};

LambdaRange parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("--lambda-range expects start:stop:step");
  return {parse_double(parts[0], "lambda start"), parse_double(parts[1], "lambda stop"),
          parse_double(parts[2], "lambda step")};
}

Measure measure_from(const std::string& name) {
  auto m = parse_measure(name);
  if (!m) throw UsageError("unknown measure '" + name + "'");
  return *m;
}

// Everything needed to reproduce one run.
struct Request {
  std::string command;
  std::string input;
  std::string format = "csv";
  std::string measure;
  std::vector<std::string> measures;
  std::size_t k = 10;
  std::vector<std::string> seeds;
  std::optional<std::size_t> top;
  std::optional<double> beta;
  std::optional<double> lambda;
  std::size_t replicates = 100;
  std::uint64_t rng_seed = 1;
  std::optional<std::int32_t> max_steps;
  std::string lambda_range = "0.01:0.1:0.01";
  std::int32_t t_eval = 10;
};

double si_lambda(const Request& r) {
  if (r.beta.has_value() == r.lambda.has_value()) {
    throw UsageError("exactly one of --beta or --lambda is required");
  }
  return r.beta ? lambda_from_beta(*r.beta) : *r.lambda;
}

json parameters(const Request& r) {
  json p = json::object();
  if (r.command == "rank") {
    p["measure"] = r.measure;
  } else if (r.command == "si") {
    p["seeds"] = r.seeds;
    p["top"] = r.top ? json(*r.top) : json(nullptr);
    p["measure"] = r.measure.empty() ? json(nullptr) : json(r.measure);
    p["beta"] = r.beta ? json(*r.beta) : json(nullptr);
    p["lambda"] = si_lambda(r);
    p["replicates"] = r.replicates;
    p["rng_seed"] = r.rng_seed;
    p["max_steps"] = r.max_steps ? json(*r.max_steps) : json(nullptr);
  } else if (r.command == "tau") {
    p["measure"] = r.measure;
    p["lambda_range"] = r.lambda_range;
    p["t_eval"] = r.t_eval;
    p["replicates"] = r.replicates;
    p["rng_seed"] = r.rng_seed;
  } else if (r.command == "compare") {
    p["measures"] = r.measures;
    p["k"] = r.k;
  }
  return p;
}

Request request_from_manifest(const json& m) {
  Request r;
  r.command = m.at("command").get<std::string>();
  r.input = m.at("input").at("path").get<std::string>();
  r.format = m.value("output", std::string("csv"));
  const json& p = m.at("parameters");
  auto opt_string = [&](const char* key) {
    return p.contains(key) && !p[key].is_null() ? p[key].get<std::string>() : std::string();
  };
  if (r.command == "rank") {
    r.measure = opt_string("measure");
  } else if (r.command == "si") {
    r.measure = opt_string("measure");
    if (!p.at("top").is_null()) r.top = p["top"].get<std::size_t>();
    else r.seeds = p.at("seeds").get<std::vector<std::string>>();
    if (!p.at("beta").is_null()) r.beta = p["beta"].get<double>();
    else r.lambda = p.at("lambda").get<double>();
    r.replicates = p.at("replicates").get<std::size_t>();
    r.rng_seed = p.at("rng_seed").get<std::uint64_t>();
    if (!p.at("max_steps").is_null()) r.max_steps = p["max_steps"].get<std::int32_t>();
  } else if (r.command == "tau") {
    r.measure = opt_string("measure");
    r.lambda_range = p.at("lambda_range").get<std::string>();
    r.t_eval = p.at("t_eval").get<std::int32_t>();
    r.replicates = p.at("replicates").get<std::size_t>();
    r.rng_seed = p.at("rng_seed").get<std::uint64_t>();
  } else if (r.command == "compare") {
    r.measures = p.at("measures").get<std::vector<std::string>>();
    r.k = p.at("k").get<std::size_t>();
  } else {
    throw UsageError("manifest names unknown command '" + r.command + "'");
  }
  return r;
}

RankingList ranking_for(const Graph& g, Measure m, std::span<const DistanceField> fields) {
  return rank(compute_measure(g, m, fields), g);
}

Table run_rank(const Request& r, const Graph& g) {
  const Measure m = measure_from(r.measure);
  const auto fields = all_distance_fields(g);
  const auto list = ranking_for(g, m, fields);
  Table t{{"rank", "node", "score", "undefined"}, {}};
  long long pos = 1;
  for (const auto& e : list.entries) t.rows.push_back({pos++, e.label, e.score, e.undefined});
  return t;
}

Table run_si_cmd(Request& r, const Graph& g) {
  SiConfig cfg;
  cfg.lambda = si_lambda(r);
  if (r.top.has_value() == !r.seeds.empty()) {
    throw UsageError("give either --seeds or --top with --measure");
  }
  if (r.top) {
    if (r.measure.empty()) throw UsageError("--top requires --measure");
    if (*r.top == 0 || *r.top > g.node_count()) {
      throw UsageError(fmt::format("--top {} outside [1, {}]", *r.top, g.node_count()));
    }
    const auto fields = all_distance_fields(g);
    r.seeds = ranking_for(g, measure_from(r.measure), fields).top_labels(*r.top);
  }
  cfg.seeds = resolve_labels(g, r.seeds);
  cfg.replicates = r.replicates;
  cfg.rng_seed = r.rng_seed;
  cfg.max_steps = r.max_steps;
  const auto ens = simulate(g, cfg);
  Table t{{"t", "mean_F", "std_F"}, {}};
  for (std::size_t i = 0; i < ens.mean.size(); ++i) {
    t.rows.push_back({static_cast<long long>(i), ens.mean[i], ens.stddev[i]});
  }
  return t;
}

Table run_tau(const Request& r, const Graph& g) {
  const Measure m = measure_from(r.measure);
  const auto range = parse_range(r.lambda_range);
  const auto grid = lambda_grid(range.start, range.stop, range.step);
  const auto fields = all_distance_fields(g);
  const auto scores = compute_measure(g, m, fields);
  SweepOptions opts;
  opts.t_eval = r.t_eval;
  opts.replicates = r.replicates;
  opts.rng_seed = r.rng_seed;
  Table t{{"lambda", "tau", "n_c", "n_d"}, {}};
  for (const auto& pt : tau_sweep(g, scores, grid, opts)) {
    t.rows.push_back({pt.lambda, pt.tau.tau, static_cast<long long>(pt.tau.n_c),
                      static_cast<long long>(pt.tau.n_d)});
  }
  return t;
}

Table run_compare(const Request& r, const Graph& g) {
  if (r.k == 0) throw UsageError("--k must be at least 1");
  const auto fields = all_distance_fields(g);
  std::vector<RankingList> lists;
  for (const auto& name : r.measures) lists.push_back(ranking_for(g, measure_from(name), fields));
  Table t{{"measure_a", "measure_b", "k", "overlap"}, {}};
  for (std::size_t a = 0; a < lists.size(); ++a) {
    for (std::size_t b = 0; b < lists.size(); ++b) {
      t.rows.push_back({r.measures[a], r.measures[b], static_cast<long long>(r.k),
                        static_cast<long long>(top_k_overlap(lists[a], lists[b], r.k))});
    }
  }
  return t;
}

struct Destination {
  std::string out_path;
  std::string manifest_path;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
  if (!f) throw IoError("error writing '" + path + "'");
}

void execute(Request r, const Destination& dest, std::ostream& out, std::ostream& err,
             const std::optional<std::string>& expected_hash) {
  const std::string bytes = read_file(r.input);
  const std::string hash = fnv1a64_hex(bytes);
  if (expected_hash && *expected_hash != hash) {
    throw std::runtime_error("input '" + r.input + "' changed since the manifest was written");
  }
  const ParsedEdgeList parsed = parse_edge_list(bytes);
  if (parsed.self_loops_dropped > 0) {
    err << "warning: dropped " << parsed.self_loops_dropped << " self-loop(s)\n";
  }

  Table table;
  if (r.command == "rank") table = run_rank(r, parsed.graph);
  else if (r.command == "si") table = run_si_cmd(r, parsed.graph);
  else if (r.command == "tau") table = run_tau(r, parsed.graph);
  else table = run_compare(r, parsed.graph);

  json manifest = {{"tool", "fldrank"},
                   {"version", kVersion},
                   {"command", r.command},
                   {"input", {{"path", r.input}, {"fnv1a64", hash}}},
                   {"output", r.format},
                   {"parameters", parameters(r)}};
  if (r.command == "si" && r.top) manifest["parameters"]["resolved_seeds"] = r.seeds;
  if (r.command == "si") manifest["parameters"]["seeds"] = r.top ? json::array() : json(r.seeds);

  const std::string data = render(table, r.format);
  const std::string manifest_text = manifest.dump(2) + "\n";
  if (!dest.out_path.empty()) {
    write_text(dest.out_path, data);
  } else {
    out << data;
  }
  std::string manifest_path = dest.manifest_path;
  if (manifest_path.empty() && !dest.out_path.empty()) manifest_path = dest.out_path + ".manifest.json";
  if (!manifest_path.empty()) {
    write_text(manifest_path, manifest_text);
  } else {
    err << manifest_text;
  }
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string part; std::getline(ss, part, ',');) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank influential nodes by fuzzy local dimension and baseline centralities"};
  app.name("fldrank");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Request req;
  Destination dest;
  std::string manifest_in;
  std::vector<std::string> seed_args, measure_args;
  const std::vector<std::string> measure_names{"dc", "cc", "bc", "ec", "ld", "fld"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", req.input, "Edge-list file")->required();
    sub->add_option("--output", req.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", dest.out_path, "Write data here instead of stdout");
    sub->add_option("--manifest", dest.manifest_path,
                    "Manifest path (default <out>.manifest.json, or stderr)");
  };

  auto* rank_cmd = app.add_subcommand("rank", "Rank nodes by one measure");
  add_common(rank_cmd);
  rank_cmd->add_option("--measure", req.measure, "Centrality measure")
      ->required()
      ->check(CLI::IsMember(measure_names));

  auto* si_cmd = app.add_subcommand("si", "SI spreading from explicit or top-ranked seeds");
  add_common(si_cmd);
  si_cmd->add_option("--seeds", seed_args, "Seed labels (comma separated)");
  si_cmd->add_option("--top", req.top, "Seed with the top-k nodes of --measure");
  si_cmd->add_option("--measure", req.measure, "Measure used with --top")
      ->check(CLI::IsMember(measure_names));
  auto* beta_opt = si_cmd->add_option("--beta", req.beta, "Spreading rate exponent, lambda = 0.5^beta");
  auto* lambda_opt = si_cmd->add_option("--lambda", req.lambda, "Per-contact infection probability")
                         ->check(CLI::Range(0.0, 1.0));
  beta_opt->excludes(lambda_opt);
  si_cmd->add_option("--replicates", req.replicates, "Monte Carlo runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  si_cmd->add_option("--rng-seed", req.rng_seed, "Master seed")->capture_default_str();
  si_cmd->add_option("--max-steps", req.max_steps, "Step cap (default 10 x diameter)")
      ->check(CLI::NonNegativeNumber);

  auto* tau_cmd = app.add_subcommand("tau", "Kendall tau against SI spreading ability");
  add_common(tau_cmd);
  tau_cmd->add_option("--measure", req.measure, "Centrality measure")
      ->required()
      ->check(CLI::IsMember(measure_names));
  tau_cmd->add_option("--lambda-range", req.lambda_range, "start:stop:step")->capture_default_str();
  tau_cmd->add_option("--t-eval", req.t_eval, "Step at which F(t) is read")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tau_cmd->add_option("--replicates", req.replicates, "Runs per node")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tau_cmd->add_option("--rng-seed", req.rng_seed, "Master seed")->capture_default_str();

  auto* compare_cmd = app.add_subcommand("compare", "Pairwise top-k overlap between measures");
  add_common(compare_cmd);
  compare_cmd->add_option("--measures", measure_args, "Measures (comma separated, default all)");
  compare_cmd->add_option("--k", req.k, "List length")->capture_default_str();

  auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay_cmd->add_option("--from", manifest_in, "Manifest written by an earlier run")->required();
  replay_cmd->add_option("--out", dest.out_path, "Write data here instead of stdout");
  replay_cmd->add_option("--manifest", dest.manifest_path, "Where to write the new manifest");

  std::vector<std::string> argv_store{"fldrank"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::optional<std::string> expected_hash;
    if (replay_cmd->parsed()) {
      json manifest;
      try {
        manifest = json::parse(read_file(manifest_in));
        req = request_from_manifest(manifest);
        expected_hash = manifest.at("input").at("fnv1a64").get<std::string>();
      } catch (const json::exception& e) {
        throw UsageError("malformed manifest '" + manifest_in + "': " + e.what());
      }
    } else {
      req.command = app.get_subcommands().front()->get_name();
      req.seeds = split_list(seed_args);
      req.measures = split_list(measure_args);
      if (req.command == "compare" && req.measures.empty()) req.measures = measure_names;
      for (const auto& m : req.measures) measure_from(m);
      if (req.command == "si") si_lambda(req);
      if (req.command == "tau") parse_range(req.lambda_range);
    }
    execute(req, dest, out, err, expected_hash);
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << req.input << ": " << e.what() << "\n";
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace fldrank::cli
