// tmc-lab: command-line front end for the tmc library.
//
// stdout carries JSON (or CSV with --csv); human-readable notes go to stderr.
// Exit codes: 0 success, 1 domain or input error, 2 budget exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmc/coloring.hpp"
#include "tmc/error.hpp"
#include "tmc/graph_io.hpp"
#include "tmc/randgraph.hpp"
#include "tmc/serialize.hpp"
#include "tmc/solver.hpp"
#include "tmc/spanning.hpp"
#include "tmc/theorems.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitBudget = 2;

struct Common {
  std::string input = "-";
  std::string graph;
  std::string format = "auto";
  std::string output;
  int jobs = 1;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tmc::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<tmc::Graph> load_graphs(const Common& c) {
  std::string text = c.graph.empty() ? read_source(c.input) : c.graph;
  auto graphs = tmc::read_graphs(text, tmc::parse_format_name(c.format));
  if (graphs.empty()) throw tmc::Error("no graph in input");
  return graphs;
}

tmc::Graph load_graph(const Common& c) {
  auto graphs = load_graphs(c);
  if (graphs.size() != 1) throw tmc::Error("expected one graph, got " + std::to_string(graphs.size()));
  return graphs.front();
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw tmc::Error("cannot write '" + c.output + "'");
  out << text;
}

void emit_json(const Common& c, const json& doc) { emit(c, doc.dump() + "\n"); }

void add_input_options(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "Graph file, '-' for stdin")->capture_default_str();
  cmd->add_option("-g,--graph", c.graph, "Graph text given inline (graph6 or edge list)");
  cmd->add_option("--format", c.format, "Input format: auto, graph6 or edge-list")
      ->check(CLI::IsMember({"auto", "graph6", "edge-list", "edgelist"}))
      ->capture_default_str();
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
  std::string mode = "auto";
  int max_n = 7;
};

json bounds_json(const tmc::Graph& g) {
  json doc;
  doc["schema"] = tmc::kSchema;
  doc["graph6"] = g.order() <= tmc::kGraph6MaxOrder ? tmc::emit_graph6(g) : "";
  doc["n"] = g.order();
  doc["m"] = g.size();
  doc["method"] = "bounds-only";
  doc["exact"] = false;
  int lower = 0;
  int upper = 0;
  if (g.order() <= tmc::kSpanningMaxOrder) {
    lower = tmc::tmc_lower_bound(g);
    upper = tmc::tmc_upper_bound(g);
  } else {
    auto b = tmc::certified_bounds(g);
    lower = b.lower;
    upper = b.upper;
  }
  doc["tmc"] = lower == upper ? json(lower) : json(nullptr);
  doc["lower"] = lower;
  doc["upper"] = upper;
  return doc;
}

json compute_one(const tmc::Graph& g, const ComputeArgs& args, int& code) {
  const std::string& mode = args.mode;
  if (mode == "bounds") return bounds_json(g);

  if (mode == "classify" || mode == "auto") {
    if (g.order() > tmc::kSpanningMaxOrder && tmc::is_connected(g)) {
      code = std::max(code, kExitBudget);
      return bounds_json(g);
    }
    auto verdict = tmc::classify(g);
    if (verdict.value || mode == "classify") {
      json doc = bounds_json(g);
      doc["method"] = verdict.rule;
      doc["exact"] = verdict.value.has_value();
      doc["tmc"] = verdict.value ? json(*verdict.value) : json(nullptr);
      if (verdict.value) doc["lower"] = doc["upper"] = *verdict.value;
      doc["verdict"] = tmc::verdict_to_json(verdict);
      return doc;
    }
  }

  if (g.order() > args.max_n && tmc::is_connected(g)) {
    std::cerr << "n = " << g.order() << " exceeds --max-n " << args.max_n << "; reporting bounds\n";
    code = std::max(code, kExitBudget);
    return bounds_json(g);
  }
  auto outcome = tmc::tmc_exact(g, tmc::SolverOptions{.max_n = args.max_n});
  if (!outcome.exact()) code = std::max(code, kExitBudget);
  return tmc::outcome_to_json(g, outcome);
}

int cmd_compute(const Common& c, const ComputeArgs& args) {
  auto graphs = load_graphs(c);
  int code = kExitOk;
  std::vector<json> results;
  for (const auto& g : graphs) {
    results.push_back(compute_one(g, args, code));
    const auto& r = results.back();
    std::cerr << r["graph6"].get<std::string>() << ": ";
    if (r["tmc"].is_null()) {
      std::cerr << "tmc in [" << r["lower"] << ", " << r["upper"] << "]";
    } else {
      std::cerr << "tmc = " << r["tmc"];
    }
    std::cerr << " (" << r["method"].get<std::string>() << ")\n";
  }
  if (results.size() == 1) {
    emit_json(c, results.front());
  } else {
    json doc;
    doc["schema"] = tmc::kSchema;
    doc["results"] = results;
    emit_json(c, doc);
  }
  return code;
}

// verify -------------------------------------------------------------------

int cmd_verify(const Common& c, const std::string& coloring_path) {
  tmc::Graph g = load_graph(c);
  nlohmann::json col_doc;
  try {
    col_doc = nlohmann::json::parse(read_source(coloring_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw tmc::ParseError(std::string("coloring: ") + e.what(), e.byte);
  }
  tmc::TotalColoring col = tmc::coloring_from_json(g, col_doc);
  auto result = tmc::verify_tmc(g, col);
  json doc;
  doc["schema"] = tmc::kSchema;
  doc["ok"] = result.ok;
  doc["num_colors"] = col.num_colors();
  if (result.failing_pair) {
    doc["failing_pair"] = {result.failing_pair->first, result.failing_pair->second};
    std::cerr << "no total monochromatic path between " << result.failing_pair->first << " and "
              << result.failing_pair->second << "\n";
  } else {
    doc["failing_pair"] = nullptr;
    std::cerr << "valid TMC-coloring with " << col.num_colors() << " colors\n";
  }
  emit_json(c, doc);
  return result.ok ? kExitOk : kExitDomain;
}

// sweep --------------------------------------------------------------------

int cmd_sweep(const Common& c, int n_max, int stride, bool csv) {
  tmc::SweepOptions options{.n_max = n_max, .sample_stride = stride, .jobs = c.jobs};
  auto report = tmc::sweep_crosscheck(options);
  if (csv) {
    emit(c, tmc::sweep_csv(report));
  } else {
    json doc;
    doc["schema"] = tmc::kSchema;
    doc["n_max"] = n_max;
    doc["classes"] = report.total_classes();
    doc["classes_per_order"] = report.classes_per_order;
    doc["passed"] = report.passed();
    doc["discrepancies"] = report.discrepancies;
    emit_json(c, doc);
  }
  std::cerr << (report.passed() ? "pass" : "FAIL") << " over " << report.total_classes() << " classes, "
            << report.discrepancies.size() << " discrepancies\n";
  return report.passed() ? kExitOk : kExitDomain;
}

// random -------------------------------------------------------------------

struct RandomArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  bool csv = false;
};

int run_connectivity(const Common& c, const nlohmann::json& doc, const RandomArgs& args) {
  int n = doc.at("n").get<int>();
  auto shifts = doc.at("a").get<std::vector<double>>();
  int trials = args.trials.value_or(doc.value("trials", 10000));
  std::uint64_t seed = args.seed.value_or(doc.value("seed", std::uint64_t{1}));
  json out;
  out["schema"] = tmc::kSchema;
  out["rng"] = tmc::CounterRng::kName;
  out["n"] = n;
  out["trials"] = trials;
  out["seed"] = seed;
  out["rows"] = json::array();
  std::ostringstream csv;
  csv << "n,a,p,trials,connected_fraction,limit\n";
  for (double a : shifts) {
    double frac = tmc::connectivity_probability(n, a, trials, seed, c.jobs);
    double limit = tmc::connectivity_limit(a);
    out["rows"].push_back({{"a", a}, {"connected_fraction", frac}, {"limit", limit}});
    csv << n << ',' << a << ',' << (std::log(static_cast<double>(n)) + a) / n << ',' << trials << ',' << frac << ','
        << limit << '\n';
    std::cerr << "a = " << a << ": connected " << frac << ", limit " << limit << "\n";
  }
  emit(c, args.csv ? csv.str() : out.dump() + "\n");
  return kExitOk;
}

int cmd_random(const Common& c, const RandomArgs& args) {
  std::string text = read_source(args.config);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw tmc::ParseError(std::string("config: ") + e.what(), e.byte);
  }
  if (doc.contains("a")) return run_connectivity(c, doc, args);
  tmc::ExperimentConfig cfg = tmc::parse_experiment_config(text);
  if (args.seed) cfg.seed = *args.seed;
  if (args.trials) cfg.trials = *args.trials;
  cfg.jobs = c.jobs;
  auto result = tmc::run_threshold_experiment(cfg);
  emit(c, args.csv ? tmc::records_csv(result) : tmc::summary_json(cfg, result) + "\n");
  for (const auto& cell : result.cells) {
    std::cerr << "n=" << cell.n << " x" << cell.multiplier << " p=" << cell.p << ": yes " << cell.fraction(cell.yes)
              << ", no " << cell.fraction(cell.no) << ", unknown " << cell.fraction(cell.unknown) << "\n";
  }
  return kExitOk;
}

// construct / convert ------------------------------------------------------

int cmd_construct(const Common& c) {
  tmc::Graph g = load_graph(c);
  tmc::TotalColoring col = tmc::construct_theorem1(g);
  json doc = tmc::coloring_to_json(g, col);
  doc["num_colors"] = col.num_colors();
  emit_json(c, doc);
  std::cerr << col.num_colors() << " colors\n";
  return kExitOk;
}

int cmd_convert(const Common& c, const std::string& to) {
  auto graphs = load_graphs(c);
  std::string out;
  for (const auto& g : graphs) {
    out += to == "graph6" ? tmc::emit_graph6(g) + "\n" : tmc::emit_edge_list(g);
  }
  emit(c, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total monochromatic connection lab", "tmc-lab"};
  app.require_subcommand(1);

  Common common;
  ComputeArgs compute_args;
  RandomArgs random_args;
  std::string coloring_path;
  std::string convert_to = "edge-list";
  int sweep_n = 6;
  int sweep_stride = 1;
  bool sweep_csv = false;

  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", common.output, "Write the result to this file instead of stdout");
    cmd->add_option("-j,--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* compute = app.add_subcommand("compute", "Compute tmc(G) for each input graph");
  add_input_options(compute, common);
  add_shared(compute);
  compute->add_option("--mode", compute_args.mode, "exact, bounds, classify or auto")
      ->check(CLI::IsMember({"exact", "bounds", "classify", "auto"}))
      ->capture_default_str();
  compute->add_option("--max-n", compute_args.max_n, "Largest order solved exactly")
      ->check(CLI::Range(1, tmc::kSolverMaxOrder))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a total coloring against a graph");
  add_input_options(verify, common);
  add_shared(verify);
  verify->add_option("-c,--coloring", coloring_path, "Coloring JSON file")->required();

  auto* sweep = app.add_subcommand("sweep", "Cross-check theorem rules against the exact solver");
  sweep->add_option("n_max", sweep_n, "Largest order")->check(CLI::Range(1, 7))->capture_default_str();
  sweep->add_option("--stride", sweep_stride, "Check every k-th class at n = 7")->check(CLI::PositiveNumber);
  sweep->add_flag("--csv", sweep_csv, "Emit the per-class CSV report");
  add_shared(sweep);

  auto* random = app.add_subcommand("random", "Run a random-graph experiment from a JSON config");
  random->add_option("config", random_args.config, "Config file, '-' for stdin")->required();
  random->add_option("--seed", random_args.seed, "Override the base seed");
  random->add_option("--trials", random_args.trials, "Override trials per cell")->check(CLI::NonNegativeNumber);
  random->add_flag("--csv", random_args.csv, "Emit per-trial CSV records");
  add_shared(random);

  auto* construct = app.add_subcommand("construct", "Build the maximum-leaf spanning tree coloring");
  add_input_options(construct, common);
  add_shared(construct);

  auto* convert = app.add_subcommand("convert", "Convert between graph6 and edge-list");
  add_input_options(convert, common);
  add_shared(convert);
  convert->add_option("--to", convert_to, "Target format: graph6 or edge-list")
      ->check(CLI::IsMember({"graph6", "edge-list"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*compute) return cmd_compute(common, compute_args);
    if (*verify) return cmd_verify(common, coloring_path);
    if (*sweep) return cmd_sweep(common, sweep_n, sweep_stride, sweep_csv);
    if (*random) return cmd_random(common, random_args);
    if (*construct) return cmd_construct(common);
    if (*convert) return cmd_convert(common, convert_to);
  } catch (const tmc::LimitError& e) {
    std::cerr << "tmc-lab: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "tmc-lab: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
