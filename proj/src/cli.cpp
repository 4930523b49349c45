#include "splitgraph/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "splitgraph/formats.hpp"
#include "splitgraph/graph6.hpp"
#include "splitgraph/harness.hpp"
#include "splitgraph/invariants.hpp"
#include "splitgraph/operators.hpp"

namespace splitgraph {

namespace {

// Keeps the doubled order of any generated or parsed graph within the widest
// compiled bitset, so `split` never fails on CLI-sourced input.
constexpr int kMaxCliOrder = 256;

int parse_int_param(const std::string& s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + s + "' in generator spec");
  return value;
}

std::uint64_t parse_u64_param(const std::string& s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad seed '" + s + "' in generator spec");
  return value;
}

double parse_double_param(const std::string& s) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad probability '" + s + "' in generator spec");
  return value;
}

void check_cli_order(int n) {
  if (n < 0 || n > kMaxCliOrder)
    throw std::invalid_argument("order " + std::to_string(n) + " outside the supported 0.." +
                                std::to_string(kMaxCliOrder));
}

GraphAny narrow(const Graph<8>& g) {
  GraphAny any = make_graph_any(g.order());
  for (const Edge& e : g.edges()) add_edge_any(any, e.u, e.v);
  return any;
}

/// Mini-spec grammar: complete:N, star:L, path:N, cycle:N, gk:N,K,
/// er:N,P[,SEED]. er takes its seed from the spec or from --seed.
GraphAny parse_generator(const std::string& spec, const std::optional<std::uint64_t>& seed_flag) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("generator spec must look like name:params, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  std::vector<std::string> params;
  for (std::size_t start = colon + 1;;) {
    const std::size_t comma = spec.find(',', start);
    params.push_back(spec.substr(start, comma == std::string::npos ? comma : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw std::invalid_argument("generator '" + name + "' takes " + std::to_string(lo) +
                                  (hi > lo ? ".." + std::to_string(hi) : "") +
                                  " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "complete") {
    arity(1, 1);
    const int n = parse_int_param(params[0]);
    check_cli_order(n);
    return narrow(complete_graph<8>(n));
  }
  if (name == "star") {
    arity(1, 1);
    const int leaves = parse_int_param(params[0]);
    check_cli_order(leaves + 1);
    return narrow(star_graph<8>(leaves));
  }
  if (name == "path") {
    arity(1, 1);
    const int n = parse_int_param(params[0]);
    check_cli_order(n);
    return narrow(path_graph<8>(n));
  }
  if (name == "cycle") {
    arity(1, 1);
    const int n = parse_int_param(params[0]);
    check_cli_order(n);
    return narrow(cycle_graph<8>(n));
  }
  if (name == "gk") {
    arity(2, 2);
    const int n = parse_int_param(params[0]);
    check_cli_order(n);
    return narrow(counterexample_graph<8>({n, parse_int_param(params[1])}).g);
  }
  if (name == "er") {
    arity(2, 3);
    const int n = parse_int_param(params[0]);
    check_cli_order(n);
    const double p = parse_double_param(params[1]);
    std::optional<std::uint64_t> seed = seed_flag;
    if (params.size() == 3) seed = parse_u64_param(params[2]);
    if (!seed)
      throw std::invalid_argument("er generator needs a seed (third parameter or --seed)");
    return narrow(erdos_renyi<8>(n, p, *seed));
  }
  throw std::invalid_argument("unknown generator '" + name +
                              "' (complete, star, path, cycle, gk, er)");
}

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

struct TextLine {
  std::string body;
  std::size_t number = 0;  // 1-based
};

std::vector<TextLine> nonempty_lines(const std::string& text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string line =
        text.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back({line, number});
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  return out;
}

/// Single-graph file: a line with whitespace means edge-list, otherwise one
/// graph6 line.
GraphAny parse_graph_text(const std::string& text) {
  const std::vector<TextLine> lines = nonempty_lines(text);
  if (lines.empty()) throw ParseError("empty input", ParseError::Unit::line, 1);
  if (lines[0].body.find_first_of(" \t") != std::string::npos) return parse_edge_list_any(text);
  if (lines.size() > 1)
    throw ParseError("expected a single graph6 line", ParseError::Unit::line, lines[1].number);
  return parse_graph6_any(lines[0].body);
}

/// Shared input selection for split / invariants / convert.
struct InputFlags {
  std::string graph6;
  std::string file;
  std::string gen;
  std::uint64_t seed = 0;
  CLI::Option* graph6_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* gen_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    graph6_opt = cmd->add_option("--graph6", graph6, "Inline graph6 string");
    file_opt = cmd->add_option("--file", file, "Graph file, auto-detected format ('-' = stdin)");
    gen_opt = cmd->add_option("--gen", gen,
                              "Generator spec: complete:N star:L path:N cycle:N gk:N,K "
                              "er:N,P[,SEED]");
    seed_opt = cmd->add_option("--seed", seed, "Seed for the er generator");
  }

  GraphAny load(std::istream& in) const {
    const int sources =
        int(graph6_opt->count() > 0) + int(file_opt->count() > 0) + int(gen_opt->count() > 0);
    if (sources != 1)
      throw std::invalid_argument("exactly one of --graph6, --file, --gen is required");
    GraphAny g = make_graph_any(0);
    if (graph6_opt->count()) {
      g = parse_graph6_any(graph6);
    } else if (file_opt->count()) {
      g = parse_graph_text(read_text(file, in));
    } else {
      std::optional<std::uint64_t> seed_value;
      if (seed_opt->count()) seed_value = seed;
      g = parse_generator(gen, seed_value);
    }
    check_cli_order(order_of(g));
    return g;
  }
};

nlohmann::ordered_json graph_json(const GraphAny& g, int base_n) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  if (base_n >= 0) j["base_order"] = base_n;
  j["order"] = order_of(g);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : edges_of(g)) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

void write_graph_output(std::ostream& out, const GraphAny& g, const std::string& format,
                        int base_n) {
  if (format == "edge-list") {
    out << write_edge_list(g);
  } else if (format == "graph6") {
    out << write_graph6_any(g) << "\n";
  } else if (format == "dot") {
    out << write_dot(g, base_n);
  } else {
    out << graph_json(g, base_n).dump(2) << "\n";
  }
}

void note_input(bool verbose, std::ostream& err, const GraphAny& g) {
  if (verbose)
    err << "input graph: n=" << order_of(g) << " m=" << size_of(g) << "\n";
}

int default_parallelism() {
  const unsigned hw = std::thread::hardware_concurrency();
  return int(std::min(8u, hw == 0 ? 1u : hw));
}

std::string family_table(const CampaignReport& report) {
  std::size_t g6_width = 6;
  for (const FamilyRow& r : report.family_rows) g6_width = std::max(g6_width, r.graph6.size());
  std::ostringstream out;
  out << std::setw(4) << "k" << "  " << std::left << std::setw(int(g6_width)) << "graph6"
      << std::right << std::setw(12) << "beta0_star" << std::setw(10) << "beta0(S)"
      << std::setw(11) << "alpha0(S)" << std::setw(11) << "attains k" << "\n";
  for (const FamilyRow& r : report.family_rows)
    out << std::setw(4) << r.k << "  " << std::left << std::setw(int(g6_width)) << r.graph6
        << std::right << std::setw(12) << r.beta0_star << std::setw(10) << r.beta0_split
        << std::setw(11) << r.alpha0_split << std::setw(11) << (r.attains_k ? "yes" : "no")
        << "\n";
  out << "attained:";
  for (int v : report.family_attained) out << " " << v;
  out << "\n";
  if (!report.family_gaps.empty()) {
    out << "unattained:";
    for (int v : report.family_gaps) out << " " << v;
    out << (report.family_coverage_as_predicted
                ? "  (no connected graph of this order attains it: a deficiency of n-3 would"
                  " force the star K_{1,n-1}, whose deficiency is n-2)"
                : "  (UNEXPECTED gap)")
        << "\n";
  }
  return out.str();
}

nlohmann::ordered_json family_json(const CampaignReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["n"] = report.config.family_n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const FamilyRow& r : report.family_rows) {
    nlohmann::ordered_json row;
    row["k"] = r.k;
    row["graph6"] = r.graph6;
    row["beta0_star"] = r.beta0_star;
    row["beta0_split"] = r.beta0_split;
    row["alpha0_split"] = r.alpha0_split;
    row["attains_k"] = r.attains_k;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["covers_range"] = report.family_covers_range;
  j["attained"] = report.family_attained;
  j["gaps"] = report.family_gaps;
  j["coverage_as_predicted"] = report.family_coverage_as_predicted;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Splitting-graph invariants and claim verification"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Diagnostics on stderr");

  CLI::App* split = app.add_subcommand("split", "Construct the splitting graph S(G)");
  InputFlags split_input;
  split_input.attach(split);
  std::string split_format = "edge-list";
  split->add_option("--format", split_format, "edge-list | graph6 | dot | json")
      ->check(CLI::IsMember({"edge-list", "graph6", "dot", "json"}));

  CLI::App* invariants = app.add_subcommand("invariants", "Exact invariants of one graph");
  InputFlags inv_input;
  inv_input.attach(invariants);
  std::string inv_format = "table";
  invariants->add_option("--format", inv_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));
  int inv_oracle_bound = 20;
  invariants->add_option("--oracle-bound", inv_oracle_bound,
                         "Max order for the exhaustive deficiency witness search");
  int inv_max_exact = 32;
  invariants->add_option("--max-exact", inv_max_exact, "Refuse exact solves above this order");

  CLI::App* verify = app.add_subcommand("verify", "Run a claim-verification campaign");
  int exhaustive_n = 0;
  CLI::Option* exhaustive_opt = verify->add_option(
      "--exhaustive", exhaustive_n, "All connected graphs from --min-order up to this order");
  int verify_min_order = 2;
  verify->add_option("--min-order", verify_min_order, "Smallest order in exhaustive mode");
  bool long_run = false;
  verify->add_flag("--long-run", long_run, "Allow exhaustive order 8");
  bool random_mode = false;
  CLI::Option* random_opt = verify->add_flag("--random", random_mode, "Seeded random graphs");
  int random_n = 0;
  CLI::Option* random_n_opt = verify->add_option("--n", random_n, "Random mode: graph order");
  double random_p = 0.5;
  verify->add_option("--p", random_p, "Random mode: edge probability");
  int random_samples = 100;
  verify->add_option("--samples", random_samples, "Random mode: sample count");
  std::uint64_t verify_seed = 0;
  CLI::Option* verify_seed_opt = verify->add_option("--seed", verify_seed, "Random mode: seed");
  int family_n = 0;
  CLI::Option* family_opt =
      verify->add_option("--family", family_n, "Counterexample family G_k for this base order");
  std::string verify_input;
  CLI::Option* input_opt =
      verify->add_option("--input", verify_input, "graph6 file, one graph per line ('-' = stdin)");
  int parallelism = default_parallelism();
  verify->add_option("--parallelism", parallelism, "Worker threads");
  HarnessOptions gates;
  verify->add_option("--oracle-bound", gates.oracle_bound,
                     "Max order for the exhaustive deficiency oracle");
  verify->add_option("--solver-max", gates.solver_max_order,
                     "Max order for exact solves on S(G)");
  verify->add_option("--cor3-max", gates.cor3_max_order,
                     "Max order for maximum-set structure enumeration");
  verify->add_option("--matching-audit-max", gates.matching_audit_max_order,
                     "Max order for the matching audit");

  CLI::App* family = app.add_subcommand("family", "Counterexample family table");
  int family_table_n = 0;
  family->add_option("n", family_table_n, "Base order")->required();
  std::string family_format = "table";
  family->add_option("--format", family_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* convert = app.add_subcommand("convert", "Convert between graph formats");
  InputFlags conv_input;
  conv_input.attach(convert);
  std::string conv_to;
  convert->add_option("--to", conv_to, "graph6 | edge-list | dot | json")
      ->required()
      ->check(CLI::IsMember({"graph6", "edge-list", "dot", "json"}));
  bool conv_labeled = false;
  convert->add_flag("--labeled", conv_labeled,
                    "Input is a headerless edge list with arbitrary labels");
  std::string conv_label_table;
  convert->add_option("--label-table", conv_label_table,
                      "Write the index->label table to this JSON file (needs --labeled)");

  for (CLI::App* sub : {split, invariants, verify, family, convert}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("splitgraph");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());

    if (app.got_subcommand(split)) {
      const GraphAny g = split_input.load(in);
      note_input(verbose, err, g);
      const SplitGraphAny s = splitting_graph_any(g);
      write_graph_output(out, s.g, split_format, s.base_n);
      return 0;
    }

    if (app.got_subcommand(invariants)) {
      const GraphAny g = inv_input.load(in);
      note_input(verbose, err, g);
      if (order_of(g) > inv_max_exact)
        throw std::invalid_argument("order " + std::to_string(order_of(g)) +
                                    " exceeds the exact-solve bound " +
                                    std::to_string(inv_max_exact) + " (raise --max-exact)");
      const InvariantReport report = compute_invariants(g, inv_oracle_bound);
      if (inv_format == "table")
        out << invariants_table(report);
      else
        out << invariants_json(report).dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(verify)) {
      const int modes = int(exhaustive_opt->count() > 0) + int(random_opt->count() > 0) +
                        int(family_opt->count() > 0) + int(input_opt->count() > 0);
      if (modes != 1)
        throw std::invalid_argument(
            "choose exactly one of --exhaustive, --random, --family, --input");
      CampaignConfig config;
      config.parallelism = parallelism;
      config.options = gates;
      if (exhaustive_opt->count()) {
        config.mode = CampaignConfig::Mode::exhaustive;
        config.min_order = verify_min_order;
        config.max_order = exhaustive_n;
        config.long_run = long_run;
      } else if (random_opt->count()) {
        config.mode = CampaignConfig::Mode::random;
        if (!random_n_opt->count())
          throw std::invalid_argument("random mode needs --n");
        config.order = random_n;
        config.edge_probability = random_p;
        config.samples = random_samples;
        config.seed = verify_seed;
        config.seed_set = verify_seed_opt->count() > 0;
      } else if (family_opt->count()) {
        config.mode = CampaignConfig::Mode::family;
        config.family_n = family_n;
      } else {
        config.mode = CampaignConfig::Mode::file;
        config.file = verify_input;
        const std::string text = read_text(verify_input, in);
        for (const TextLine& line : nonempty_lines(text)) config.file_lines.push_back(line.body);
      }
      const CampaignReport report = run_campaign(config);
      out << campaign_report_json(report).dump(2) << "\n";
      err << "wall-clock: " << report.wall_seconds << "s, graphs: " << report.graphs_evaluated
          << "\n";
      return campaign_exit_code(report);
    }

    if (app.got_subcommand(family)) {
      CampaignConfig config;
      config.mode = CampaignConfig::Mode::family;
      config.family_n = family_table_n;
      const CampaignReport report = run_campaign(config);
      if (family_format == "table")
        out << family_table(report);
      else
        out << family_json(report).dump(2) << "\n";
      return campaign_exit_code(report);
    }

    if (app.got_subcommand(convert)) {
      GraphAny g = make_graph_any(0);
      std::vector<std::string> labels;
      if (conv_labeled) {
        if (!conv_input.file_opt->count())
          throw std::invalid_argument("--labeled needs --file input");
        const LabeledEdgeList parsed = parse_labeled_edge_list(read_text(conv_input.file, in));
        g = parsed.g;
        labels = parsed.labels;
        check_cli_order(order_of(g));
      } else {
        if (!conv_label_table.empty())
          throw std::invalid_argument("--label-table needs --labeled");
        g = conv_input.load(in);
      }
      note_input(verbose, err, g);
      if (!conv_label_table.empty()) {
        std::ofstream table_file(conv_label_table, std::ios::binary);
        if (!table_file)
          throw std::invalid_argument("cannot write label table '" + conv_label_table + "'");
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["labels"] = labels;
        table_file << j.dump(2) << "\n";
      }
      write_graph_output(out, g, conv_to == "edge-list" ? "edge-list" : conv_to, -1);
      return 0;
    }

    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? std::size_t(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr, std::cin);
}

}  // namespace splitgraph
