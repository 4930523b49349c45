#include "splitgraph/harness.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

namespace splitgraph {

const char* claim_name(Claim c) {
  switch (c) {
    case Claim::THM1: return "THM1";
    case Claim::PROP2_GALLAI: return "PROP2_GALLAI";
    case Claim::COR1_ALPHA: return "COR1_ALPHA";
    case Claim::COR2_CHAR: return "COR2_CHAR";
    case Claim::COR3_MAXSETS: return "COR3_MAXSETS";
    case Claim::COR4_RANGE: return "COR4_RANGE";
    case Claim::OBS1_I: return "OBS1_I";
    case Claim::OBS1_II: return "OBS1_II";
    case Claim::OBS1_III: return "OBS1_III";
    case Claim::OBS1_IV: return "OBS1_IV";
    case Claim::PROP1_I: return "PROP1_I";
    case Claim::PROP1_II: return "PROP1_II";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

std::vector<VerificationOutcome> evaluate_graph_any(const GraphAny& g, const HarnessOptions& opt,
                                                    bool payload_on_holds) {
  const GraphAny wide = widen_for_split(g);
  return std::visit(
      [&](const auto& graph) { return evaluate_graph(graph, opt, payload_on_holds); }, wide);
}

namespace {

constexpr std::size_t claim_index(Claim c) { return static_cast<std::size_t>(c); }

/// Per-worker scratch; merged under a mutex once per worker.
struct Accumulator {
  std::array<ClaimTally, kAllClaims.size()> tallies{};
  std::vector<CampaignFailure> failures;
  long long evaluated = 0;
  long long connected = 0;
  long long unexpected = 0;

  void absorb(std::vector<VerificationOutcome>&& outcomes) {
    ++evaluated;
    for (VerificationOutcome& o : outcomes) {
      ClaimTally& t = tallies[claim_index(o.claim)];
      switch (o.verdict) {
        case Verdict::holds: ++t.holds; break;
        case Verdict::fails: ++t.fails; break;
        case Verdict::not_applicable: ++t.not_applicable; break;
      }
      if (!o.expected) ++unexpected;
      if (o.verdict == Verdict::fails || !o.expected)
        failures.push_back(
            {std::move(o.graph_id), o.claim, o.verdict, o.expected, std::move(o.payload)});
    }
  }

  void merge_into(Accumulator& total) {
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      total.tallies[i].holds += tallies[i].holds;
      total.tallies[i].fails += tallies[i].fails;
      total.tallies[i].not_applicable += tallies[i].not_applicable;
    }
    total.failures.insert(total.failures.end(), std::make_move_iterator(failures.begin()),
                          std::make_move_iterator(failures.end()));
    total.evaluated += evaluated;
    total.connected += connected;
    total.unexpected += unexpected;
  }
};

/// Splits [0, total) into chunks claimed off an atomic counter. The body runs
/// on half-open ranges and fills a worker-local accumulator; the first
/// exception wins and is rethrown after all workers stop.
template <typename Body>
void run_parallel(long long total, long long chunk, int workers, Accumulator& into,
                  const Body& body) {
  workers = int(std::min<long long>(workers, std::max<long long>(1, (total + chunk - 1) / chunk)));
  if (workers <= 1) {
    Accumulator local;
    for (long long begin = 0; begin < total; begin += chunk)
      body(begin, std::min(total, begin + chunk), local);
    local.merge_into(into);
    return;
  }
  std::atomic<long long> next{0};
  std::mutex merge_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      Accumulator local;
      try {
        for (;;) {
          const long long begin = next.fetch_add(chunk, std::memory_order_relaxed);
          if (begin >= total) break;
          body(begin, std::min(total, begin + chunk), local);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (!error) error = std::current_exception();
        return;
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      local.merge_into(into);
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void validate_config(const CampaignConfig& c) {
  if (c.parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
  if (c.options.oracle_bound < 0 || c.options.solver_max_order < 0 ||
      c.options.cor3_max_order < 0 || c.options.matching_audit_max_order < 0)
    throw std::invalid_argument("size gates must be non-negative");
  switch (c.mode) {
    case CampaignConfig::Mode::exhaustive: {
      const int cap = c.long_run ? 8 : 7;
      if (c.min_order < 2) throw std::invalid_argument("exhaustive mode starts at order 2");
      if (c.max_order < c.min_order)
        throw std::invalid_argument("max order below min order");
      if (c.max_order > cap)
        throw std::invalid_argument("exhaustive mode caps at order " + std::to_string(cap) +
                                    (c.long_run ? "" : " (use long-run for 8)"));
      break;
    }
    case CampaignConfig::Mode::random:
      if (c.order < 2 || c.order > 14)
        throw std::invalid_argument("random mode takes orders 2..14");
      if (c.samples < 1) throw std::invalid_argument("random mode needs at least one sample");
      if (!(c.edge_probability >= 0.0 && c.edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
      if (!c.seed_set) throw std::invalid_argument("random mode needs an explicit seed");
      break;
    case CampaignConfig::Mode::family:
      if (c.family_n < 2 || c.family_n > 14)
        throw std::invalid_argument("family mode takes orders 2..14");
      break;
    case CampaignConfig::Mode::file:
      break;
  }
}

void sort_failures(std::vector<CampaignFailure>& failures) {
  std::sort(failures.begin(), failures.end(),
            [](const CampaignFailure& a, const CampaignFailure& b) {
              if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
              return claim_index(a.claim) < claim_index(b.claim);
            });
}

void run_exhaustive(const CampaignConfig& c, CampaignReport& report) {
  Accumulator total;
  for (int n = c.min_order; n <= c.max_order; ++n) {
    Accumulator per_order;
    const long long masks = 1LL << pair_count(n);
    run_parallel(masks, 4096, c.parallelism, per_order,
                 [&](long long begin, long long end, Accumulator& acc) {
                   for (long long mask = begin; mask < end; ++mask) {
                     const Graph<1> g = graph_from_mask<1>(n, std::uint64_t(mask));
                     if (!is_connected(g)) continue;
                     ++acc.connected;
                     acc.absorb(evaluate_graph(g, c.options));
                   }
                 });
    report.per_order.emplace_back(n, per_order.connected);
    per_order.merge_into(total);
  }
  sort_failures(total.failures);
  report.graphs_evaluated = total.evaluated;
  report.tallies = total.tallies;
  report.failures = std::move(total.failures);
  report.unexpected = total.unexpected;
}

void run_random(const CampaignConfig& c, CampaignReport& report) {
  std::vector<Graph<1>> samples;
  samples.reserve(std::size_t(c.samples));
  SplitMix64 master{c.seed};
  for (int i = 0; i < c.samples; ++i)
    samples.push_back(erdos_renyi<1>(c.order, c.edge_probability, master.next()));
  Accumulator total;
  run_parallel(c.samples, 1, c.parallelism, total,
               [&](long long begin, long long end, Accumulator& acc) {
                 for (long long i = begin; i < end; ++i)
                   acc.absorb(evaluate_graph(samples[std::size_t(i)], c.options));
               });
  sort_failures(total.failures);
  report.graphs_evaluated = total.evaluated;
  report.tallies = total.tallies;
  report.failures = std::move(total.failures);
  report.unexpected = total.unexpected;
}

void run_family(const CampaignConfig& c, CampaignReport& report) {
  Accumulator total;
  const int n = c.family_n;
  std::vector<int> attained;
  for (int k = n; k <= 2 * n - 2; ++k) {
    const CounterexampleGraph<1> gk = counterexample_graph<1>({n, k});
    FamilyRow row;
    row.k = k;
    row.graph6 = write_graph6(gk.g);
    row.beta0_star = beta0_star_fast(gk.g);
    const SplitGraph<1> split = splitting_graph(gk.g);
    row.beta0_split = MisSolver<1>(split.g).max_size();
    row.alpha0_split = 2 * n - row.beta0_split;
    row.attains_k = row.beta0_split == k;
    attained.push_back(row.beta0_split);
    report.family_rows.push_back(std::move(row));
    total.absorb(evaluate_graph(gk.g, c.options));
  }
  std::sort(attained.begin(), attained.end());
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());
  report.family_attained = attained;
  for (int k = n; k <= 2 * n - 2; ++k)
    if (!std::binary_search(attained.begin(), attained.end(), k))
      report.family_gaps.push_back(k);
  report.family_covers_range = report.family_gaps.empty();
  report.family_coverage_as_predicted = attained == attainable_family_values(n);
  if (!report.family_coverage_as_predicted) ++total.unexpected;
  sort_failures(total.failures);
  report.graphs_evaluated = total.evaluated;
  report.tallies = total.tallies;
  report.failures = std::move(total.failures);
  report.unexpected = total.unexpected;
}

void run_file(const CampaignConfig& c, CampaignReport& report) {
  std::vector<GraphAny> graphs;
  graphs.reserve(c.file_lines.size());
  for (const std::string& line : c.file_lines) graphs.push_back(parse_graph6_any(line));
  Accumulator total;
  run_parallel(static_cast<long long>(graphs.size()), 1, c.parallelism, total,
               [&](long long begin, long long end, Accumulator& acc) {
                 for (long long i = begin; i < end; ++i)
                   acc.absorb(evaluate_graph_any(graphs[std::size_t(i)], c.options));
               });
  sort_failures(total.failures);
  report.graphs_evaluated = total.evaluated;
  report.tallies = total.tallies;
  report.failures = std::move(total.failures);
  report.unexpected = total.unexpected;
}

}  // namespace

std::vector<int> attainable_family_values(int n) {
  std::vector<int> out;
  for (int k = n; k <= 2 * n - 2; ++k)
    if (!(n >= 4 && k == 2 * n - 3)) out.push_back(k);
  return out;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  validate_config(config);
  const auto started = std::chrono::steady_clock::now();
  CampaignReport report;
  report.config = config;
  switch (config.mode) {
    case CampaignConfig::Mode::exhaustive: run_exhaustive(config, report); break;
    case CampaignConfig::Mode::random: run_random(config, report); break;
    case CampaignConfig::Mode::family: run_family(config, report); break;
    case CampaignConfig::Mode::file: run_file(config, report); break;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

nlohmann::ordered_json campaign_report_json(const CampaignReport& report) {
  const CampaignConfig& c = report.config;
  nlohmann::ordered_json config;
  switch (c.mode) {
    case CampaignConfig::Mode::exhaustive:
      config["mode"] = "exhaustive";
      config["min_order"] = c.min_order;
      config["max_order"] = c.max_order;
      config["long_run"] = c.long_run;
      break;
    case CampaignConfig::Mode::random:
      config["mode"] = "random";
      config["order"] = c.order;
      config["samples"] = c.samples;
      config["edge_probability"] = c.edge_probability;
      config["seed"] = c.seed;
      break;
    case CampaignConfig::Mode::family:
      config["mode"] = "family";
      config["n"] = c.family_n;
      break;
    case CampaignConfig::Mode::file:
      config["mode"] = "file";
      config["path"] = c.file;
      config["graphs"] = c.file_lines.size();
      break;
  }
  config["oracle_bound"] = c.options.oracle_bound;
  config["solver_max_order"] = c.options.solver_max_order;
  config["cor3_max_order"] = c.options.cor3_max_order;
  config["matching_audit_max_order"] = c.options.matching_audit_max_order;

  nlohmann::ordered_json out;
  out["schema_version"] = 1;
  out["config"] = std::move(config);
  out["graphs_evaluated"] = report.graphs_evaluated;
  if (c.mode == CampaignConfig::Mode::exhaustive) {
    nlohmann::ordered_json per_order = nlohmann::ordered_json::array();
    for (const auto& [n, connected] : report.per_order) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["labeled_graphs"] = 1LL << pair_count(n);
      row["connected"] = connected;
      per_order.push_back(std::move(row));
    }
    out["per_order"] = std::move(per_order);
  }
  nlohmann::ordered_json claims;
  for (std::size_t i = 0; i < kAllClaims.size(); ++i) {
    const ClaimTally& t = report.tallies[i];
    nlohmann::ordered_json tally;
    tally["holds"] = t.holds;
    tally["fails"] = t.fails;
    tally["not_applicable"] = t.not_applicable;
    claims[claim_name(kAllClaims[i])] = std::move(tally);
  }
  out["claims"] = std::move(claims);
  if (c.mode == CampaignConfig::Mode::family) {
    nlohmann::ordered_json family;
    family["n"] = c.family_n;
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
    family["rows"] = std::move(rows);
    family["covers_range"] = report.family_covers_range;
    family["attained"] = report.family_attained;
    family["gaps"] = report.family_gaps;
    family["coverage_as_predicted"] = report.family_coverage_as_predicted;
    out["family"] = std::move(family);
  }
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const CampaignFailure& f : report.failures) {
    nlohmann::ordered_json entry;
    entry["graph6"] = f.graph6;
    entry["claim"] = claim_name(f.claim);
    entry["verdict"] = verdict_name(f.verdict);
    entry["expected"] = f.expected;
    entry["payload"] = f.payload;
    failures.push_back(std::move(entry));
  }
  out["failures"] = std::move(failures);
  out["unexpected_failures"] = report.unexpected;
  return out;
}

int campaign_exit_code(const CampaignReport& report) { return report.unexpected > 0 ? 1 : 0; }

}  // namespace splitgraph
