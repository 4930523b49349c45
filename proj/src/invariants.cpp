#include "splitgraph/invariants.hpp"

#include <cassert>
#include <iomanip>
#include <sstream>

#include "splitgraph/deficiency.hpp"
#include "splitgraph/operators.hpp"
#include "splitgraph/solvers.hpp"

namespace splitgraph {

namespace {

template <std::size_t W>
InvariantReport compute(const Graph<W>& g, int oracle_bound) {
  InvariantReport r;
  r.n = g.order();
  r.edge_count = g.size();

  const VertexSetResult<W> mis = max_independent_set(g);
  r.beta0 = mis.size;
  r.beta0_witness = mis.witness.to_vector();
  r.alpha0 = r.n - r.beta0;
  r.alpha0_witness = mis.witness.complement(r.n).to_vector();

  const EdgeSetResult matching = maximum_matching(g);
  r.beta1 = matching.size;
  r.beta1_witness = matching.witness;

  bool isolated = false;
  for (int v = 0; v < r.n; ++v) isolated |= g.degree(v) == 0;
  if (!isolated) {
    const EdgeSetResult cover = minimum_edge_cover(g);
    r.alpha1 = cover.size;
    r.alpha1_witness = cover.witness;
  }

  if (r.n <= oracle_bound) {
    const DeficiencyCertificate<W> cert = beta0_star_bruteforce(g, oracle_bound);
    r.beta0_star = cert.value;
    r.beta0_star_witnessed = true;
    r.beta0_star_witness = cert.s.to_vector();
    r.beta0_star_neighborhood = cert.n_of_s.to_vector();
    if (2 * r.n <= SmallBitset<W>::capacity()) assert(beta0_star_fast(g) == cert.value);
  } else {
    r.beta0_star = beta0_star_fast(g);
  }
  return r;
}

std::string vertex_set(const std::vector<int>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? ", " : "") << vs[i];
  out << '}';
  return out.str();
}

std::string edge_set(const std::vector<Edge>& es) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < es.size(); ++i)
    out << (i ? ", " : "") << es[i].u << '-' << es[i].v;
  out << '}';
  return out.str();
}

nlohmann::ordered_json edge_array(const std::vector<Edge>& es) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Edge& e : es) arr.push_back({e.u, e.v});
  return arr;
}

}  // namespace

InvariantReport compute_invariants(const GraphAny& g, int oracle_bound) {
  // The beta0_star fast path works on the 2n-vertex double cover, so the
  // bitset width has to fit 2n even when n alone would take a narrower one.
  const GraphAny wide = widen_for_split(g);
  return std::visit([&](const auto& gg) { return compute(gg, oracle_bound); }, wide);
}

std::string invariants_table(const InvariantReport& r) {
  std::ostringstream out;
  const auto row = [&](const std::string& name, const std::string& value,
                       const std::string& witness) {
    out << std::left << std::setw(12) << name << std::setw(6) << value << witness << '\n';
  };
  row("order", std::to_string(r.n), "");
  row("edges", std::to_string(r.edge_count), "");
  row("beta0", std::to_string(r.beta0), vertex_set(r.beta0_witness));
  row("alpha0", std::to_string(r.alpha0), vertex_set(r.alpha0_witness));
  row("beta1", std::to_string(r.beta1), edge_set(r.beta1_witness));
  if (r.alpha1)
    row("alpha1", std::to_string(*r.alpha1), edge_set(r.alpha1_witness));
  else
    row("alpha1", "-", "undefined (isolated vertex)");
  if (r.beta0_star_witnessed)
    row("beta0*", std::to_string(r.beta0_star),
        vertex_set(r.beta0_star_witness) + "  N(S) " + vertex_set(r.beta0_star_neighborhood));
  else
    row("beta0*", std::to_string(r.beta0_star), "(matching-based value; no witness)");
  out << "gallai      alpha0 + beta0 = " << (r.alpha0 + r.beta0) << " = order\n";
  if (r.alpha1)
    out << "gallai      alpha1 + beta1 = " << (*r.alpha1 + r.beta1) << " = order\n";
  return out.str();
}

nlohmann::ordered_json invariants_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["order"] = r.n;
  j["edges"] = r.edge_count;
  j["beta0"] = {{"value", r.beta0}, {"witness", r.beta0_witness}};
  j["alpha0"] = {{"value", r.alpha0}, {"witness", r.alpha0_witness}};
  j["beta1"] = {{"value", r.beta1}, {"witness", edge_array(r.beta1_witness)}};
  if (r.alpha1)
    j["alpha1"] = {{"value", *r.alpha1}, {"witness", edge_array(r.alpha1_witness)}};
  else
    j["alpha1"] = nullptr;
  nlohmann::ordered_json star;
  star["value"] = r.beta0_star;
  if (r.beta0_star_witnessed) {
    star["witness"] = r.beta0_star_witness;
    star["neighborhood"] = r.beta0_star_neighborhood;
  } else {
    star["witness"] = nullptr;
    star["neighborhood"] = nullptr;
  }
  j["beta0_star"] = star;
  nlohmann::ordered_json gallai;
  gallai["vertex_sum"] = r.alpha0 + r.beta0;
  if (r.alpha1)
    gallai["edge_sum"] = *r.alpha1 + r.beta1;
  else
    gallai["edge_sum"] = nullptr;
  j["gallai"] = gallai;
  return j;
}

}  // namespace splitgraph
