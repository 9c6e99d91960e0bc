#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "shg/disjoint_set.hpp"
#include "shg/structure.hpp"

namespace shg {

namespace {

// Adds e to ds if all of its vertices lie in pairwise distinct components.
bool try_add(DisjointSet& ds, const Edge& e) {
  std::set<std::size_t> roots;
  for (const auto& inc : e.incidences()) {
    if (!roots.insert(ds.find(inc.vertex)).second) return false;
  }
  const auto inc = e.incidences();
  for (std::size_t i = 1; i < inc.size(); ++i) ds.unite(inc[0].vertex, inc[i].vertex);
  return true;
}

std::vector<std::size_t> greedy_forest(const SignedHypergraph& h) {
  std::vector<std::size_t> order(h.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h.edge(a).size() > h.edge(b).size(); });
  DisjointSet ds(h.num_vertices());
  std::vector<std::size_t> chosen;
  for (std::size_t id : order) {
    if (try_add(ds, h.edge(id))) chosen.push_back(id);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<std::size_t> exact_forest(const SignedHypergraph& h) {
  const std::size_t m = h.num_edges();
  if (m > kExactForestEdgeLimit) throw Error("exact search too large");
  std::uint32_t best_mask = 0;
  long long best_weight = -1;
  int best_count = -1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    DisjointSet ds(h.num_vertices());
    long long weight = 0;
    bool ok = true;
    for (std::size_t id = 0; id < m && ok; ++id) {
      if (!(mask >> id & 1U)) continue;
      const Edge& e = h.edge(id);
      ok = try_add(ds, e);
      if (!e.empty()) weight += static_cast<long long>(e.size()) - 1;
    }
    if (!ok) continue;
    const int count = std::popcount(mask);
    if (weight > best_weight || (weight == best_weight && count > best_count)) {
      best_weight = weight;
      best_count = count;
      best_mask = mask;
    }
  }
  std::vector<std::size_t> chosen;
  for (std::size_t id = 0; id < m; ++id) {
    if (best_mask >> id & 1U) chosen.push_back(id);
  }
  return chosen;
}

}  // namespace

std::vector<std::size_t> spanning_hyperforest(const SignedHypergraph& h, ForestSearch mode) {
  return mode == ForestSearch::exact ? exact_forest(h) : greedy_forest(h);
}

long long forest_weight(const SignedHypergraph& h, std::span<const std::size_t> edge_ids) {
  long long w = 0;
  for (std::size_t id : edge_ids) {
    const std::size_t size = h.edge(id).size();
    if (size > 0) w += static_cast<long long>(size) - 1;
  }
  return w;
}

bool is_acyclic_family(const SignedHypergraph& h, std::span<const std::size_t> edge_ids) {
  DisjointSet ds(h.num_vertices());
  return std::all_of(edge_ids.begin(), edge_ids.end(),
                     [&](std::size_t id) { return try_add(ds, h.edge(id)); });
}

}  // namespace shg
