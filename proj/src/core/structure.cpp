#include "shg/structure.hpp"

#include <algorithm>

#include "shg/disjoint_set.hpp"

namespace shg {

namespace {

DisjointSet join_edges(const SignedHypergraph& h, std::span<const std::size_t> edge_ids) {
  DisjointSet ds(h.num_vertices());
  for (std::size_t id : edge_ids) {
    const auto inc = h.edge(id).incidences();
    for (std::size_t i = 1; i < inc.size(); ++i) ds.unite(inc[0].vertex, inc[i].vertex);
  }
  return ds;
}

std::vector<std::size_t> all_edge_ids(const SignedHypergraph& h) {
  std::vector<std::size_t> ids(h.num_edges());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

VertexPartition canonical_partition(std::vector<VertexSet> blocks) {
  VertexPartition p;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    p.covers.insert(p.covers.end(), b.begin(), b.end());
  }
  std::erase_if(blocks, [](const VertexSet& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  std::sort(p.covers.begin(), p.covers.end());
  p.blocks = std::move(blocks);
  return p;
}

VertexPartition connected_components(const SignedHypergraph& h) {
  const auto ids = all_edge_ids(h);
  DisjointSet ds = join_edges(h, ids);
  std::vector<VertexSet> by_root(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) by_root[ds.find(v)].push_back(v);
  return canonical_partition(std::move(by_root));
}

std::size_t component_count(const SignedHypergraph& h) {
  const auto ids = all_edge_ids(h);
  return join_edges(h, ids).num_sets();
}

Relabeled induced_subhypergraph(const SignedHypergraph& h, std::span<const Vertex> subset) {
  const std::size_t n = h.num_vertices();
  std::vector<Vertex> to_new(n, n);
  Relabeled out;
  for (Vertex v : subset) {
    if (v >= n) throw Error("vertex out of range");
    if (to_new[v] != n) throw Error("duplicate vertex in subset");
    to_new[v] = out.original.size();
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    std::vector<Incidence> kept;
    for (const auto& inc : e.incidences()) {
      if (to_new[inc.vertex] != n) kept.push_back({to_new[inc.vertex], inc.sign});
    }
    if (!kept.empty()) edges.emplace_back(std::move(kept));
  }
  out.graph = SignedHypergraph(out.original.size(), std::move(edges));
  return out;
}

Relabeled weak_delete(const SignedHypergraph& h, Vertex v) {
  const std::size_t n = h.num_vertices();
  if (v >= n) throw Error("vertex out of range");
  Relabeled out;
  for (Vertex u = 0; u < n; ++u) {
    if (u != v) out.original.push_back(u);
  }
  auto relabel = [v](Vertex u) { return u < v ? u : u - 1; };
  std::vector<Edge> edges;
  edges.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    std::vector<Incidence> kept;
    int removed_sign = 0;
    for (const auto& inc : e.incidences()) {
      if (inc.vertex == v) {
        removed_sign = inc.sign;
      } else {
        kept.push_back({relabel(inc.vertex), inc.sign});
      }
    }
    // sgn(e \ v) = -sigma(v, e) * sgn(e); flip one incidence to compensate.
    if (removed_sign == 1 && !kept.empty()) kept.front().sign = -kept.front().sign;
    edges.emplace_back(std::move(kept));
  }
  out.graph = SignedHypergraph(n - 1, std::move(edges), true);
  return out;
}

SignedHypergraph drop_empty_edges(const SignedHypergraph& h) {
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (!e.empty()) edges.push_back(e);
  }
  return SignedHypergraph(h.num_vertices(), std::move(edges));
}

CycleStats cyclomatic_of_edges(const SignedHypergraph& h, std::span<const std::size_t> edge_ids) {
  CycleStats s;
  for (std::size_t id : edge_ids) {
    const std::size_t size = h.edge(id).size();
    if (size > 0) s.sum_edge_sizes_minus_one += static_cast<long long>(size) - 1;
  }
  s.n_vertices = h.num_vertices();
  s.n_components = join_edges(h, edge_ids).num_sets();
  s.l = s.sum_edge_sizes_minus_one - static_cast<long long>(s.n_vertices) +
        static_cast<long long>(s.n_components);
  return s;
}

CycleStats cyclomatic(const SignedHypergraph& h) {
  const auto ids = all_edge_ids(h);
  return cyclomatic_of_edges(h, ids);
}

bool is_acyclic(const SignedHypergraph& h) {
  // Per component: sum(|e|-1) over its edges equals its vertex count minus one.
  const auto ids = all_edge_ids(h);
  DisjointSet ds = join_edges(h, ids);
  std::vector<long long> excess(h.num_vertices(), 0);
  for (Vertex v = 0; v < h.num_vertices(); ++v) excess[ds.find(v)] -= 1;
  for (const Edge& e : h.edges()) {
    if (!e.empty()) excess[ds.find(e.incidences().front().vertex)] += static_cast<long long>(e.size()) - 1;
  }
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (ds.find(v) == v && excess[v] != -1) return false;
  }
  return true;
}

bool is_tree_like(const SignedHypergraph& h, Vertex x) {
  if (x >= h.num_vertices()) throw Error("vertex out of range");
  const auto before = static_cast<long long>(component_count(h));
  const auto after = static_cast<long long>(component_count(drop_empty_edges(weak_delete(h, x).graph)));
  return after - before == static_cast<long long>(h.degree(x)) - 1;
}

}  // namespace shg
