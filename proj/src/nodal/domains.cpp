#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "shg/disjoint_set.hpp"
#include "shg/nodal.hpp"

namespace shg {

namespace {

std::vector<VertexSet> classes_on(DisjointSet& ds, const VertexSet& members) {
  std::map<std::size_t, VertexSet> by_root;
  for (Vertex v : members) by_root[ds.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [root, set] : by_root) out.push_back(std::move(set));
  return canonical_partition(std::move(out)).blocks;
}

void require_length(const SignedHypergraph& h, const VertexFunction& f) {
  if (f.size() != h.num_vertices()) throw Error("function length does not match vertex count");
}

}  // namespace

NodalCounts counts(const NodalDecomposition& dec) { return {dec.strong_count(), dec.weak_count()}; }

std::vector<VertexSet> strong_domains(const SignedHypergraph& h, const VertexFunction& f) {
  require_length(h, f);
  DisjointSet ds(h.num_vertices());
  for (const Edge& e : h.edges()) {
    if (e.size() < 2) continue;
    const int s = edge_sign(e);
    const auto inc = e.incidences();
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (f.sign(inc[i].vertex) * s * f.sign(inc[j].vertex) > 0) {
          ds.unite(inc[i].vertex, inc[j].vertex);
        }
      }
    }
  }
  return classes_on(ds, f.support());
}

std::vector<VertexSet> strong_domains(const Matrix& coupling, const VertexFunction& f) {
  const auto n = static_cast<std::size_t>(coupling.rows());
  if (coupling.cols() != coupling.rows() || f.size() != n) {
    throw Error("coupling matrix does not match function length");
  }
  auto sgn = [](double v) { return (v > 0) - (v < 0); };
  DisjointSet ds(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const int fxy = f.sign(x) * f.sign(y);
      const auto xi = static_cast<Eigen::Index>(x);
      const auto yi = static_cast<Eigen::Index>(y);
      if (sgn(coupling(xi, yi)) * fxy > 0 || sgn(coupling(yi, xi)) * fxy > 0) ds.unite(x, y);
    }
  }
  return classes_on(ds, f.support());
}

Matrix coupling_from_operator(const Matrix& op) {
  Matrix c = -op;
  c.diagonal().setZero();
  return c;
}

WeakDomains weak_domains(const SignedHypergraph& h, const VertexFunction& f) {
  require_length(h, f);
  const std::size_t n = h.num_vertices();
  const VertexSet support = f.support();
  std::vector<int> edge_signs(h.num_edges(), 0);
  for (std::size_t id = 0; id < h.num_edges(); ++id) {
    if (!h.edge(id).empty()) edge_signs[id] = edge_sign(h.edge(id));
  }

  DisjointSet links(n);
  // state index: 2 * vertex + (sign < 0)
  std::vector<char> visited(2 * n);
  std::deque<std::pair<Vertex, int>> queue;
  for (Vertex u : support) {
    std::fill(visited.begin(), visited.end(), 0);
    queue.clear();
    auto reach = [&](Vertex w, int s) {
      if (w == u) return;
      if (!f.is_zero(w)) {
        if (f.sign(u) * s * f.sign(w) > 0) links.unite(u, w);
        return;
      }
      char& seen = visited[2 * w + (s < 0)];
      if (!seen) {
        seen = 1;
        queue.emplace_back(w, s);
      }
    };
    auto expand = [&](Vertex from, int s) {
      for (std::size_t id : h.incident_edges(from)) {
        for (const auto& inc : h.edge(id).incidences()) {
          if (inc.vertex != from) reach(inc.vertex, s * edge_signs[id]);
        }
      }
    };
    expand(u, 1);
    while (!queue.empty()) {
      const auto [z, s] = queue.front();
      queue.pop_front();
      expand(z, s);
    }
  }

  WeakDomains out;
  out.cores = classes_on(links, support);

  // Zero regions: zeros joined through shared edges.
  DisjointSet zero_regions(n);
  for (const Edge& e : h.edges()) {
    Vertex first_zero = n;
    for (const auto& inc : e.incidences()) {
      if (!f.is_zero(inc.vertex)) continue;
      if (first_zero == n) {
        first_zero = inc.vertex;
      } else {
        zero_regions.unite(first_zero, inc.vertex);
      }
    }
  }
  std::vector<std::size_t> core_of(n, out.cores.size());
  for (std::size_t i = 0; i < out.cores.size(); ++i) {
    for (Vertex v : out.cores[i]) core_of[v] = i;
  }
  std::map<std::size_t, std::set<std::size_t>> cores_near_region;
  for (const Edge& e : h.edges()) {
    for (const auto& z : e.incidences()) {
      if (!f.is_zero(z.vertex)) continue;
      for (const auto& w : e.incidences()) {
        if (!f.is_zero(w.vertex)) cores_near_region[zero_regions.find(z.vertex)].insert(core_of[w.vertex]);
      }
    }
  }
  out.domains = out.cores;
  for (Vertex z = 0; z < n; ++z) {
    if (!f.is_zero(z)) continue;
    auto it = cores_near_region.find(zero_regions.find(z));
    if (it == cores_near_region.end()) continue;
    for (std::size_t i : it->second) out.domains[i].push_back(z);
  }
  for (auto& d : out.domains) std::sort(d.begin(), d.end());
  return out;
}

NodalDecomposition decompose(const SignedHypergraph& h, const VertexFunction& f) {
  NodalDecomposition dec;
  dec.support = f.support();
  dec.zero_tolerance = f.zero_tolerance();
  dec.strong_domains = strong_domains(h, f);
  auto weak = weak_domains(h, f);
  dec.weak_cores = std::move(weak.cores);
  dec.weak_domains = std::move(weak.domains);
  return dec;
}

bool DomainGraph::connected() const {
  if (nodes == 0) return true;
  DisjointSet ds(nodes);
  for (const auto& [a, b] : edges) ds.unite(a, b);
  return ds.num_sets() == 1;
}

DomainGraph domain_adjacency_graph(const SignedHypergraph& h, const NodalDecomposition& dec) {
  DomainGraph g;
  g.nodes = dec.weak_count();
  std::vector<std::vector<std::size_t>> member_of(h.num_vertices());
  for (std::size_t i = 0; i < dec.weak_domains.size(); ++i) {
    for (Vertex v : dec.weak_domains[i]) member_of[v].push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> adjacent;
  auto link_all = [&](const std::vector<std::size_t>& ids) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (ids[a] != ids[b]) adjacent.insert(std::minmax(ids[a], ids[b]));
      }
    }
  };
  for (const auto& ids : member_of) link_all(ids);
  for (const Edge& e : h.edges()) {
    std::vector<std::size_t> ids;
    for (const auto& inc : e.incidences()) {
      ids.insert(ids.end(), member_of[inc.vertex].begin(), member_of[inc.vertex].end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    link_all(ids);
  }
  g.edges.assign(adjacent.begin(), adjacent.end());
  return g;
}

}  // namespace shg
