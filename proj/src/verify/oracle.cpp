#include "shg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace shg {

namespace {

using Relation = std::vector<std::vector<char>>;

/// Classes of the reflexive, symmetric, transitive closure on `members`.
std::vector<VertexSet> closure_classes(Relation rel, const VertexSet& members) {
  const std::size_t n = rel.size();
  for (Vertex v : members) rel[v][v] = 1;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (rel[x][y]) rel[y][x] = 1;
    }
  }
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (Vertex j = 0; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = 1;
      }
    }
  }
  std::vector<VertexSet> classes;
  std::vector<char> taken(n, 0);
  for (Vertex x : members) {
    if (taken[x]) continue;
    VertexSet cls;
    for (Vertex y : members) {
      if (rel[x][y]) {
        cls.push_back(y);
        taken[y] = 1;
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

std::string sets_text(const std::vector<VertexSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? " " : "") + format_vertex_set(sets[i]);
  return s.empty() ? "(none)" : s;
}

}  // namespace

OracleDomains oracle_domains(const SignedHypergraph& h, const VertexFunction& f) {
  const std::size_t n = h.num_vertices();
  if (n > kOracleVertexLimit) throw Error("instance too large");
  if (f.size() != n) throw Error("function length does not match vertex count");
  const VertexSet support = f.support();

  // (edge sign, other vertex) steps out of each vertex, one per edge.
  std::vector<std::vector<std::pair<int, Vertex>>> steps(n);
  for (const Edge& e : h.edges()) {
    if (e.size() < 2) continue;
    const int s = edge_sign(e);
    for (const auto& a : e.incidences()) {
      for (const auto& b : e.incidences()) {
        if (a.vertex != b.vertex) steps[a.vertex].emplace_back(s, b.vertex);
      }
    }
  }

  OracleDomains out;

  Relation strong(n, std::vector<char>(n, 0));
  std::vector<char> on_path(n, 0);
  std::function<void(Vertex, Vertex)> extend_strong = [&](Vertex start, Vertex at) {
    strong[start][at] = 1;
    on_path[at] = 1;
    for (const auto& [s, y] : steps[at]) {
      if (!on_path[y] && f.sign(at) * s * f.sign(y) > 0) extend_strong(start, y);
    }
    on_path[at] = 0;
  };
  for (Vertex x : support) extend_strong(x, x);
  out.strong = closure_classes(strong, support);

  Relation weak(n, std::vector<char>(n, 0));
  std::vector<int> visits(n, 0);
  std::set<std::tuple<Vertex, int, std::vector<int>>> explored;
  std::function<void(Vertex, Vertex, int)> extend_weak = [&](Vertex start, Vertex at, int acc) {
    if (!explored.insert({at, acc, visits}).second) return;
    for (const auto& [s, y] : steps[at]) {
      const int next = acc * s;
      if (!f.is_zero(y)) {
        if (y != start && f.sign(start) * next * f.sign(y) > 0) weak[start][y] = 1;
        continue;
      }
      if (visits[y] == 2) continue;
      ++visits[y];
      extend_weak(start, y, next);
      --visits[y];
    }
  };
  for (Vertex u : support) {
    explored.clear();
    extend_weak(u, u, 1);
  }
  out.weak_cores = closure_classes(weak, support);

  std::vector<std::size_t> core_of(n, out.weak_cores.size());
  for (std::size_t i = 0; i < out.weak_cores.size(); ++i) {
    for (Vertex v : out.weak_cores[i]) core_of[v] = i;
  }
  out.weak_domains = out.weak_cores;
  std::vector<char> zero_path(n, 0);
  std::set<std::size_t> reached;
  std::function<void(Vertex)> extend_zero = [&](Vertex at) {
    zero_path[at] = 1;
    for (const auto& [s, y] : steps[at]) {
      if (!f.is_zero(y)) {
        reached.insert(core_of[y]);
      } else if (!zero_path[y]) {
        extend_zero(y);
      }
    }
    zero_path[at] = 0;
  };
  for (Vertex z : f.zeros()) {
    reached.clear();
    extend_zero(z);
    for (std::size_t i : reached) out.weak_domains[i].push_back(z);
  }
  for (auto& d : out.weak_domains) std::sort(d.begin(), d.end());
  return out;
}

std::string compare_with_oracle(const SignedHypergraph& h, const VertexFunction& f) {
  const auto brute = oracle_domains(h, f);
  const auto fast = decompose(h, f);
  if (brute.strong != fast.strong_domains) {
    return "strong domains: oracle " + sets_text(brute.strong) + ", efficient " +
           sets_text(fast.strong_domains);
  }
  if (brute.weak_cores != fast.weak_cores) {
    return "weak cores: oracle " + sets_text(brute.weak_cores) + ", efficient " + sets_text(fast.weak_cores);
  }
  if (brute.weak_domains != fast.weak_domains) {
    return "weak domains: oracle " + sets_text(brute.weak_domains) + ", efficient " +
           sets_text(fast.weak_domains);
  }
  return {};
}

}  // namespace shg
