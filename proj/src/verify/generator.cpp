#include "shg/generator.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace shg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("empty range");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  if (lo > hi) throw Error("empty range");
  return lo + static_cast<std::size_t>(below(hi - lo + 1));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t i) {
  std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void GenConfig::validate() const {
  auto check = [](std::pair<std::size_t, std::size_t> r, const char* what) {
    if (r.first > r.second) throw Error(std::string("empty ") + what + " range");
  };
  check(n_range, "vertex");
  check(m_range, "edge count");
  check(edge_size_range, "edge size");
  if (n_range.first == 0) throw Error("instances need at least one vertex");
  if (edge_size_range.first == 0) throw Error("edge sizes must be at least 1");
  if (edge_size_range.first > n_range.first) {
    throw Error("infeasible configuration: edge size exceeds vertex count");
  }
  if (!(sign_bias >= 0.0 && sign_bias <= 1.0)) throw Error("sign bias must lie in [0, 1]");
  if (classical && (edge_size_range.first > 2 || edge_size_range.second < 2)) {
    throw Error("classical instances need edge size 2");
  }
}

namespace {

constexpr int kAttempts = 1000;

std::vector<Vertex> sorted_vertices(const std::vector<Incidence>& e) {
  std::vector<Vertex> vs;
  for (const auto& inc : e) vs.push_back(inc.vertex);
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<Incidence> draw_edge(Rng& rng, const GenConfig& cfg, std::size_t n, std::vector<Vertex>& pool) {
  const std::size_t size =
      cfg.classical ? 2 : rng.between(cfg.edge_size_range.first, std::min(cfg.edge_size_range.second, n));
  std::vector<Incidence> e;
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[i + rng.below(n - i)]);
    e.push_back({pool[i], rng.chance(cfg.sign_bias) ? 1 : -1});
  }
  if (cfg.classical) {
    e[0].sign = rng.chance(0.5) ? 1 : -1;
    e[1].sign = -e[0].sign;
  }
  return e;
}

bool repair_isolated(Rng& rng, std::size_t n, std::vector<std::vector<Incidence>>& edges,
                     std::set<std::vector<Vertex>>& keys) {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    for (const auto& inc : e) ++deg[inc.vertex];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t id = 0; id < edges.size(); ++id) {
      for (std::size_t pos = 0; pos < edges[id].size(); ++pos) {
        if (deg[edges[id][pos].vertex] < 2) continue;
        auto swapped = edges[id];
        swapped[pos].vertex = v;
        if (!keys.count(sorted_vertices(swapped))) slots.emplace_back(id, pos);
      }
    }
    if (slots.empty()) return false;
    const auto [id, pos] = slots[rng.below(slots.size())];
    keys.erase(sorted_vertices(edges[id]));
    --deg[edges[id][pos].vertex];
    edges[id][pos].vertex = v;
    ++deg[v];
    keys.insert(sorted_vertices(edges[id]));
  }
  return true;
}

}  // namespace

SignedHypergraph generate_instance(const GenConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::size_t n = rng.between(cfg.n_range.first, cfg.n_range.second);
    const std::size_t m = rng.between(cfg.m_range.first, cfg.m_range.second);
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;

    std::vector<std::vector<Incidence>> edges;
    std::set<std::vector<Vertex>> keys;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      ok = false;
      for (int tries = 0; tries < 50; ++tries) {
        auto e = draw_edge(rng, cfg, n, pool);
        if (keys.insert(sorted_vertices(e)).second) {
          edges.push_back(std::move(e));
          ok = true;
          break;
        }
      }
    }
    if (ok && cfg.no_isolated) ok = repair_isolated(rng, n, edges, keys);
    if (!ok) continue;

    std::vector<Edge> built;
    for (auto& e : edges) built.emplace_back(std::move(e));
    return SignedHypergraph(n, std::move(built));
  }
  throw Error("infeasible configuration: no instance after repeated attempts");
}

std::vector<SignedHypergraph> generate(const GenConfig& cfg) {
  std::vector<SignedHypergraph> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    out.push_back(generate_instance(cfg, instance_seed(cfg.seed, i)));
  }
  return out;
}

SignedHypergraph random_supertree(Rng& rng, std::size_t n, std::size_t max_edge) {
  if (n == 0) throw Error("supertree needs a vertex");
  if (max_edge < 2 && n > 1) throw Error("supertree edges need at least two vertices");
  std::vector<Vertex> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = v;
  rng.shuffle(label);

  std::vector<Edge> edges;
  std::size_t placed = 1;
  while (placed < n) {
    const std::size_t size = rng.between(2, std::min(max_edge, n - placed + 1));
    std::vector<Incidence> e;
    e.push_back({label[rng.below(placed)], rng.chance(0.5) ? 1 : -1});
    for (std::size_t i = 1; i < size; ++i) e.push_back({label[placed++], rng.chance(0.5) ? 1 : -1});
    rng.shuffle(e);
    edges.emplace_back(std::move(e));
  }
  return SignedHypergraph(n, std::move(edges));
}

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.uniform(-1.0, 1.0);
  return v;
}

Vector random_sign_pattern(Rng& rng, std::size_t n, double zero_rate) {
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (rng.chance(zero_rate)) {
      v[i] = 0.0;
    } else {
      const double mag = rng.chance(0.5) ? 1.0 : 2.0;
      v[i] = rng.chance(0.5) ? mag : -mag;
    }
  }
  return v;
}

}  // namespace shg
