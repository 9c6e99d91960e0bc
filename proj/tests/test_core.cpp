#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "shg/disjoint_set.hpp"
#include "shg/fixtures.hpp"
#include "shg/generator.hpp"
#include "shg/structure.hpp"

using namespace shg;
using shg::test::graph;
using shg::test::ids;
using shg::test::sets;

namespace {

Edge edge(std::initializer_list<std::pair<Vertex, int>> inc) {
  std::vector<Incidence> out;
  for (auto [v, s] : inc) out.push_back({v, s});
  return Edge(out);
}

// Acyclic iff sum(|e|-1) + components == n for the chosen edges.
bool acyclic_by_count(const SignedHypergraph& h, const std::vector<std::size_t>& chosen) {
  DisjointSet ds(h.num_vertices());
  long long sum = 0;
  for (auto id : chosen) {
    const auto vs = h.edge(id).vertices();
    sum += static_cast<long long>(vs.size()) - 1;
    for (std::size_t i = 1; i < vs.size(); ++i) ds.unite(vs[0], vs[i]);
  }
  return sum + static_cast<long long>(ds.num_sets()) == static_cast<long long>(h.num_vertices());
}

long long brute_force_max_forest(const SignedHypergraph& h) {
  long long best = 0;
  const std::size_t m = h.num_edges();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) chosen.push_back(i);
    }
    if (acyclic_by_count(h, chosen)) best = std::max(best, forest_weight(h, chosen));
  }
  return best;
}

}  // namespace

TEST_CASE("edge sign follows size parity and incidence signs") {
  CHECK(edge_sign(edge({{0, 1}, {1, -1}})) == 1);
  CHECK(edge_sign(edge({{0, 1}, {1, 1}, {2, 1}})) == 1);
  CHECK(edge_sign(edge({{0, 1}, {1, 1}})) == -1);
  CHECK(edge_sign(edge({{0, -1}})) == -1);
  CHECK_THROWS_WITH(edge_sign(Edge{}), doctest::Contains("undefined sign"));
}

TEST_CASE("edges reject repeated vertices") { CHECK_THROWS_AS(edge({{0, 1}, {0, -1}}), Error); }

TEST_CASE("fixture degrees") {
  const auto h = example1::hypergraph();
  std::vector<std::size_t> deg;
  for (Vertex v = 0; v < 9; ++v) deg.push_back(h.degree(v));
  CHECK(deg == std::vector<std::size_t>{3, 1, 3, 1, 3, 1, 1, 1, 1});
  CHECK(graph("vertices 3\nedge 1:+ 2:-\n").degree(2) == 0);
  CHECK(h.neighbors(ids({7})[0]) == ids({1}));
}

TEST_CASE("connected components") {
  CHECK(connected_components(example1::hypergraph()).size() == 1);
  const auto empty = graph("vertices 3\n");
  const auto parts = connected_components(empty);
  CHECK(parts.blocks == sets({{1}, {2}, {3}}));

  const auto twice = graph(
      "vertices 18\n"
      "edge 1:+ 2:+ 3:+\nedge 3:+ 4:+ 5:+\nedge 1:+ 5:+ 6:+\nedge 1:+ 7:+\nedge 5:+ 8:+\nedge 3:+ 9:+\n"
      "edge 10:+ 11:+ 12:+\nedge 12:+ 13:+ 14:+\nedge 10:+ 14:+ 15:+\nedge 10:+ 16:+\n"
      "edge 14:+ 17:+\nedge 12:+ 18:+\n");
  CHECK(component_count(twice) == 2);
}

TEST_CASE("induced subhypergraph keeps truncated edges and signs") {
  const auto h = example1::hypergraph();
  const auto support = ids({1, 3, 4, 6, 7, 9});
  const auto sub = induced_subhypergraph(h, support);
  CHECK(sub.original == support);
  std::vector<VertexSet> edges;
  for (const auto& e : sub.graph.edges()) {
    VertexSet vs;
    for (auto v : e.vertices()) vs.push_back(sub.original[v]);
    edges.push_back(vs);
  }
  CHECK(edges == sets({{1, 3}, {3, 4}, {1, 6}, {1, 7}, {3, 9}}));

  const auto single = induced_subhypergraph(h, ids({7}));
  REQUIRE(single.graph.num_edges() == 1);
  CHECK(single.graph.edge(0).size() == 1);
  CHECK(single.graph.degree(0) == 1);

  VertexSet all(9);
  for (Vertex v = 0; v < 9; ++v) all[v] = v;
  CHECK(induced_subhypergraph(h, all).graph == h);
  CHECK(induced_subhypergraph(h, {}).graph.num_vertices() == 0);
}

TEST_CASE("induced subhypergraph keeps duplicate truncations") {
  const auto h = graph("vertices 4\nedge 1:+ 2:+ 3:+\nedge 1:+ 2:- 4:+\n");
  const auto sub = induced_subhypergraph(h, ids({1, 2}));
  CHECK(sub.graph.num_edges() == 2);
  CHECK(cyclomatic(sub.graph).l == 1);
}

TEST_CASE("weak deletion") {
  const auto h = example1::hypergraph();
  SUBCASE("vertex 7 leaves a singleton edge") {
    const auto d = weak_delete(h, ids({7})[0]);
    CHECK(d.graph.num_vertices() == 8);
    CHECK(d.graph.allows_empty_edges());
    const auto& e4 = d.graph.edge(3);
    REQUIRE(e4.size() == 1);
    CHECK(d.original[e4.vertices()[0]] == ids({1})[0]);
  }
  SUBCASE("vertex 3 truncates three edges") {
    const auto d = weak_delete(h, ids({3})[0]);
    auto old = [&](std::size_t id) {
      VertexSet vs;
      for (auto v : d.graph.edge(id).vertices()) vs.push_back(d.original[v]);
      return vs;
    };
    CHECK(old(0) == ids({1, 2}));
    CHECK(old(1) == ids({4, 5}));
    CHECK(old(5) == ids({9}));
    // Truncated edges keep their sign.
    for (std::size_t id : {0, 1, 5}) CHECK(edge_sign(d.graph.edge(id)) == edge_sign(h.edge(id)));
  }
  SUBCASE("isolated vertex of an edgeless hypergraph") {
    const auto d = weak_delete(graph("vertices 2\n"), 0);
    CHECK(d.graph.num_edges() == 0);
    CHECK(d.graph.num_vertices() == 1);
  }
  SUBCASE("empty edges survive") {
    const auto d = weak_delete(graph("vertices 2\nedge 1:+\nedge 1:+ 2:-\n"), 0);
    CHECK(d.graph.num_edges() == 2);
    CHECK(d.graph.edge(0).empty());
    CHECK(drop_empty_edges(d.graph).num_edges() == 1);
    CHECK(cyclomatic(d.graph).l == 0);
  }
}

TEST_CASE("acyclicity and cyclomatic number") {
  CHECK(is_acyclic(graph("vertices 3\nedge 1:+ 2:+ 3:+\n")));
  CHECK_FALSE(is_acyclic(example1::hypergraph()));
  CHECK(is_acyclic(graph("vertices 4\nedge 1:+ 2:-\nedge 3:+ 4:-\n")));

  const auto stats = cyclomatic(example1::hypergraph());
  CHECK(stats.sum_edge_sizes_minus_one == 9);
  CHECK(stats.n_vertices == 9);
  CHECK(stats.n_components == 1);
  CHECK(stats.l == 1);
  CHECK(cyclomatic(graph("vertices 4\nedge 1:+ 2:+ 3:+\nedge 1:+ 2:+ 4:+\n")).l == 1);
}

TEST_CASE("acyclicity is checked per component") {
  // A tree with spare vertices next to a triangle: the global count balances
  // (l = 1 either way), the per-component test must still see the cycle.
  const auto h = graph("vertices 6\nedge 1:+ 2:-\nedge 2:+ 3:-\nedge 1:+ 3:-\nedge 4:+ 5:- 6:+\n");
  CHECK_FALSE(is_acyclic(h));
  CHECK(cyclomatic(h).l == 1);
}

TEST_CASE("random supertrees are acyclic") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto t = random_supertree(rng, 3 + rng.below(8), 4);
    CHECK(is_acyclic(t));
    CHECK(cyclomatic(t).l == 0);
    CHECK(component_count(t) == 1);
  }
}

TEST_CASE("tree-like vertices") {
  const auto path = graph("vertices 3\nedge 1:+ 2:-\nedge 2:+ 3:-\n");
  CHECK(is_tree_like(path, 1));
  const auto triangle = graph("vertices 3\nedge 1:+ 2:-\nedge 2:+ 3:-\nedge 1:+ 3:-\n");
  for (Vertex v = 0; v < 3; ++v) CHECK_FALSE(is_tree_like(triangle, v));
  CHECK(is_tree_like(graph("vertices 3\nedge 1:+ 2:+ 3:+\n"), 1));

  const auto h = example1::hypergraph();
  CHECK(is_tree_like(h, ids({2})[0]));
  CHECK_FALSE(is_tree_like(h, ids({5})[0]));
  CHECK_FALSE(is_tree_like(h, ids({1})[0]));
}

TEST_CASE("spanning hyperforests") {
  SUBCASE("bigger edge wins") {
    const auto h = graph("vertices 3\nedge 1:+ 2:-\nedge 1:+ 2:+ 3:+\n");
    for (auto mode : {ForestSearch::greedy, ForestSearch::exact}) {
      const auto f = spanning_hyperforest(h, mode);
      CHECK(f == std::vector<std::size_t>{1});
      CHECK(forest_weight(h, f) == 2);
    }
    CHECK(brute_force_max_forest(h) == 2);
  }
  SUBCASE("hyperforest input is kept whole") {
    const auto h = graph("vertices 5\nedge 1:+ 2:+ 3:+\nedge 3:+ 4:-\nedge 4:+ 5:-\n");
    for (auto mode : {ForestSearch::greedy, ForestSearch::exact}) {
      CHECK(spanning_hyperforest(h, mode).size() == 3);
    }
  }
  SUBCASE("no spanning hypertree") {
    const auto h = graph("vertices 4\nedge 1:+ 2:+ 3:+\nedge 1:+ 2:+ 4:+\n");
    const auto f = spanning_hyperforest(h, ForestSearch::exact);
    CHECK(f.size() == 1);
    CHECK(forest_weight(h, f) == 2);
    CHECK_FALSE(acyclic_by_count(h, {0, 1}));
  }
  SUBCASE("exact search refuses large inputs") {
    std::string body = "vertices 18\n";
    for (int i = 1; i <= 17; ++i)
      body += "edge " + std::to_string(i) + ":+ " + std::to_string(i + 1) + ":-\n";
    CHECK_THROWS_WITH(spanning_hyperforest(graph(body), ForestSearch::exact),
                      doctest::Contains("exact search too large"));
  }
}

TEST_CASE("exact forest matches exhaustive search on random instances") {
  GenConfig cfg;
  cfg.n_range = {4, 8};
  cfg.m_range = {3, 9};
  for (std::size_t i = 0; i < 60; ++i) {
    const auto h = generate_instance(cfg, instance_seed(5, i));
    const auto exact = spanning_hyperforest(h, ForestSearch::exact);
    const auto greedy = spanning_hyperforest(h, ForestSearch::greedy);
    CHECK(acyclic_by_count(h, exact));
    CHECK(acyclic_by_count(h, greedy));
    CHECK(is_acyclic_family(h, exact));
    CHECK(forest_weight(h, exact) == brute_force_max_forest(h));
    CHECK(forest_weight(h, exact) >= forest_weight(h, greedy));
  }
}

TEST_CASE("deleting tree-like vertices with their edges keeps the cyclomatic number") {
  // Path 1-2-3 plus triangle 3-4-5: vertex 2 is tree-like with degree 2.
  const auto h = graph("vertices 5\nedge 1:+ 2:-\nedge 2:+ 3:-\nedge 3:+ 4:-\nedge 4:+ 5:-\nedge 3:+ 5:-\n");
  REQUIRE(is_tree_like(h, 1));
  const auto rest = induced_subhypergraph(h, ids({1, 3, 4, 5}));
  CHECK(cyclomatic(rest.graph).l == cyclomatic(h).l);
  CHECK(cyclomatic(h).l == 1);
}
