#ifndef SHG_STRUCTURE_HPP
#define SHG_STRUCTURE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "shg/hypergraph.hpp"

namespace shg {

/// Disjoint blocks covering a vertex set. Blocks are sorted and ordered by
/// their smallest vertex.
struct VertexPartition {
  std::vector<VertexSet> blocks;
  VertexSet covers;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

/// Sorts every block and orders blocks by their first vertex.
VertexPartition canonical_partition(std::vector<VertexSet> blocks);

struct CycleStats {
  long long sum_edge_sizes_minus_one = 0;
  std::size_t n_vertices = 0;
  std::size_t n_components = 0;
  long long l = 0;  ///< cyclomatic number

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

VertexPartition connected_components(const SignedHypergraph& h);
std::size_t component_count(const SignedHypergraph& h);

/// Berge-induced subhypergraph: edges e ∩ A for every edge meeting A,
/// duplicates kept, incidence signs kept, vertices relabeled in order of A.
Relabeled induced_subhypergraph(const SignedHypergraph& h, std::span<const Vertex> subset);

/// Weak vertex deletion. Edges become e \ {v}; empty edges are kept.
/// Truncated edges keep their edge sign: if the removed incidence was +1 the
/// first remaining incidence is flipped, so the coupling between the
/// remaining vertices is unchanged.
Relabeled weak_delete(const SignedHypergraph& h, Vertex v);

/// Same hypergraph without its empty edges.
SignedHypergraph drop_empty_edges(const SignedHypergraph& h);

/// sum(|e|-1) - |V| + c, empty edges contributing 0.
CycleStats cyclomatic(const SignedHypergraph& h);

/// Cyclomatic number of the hypergraph on all of h's vertices restricted to
/// the listed edges.
CycleStats cyclomatic_of_edges(const SignedHypergraph& h, std::span<const std::size_t> edge_ids);

bool is_acyclic(const SignedHypergraph& h);

/// Weak deletion of x raises the component count by deg(x) - 1.
bool is_tree_like(const SignedHypergraph& h, Vertex x);

enum class ForestSearch { greedy, exact };

inline constexpr std::size_t kExactForestEdgeLimit = 16;

/// Acyclic edge subset. Greedy scans edges by decreasing size (ties by input
/// order); exact maximises sum(|e|-1) over all subsets, then edge count.
std::vector<std::size_t> spanning_hyperforest(const SignedHypergraph& h, ForestSearch mode);

long long forest_weight(const SignedHypergraph& h, std::span<const std::size_t> edge_ids);

/// True iff the listed edges form an acyclic family (each edge, added in
/// turn, meets pairwise distinct components).
bool is_acyclic_family(const SignedHypergraph& h, std::span<const std::size_t> edge_ids);

}  // namespace shg

#endif  // SHG_STRUCTURE_HPP
