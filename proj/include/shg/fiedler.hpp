#ifndef SHG_FIEDLER_HPP
#define SHG_FIEDLER_HPP

#include <string_view>
#include <vector>

#include "shg/matrices.hpp"
#include "shg/structure.hpp"

namespace shg {

/// Zeros of f split into `fiedler` (surrounded by zeros, or not tree-like)
/// and the rest.
struct FiedlerSets {
  VertexSet fiedler;
  VertexSet complement;
};

FiedlerSets fiedler_sets(const SignedHypergraph& h, const VertexFunction& f);

/// When does an edge count as positive for f?
///   all_pairs:       every vertex nonzero and f(x) sgn(e) f(y) > 0 for every pair.
///   exists_ordering: some ordering of the edge satisfies it for consecutive pairs.
enum class PositiveEdgeRule { all_pairs, exists_ordering };

std::string_view to_string(PositiveEdgeRule rule);
/// Accepts "all_pairs" or "exists_ordering"; throws otherwise.
PositiveEdgeRule parse_positive_edge_rule(std::string_view text);

bool edge_respects_sign(const Edge& e, const VertexFunction& f, PositiveEdgeRule rule);

/// Ids of the positive edges, ascending.
std::vector<std::size_t> positive_edges(const SignedHypergraph& h, const VertexFunction& f,
                                        PositiveEdgeRule rule);

/// Cyclomatic number of (V, positive edges).
CycleStats positive_cyclomatic(const SignedHypergraph& h, const VertexFunction& f, PositiveEdgeRule rule);

}  // namespace shg

#endif  // SHG_FIEDLER_HPP
