#include "shg/fiedler.hpp"

#include <algorithm>
#include <string>

namespace shg {

FiedlerSets fiedler_sets(const SignedHypergraph& h, const VertexFunction& f) {
  if (f.size() != h.num_vertices()) throw Error("function length does not match vertex count");
  FiedlerSets out;
  for (Vertex x : f.zeros()) {
    const auto around = h.neighbors(x);
    const bool surrounded = std::all_of(around.begin(), around.end(), [&](Vertex y) { return f.is_zero(y); });
    if (surrounded || !is_tree_like(h, x)) {
      out.fiedler.push_back(x);
    } else {
      out.complement.push_back(x);
    }
  }
  return out;
}

std::string_view to_string(PositiveEdgeRule rule) {
  return rule == PositiveEdgeRule::all_pairs ? "all_pairs" : "exists_ordering";
}

PositiveEdgeRule parse_positive_edge_rule(std::string_view text) {
  if (text == "all_pairs") return PositiveEdgeRule::all_pairs;
  if (text == "exists_ordering") return PositiveEdgeRule::exists_ordering;
  throw Error("unknown edge rule '" + std::string(text) + "'");
}

bool edge_respects_sign(const Edge& e, const VertexFunction& f, PositiveEdgeRule rule) {
  if (e.empty()) return false;
  std::size_t positive = 0;
  std::size_t negative = 0;
  for (const auto& inc : e.incidences()) {
    const int s = f.sign(inc.vertex);
    if (s == 0) return false;
    (s > 0 ? positive : negative) += 1;
  }
  const int sg = edge_sign(e);
  if (sg > 0) return positive == 0 || negative == 0;
  // A negative edge needs neighbours of opposite sign. Every pair can only be
  // of opposite sign when there are at most two vertices.
  if (e.size() == 1) return true;
  if (rule == PositiveEdgeRule::all_pairs) return positive == 1 && negative == 1;
  const auto diff = positive > negative ? positive - negative : negative - positive;
  return diff <= 1;
}

std::vector<std::size_t> positive_edges(const SignedHypergraph& h, const VertexFunction& f,
                                        PositiveEdgeRule rule) {
  std::vector<std::size_t> ids;
  for (std::size_t id = 0; id < h.num_edges(); ++id) {
    if (edge_respects_sign(h.edge(id), f, rule)) ids.push_back(id);
  }
  return ids;
}

CycleStats positive_cyclomatic(const SignedHypergraph& h, const VertexFunction& f, PositiveEdgeRule rule) {
  return cyclomatic_of_edges(h, positive_edges(h, f, rule));
}

}  // namespace shg
