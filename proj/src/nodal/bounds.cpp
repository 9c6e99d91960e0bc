#include "shg/bounds.hpp"

namespace shg {

BoundReport check_bounds(const SignedHypergraph& h, const VertexFunction& f, std::size_t k, std::size_t r,
                         PositiveEdgeRule rule) {
  if (k == 0 || r == 0 || k + r - 1 > h.num_vertices()) throw Error("eigenvalue index out of range");
  const auto other =
      rule == PositiveEdgeRule::all_pairs ? PositiveEdgeRule::exists_ordering : PositiveEdgeRule::all_pairs;
  BoundReport rep;
  rep.k = k;
  rep.r = r;
  rep.index = k - 1;
  rep.rule = rule;
  rep.zero_tolerance = f.zero_tolerance();
  rep.c = component_count(h);
  rep.l = cyclomatic(h).l;
  const VertexSet support = f.support();
  rep.l_prime = cyclomatic(drop_empty_edges(induced_subhypergraph(h, support).graph)).l;
  rep.l_plus = positive_cyclomatic(h, f, rule).l;
  rep.l_plus_alternative = positive_cyclomatic(h, f, other).l;
  rep.fiedler_size = fiedler_sets(h, f).fiedler.size();
  const auto dec = decompose(h, f);
  rep.strong = dec.strong_count();
  rep.weak = dec.weak_count();
  return rep;
}

BoundReport check_bounds(const SignedHypergraph& h, const Spectrum& spectrum, std::size_t index,
                         PositiveEdgeRule rule, double rel_zero_tol) {
  if (index >= spectrum.size()) throw Error("eigenvalue index out of range");
  const auto& cluster = spectrum.cluster_of(index);
  BoundReport rep = check_bounds(h, spectrum.eigenfunction(index, rel_zero_tol), cluster.first + 1,
                                 cluster.multiplicity, rule);
  rep.index = index;
  rep.eigenvalue = spectrum.eigenvalues[index];
  return rep;
}

ForestCountDiagnostic forest_domain_count(const SignedHypergraph& h, const VertexFunction& f) {
  std::vector<Edge> inside;
  for (std::size_t id : positive_edges(h, f, PositiveEdgeRule::all_pairs)) {
    inside.push_back(h.edge(id));
  }
  const SignedHypergraph s(h.num_vertices(), std::move(inside));
  const auto forest = spanning_hyperforest(s, ForestSearch::exact);
  ForestCountDiagnostic d;
  d.formula_value = static_cast<long long>(h.num_vertices()) - static_cast<long long>(f.zeros().size()) -
                    forest_weight(s, forest);
  d.component_value = static_cast<long long>(strong_domains(h, f).size());
  return d;
}

}  // namespace shg
