#ifndef SHG_NODAL_HPP
#define SHG_NODAL_HPP

#include <utility>
#include <vector>

#include "shg/matrices.hpp"
#include "shg/structure.hpp"

namespace shg {

/// Strong and weak nodal domains of one function.
///
/// Strong domains partition the support. Weak cores partition the support
/// too; each weak domain is its core plus every zero vertex from which a path
/// through zeros reaches the core, so zero vertices may sit in two domains.
/// All lists are canonical: sets sorted, lists ordered by first vertex of the
/// (core) set.
struct NodalDecomposition {
  VertexSet support;
  std::vector<VertexSet> strong_domains;
  std::vector<VertexSet> weak_cores;
  std::vector<VertexSet> weak_domains;  ///< weak_domains[i] extends weak_cores[i]
  double zero_tolerance = 0.0;

  std::size_t strong_count() const { return strong_domains.size(); }
  std::size_t weak_count() const { return weak_domains.size(); }
};

struct NodalCounts {
  std::size_t strong = 0;
  std::size_t weak = 0;
  friend bool operator==(const NodalCounts&, const NodalCounts&) = default;
};

NodalCounts counts(const NodalDecomposition& dec);

/// Components of the link graph on the support: x and y are linked when some
/// edge contains both and f(x) sgn(e) f(y) > 0.
std::vector<VertexSet> strong_domains(const SignedHypergraph& h, const VertexFunction& f);

/// Same, with links read off a coupling matrix: x and y are linked when
/// C_xy f(x) f(y) > 0 or C_yx f(x) f(y) > 0. Used for operators given only
/// as a matrix.
std::vector<VertexSet> strong_domains(const Matrix& coupling, const VertexFunction& f);

/// Coupling of an operator L = I - D^{-1}A given as a raw matrix: -L with
/// the diagonal cleared. Row scaling by positive degrees keeps signs.
Matrix coupling_from_operator(const Matrix& op);

struct WeakDomains {
  std::vector<VertexSet> cores;
  std::vector<VertexSet> domains;
};

/// Two nonzeros are elementarily linked when a walk between them through
/// zero vertices has f(u) * (product of edge signs) * f(w) > 0; cores are
/// the classes of the closure. The walk search tracks (vertex, sign) states,
/// so a zero region reachable with both signs links every nonzero around it.
WeakDomains weak_domains(const SignedHypergraph& h, const VertexFunction& f);

NodalDecomposition decompose(const SignedHypergraph& h, const VertexFunction& f);

/// Graph on weak domains; two domains are adjacent when they share a vertex
/// or contain two vertices of a common edge.
struct DomainGraph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool connected() const;
};

DomainGraph domain_adjacency_graph(const SignedHypergraph& h, const NodalDecomposition& dec);

}  // namespace shg

#endif  // SHG_NODAL_HPP
