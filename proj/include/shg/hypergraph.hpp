#ifndef SHG_HYPERGRAPH_HPP
#define SHG_HYPERGRAPH_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shg {

/// Vertices are dense 0-based indices. Files and reports print them 1-based.
using Vertex = std::size_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Incidence {
  Vertex vertex = 0;
  int sign = 1;  ///< +1 or -1

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// A simple hyperedge: each vertex occurs at most once.
class Edge {
 public:
  Edge() = default;
  explicit Edge(std::vector<Incidence> incidences);

  std::span<const Incidence> incidences() const { return incidences_; }
  std::size_t size() const { return incidences_.size(); }
  bool empty() const { return incidences_.empty(); }
  bool contains(Vertex v) const;
  int incidence_sign(Vertex v) const;
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  std::vector<Incidence> incidences_;
};

/// (-1)^(|e|-1) times the product of the incidence signs.
int edge_sign(const Edge& e);

class SignedHypergraph {
 public:
  SignedHypergraph() = default;
  SignedHypergraph(std::size_t num_vertices, std::vector<Edge> edges, bool allow_empty_edges = false);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  bool allows_empty_edges() const { return allow_empty_edges_; }

  /// Number of incident edges; singleton edges count.
  std::size_t degree(Vertex v) const;
  std::span<const std::size_t> incident_edges(Vertex v) const;
  /// Vertices sharing at least one edge with v, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;

  friend bool operator==(const SignedHypergraph& a, const SignedHypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.allow_empty_edges_ == b.allow_empty_edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  bool allow_empty_edges_ = false;
  std::vector<std::vector<std::size_t>> incident_;
};

/// A hypergraph derived from another one together with the vertex map back.
struct Relabeled {
  SignedHypergraph graph;
  std::vector<Vertex> original;  ///< new vertex -> old vertex

  /// old vertex -> new vertex, or num_vertices() of the parent if dropped.
  std::vector<Vertex> inverse(std::size_t parent_vertices) const;
};

/// Vertex set as a sorted list.
using VertexSet = std::vector<Vertex>;

std::string format_vertex_set(const VertexSet& set);  // "{1, 2, 3}" one-based

}  // namespace shg

#endif  // SHG_HYPERGRAPH_HPP
