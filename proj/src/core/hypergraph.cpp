#include "shg/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace shg {

Edge::Edge(std::vector<Incidence> incidences) : incidences_(std::move(incidences)) {
  std::vector<Vertex> seen;
  seen.reserve(incidences_.size());
  for (const auto& inc : incidences_) {
    if (inc.sign != 1 && inc.sign != -1) {
      throw Error("incidence sign must be +1 or -1");
    }
    seen.push_back(inc.vertex);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error("duplicate vertex in edge");
  }
}

bool Edge::contains(Vertex v) const {
  return std::any_of(incidences_.begin(), incidences_.end(),
                     [v](const Incidence& inc) { return inc.vertex == v; });
}

int Edge::incidence_sign(Vertex v) const {
  for (const auto& inc : incidences_) {
    if (inc.vertex == v) return inc.sign;
  }
  throw Error("vertex not incident to edge");
}

std::vector<Vertex> Edge::vertices() const {
  std::vector<Vertex> out;
  out.reserve(incidences_.size());
  for (const auto& inc : incidences_) out.push_back(inc.vertex);
  return out;
}

int edge_sign(const Edge& e) {
  if (e.empty()) throw Error("undefined sign");
  int s = (e.size() % 2 == 1) ? 1 : -1;
  for (const auto& inc : e.incidences()) s *= inc.sign;
  return s;
}

SignedHypergraph::SignedHypergraph(std::size_t num_vertices, std::vector<Edge> edges, bool allow_empty_edges)
    : n_(num_vertices),
      edges_(std::move(edges)),
      allow_empty_edges_(allow_empty_edges),
      incident_(num_vertices) {
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.empty() && !allow_empty_edges_) throw Error("empty edge");
    for (const auto& inc : e.incidences()) {
      if (inc.vertex >= n_) throw Error("vertex id out of range");
      incident_[inc.vertex].push_back(id);
    }
  }
}

void SignedHypergraph::check_vertex(Vertex v) const {
  if (v >= n_) throw Error("vertex out of range");
}

std::size_t SignedHypergraph::degree(Vertex v) const {
  check_vertex(v);
  return incident_[v].size();
}

std::span<const std::size_t> SignedHypergraph::incident_edges(Vertex v) const {
  check_vertex(v);
  return incident_[v];
}

std::vector<Vertex> SignedHypergraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::size_t id : incident_[v]) {
    for (const auto& inc : edges_[id].incidences()) {
      if (inc.vertex != v) out.push_back(inc.vertex);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> Relabeled::inverse(std::size_t parent_vertices) const {
  std::vector<Vertex> out(parent_vertices, parent_vertices);
  for (Vertex nv = 0; nv < original.size(); ++nv) out[original[nv]] = nv;
  return out;
}

std::string format_vertex_set(const VertexSet& set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) os << ", ";
    os << set[i] + 1;
  }
  os << '}';
  return os.str();
}

}  // namespace shg
