#include "shg/matrices.hpp"

namespace shg {

VertexFunction::VertexFunction(Vector values, double zero_tolerance)
    : values_(std::move(values)), tolerance_(zero_tolerance) {
  if (!(tolerance_ >= 0.0)) throw Error("zero tolerance must be non-negative");
}

VertexFunction VertexFunction::relative(Vector values, double rel) {
  const double scale = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  return VertexFunction(std::move(values), rel * scale);
}

int VertexFunction::sign(Vertex v) const {
  if (is_zero(v)) return 0;
  return (*this)[v] > 0 ? 1 : -1;
}

VertexSet VertexFunction::support() const {
  VertexSet out;
  for (Vertex v = 0; v < size(); ++v) {
    if (!is_zero(v)) out.push_back(v);
  }
  return out;
}

VertexSet VertexFunction::zeros() const {
  VertexSet out;
  for (Vertex v = 0; v < size(); ++v) {
    if (is_zero(v)) out.push_back(v);
  }
  return out;
}

VertexFunction VertexFunction::scaled(double c) const {
  return VertexFunction(values_ * c, tolerance_ * std::abs(c));
}

Matrix adjacency(const SignedHypergraph& h) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  Matrix a = Matrix::Zero(n, n);
  for (const Edge& e : h.edges()) {
    if (e.empty()) continue;
    const double s = edge_sign(e);
    const auto inc = e.incidences();
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const auto x = static_cast<Eigen::Index>(inc[i].vertex);
        const auto y = static_cast<Eigen::Index>(inc[j].vertex);
        a(x, y) += s;
        a(y, x) += s;
      }
    }
  }
  return a;
}

MatrixBundle laplacian(const SignedHypergraph& h) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  MatrixBundle b;
  b.adjacency = adjacency(h);
  b.degrees.resize(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const auto d = h.degree(static_cast<Vertex>(v));
    if (d == 0) throw Error("isolated vertex: Laplacian undefined");
    b.degrees[v] = static_cast<double>(d);
  }
  const Vector inv = b.degrees.cwiseInverse();
  const Vector inv_sqrt = b.degrees.cwiseSqrt().cwiseInverse();
  b.laplacian = Matrix::Identity(n, n) - inv.asDiagonal() * b.adjacency;
  b.symmetric = Matrix::Identity(n, n) - inv_sqrt.asDiagonal() * b.adjacency * inv_sqrt.asDiagonal();
  // Products of the same two square roots: make symmetry exact.
  b.symmetric = 0.5 * (b.symmetric + b.symmetric.transpose());
  return b;
}

RationalMatrix exact_laplacian(const SignedHypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (const Edge& e : h.edges()) {
    if (e.empty()) continue;
    const int s = edge_sign(e);
    for (const auto& x : e.incidences()) {
      for (const auto& y : e.incidences()) {
        if (x.vertex != y.vertex) a[x.vertex][y.vertex] += s;
      }
    }
  }
  RationalMatrix l(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = static_cast<long long>(h.degree(i));
    if (d == 0) throw Error("isolated vertex: Laplacian undefined");
    for (std::size_t j = 0; j < n; ++j) {
      l[i][j] = Rational(i == j ? 1 : 0) - Rational(a[i][j], d);
    }
  }
  return l;
}

double weighted_inner(const Vector& degrees, const Vector& f, const Vector& g) {
  if (f.size() != degrees.size() || g.size() != degrees.size()) {
    throw Error("function length does not match vertex count");
  }
  return (degrees.array() * f.array() * g.array()).sum();
}

double weighted_inner(const SignedHypergraph& h, const VertexFunction& f, const VertexFunction& g) {
  Vector deg(static_cast<Eigen::Index>(h.num_vertices()));
  for (Vertex v = 0; v < h.num_vertices(); ++v) deg[static_cast<Eigen::Index>(v)] = h.degree(v);
  return weighted_inner(deg, f.values(), g.values());
}

}  // namespace shg
