#include "shg/fixtures.hpp"

#include "shg/shg_format.hpp"

namespace shg::example1 {

namespace {

VertexSet one_based(std::initializer_list<Vertex> ids) {
  VertexSet out;
  for (Vertex v : ids) out.push_back(v - 1);
  return out;
}

}  // namespace

std::string shg_text() {
  return "shg 1\n"
         "vertices 9\n"
         "edge 1:+ 2:+ 3:+\n"
         "edge 3:+ 4:+ 5:+\n"
         "edge 1:+ 5:+ 6:+\n"
         "edge 1:+ 7:+\n"
         "edge 5:+ 8:+\n"
         "edge 3:+ 9:+\n";
}

SignedHypergraph hypergraph() { return parse_shg(shg_text()); }

RationalMatrix published_laplacian() {
  const Rational o(1), t(1, 3), z(0);
  return {
      {o, -t, -t, z, -t, -t, t, z, z}, {-o, o, -o, z, z, z, z, z, z}, {-t, -t, o, -t, -t, z, z, z, t},
      {z, z, -o, o, -o, z, z, z, z},   {z, z, z, -t, o, -t, z, t, z}, {-o, z, z, z, -o, o, z, z, z},
      {o, z, z, z, z, z, o, z, z},     {z, z, z, z, o, z, z, o, z},   {z, z, o, z, z, z, z, z, o},
  };
}

Matrix published_laplacian_real() {
  const auto q = published_laplacian();
  Matrix m(9, 9);
  for (Eigen::Index i = 0; i < 9; ++i) {
    for (Eigen::Index j = 0; j < 9; ++j) {
      m(i, j) = boost::rational_cast<double>(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

std::vector<double> published_eigenvalues() { return {-0.51, 0.22, 0.33, 1.0, 1.0, 1.0, 1.95, 2.0, 2.0}; }

std::vector<Vector> published_eigenfunctions() {
  const double rows[9][9] = {
      {-0.38, -0.50, -0.38, -0.38, -0.2, -0.38, 0.25, 0.13, 0.25},
      {-0.22, -0.56, -0.22, 0.19, 0.37, 0.19, 0.28, -0.47, 0.28},
      {0.3, 0, -0.3, -0.45, 0, 0.45, -0.45, 0, 0.45},
      {0, -0.38, 0, 0.47, 0, -0.33, -0.71, 0.14, 0.08},
      {0, -0.63, 0, 0.18, 0, 0.18, -0.44, 0.36, -0.45},
      {0, 0.4, 0, 0.37, 0, -0.3, 0.1, 0.07, 0.77},
      {-0.07, 0.16, -0.07, -0.45, 0.5, -0.45, -0.08, 0.53, -0.08},
      {0.09, 0, -0.09, -0.4, 0.49, -0.58, 0.09, 0.49, -0.09},
      {0.23, 0, -0.23, 0.64, -0.41, 0.18, 0.23, -0.41, -0.23},
  };
  std::vector<Vector> out;
  for (const auto& row : rows) out.push_back(Eigen::Map<const Vector>(row, 9));
  return out;
}

std::vector<TableRow> published_table() {
  return {
      {1, {one_based({1, 2, 3, 4, 5, 6, 7, 8, 9})}, {one_based({1, 2, 3, 4, 5, 6, 7, 8, 9})}},
      {2,
       {one_based({1, 2, 3, 7, 9}), one_based({4, 5, 6, 8})},
       {one_based({1, 2, 3, 7, 9}), one_based({4, 5, 6, 8})}},
      {3,
       {one_based({1, 6, 7}), one_based({3, 4, 9})},
       {one_based({1, 2, 6, 7}), one_based({3, 4, 5, 8, 9})}},
      {4,
       {one_based({2}), one_based({4}), one_based({6}), one_based({7}), one_based({8}), one_based({9})},
       {one_based({2, 3, 9}), one_based({5, 6, 8}), one_based({4}), one_based({1, 7})}},
      {5,
       {one_based({2}), one_based({4}), one_based({6}), one_based({7}), one_based({8}), one_based({9})},
       {one_based({1, 6, 7}), one_based({3, 4, 9}), one_based({2}), one_based({5, 8})}},
      {6,
       {one_based({2}), one_based({4}), one_based({6}), one_based({7}), one_based({8}), one_based({9})},
       {one_based({1, 5, 6, 7, 8}), one_based({2, 3, 4}), one_based({9})}},
      {7,
       {one_based({2}), one_based({5}), one_based({7}), one_based({8}), one_based({9}),
        one_based({1, 3, 4, 6})},
       {one_based({2}), one_based({5}), one_based({7}), one_based({8}), one_based({9}),
        one_based({1, 3, 4, 6})}},
      {8,
       {one_based({1, 5, 8}), one_based({3, 4}), one_based({6}), one_based({7}), one_based({9})},
       {one_based({1, 5, 8}), one_based({2, 3, 4}), one_based({6}), one_based({7}), one_based({9})}},
      {9,
       {one_based({1, 6}), one_based({3, 5}), one_based({4}), one_based({7}), one_based({8}), one_based({9})},
       {one_based({1, 6}), one_based({2, 3, 5}), one_based({4}), one_based({7}), one_based({8}),
        one_based({9})}},
  };
}

}  // namespace shg::example1
