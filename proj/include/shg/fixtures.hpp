#ifndef SHG_FIXTURES_HPP
#define SHG_FIXTURES_HPP

#include <string>
#include <vector>

#include "shg/matrices.hpp"

namespace shg::example1 {

/// Nine vertices, edges {1,2,3}, {3,4,5}, {1,5,6}, {1,7}, {5,8}, {3,9}, every
/// incidence positive. Edge signs are (+,+,+,-,-,-).
SignedHypergraph hypergraph();
std::string shg_text();

/// The published 9x9 operator as printed, including its row-5 entries.
RationalMatrix published_laplacian();
Matrix published_laplacian_real();

/// Printed eigenvalues (two decimals) and eigenfunctions f1..f9.
std::vector<double> published_eigenvalues();
std::vector<Vector> published_eigenfunctions();

/// One printed row of the domain table, 0-based vertex sets.
struct TableRow {
  std::size_t eigenfunction = 0;  ///< 1-based
  std::vector<VertexSet> strong;
  std::vector<VertexSet> weak;
};
std::vector<TableRow> published_table();

/// Cyclomatic numbers quoted for the smallest eigenfunction (both 3).
inline constexpr long long kPublishedL = 3;
inline constexpr long long kPublishedLPlus = 3;

}  // namespace shg::example1

#endif  // SHG_FIXTURES_HPP
