#ifndef SHG_TEST_HELPERS_HPP
#define SHG_TEST_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "shg/shg_format.hpp"

namespace shg::test {

/// Parses "vertices N / edge ..." lines with the header prepended.
inline SignedHypergraph graph(const std::string& body) { return parse_shg("shg 1\n" + body); }

/// Converts 1-based ids to a 0-based vertex set.
inline VertexSet ids(std::initializer_list<Vertex> one_based) {
  VertexSet out;
  for (Vertex v : one_based) out.push_back(v - 1);
  return out;
}

inline std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<Vertex>> groups) {
  std::vector<VertexSet> out;
  for (const auto& g : groups) out.push_back(ids(g));
  return out;
}

}  // namespace shg::test

#endif  // SHG_TEST_HELPERS_HPP
