#ifndef SHG_ORACLE_HPP
#define SHG_ORACLE_HPP

#include <string>

#include "shg/nodal.hpp"

namespace shg {

inline constexpr std::size_t kOracleVertexLimit = 8;

/// Nodal domains by exhaustive path enumeration, for cross-checking.
///
/// Strong: all repetition-free vertex sequences whose consecutive pairs share
/// an edge e with f(x) sgn(e) f(y) > 0, then the equivalence closure.
/// Weak: every walk from a nonzero through zero vertices to another nonzero,
/// each zero visited at most twice, over every choice of connecting edge;
/// a walk links its ends when f(u) * (product of edge signs) * f(w) > 0.
/// Revisits matter: a detour through a zero cycle can flip the sign product,
/// and two visits per vertex reach every (vertex, sign) combination.
/// Zeros join the cores reached by a repetition-free zero path plus one step.
struct OracleDomains {
  std::vector<VertexSet> strong;
  std::vector<VertexSet> weak_cores;
  std::vector<VertexSet> weak_domains;
};

/// Throws "instance too large" above kOracleVertexLimit vertices.
OracleDomains oracle_domains(const SignedHypergraph& h, const VertexFunction& f);

/// Empty when the oracle and the efficient decomposition agree exactly;
/// otherwise a description of the first difference.
std::string compare_with_oracle(const SignedHypergraph& h, const VertexFunction& f);

}  // namespace shg

#endif  // SHG_ORACLE_HPP
