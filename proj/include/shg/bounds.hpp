#ifndef SHG_BOUNDS_HPP
#define SHG_BOUNDS_HPP

#include "shg/fiedler.hpp"
#include "shg/nodal.hpp"
#include "shg/spectrum.hpp"

namespace shg {

/// Upper and lower nodal-count bounds for one eigenfunction, with every
/// quantity that enters them. k is 1-based: the first index of the
/// eigenvalue's cluster; r is the cluster size.
struct BoundReport {
  std::size_t index = 0;  ///< 0-based eigenpair index
  double eigenvalue = 0.0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t c = 0;  ///< components of H
  long long l = 0;
  long long l_prime = 0;             ///< cyclomatic number of the support-induced subhypergraph
  long long l_plus = 0;              ///< under `rule`
  long long l_plus_alternative = 0;  ///< under the other rule
  std::size_t fiedler_size = 0;
  std::size_t strong = 0;
  std::size_t weak = 0;
  PositiveEdgeRule rule = PositiveEdgeRule::all_pairs;
  double zero_tolerance = 0.0;

  long long strong_upper() const { return static_cast<long long>(k + r) - 1; }
  long long weak_upper() const { return static_cast<long long>(k + c) - 1; }
  long long lower_bound() const { return lower_with(l_plus); }
  long long lower_bound_alternative() const { return lower_with(l_plus_alternative); }

  bool strong_upper_ok() const { return static_cast<long long>(strong) <= strong_upper(); }
  bool weak_upper_ok() const { return static_cast<long long>(weak) <= weak_upper(); }
  bool strong_lower_ok() const { return static_cast<long long>(strong) >= lower_bound(); }
  bool strong_lower_ok_alternative() const {
    return static_cast<long long>(strong) >= lower_bound_alternative();
  }

 private:
  long long lower_with(long long lp) const {
    return strong_upper() - l_prime + lp - static_cast<long long>(fiedler_size);
  }
};

/// Evaluates the bounds for a supplied function with the given 1-based k and
/// multiplicity r.
BoundReport check_bounds(const SignedHypergraph& h, const VertexFunction& f, std::size_t k, std::size_t r,
                         PositiveEdgeRule rule = PositiveEdgeRule::all_pairs);

/// Evaluates the bounds for eigenpair `index` (0-based) of the spectrum.
BoundReport check_bounds(const SignedHypergraph& h, const Spectrum& spectrum, std::size_t index,
                         PositiveEdgeRule rule = PositiveEdgeRule::all_pairs,
                         double rel_zero_tol = kDefaultZeroTolerance);

/// Compares the strong domain count with |V| - z - sum(|e|-1) over a maximum
/// spanning hyperforest of the positive edges inside the support. The two
/// agree exactly when that forest reaches full component rank.
struct ForestCountDiagnostic {
  long long formula_value = 0;
  long long component_value = 0;
  bool agree() const { return formula_value == component_value; }
};

/// Throws "exact search too large" when more than 16 edges qualify.
ForestCountDiagnostic forest_domain_count(const SignedHypergraph& h, const VertexFunction& f);

}  // namespace shg

#endif  // SHG_BOUNDS_HPP
