#ifndef SHG_PROPERTIES_HPP
#define SHG_PROPERTIES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shg/bounds.hpp"
#include "shg/generator.hpp"

namespace shg {

enum class Outcome { pass, fail, skip, logged };
std::string_view to_string(Outcome o);

struct PropertyResult {
  Outcome outcome = Outcome::pass;
  std::string details;
};

struct PropertyOptions {
  std::size_t function_samples = 4;  ///< random functions per instance
  std::size_t deletion_samples = 2;  ///< random weak deletions per instance
  double zero_rate = 0.35;           ///< zero probability in random sign patterns
  double identity_tol = 1e-9;        ///< relative, for the quadratic-form identities
  double interlacing_tol = 1e-8;
  PositiveEdgeRule rule = PositiveEdgeRule::all_pairs;
};

/// A lower-bound violation under the primary edge rule, with its
/// re-evaluation under the other rule.
struct LowerBoundViolation {
  std::size_t eigen_index = 0;  ///< 1-based
  std::size_t strong = 0;
  long long bound = 0;
  long long bound_alternative = 0;
  bool resolved = false;  ///< the other rule's bound holds
};

/// Everything a property needs about one instance. Spectral data is present
/// only when every vertex has positive degree.
class InstanceContext {
 public:
  InstanceContext(const SignedHypergraph& h, std::uint64_t seed, PropertyOptions options = {});

  const SignedHypergraph& graph() const { return h_; }
  std::uint64_t seed() const { return seed_; }
  const PropertyOptions& options() const { return options_; }

  bool spectral() const { return bundle_.has_value(); }
  const MatrixBundle& bundle() const;
  const Spectrum& spectrum() const;
  /// Thresholded eigenfunctions, then random sign patterns with zeros.
  const std::vector<VertexFunction>& eigenfunctions() const { return eigen_; }
  const std::vector<VertexFunction>& test_functions() const { return tests_; }
  std::vector<const VertexFunction*> all_functions() const;

  /// Random source private to one property, so results do not depend on
  /// which other properties run.
  Rng rng_for(std::string_view property_id) const;

  std::vector<LowerBoundViolation> violations;
  std::map<long long, std::size_t> sharpness;  ///< (k+r-1) - strong count -> occurrences

 private:
  const SignedHypergraph& h_;
  std::uint64_t seed_;
  PropertyOptions options_;
  std::optional<MatrixBundle> bundle_;
  std::optional<Spectrum> spectrum_;
  std::vector<VertexFunction> eigen_;
  std::vector<VertexFunction> tests_;
};

struct Property {
  std::string id;
  std::string module;  ///< core, spectra, nodal or cli
  std::string description;
  std::function<PropertyResult(InstanceContext&)> check;
};

/// Every registered property, in a fixed order.
const std::vector<Property>& property_registry();
/// Throws on unknown ids.
const Property& find_property(std::string_view id);

/// Runs one property, turning exceptions into failures.
PropertyResult run_property(const Property& p, InstanceContext& ctx);

/// Exhaustive cycle test: does x lie on a cycle v1 e1 v2 ... vq eq v1 with
/// distinct vertices, distinct edges and q >= 2?
bool on_cycle(const SignedHypergraph& h, Vertex x);

/// Sandwich quantities for a zero-free eigenfunction g.
struct SandwichCheck {
  std::size_t p = 0;       ///< positive inertia of the eigen difference form
  long long forest = 0;    ///< sum(|e|-1) over a maximum forest of the positive edges
  long long positive = 0;  ///< sum(|e|-1) over all positive edges
  long long l = 0;
  bool lower_ok() const { return static_cast<long long>(p) <= forest; }
  bool upper_ok() const { return positive <= static_cast<long long>(p) + l; }
  bool holds() const { return lower_ok() && forest <= positive && upper_ok(); }
};
SandwichCheck forest_inertia_sandwich(const SignedHypergraph& h, const MatrixBundle& bundle,
                                      const VertexFunction& g, double lambda, PositiveEdgeRule rule);

/// Cauchy interlacing after weak deletion of `removed` (distinct vertices):
/// lambda_k <= mu_k <= lambda_{k+r}. Returns the largest violation (0 when it holds).
double interlacing_violation(const SignedHypergraph& h, const Spectrum& spectrum, const VertexSet& removed);

/// Rank of the chained difference rows x_a - x_b of every edge.
std::size_t difference_rank(const SignedHypergraph& h);

}  // namespace shg

#endif  // SHG_PROPERTIES_HPP
