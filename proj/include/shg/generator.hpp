#ifndef SHG_GENERATOR_HPP
#define SHG_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "shg/matrices.hpp"

namespace shg {

/// Deterministic random source. Draws are implemented here rather than with
/// the std distributions so that streams agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  /// Uniform in [0, 1).
  double unit();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed of instance i of a campaign (splitmix64 of seed and i).
std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t i);

struct GenConfig {
  std::pair<std::size_t, std::size_t> n_range{4, 12};
  std::pair<std::size_t, std::size_t> m_range{3, 12};
  std::pair<std::size_t, std::size_t> edge_size_range{2, 4};
  double sign_bias = 0.5;  ///< probability of a positive incidence
  std::uint64_t seed = 1;
  std::size_t count = 500;
  /// Every edge a 2-edge with one positive and one negative incidence.
  bool classical = false;
  /// Every vertex lies in some edge.
  bool no_isolated = true;

  /// Throws on empty ranges, zero edge sizes or bias outside [0, 1].
  void validate() const;
};

/// One instance from its own seed. Edges are distinct as vertex sets.
SignedHypergraph generate_instance(const GenConfig& cfg, std::uint64_t seed);

/// The campaign stream: instance i uses instance_seed(cfg.seed, i).
std::vector<SignedHypergraph> generate(const GenConfig& cfg);

/// Connected acyclic hypergraph on n vertices: each new edge takes one
/// existing vertex and 1..max_edge-1 fresh ones.
SignedHypergraph random_supertree(Rng& rng, std::size_t n, std::size_t max_edge);

/// Uniform values in [-1, 1].
Vector random_vector(Rng& rng, std::size_t n);

/// Values drawn from {-2, -1, 0, 1, 2} with probability `zero_rate` of 0, so
/// that zero vertices occur often.
Vector random_sign_pattern(Rng& rng, std::size_t n, double zero_rate);

}  // namespace shg

#endif  // SHG_GENERATOR_HPP
