#ifndef SHG_MATRICES_HPP
#define SHG_MATRICES_HPP

#include <Eigen/Dense>
#include <boost/rational.hpp>
#include <cmath>
#include <vector>

#include "shg/hypergraph.hpp"

namespace shg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline constexpr double kDefaultZeroTolerance = 1e-8;     // relative to max |f|
inline constexpr double kDefaultClusterTolerance = 1e-9;  // relative to spectral range

/// Real function on the vertices plus the threshold below which an entry
/// counts as zero.
class VertexFunction {
 public:
  VertexFunction() = default;
  VertexFunction(Vector values, double zero_tolerance);

  /// Zero tolerance = rel * max |f|.
  static VertexFunction relative(Vector values, double rel = kDefaultZeroTolerance);

  const Vector& values() const { return values_; }
  double zero_tolerance() const { return tolerance_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator[](Vertex v) const { return values_[static_cast<Eigen::Index>(v)]; }

  bool is_zero(Vertex v) const { return std::abs((*this)[v]) <= tolerance_; }
  /// -1, 0 or +1 after thresholding.
  int sign(Vertex v) const;
  VertexSet support() const;
  VertexSet zeros() const;

  /// c * f with the tolerance scaled by |c|.
  VertexFunction scaled(double c) const;

 private:
  Vector values_;
  double tolerance_ = 0.0;
};

/// a_ij = sum over edges containing i and j of sgn(e); zero diagonal.
/// Empty edges are ignored.
Matrix adjacency(const SignedHypergraph& h);

struct MatrixBundle {
  Matrix adjacency;
  Vector degrees;
  Matrix laplacian;  ///< I - D^{-1} A
  Matrix symmetric;  ///< D^{1/2} L D^{-1/2} = I - D^{-1/2} A D^{-1/2}

  Eigen::Index size() const { return degrees.size(); }
};

/// Throws when some vertex has degree 0.
MatrixBundle laplacian(const SignedHypergraph& h);

/// L = I - D^{-1} A in exact arithmetic.
RationalMatrix exact_laplacian(const SignedHypergraph& h);

double weighted_inner(const Vector& degrees, const Vector& f, const Vector& g);
double weighted_inner(const SignedHypergraph& h, const VertexFunction& f, const VertexFunction& g);

}  // namespace shg

#endif  // SHG_MATRICES_HPP
