#ifndef SHG_SPECTRUM_HPP
#define SHG_SPECTRUM_HPP

#include <complex>
#include <span>
#include <vector>

#include "shg/matrices.hpp"

namespace shg {

/// A run of numerically equal eigenvalues; `first` is 0-based.
struct EigenCluster {
  std::size_t first = 0;
  std::size_t multiplicity = 1;

  std::size_t last() const { return first + multiplicity - 1; }
  friend bool operator==(const EigenCluster&, const EigenCluster&) = default;
};

struct Spectrum {
  std::vector<double> eigenvalues;  ///< ascending
  Matrix eigenfunctions;            ///< column i belongs to eigenvalues[i]; D-orthonormal
  std::vector<EigenCluster> clusters;
  double cluster_tolerance = kDefaultClusterTolerance;

  std::size_t size() const { return eigenvalues.size(); }
  const EigenCluster& cluster_of(std::size_t index) const;
  VertexFunction eigenfunction(std::size_t index, double rel_zero_tol = kDefaultZeroTolerance) const;
};

/// Groups ascending values whose consecutive gaps are below tol * (max - min).
std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> ascending, double tol);

/// Diagonalises the symmetric form and maps eigenvectors back by D^{-1/2}.
/// Each eigenfunction is normalised so its first non-negligible entry is positive.
Spectrum eigendecompose(const MatrixBundle& bundle, double cluster_tol = kDefaultClusterTolerance);

struct SpectrumAccuracy {
  double trace_defect = 0.0;  ///< |sum(lambda) - n|
  double max_residual = 0.0;  ///< max_i ||L f_i - lambda_i f_i||_inf
  double gram_defect = 0.0;   ///< max |<f_i, f_j>_D - delta_ij|
  double spectral_range = 0.0;

  bool acceptable(std::size_t n) const {
    const double range = spectral_range > 0.0 ? spectral_range : 1.0;
    return trace_defect <= 1e-8 * static_cast<double>(n) && max_residual <= 1e-8 * range &&
           gram_defect <= 1e-8;
  }
};

SpectrumAccuracy check_spectrum(const MatrixBundle& bundle, const Spectrum& spectrum);

/// <Lg, g>_D / <g, g>_D.
double rayleigh(const MatrixBundle& bundle, const Vector& g);

/// Number of eigenvalues of the symmetric matrix above tol * max |eigenvalue|.
std::size_t positive_inertia(const Matrix& s, double tol = 1e-9);

/// Eigenvalues of an arbitrary square matrix, sorted by real part.
std::vector<std::complex<double>> general_eigenvalues(const Matrix& m);

}  // namespace shg

#endif  // SHG_SPECTRUM_HPP
