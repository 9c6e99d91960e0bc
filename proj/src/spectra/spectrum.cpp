#include "shg/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace shg {

namespace {

void require_symmetric(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw Error(std::string(what) + ": matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(std::string(what) + ": matrix is not symmetric");
  }
}

}  // namespace

const EigenCluster& Spectrum::cluster_of(std::size_t index) const {
  for (const auto& c : clusters) {
    if (index >= c.first && index <= c.last()) return c;
  }
  throw Error("eigenvalue index out of range");
}

VertexFunction Spectrum::eigenfunction(std::size_t index, double rel_zero_tol) const {
  if (index >= size()) throw Error("eigenvalue index out of range");
  return VertexFunction::relative(eigenfunctions.col(static_cast<Eigen::Index>(index)), rel_zero_tol);
}

std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> ascending, double tol) {
  std::vector<EigenCluster> out;
  if (ascending.empty()) return out;
  const double range = ascending.back() - ascending.front();
  out.push_back({0, 1});
  for (std::size_t i = 1; i < ascending.size(); ++i) {
    const double gap = ascending[i] - ascending[i - 1];
    if (gap == 0.0 || gap < tol * range) {
      ++out.back().multiplicity;
    } else {
      out.push_back({i, 1});
    }
  }
  return out;
}

Spectrum eigendecompose(const MatrixBundle& bundle, double cluster_tol) {
  require_symmetric(bundle.symmetric, "eigendecompose");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(bundle.symmetric);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");

  Spectrum s;
  s.cluster_tolerance = cluster_tol;
  const Vector& values = solver.eigenvalues();
  s.eigenvalues.assign(values.data(), values.data() + values.size());
  const Vector inv_sqrt = bundle.degrees.cwiseSqrt().cwiseInverse();
  s.eigenfunctions = inv_sqrt.asDiagonal() * solver.eigenvectors();
  for (Eigen::Index j = 0; j < s.eigenfunctions.cols(); ++j) {
    auto col = s.eigenfunctions.col(j);
    const double tol = kDefaultZeroTolerance * col.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      if (std::abs(col[i]) > tol) {
        if (col[i] < 0) col *= -1.0;
        break;
      }
    }
  }
  s.clusters = cluster_eigenvalues(s.eigenvalues, cluster_tol);
  return s;
}

SpectrumAccuracy check_spectrum(const MatrixBundle& bundle, const Spectrum& spectrum) {
  SpectrumAccuracy acc;
  const auto n = bundle.size();
  double sum = 0.0;
  for (double v : spectrum.eigenvalues) sum += v;
  acc.trace_defect = std::abs(sum - static_cast<double>(n));
  if (!spectrum.eigenvalues.empty()) {
    acc.spectral_range = spectrum.eigenvalues.back() - spectrum.eigenvalues.front();
  }
  for (Eigen::Index i = 0; i < spectrum.eigenfunctions.cols(); ++i) {
    const Vector f = spectrum.eigenfunctions.col(i);
    const double lambda = spectrum.eigenvalues[static_cast<std::size_t>(i)];
    const double r = (bundle.laplacian * f - lambda * f).cwiseAbs().maxCoeff();
    acc.max_residual = std::max(acc.max_residual, r);
  }
  const Matrix gram =
      spectrum.eigenfunctions.transpose() * bundle.degrees.asDiagonal() * spectrum.eigenfunctions;
  acc.gram_defect = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  return acc;
}

double rayleigh(const MatrixBundle& bundle, const Vector& g) {
  const double denom = weighted_inner(bundle.degrees, g, g);
  if (denom == 0.0) throw Error("Rayleigh quotient of the zero function");
  return weighted_inner(bundle.degrees, bundle.laplacian * g, g) / denom;
}

std::size_t positive_inertia(const Matrix& s, double tol) {
  require_symmetric(s, "positive_inertia");
  if (s.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(s, Eigen::EigenvaluesOnly);
  const Vector& ev = solver.eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > tol * norm) ++count;
  }
  return count;
}

std::vector<std::complex<double>> general_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("matrix is not square");
  Eigen::EigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return out;
}

}  // namespace shg
