#include "shg/identities.hpp"

namespace shg {

namespace {

double abs_weighted(const Vector& d, const Vector& f, const Vector& g) {
  return (d.array() * f.array().abs() * g.array().abs()).sum();
}

}  // namespace

double pair_difference_sum(const MatrixBundle& bundle, const Vector& f, const Vector& g) {
  const auto n = bundle.size();
  double sum = 0.0;
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = x + 1; y < n; ++y) {
      const double a = bundle.adjacency(x, y);
      if (a == 0.0) continue;
      const double diff = f[x] - f[y];
      sum += a * g[x] * g[y] * diff * diff;
    }
  }
  return sum;
}

IdentityCheck product_rule_defect(const MatrixBundle& bundle, const Vector& f, const Vector& g) {
  const Vector fg = f.cwiseProduct(g);
  const Vector l_fg = bundle.laplacian * fg;
  const Vector f_lg = f.cwiseProduct(bundle.laplacian * g);
  const double lhs = weighted_inner(bundle.degrees, fg, l_fg);
  const double middle = weighted_inner(bundle.degrees, fg, f_lg);
  const double pairs = pair_difference_sum(bundle, f, g);

  double pair_scale = 0.0;
  const auto n = bundle.size();
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = x + 1; y < n; ++y) {
      const double diff = f[x] - f[y];
      pair_scale += std::abs(bundle.adjacency(x, y) * g[x] * g[y]) * diff * diff;
    }
  }
  IdentityCheck c;
  c.defect = std::abs(lhs - middle - pairs);
  c.scale = abs_weighted(bundle.degrees, fg, l_fg) + abs_weighted(bundle.degrees, fg, f_lg) + pair_scale;
  return c;
}

Matrix eigen_difference_form(const MatrixBundle& bundle, const Vector& g, double lambda,
                             double residual_tol) {
  const double residual = (bundle.laplacian * g - lambda * g).cwiseAbs().maxCoeff();
  const double gmax = g.size() ? g.cwiseAbs().maxCoeff() : 0.0;
  if (residual > residual_tol * std::max(1.0, std::abs(lambda)) * gmax) {
    throw Error("not an eigenfunction");
  }
  const Matrix weighted =
      Matrix(bundle.degrees.asDiagonal()) - bundle.adjacency - lambda * Matrix(bundle.degrees.asDiagonal());
  return g.asDiagonal() * weighted * g.asDiagonal();
}

IdentityCheck difference_form_defect(const MatrixBundle& bundle, const Matrix& form, const Vector& f,
                                     const Vector& g, double lambda) {
  const Vector fg = f.cwiseProduct(g);
  const Vector shifted = bundle.laplacian * fg - lambda * fg;
  const double direct = weighted_inner(bundle.degrees, fg, shifted);
  const double quadratic = f.dot(form * f);
  IdentityCheck c;
  c.defect = std::abs(direct - quadratic);
  c.scale = abs_weighted(bundle.degrees, fg, shifted) +
            (f.cwiseAbs().transpose() * form.cwiseAbs() * f.cwiseAbs()).value();
  return c;
}

IdentityCheck self_adjoint_defect(const MatrixBundle& bundle, const Vector& f, const Vector& g) {
  const Vector lf = bundle.laplacian * f;
  const Vector lg = bundle.laplacian * g;
  IdentityCheck c;
  c.defect = std::abs(weighted_inner(bundle.degrees, lf, g) - weighted_inner(bundle.degrees, f, lg));
  c.scale = abs_weighted(bundle.degrees, lf, g) + abs_weighted(bundle.degrees, f, lg);
  return c;
}

}  // namespace shg
