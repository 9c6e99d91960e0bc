#ifndef SHG_IDENTITIES_HPP
#define SHG_IDENTITIES_HPP

#include <algorithm>

#include "shg/matrices.hpp"

namespace shg {

/// |lhs - rhs| together with the magnitude of the terms that produced it.
struct IdentityCheck {
  double defect = 0.0;
  double scale = 0.0;

  bool holds(double rel) const { return defect <= rel * std::max(scale, 1.0); }
};

/// sum over unordered pairs {x, y} of A_xy g(x) g(y) (f(x) - f(y))^2.
double pair_difference_sum(const MatrixBundle& bundle, const Vector& f, const Vector& g);

/// Checks <fg, L(fg)> = <fg, f Lg> + pair_difference_sum(f, g).
IdentityCheck product_rule_defect(const MatrixBundle& bundle, const Vector& f, const Vector& g);

/// Symmetric S = D(g) (D - A - lambda D) D(g), so that for every f
///   f^T S f = <fg, (L - lambda I) fg>_D = pair_difference_sum(f, g).
/// Throws "not an eigenfunction" when ||Lg - lambda g||_inf exceeds
/// residual_tol * max(1, |lambda|) * ||g||_inf.
Matrix eigen_difference_form(const MatrixBundle& bundle, const Vector& g, double lambda,
                             double residual_tol = 1e-8);

/// Compares f^T S f against the direct value <fg, (L - lambda I) fg>_D.
IdentityCheck difference_form_defect(const MatrixBundle& bundle, const Matrix& form, const Vector& f,
                                     const Vector& g, double lambda);

/// |<Lf, g>_D - <f, Lg>_D|.
IdentityCheck self_adjoint_defect(const MatrixBundle& bundle, const Vector& f, const Vector& g);

}  // namespace shg

#endif  // SHG_IDENTITIES_HPP
