#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace meantransform {

using Complex = std::complex<double>;

/// Dense square (or rectangular) complex matrix; the universal operator representation.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised for malformed input: shape mismatches, non-finite entries, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric comparison policy shared by every module.
///
/// A residual r is "small" when r <= abs_tol and "large" when
/// r >= indeterminate_factor * abs_tol; anything in between is indeterminate.
/// Singular values at or below rank_rtol * sigma_max are treated as zero
/// when deciding numerical rank.
struct Tolerance {
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  double indeterminate_factor = 100.0;
  double rank_rtol = 1e-10;

  void validate() const;
  double band() const { return indeterminate_factor * abs_tol; }
};

void require_square(const ComplexMatrix& m, const char* what);
void require_finite(const ComplexMatrix& m, const char* what);
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

}  // namespace meantransform
