#pragma once

#include "meantransform/types.hpp"

namespace meantransform {

ComplexMatrix adjoint(const ComplexMatrix& t);

/// Entrywise complex conjugation in the standard basis. Composed with a
/// unitary this realizes every anti-unitary operator on C^n.
ComplexMatrix conj_entrywise(const ComplexMatrix& t);

/// The rank-one operator x (x) y acting as u -> <u, y> x, i.e. x * y^*.
ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y);

/// Inner product <u, y>, linear in u and conjugate-linear in y.
Complex inner(const ComplexVector& u, const ComplexVector& y);

struct SvdParts {
  ComplexMatrix U;
  RealVector sigma;  // nonincreasing, nonnegative
  ComplexMatrix Vh;  // adjoint of the right singular vectors
};

SvdParts svd(const ComplexMatrix& t);

/// Canonical polar decomposition T = V P with P = |T| and kernel(V) = kernel(T).
struct PolarParts {
  ComplexMatrix V;
  ComplexMatrix P;
  Eigen::Index rank = 0;  // numerical rank used to build V
};

/// Built from the compact SVD: singular values above tol.rank_rtol * sigma_max
/// are kept, V = U_r Vh_r and P = Vh_r^* diag(sigma_r) Vh_r. The zero matrix
/// yields V = P = 0.
PolarParts polar_decompose(const ComplexMatrix& t, const Tolerance& tol = {});

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues in [-abs_tol, 0) are clamped to zero; anything more negative
/// (or a non-Hermitian input) raises InputError.
ComplexMatrix sqrt_psd(const ComplexMatrix& p, const Tolerance& tol = {});

/// P^exponent for Hermitian PSD P with the same clamping rules as sqrt_psd.
/// exponent == 0 gives the orthogonal projection onto range(P).
ComplexMatrix psd_power(const ComplexMatrix& p, double exponent, const Tolerance& tol = {});

/// Largest singular value.
double operator_norm(const ComplexMatrix& t);

Complex trace(const ComplexMatrix& t);

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v, double slack = 0.0) const { return v >= lo - slack && v <= hi + slack; }
};

/// Numerical range {<Au,u> : |u| = 1} of a Hermitian matrix, which is
/// [lambda_min, lambda_max].
RealInterval numerical_range_selfadjoint(const ComplexMatrix& a, const Tolerance& tol = {});

}  // namespace meantransform
