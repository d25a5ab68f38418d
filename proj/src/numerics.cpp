#include "meantransform/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace meantransform {

void Tolerance::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw InputError("tolerance: abs_tol and rel_tol must be nonnegative");
  }
  if (!(indeterminate_factor >= 1.0)) {
    throw InputError("tolerance: indeterminate_factor must be >= 1");
  }
  if (!(rank_rtol >= 0.0) || rank_rtol >= 1.0) {
    throw InputError("tolerance: rank_rtol must lie in [0, 1)");
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InputError(std::string(what) + ": matrix must be square, got " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InputError(std::string(what) + ": matrix has non-finite entries");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + ")");
  }
}

ComplexMatrix adjoint(const ComplexMatrix& t) { return t.adjoint(); }

ComplexMatrix conj_entrywise(const ComplexMatrix& t) { return t.conjugate(); }

ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) {
    throw InputError("rank_one: vectors must have the same dimension");
  }
  return x * y.adjoint();
}

// Eigen's dot() conjugates its left operand.
Complex inner(const ComplexVector& u, const ComplexVector& y) {
  if (u.size() != y.size()) {
    throw InputError("inner: vectors must have the same dimension");
  }
  return y.dot(u);
}

SvdParts svd(const ComplexMatrix& t) {
  require_finite(t, "svd");
  Eigen::JacobiSVD<ComplexMatrix> solver(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdParts{solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};
}

PolarParts polar_decompose(const ComplexMatrix& t, const Tolerance& tol) {
  require_square(t, "polar_decompose");
  const Eigen::Index n = t.rows();
  SvdParts parts = svd(t);

  Eigen::Index rank = 0;
  if (n > 0 && parts.sigma(0) > 0.0) {
    const double cutoff = tol.rank_rtol * parts.sigma(0);
    while (rank < n && parts.sigma(rank) > cutoff) {
      ++rank;
    }
  }

  PolarParts out;
  out.rank = rank;
  if (rank == 0) {
    out.V = ComplexMatrix::Zero(n, n);
    out.P = ComplexMatrix::Zero(n, n);
    return out;
  }
  const auto u_r = parts.U.leftCols(rank);
  const auto vh_r = parts.Vh.topRows(rank);
  out.V = u_r * vh_r;
  ComplexMatrix p = vh_r.adjoint() * parts.sigma.head(rank).asDiagonal() * vh_r;
  out.P = (p + p.adjoint()) / 2.0;
  return out;
}

namespace {

// Eigendecomposition of a Hermitian PSD matrix with the clamping policy applied.
Eigen::SelfAdjointEigenSolver<ComplexMatrix> checked_psd_eigen(const ComplexMatrix& p,
                                                               const Tolerance& tol,
                                                               const char* what) {
  require_square(p, what);
  require_finite(p, what);
  const double scale = std::max(1.0, operator_norm(p));
  if (operator_norm(p - p.adjoint()) > tol.abs_tol * scale) {
    throw InputError(std::string(what) + ": matrix is not Hermitian within tolerance");
  }
  ComplexMatrix herm = (p + p.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm);
  if (eig.info() != Eigen::Success) {
    throw InputError(std::string(what) + ": eigendecomposition failed");
  }
  if (p.rows() > 0 && eig.eigenvalues().minCoeff() < -tol.abs_tol * scale) {
    throw InputError(std::string(what) + ": matrix is not positive semidefinite");
  }
  return eig;
}

}  // namespace

ComplexMatrix psd_power(const ComplexMatrix& p, double exponent, const Tolerance& tol) {
  if (!std::isfinite(exponent) || exponent < 0.0) {
    throw InputError("psd_power: exponent must be finite and nonnegative");
  }
  auto eig = checked_psd_eigen(p, tol, "psd_power");
  RealVector lambda = eig.eigenvalues().cwiseMax(0.0);
  const double lambda_max = lambda.size() > 0 ? lambda.maxCoeff() : 0.0;
  const double cutoff = tol.rank_rtol * lambda_max;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (exponent == 0.0) {
      lambda(i) = (lambda_max > 0.0 && lambda(i) > cutoff) ? 1.0 : 0.0;
    } else {
      lambda(i) = std::pow(lambda(i), exponent);
    }
  }
  const ComplexMatrix& q = eig.eigenvectors();
  ComplexMatrix out = q * lambda.asDiagonal() * q.adjoint();
  return (out + out.adjoint()) / 2.0;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& p, const Tolerance& tol) {
  return psd_power(p, 0.5, tol);
}

double operator_norm(const ComplexMatrix& t) {
  if (t.size() == 0) {
    return 0.0;
  }
  require_finite(t, "operator_norm");
  Eigen::JacobiSVD<ComplexMatrix> solver(t);
  return solver.singularValues()(0);
}

Complex trace(const ComplexMatrix& t) {
  require_square(t, "trace");
  return t.trace();
}

RealInterval numerical_range_selfadjoint(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "numerical_range_selfadjoint");
  require_finite(a, "numerical_range_selfadjoint");
  if (a.rows() == 0) {
    throw InputError("numerical_range_selfadjoint: empty matrix");
  }
  const double scale = std::max(1.0, operator_norm(a));
  if (operator_norm(a - a.adjoint()) > tol.abs_tol * scale) {
    throw InputError("numerical_range_selfadjoint: matrix is not Hermitian within tolerance");
  }
  ComplexMatrix herm = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
  return RealInterval{eig.eigenvalues().minCoeff(), eig.eigenvalues().maxCoeff()};
}

}  // namespace meantransform
