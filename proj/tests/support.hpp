#pragma once

// Reference computations that avoid the library's SVD-based polar route.

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "meantransform/types.hpp"

namespace meantransform::testing {

inline double opnorm(const ComplexMatrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

// Unitary polar factor of an invertible matrix by the scaled Newton
// iteration X <- (zX + X^{-*}/z)/2.
inline ComplexMatrix newton_unitary_factor(const ComplexMatrix& t) {
  ComplexMatrix x = t;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix inv_adj = x.inverse().adjoint();
    const double z = std::sqrt(inv_adj.norm() / x.norm());
    const ComplexMatrix next = (z * x + inv_adj / z) / 2.0;
    const double step = (next - x).norm();
    x = next;
    if (step <= 1e-15 * x.norm()) {
      break;
    }
  }
  return x;
}

struct OraclePolar {
  ComplexMatrix V;
  ComplexMatrix P;
};

inline OraclePolar oracle_polar(const ComplexMatrix& t) {
  const ComplexMatrix u = newton_unitary_factor(t);
  ComplexMatrix p = u.adjoint() * t;
  p = (p + p.adjoint()) / 2.0;
  return {u, p};
}

// Mean transform of an invertible matrix.
inline ComplexMatrix oracle_mean(const ComplexMatrix& t) {
  const OraclePolar pol = oracle_polar(t);
  return (pol.V * pol.P + pol.P * pol.V) / 2.0;
}

// M(x (x) y), written out directly from u -> <u,y> x.
inline ComplexMatrix oracle_rank_one_mean(const ComplexVector& x, const ComplexVector& y) {
  const Complex xy = y.adjoint() * x;  // <x, y>
  const ComplexVector left = 0.5 * (x + (xy / y.squaredNorm()) * y);
  return left * y.adjoint();
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace meantransform::testing
