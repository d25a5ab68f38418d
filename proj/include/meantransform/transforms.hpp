#pragma once

#include <vector>

#include "meantransform/numerics.hpp"
#include "meantransform/types.hpp"

namespace meantransform {

/// M(T) = (V|T| + |T|V) / 2, the arithmetic mean of T and its Duggal transform.
ComplexMatrix mean_transform(const ComplexMatrix& t, const Tolerance& tol = {});

/// |T|^lambda V |T|^(1 - lambda); lambda = 1/2 is the classical Aluthge transform.
ComplexMatrix aluthge_transform(const ComplexMatrix& t, double lambda = 0.5,
                                const Tolerance& tol = {});

/// |T| V.
ComplexMatrix duggal_transform(const ComplexMatrix& t, const Tolerance& tol = {});

/// Symmetrized product (AB + BA) / 2.
ComplexMatrix jordan_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct MeanIterationTrace {
  std::vector<ComplexMatrix> iterates;  // iterates[0] is the input
  std::vector<double> deltas;           // operator norm of successive differences
  bool converged = false;
  int steps = 0;
};

/// Repeatedly applies the mean transform until the operator-norm step drops
/// to stop_tol or max_steps applications have been made.
MeanIterationTrace iterate_mean(const ComplexMatrix& t, int max_steps, double stop_tol,
                                const Tolerance& tol = {});

}  // namespace meantransform
