#include "meantransform/transforms.hpp"

#include <cmath>

namespace meantransform {

ComplexMatrix mean_transform(const ComplexMatrix& t, const Tolerance& tol) {
  require_square(t, "mean_transform");
  const PolarParts polar = polar_decompose(t, tol);
  return (polar.V * polar.P + polar.P * polar.V) / 2.0;
}

ComplexMatrix aluthge_transform(const ComplexMatrix& t, double lambda, const Tolerance& tol) {
  require_square(t, "aluthge_transform");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("aluthge_transform: lambda must lie in [0, 1]");
  }
  const PolarParts polar = polar_decompose(t, tol);
  return psd_power(polar.P, lambda, tol) * polar.V * psd_power(polar.P, 1.0 - lambda, tol);
}

ComplexMatrix duggal_transform(const ComplexMatrix& t, const Tolerance& tol) {
  require_square(t, "duggal_transform");
  const PolarParts polar = polar_decompose(t, tol);
  return polar.P * polar.V;
}

ComplexMatrix jordan_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "jordan_product");
  require_same_shape(a, b, "jordan_product");
  return (a * b + b * a) / 2.0;
}

MeanIterationTrace iterate_mean(const ComplexMatrix& t, int max_steps, double stop_tol,
                                const Tolerance& tol) {
  require_square(t, "iterate_mean");
  require_finite(t, "iterate_mean");
  if (max_steps < 1) {
    throw InputError("iterate_mean: max_steps must be >= 1");
  }
  if (!(stop_tol > 0.0) || !std::isfinite(stop_tol)) {
    throw InputError("iterate_mean: stop_tol must be positive");
  }

  MeanIterationTrace trace;
  trace.iterates.push_back(t);
  while (trace.steps < max_steps) {
    ComplexMatrix next = mean_transform(trace.iterates.back(), tol);
    const double delta = operator_norm(next - trace.iterates.back());
    trace.iterates.push_back(std::move(next));
    trace.deltas.push_back(delta);
    ++trace.steps;
    if (delta <= stop_tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

}  // namespace meantransform
