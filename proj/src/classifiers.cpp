#include "meantransform/classifiers.hpp"

#include <algorithm>
#include <cmath>

#include "meantransform/numerics.hpp"

namespace meantransform {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Verdict decide(double normalized_residual, const Tolerance& tol) {
  if (std::isnan(normalized_residual)) {
    return Verdict::indeterminate;
  }
  if (normalized_residual <= tol.abs_tol) {
    return Verdict::yes;
  }
  if (normalized_residual >= tol.band()) {
    return Verdict::no;
  }
  return Verdict::indeterminate;
}

namespace {

double degree_scale(double norm, int degree) { return std::max(1.0, std::pow(norm, degree)); }

ClassVerdict make_verdict(double residual, double normalized, const Tolerance& tol,
                          std::string description) {
  return ClassVerdict{decide(normalized, tol), residual, normalized, std::move(description)};
}

void check_input(const ComplexMatrix& t, const char* what) {
  require_square(t, what);
  require_finite(t, what);
}

ComplexMatrix identity_like(const ComplexMatrix& t) {
  return ComplexMatrix::Identity(t.rows(), t.cols());
}

}  // namespace

ClassVerdict is_self_adjoint(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_self_adjoint");
  const double r = operator_norm(t - t.adjoint());
  return make_verdict(r, r / degree_scale(operator_norm(t), 1), tol, "self-adjoint: |T - T*|");
}

ClassVerdict is_orthogonal_projection(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_orthogonal_projection");
  const double norm = operator_norm(t);
  const double idem = operator_norm(t * t - t);
  const double herm = operator_norm(t - t.adjoint());
  const double normalized = std::max(idem / degree_scale(norm, 2), herm / degree_scale(norm, 1));
  return make_verdict(std::max(idem, herm), normalized, tol,
                      "orthogonal projection: max(|T^2 - T|, |T - T*|)");
}

ClassVerdict is_partial_isometry(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_partial_isometry");
  const double r = operator_norm(t * t.adjoint() * t - t);
  return make_verdict(r, r / degree_scale(operator_norm(t), 3), tol,
                      "partial isometry: |T T* T - T|");
}

ClassVerdict is_isometry(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_isometry");
  const double r = operator_norm(t.adjoint() * t - identity_like(t));
  return make_verdict(r, r / degree_scale(operator_norm(t), 2), tol, "isometry: |T*T - I|");
}

ClassVerdict is_unitary(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_unitary");
  const ComplexMatrix id = identity_like(t);
  const double r = std::max(operator_norm(t.adjoint() * t - id), operator_norm(t * t.adjoint() - id));
  return make_verdict(r, r / degree_scale(operator_norm(t), 2), tol,
                      "unitary: max(|T*T - I|, |TT* - I|)");
}

ClassVerdict is_normal(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_normal");
  const double r = operator_norm(t.adjoint() * t - t * t.adjoint());
  return make_verdict(r, r / degree_scale(operator_norm(t), 2), tol, "normal: |T*T - TT*|");
}

ClassVerdict is_quasinormal(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_quasinormal");
  const ComplexMatrix gram = t.adjoint() * t;
  const double r = operator_norm(t * gram - gram * t);
  return make_verdict(r, r / degree_scale(operator_norm(t), 3), tol,
                      "quasi-normal: |T(T*T) - (T*T)T|");
}

ClassVerdict is_nilpotent2(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_nilpotent2");
  const double r = operator_norm(t * t);
  return make_verdict(r, r / degree_scale(operator_norm(t), 2), tol, "square-zero: |T^2|");
}

ClassVerdict is_idempotent(const ComplexMatrix& t, const Tolerance& tol) {
  check_input(t, "is_idempotent");
  const double r = operator_norm(t * t - t);
  return make_verdict(r, r / degree_scale(operator_norm(t), 2), tol, "idempotent: |T^2 - T|");
}

namespace {

void require_projection_pair(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol,
                             const char* what) {
  require_same_shape(a, b, what);
  if (!is_orthogonal_projection(a, tol).yes() || !is_orthogonal_projection(b, tol).yes()) {
    throw InputError(std::string(what) + ": arguments must be orthogonal projections");
  }
}

}  // namespace

ClassVerdict projection_leq(const ComplexMatrix& q, const ComplexMatrix& p, const Tolerance& tol) {
  require_projection_pair(q, p, tol, "projection_leq");
  const double r = std::max(operator_norm(p * q - q), operator_norm(q * p - q));
  return make_verdict(r, r, tol, "projection order Q <= P: max(|PQ - Q|, |QP - Q|)");
}

ClassVerdict projections_orthogonal(const ComplexMatrix& p, const ComplexMatrix& q,
                                    const Tolerance& tol) {
  require_projection_pair(p, q, tol, "projections_orthogonal");
  const double r = operator_norm(p * q);
  return make_verdict(r, r, tol, "orthogonal projections: |PQ|");
}

}  // namespace meantransform
