#pragma once

#include <string>
#include <string_view>

#include "meantransform/types.hpp"

namespace meantransform {

enum class Verdict { yes, no, indeterminate };

std::string_view to_string(Verdict v);

/// Outcome of a tolerance-aware class test.
///
/// `residual` is the raw operator-norm defect of the defining identity.
/// `normalized_residual` divides it by max(1, |T|^k), k being the algebraic
/// degree of the identity, and is what the verdict is decided on:
/// yes when <= abs_tol, no when >= indeterminate_factor * abs_tol.
struct ClassVerdict {
  Verdict holds = Verdict::indeterminate;
  double residual = 0.0;
  double normalized_residual = 0.0;
  std::string description;

  bool yes() const { return holds == Verdict::yes; }
  bool no() const { return holds == Verdict::no; }
};

/// Three-way decision on an already normalized residual.
Verdict decide(double normalized_residual, const Tolerance& tol);

ClassVerdict is_self_adjoint(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_orthogonal_projection(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_partial_isometry(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_isometry(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_unitary(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_normal(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_quasinormal(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_nilpotent2(const ComplexMatrix& t, const Tolerance& tol = {});
ClassVerdict is_idempotent(const ComplexMatrix& t, const Tolerance& tol = {});

/// Q <= P for orthogonal projections, via PQ = QP = Q. Throws InputError
/// unless both arguments are certified projections.
ClassVerdict projection_leq(const ComplexMatrix& q, const ComplexMatrix& p,
                            const Tolerance& tol = {});

/// PQ = 0 for orthogonal projections. Same preconditions as projection_leq.
ClassVerdict projections_orthogonal(const ComplexMatrix& p, const ComplexMatrix& q,
                                    const Tolerance& tol = {});

}  // namespace meantransform
