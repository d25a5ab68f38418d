#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "meantransform/report.hpp"
#include "meantransform/types.hpp"

namespace meantransform {

struct PhiMap;

/// T -> U T U*.
struct UnitaryConjugation {
  ComplexMatrix U;
};

/// T -> W conj(T) W*, i.e. conjugation by the anti-unitary W composed with
/// entrywise conjugation in the standard basis.
struct AntiunitaryConjugation {
  ComplexMatrix W;
};

/// T -> c T.
struct Scale {
  Complex c;
};

/// T -> T*.
struct AdjointMap {};

/// Applies `maps` left to right.
struct Compose {
  std::vector<PhiMap> maps;
};

struct PhiMap {
  using Variant = std::variant<UnitaryConjugation, AntiunitaryConjugation, Scale, AdjointMap, Compose>;
  Variant variant;

  /// Validating constructors; the conjugation variants require a unitary.
  static PhiMap unitary(ComplexMatrix u, const Tolerance& tol = {});
  static PhiMap antiunitary(ComplexMatrix w, const Tolerance& tol = {});
  static PhiMap scale(Complex c);
  static PhiMap adjoint();
  static PhiMap compose(std::vector<PhiMap> maps);

  bool is_conjugation() const;
};

ComplexMatrix apply_phi(const PhiMap& map, const ComplexMatrix& t);

/// |M(Phi(A) o Phi(B)) - Phi(M(A o B))| in operator norm.
double commuting_residual(const PhiMap& map, const ComplexMatrix& a, const ComplexMatrix& b,
                          const Tolerance& tol = {});

/// Checks the commuting condition for random Haar conjugations (unitary and
/// anti-unitary in every trial) on random A, B. Residuals are normalized by
/// max(1, |A||B|). Requires dim >= 3.
CheckReport verify_forward_theorem(int dim, int trials, std::uint64_t seed,
                                   const Tolerance& tol = {});

/// Gap |M(A*) - M(A)*| for A = x (x) xp, evaluated with the closed-form
/// rank-one mean. x and xp must be unit, linearly independent and
/// non-orthogonal.
double adjoint_counterexample(const ComplexVector& x, const ComplexVector& xp,
                              const Tolerance& tol = {});

/// Preservation properties a conjugation must have: projections, their
/// order and orthogonality, normality, squares of normal operators, sums of
/// orthogonal projections, rank-one projections, Phi(0) = 0, Phi(I) = I and
/// M(Phi(B)) = Phi(M(B)). Only conjugation variants are accepted.
CheckReport phi_preservation_suite(const PhiMap& map, int trials, std::uint64_t seed,
                                   const Tolerance& tol = {});

// Trial bodies shared with the property registry.
TrialOutcome forward_theorem_trial(const PropertyContext& ctx, Rng& rng);
TrialOutcome preservation_trial(const PhiMap& map, const PropertyContext& ctx, Rng& rng);

}  // namespace meantransform
