#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "meantransform/report.hpp"
#include "meantransform/types.hpp"

namespace meantransform {

/// Closed form of the mean transform of a rank-one operator:
/// M(x (x) y) = 1/2 (x + <x,y>/|y|^2 y) (x) y. Throws InputError for y = 0.
ComplexMatrix rank_one_mean(const ComplexVector& x, const ComplexVector& y);

/// A registered executable property.
///
/// Two-sided characterizations draw a class-conforming input for the forward
/// direction and an input of kind `spec.kind` for the reverse direction; a
/// reverse input that happens to lie in the class is skipped. Properties with
/// `expected_to_hold == false` are falsifiers: a correct implementation makes
/// them report failures.
struct PropertyInfo {
  std::string id;
  std::string statement;
  bool expected_to_hold = true;
  int min_dim = 2;
  TrialFn trial;
};

const std::vector<PropertyInfo>& property_registry();

/// Throws InputError for unknown ids.
const PropertyInfo& find_property(std::string_view id);

/// Runs a registered property. Throws InputError for unknown ids or when
/// spec.dim is below the property's minimum dimension.
CheckReport falsify(std::string_view property_id, const GeneratorSpec& spec, int trials,
                    const Tolerance& tol = {});

CheckReport check_zero_iff(const GeneratorSpec& spec, int trials, const Tolerance& tol = {});
CheckReport check_nilpotent_iff(const GeneratorSpec& spec, int trials, const Tolerance& tol = {});
CheckReport check_projection_square(const GeneratorSpec& spec, int trials,
                                    const Tolerance& tol = {});
CheckReport check_mean_projection_iff(const GeneratorSpec& spec, int trials,
                                      const Tolerance& tol = {});
CheckReport check_selfadjoint_iff(const GeneratorSpec& spec, int trials, const Tolerance& tol = {});
CheckReport check_rank_one_formula(const GeneratorSpec& spec, int trials,
                                   const Tolerance& tol = {});

/// Samples `sample_count` random rank-one projections P and tests
/// M(T o P) = P for each one. For T = I every sample passes; for T far from
/// the identity the report's failures carry a violating P as witness.
CheckReport check_identity_characterization(const ComplexMatrix& t, int sample_count,
                                            std::uint64_t seed = 0, const Tolerance& tol = {});

}  // namespace meantransform
