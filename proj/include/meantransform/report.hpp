#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meantransform/classifiers.hpp"
#include "meantransform/generators.hpp"
#include "meantransform/types.hpp"

namespace meantransform {

struct Witness {
  std::string label;
  ComplexMatrix matrix;
};

/// Result of one randomized trial of a property.
///
/// `residual` measures the direction that must come out small (an identity
/// that should hold). `reverse_gap`, when present, measures the direction
/// that must come out large (a characterization's converse on an input
/// outside the class). Both are scale-normalized by the property.
struct TrialOutcome {
  Verdict verdict = Verdict::yes;
  double residual = 0.0;
  std::optional<double> reverse_gap;
  std::vector<Witness> witness;
};

struct CheckReport {
  std::string property_id;
  int dim = 0;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int indeterminate = 0;
  double worst_residual = 0.0;
  std::optional<double> min_reverse_gap;
  int reverse_samples = 0;
  std::vector<Witness> witness;     // from the lowest-index failing trial
  std::optional<int> witness_trial;
  std::uint64_t seed = 0;

  bool ok() const { return failures == 0; }
};

struct PropertyContext {
  GeneratorSpec spec;
  Tolerance tol;
  int trial_index = 0;
};

using TrialFn = std::function<TrialOutcome(const PropertyContext&, Rng&)>;

/// Runs `trial` `trials` times, each with an Rng derived from
/// (spec.seed, trial index, spec.dim), and aggregates the outcomes.
CheckReport run_property(const std::string& property_id, const TrialFn& trial,
                         const GeneratorSpec& spec, int trials, const Tolerance& tol);

/// Outcome of asserting that a normalized residual is small.
TrialOutcome expect_small(double residual, std::vector<Witness> witness, const Tolerance& tol);

/// Combines a trial's sub-verdicts: any `no` wins, then any `indeterminate`.
Verdict combine(Verdict a, Verdict b);

/// Verdict of a reverse-direction gap: large is a pass, small is a violation.
Verdict judge_gap(double gap, const Tolerance& tol);

}  // namespace meantransform
