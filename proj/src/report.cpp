#include "meantransform/report.hpp"

#include <algorithm>

namespace meantransform {

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) {
    return Verdict::no;
  }
  if (a == Verdict::indeterminate || b == Verdict::indeterminate) {
    return Verdict::indeterminate;
  }
  return Verdict::yes;
}

Verdict judge_gap(double gap, const Tolerance& tol) {
  switch (decide(gap, tol)) {
    case Verdict::yes:
      return Verdict::no;
    case Verdict::no:
      return Verdict::yes;
    case Verdict::indeterminate:
      break;
  }
  return Verdict::indeterminate;
}

TrialOutcome expect_small(double residual, std::vector<Witness> witness, const Tolerance& tol) {
  TrialOutcome out;
  out.verdict = decide(residual, tol);
  out.residual = residual;
  out.witness = std::move(witness);
  return out;
}

CheckReport run_property(const std::string& property_id, const TrialFn& trial,
                         const GeneratorSpec& spec, int trials, const Tolerance& tol) {
  if (trials < 0) {
    throw InputError("trials must be nonnegative");
  }
  spec.validate();
  tol.validate();

  CheckReport report;
  report.property_id = property_id;
  report.dim = spec.dim;
  report.seed = spec.seed;
  report.trials = trials;

  for (int i = 0; i < trials; ++i) {
    Rng rng = Rng::for_trial(spec.seed, static_cast<std::uint64_t>(i),
                              static_cast<std::uint64_t>(spec.dim));
    TrialOutcome outcome = trial(PropertyContext{spec, tol, i}, rng);

    report.worst_residual = std::max(report.worst_residual, outcome.residual);
    if (outcome.reverse_gap) {
      ++report.reverse_samples;
      report.min_reverse_gap = report.min_reverse_gap
                                   ? std::min(*report.min_reverse_gap, *outcome.reverse_gap)
                                   : *outcome.reverse_gap;
    }
    switch (outcome.verdict) {
      case Verdict::yes:
        ++report.passes;
        break;
      case Verdict::indeterminate:
        ++report.indeterminate;
        break;
      case Verdict::no:
        ++report.failures;
        if (!report.witness_trial) {
          report.witness_trial = i;
          report.witness = std::move(outcome.witness);
        }
        break;
    }
  }
  return report;
}

}  // namespace meantransform
