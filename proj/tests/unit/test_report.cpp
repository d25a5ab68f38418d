#include <gtest/gtest.h>

#include "meantransform/numerics.hpp"
#include "meantransform/report.hpp"
#include "meantransform/transforms.hpp"

namespace mt = meantransform;
using mt::Verdict;

namespace {

TEST(Report, CombineAndJudge) {
  EXPECT_EQ(mt::combine(Verdict::yes, Verdict::yes), Verdict::yes);
  EXPECT_EQ(mt::combine(Verdict::yes, Verdict::indeterminate), Verdict::indeterminate);
  EXPECT_EQ(mt::combine(Verdict::indeterminate, Verdict::no), Verdict::no);
  const mt::Tolerance tol;
  EXPECT_EQ(mt::judge_gap(1.0, tol), Verdict::yes);
  EXPECT_EQ(mt::judge_gap(0.0, tol), Verdict::no);
  EXPECT_EQ(mt::judge_gap(1e-7, tol), Verdict::indeterminate);
}

TEST(Report, CountsAddUp) {
  const mt::TrialFn trial = [](const mt::PropertyContext& ctx, mt::Rng&) {
    const double r = ctx.trial_index % 3 == 0 ? 0.0 : (ctx.trial_index % 3 == 1 ? 1e-7 : 1.0);
    return mt::expect_small(r, {{"k", mt::ComplexMatrix::Identity(2, 2) * double(ctx.trial_index)}},
                            ctx.tol);
  };
  mt::GeneratorSpec spec;
  const mt::CheckReport r = mt::run_property("bands", trial, spec, 30, {});
  EXPECT_EQ(r.passes + r.failures + r.indeterminate, r.trials);
  EXPECT_EQ(r.passes, 10);
  EXPECT_EQ(r.indeterminate, 10);
  EXPECT_EQ(r.failures, 10);
  ASSERT_TRUE(r.witness_trial);
  EXPECT_EQ(*r.witness_trial, 2);  // lowest failing index
  ASSERT_EQ(r.witness.size(), 1U);
  EXPECT_EQ(r.witness[0].matrix(0, 0), mt::Complex(2.0, 0.0));
  EXPECT_DOUBLE_EQ(r.worst_residual, 1.0);
  EXPECT_FALSE(r.ok());
}

TEST(Report, ZeroTrialsIsVacuous) {
  const mt::TrialFn trial = [](const mt::PropertyContext&, mt::Rng&) -> mt::TrialOutcome {
    ADD_FAILURE() << "must not run";
    return {};
  };
  const mt::CheckReport r = mt::run_property("none", trial, {}, 0, {});
  EXPECT_EQ(r.trials, 0);
  EXPECT_EQ(r.passes + r.failures + r.indeterminate, 0);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(mt::run_property("neg", trial, {}, -1, {}), mt::InputError);
}

// Harness self-test: a deliberately wrong mean transform must be caught by
// the zero-iff shaped check, with the offending input as witness.
TEST(Report, CorruptedMeanIsCaught) {
  const auto corrupted = [](const mt::ComplexMatrix& t) {
    mt::ComplexMatrix m = mt::mean_transform(t);
    m(0, 0) += 1e-3;  // M(0) != 0 now
    return m;
  };
  const mt::TrialFn trial = [&](const mt::PropertyContext& ctx, mt::Rng&) {
    const mt::ComplexMatrix zero = mt::ComplexMatrix::Zero(ctx.spec.dim, ctx.spec.dim);
    return mt::expect_small(mt::operator_norm(corrupted(zero)), {{"T", zero}}, ctx.tol);
  };
  mt::GeneratorSpec spec;
  spec.dim = 4;
  const mt::CheckReport r = mt::run_property("zero_iff_corrupted", trial, spec, 5, {});
  EXPECT_EQ(r.failures, 5);
  ASSERT_EQ(r.witness.size(), 1U);
  EXPECT_EQ(r.witness[0].label, "T");
  EXPECT_EQ(r.witness[0].matrix.rows(), 4);
}

TEST(Report, TrialStreamsDependOnSeedIndexAndDim) {
  std::vector<double> seen;
  const mt::TrialFn trial = [&](const mt::PropertyContext& ctx, mt::Rng& rng) {
    seen.push_back(rng.normal());
    return mt::expect_small(0.0, {}, ctx.tol);
  };
  mt::GeneratorSpec spec;
  spec.dim = 3;
  mt::run_property("a", trial, spec, 2, {});
  mt::run_property("a", trial, spec, 2, {});
  spec.dim = 4;
  mt::run_property("a", trial, spec, 1, {});
  ASSERT_EQ(seen.size(), 5U);
  EXPECT_EQ(seen[0], seen[2]);
  EXPECT_EQ(seen[1], seen[3]);
  EXPECT_NE(seen[0], seen[1]);
  EXPECT_NE(seen[0], seen[4]);
}

}  // namespace
