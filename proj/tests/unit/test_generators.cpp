#include <set>

#include <gtest/gtest.h>

#include "meantransform/classifiers.hpp"
#include "meantransform/generators.hpp"
#include "meantransform/numerics.hpp"
#include "support.hpp"

namespace mt = meantransform;
using mt::GeneratorKind;

namespace {

const GeneratorKind kAllKinds[] = {
    GeneratorKind::ginibre,   GeneratorKind::haar_unitary, GeneratorKind::hermitian,
    GeneratorKind::psd,       GeneratorKind::projection,   GeneratorKind::rank_one,
    GeneratorKind::rank_one_projection, GeneratorKind::nilpotent2, GeneratorKind::normal,
    GeneratorKind::idempotent, GeneratorKind::selfadjoint_polar};

TEST(Rng, ForTrialIsReproducibleAndDistinct) {
  mt::Rng a = mt::Rng::for_trial(1, 5);
  mt::Rng b = mt::Rng::for_trial(1, 5);
  EXPECT_EQ(a.normal(), b.normal());
  std::set<double> firsts;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    firsts.insert(mt::Rng::for_trial(1, trial).normal());
  }
  for (std::uint64_t stream = 0; stream < 50; ++stream) {
    firsts.insert(mt::Rng::for_trial(1, 0, stream + 1).normal());
  }
  EXPECT_EQ(firsts.size(), 100U);
}

TEST(Rng, ComplexNormalHasUnitVariance) {
  mt::Rng rng(2);
  double acc = 0.0;
  constexpr int kSamples = 20000;
  for (int i = 0; i < kSamples; ++i) {
    acc += std::norm(rng.complex_normal());
  }
  EXPECT_NEAR(acc / kSamples, 1.0, 0.05);
}

TEST(Rng, UnitVectorHasUnitNorm) {
  mt::Rng rng(3);
  EXPECT_NEAR(rng.unit_vector(7).norm(), 1.0, 1e-14);
}

TEST(Generators, NamesRoundTrip) {
  for (GeneratorKind kind : kAllKinds) {
    EXPECT_EQ(mt::generator_kind_from_string(mt::to_string(kind)), kind);
  }
  EXPECT_THROW(mt::generator_kind_from_string("banana"), mt::InputError);
}

TEST(Generators, Examples) {
  mt::GeneratorSpec spec;
  spec.kind = GeneratorKind::projection;
  spec.dim = 3;
  spec.rank = 1;
  const mt::ComplexMatrix p = mt::generate(spec);
  EXPECT_LE(mt::is_orthogonal_projection(p).residual, 1e-12);
  EXPECT_NEAR(mt::trace(p).real(), 1.0, 1e-12);

  spec = {};
  spec.kind = GeneratorKind::haar_unitary;
  spec.dim = 4;
  EXPECT_LE(mt::is_unitary(mt::generate(spec)).residual, 1e-12);

  spec.kind = GeneratorKind::nilpotent2;
  const mt::ComplexMatrix n = mt::generate(spec);
  EXPECT_LE(mt::operator_norm(n * n), 1e-12);
  EXPECT_GT(mt::operator_norm(n), 1e-3);
}

TEST(Generators, EveryKindCertifiesAcrossDims) {
  for (GeneratorKind kind : kAllKinds) {
    for (int dim = 2; dim <= 8; ++dim) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        mt::GeneratorSpec spec;
        spec.kind = kind;
        spec.dim = dim;
        spec.seed = seed;
        mt::ComplexMatrix m;
        ASSERT_NO_THROW(m = mt::generate(spec)) << mt::to_string(kind) << " dim " << dim;
        EXPECT_EQ(m.rows(), dim);
        EXPECT_TRUE(mt::certify(kind, m).yes());
      }
    }
  }
}

TEST(Generators, DeterministicInSeed) {
  mt::GeneratorSpec spec;
  spec.kind = GeneratorKind::normal;
  spec.dim = 5;
  spec.seed = 99;
  EXPECT_EQ(mt::generate(spec), mt::generate(spec));
  mt::GeneratorSpec other = spec;
  other.seed = 100;
  EXPECT_NE(mt::generate(spec), mt::generate(other));
}

TEST(Generators, ProjectionRankIsHonoured) {
  for (int rank = 0; rank <= 5; ++rank) {
    mt::GeneratorSpec spec;
    spec.kind = GeneratorKind::projection;
    spec.dim = 5;
    spec.rank = rank;
    EXPECT_NEAR(mt::trace(mt::generate(spec)).real(), rank, 1e-12);
  }
}

TEST(Generators, ObliqueIdempotentIsNotSelfAdjoint) {
  mt::GeneratorSpec spec;
  spec.kind = GeneratorKind::idempotent;
  spec.dim = 4;
  const mt::ComplexMatrix e = mt::generate(spec);
  EXPECT_TRUE(mt::is_idempotent(e).yes());
  EXPECT_TRUE(mt::is_self_adjoint(e).no());
}

TEST(Generators, ScaleIsAppliedAfterCertification) {
  mt::GeneratorSpec spec;
  spec.kind = GeneratorKind::projection;
  spec.dim = 3;
  spec.rank = 2;
  const mt::ComplexMatrix base = mt::generate(spec);
  spec.scale = {2.0, 1.0};
  EXPECT_LT(mt::operator_norm(mt::generate(spec) - spec.scale * base), 1e-15);
}

TEST(Generators, SpecValidation) {
  mt::GeneratorSpec spec;
  spec.dim = 1;
  EXPECT_THROW(mt::generate(spec), mt::InputError);
  spec.dim = 3;
  spec.kind = GeneratorKind::projection;
  spec.rank = 4;
  EXPECT_THROW(mt::generate(spec), mt::InputError);
  spec.rank = -1;
  EXPECT_THROW(mt::generate(spec), mt::InputError);
  spec.kind = GeneratorKind::idempotent;
  spec.rank = 3;
  EXPECT_THROW(mt::generate(spec), mt::InputError);
  spec.rank.reset();
  spec.scale = {0.0, 0.0};
  EXPECT_THROW(mt::generate(spec), mt::InputError);
}

TEST(Generators, HaarUnitaryPhasesAreSpread) {
  // Without the phase fix the diagonal of R would bias Q; check the first
  // entry's phase is not concentrated.
  double sum_re = 0.0;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    mt::Rng rng(s);
    const mt::Complex q = mt::haar_unitary(3, rng)(0, 0);
    sum_re += q.real() / std::max(std::abs(q), 1e-300);
  }
  EXPECT_LT(std::abs(sum_re / 2000), 0.08);
}

}  // namespace
