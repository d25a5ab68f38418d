#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "meantransform/classifiers.hpp"
#include "meantransform/types.hpp"

namespace meantransform {

/// Seeded source of complex Gaussian samples. Every trial owns one, derived
/// from (seed, trial index, stream), so trials are reproducible in isolation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t stream = 0);

  double normal();
  double uniform();  // [0, 1)
  int uniform_int(int lo, int hi);  // inclusive
  Complex complex_normal();  // E|z|^2 = 1
  ComplexVector gaussian_vector(Eigen::Index n);
  ComplexVector unit_vector(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

enum class GeneratorKind {
  ginibre,
  haar_unitary,
  hermitian,
  psd,
  projection,
  rank_one,
  rank_one_projection,
  nilpotent2,
  normal,
  idempotent,         // oblique (non-self-adjoint) idempotent
  selfadjoint_polar,  // W P with W a Hermitian unitary, P positive definite
};

std::string_view to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(std::string_view name);

/// What to draw: a class, a dimension, and a seed. `rank` applies to
/// projection and idempotent kinds (random when unset). A `scale` other than
/// one yields the scaled variant c * X of the base kind.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::ginibre;
  int dim = 3;
  std::uint64_t seed = 0;
  std::optional<int> rank;
  Complex scale{1.0, 0.0};

  void validate() const;
};

/// Draws one matrix of the requested class from `rng` and certifies it with
/// the matching classifier; a certification failure throws std::logic_error.
ComplexMatrix generate(const GeneratorSpec& spec, Rng& rng, const Tolerance& tol = {});

/// Deterministic in (kind, dim, rank, scale, seed).
ComplexMatrix generate(const GeneratorSpec& spec, const Tolerance& tol = {});

ComplexMatrix ginibre(Eigen::Index n, Rng& rng);
ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng);
ComplexMatrix random_projection(Eigen::Index n, Eigen::Index rank, Rng& rng);

/// The class predicate a generator's output must pass.
ClassVerdict certify(GeneratorKind kind, const ComplexMatrix& m, const Tolerance& tol = {});

}  // namespace meantransform
