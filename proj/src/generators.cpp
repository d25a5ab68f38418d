#include "meantransform/generators.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/QR>

#include "meantransform/numerics.hpp"

namespace meantransform {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),        static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32),
                    static_cast<std::uint32_t>(stream),      static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return Rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
}

double Rng::normal() { return normal_(engine_); }

double Rng::uniform() { return uniform_(engine_); }

int Rng::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

ComplexVector Rng::gaussian_vector(Eigen::Index n) {
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = complex_normal();
  }
  return v;
}

ComplexVector Rng::unit_vector(Eigen::Index n) {
  ComplexVector v = gaussian_vector(n);
  while (v.norm() == 0.0) {
    v = gaussian_vector(n);
  }
  return v / v.norm();
}

namespace {

struct KindName {
  GeneratorKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 11> kKindNames{{
    {GeneratorKind::ginibre, "ginibre"},
    {GeneratorKind::haar_unitary, "haar_unitary"},
    {GeneratorKind::hermitian, "hermitian"},
    {GeneratorKind::psd, "psd"},
    {GeneratorKind::projection, "projection"},
    {GeneratorKind::rank_one, "rank_one"},
    {GeneratorKind::rank_one_projection, "rank_one_projection"},
    {GeneratorKind::nilpotent2, "nilpotent2"},
    {GeneratorKind::normal, "normal"},
    {GeneratorKind::idempotent, "idempotent"},
    {GeneratorKind::selfadjoint_polar, "selfadjoint_polar"},
}};

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) {
      return entry.name;
    }
  }
  return "unknown";
}

GeneratorKind generator_kind_from_string(std::string_view name) {
  for (const auto& entry : kKindNames) {
    if (entry.name == name) {
      return entry.kind;
    }
  }
  throw InputError("unknown generator kind: " + std::string(name));
}

void GeneratorSpec::validate() const {
  if (dim < 2) {
    throw InputError("generator: dim must be >= 2");
  }
  if (rank && (*rank < 0 || *rank > dim)) {
    throw InputError("generator: rank must lie in [0, dim]");
  }
  if (kind == GeneratorKind::idempotent && rank && (*rank < 1 || *rank >= dim)) {
    throw InputError("generator: oblique idempotent rank must lie in [1, dim - 1]");
  }
  if (!std::isfinite(scale.real()) || !std::isfinite(scale.imag()) || scale == Complex(0.0, 0.0)) {
    throw InputError("generator: scale must be finite and nonzero");
  }
}

ComplexMatrix ginibre(Eigen::Index n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      g(i, j) = rng.complex_normal();
    }
  }
  return g;
}

// QR of a Ginibre matrix, with R's diagonal phases pushed into Q so the
// result is Haar distributed.
ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix random_projection(Eigen::Index n, Eigen::Index rank, Rng& rng) {
  const ComplexMatrix u = haar_unitary(n, rng);
  const auto basis = u.leftCols(rank);
  ComplexMatrix p = basis * basis.adjoint();
  return (p + p.adjoint()) / 2.0;
}

namespace {

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& core) {
  return u * core * u.adjoint();
}

ComplexMatrix draw(const GeneratorSpec& spec, Rng& rng) {
  const Eigen::Index n = spec.dim;
  switch (spec.kind) {
    case GeneratorKind::ginibre:
      return ginibre(n, rng);
    case GeneratorKind::haar_unitary:
      return haar_unitary(n, rng);
    case GeneratorKind::hermitian: {
      const ComplexMatrix g = ginibre(n, rng);
      return (g + g.adjoint()) / 2.0;
    }
    case GeneratorKind::psd: {
      const ComplexMatrix g = ginibre(n, rng);
      ComplexMatrix p = g.adjoint() * g;
      return (p + p.adjoint()) / 2.0;
    }
    case GeneratorKind::projection: {
      const int rank = spec.rank ? *spec.rank : rng.uniform_int(0, spec.dim);
      return random_projection(n, rank, rng);
    }
    case GeneratorKind::rank_one:
      return rank_one(rng.gaussian_vector(n), rng.gaussian_vector(n));
    case GeneratorKind::rank_one_projection: {
      const ComplexVector x = rng.unit_vector(n);
      return rank_one(x, x);
    }
    case GeneratorKind::nilpotent2: {
      // [[0, X], [0, 0]] in a random orthonormal basis, top block k <= n - k.
      const int k = rng.uniform_int(1, spec.dim / 2);
      ComplexMatrix core = ComplexMatrix::Zero(n, n);
      core.topRightCorner(k, n - k) = ginibre(n, rng).topLeftCorner(k, n - k);
      return conjugate_by(haar_unitary(n, rng), core);
    }
    case GeneratorKind::normal: {
      const ComplexVector lambda = rng.gaussian_vector(n);
      return conjugate_by(haar_unitary(n, rng), lambda.asDiagonal().toDenseMatrix());
    }
    case GeneratorKind::idempotent: {
      // [[I_r, X], [0, 0]] with X != 0 in a random orthonormal basis.
      const int r = spec.rank ? *spec.rank : rng.uniform_int(1, spec.dim - 1);
      ComplexMatrix core = ComplexMatrix::Zero(n, n);
      core.topLeftCorner(r, r).setIdentity();
      core.topRightCorner(r, n - r) = ginibre(n, rng).topLeftCorner(r, n - r);
      return conjugate_by(haar_unitary(n, rng), core);
    }
    case GeneratorKind::selfadjoint_polar: {
      Eigen::VectorXd signs(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        signs(i) = rng.uniform() < 0.5 ? -1.0 : 1.0;
      }
      const ComplexMatrix w =
          conjugate_by(haar_unitary(n, rng), signs.cast<Complex>().asDiagonal().toDenseMatrix());
      const ComplexMatrix g = ginibre(n, rng);
      const ComplexMatrix p = g.adjoint() * g + 0.5 * ComplexMatrix::Identity(n, n);
      return w * p;
    }
  }
  throw std::logic_error("unhandled generator kind");
}

ClassVerdict always_yes(std::string description) {
  return ClassVerdict{Verdict::yes, 0.0, 0.0, std::move(description)};
}

}  // namespace

ClassVerdict certify(GeneratorKind kind, const ComplexMatrix& m, const Tolerance& tol) {
  switch (kind) {
    case GeneratorKind::ginibre:
      return always_yes("generic");
    case GeneratorKind::haar_unitary:
      return is_unitary(m, tol);
    case GeneratorKind::hermitian:
      return is_self_adjoint(m, tol);
    case GeneratorKind::psd: {
      ClassVerdict v = is_self_adjoint(m, tol);
      if (v.yes()) {
        const RealInterval range = numerical_range_selfadjoint(m, tol);
        const double scale = std::max(1.0, operator_norm(m));
        if (range.lo < -tol.abs_tol * scale) {
          v.holds = Verdict::no;
          v.residual = -range.lo;
          v.normalized_residual = -range.lo / scale;
        }
      }
      v.description = "positive semidefinite";
      return v;
    }
    case GeneratorKind::projection:
    case GeneratorKind::rank_one_projection:
      return is_orthogonal_projection(m, tol);
    case GeneratorKind::rank_one: {
      const RealVector s = svd(m).sigma;
      const double second = s.size() > 1 ? s(1) / std::max(1.0, s(0)) : 0.0;
      return ClassVerdict{decide(second, tol), second, second, "rank one: sigma_2 / sigma_1"};
    }
    case GeneratorKind::nilpotent2:
      return is_nilpotent2(m, tol);
    case GeneratorKind::normal:
      return is_normal(m, tol);
    case GeneratorKind::idempotent: {
      ClassVerdict v = is_idempotent(m, tol);
      if (v.yes() && !is_self_adjoint(m, tol).no()) {
        v.holds = Verdict::no;
        v.description = "oblique idempotent: unexpectedly self-adjoint";
      }
      return v;
    }
    case GeneratorKind::selfadjoint_polar: {
      ClassVerdict v = is_self_adjoint(polar_decompose(m, tol).V, tol);
      v.description = "polar factor is self-adjoint";
      return v;
    }
  }
  throw std::logic_error("unhandled generator kind");
}

ComplexMatrix generate(const GeneratorSpec& spec, Rng& rng, const Tolerance& tol) {
  spec.validate();
  const ComplexMatrix base = draw(spec, rng);
  const ClassVerdict verdict = certify(spec.kind, base, tol);
  if (!verdict.yes()) {
    throw std::logic_error("generator " + std::string(to_string(spec.kind)) +
                           " produced an uncertified matrix (" + verdict.description +
                           ", residual " + std::to_string(verdict.residual) + ")");
  }
  return spec.scale == Complex(1.0, 0.0) ? base : ComplexMatrix(spec.scale * base);
}

ComplexMatrix generate(const GeneratorSpec& spec, const Tolerance& tol) {
  Rng rng(spec.seed);
  return generate(spec, rng, tol);
}

}  // namespace meantransform
