#include "meantransform/theorem_suite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meantransform/classifiers.hpp"
#include "meantransform/numerics.hpp"
#include "meantransform/phi_maps.hpp"
#include "meantransform/transforms.hpp"

namespace meantransform {

ComplexMatrix rank_one_mean(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) {
    throw InputError("rank_one_mean: vectors must have the same dimension");
  }
  const double y_norm2 = y.squaredNorm();
  if (!(y_norm2 > 0.0)) {
    throw InputError("rank_one_mean: y must be nonzero");
  }
  const ComplexVector left = (x + (inner(x, y) / y_norm2) * y) / 2.0;
  return rank_one(left, y);
}

namespace {

double unit_scale(const ComplexMatrix& t) { return std::max(1.0, operator_norm(t)); }

ComplexMatrix draw_generic(const PropertyContext& ctx, Rng& rng) {
  return generate(ctx.spec, rng, ctx.tol);
}

ComplexMatrix draw_kind(GeneratorKind kind, const PropertyContext& ctx, Rng& rng,
                        std::optional<int> rank = std::nullopt) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.dim = ctx.spec.dim;
  spec.rank = rank;
  return generate(spec, rng, ctx.tol);
}

// Attaches a reverse-direction gap to a trial outcome.
void add_reverse(TrialOutcome& out, double gap, const Tolerance& tol) {
  out.reverse_gap = gap;
  out.verdict = combine(out.verdict, judge_gap(gap, tol));
}

std::optional<int> forward_projection_rank(const PropertyContext& ctx) {
  if (ctx.spec.kind == GeneratorKind::idempotent) {
    return std::nullopt;
  }
  return ctx.spec.rank;
}

TrialOutcome zero_iff_trial(const PropertyContext& ctx, Rng& rng) {
  const Eigen::Index n = ctx.spec.dim;
  const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
  const double forward = operator_norm(mean_transform(zero, ctx.tol));
  const ComplexMatrix t = draw_generic(ctx, rng);

  TrialOutcome out;
  out.residual = forward;
  out.verdict = forward == 0.0 ? Verdict::yes : Verdict::no;
  out.witness = {{"T", t}};
  const double t_norm = operator_norm(t);
  if (t_norm >= ctx.tol.band()) {
    add_reverse(out, operator_norm(mean_transform(t, ctx.tol)) / t_norm, ctx.tol);
  }
  return out;
}

TrialOutcome nilpotent_iff_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix n = draw_kind(GeneratorKind::nilpotent2, ctx, rng);
  const double forward = operator_norm(mean_transform(n, ctx.tol) - n / 2.0) / unit_scale(n);
  TrialOutcome out = expect_small(forward, {}, ctx.tol);

  const ComplexMatrix t = draw_generic(ctx, rng);
  out.witness = {{"nilpotent", n}, {"T", t}};
  if (is_nilpotent2(t, ctx.tol).no()) {
    add_reverse(out, operator_norm(mean_transform(t, ctx.tol) - t / 2.0) / unit_scale(t), ctx.tol);
  }
  return out;
}

TrialOutcome projection_square_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix p = draw_kind(GeneratorKind::projection, ctx, rng, forward_projection_rank(ctx));
  const ComplexMatrix mp = mean_transform(p, ctx.tol);
  const double forward = std::max(operator_norm(mean_transform(p * p, ctx.tol) - p),
                                  operator_norm(mp * mp - p));
  TrialOutcome out = expect_small(forward, {}, ctx.tol);

  const ComplexMatrix t = draw_generic(ctx, rng);
  out.witness = {{"projection", p}, {"T", t}};
  if (is_orthogonal_projection(t, ctx.tol).no()) {
    const ComplexMatrix mt = mean_transform(t, ctx.tol);
    const double square_gap = operator_norm(mean_transform(t * t, ctx.tol) - t);
    const double mean_square_gap = operator_norm(mt * mt - t);
    const double scale = std::max(1.0, std::pow(operator_norm(t), 2));
    add_reverse(out, std::min(square_gap, mean_square_gap) / scale, ctx.tol);
  }
  return out;
}

TrialOutcome mean_projection_iff_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix p = draw_kind(GeneratorKind::projection, ctx, rng, forward_projection_rank(ctx));
  const ComplexMatrix mp = mean_transform(p, ctx.tol);
  const double forward =
      std::max(operator_norm(mp - p), is_orthogonal_projection(mp, ctx.tol).normalized_residual);
  TrialOutcome out = expect_small(forward, {}, ctx.tol);

  const ComplexMatrix t = draw_generic(ctx, rng);
  out.witness = {{"projection", p}, {"T", t}};
  if (is_orthogonal_projection(t, ctx.tol).no()) {
    const ComplexMatrix mt = mean_transform(t, ctx.tol);
    add_reverse(out, is_orthogonal_projection(mt, ctx.tol).normalized_residual, ctx.tol);
  }
  return out;
}

// Cycles through input classes so both outcomes of the equivalence occur.
TrialOutcome selfadjoint_iff_trial(const PropertyContext& ctx, Rng& rng) {
  static constexpr GeneratorKind kMix[] = {GeneratorKind::hermitian, GeneratorKind::selfadjoint_polar,
                                           GeneratorKind::normal};
  const int slot = ctx.trial_index % 4;
  const ComplexMatrix t =
      slot == 0 ? draw_generic(ctx, rng) : draw_kind(kMix[slot - 1], ctx, rng);

  const PolarParts polar = polar_decompose(t, ctx.tol);
  const ClassVerdict v_sa = is_self_adjoint(polar.V, ctx.tol);
  const ClassVerdict m_sa = is_self_adjoint(mean_transform(t, ctx.tol), ctx.tol);

  TrialOutcome out;
  out.witness = {{"T", t}, {"V", polar.V}};
  if (v_sa.holds == Verdict::indeterminate) {
    out.verdict = Verdict::indeterminate;
  } else if (v_sa.yes()) {
    out.residual = m_sa.normalized_residual;
    out.verdict = m_sa.holds;
  } else {
    out.verdict = Verdict::yes;
    add_reverse(out, m_sa.normalized_residual, ctx.tol);
  }
  return out;
}

double identity_residual(const ComplexMatrix& t, const ComplexMatrix& p, const Tolerance& tol) {
  return operator_norm(mean_transform(jordan_product(t, p), tol) - p) / unit_scale(t);
}

ComplexMatrix random_rank_one_projection(Eigen::Index n, Rng& rng) {
  const ComplexVector x = rng.unit_vector(n);
  return rank_one(x, x);
}

TrialOutcome identity_characterization_trial(const PropertyContext& ctx, Rng& rng) {
  constexpr int kForwardSamples = 5;
  constexpr int kSearchBudget = 50;
  const Eigen::Index n = ctx.spec.dim;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  double forward = 0.0;
  for (int k = 0; k < kForwardSamples; ++k) {
    forward = std::max(forward, identity_residual(id, random_rank_one_projection(n, rng), ctx.tol));
  }
  TrialOutcome out = expect_small(forward, {}, ctx.tol);

  const ComplexMatrix t = draw_generic(ctx, rng);
  out.witness = {{"T", t}};
  if (operator_norm(t - id) / unit_scale(t) < ctx.tol.band()) {
    return out;
  }
  double gap = 0.0;
  for (int k = 0; k < kSearchBudget; ++k) {
    const ComplexMatrix p = random_rank_one_projection(n, rng);
    const double r = identity_residual(t, p, ctx.tol);
    if (r > gap) {
      gap = r;
      out.witness = {{"T", t}, {"P", p}};
    }
    if (judge_gap(gap, ctx.tol) == Verdict::yes) {
      break;
    }
  }
  add_reverse(out, gap, ctx.tol);
  return out;
}

TrialOutcome rank_one_formula_trial(const PropertyContext& ctx, Rng& rng) {
  const Eigen::Index n = ctx.spec.dim;
  const ComplexVector x = ctx.spec.scale * rng.gaussian_vector(n);
  const ComplexVector y = rng.gaussian_vector(n);
  const ComplexMatrix t = rank_one(x, y);
  const double scale = std::max(1.0, x.norm() * y.norm());
  const double r = operator_norm(mean_transform(t, ctx.tol) - rank_one_mean(x, y)) / scale;
  return expect_small(r, {{"x (x) y", t}}, ctx.tol);
}

TrialOutcome fixed_points_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix n = draw_kind(GeneratorKind::normal, ctx, rng);
  const double forward = operator_norm(mean_transform(n, ctx.tol) - n) / unit_scale(n);
  TrialOutcome out = expect_small(forward, {}, ctx.tol);

  const ComplexMatrix t = draw_generic(ctx, rng);
  out.witness = {{"normal", n}, {"T", t}};
  if (is_quasinormal(t, ctx.tol).no()) {
    add_reverse(out, operator_norm(mean_transform(t, ctx.tol) - t) / unit_scale(t), ctx.tol);
  }
  return out;
}

TrialOutcome trace_preservation_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix t = draw_generic(ctx, rng);
  const double r = std::abs(trace(mean_transform(t, ctx.tol)) - trace(t)) / unit_scale(t);
  return expect_small(r, {{"T", t}}, ctx.tol);
}

TrialOutcome unitary_covariance_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix t = draw_generic(ctx, rng);
  const ComplexMatrix u = haar_unitary(ctx.spec.dim, rng);
  const ComplexMatrix lhs = mean_transform(u * t * u.adjoint(), ctx.tol);
  const ComplexMatrix rhs = u * mean_transform(t, ctx.tol) * u.adjoint();
  return expect_small(operator_norm(lhs - rhs) / unit_scale(t), {{"T", t}, {"U", u}}, ctx.tol);
}

TrialOutcome conjugation_covariance_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix t = draw_generic(ctx, rng);
  const ComplexMatrix lhs = mean_transform(conj_entrywise(t), ctx.tol);
  const ComplexMatrix rhs = conj_entrywise(mean_transform(t, ctx.tol));
  return expect_small(operator_norm(lhs - rhs) / unit_scale(t), {{"T", t}}, ctx.tol);
}

TrialOutcome homogeneity_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix t = draw_generic(ctx, rng);
  const Complex c = rng.complex_normal();
  const ComplexMatrix lhs = mean_transform(c * t, ctx.tol);
  const ComplexMatrix rhs = c * mean_transform(t, ctx.tol);
  const double scale = std::max(1.0, std::abs(c) * operator_norm(t));
  ComplexMatrix c_matrix = ComplexMatrix::Identity(ctx.spec.dim, ctx.spec.dim) * c;
  return expect_small(operator_norm(lhs - rhs) / scale, {{"T", t}, {"c I", c_matrix}}, ctx.tol);
}

TrialOutcome norm_contraction_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix t = draw_generic(ctx, rng);
  const double excess = operator_norm(mean_transform(t, ctx.tol)) - operator_norm(t);
  return expect_small(std::max(0.0, excess) / unit_scale(t), {{"T", t}}, ctx.tol);
}

TrialOutcome mean_is_linear_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix a = draw_generic(ctx, rng);
  const ComplexMatrix b = draw_generic(ctx, rng);
  const ComplexMatrix lhs = mean_transform(a + b, ctx.tol);
  const ComplexMatrix rhs = mean_transform(a, ctx.tol) + mean_transform(b, ctx.tol);
  const double scale = std::max(1.0, operator_norm(a) + operator_norm(b));
  return expect_small(operator_norm(lhs - rhs) / scale, {{"A", a}, {"B", b}}, ctx.tol);
}

TrialOutcome scale_commutes_trial(const PropertyContext& ctx, Rng& rng) {
  const Complex c = ctx.spec.scale == Complex(1.0, 0.0) ? Complex(2.0, 0.0) : ctx.spec.scale;
  const Eigen::Index n = ctx.spec.dim;
  GeneratorSpec base = ctx.spec;
  base.scale = Complex(1.0, 0.0);
  ComplexMatrix a = ComplexMatrix::Identity(n, n);
  ComplexMatrix b = a;
  if (ctx.trial_index > 0) {
    a = generate(base, rng, ctx.tol);
    b = generate(base, rng, ctx.tol);
  }
  const double scale = std::max(1.0, operator_norm(a) * operator_norm(b));
  const double r = commuting_residual(PhiMap::scale(c), a, b, ctx.tol) / scale;
  return expect_small(r, {{"A", a}, {"B", b}}, ctx.tol);
}

TrialOutcome adjoint_commutes_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix a = draw_generic(ctx, rng);
  const ComplexMatrix b = draw_generic(ctx, rng);
  const double scale = std::max(1.0, operator_norm(a) * operator_norm(b));
  const double r = commuting_residual(PhiMap::adjoint(), a, b, ctx.tol) / scale;
  return expect_small(r, {{"A", a}, {"B", b}}, ctx.tol);
}

TrialOutcome phi_preservation_trial(const PropertyContext& ctx, Rng& rng) {
  ComplexMatrix u = haar_unitary(ctx.spec.dim, rng);
  const PhiMap map = ctx.trial_index % 2 == 0 ? PhiMap::unitary(std::move(u), ctx.tol)
                                              : PhiMap::antiunitary(std::move(u), ctx.tol);
  return preservation_trial(map, ctx, rng);
}

std::vector<PropertyInfo> build_registry() {
  return {
      {"zero_iff", "M(T) = 0 iff T = 0", true, 2, zero_iff_trial},
      {"nilpotent_iff", "M(T) = T/2 iff T^2 = 0", true, 2, nilpotent_iff_trial},
      {"projection_square", "M(T^2) = T iff T is an orthogonal projection iff M(T)^2 = T", true, 2,
       projection_square_trial},
      {"mean_projection_iff", "M(T) is an orthogonal projection iff T is, and then M(T) = T", true,
       2, mean_projection_iff_trial},
      {"selfadjoint_iff", "M(T) is self-adjoint iff the polar factor V is", true, 2,
       selfadjoint_iff_trial},
      {"identity_characterization", "M(T o P) = P for every rank-one projection P iff T = I", true,
       2, identity_characterization_trial},
      {"rank_one_formula", "M(x (x) y) = 1/2 (x + <x,y>/|y|^2 y) (x) y", true, 2,
       rank_one_formula_trial},
      {"fixed_points", "M(T) = T for normal T and fails for non-quasi-normal T", true, 2,
       fixed_points_trial},
      {"trace_preservation", "tr M(T) = tr T", true, 2, trace_preservation_trial},
      {"unitary_covariance", "M(U T U*) = U M(T) U*", true, 2, unitary_covariance_trial},
      {"conjugation_covariance", "M(conj T) = conj M(T)", true, 2, conjugation_covariance_trial},
      {"homogeneity", "M(c T) = c M(T)", true, 2, homogeneity_trial},
      {"norm_contraction", "|M(T)| <= |T|", true, 2, norm_contraction_trial},
      {"forward_theorem", "conjugation by a unitary or anti-unitary commutes with M under the Jordan product",
       true, 3, forward_theorem_trial},
      {"phi_preservation", "conjugations preserve projections, order, orthogonality, normality and commute with M",
       true, 2, phi_preservation_trial},
      {"mean_is_linear", "M(A + B) = M(A) + M(B) (false in general)", false, 2, mean_is_linear_trial},
      {"scale_commutes", "T -> cT commutes with M under the Jordan product (false for c != 0, 1)", false,
       2, scale_commutes_trial},
      {"adjoint_commutes", "T -> T* commutes with M under the Jordan product (false)", false, 2,
       adjoint_commutes_trial},
  };
}

}  // namespace

const std::vector<PropertyInfo>& property_registry() {
  static const std::vector<PropertyInfo> registry = build_registry();
  return registry;
}

const PropertyInfo& find_property(std::string_view id) {
  for (const auto& info : property_registry()) {
    if (info.id == id) {
      return info;
    }
  }
  throw InputError("unknown property: " + std::string(id));
}

CheckReport falsify(std::string_view property_id, const GeneratorSpec& spec, int trials,
                    const Tolerance& tol) {
  const PropertyInfo& info = find_property(property_id);
  if (spec.dim < info.min_dim) {
    throw InputError("property " + info.id + " requires dim >= " + std::to_string(info.min_dim));
  }
  return run_property(info.id, info.trial, spec, trials, tol);
}

CheckReport check_zero_iff(const GeneratorSpec& spec, int trials, const Tolerance& tol) {
  return falsify("zero_iff", spec, trials, tol);
}

CheckReport check_nilpotent_iff(const GeneratorSpec& spec, int trials, const Tolerance& tol) {
  return falsify("nilpotent_iff", spec, trials, tol);
}

CheckReport check_projection_square(const GeneratorSpec& spec, int trials, const Tolerance& tol) {
  return falsify("projection_square", spec, trials, tol);
}

CheckReport check_mean_projection_iff(const GeneratorSpec& spec, int trials,
                                      const Tolerance& tol) {
  return falsify("mean_projection_iff", spec, trials, tol);
}

CheckReport check_selfadjoint_iff(const GeneratorSpec& spec, int trials, const Tolerance& tol) {
  return falsify("selfadjoint_iff", spec, trials, tol);
}

CheckReport check_rank_one_formula(const GeneratorSpec& spec, int trials, const Tolerance& tol) {
  return falsify("rank_one_formula", spec, trials, tol);
}

CheckReport check_identity_characterization(const ComplexMatrix& t, int sample_count,
                                            std::uint64_t seed, const Tolerance& tol) {
  require_square(t, "check_identity_characterization");
  require_finite(t, "check_identity_characterization");
  if (sample_count < 1) {
    throw InputError("check_identity_characterization: sample_count must be >= 1");
  }
  GeneratorSpec spec;
  spec.dim = static_cast<int>(t.rows());
  spec.seed = seed;
  const TrialFn trial = [&t](const PropertyContext& ctx, Rng& rng) {
    const ComplexMatrix p = random_rank_one_projection(t.rows(), rng);
    return expect_small(identity_residual(t, p, ctx.tol), {{"T", t}, {"P", p}}, ctx.tol);
  };
  return run_property("identity_characterization", trial, spec, sample_count, tol);
}

}  // namespace meantransform
