#include "meantransform/phi_maps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meantransform/classifiers.hpp"
#include "meantransform/generators.hpp"
#include "meantransform/numerics.hpp"
#include "meantransform/theorem_suite.hpp"
#include "meantransform/transforms.hpp"

namespace meantransform {

namespace {

ComplexMatrix checked_unitary(ComplexMatrix u, const Tolerance& tol, const char* what) {
  require_square(u, what);
  require_finite(u, what);
  if (!is_unitary(u, tol).yes()) {
    throw InputError(std::string(what) + ": matrix is not unitary");
  }
  return u;
}

}  // namespace

PhiMap PhiMap::unitary(ComplexMatrix u, const Tolerance& tol) {
  return PhiMap{UnitaryConjugation{checked_unitary(std::move(u), tol, "unitary_conjugation")}};
}

PhiMap PhiMap::antiunitary(ComplexMatrix w, const Tolerance& tol) {
  return PhiMap{
      AntiunitaryConjugation{checked_unitary(std::move(w), tol, "antiunitary_conjugation")}};
}

PhiMap PhiMap::scale(Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw InputError("scale: factor must be finite");
  }
  return PhiMap{Scale{c}};
}

PhiMap PhiMap::adjoint() { return PhiMap{AdjointMap{}}; }

PhiMap PhiMap::compose(std::vector<PhiMap> maps) { return PhiMap{Compose{std::move(maps)}}; }

bool PhiMap::is_conjugation() const {
  return std::holds_alternative<UnitaryConjugation>(variant) ||
         std::holds_alternative<AntiunitaryConjugation>(variant);
}

namespace {

struct Applier {
  const ComplexMatrix& t;

  ComplexMatrix operator()(const UnitaryConjugation& m) const {
    require_same_shape(m.U, t, "apply_phi");
    return m.U * t * m.U.adjoint();
  }
  ComplexMatrix operator()(const AntiunitaryConjugation& m) const {
    require_same_shape(m.W, t, "apply_phi");
    return m.W * t.conjugate() * m.W.adjoint();
  }
  ComplexMatrix operator()(const Scale& m) const { return m.c * t; }
  ComplexMatrix operator()(const AdjointMap&) const { return t.adjoint(); }
  ComplexMatrix operator()(const Compose& m) const {
    ComplexMatrix out = t;
    for (const auto& inner_map : m.maps) {
      out = apply_phi(inner_map, out);
    }
    return out;
  }
};

}  // namespace

ComplexMatrix apply_phi(const PhiMap& map, const ComplexMatrix& t) {
  require_square(t, "apply_phi");
  return std::visit(Applier{t}, map.variant);
}

double commuting_residual(const PhiMap& map, const ComplexMatrix& a, const ComplexMatrix& b,
                          const Tolerance& tol) {
  require_square(a, "commuting_residual");
  require_same_shape(a, b, "commuting_residual");
  const ComplexMatrix lhs = mean_transform(jordan_product(apply_phi(map, a), apply_phi(map, b)), tol);
  const ComplexMatrix rhs = apply_phi(map, mean_transform(jordan_product(a, b), tol));
  return operator_norm(lhs - rhs);
}

TrialOutcome forward_theorem_trial(const PropertyContext& ctx, Rng& rng) {
  const ComplexMatrix u = haar_unitary(ctx.spec.dim, rng);
  const ComplexMatrix w = haar_unitary(ctx.spec.dim, rng);
  const ComplexMatrix a = generate(ctx.spec, rng, ctx.tol);
  const ComplexMatrix b = generate(ctx.spec, rng, ctx.tol);

  const double scale = std::max(1.0, operator_norm(a) * operator_norm(b));
  const double r_unitary = commuting_residual(PhiMap::unitary(u, ctx.tol), a, b, ctx.tol);
  const double r_anti = commuting_residual(PhiMap::antiunitary(w, ctx.tol), a, b, ctx.tol);
  return expect_small(std::max(r_unitary, r_anti) / scale,
                      {{"A", a}, {"B", b}, {"U", u}, {"W", w}}, ctx.tol);
}

CheckReport verify_forward_theorem(int dim, int trials, std::uint64_t seed, const Tolerance& tol) {
  if (dim < 3) {
    throw InputError("verify_forward_theorem: dim must be >= 3");
  }
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ginibre;
  spec.dim = dim;
  spec.seed = seed;
  return run_property("forward_theorem", forward_theorem_trial, spec, trials, tol);
}

double adjoint_counterexample(const ComplexVector& x, const ComplexVector& xp,
                              const Tolerance& tol) {
  if (x.size() != xp.size() || x.size() < 2) {
    throw InputError("adjoint_counterexample: vectors must share a dimension >= 2");
  }
  if (std::abs(x.norm() - 1.0) > tol.abs_tol || std::abs(xp.norm() - 1.0) > tol.abs_tol) {
    throw InputError("adjoint_counterexample: vectors must be unit");
  }
  const double overlap = std::abs(inner(x, xp));
  if (overlap <= tol.abs_tol) {
    throw InputError("adjoint_counterexample: vectors must not be orthogonal");
  }
  if (1.0 - overlap <= tol.abs_tol) {
    throw InputError("adjoint_counterexample: vectors must be linearly independent");
  }
  // A = x (x) xp, so A* = xp (x) x.
  const ComplexMatrix mean_of_adjoint = rank_one_mean(xp, x);
  const ComplexMatrix adjoint_of_mean = rank_one_mean(x, xp).adjoint();
  return operator_norm(mean_of_adjoint - adjoint_of_mean);
}

TrialOutcome preservation_trial(const PhiMap& map, const PropertyContext& ctx, Rng& rng) {
  const Eigen::Index n = ctx.spec.dim;
  const Tolerance& tol = ctx.tol;
  const auto phi = [&map](const ComplexMatrix& t) { return apply_phi(map, t); };
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  double worst = 0.0;
  Verdict structural = Verdict::yes;
  const auto track = [&worst](double r) { worst = std::max(worst, r); };
  const auto same_verdict = [&structural](const ClassVerdict& before, const ClassVerdict& after) {
    if (before.holds == Verdict::indeterminate || after.holds == Verdict::indeterminate) {
      structural = combine(structural, Verdict::indeterminate);
    } else if (before.holds != after.holds) {
      structural = Verdict::no;
    }
  };

  track(operator_norm(phi(ComplexMatrix::Zero(n, n))));
  track(operator_norm(phi(id) - id));

  // Nested and complementary projections from one orthonormal basis.
  const ComplexMatrix basis = haar_unitary(n, rng);
  const int r = rng.uniform_int(1, static_cast<int>(n) - 1);
  const int k = rng.uniform_int(1, r);
  const ComplexMatrix p = basis.leftCols(r) * basis.leftCols(r).adjoint();
  const ComplexMatrix q = basis.leftCols(k) * basis.leftCols(k).adjoint();
  const ComplexMatrix perp = basis.rightCols(n - r) * basis.rightCols(n - r).adjoint();
  const ComplexMatrix phi_p = phi(p);
  const ComplexMatrix phi_q = phi(q);
  const ComplexMatrix phi_perp = phi(perp);

  const ClassVerdict proj_p = is_orthogonal_projection(phi_p, tol);
  const ClassVerdict proj_q = is_orthogonal_projection(phi_q, tol);
  const ClassVerdict proj_perp = is_orthogonal_projection(phi_perp, tol);
  track(proj_p.normalized_residual);
  track(proj_q.normalized_residual);
  track(proj_perp.normalized_residual);

  const ComplexVector x = rng.unit_vector(n);
  const ComplexMatrix line = rank_one(x, x);
  const ComplexMatrix phi_line = phi(line);
  const ClassVerdict proj_line = is_orthogonal_projection(phi_line, tol);
  track(proj_line.normalized_residual);
  track(std::abs(trace(phi_line) - 1.0));

  if (proj_p.yes() && proj_q.yes() && proj_perp.yes() && proj_line.yes()) {
    track(projection_leq(phi_q, phi_p, tol).normalized_residual);
    track(projections_orthogonal(phi_p, phi_perp, tol).normalized_residual);
    // A generic line is neither below P nor orthogonal to it; Phi must keep that.
    same_verdict(projection_leq(line, p, tol), projection_leq(phi_line, phi_p, tol));
    same_verdict(projections_orthogonal(line, p, tol), projections_orthogonal(phi_line, phi_p, tol));
  } else {
    structural = combine(structural, Verdict::indeterminate);
  }
  track(operator_norm(phi(p + perp) - phi_p - phi_perp));

  GeneratorSpec normal_spec;
  normal_spec.kind = GeneratorKind::normal;
  normal_spec.dim = static_cast<int>(n);
  const ComplexMatrix normal = generate(normal_spec, rng, tol);
  const double normal_scale = std::max(1.0, std::pow(operator_norm(normal), 2));
  track(is_normal(phi(normal), tol).normalized_residual);
  const ComplexMatrix phi_normal = phi(normal);
  track(operator_norm(phi(normal * normal) - phi_normal * phi_normal) / normal_scale);

  const ComplexMatrix b = ginibre(n, rng);
  const double b_scale = std::max(1.0, operator_norm(b));
  track(operator_norm(mean_transform(phi(b), tol) - phi(mean_transform(b, tol))) / b_scale);

  TrialOutcome out = expect_small(worst, {{"P", p}, {"Q", q}, {"line", line}, {"B", b}}, tol);
  out.verdict = combine(out.verdict, structural);
  return out;
}

CheckReport phi_preservation_suite(const PhiMap& map, int trials, std::uint64_t seed,
                                   const Tolerance& tol) {
  Eigen::Index dim = 0;
  if (const auto* u = std::get_if<UnitaryConjugation>(&map.variant)) {
    dim = u->U.rows();
  } else if (const auto* w = std::get_if<AntiunitaryConjugation>(&map.variant)) {
    dim = w->W.rows();
  } else {
    throw InputError("phi_preservation_suite: map must be a unitary or anti-unitary conjugation");
  }
  GeneratorSpec spec;
  spec.dim = static_cast<int>(dim);
  spec.seed = seed;
  const TrialFn trial = [&map](const PropertyContext& ctx, Rng& rng) {
    return preservation_trial(map, ctx, rng);
  };
  return run_property("phi_preservation", trial, spec, trials, tol);
}

}  // namespace meantransform
