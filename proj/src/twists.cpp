#include "rspin/twists.hpp"

#include <utility>

namespace rspin::twists {

using abelian::MixedElement;

namespace {

Int kappa_shift(const ModuliContext& ctx, const Int& a) {
  return exact_div(2 * a * a * ctx.chi(), ctx.r(), "2a^2 chi / r");
}

Int half_r(const ModuliContext& ctx) { return exact_div(ctx.r(), 2, "r / 2"); }

}  // namespace

Int twist_shift(const TwistInput& input, const ClassSymbol& symbol) {
  const ModuliContext& ctx = input.ctx;
  ctx.require_nonempty();
  if (ctx.r_even() != input.arf.has_value())
    throw InvalidInput("the Arf invariant of the twisted structure is given iff r is even");
  if (input.arf && *input.arf != 0 && *input.arf != 1)
    throw InvalidInput("arf must be 0 or 1");
  switch (symbol.kind) {
    case ClassSymbol::Kind::lambda:
      return 0;
    case ClassSymbol::Kind::kappa1:
      return mod(kappa_shift(ctx, symbol.a) * input.beta_coefficient, ctx.r());
    case ClassSymbol::Kind::mu:
      if (!ctx.r_even()) throw InvalidInput("mu is only defined when r is even");
      return mod(*input.arf * half_r(ctx) * input.beta_coefficient, ctx.r());
  }
  return 0;
}

Int twist_shift(const TwistInput& input, const FormalClass& x) {
  Int total = 0;
  for (const auto& [s, c] : x.terms()) total += c * twist_shift(input, s);
  return mod(total, input.ctx.r());
}

EvalOnFiber eval_on_fiber(const ModuliContext& ctx, const FormalClass& x) {
  ctx.require_nonempty();
  Int total = 0;
  for (const auto& [s, c] : x.terms()) {
    switch (s.kind) {
      case ClassSymbol::Kind::lambda:
        break;
      case ClassSymbol::Kind::kappa1:
        total += c * kappa_shift(ctx, s.a);
        break;
      case ClassSymbol::Kind::mu:
        if (!ctx.r_even()) throw InvalidInput("mu is only defined when r is even");
        total += c * *ctx.eps() * half_r(ctx);
        break;
    }
  }
  return {mod(total, ctx.r())};
}

CyclicSubgroup CyclicSubgroup::generated_by(const Int& modulus, const Int& element) {
  if (modulus < 1) throw InvalidInput("modulus must be at least 1");
  return {modulus, gcd(element, modulus)};
}

CyclicSubgroup tors_map_image_closed_form(const ModuliContext& ctx) {
  ctx.require_h2_range();
  ctx.require_nonempty();
  const Int& r = ctx.r();
  if (!divides(4, r)) return CyclicSubgroup::generated_by(r, 0);
  const Int lift = exact_div(r * (12 * *ctx.eps() + ctx.chi()), 8 * gcd(r, 3),
                             "r(12 eps + chi) / (8 gcd(r, 3))");
  return CyclicSubgroup::generated_by(r, lift);
}

CyclicSubgroup tors_map_image_direct(const ModuliContext& ctx) {
  ctx.require_h2_range();
  ctx.require_nonempty();
  if (ctx.torsion_order() == 1) return CyclicSubgroup::generated_by(ctx.r(), 0);
  const FormalClass t = classes::torsion_generator(ctx);
  return CyclicSubgroup::generated_by(ctx.r(), eval_on_fiber(ctx, t).value);
}

CyclicSubgroup tors_map_image(const ModuliContext& ctx) {
  const CyclicSubgroup closed = tors_map_image_closed_form(ctx);
  const CyclicSubgroup direct = tors_map_image_direct(ctx);
  if (!(closed == direct)) {
    throw ConsistencyError("torsion map image mismatch for " + ctx.describe() +
                           ": closed form gives order " + closed.order().get_str() +
                           ", evaluating the torsion generator gives order " +
                           direct.order().get_str());
  }
  return closed;
}

abelian::FgAbGroup h1_theta(const ModuliContext& ctx) {
  const CyclicSubgroup image = tors_map_image(ctx);
  const Int kernel_order = exact_div(ctx.torsion_order(), image.order(), "|ker| = N / |image|");
  return abelian::pontrjagin_dual(abelian::FgAbGroup::cyclic(kernel_order));
}

ThetaSubgroup h2_theta_subgroup(const ModuliContext& ctx,
                                std::optional<std::vector<FormalClass>> generators) {
  ctx.require_h2_range();
  ctx.require_nonempty();
  const Int& r = ctx.r();
  std::vector<FormalClass> gens =
      generators ? std::move(*generators) : classes::default_generators(ctx);
  const classes::Presentation full = classes::presentation(ctx, gens);

  std::vector<Int> evals;
  std::vector<MixedElement> fiber_images;
  Int image_gcd = 0;
  for (const auto& g : gens) {
    evals.push_back(eval_on_fiber(ctx, g).value);
    fiber_images.push_back({0, evals.back()});
    image_gcd = gcd(image_gcd, evals.back());
  }
  for (std::size_t i = 0; i < full.relations.rows(); ++i) {
    Int value = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) value += full.relations(i, j) * evals[j];
    if (!divides(r, value)) {
      throw ConsistencyError("fibre evaluation does not vanish on the relation " +
                             abelian::to_string(abelian::IntMatrix::from_rows(
                                 {full.relations.row_vector(i)}, gens.size())) +
                             " for " + ctx.describe() +
                             "; it does not define a map on H^2");
    }
  }

  const abelian::IntMatrix kernel = abelian::kernel_lattice(abelian::HomZN(r, fiber_images));
  std::vector<FormalClass> theta_gens;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    FormalClass y;
    for (std::size_t j = 0; j < gens.size(); ++j) y += kernel(i, j) * gens[j];
    theta_gens.push_back(std::move(y));
  }

  ThetaSubgroup out;
  out.fiber_image = CyclicSubgroup::generated_by(r, image_gcd);
  std::vector<MixedElement> coords;
  for (const auto& y : theta_gens) coords.push_back(classes::torsion_coordinates(ctx, y));
  const auto info = abelian::subgroup_info(ctx.torsion_order(), coords);
  if (!info.index || *info.index != out.fiber_image.order()) {
    throw ConsistencyError("theta subgroup index disagrees with the fibre image for " +
                           ctx.describe());
  }
  out.index = *info.index;
  out.presentation = classes::relations_among(ctx, theta_gens);
  return out;
}

bool contradicts_blanket_r4_example(const ModuliContext& ctx) {
  if (ctx.r() != 4 || ctx.eps() != 0) return false;
  return h1_theta(ctx) != abelian::FgAbGroup::cyclic(8);
}

}  // namespace rspin::twists
