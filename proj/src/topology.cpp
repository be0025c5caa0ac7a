#include "rspin/topology.hpp"

#include "rspin/expression.hpp"

namespace rspin::topology {

RangeGuard h1_stable(const Int& g) {
  return {RangeGuard::Kind::h1_stable, g >= classes::kH1StableGenus};
}

RangeGuard h2_stable(const Int& g) {
  return {RangeGuard::Kind::h2_stable, g >= classes::kH2StableGenus};
}

RangeGuard general_stable(const Int& degree, const Int& g) {
  return {RangeGuard::Kind::general_stable, 5 * degree <= 2 * g - 7};
}

Int spin_structure_count(const Int& r, const Int& g) {
  if (r < 1) throw InvalidInput("r must be at least 1");
  if (g < 2) throw InvalidInput("g must be at least 2");
  if (!divides(r, 2 - 2 * g)) return 0;
  if (!g.fits_ulong_p()) throw InvalidInput("genus too large");
  return pow(r, 2 * g.get_ui());
}

Int orbit_count(const Int& r) {
  if (r < 1) throw InvalidInput("r must be at least 1");
  return divides(2, r) ? 2 : 1;
}

Pi0Data pi0_mtspin(const Int& r) {
  if (r < 1) throw InvalidInput("r must be at least 1");
  if (divides(2, r)) return {FgAbGroup(1, {2}), r};
  return {FgAbGroup::free_of_rank(1), 2 * r};
}

FgAbGroup pi1_mtspin(const Int& r) {
  if (r < 1) throw InvalidInput("r must be at least 1");
  return FgAbGroup::cyclic(classes::torsion_order(r));
}

FgAbGroup xr_cohomology(const Int& r, const Int& degree) {
  if (r < 2) throw InvalidInput("X_r is defined for r >= 2");
  if (degree < 1 || divides(2, degree)) return FgAbGroup::trivial();
  const Int i = (degree - 1) / 2;
  if (!i.fits_ulong_p()) throw InvalidInput("degree too large");
  return FgAbGroup::cyclic(pow(r, i.get_ui() + 1));
}

Int pi2_multiplier(const Int& r) {
  return exact_div(r * r * classes::u_r(r), 12, "r^2 U_r / 12");
}

FgAbGroup h1_moduli(const ModuliContext& ctx) {
  ctx.require_h1_range();
  ctx.require_nonempty();
  return FgAbGroup::from_cyclic_orders(0, {ctx.torsion_order()});
}

FgAbGroup h2_moduli(const ModuliContext& ctx) {
  ctx.require_h2_range();
  ctx.require_nonempty();
  return FgAbGroup::from_cyclic_orders(1, {ctx.torsion_order()});
}

PicardReport picard_report(const ModuliContext& ctx) {
  PicardReport rep;
  rep.h2 = h2_moduli(ctx);
  rep.presentation = classes::presentation(ctx, classes::preferred_generators(ctx));
  rep.theta_h1 = twists::h1_theta(ctx);
  rep.theta_h2 = twists::h2_theta_subgroup(ctx, rep.presentation.generators);
  rep.verified = ctx.h2_in_range();
  rep.statement = "Pic ≅ " + rep.h2.to_string() + ", presentation " +
                  expression::format_presentation(rep.presentation, ctx.r());
  return rep;
}

}  // namespace rspin::topology
