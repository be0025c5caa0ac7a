#pragma once

// Closed-form facts about r-Spin structures, the Madsen-Tillmann spectrum
// MTSpin^r(2), and the low-dimensional homology of the moduli spaces.

#include <optional>
#include <string>

#include "rspin/abelian.hpp"
#include "rspin/classes.hpp"
#include "rspin/twists.hpp"

namespace rspin::topology {

using abelian::FgAbGroup;
using classes::ModuliContext;

struct RangeGuard {
  enum class Kind { h1_stable, h2_stable, general_stable };
  Kind kind;
  bool satisfied;
};

RangeGuard h1_stable(const Int& g);
RangeGuard h2_stable(const Int& g);
/// Rational cohomology agrees with Q[kappa_1, kappa_2, ...] in degree deg
/// when 5 * deg <= 2g - 7.
RangeGuard general_stable(const Int& degree, const Int& g);

/// Number of isomorphism classes of r-Spin structures on a genus g surface.
Int spin_structure_count(const Int& r, const Int& g);
/// Mapping class group orbits of r-Spin structures (the Arf invariant splits
/// them when r is even).
Int orbit_count(const Int& r);

struct Pi0Data {
  FgAbGroup group;
  /// Index of the image of the Euler characteristic map in Z.
  Int euler_image_index;
};

Pi0Data pi0_mtspin(const Int& r);
FgAbGroup pi1_mtspin(const Int& r);
/// Cohomology of the cofibre X_r of MTSpin^r(2) -> MTSO(2).
FgAbGroup xr_cohomology(const Int& r, const Int& degree);
/// The map pi_2 MTSpin^r(2) = Z -> pi_2 MTSO(2) = Z is multiplication by
/// r^2 U_r / 12.
Int pi2_multiplier(const Int& r);

FgAbGroup h1_moduli(const ModuliContext& ctx);
FgAbGroup h2_moduli(const ModuliContext& ctx);

struct PicardReport {
  FgAbGroup h2;
  classes::Presentation presentation;
  FgAbGroup theta_h1;
  twists::ThetaSubgroup theta_h2;
  bool verified;
  std::string statement;
};

/// Pic_alg = Pic_hol -> NS -> H^2 are isomorphisms in the stable range, for
/// both M and the space of theta-characteristics M~.
PicardReport picard_report(const ModuliContext& ctx);

}  // namespace rspin::topology
