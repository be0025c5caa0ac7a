#pragma once

// Twisting r-Spin structures by r-torsion line bundles, evaluation of classes
// on the B(Z/r) fibre of M -> M~, and the resulting homology of the moduli
// space of r-theta-characteristics M~.

#include <optional>
#include <vector>

#include "rspin/abelian.hpp"
#include "rspin/classes.hpp"

namespace rspin::twists {

using classes::ClassSymbol;
using classes::FormalClass;
using classes::ModuliContext;

struct TwistInput {
  ModuliContext ctx;
  /// Arf invariant of the structure being twisted; present iff r is even.
  std::optional<int> arf;
  /// Coefficient of the Bockstein class beta(D), an element of Z/r.
  Int beta_coefficient;
};

/// Coefficient of beta(D) added to `symbol` when the structure is twisted by
/// D, reduced into [0, r).
Int twist_shift(const TwistInput& input, const ClassSymbol& symbol);
Int twist_shift(const TwistInput& input, const FormalClass& x);

struct EvalOnFiber {
  Int value;  // in [0, r)
};

/// The map H^2(M) -> H^2(B(Z/r)) = Z/r.
EvalOnFiber eval_on_fiber(const ModuliContext& ctx, const FormalClass& x);

/// Subgroup of Z/r stored canonically as the divisor gcd(lift, r) of r.
struct CyclicSubgroup {
  Int modulus;
  Int divisor;

  static CyclicSubgroup generated_by(const Int& modulus, const Int& element);
  Int order() const { return modulus / divisor; }
  /// Canonical generator in [0, r); zero for the trivial subgroup.
  Int generator() const { return mod(divisor, modulus); }
  friend bool operator==(const CyclicSubgroup&, const CyclicSubgroup&) = default;
};

/// Image of the torsion of H^2(M) in Z/r by the closed form
/// r(12 eps + chi) / (8 gcd(r, 3)) (zero unless 4 | r).
CyclicSubgroup tors_map_image_closed_form(const ModuliContext& ctx);

/// Same image computed by evaluating the torsion generator on the fibre.
CyclicSubgroup tors_map_image_direct(const ModuliContext& ctx);

/// Closed form, after cross-checking it against the direct computation;
/// throws ConsistencyError when they differ.
CyclicSubgroup tors_map_image(const ModuliContext& ctx);

/// H_1(M~), cyclic of order N / |image|.
abelian::FgAbGroup h1_theta(const ModuliContext& ctx);

struct ThetaSubgroup {
  /// Generators of H^2(M~) inside H^2(M), written in the supplied classes.
  classes::Presentation presentation;
  Int index;
  /// Image of eval_on_fiber on the whole of H^2(M).
  CyclicSubgroup fiber_image;
};

/// H^2(M~) as the kernel of eval_on_fiber. The supplied generators must
/// generate H^2(M); they default to classes::default_generators. Throws
/// ConsistencyError if the fibre evaluation does not vanish on the relations
/// among the generators (so does not define a map on H^2).
ThetaSubgroup h2_theta_subgroup(const ModuliContext& ctx,
                                std::optional<std::vector<FormalClass>> generators = {});

/// g-values where the r = 4, eps = 0 first homology is not Z/8.
bool contradicts_blanket_r4_example(const ModuliContext& ctx);

}  // namespace rspin::twists
