#pragma once

// The class lattice of the second integral cohomology of the stable moduli
// space of r-Spin surfaces: named tautological classes, their coordinates in
// Z + (torsion), the Z/24 detection map, and presentations.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rspin/abelian.hpp"
#include "rspin/integer.hpp"

namespace rspin::classes {

/// Whether stable-range requirements are enforced or merely reported.
enum class RangePolicy { enforce, override_unverified };

/// Smallest genus for which first homology is known in closed form.
inline constexpr long kH1StableGenus = 6;
/// Smallest genus for which second cohomology is known in closed form.
inline constexpr long kH2StableGenus = 9;

/// (r, g, eps) together with the derived numbers every computation uses.
/// eps (the Arf invariant) is present exactly when r is even.
class ModuliContext {
 public:
  /// Throws InvalidInput for r < 2, g < 2, eps present for odd r, eps missing
  /// for even r, or eps outside {0, 1}.
  ModuliContext(Int r, Int g, std::optional<int> eps,
                RangePolicy policy = RangePolicy::enforce);

  const Int& r() const noexcept { return r_; }
  const Int& g() const noexcept { return g_; }
  std::optional<int> eps() const noexcept { return eps_; }
  RangePolicy policy() const noexcept { return policy_; }
  bool r_even() const { return divides(2, r_); }

  /// Euler characteristic 2 - 2g of the surface.
  Int chi() const { return 2 - 2 * g_; }
  Int u_r() const;
  /// Order N of the torsion subgroup of H^2 (a divisor of 24).
  Int torsion_order() const;

  /// r-Spin structures exist iff r divides 2 - 2g.
  bool nonempty() const { return divides(r_, chi()); }
  bool h1_in_range() const { return g_ >= kH1StableGenus; }
  bool h2_in_range() const { return g_ >= kH2StableGenus; }

  /// Throw RangeError when out of range and the policy enforces it.
  void require_h1_range() const;
  void require_h2_range() const;
  /// Throw InvalidInput when there are no r-Spin structures.
  void require_nonempty() const;

  std::string describe() const;

 private:
  Int r_;
  Int g_;
  std::optional<int> eps_;
  RangePolicy policy_;
};

Int u_r(const Int& r);
/// N = t2 * t3 with t2 in {1, 4, 8} and t3 in {1, 3}.
Int torsion_order(const Int& r);

struct ClassSymbol {
  enum class Kind { lambda, kappa1, mu };
  Kind kind;
  Int a;  // tensor power numerator; unused (zero) for mu

  static ClassSymbol lambda(const Int& a) { return {Kind::lambda, a}; }
  static ClassSymbol kappa1(const Int& a) { return {Kind::kappa1, a}; }
  static ClassSymbol mu() { return {Kind::mu, 0}; }

  friend bool operator==(const ClassSymbol& x, const ClassSymbol& y) {
    return x.kind == y.kind && x.a == y.a;
  }
  friend bool operator<(const ClassSymbol& x, const ClassSymbol& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.a < y.a;
  }
};

/// Integer combination of class symbols; zero coefficients are never stored.
class FormalClass {
 public:
  using Terms = std::map<ClassSymbol, Int>;

  FormalClass() = default;
  FormalClass(ClassSymbol s) { add(s, 1); }  // NOLINT(google-explicit-constructor)

  static FormalClass lambda(const Int& a) { return ClassSymbol::lambda(a); }
  static FormalClass kappa1(const Int& a) { return ClassSymbol::kappa1(a); }
  static FormalClass mu() { return ClassSymbol::mu(); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Int coefficient(const ClassSymbol& s) const;
  bool uses_mu() const;

  void add(const ClassSymbol& s, const Int& coefficient);

  FormalClass& operator+=(const FormalClass& o);
  FormalClass& operator-=(const FormalClass& o);
  friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
  friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
  friend FormalClass operator*(const Int& k, const FormalClass& x);
  friend FormalClass operator-(const FormalClass& x) { return Int(-1) * x; }

  friend bool operator==(const FormalClass&, const FormalClass&) = default;

 private:
  Terms terms_;
};

/// Coordinates deciding equality in H^2: d in Z is the multiple of the fixed
/// positive generator of the torsion-free quotient, tau in Z/24 is the
/// detection value of the torsion part and always a multiple of 24/N.
struct CanonicalCoords {
  Int d;
  Int tau;

  friend bool operator==(const CanonicalCoords& x, const CanonicalCoords& y) {
    return x.d == y.d && x.tau == y.tau;
  }
};

/// Generators together with a Hermite-normal matrix whose rows are integer
/// combinations of the generators that vanish in H^2.
struct Presentation {
  std::vector<FormalClass> generators;
  abelian::IntMatrix relations;
};

/// r^2 - 6ar + 6a^2, the quadratic controlling the lambda classes.
Int lambda_quadratic(const Int& r, const Int& a);

/// Multiple of the positive generator of the torsion-free quotient.
Int free_coordinate(const ModuliContext& ctx, const FormalClass& x);
/// Value of the detection homomorphism H^2 -> Z/24, in [0, 24).
Int phi_value(const ModuliContext& ctx, const FormalClass& x);

/// The fixed lift of the torsion-free generator used for coordinates.
FormalClass generator_lift(const ModuliContext& ctx);
/// [lambda^{0/r}, ..., lambda^{r/r}, kappa1^{1/r}, mu (r even)].
std::vector<FormalClass> default_generators(const ModuliContext& ctx);

CanonicalCoords canonical_coords(const ModuliContext& ctx, const FormalClass& x);
bool equals(const ModuliContext& ctx, const FormalClass& x, const FormalClass& y);

/// Rational q with x = q * lambda in rational cohomology.
Rational rational_multiple_of_lambda(const ModuliContext& ctx, const FormalClass& x);

// Torsion classes built from lambda^{a/r}, kappa1^{1/r} and mu that vanish in
// the torsion-free quotient. lambda^{0/r} is written as lambda.
FormalClass torsion_class_tab(const ModuliContext& ctx, const Int& a, const Int& b);
FormalClass torsion_class_ta(const ModuliContext& ctx, const Int& a);
FormalClass torsion_class_t(const ModuliContext& ctx);

/// A class generating the (cyclic) torsion subgroup. Throws InvalidInput
/// when the torsion subgroup is trivial.
FormalClass torsion_generator(const ModuliContext& ctx);

/// Image of x in Z + Z/N: (d, tau / (24/N)).
abelian::MixedElement torsion_coordinates(const ModuliContext& ctx,
                                          const FormalClass& x);

/// All relations among `generators`, with no requirement that they generate.
Presentation relations_among(const ModuliContext& ctx,
                             const std::vector<FormalClass>& generators);

/// Presentation of H^2 on generators that must generate it; throws
/// InvalidInput naming the achieved index otherwise.
Presentation presentation(const ModuliContext& ctx,
                          const std::vector<FormalClass>& generators);

/// A shortest generating list drawn from lambda, mu, lambda^{a/r}, kappa1^{a/r}
/// in that order of preference.
std::vector<FormalClass> preferred_generators(const ModuliContext& ctx);

}  // namespace rspin::classes
