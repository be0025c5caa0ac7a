#include "rspin/classes.hpp"

#include <sstream>
#include <utility>

namespace rspin::classes {

using abelian::MixedElement;

// ---------------------------------------------------------------------------
// Context

ModuliContext::ModuliContext(Int r, Int g, std::optional<int> eps, RangePolicy policy)
    : r_(std::move(r)), g_(std::move(g)), eps_(eps), policy_(policy) {
  if (r_ < 2) throw InvalidInput("r must be at least 2 (got " + r_.get_str() + ")");
  if (g_ < 2) throw InvalidInput("g must be at least 2 (got " + g_.get_str() + ")");
  if (r_even() && !eps_)
    throw InvalidInput("the Arf invariant eps is required when r is even");
  if (!r_even() && eps_)
    throw InvalidInput("the Arf invariant eps is only defined when r is even (r = " +
                       r_.get_str() + ")");
  if (eps_ && *eps_ != 0 && *eps_ != 1)
    throw InvalidInput("eps must be 0 or 1 (got " + std::to_string(*eps_) + ")");
}

Int ModuliContext::u_r() const { return classes::u_r(r_); }

Int ModuliContext::torsion_order() const { return classes::torsion_order(r_); }

void ModuliContext::require_h1_range() const {
  if (h1_in_range() || policy_ == RangePolicy::override_unverified) return;
  throw RangeError("g = " + g_.get_str() + " is below the stable range g >= " +
                   std::to_string(kH1StableGenus) + " for first homology");
}

void ModuliContext::require_h2_range() const {
  if (h2_in_range() || policy_ == RangePolicy::override_unverified) return;
  throw RangeError("g = " + g_.get_str() + " is below the stable range g >= " +
                   std::to_string(kH2StableGenus) + " for second cohomology");
}

void ModuliContext::require_nonempty() const {
  if (nonempty()) return;
  throw InvalidInput("no r-Spin structures: r = " + r_.get_str() +
                     " does not divide chi = " + chi().get_str());
}

std::string ModuliContext::describe() const {
  std::ostringstream os;
  os << "r=" << r_.get_str() << ", g=" << g_.get_str();
  if (eps_) os << ", eps=" << *eps_;
  return os.str();
}

Int u_r(const Int& r) {
  if (r < 2) throw InvalidInput("U_r needs r >= 2");
  const bool by3 = divides(3, r);
  const bool by4 = divides(4, r);
  if (by3 && by4) return 2;
  if (by3) return 4;
  if (by4) return 6;
  return 12;
}

Int torsion_order(const Int& r) {
  Int two_part = 1;
  if (divides(4, r)) {
    two_part = 8;
  } else if (divides(2, r)) {
    two_part = 4;
  }
  return two_part * (divides(3, r) ? 3 : 1);
}

// ---------------------------------------------------------------------------
// Formal classes

Int FormalClass::coefficient(const ClassSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Int(0) : it->second;
}

bool FormalClass::uses_mu() const { return terms_.contains(ClassSymbol::mu()); }

void FormalClass::add(const ClassSymbol& s, const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalClass& FormalClass::operator+=(const FormalClass& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FormalClass& FormalClass::operator-=(const FormalClass& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FormalClass operator*(const Int& k, const FormalClass& x) {
  FormalClass out;
  if (k == 0) return out;
  for (const auto& [s, c] : x.terms_) out.terms_.emplace(s, k * c);
  return out;
}

// ---------------------------------------------------------------------------
// Coordinates

Int lambda_quadratic(const Int& r, const Int& a) { return r * r - 6 * a * r + 6 * a * a; }

namespace {

void require_mu_defined(const Int& r) {
  if (!divides(2, r))
    throw InvalidInput("mu is only defined when r is even (r = " + r.get_str() + ")");
}

Int symbol_free_coordinate(const Int& r, const ClassSymbol& s) {
  const Int u = u_r(r);
  switch (s.kind) {
    case ClassSymbol::Kind::lambda:
      return exact_div(u * lambda_quadratic(r, s.a), 12, "divisibility of lambda^{a/r}");
    case ClassSymbol::Kind::kappa1:
      return s.a * s.a * u;
    case ClassSymbol::Kind::mu:
      require_mu_defined(r);
      return exact_div(-u * r * r, 48, "divisibility of mu");
  }
  return 0;
}

Int symbol_phi(const Int& r, const ClassSymbol& s) {
  switch (s.kind) {
    case ClassSymbol::Kind::lambda:
      return 2;
    case ClassSymbol::Kind::kappa1:
      return 0;
    case ClassSymbol::Kind::mu:
      require_mu_defined(r);
      return 1;
  }
  return 0;
}

Int raw_free_coordinate(const Int& r, const FormalClass& x) {
  Int d = 0;
  for (const auto& [s, c] : x.terms()) d += c * symbol_free_coordinate(r, s);
  return d;
}

Int raw_phi(const Int& r, const FormalClass& x) {
  Int v = 0;
  for (const auto& [s, c] : x.terms()) v += c * symbol_phi(r, s);
  return mod(v, 24);
}

FormalClass lambda_or_hodge(const Int& r, const Int& a) {
  return FormalClass::lambda(a == 0 ? r : a);
}

}  // namespace

Int free_coordinate(const ModuliContext& ctx, const FormalClass& x) {
  ctx.require_h2_range();
  return raw_free_coordinate(ctx.r(), x);
}

Int phi_value(const ModuliContext& ctx, const FormalClass& x) {
  ctx.require_h2_range();
  return raw_phi(ctx.r(), x);
}

std::vector<FormalClass> default_generators(const ModuliContext& ctx) {
  std::vector<FormalClass> gens;
  for (Int a = 0; a <= ctx.r(); ++a) gens.push_back(FormalClass::lambda(a));
  gens.push_back(FormalClass::kappa1(1));
  if (ctx.r_even()) gens.push_back(FormalClass::mu());
  return gens;
}

FormalClass generator_lift(const ModuliContext& ctx) {
  const auto gens = default_generators(ctx);
  Int acc = 0;
  std::vector<Int> coeffs;
  for (const auto& g : gens) {
    ExtendedGcd e = extended_gcd(acc, raw_free_coordinate(ctx.r(), g));
    for (auto& c : coeffs) c *= e.s;
    coeffs.push_back(e.t);
    acc = e.g;
  }
  if (acc != 1)
    throw ConsistencyError("named classes do not generate the torsion-free quotient for r = " +
                           ctx.r().get_str() + " (gcd " + acc.get_str() + ")");
  FormalClass lift;
  for (std::size_t i = 0; i < gens.size(); ++i) lift += coeffs[i] * gens[i];
  return lift;
}

CanonicalCoords canonical_coords(const ModuliContext& ctx, const FormalClass& x) {
  ctx.require_h2_range();
  ctx.require_nonempty();
  const Int& r = ctx.r();
  const FormalClass lift = generator_lift(ctx);
  CanonicalCoords c;
  c.d = raw_free_coordinate(r, x);
  c.tau = mod(raw_phi(r, x) - c.d * raw_phi(r, lift), 24);
  const Int step = 24 / ctx.torsion_order();
  if (!divides(step, c.tau))
    throw ConsistencyError("torsion coordinate " + c.tau.get_str() +
                           " is not a multiple of " + step.get_str() + " for " +
                           ctx.describe());
  return c;
}

bool equals(const ModuliContext& ctx, const FormalClass& x, const FormalClass& y) {
  return canonical_coords(ctx, x) == canonical_coords(ctx, y);
}

Rational rational_multiple_of_lambda(const ModuliContext& ctx, const FormalClass& x) {
  const Int& r = ctx.r();
  const Int r2 = r * r;
  auto lambda_ratio = [&](const Int& a) { return Rational(lambda_quadratic(r, a), r2); };
  Rational q = 0;
  for (const auto& [s, c] : x.terms()) {
    Rational term;
    switch (s.kind) {
      case ClassSymbol::Kind::lambda:
        term = lambda_ratio(s.a);
        break;
      case ClassSymbol::Kind::kappa1:
        term = Rational(12 * s.a * s.a, r2);
        break;
      case ClassSymbol::Kind::mu: {
        require_mu_defined(r);
        const Int half = r / 2;
        // 2 mu = lambda^{-1/2} + 12 lambda^{1/2}
        term = (lambda_ratio(-half) + 12 * lambda_ratio(half)) / 2;
        break;
      }
    }
    term.canonicalize();
    q += Rational(c) * term;
  }
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Torsion classes

namespace {

FormalClass check_torsion(const Int& r, FormalClass x, const char* name) {
  if (raw_free_coordinate(r, x) != 0)
    throw ConsistencyError(std::string(name) + " is not torsion for r = " + r.get_str());
  return x;
}

}  // namespace

FormalClass torsion_class_tab(const ModuliContext& ctx, const Int& a, const Int& b) {
  const Int& r = ctx.r();
  const Int qa = lambda_quadratic(r, a);
  const Int qb = lambda_quadratic(r, b);
  if (qa == 0 && qb == 0)
    throw InvalidInput("degenerate input: both lambda quadratics vanish");
  const Int u = gcd(qa, qb);
  FormalClass t = (qb / u) * lambda_or_hodge(r, a) - (qa / u) * lambda_or_hodge(r, b);
  return check_torsion(r, std::move(t), "t^{a/r,b/r}");
}

FormalClass torsion_class_ta(const ModuliContext& ctx, const Int& a) {
  const Int& r = ctx.r();
  const Int q = lambda_quadratic(r, a);
  const Int g = gcd(12, q);
  FormalClass t = (12 / g) * lambda_or_hodge(r, a) - (q / g) * FormalClass::kappa1(1);
  return check_torsion(r, std::move(t), "t^{a/r}");
}

FormalClass torsion_class_t(const ModuliContext& ctx) {
  const Int& r = ctx.r();
  require_mu_defined(r);
  const Int r2 = r * r;
  const Int g = gcd(r2, 48);
  FormalClass t = (48 / g) * FormalClass::mu() + (r2 / g) * FormalClass::kappa1(1);
  return check_torsion(r, std::move(t), "t");
}

FormalClass torsion_generator(const ModuliContext& ctx) {
  ctx.require_h2_range();
  const Int& r = ctx.r();
  const Int n = ctx.torsion_order();
  if (n == 1)
    throw InvalidInput("the torsion subgroup is trivial for r = " + r.get_str());
  FormalClass t;
  if (!ctx.r_even()) {
    t = torsion_class_ta(ctx, 1);
  } else if (!divides(4, r)) {
    t = torsion_class_ta(ctx, 0);
  } else {
    t = torsion_class_t(ctx);
  }
  if (abelian::element_order(24, raw_phi(r, t)) != n)
    throw ConsistencyError("torsion generator does not have order " + n.get_str());
  return t;
}

// ---------------------------------------------------------------------------
// Presentations

MixedElement torsion_coordinates(const ModuliContext& ctx, const FormalClass& x) {
  const CanonicalCoords c = canonical_coords(ctx, x);
  return {c.d, c.tau / (24 / ctx.torsion_order())};
}

namespace {

std::vector<MixedElement> images_of(const ModuliContext& ctx,
                                    const std::vector<FormalClass>& gens) {
  std::vector<MixedElement> images;
  images.reserve(gens.size());
  for (const auto& g : gens) images.push_back(torsion_coordinates(ctx, g));
  return images;
}

bool generates(const ModuliContext& ctx, const std::vector<MixedElement>& images) {
  auto info = abelian::subgroup_info(ctx.torsion_order(), images);
  return info.index && *info.index == 1;
}

}  // namespace

Presentation relations_among(const ModuliContext& ctx,
                             const std::vector<FormalClass>& generators) {
  abelian::HomZN map(ctx.torsion_order(), images_of(ctx, generators));
  return {generators, abelian::kernel_lattice(map)};
}

Presentation presentation(const ModuliContext& ctx,
                          const std::vector<FormalClass>& generators) {
  auto images = images_of(ctx, generators);
  auto info = abelian::subgroup_info(ctx.torsion_order(), images);
  if (!info.index || *info.index != 1) {
    throw InvalidInput("the given classes do not generate H^2 (they span a subgroup of index " +
                       (info.index ? info.index->get_str() : std::string("infinity")) + ")");
  }
  abelian::HomZN map(ctx.torsion_order(), std::move(images));
  return {generators, abelian::kernel_lattice(map)};
}

std::vector<FormalClass> preferred_generators(const ModuliContext& ctx) {
  const Int& r = ctx.r();
  std::vector<FormalClass> candidates{FormalClass::lambda(r)};
  if (ctx.r_even()) candidates.push_back(FormalClass::mu());
  for (Int a = 1; a < r; ++a) candidates.push_back(FormalClass::lambda(a));
  for (Int a = 1; a <= r; ++a) candidates.push_back(FormalClass::kappa1(a));

  const auto images = images_of(ctx, candidates);
  if (ctx.torsion_order() == 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (abs(images[i].free) == 1) return {candidates[i]};
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (gcd(images[i].free, images[j].free) != 1) continue;
      if (generates(ctx, {images[i], images[j]})) return {candidates[i], candidates[j]};
    }
  return default_generators(ctx);
}

}  // namespace rspin::classes
