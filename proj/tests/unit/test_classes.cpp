#include <doctest.h>

#include "rspin/abelian.hpp"
#include "rspin/classes.hpp"
#include "rspin/expression.hpp"
#include "../support.hpp"

using namespace rspin;
using namespace rspin::classes;
using rspin::testing::uniform;

namespace {

// A genus in the stable range for which r-Spin structures exist.
Int stable_genus(const Int& r) { return 10 * r + 1; }

ModuliContext context(long r, std::optional<int> eps = std::nullopt) {
  if (r % 2 != 0) eps.reset();
  else if (!eps) eps = 0;
  return ModuliContext(r, stable_genus(r), eps);
}

Rational ratio(const Int& a, const Int& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

FormalClass L(long a) { return FormalClass::lambda(a); }
FormalClass K(long a) { return FormalClass::kappa1(a); }
FormalClass M() { return FormalClass::mu(); }

FormalClass random_class(const ModuliContext& ctx, int terms) {
  const long r = ctx.r().get_si();
  FormalClass x;
  for (int i = 0; i < terms; ++i) {
    const long c = uniform(-9, 9);
    switch (uniform(0, ctx.r_even() ? 2 : 1)) {
      case 0: x += Int(c) * L(uniform(-2 * r, 2 * r)); break;
      case 1: x += Int(c) * K(uniform(-2 * r, 2 * r)); break;
      default: x += Int(c) * M(); break;
    }
  }
  return x;
}

}  // namespace

TEST_CASE("U_r and torsion order case tables") {
  CHECK(u_r(2) == 12);
  CHECK(u_r(3) == 4);
  CHECK(u_r(4) == 6);
  CHECK(u_r(12) == 2);
  CHECK(u_r(5) == 12);
  CHECK(u_r(Int("1000000000000000000000000000002")) == 4);  // 3 | r, 4 does not
  for (long r = 2; r <= 100; ++r) {
    const long expected = r % 12 == 0 ? 2 : r % 3 == 0 ? 4 : r % 4 == 0 ? 6 : 12;
    CHECK(u_r(r) == expected);
    const long t2 = r % 4 == 0 ? 8 : r % 2 == 0 ? 4 : 1;
    const long t3 = r % 3 == 0 ? 3 : 1;
    CHECK(torsion_order(r) == t2 * t3);
    CHECK(divides(torsion_order(r), 24));
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(ModuliContext(1, 9, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(ModuliContext(3, 1, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(ModuliContext(3, 10, 0), InvalidInput);
  CHECK_THROWS_AS(ModuliContext(2, 9, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(ModuliContext(2, 9, 2), InvalidInput);
  const ModuliContext low(3, 7, std::nullopt);
  CHECK_THROWS_AS(low.require_h2_range(), RangeError);
  CHECK_NOTHROW(low.require_h1_range());
  CHECK_THROWS_AS(free_coordinate(low, L(3)), RangeError);
  const ModuliContext forced(3, 4, std::nullopt, RangePolicy::override_unverified);
  CHECK(free_coordinate(forced, L(3)) == 3);
  CHECK_THROWS_AS(ModuliContext(3, 11, std::nullopt).require_nonempty(), InvalidInput);
}

TEST_CASE("2-Spin divisibilities, torsion and presentation") {
  const ModuliContext ctx(2, 9, 0);
  CHECK(free_coordinate(ctx, L(2)) == 4);
  CHECK(free_coordinate(ctx, L(1)) == -2);
  CHECK(free_coordinate(ctx, M()) == -1);
  CHECK(free_coordinate(ctx, K(2)) == 48);
  CHECK(free_coordinate(ctx, K(1)) == 12);

  const FormalClass t = torsion_class_tab(ctx, 1, 0);
  CHECK(t == Int(2) * L(1) + L(2));
  CHECK(phi_value(ctx, t) == 6);
  CHECK(abelian::element_order(24, phi_value(ctx, t)) == 4);

  const Presentation p = presentation(ctx, {L(2), M()});
  CHECK(p.relations == abelian::IntMatrix{{4, 16}});
  CHECK(expression::format_presentation(p, 2) == "⟨lambda, mu | 4(lambda + 4*mu)⟩");
  CHECK(canonical_coords(ctx, Int(4) * (L(2) + Int(4) * M())) == CanonicalCoords{0, 0});
  CHECK(rational_multiple_of_lambda(ctx, M()) == Rational(-1, 4));
  CHECK(phi_value(ctx, M()) == 1);
}

TEST_CASE("3-Spin divisibilities, torsion and presentation") {
  const ModuliContext ctx(3, 10, std::nullopt);
  CHECK(free_coordinate(ctx, L(3)) == 3);
  CHECK(free_coordinate(ctx, L(1)) == -1);
  CHECK(free_coordinate(ctx, L(2)) == -1);
  CHECK(free_coordinate(ctx, K(3)) == 36);
  CHECK(free_coordinate(ctx, K(1)) == 4);

  const FormalClass t = torsion_class_tab(ctx, 1, 0);
  CHECK(t == Int(3) * L(1) + L(3));
  CHECK(phi_value(ctx, t) == 8);
  CHECK(canonical_coords(ctx, t) == CanonicalCoords{0, 8});

  const Presentation p = presentation(ctx, {L(3), L(1)});
  CHECK(p.relations == abelian::IntMatrix{{3, 9}});
  CHECK(expression::format_presentation(p, 3) == "⟨lambda, lambda(1/3) | 3(lambda + 3*lambda(1/3))⟩");
  CHECK_THROWS_AS(free_coordinate(ctx, M()), InvalidInput);
}

TEST_CASE("4-Spin torsion classes and their detection values") {
  const ModuliContext ctx(4, 9, 0);
  CHECK(free_coordinate(ctx, L(4)) == 8);
  CHECK(free_coordinate(ctx, L(1)) == -1);
  CHECK(free_coordinate(ctx, L(2)) == -4);
  CHECK(free_coordinate(ctx, L(3)) == -1);
  CHECK(free_coordinate(ctx, M()) == -2);

  struct Case {
    FormalClass computed;
    FormalClass expected;
    long phi;
    long order;
  };
  const std::vector<Case> cases{
      {torsion_class_tab(ctx, 1, 0), Int(8) * L(1) + L(4), 18, 4},
      {torsion_class_tab(ctx, 2, 0), Int(2) * L(2) + L(4), 6, 4},
      {torsion_class_tab(ctx, 1, 2), L(2) - Int(4) * L(1), 18, 4},
      {torsion_class_ta(ctx, 1), Int(6) * L(1) + K(1), 12, 2},
      {torsion_class_ta(ctx, 2), Int(3) * L(2) + Int(2) * K(1), 6, 4},
      {torsion_class_t(ctx), Int(3) * M() + K(1), 3, 8},
      {M() - Int(2) * L(1), M() - Int(2) * L(1), 21, 8},
  };
  for (const auto& c : cases) {
    CAPTURE(expression::format_class(c.expected, 4));
    CHECK(c.computed == c.expected);
    CHECK(free_coordinate(ctx, c.computed) == 0);
    CHECK(phi_value(ctx, c.computed) == c.phi);
    CHECK(abelian::element_order(24, c.phi) == c.order);
  }
  CHECK(torsion_generator(ctx) == Int(3) * M() + K(1));

  const Presentation p = presentation(ctx, {M(), L(1)});
  CHECK(p.relations == abelian::IntMatrix{{8, -16}});
  CHECK(expression::format_presentation(p, 4) == "⟨mu, lambda(1/4) | 8(mu - 2*lambda(1/4))⟩");
}

TEST_CASE("preferred generators reproduce the worked presentations") {
  CHECK(preferred_generators(ModuliContext(2, 9, 1)) == std::vector<FormalClass>{L(2), M()});
  CHECK(preferred_generators(ModuliContext(3, 10, std::nullopt)) ==
        std::vector<FormalClass>{L(3), L(1)});
  CHECK(preferred_generators(ModuliContext(4, 9, 0)) == std::vector<FormalClass>{M(), L(1)});
  CHECK(preferred_generators(ModuliContext(5, 16, std::nullopt)) == std::vector<FormalClass>{L(1)});
}

TEST_CASE("free coordinate table") {
  for (long r = 2; r <= 30; ++r) {
    const ModuliContext ctx = context(r);
    for (long a = -30; a <= 30; ++a) {
      CHECK(free_coordinate(ctx, L(a)) == free_coordinate(ctx, L(r - a)));
      CHECK(free_coordinate(ctx, K(a)) == Int(a * a) * u_r(r));
      CHECK(free_coordinate(ctx, L(a)) * 12 == u_r(r) * lambda_quadratic(r, a));
    }
    if (r % 2 == 0) CHECK(free_coordinate(ctx, M()) * 48 == -u_r(r) * r * r);
  }
}

TEST_CASE("rational multiples agree with free coordinates") {
  for (long r = 2; r <= 60; ++r) {
    const ModuliContext ctx = context(r);
    const Int lambda_d = free_coordinate(ctx, L(r));
    CHECK(rational_multiple_of_lambda(ctx, L(r)) == 1);
    CHECK(rational_multiple_of_lambda(ctx, K(r)) == 12);
    for (long a = -60; a <= 60; ++a) {
      CHECK(rational_multiple_of_lambda(ctx, L(a)) == ratio(free_coordinate(ctx, L(a)), lambda_d));
      CHECK(rational_multiple_of_lambda(ctx, K(a)) == ratio(free_coordinate(ctx, K(a)), lambda_d));
      // kappa1(a/r) = (a^2/r^2) kappa1 and kappa1 = 12 lambda rationally.
      CHECK(rational_multiple_of_lambda(ctx, K(a)) == ratio(Int(12 * a * a), Int(r * r)));
    }
    if (r % 2 == 0)
      CHECK(rational_multiple_of_lambda(ctx, M()) == ratio(free_coordinate(ctx, M()), lambda_d));
  }
}

TEST_CASE("two mu is lambda(-1/2) plus twelve lambda(1/2)") {
  for (long r = 2; r <= 60; r += 2) {
    for (int eps : {0, 1}) {
      const ModuliContext ctx = context(r, eps);
      CHECK(equals(ctx, Int(2) * M(), L(-r / 2) + Int(12) * L(r / 2)));
    }
  }
}

TEST_CASE("kappa scaling") {
  for (long r = 2; r <= 30; ++r) {
    const ModuliContext ctx = context(r);
    for (long a = -10; a <= 10; ++a) CHECK(equals(ctx, K(a), Int(a * a) * K(1)));
  }
}

TEST_CASE("the named classes have coprime divisibilities") {
  for (long r = 2; r <= 200; ++r) {
    const ModuliContext ctx = context(r);
    Int g = 0;
    for (long a = 0; a <= r; ++a) {
      g = gcd(g, free_coordinate(ctx, L(a)));
      g = gcd(g, free_coordinate(ctx, K(a)));
    }
    if (r % 2 == 0) g = gcd(g, free_coordinate(ctx, M()));
    CHECK(g == 1);
    CHECK(free_coordinate(ctx, generator_lift(ctx)) == 1);
    CHECK(canonical_coords(ctx, generator_lift(ctx)) == CanonicalCoords{1, 0});
  }
}

TEST_CASE("coordinates are linear and tau is a multiple of 24/N") {
  for (int trial = 0; trial < 400; ++trial) {
    const long r = uniform(2, 60);
    const ModuliContext ctx = context(r, static_cast<int>(uniform(0, 1)));
    const FormalClass x = random_class(ctx, 4);
    const FormalClass y = random_class(ctx, 4);
    const Int k = uniform(-7, 7);
    CHECK(free_coordinate(ctx, x + k * y) == free_coordinate(ctx, x) + k * free_coordinate(ctx, y));
    CHECK(phi_value(ctx, x + k * y) == mod(phi_value(ctx, x) + k * phi_value(ctx, y), 24));
    const auto cx = canonical_coords(ctx, x);
    const auto cy = canonical_coords(ctx, y);
    const auto cs = canonical_coords(ctx, x + k * y);
    CHECK(cs.d == cx.d + k * cy.d);
    CHECK(cs.tau == mod(cx.tau + k * cy.tau, 24));
    CHECK(divides(24 / ctx.torsion_order(), cx.tau));
    // equals is a congruence for addition.
    CHECK(equals(ctx, x, x));
    CHECK(equals(ctx, x + y, y + x));
    const FormalClass z = x + Int(ctx.torsion_order()) * torsion_class_tab(ctx, 1, 0);
    CHECK(equals(ctx, x, z));
    CHECK(equals(ctx, x + y, z + y));
  }
}

TEST_CASE("torsion classes are torsion of order dividing N") {
  for (long r = 2; r <= 40; ++r) {
    const ModuliContext ctx = context(r);
    const Int n = ctx.torsion_order();
    auto check = [&](const FormalClass& t) {
      CHECK(free_coordinate(ctx, t) == 0);
      CHECK(divides(abelian::element_order(24, phi_value(ctx, t)), n));
    };
    for (long a = 0; a <= r; ++a) {
      for (long b = 0; b <= r; ++b)
        if (a != b) check(torsion_class_tab(ctx, a, b));
      if (a > 0) check(torsion_class_ta(ctx, a));
    }
    if (r % 2 == 0) check(torsion_class_t(ctx));
    if (n > 1) {
      CHECK(abelian::element_order(24, phi_value(ctx, torsion_generator(ctx))) == n);
    } else {
      CHECK_THROWS_AS(torsion_generator(ctx), InvalidInput);
    }
  }
  CHECK_THROWS_AS(torsion_class_t(context(3)), InvalidInput);
}

TEST_CASE("presentations of the full group") {
  for (long r = 2; r <= 60; ++r) {
    const ModuliContext ctx = context(r);
    const Int n = ctx.torsion_order();
    for (const auto& gens : {default_generators(ctx), preferred_generators(ctx)}) {
      const Presentation p = presentation(ctx, gens);
      const auto group = abelian::group_from_presentation(gens.size(), p.relations);
      CHECK(group == abelian::FgAbGroup::from_cyclic_orders(1, {n}));
      for (std::size_t i = 0; i < p.relations.rows(); ++i) {
        FormalClass rel;
        for (std::size_t j = 0; j < gens.size(); ++j) rel += p.relations(i, j) * gens[j];
        CHECK(equals(ctx, rel, FormalClass()));
      }
    }
  }
  // lambda alone generates nothing like the whole group at r = 2.
  CHECK_THROWS_AS(presentation(ModuliContext(2, 9, 0), {L(2)}), InvalidInput);
  CHECK(relations_among(ModuliContext(2, 9, 0), {L(2)}).relations.rows() == 0);
}
