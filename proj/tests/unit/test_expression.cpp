#include <doctest.h>

#include "rspin/expression.hpp"
#include "../support.hpp"

using namespace rspin;
using namespace rspin::expression;
using rspin::testing::uniform;

namespace {

FormalClass L(long a) { return FormalClass::lambda(a); }
FormalClass K(long a) { return FormalClass::kappa1(a); }
FormalClass M() { return FormalClass::mu(); }

std::size_t error_position(std::string_view text, long r) {
  try {
    parse(text, r);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse("3*lambda(1/3) + lambda", 3) == Int(3) * L(1) + L(3));
  CHECK(parse("3 lambda(1/3)+lambda", 3) == Int(3) * L(1) + L(3));
  CHECK(parse("mu - 2*lambda(1/4)", 4) == M() - Int(2) * L(1));
  CHECK(parse("  -kappa1 + kappa1(-2/5) ", 5) == K(-2) - K(5));
  CHECK(parse("lambda(0/2)", 2) == L(0));
  CHECK(parse("lambda(7/2)", 2) == L(7));
  CHECK(parse("0", 2).is_zero());
  CHECK(parse("lambda - lambda", 2).is_zero());
  CHECK(parse("0 + mu", 2) == M());
  CHECK(parse("lambda(1 / 2)", 2) == L(1));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("lambda(1/4)", 3) == 9);
  CHECK(error_position("lambda + ", 3) == 9);
  CHECK(error_position("sigma", 3) == 0);
  CHECK(error_position("2*lambda +* mu", 2) == 10);
  CHECK(error_position("lambda(1/2", 2) == 10);
  CHECK(error_position("5", 2) == 0);
  CHECK(error_position("lambda mu", 2) == 7);
  CHECK(error_position("", 2) == 0);
  CHECK_THROWS_AS(parse("mu", 3), InvalidInput);
  try {
    parse("mu", 3);
  } catch (const ParseError&) {
    FAIL("mu with odd r is a symbol error, not a syntax error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("only defined when r is even") != std::string::npos);
  }
}

TEST_CASE("formatting") {
  CHECK(format_class(Int(3) * L(1) + L(3), 3) == "lambda + 3*lambda(1/3)");
  CHECK(format_class(M() - Int(2) * L(1), 4) == "-2*lambda(1/4) + mu");
  CHECK(format_class(FormalClass(), 4) == "0");
  CHECK(format_class(-K(4), 4) == "-kappa1");
  CHECK(format_symbol(ClassSymbol::lambda(-1), 2) == "lambda(-1/2)");

  const std::vector<FormalClass> gens{L(2), Int(2) * M()};
  const std::vector<Int> row{4, 8};
  CHECK(format_relation(gens, row, 2) == "4(lambda + 4*mu)");
  const std::vector<Int> single{0, 3};
  CHECK(format_relation(gens, single, 2) == "6*mu");
  const std::vector<FormalClass> compound{L(2) + M(), L(1)};
  const std::vector<Int> both{2, -2};
  CHECK(format_relation(compound, both, 2) == "2(lambda + mu - lambda(1/2))");
}

TEST_CASE("formatting and parsing round-trip") {
  for (int trial = 0; trial < 2000; ++trial) {
    const long r = uniform(2, 40);
    FormalClass x;
    const int terms = static_cast<int>(uniform(0, 6));
    for (int i = 0; i < terms; ++i) {
      const Int c = uniform(-20, 20);
      switch (uniform(0, r % 2 == 0 ? 2 : 1)) {
        case 0: x += c * L(uniform(-3 * r, 3 * r)); break;
        case 1: x += c * K(uniform(-3 * r, 3 * r)); break;
        default: x += c * M(); break;
      }
    }
    const std::string text = format_class(x, r);
    CAPTURE(text);
    CHECK(parse(text, r) == x);
  }
}
