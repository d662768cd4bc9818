#include <random>

#include "doctest.h"
#include "segrekit/errors.hpp"
#include "segrekit/poly.hpp"
#include "test_support.hpp"

using namespace segrekit;
using segrekit::testing::random_gaussian;
using segrekit::testing::random_point;
using segrekit::testing::random_poly;

namespace {

TablePtr c2() { return VarTable::complex({"z1", "z2"}); }

// Horner-style evaluator: peel off the first variable recursively.
GaussianRational horner(const Poly& p, const std::vector<GaussianRational>& x, std::size_t var = 0) {
  if (var == x.size()) return p.constant_term();
  std::vector<bool> block(x.size(), false);
  block[var] = true;
  auto groups = coefficients_in(p, block);
  if (groups.empty()) return 0;
  unsigned top = groups.rbegin()->first[var];
  GaussianRational acc = 0;
  for (unsigned e = top + 1; e-- > 0;) {
    acc *= x[var];
    Monomial key(x.size());
    key[var] = e;
    auto it = groups.find(key);
    if (it != groups.end()) acc += horner(it->second, x, var + 1);
  }
  return acc;
}

}  // namespace

TEST_CASE("gaussian rationals are canonical and exact") {
  GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(a.re() == mpq_class(1, 2));
  CHECK(a.im() == mpq_class(-1, 2));
  CHECK((a * a.inverse()).is_one());
  CHECK(a.to_string() == "1/2-1/2*i");
  CHECK(GaussianRational::i().pow(2) == GaussianRational(-1));
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DomainError);
  auto r = GaussianRational(mpq_class(-5), mpq_class(12)).sqrt();
  REQUIRE(r);
  CHECK((*r) * (*r) == GaussianRational(mpq_class(-5), mpq_class(12)));
  CHECK_FALSE(GaussianRational(2).sqrt());
}

TEST_CASE("parse_poly examples") {
  auto t = c2();
  Poly sphere = parse_poly("z1*~z1 + z2*~z2 - 1", t);
  CHECK(sphere.size() == 3);
  CHECK(is_real(sphere));
  CHECK(parse_poly("0", t).is_zero());
  CHECK(parse_poly("0", t).terms().empty());

  Poly sq = parse_poly("(z1 + i*z2)^2", t);
  Poly z1 = Poly::variable(t, "z1");
  Poly z2 = Poly::variable(t, "z2");
  Poly expected = z1 * z1 + GaussianRational(mpq_class(0), mpq_class(2)) * (z1 * z2) - z2 * z2;
  CHECK(sq == expected);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    auto x = random_point(rng, t->size());
    GaussianRational s = x[0] + GaussianRational::i() * x[1];
    CHECK(eval(sq, x) == s * s);
  }
}

TEST_CASE("parse_poly errors") {
  auto t = c2();
  CHECK_THROWS_AS(parse_poly("z1 +", t), ParseError);
  CHECK_THROWS_AS(parse_poly("z3", t), ParseError);
  CHECK_THROWS_AS(parse_poly("1.5*z1", t), ParseError);
  CHECK_THROWS_AS(parse_poly("z1/z2", t), ParseError);
  auto lone = VarTable::make({{"x", VarKind::Holomorphic, std::nullopt}});
  CHECK_THROWS_AS(parse_poly("~x", lone), ParseError);
  try {
    parse_poly("z1 + * z2", t);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() > 0);
  }
}

TEST_CASE("conjugate_poly examples") {
  auto t = c2();
  CHECK(conjugate_poly(parse_poly("z1*~z2", t)) == parse_poly("~z1*z2", t));
  CHECK(conjugate_poly(parse_poly("i*z1", t)) == parse_poly("-i*~z1", t));
  Poly sphere = parse_poly("z1*~z1 + z2*~z2 - 1", t);
  CHECK(conjugate_poly(sphere) == sphere);
  CHECK_FALSE(is_real(parse_poly("z1", t)));
  auto lone = VarTable::make({{"x", VarKind::Holomorphic, std::nullopt}});
  CHECK_THROWS_AS(conjugate_poly(Poly::variable(lone, "x")), DomainError);
  CHECK(conjugate_poly(Poly::constant(lone, GaussianRational::i())) == Poly::constant(lone, -GaussianRational::i()));
}

TEST_CASE("substitute and eval examples") {
  auto t = c2();
  Poly p = parse_poly("z1*~z1", t);
  CHECK(substitute(p, {{"~z1", Poly::constant(t, 2)}}) == parse_poly("2*z1", t));
  CHECK(substitute(parse_poly("z1^2 + z2", t), {{"z1", Poly::variable(t, "z2")}}) == parse_poly("z2^2 + z2", t));
  Poly sphere = parse_poly("z1*~z1 + z2*~z2 - 1", t);
  CHECK(substitute_values(sphere, {{"~z1", 1}, {"~z2", 0}}) == parse_poly("z1 - 1", t));
  CHECK(eval(sphere, {{"z1", 1}, {"z2", 0}, {"~z1", 1}, {"~z2", 0}}).is_zero());
  CHECK(eval(sphere, {{"z1", 0}, {"z2", 0}, {"~z1", 0}, {"~z2", 0}}) == GaussianRational(-1));
  CHECK_THROWS_AS(eval(sphere, {{"z1", 0}}), InputError);
}

TEST_CASE("printing uses the documented syntax") {
  auto t = c2();
  CHECK(parse_poly("z1^2*~z2 - 3/2*z2 + 1", t).to_string() == "z1^2*~z2 - 3/2*z2 + 1");
  CHECK(parse_poly("-i*z1 + (1+2*i)*z2", t).to_string() == "-i*z1 + (1+2*i)*z2");
  CHECK(Poly(t).to_string() == "0");
}

TEST_CASE("ring axioms on random polynomials") {
  auto t = c2();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng, t);
    Poly b = random_poly(rng, t);
    Poly c = random_poly(rng, t);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("conjugation is an involution") {
  auto t = c2();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(rng, t);
    CHECK(conjugate_poly(conjugate_poly(p)) == p);
    CHECK(is_real(p + conjugate_poly(p)));
  }
}

TEST_CASE("eval is a ring homomorphism and matches a Horner evaluator") {
  auto t = c2();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(rng, t);
    Poly q = random_poly(rng, t);
    auto x = random_point(rng, t->size());
    CHECK(eval(p * q, x) == eval(p, x) * eval(q, x));
    CHECK(eval(p + q, x) == eval(p, x) + eval(q, x));
    CHECK(eval(p, x) == horner(p, x));
  }
}

TEST_CASE("print then parse is the identity on 1000 random polynomials") {
  auto t = c2();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    Poly p = random_poly(rng, t, 1 + trial % 7, 4);
    Poly back = parse_poly(p.to_string(), t);
    REQUIRE(back == p);
  }
}

TEST_CASE("divide_exact and coefficients_in") {
  auto t = c2();
  Poly a = parse_poly("z1 + ~z2", t);
  Poly b = parse_poly("z2 - 3*i", t);
  auto q = divide_exact(a * b, a);
  REQUIRE(q);
  CHECK(*q == b);
  CHECK_FALSE(divide_exact(a * b + Poly::constant(t, 1), a));
  auto groups = coefficients_in(parse_poly("z1*~z1 + z1*~z2 + 2", t), variable_mask(*t, {"z1", "z2"}));
  CHECK(groups.size() == 2);
}
