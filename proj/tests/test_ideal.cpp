#include <random>

#include "doctest.h"
#include "segrekit/errors.hpp"
#include "segrekit/ideal.hpp"
#include "test_support.hpp"

using namespace segrekit;
using segrekit::testing::random_gaussian;
using segrekit::testing::random_poly;
using segrekit::testing::random_rational;

namespace {

TablePtr plain(std::vector<std::string> names, VarKind kind = VarKind::Holomorphic) {
  std::vector<VarInfo> vars;
  for (auto& n : names) vars.push_back({n, kind, std::nullopt});
  return VarTable::make(std::move(vars));
}

std::vector<Poly> parse_all(const std::vector<std::string>& srcs, const TablePtr& t) {
  std::vector<Poly> out;
  for (const auto& s : srcs) out.push_back(parse_poly(s, t));
  return out;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  auto x = plain({"x"});
  Ideal lex(x, parse_all({"x^2 - 1", "x - 1"}, x), MonomialOrder::lex());
  auto gb = groebner_basis(lex);
  REQUIRE(gb.basis().size() == 1);
  CHECK(gb.basis()[0] == parse_poly("x - 1", x));

  auto xy = plain({"x", "y"});
  auto gxy = groebner_basis(Ideal(xy, parse_all({"x", "y"}, xy)));
  CHECK(gxy.basis().size() == 2);
  CHECK(is_reduced_basis(gxy));

  auto c2 = VarTable::complex({"z1", "z2"});
  Poly segre = substitute_values(parse_poly("z1*~z1 + z2*~z2 - 1", c2), {{"~z1", 1}, {"~z2", 0}});
  auto gs = groebner_basis(Ideal(c2, {segre}));
  REQUIRE(gs.basis().size() == 1);
  CHECK(gs.basis()[0] == parse_poly("z1 - 1", c2));
}

TEST_CASE("groebner_basis is idempotent and detects the unit ideal") {
  auto xy = plain({"x", "y"});
  auto gb = groebner_basis(Ideal(xy, parse_all({"x^2 + y^2 - 1", "x - y"}, xy)));
  auto again = groebner_basis(Ideal(xy, gb.basis()));
  CHECK(again.basis() == gb.basis());
  CHECK(is_unit_ideal(Ideal(xy, parse_all({"x*y - 1", "x"}, xy))));
  CHECK_FALSE(is_unit_ideal(gb));
}

TEST_CASE("resource limits are reported") {
  auto xyz = plain({"x", "y", "z"});
  EngineConfig tight;
  tight.max_basis = 1;
  CHECK_THROWS_AS(groebner_basis(Ideal(xyz, parse_all({"x^2 - y", "x*y - z"}, xyz)), tight), ResourceLimitError);
  EngineConfig low_degree;
  low_degree.max_degree = 2;
  CHECK_THROWS_AS(groebner_basis(Ideal(xyz, parse_all({"x^3 - y"}, xyz)), low_degree), ResourceLimitError);
}

TEST_CASE("normal_form examples") {
  auto xy = plain({"x", "y"});
  Ideal lex(xy, parse_all({"x^2 - y"}, xy), MonomialOrder::lex());
  CHECK(normal_form(parse_poly("x^2", xy), lex) == parse_poly("y", xy));
  CHECK(normal_form(parse_poly("x^2 - y", xy), lex).is_zero());
  auto c2 = VarTable::complex({"z1", "z2"});
  Ideal sphere_segre(c2, {parse_poly("z1*~z1 + z2*~z2 - 1", c2)});
  CHECK(normal_form(Poly::constant(c2, 1), sphere_segre) == Poly::constant(c2, 1));
  Poly nf = normal_form(parse_poly("z1^3*~z2 + z2", c2), sphere_segre);
  CHECK(normal_form(nf, sphere_segre) == nf);
}

TEST_CASE("membership examples") {
  auto xy = plain({"x", "y"});
  CHECK(member(parse_poly("x*y", xy), Ideal(xy, parse_all({"x"}, xy))));
  Ideal sq(xy, parse_all({"x^2"}, xy));
  CHECK_FALSE(member(parse_poly("x", xy), sq));
  CHECK(radical_member(parse_poly("x", xy), sq));
  CHECK_FALSE(radical_member(parse_poly("y", xy), sq));
}

TEST_CASE("elimination examples") {
  auto xyz = plain({"x", "y", "z"});
  Ideal cubic(xyz, parse_all({"y - x^2", "z - x^3"}, xyz));
  auto e = eliminate(cubic, {"y", "z"});
  CHECK(e.table()->size() == 2);
  CHECK(member(parse_poly("z^2 - y^3", e.table()), e));
  CHECK(satisfies_buchberger_criterion(e));

  auto xy = plain({"x", "y"});
  auto zero = eliminate(Ideal(xy, parse_all({"x - 1"}, xy)), {"y"});
  CHECK(zero.basis().empty());
  CHECK(dimension(zero) == 1);
}

TEST_CASE("dimension and degree examples") {
  auto x = plain({"x"});
  Ideal a(x, parse_all({"x^2 - 1"}, x));
  CHECK(dimension(a) == 0);
  CHECK(degree_zero_dim(a) == 2);
  auto xy = plain({"x", "y"});
  Ideal b(xy, parse_all({"x*y"}, xy));
  CHECK(dimension(b) == 1);
  CHECK_THROWS_AS(degree_zero_dim(b), DomainError);
  CHECK(dimension(Ideal(xy, parse_all({"1"}, xy))) == -1);
  CHECK(dimension(Ideal(xy, {})) == 2);
  Ideal c(xy, parse_all({"x^2 + y^2 - 1", "x - y"}, xy));
  CHECK(degree_zero_dim(c) == 2);
}

TEST_CASE("degree of x^a - c is a") {
  auto x = plain({"x"});
  std::mt19937_64 rng(17);
  for (unsigned a = 1; a <= 12; ++a) {
    GaussianRational c = random_gaussian(rng);
    if (c.is_zero()) c = 1;
    Poly p = Poly::variable(x, "x").pow(a) - Poly::constant(x, c);
    CHECK(degree_zero_dim(Ideal(x, {p})) == a);
  }
}

TEST_CASE("parametric_normal_form examples") {
  std::vector<VarInfo> vars{{"z1", VarKind::Holomorphic, std::nullopt},
                            {"~w1", VarKind::Parameter, std::nullopt},
                            {"~w2", VarKind::Parameter, std::nullopt}};
  auto t = VarTable::make(vars);
  Ideal trivial(t, {parse_poly("z1 - 1", t)});
  auto r1 = parametric_normal_form(parse_poly("z1*~w1 - ~w1", t), trivial, {"~w1", "~w2"});
  CHECK(r1.remainder.is_zero());
  CHECK(r1.excluded.empty());

  Ideal lin(t, {parse_poly("~w1*z1 - ~w2", t)});
  auto r2 = parametric_normal_form(parse_poly("~w1*z1 - 1", t), lin, {"~w1", "~w2"});
  CHECK(r2.remainder == parse_poly("~w2 - 1", t));
  REQUIRE(r2.excluded.size() == 1);
  CHECK(r2.excluded[0] == parse_poly("~w1", t));
}

TEST_CASE("random bases satisfy the Buchberger criterion and generate the same ideal") {
  auto t = plain({"x", "y", "z"});
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2 + trial % 2; ++k) gens.push_back(random_poly(rng, t, 3, 3));
    Ideal ideal(t, gens);
    Ideal gb = [&] {
      try {
        return groebner_basis(ideal);
      } catch (const ResourceLimitError&) {
        return ideal;
      }
    }();
    if (!gb.has_basis()) continue;
    ++checked;
    CHECK(satisfies_buchberger_criterion(gb));
    CHECK(is_reduced_basis(gb));
    for (const auto& g : gens) CHECK(member(g, gb));
    Ideal lex = groebner_basis(ideal.with_order(MonomialOrder::lex()));
    CHECK(satisfies_buchberger_criterion(lex));
    CHECK(ideals_equal(gb, lex));
  }
  CHECK(checked >= 30);
}

TEST_CASE("constructed members are recognised") {
  auto t = plain({"x", "y", "z"});
  std::mt19937_64 rng(29);
  Ideal ideal(t, parse_all({"x^2 - y*z + 1", "y^2 - x + 2*z"}, t));
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(rng, t, 3, 3) * ideal.generators()[0] + random_poly(rng, t, 3, 3) * ideal.generators()[1];
    CHECK(member(p, ideal));
    CHECK_FALSE(member(p + Poly::constant(t, 1), ideal));
  }
}

TEST_CASE("eliminants vanish on sampled projection points") {
  auto t = plain({"x", "y", "z"});
  std::mt19937_64 rng(31);
  int points = 0;
  for (int shape = 0; shape < 5; ++shape) {
    GaussianRational a2 = random_rational(rng), a1 = random_rational(rng), a0 = random_rational(rng);
    GaussianRational b1 = random_rational(rng), b2 = random_rational(rng), b0 = random_rational(rng);
    if (a2.is_zero()) a2 = 1;
    Poly x = Poly::variable(t, "x");
    Poly y = Poly::variable(t, "y");
    Poly z = Poly::variable(t, "z");
    Poly ya = x * x * Poly::constant(t, a2) + x * Poly::constant(t, a1) + Poly::constant(t, a0);
    Poly zb = x * y * Poly::constant(t, b1) + x * x * x * Poly::constant(t, b2) + Poly::constant(t, b0);
    Ideal tri(t, {y - ya, z - zb});
    Ideal e = eliminate(tri, {"y", "z"});
    REQUIRE_FALSE(e.basis().empty());
    for (int k = 0; k < 20; ++k) {
      GaussianRational xv = random_gaussian(rng);
      GaussianRational yv = eval(ya, {{"x", xv}, {"y", 0}, {"z", 0}});
      GaussianRational zv = eval(zb, {{"x", xv}, {"y", yv}, {"z", 0}});
      for (const auto& g : e.basis()) CHECK(eval(g, {{"y", yv}, {"z", zv}}).is_zero());
      ++points;
    }
  }
  CHECK(points == 100);
}

TEST_CASE("parametric_normal_form specializes correctly") {
  std::vector<VarInfo> vars{{"z1", VarKind::Holomorphic, std::nullopt},
                            {"z2", VarKind::Holomorphic, std::nullopt},
                            {"a", VarKind::Parameter, std::nullopt},
                            {"b", VarKind::Parameter, std::nullopt}};
  auto t = VarTable::make(vars);
  auto zt = plain({"z1", "z2"});
  std::mt19937_64 rng(37);
  Ideal ideal(t, parse_all({"a*z1^2 + b*z2^2 - 1", "b*z1 - a*z2 + 2"}, t));
  int trials = 0;
  while (trials < 50) {
    Poly p = random_poly(rng, t, 4, 4);
    auto pnf = parametric_normal_form(p, ideal, {"a", "b"});
    std::map<std::string, GaussianRational> values{{"a", random_gaussian(rng)}, {"b", random_gaussian(rng)}};
    bool bad = eval(pnf.multiplier, {{"a", values["a"]}, {"b", values["b"]}, {"z1", 0}, {"z2", 0}}).is_zero();
    for (const auto& e : pnf.excluded) {
      bad = bad || substitute_values(e, values).is_zero();
    }
    if (bad) continue;
    ++trials;
    GaussianRational m = substitute_values(pnf.multiplier, values).constant_term();
    Poly lhs = substitute_values(pnf.remainder, values).rebase(zt).scaled(m.inverse());
    Ideal special = specialize(ideal, values, zt);
    Poly rhs = normal_form(substitute_values(p, values).rebase(zt), special);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("saturation removes a component") {
  auto xy = plain({"x", "y"});
  Ideal i(xy, parse_all({"x*y", "x*(x - 1)"}, xy));
  Ideal s = saturate(i, parse_poly("x", xy));
  CHECK(ideals_equal(s, Ideal(xy, parse_all({"x - 1", "y"}, xy))));
}
