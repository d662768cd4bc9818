#include <random>

#include "doctest.h"
#include "segrekit/errors.hpp"
#include "segrekit/sampling.hpp"
#include "segrekit/solve.hpp"
#include "catalog_fixtures.hpp"

using namespace segrekit;
using segrekit::testing::q;

namespace {

UniPoly from_roots(const std::vector<GaussianRational>& roots) {
  UniPoly p{GaussianRational(1)};
  for (const auto& r : roots) {
    UniPoly next(p.size() + 1, GaussianRational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = next;
  }
  return p;
}

bool same_set(std::vector<GaussianRational> a, std::vector<GaussianRational> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("exact roots") {
  auto r = exact_roots({q(1), q(0), q(1)});
  CHECK(r.complete);
  CHECK(same_set(r.roots, {GaussianRational::i(), -GaussianRational::i()}));
  auto b = exact_roots({q(-16), q(0), q(0), q(0), q(1)});
  CHECK(b.complete);
  CHECK(same_set(b.roots, {q(2), q(-2), q(0, 1, 2), q(0, 1, -2)}));
  auto two = exact_roots({q(-2), q(0), q(1)});
  CHECK_FALSE(two.complete);
  CHECK(two.roots.empty());
  auto rep = exact_roots(from_roots({q(1, 2), q(1, 2), q(-3)}));
  CHECK(rep.complete);
  CHECK(same_set(rep.roots, {q(1, 2), q(-3)}));
  auto zero_root = exact_roots({q(0), q(0), q(-1), q(1)});
  CHECK(same_set(zero_root.roots, {q(0), q(1)}));
}

TEST_CASE("exact roots of random split polynomials") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<GaussianRational> roots;
    for (int k = 0; k < 1 + trial % 5; ++k) roots.push_back(random_gaussian(rng, 5));
    auto rs = exact_roots(from_roots(roots));
    CHECK(rs.complete);
    std::vector<GaussianRational> distinct;
    for (const auto& x : roots) {
      if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
    }
    CHECK(same_set(rs.roots, distinct));
  }
}

TEST_CASE("univariate gcd and squarefree part") {
  UniPoly a = from_roots({q(1), q(2), q(2)});
  UniPoly b = from_roots({q(2), q(5)});
  CHECK(uni_gcd(a, b) == from_roots({q(2)}));
  CHECK(uni_squarefree(a) == from_roots({q(1), q(2)}));
  CHECK(uni_divide(a, from_roots({q(2)})) == from_roots({q(1), q(2)}));
  CHECK_THROWS_AS(uni_divide(a, from_roots({q(3)})), DomainError);
}

TEST_CASE("zero-dimensional solving") {
  auto t = plain_table({"x", "y"});
  Ideal two(t, {parse_poly("x^2 - 1", t), parse_poly("y - x", t)});
  auto s = solve_zero_dim(two);
  CHECK(s.complete);
  CHECK(s.points.size() == 2);
  for (const auto& p : s.points) {
    for (const auto& g : two.generators()) CHECK(eval(g, p).is_zero());
  }
  Ideal irr(t, {parse_poly("x^2 + y^2 - 1", t), parse_poly("x - y", t)});
  CHECK_FALSE(solve_zero_dim(irr).complete);
  Ideal fat(t, {parse_poly("x^2", t), parse_poly("y", t)});
  CHECK(degree_zero_dim(fat) == 2);
  CHECK(radical_degree(fat) == 1);
  Ideal four(t, {parse_poly("x^2 - 4", t), parse_poly("y^2 + 9", t)});
  CHECK(radical_degree(four) == 4);
  CHECK(solve_zero_dim(four).points.size() == 4);
  CHECK(solve_zero_dim(Ideal(t, {parse_poly("1", t)})).points.empty());
}

TEST_CASE("manifold sampling stays on the manifold") {
  using namespace segrekit::testing;
  std::mt19937_64 rng(47);
  std::vector<std::pair<CRManifold, Point>> cases{{sphere(), sphere_point()},
                                                  {quartic(), quartic_point()},
                                                  {hyperquadric(), hyperquadric_point()},
                                                  {tube(), tube_point()},
                                                  {cylinder(), cylinder_point()}};
  for (const auto& [m, p] : cases) {
    REQUIRE(m.contains(p));
    auto pts = sample_manifold_points(m, {p}, 20, rng);
    CHECK(pts.size() == 20);
    for (const auto& x : pts) CHECK(m.contains(x));
    auto zs = sample_segre_points(m, p, 10, rng);
    CHECK(zs.size() >= 5);
    for (const auto& z : zs) CHECK(eval(segre_equations(m, p)[0], m.bind(z)).is_zero());
  }
  CHECK(unit_gaussian(mpq_class(1, 9)).norm() == 1);
}
