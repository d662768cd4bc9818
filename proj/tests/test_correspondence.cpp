#include <random>

#include "doctest.h"
#include "segrekit/correspondence.hpp"
#include "segrekit/errors.hpp"
#include "segrekit/segre.hpp"
#include "catalog_fixtures.hpp"

using namespace segrekit;
using namespace segrekit::testing;

namespace {

AlgebraicMap square_map() { return AlgebraicMap::from_components({"z1", "z2"}, {"z1^2", "z2^2"}); }
AlgebraicMap root_map() {
  return AlgebraicMap::from_relations({"z1", "z2"}, {"y1", "y2"}, {"y1^2 - z1", "y2^2 - z2"});
}
AlgebraicMap rotation() { return AlgebraicMap::from_components({"z1", "z2"}, {"3/5*z1 - 4/5*z2", "4/5*z1 + 3/5*z2"}); }
AlgebraicMap identity() { return AlgebraicMap::from_components({"z1", "z2"}, {"z1", "z2"}); }

Ideal ideal_of(const Correspondence& c, std::initializer_list<const char*> gens) {
  std::vector<Poly> out;
  for (const auto* g : gens) out.push_back(parse_poly(g, c.table));
  return Ideal(c.table, out);
}

bool same_points(std::vector<Point> a, std::vector<Point> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find(b.begin(), b.end(), p);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("sphere identity and rotation graphs") {
  auto id = build_correspondence(sphere(), sphere(), identity());
  CHECK(ideals_equal(id.graph, ideal_of(id, {"wp1 - w1", "wp2 - w2"})));
  auto rot = build_correspondence(sphere(), sphere(), rotation());
  CHECK(ideals_equal(rot.graph, ideal_of(rot, {"wp1 - 3/5*w1 + 4/5*w2", "wp2 - 4/5*w1 - 3/5*w2"})));
  auto fb = fiber(rot, sphere_point());
  CHECK(fb.degree == 1);
  REQUIRE(fb.solutions.size() == 1);
  CHECK(fb.solutions[0] == rotation().evaluate(sphere_point()));
}

TEST_CASE("power map r = 2, s = 1: forward valency 1, reverse valency 4") {
  auto c = build_correspondence(quartic(), sphere(), square_map());
  CHECK(c.route == "map");
  CHECK(ideals_equal(c.graph, ideal_of(c, {"wp1 - w1^2", "wp2 - w2^2"})));
  Rng rng(7);
  auto ws = sample_manifold_points(quartic(), {quartic_point()}, 10, rng);
  REQUIRE(ws.size() == 10);
  for (const auto& w : ws) {
    auto fw = fiber(c, w);
    CHECK(fw.degree == 1);
    REQUIRE(fw.solutions.size() == 1);
    CHECK(fw.solutions[0] == square_map().evaluate(w));
    auto back = fiber(transpose(c), fw.solutions[0]);
    CHECK(back.degree == 4);
    CHECK(back.distinct == 4);
    CHECK(same_points(back.solutions, {{w[0], w[1]}, {-w[0], w[1]}, {w[0], -w[1]}, {-w[0], -w[1]}}));
    CHECK(splits(c, w));
    CHECK(complete_at(c, w));
    CHECK(complete_at(transpose(c), fw.solutions[0]));
  }
}

TEST_CASE("power map r = 1, s = 2 through relations") {
  auto c = build_correspondence(sphere(), quartic(), root_map());
  CHECK(c.route == "relation");
  CHECK(ideals_equal(c.graph, ideal_of(c, {"wp1^2 - w1", "wp2^2 - w2"})));
  auto fw = fiber(c, sphere_point());
  CHECK(fw.degree == 4);
  // Branch point: wp2^2 = 0 has a double root.
  auto branch = splits_at(c, {1, 0});
  CHECK(branch.fiber.degree == 4);
  CHECK(branch.fiber.distinct == 2);
  CHECK_FALSE(branch.simple_roots);
  CHECK_FALSE(branch.splits);
}

TEST_CASE("fiber over the excluded locus is flagged") {
  auto c = build_correspondence(quartic(), sphere(), square_map());
  REQUIRE_FALSE(c.excluded.empty());
  auto fb = fiber(c, {0, 1});
  CHECK(fb.on_excluded_locus);
  CHECK_FALSE(fiber(c, quartic_point()).on_excluded_locus);
}

TEST_CASE("definitional soundness on sampled graph points") {
  auto c = build_correspondence(quartic(), sphere(), square_map());
  Rng rng(11);
  auto ws = sample_manifold_points(quartic(), {quartic_point()}, 50, rng);
  REQUIRE(ws.size() == 50);
  std::size_t checked = 0;
  for (const auto& w : ws) {
    auto fb = fiber(c, w);
    REQUIRE(fb.solutions_complete);
    auto zs = sample_segre_points(quartic(), w, 10, rng);
    for (const auto& wp : fb.solutions) {
      for (const auto& z : zs) {
        CHECK(in_segre(sphere(), square_map().evaluate(z), wp));
        ++checked;
      }
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("transpose and compose") {
  auto id = build_correspondence(sphere(), sphere(), identity());
  auto rot = build_correspondence(sphere(), sphere(), rotation());
  CHECK(ideals_equal(compose(rot, id).graph, rot.graph));
  CHECK(ideals_equal(compose(id, rot).graph, rot.graph));
  auto twice = compose(rot, rot);
  auto fb = fiber(twice, sphere_point());
  REQUIRE(fb.solutions.size() == 1);
  auto once = rotation().evaluate(sphere_point());
  CHECK(fb.solutions[0] == rotation().evaluate(once));
  auto tt = transpose(transpose(rot));
  CHECK(ideals_equal(tt.graph.with_order(MonomialOrder::grevlex()), rot.graph));

  // quartic -> sphere -> quartic has valency 4 at a generic point.
  auto up = build_correspondence(quartic(), sphere(), square_map());
  auto loop = compose(up, transpose(up));
  CHECK(fiber(loop, quartic_point()).degree == 4);
  CHECK_THROWS_AS(compose(up, up), InputError);
}

TEST_CASE("verify_invariance") {
  Rng rng(5);
  auto ok = verify_invariance(sphere(), sphere(), rotation(), {sphere_point()}, 60, 10, rng);
  CHECK(ok.passed());
  CHECK(ok.evaluations >= 500);
  auto pw = verify_invariance(quartic(), sphere(), square_map(), {quartic_point()}, 60, 10, rng);
  CHECK(pw.passed());
  CHECK(pw.evaluations >= 500);
  auto bad = AlgebraicMap::from_components({"z1", "z2"}, {"z1 + z2", "z2"});
  auto rep = verify_invariance(sphere(), sphere(), bad, {sphere_point()}, 30, 5, rng);
  CHECK(rep.failures > 0);
  CHECK(rep.manifold_failures > 0);
  CHECK_THROWS_AS(verify_invariance(sphere(), quartic(), root_map(), {sphere_point()}, 5, 5, rng), DomainError);
}

TEST_CASE("containment_at") {
  auto w = sphere_point();
  CHECK(containment_at(sphere(), sphere(), identity(), w, w) == Containment::Member);
  CHECK(containment_at(sphere(), sphere(), identity(), w, {1, 0}) == Containment::Fails);
  auto fw = square_map().evaluate(quartic_point());
  CHECK(containment_at(quartic(), sphere(), square_map(), quartic_point(), fw) == Containment::Member);
  Point root{q(3, 5), q(4, 5)};
  Point sq{q(9, 25), q(16, 25)};
  CHECK(containment_at(sphere(), quartic(), root_map(), sq, root) == Containment::Member);
}

TEST_CASE("max_rank_check") {
  auto s = quartic();
  auto r = max_rank_check(square_map(), quartic_point(), &s);
  CHECK(r.maximal);
  CHECK(r.rank == 2);
  CHECK(r.restricted_rank == 1u);
  auto degenerate = max_rank_check(square_map(), {0, 1}, &s);
  CHECK_FALSE(degenerate.maximal);
  CHECK(degenerate.rank == 1);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(build_correspondence(hyperquadric(), sphere(), identity()), InputError);
  auto wrong = AlgebraicMap::from_components({"z1", "z2"}, {"z1"});
  CHECK_THROWS_AS(build_correspondence(sphere(), sphere(), wrong), InputError);
}
