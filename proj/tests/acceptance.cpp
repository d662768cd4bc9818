// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "segrekit/catalog.hpp"
#include "segrekit/correspondence.hpp"
#include "segrekit/errors.hpp"
#include "segrekit/manifold_io.hpp"
#include "segrekit/sampling.hpp"
#include "segrekit/segre.hpp"

using namespace segrekit;

namespace {

const std::uint64_t kSeed = 20161016;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const std::vector<CatalogEntry>& catalog() {
  static const auto entries = load_catalog();
  return entries;
}

const CatalogManifold& manifold(const std::string& entry, const std::string& id) {
  return find_entry(catalog(), entry).manifold(id);
}

const AlgebraicMap& map(const std::string& entry, const std::string& id) {
  return find_entry(catalog(), entry).map(id).map;
}

Outcome power_valency() {
  Outcome o;
  const auto& quartic = manifold("power_r2_s1_n2", "M");
  const auto& sphere = manifold("power_r2_s1_n2", "Mp");
  auto c = build_correspondence(quartic.manifold, sphere.manifold, map("power_r2_s1_n2", "square"));
  auto back = transpose(c);
  Rng rng(kSeed);
  auto ws = sample_manifold_points(quartic.manifold, {quartic.points.front()}, 10, rng);
  o.require(ws.size() == 10, "too few sample points");
  for (const auto& w : ws) {
    auto fw = fiber(c, w);
    o.require(fw.degree == 1, "forward degree " + std::to_string(fw.degree));
    if (fw.solutions.size() != 1) continue;
    auto bw = fiber(back, fw.solutions.front());
    o.require(bw.degree == 4, "reverse degree " + std::to_string(bw.degree));
  }
  const auto& s2 = manifold("power_r1_s2_n2", "M");
  auto root = build_correspondence(s2.manifold, manifold("power_r1_s2_n2", "Mp").manifold,
                                   map("power_r1_s2_n2", "root"));
  auto vs = sample_manifold_points(s2.manifold, {s2.points.front()}, 10, rng);
  for (const auto& v : vs) {
    auto f = fiber(root, v);
    o.require(f.degree == 4, "s = 2 forward degree " + std::to_string(f.degree));
  }
  o.detail = o.ok ? "forward 1, reverse 4 at 10 points; s = 2 forward 4 at 10 points" : o.detail;
  return o;
}

Outcome segre_symmetry() {
  Outcome o;
  std::size_t manifolds = 0;
  std::size_t checks = 0;
  for (const auto& e : catalog()) {
    for (const auto& m : e.manifolds) {
      ++manifolds;
      Rng rng(kSeed + manifolds);
      auto pairs = sample_segre_pairs(m.manifold, m.points, 200, rng);
      o.require(pairs.size() == 200, e.name + "/" + m.id + ": " + std::to_string(pairs.size()) + " pairs");
      for (const auto& [z, w] : pairs) {
        ++checks;
        o.require(in_segre(m.manifold, z, w) && in_segre(m.manifold, w, z), e.name + "/" + m.id + " symmetry");
      }
      for (int k = 0; k < 200; ++k) {
        Point z(m.manifold.n()), w(m.manifold.n());
        for (auto& c : z) c = random_gaussian(rng);
        for (auto& c : w) c = random_gaussian(rng);
        checks += 2;
        o.require(check_symmetry(m.manifold, z, w), e.name + "/" + m.id + " random symmetry");
        o.require(in_segre(m.manifold, z, z) == m.manifold.contains(z), e.name + "/" + m.id + " reality");
      }
      for (const auto& p : sample_manifold_points(m.manifold, m.points, 50, rng)) {
        ++checks;
        o.require(in_segre(m.manifold, p, p), e.name + "/" + m.id + " point of M outside Q_p");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " exact checks on " + std::to_string(manifolds) + " manifolds";
  return o;
}

Outcome essential_finiteness_degrees() {
  Outcome o;
  auto check = [&](const CatalogManifold& m, std::uint64_t expected, const std::string& name) {
    Rng rng(kSeed);
    auto pts = sample_manifold_points(m.manifold, {m.points.front()}, 10, rng);
    o.require(pts.size() == 10, name + ": too few samples");
    for (const auto& p : pts) {
      auto ef = essential_finiteness(m.manifold, p);
      o.require(ef.finite && ef.degree == expected,
                name + ": degree " + (ef.degree ? std::to_string(*ef.degree) : std::string("infinite")));
    }
  };
  check(manifold("sphere_C2", "M"), 1, "sphere");
  check(manifold("power_r2_s1_n2", "M"), 4, "power r = 2");
  if (o.ok) o.detail = "sphere R = 1, power r = 2 R = 4, constant over 10 samples each";
  return o;
}

Outcome minimality_chains() {
  Outcome o;
  auto sphere = minimality(manifold("sphere_C2", "M").manifold, manifold("sphere_C2", "M").points.front());
  o.require(sphere.minimal && sphere.j0 == 2u, "sphere");
  for (const char* id : {"H0", "H3"}) {
    const auto& h = manifold("hyperquadric_k1_n3", id);
    auto r = minimality(h.manifold, h.points.front());
    o.require(r.minimal && r.j0 == 2u, std::string("hyperquadric chart ") + id);
  }
  const auto& tube = manifold("tube_C2", "M");
  auto t = minimality(tube.manifold, tube.points.front());
  o.require(t.status == ChainStatus::Stabilized && t.chain.dims.back() < static_cast<int>(tube.manifold.n()),
            "tube");
  if (o.ok) o.detail = "sphere and hyperquadric j0 = 2; tube stabilized at dimension " +
                       std::to_string(t.chain.dims.back());
  return o;
}

Outcome levi_signatures() {
  Outcome o;
  const auto& s = manifold("sphere_C2", "M");
  auto sig = levi_signature(s.manifold, {1, 0}, {1}).signature;
  o.require(sig == Signature{1, 0, 0}, "sphere signature");
  std::size_t pairs = 0;
  for (const char* id : {"H0", "H3"}) {
    const auto& h = manifold("hyperquadric_k1_n3", id);
    Rng rng(kSeed);
    auto pts = sample_manifold_points(h.manifold, h.points, 10, rng);
    o.require(pts.size() == 10, "too few hyperquadric samples");
    auto probe = pseudoconcavity_probe(h.manifold, pts, default_conormal_grid(1));
    pairs += probe.samples.size();
    o.require(probe.all_mixed, std::string("chart ") + id + " not mixed everywhere");
  }
  o.require(pairs >= 20, "fewer than 20 (point, conormal) pairs");
  if (o.ok) o.detail = "sphere (1,0,0); hyperquadric mixed at " + std::to_string(pairs) + " (point, conormal) pairs";
  return o;
}

Outcome invariance() {
  Outcome o;
  std::string counts;
  auto run = [&](const std::string& entry, const std::string& id) {
    const auto& e = find_entry(catalog(), entry);
    const auto& cm = e.map(id);
    const auto& src = e.manifold(cm.source);
    Rng rng(kSeed);
    auto rep = verify_invariance(src.manifold, e.manifold(cm.target).manifold, cm.map, src.points, 60, 10, rng);
    o.require(rep.passed() && rep.evaluations >= 500,
              id + ": " + std::to_string(rep.failures) + " failures in " + std::to_string(rep.evaluations));
    counts += (counts.empty() ? "" : ", ") + id + " " + std::to_string(rep.evaluations);
  };
  run("sphere_C2", "rotation");
  run("sphere_C2", "diagonal");
  run("power_r2_s1_n2", "square");
  if (o.ok) o.detail = "all exact membership checks pass (" + counts + ")";
  return o;
}

Outcome engine_soundness() {
  Outcome o;
  std::vector<Ideal> bases;
  for (const auto& e : catalog()) {
    for (const auto& m : e.manifolds) {
      bases.push_back(groebner_basis(inversion_set(m.manifold, m.points.front()).ideal));
      bases.push_back(groebner_basis(inversion_set_symbolic(m.manifold).ideal));
      for (const auto& ideal : segre_sets(m.manifold, m.points.front()).ideals) bases.push_back(ideal);
    }
    for (const auto& cm : e.maps) {
      auto c = build_correspondence(e.manifold(cm.source).manifold, e.manifold(cm.target).manifold, cm.map);
      bases.push_back(c.graph);
      for (const auto& p : e.manifold(cm.source).points) bases.push_back(groebner_basis(fiber_ideal(c, p)));
    }
  }
  std::size_t unsound = 0;
  for (const auto& b : bases) {
    if (!satisfies_buchberger_criterion(b) || !is_reduced_basis(b)) ++unsound;
  }
  o.require(unsound == 0, std::to_string(unsound) + " bases fail the Buchberger criterion");

  // Projections: Q^1 of the quartic and the composed quartic -> sphere -> quartic graph.
  const auto& quartic = manifold("power_r2_s1_n2", "M");
  Rng rng(kSeed);
  auto q1 = segre_sets(quartic.manifold, quartic.points.front(), 1).ideals.front();
  std::size_t projected = 0;
  std::size_t misses = 0;
  auto zs = sample_segre_points(quartic.manifold, quartic.points.front(), 100, rng);
  for (const auto& z : zs) {
    ++projected;
    for (const auto& g : q1.basis()) misses += eval(g, z).is_zero() ? 0 : 1;
  }
  o.require(zs.size() == 100, "only " + std::to_string(zs.size()) + " Segre points sampled");
  auto up = build_correspondence(quartic.manifold, manifold("power_r2_s1_n2", "Mp").manifold,
                                 map("power_r2_s1_n2", "square"));
  auto loop = compose(up, transpose(up));
  auto ws = sample_manifold_points(quartic.manifold, {quartic.points.front()}, 25, rng);
  for (const auto& w : ws) {
    for (int s = 0; s < 4; ++s) {
      Point v{s & 1 ? -w[0] : w[0], s & 2 ? -w[1] : w[1]};
      Point joint{w[0], w[1], v[0], v[1]};
      ++projected;
      for (const auto& g : loop.graph.basis()) misses += eval(g, joint).is_zero() ? 0 : 1;
    }
  }
  o.require(misses == 0, std::to_string(misses) + " elimination generators do not vanish");
  o.require(projected >= 200, "too few projection points");

  std::size_t systems = 0;
  double worst = 0;
  for (const auto& e : catalog()) {
    auto rep = run_suite(e);
    for (const auto& rec : rep.oracle) {
      ++systems;
      worst = std::max(worst, rec.max_residual);
      o.require(rec.agree, rec.system + ": exact " + std::to_string(rec.exact_distinct) + ", numeric " +
                               std::to_string(rec.numeric_count));
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu reduced bases sound; %zu projection points; %zu systems exact = numeric (max residual %.1e, tol 1e-9)",
                bases.size(), projected, systems, worst);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome splitting() {
  Outcome o;
  const auto& quartic = manifold("power_r2_s1_n2", "M");
  auto c = build_correspondence(quartic.manifold, manifold("power_r2_s1_n2", "Mp").manifold,
                                map("power_r2_s1_n2", "square"));
  Rng rng(kSeed);
  auto ws = sample_manifold_points(quartic.manifold, {quartic.points.front()}, 10, rng);
  o.require(ws.size() == 10, "too few sample points");
  for (const auto& w : ws) o.require(splits(c, w), "no split at " + format_point(w));
  const auto& sphere = manifold("power_r1_s2_n2", "M");
  auto root = build_correspondence(sphere.manifold, manifold("power_r1_s2_n2", "Mp").manifold,
                                   map("power_r1_s2_n2", "root"));
  auto branch = splits_at(root, {1, 0});
  o.require(!branch.splits && !branch.simple_roots, "branch point (1, 0) reported as split");
  if (o.ok) o.detail = "splits at 10 generic points onto the sphere; branch point (1, 0) of s = 2 does not";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "power-example valency", 60, power_valency},
      {2, "Segre symmetry and reality", 10, segre_symmetry},
      {3, "essential finiteness degrees", 120, essential_finiteness_degrees},
      {4, "minimality via Segre sets", 120, minimality_chains},
      {5, "Levi signatures", 10, levi_signatures},
      {6, "invariance under maps", 10, invariance},
      {7, "engine soundness", 120, engine_soundness},
      {8, "splitting criterion", 60, splitting},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.ok && secs < c.budget;
    if (o.ok && !pass) o.detail += "; over time budget";
    std::printf("%s %d %-30s %8.3f s (budget %3.0f s)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget,
                o.detail.c_str());
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
