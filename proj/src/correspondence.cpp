#include "segrekit/correspondence.hpp"

#include <algorithm>
#include <set>

#include "segrekit/errors.hpp"
#include "segrekit/linalg.hpp"
#include "segrekit/segre.hpp"
#include "segrekit/solve.hpp"

namespace segrekit {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t count, const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= count; ++k) out.push_back(prefix + stem + std::to_string(k));
  return out;
}

// A stem whose numbered names (with and without ~) avoid `taken`.
std::string free_stem(std::string stem, std::size_t count, const std::set<std::string>& taken) {
  auto clashes = [&](const std::string& s) {
    for (const auto& name : numbered(s, count)) {
      if (taken.count(name) || taken.count("~" + name)) return true;
    }
    return false;
  };
  while (clashes(stem)) stem += "_";
  return stem;
}

bool contains_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

std::uint64_t holomorphic_degree(const Poly& p, std::size_t n) {
  std::uint64_t best = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t d = 0;
    for (std::size_t k = 0; k < n; ++k) d += t.mono[k];
    best = std::max(best, d);
  }
  return best;
}

// rho'(f(z), ~wp) with the denominators of f cleared. `z` maps the source
// variables into `table`, `wp` lists the parameters standing for conj(w').
std::vector<Poly> pulled_back(const CRManifold& target, const AlgebraicMap& f, const TablePtr& table,
                              const std::vector<Poly>& wp) {
  const std::size_t big_n = target.n();
  std::vector<Poly> comps;
  Poly common = Poly::constant(table, 1);
  if (f.is_relation()) {
    for (const auto& name : f.target_names()) comps.push_back(Poly::variable(table, name));
  } else {
    std::vector<Poly> nums;
    std::vector<Poly> dens;
    for (std::size_t k = 0; k < big_n; ++k) {
      Poly num = f.numerators()[k].rebase(table);
      Poly den = f.denominators()[k].rebase(table);
      if (den.is_constant()) {
        num = num.scaled(den.constant_term().inverse());
        den = Poly::constant(table, 1);
      }
      nums.push_back(num);
      dens.push_back(den);
    }
    for (std::size_t k = 0; k < big_n; ++k) {
      Poly c = nums[k];
      for (std::size_t j = 0; j < big_n; ++j) {
        if (j != k) c = c * dens[j];
      }
      comps.push_back(c);
      common = common * dens[k];
    }
  }
  std::vector<Poly> out;
  for (const auto& r : target.rho()) {
    const std::uint64_t e = holomorphic_degree(r, big_n);
    Poly acc(table);
    for (const auto& t : r.terms()) {
      Poly term = Poly::constant(table, t.coeff);
      std::uint64_t used = 0;
      for (std::size_t k = 0; k < big_n; ++k) {
        if (t.mono[k] > 0) term = term * comps[k].pow(t.mono[k]);
        if (t.mono[big_n + k] > 0) term = term * wp[k].pow(t.mono[big_n + k]);
        used += t.mono[k];
      }
      if (e > used) term = term * common.pow(static_cast<unsigned>(e - used));
      acc += term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

void check_shapes(const CRManifold& source, const CRManifold& target, const AlgebraicMap& f) {
  if (f.source_names() != source.holomorphic_names()) {
    throw InputError("map variables must match the source manifold variables");
  }
  if (f.target_dim() != target.n()) throw InputError("map target dimension does not match the target manifold");
}

Poly product(const std::vector<Poly>& polys, const TablePtr& table) {
  Poly out = Poly::constant(table, 1);
  std::vector<Poly> seen;
  for (const auto& p : polys) {
    if (p.is_constant()) continue;
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    seen.push_back(p);
    out = out * p;
  }
  return out;
}

// Rewrites p (over its own table) into `table`, renaming per `rename`.
std::optional<Poly> renamed(const Poly& p, const std::map<std::string, std::string>& rename, const TablePtr& table) {
  std::map<std::string, Poly> bind;
  for (auto k : p.support()) {
    auto it = rename.find(p.table()->name(k));
    if (it == rename.end()) return std::nullopt;
    bind.emplace(it->first, Poly::variable(table, it->second));
  }
  if (bind.empty()) return Poly::constant(table, p.constant_term());
  return substitute(p, bind);
}

}  // namespace

RankReport max_rank_check(const AlgebraicMap& f, const Point& p, const CRManifold* source) {
  RankReport out;
  Matrix jac = f.jacobian(p);
  out.rank = rank(jac);
  out.expected = std::min(f.source_dim(), f.target_dim());
  out.maximal = out.rank == out.expected;
  if (source) {
    auto h = kernel(holomorphic_jacobian(*source, p), source->n());
    Matrix restricted(jac.size(), Vector(h.size()));
    for (std::size_t r = 0; r < jac.size(); ++r) {
      for (std::size_t c = 0; c < h.size(); ++c) {
        GaussianRational acc;
        for (std::size_t k = 0; k < h[c].size(); ++k) acc += jac[r][k] * h[c][k];
        restricted[r][c] = acc;
      }
    }
    out.restricted_rank = h.empty() ? 0 : rank(restricted);
  }
  return out;
}

InvarianceReport verify_invariance(const CRManifold& source, const CRManifold& target, const AlgebraicMap& f,
                                   const std::vector<Point>& base_points, std::size_t samples,
                                   std::size_t segre_per_point, Rng& rng) {
  if (f.is_relation()) throw DomainError("invariance sampling needs a single-valued map");
  check_shapes(source, target, f);
  InvarianceReport out;
  auto points = sample_manifold_points(source, base_points, samples, rng);
  for (const auto& b : base_points) {
    if (!contains_point(points, b)) points.push_back(b);
  }
  for (const auto& p : points) {
    Point fp;
    try {
      fp = f.evaluate(p);
    } catch (const DomainError&) {
      continue;  // pole of f
    }
    ++out.manifold_points;
    if (!target.contains(fp)) ++out.manifold_failures;
    for (const auto& z : sample_segre_points(source, p, segre_per_point, rng)) {
      Point fz;
      try {
        fz = f.evaluate(z);
      } catch (const DomainError&) {
        continue;
      }
      ++out.evaluations;
      if (!in_segre(target, fz, fp)) ++out.failures;
    }
  }
  return out;
}

Correspondence build_correspondence(const CRManifold& source, const CRManifold& target, const AlgebraicMap& f,
                                    const EngineConfig& config) {
  if (!check_reality(source) || !check_reality(target)) {
    throw DomainError("correspondences need real defining polynomials");
  }
  check_shapes(source, target, f);
  const std::size_t n = source.n();
  const std::size_t big_n = target.n();

  std::vector<std::string> main = source.holomorphic_names();
  if (f.is_relation()) main.insert(main.end(), f.target_names().begin(), f.target_names().end());
  std::set<std::string> taken(main.begin(), main.end());
  const std::string ws = free_stem("w", n, taken);
  for (const auto& name : numbered(ws, n)) taken.insert(name);
  const std::string wps = free_stem(ws + "p", big_n, taken);
  const auto wbar = numbered(ws, n, "~");
  const auto wpbar = numbered(wps, big_n, "~");

  std::vector<VarInfo> vars;
  for (const auto& name : main) vars.push_back({name, VarKind::Holomorphic, std::nullopt});
  for (const auto& name : wbar) vars.push_back({name, VarKind::Parameter, std::nullopt});
  for (const auto& name : wpbar) vars.push_back({name, VarKind::Parameter, std::nullopt});
  TablePtr table = VarTable::make(std::move(vars));

  // J = <rho(z, ~w)> (+ relations of a multivalued map).
  std::map<std::string, Poly> bind;
  for (std::size_t k = 0; k < n; ++k) {
    bind.emplace(source.table()->name(k), Poly::variable(table, k));
    bind.emplace(source.table()->name(n + k), Poly::variable(table, wbar[k]));
  }
  std::vector<Poly> gens;
  for (const auto& r : source.rho()) gens.push_back(substitute(r, bind));
  if (f.is_relation()) {
    for (const auto& rel : f.relations()) gens.push_back(rel.rebase(table));
  }
  Ideal j(table, gens);

  std::vector<Poly> wp;
  for (const auto& name : wpbar) wp.push_back(Poly::variable(table, name));
  std::vector<std::string> params = wbar;
  params.insert(params.end(), wpbar.begin(), wpbar.end());
  std::vector<bool> main_block(table->size(), false);
  for (std::size_t k = 0; k < main.size(); ++k) main_block[k] = true;

  TablePtr param_table = table->subtable(params);
  std::vector<Poly> coeffs;
  std::vector<Poly> excluded;
  for (const auto& p : pulled_back(target, f, table, wp)) {
    auto pnf = parametric_normal_form(p, j, params, config);
    for (const auto& [mono, c] : coefficients_in(pnf.remainder, main_block)) {
      (void)mono;
      coeffs.push_back(c.rebase(param_table));
    }
    for (const auto& e : pnf.excluded) excluded.push_back(e.rebase(param_table));
  }

  Ideal graph(param_table, coeffs);
  Poly h = product(excluded, param_table);
  // Without this the generic reduction leaves spurious components over the excluded locus.
  if (!h.is_constant()) graph = saturate(graph, h, config);
  else graph = groebner_basis(graph, config);

  // Conjugate (~w, ~wp) into (w, wp).
  auto src_names = numbered("w", n);
  auto tgt_names = numbered("wp", big_n);
  std::vector<std::string> holo = src_names;
  holo.insert(holo.end(), tgt_names.begin(), tgt_names.end());
  TablePtr paired = VarTable::complex(holo);
  TablePtr plain = plain_table(holo);
  std::map<std::string, std::string> to_paired;
  for (std::size_t k = 0; k < n; ++k) to_paired[wbar[k]] = "~" + src_names[k];
  for (std::size_t k = 0; k < big_n; ++k) to_paired[wpbar[k]] = "~" + tgt_names[k];
  auto conj_plain = [&](const Poly& p) {
    return conjugate_poly(*renamed(p, to_paired, paired)).rebase(plain);
  };
  std::vector<Poly> out_gens;
  for (const auto& g : graph.basis()) out_gens.push_back(conj_plain(g));
  std::vector<Poly> out_excl;
  for (const auto& e : excluded) {
    if (!e.is_constant()) out_excl.push_back(conj_plain(e));
  }
  Ideal out_graph = groebner_basis(Ideal(plain, out_gens), config);
  if (out_graph.is_zero_ideal()) throw DomainError("graph ideal is zero; the map does not constrain w'");
  if (is_unit_ideal(out_graph, config)) throw DomainError("graph is empty; the map does not send M into M'");
  return {source, target, plain, src_names, tgt_names, out_graph, plain, std::move(out_excl),
          f.is_relation() ? "relation" : "map"};
}

Correspondence transpose(const Correspondence& c) {
  std::vector<std::string> names = c.target_block;
  names.insert(names.end(), c.source_block.begin(), c.source_block.end());
  TablePtr table = plain_table(names);
  std::vector<Poly> gens;
  for (const auto& g : c.graph.generators()) gens.push_back(g.rebase(table));
  return {c.target, c.source, table, c.target_block, c.source_block, Ideal(table, gens), c.ledger_table,
          c.excluded, "transpose(" + c.route + ")"};
}

Ideal fiber_ideal(const Correspondence& c, const Point& w) {
  if (w.size() != c.source_block.size()) throw InputError("fiber point dimension does not match the source");
  std::map<std::string, GaussianRational> values;
  for (std::size_t k = 0; k < w.size(); ++k) values[c.source_block[k]] = w[k];
  return specialize(c.graph, values, plain_table(c.target_block));
}

FiberReport fiber(const Correspondence& c, const Point& w, const EngineConfig& config) {
  Ideal specialized = groebner_basis(fiber_ideal(c, w), config);
  std::map<std::string, GaussianRational> values;
  for (std::size_t k = 0; k < w.size(); ++k) values[c.source_block[k]] = w[k];
  FiberReport out;
  for (const auto& e : c.excluded) {
    bool source_only = true;
    for (auto k : e.support()) {
      const auto& name = e.table()->name(k);
      if (std::find(c.source_block.begin(), c.source_block.end(), name) == c.source_block.end()) source_only = false;
    }
    if (source_only && eval(e, values).is_zero()) out.on_excluded_locus = true;
  }
  int dim = dimension(specialized, config);
  if (dim < 0) {
    out.solutions_complete = true;
    return out;
  }
  if (dim > 0) throw DomainError("fiber is positive-dimensional (dimension " + std::to_string(dim) + ")");
  out.degree = degree_zero_dim(specialized, config);
  out.distinct = radical_degree(specialized, config);
  auto sol = solve_zero_dim(specialized, config);
  out.solutions = std::move(sol.points);
  out.solutions_complete = sol.complete && out.solutions.size() == out.distinct;
  return out;
}

SplitReport splits_at(const Correspondence& c, const Point& q, const EngineConfig& config) {
  SplitReport out;
  out.fiber = fiber(c, q, config);
  out.simple_roots = out.fiber.degree > 0 && out.fiber.degree == out.fiber.distinct;
  out.target_injective = out.fiber.solutions_complete && !out.fiber.solutions.empty();
  if (out.target_injective) {
    for (const auto& s : out.fiber.solutions) {
      if (!c.target.contains(s) || !segre_map_locally_injective(c.target, s, config)) {
        out.target_injective = false;
        break;
      }
    }
  }
  out.splits = out.simple_roots && out.target_injective;
  return out;
}

bool splits(const Correspondence& c, const Point& q, const EngineConfig& config) {
  return splits_at(c, q, config).splits;
}

bool complete_at(const Correspondence& c, const Point& w, const EngineConfig& config) {
  auto fb = fiber(c, w, config);
  if (!fb.solutions_complete || fb.solutions.empty()) return false;
  auto inv = inversion_set(c.target, fb.solutions.front(), config);
  auto sol = solve_zero_dim(groebner_basis(inv.ideal, config), config);
  if (!sol.complete || sol.points.size() != fb.solutions.size()) return false;
  return std::all_of(sol.points.begin(), sol.points.end(),
                     [&](const Point& p) { return contains_point(fb.solutions, p); });
}

Correspondence compose(const Correspondence& first, const Correspondence& second, const EngineConfig& config) {
  if (first.target.n() != second.source.n() || first.target.rho().size() != second.source.rho().size()) {
    throw InputError("composition needs the first target to be the second source");
  }
  for (std::size_t k = 0; k < first.target.rho().size(); ++k) {
    if (first.target.rho()[k].to_string() != second.source.rho()[k].to_string()) {
      throw InputError("composition needs the first target to be the second source");
    }
  }
  const auto& a = first.source_block;
  std::set<std::string> taken(a.begin(), a.end());
  std::vector<std::string> c = second.target_block;
  if (std::any_of(c.begin(), c.end(), [&](const std::string& s) { return taken.count(s) > 0; })) {
    c = numbered(free_stem("wq", c.size(), taken), c.size());
  }
  taken.insert(c.begin(), c.end());
  auto mid = numbered(free_stem("wm", second.source_block.size(), taken), second.source_block.size());

  std::vector<std::string> names = a;
  names.insert(names.end(), mid.begin(), mid.end());
  names.insert(names.end(), c.begin(), c.end());
  TablePtr joint = plain_table(names);

  std::map<std::string, std::string> r1;
  for (std::size_t k = 0; k < a.size(); ++k) r1[first.source_block[k]] = a[k];
  for (std::size_t k = 0; k < mid.size(); ++k) r1[first.target_block[k]] = mid[k];
  std::map<std::string, std::string> r2;
  for (std::size_t k = 0; k < mid.size(); ++k) r2[second.source_block[k]] = mid[k];
  for (std::size_t k = 0; k < c.size(); ++k) r2[second.target_block[k]] = c[k];

  std::vector<Poly> gens;
  for (const auto& g : first.graph.generators()) gens.push_back(*renamed(g, r1, joint));
  for (const auto& g : second.graph.generators()) gens.push_back(*renamed(g, r2, joint));
  std::vector<std::string> keep = a;
  keep.insert(keep.end(), c.begin(), c.end());
  Ideal graph = eliminate(Ideal(joint, gens), keep, config);

  // Ledger entries that mention variables outside the two blocks (from earlier
  // compositions) cannot be transported and are dropped.
  std::vector<Poly> excluded;
  for (const auto& e : first.excluded) {
    if (auto p = renamed(e, r1, joint)) excluded.push_back(*p);
  }
  for (const auto& e : second.excluded) {
    if (auto p = renamed(e, r2, joint)) excluded.push_back(*p);
  }
  return {first.source, second.target, graph.table(), a, c, graph, joint, std::move(excluded),
          "compose(" + first.route + ", " + second.route + ")"};
}

const char* to_string(Containment c) {
  switch (c) {
    case Containment::Member: return "member";
    case Containment::RadicalMember: return "radical_member";
    case Containment::Fails: return "fails";
  }
  return "?";
}

Containment containment_at(const CRManifold& source, const CRManifold& target, const AlgebraicMap& f, const Point& w,
                           const Point& wp, const EngineConfig& config) {
  check_shapes(source, target, f);
  std::vector<std::string> main = source.holomorphic_names();
  if (f.is_relation()) main.insert(main.end(), f.target_names().begin(), f.target_names().end());
  TablePtr table = plain_table(main);
  std::vector<Poly> gens;
  auto qw = segre_variety(source, w);
  for (const auto& g : qw.ideal.generators()) gens.push_back(g.rebase(table));
  if (f.is_relation()) {
    for (const auto& rel : f.relations()) gens.push_back(rel.rebase(table));
  }
  Ideal j = groebner_basis(Ideal(table, gens), config);
  std::vector<Poly> wpbar;
  for (const auto& v : wp) wpbar.push_back(Poly::constant(table, v.conj()));
  auto pulled = pulled_back(target, f, table, wpbar);
  if (std::all_of(pulled.begin(), pulled.end(), [&](const Poly& p) { return member(p, j, config); })) {
    return Containment::Member;
  }
  if (std::all_of(pulled.begin(), pulled.end(), [&](const Poly& p) { return radical_member(p, j, config); })) {
    return Containment::RadicalMember;
  }
  return Containment::Fails;
}

}  // namespace segrekit
