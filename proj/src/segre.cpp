#include "segrekit/segre.hpp"

#include <algorithm>

#include "segrekit/errors.hpp"
#include "segrekit/linalg.hpp"
#include "segrekit/sampling.hpp"

namespace segrekit {

namespace {

// Names ~w1.. (or a fresh stem) that do not clash with the manifold variables.
std::vector<std::string> parameter_block(const CRManifold& manifold, const std::string& stem) {
  std::string s = stem;
  auto clashes = [&](const std::string& candidate) {
    for (std::size_t k = 1; k <= manifold.n(); ++k) {
      if (manifold.table()->index_of(candidate + std::to_string(k)) ||
          manifold.table()->index_of("~" + candidate + std::to_string(k))) {
        return true;
      }
    }
    return false;
  };
  while (clashes(s)) s += "_";
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= manifold.n(); ++k) out.push_back("~" + s + std::to_string(k));
  return out;
}

std::vector<Poly> conjugate_into(const std::vector<Poly>& polys, const CRManifold& manifold) {
  std::vector<Poly> out;
  for (const auto& p : polys) out.push_back(conjugate_poly(p.rebase(manifold.table())));
  return out;
}

}  // namespace

TablePtr holomorphic_table(const CRManifold& manifold) { return plain_table(manifold.holomorphic_names()); }

SegreVariety segre_variety(const CRManifold& manifold, const Point& w) {
  if (!check_reality(manifold)) throw DomainError("Segre varieties need real defining polynomials");
  if (w.size() != manifold.n()) throw InputError("point dimension does not match the manifold");
  TablePtr z = holomorphic_table(manifold);
  std::vector<Poly> gens;
  for (const auto& g : segre_equations(manifold, w)) {
    Poly r = g.rebase(z);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return {w, Ideal(z, std::move(gens)), {}};
}

SegreVariety segre_variety_symbolic(const CRManifold& manifold) {
  if (!check_reality(manifold)) throw DomainError("Segre varieties need real defining polynomials");
  const std::size_t n = manifold.n();
  auto params = parameter_block(manifold, "w");
  std::vector<VarInfo> vars;
  for (const auto& name : manifold.holomorphic_names()) vars.push_back({name, VarKind::Holomorphic, std::nullopt});
  for (const auto& name : params) vars.push_back({name, VarKind::Parameter, std::nullopt});
  TablePtr table = VarTable::make(std::move(vars));
  std::map<std::string, Poly> bind;
  for (std::size_t k = 0; k < n; ++k) {
    bind.emplace(manifold.table()->name(k), Poly::variable(table, k));
    bind.emplace(manifold.table()->name(n + k), Poly::variable(table, n + k));
  }
  std::vector<Poly> gens;
  for (const auto& r : manifold.rho()) gens.push_back(substitute(r, bind));
  return {std::nullopt, Ideal(table, std::move(gens)), params};
}

bool in_segre(const CRManifold& manifold, const Point& z, const Point& w) {
  std::map<std::string, GaussianRational> values;
  for (std::size_t k = 0; k < manifold.n(); ++k) {
    values[manifold.table()->name(k)] = z[k];
    values[manifold.table()->name(manifold.n() + k)] = w[k].conj();
  }
  return std::all_of(manifold.rho().begin(), manifold.rho().end(),
                     [&](const Poly& r) { return eval(r, values).is_zero(); });
}

bool check_symmetry(const CRManifold& manifold, const Point& z, const Point& w) {
  return in_segre(manifold, z, w) == in_segre(manifold, w, z);
}

std::map<std::string, RationalFunction> graph_form(const SegreVariety& q, const std::vector<std::string>& solve_for) {
  const TablePtr& table = q.ideal.table();
  const auto& gens = q.ideal.generators();
  if (gens.size() != solve_for.size()) {
    throw DomainError("graph form needs as many generators as solved variables");
  }
  std::vector<std::size_t> idx;
  for (const auto& name : solve_for) idx.push_back(table->require(name));
  std::vector<bool> block(table->size(), false);
  for (auto k : idx) block[k] = true;
  const std::size_t d = idx.size();
  std::vector<std::vector<Poly>> a(d, std::vector<Poly>(d, Poly(table)));
  std::vector<Poly> b(d, Poly(table));
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [mono, coeff] : coefficients_in(gens[j], block)) {
      if (mono.degree() > 1) {
        throw DomainError("generator is nonlinear in " + table->name(*std::find_if(idx.begin(), idx.end(), [&](std::size_t k) {
                            return mono[k] > 0;
                          })) + "; solving requires a root, not a rational function");
      }
      if (mono.degree() == 0) {
        b[j] = coeff;
        continue;
      }
      for (std::size_t c = 0; c < d; ++c) {
        if (mono[idx[c]] == 1) a[j][c] = coeff;
      }
    }
  }
  Poly det = determinant(a, table);
  if (det.is_zero()) throw DomainError("Jacobian in the solved block is singular; permute the coordinates");
  std::map<std::string, RationalFunction> out;
  for (std::size_t c = 0; c < d; ++c) {
    auto replaced = a;
    for (std::size_t j = 0; j < d; ++j) replaced[j][c] = -b[j];
    Poly num = determinant(replaced, table);
    if (auto exact = divide_exact(num, det)) {
      out.emplace(solve_for[c], RationalFunction{*exact, Poly::constant(table, 1)});
    } else {
      GaussianRational unit = det.terms().front().coeff.inverse();
      out.emplace(solve_for[c], RationalFunction{num.scaled(unit), det.scaled(unit)});
    }
  }
  return out;
}

InversionSet inversion_set(const CRManifold& manifold, const Point& w, const EngineConfig& config) {
  if (!check_reality(manifold)) throw DomainError("inversion set needs real defining polynomials");
  const TablePtr& table = manifold.table();
  std::vector<Poly> segre;
  for (const auto& g : segre_equations(manifold, w)) {
    if (!g.is_zero()) segre.push_back(g);
  }
  Ideal qw(table, segre);
  std::vector<bool> z_block(table->size(), false);
  for (std::size_t k = 0; k < manifold.n(); ++k) z_block[k] = true;
  auto params = manifold.conjugate_names();
  std::vector<Poly> coeffs;
  std::vector<Poly> excluded;
  for (const auto& r : manifold.rho()) {
    auto pnf = parametric_normal_form(r, qw, params, config);
    for (const auto& [mono, c] : coefficients_in(pnf.remainder, z_block)) {
      (void)mono;
      coeffs.push_back(c);
    }
    for (const auto& e : pnf.excluded) excluded.push_back(e);
  }
  TablePtr z = holomorphic_table(manifold);
  std::vector<Poly> gens;
  for (const auto& c : conjugate_into(coeffs, manifold)) gens.push_back(c.rebase(z));
  std::vector<Poly> excl;
  for (const auto& e : conjugate_into(excluded, manifold)) excl.push_back(e.rebase(z));
  return {Ideal(z, std::move(gens)), std::move(excl)};
}

InversionSet inversion_set_symbolic(const CRManifold& manifold, const EngineConfig& config) {
  if (!check_reality(manifold)) throw DomainError("inversion set needs real defining polynomials");
  const std::size_t n = manifold.n();
  auto wnames = parameter_block(manifold, "w");
  std::vector<VarInfo> vars = manifold.table()->vars();
  for (const auto& name : wnames) vars.push_back({name, VarKind::Parameter, std::nullopt});
  TablePtr table = VarTable::make(std::move(vars));
  std::map<std::string, Poly> bind;
  for (std::size_t k = 0; k < n; ++k) {
    bind.emplace(manifold.table()->name(k), Poly::variable(table, k));
    bind.emplace(manifold.table()->name(n + k), Poly::variable(table, 2 * n + k));
  }
  std::vector<Poly> segre;
  for (const auto& r : manifold.rho()) segre.push_back(substitute(r, bind));
  Ideal qw(table, segre);
  std::vector<std::string> params = manifold.conjugate_names();
  params.insert(params.end(), wnames.begin(), wnames.end());
  std::vector<bool> z_block(table->size(), false);
  for (std::size_t k = 0; k < n; ++k) z_block[k] = true;
  std::vector<std::string> keep = params;
  TablePtr out_table = table->subtable(keep);
  std::vector<Poly> gens;
  std::vector<Poly> excluded;
  for (const auto& r : manifold.rho()) {
    auto pnf = parametric_normal_form(r.rebase(table), qw, params, config);
    for (const auto& [mono, c] : coefficients_in(pnf.remainder, z_block)) {
      (void)mono;
      gens.push_back(c.rebase(out_table));
    }
    for (const auto& e : pnf.excluded) excluded.push_back(e.rebase(out_table));
  }
  return {Ideal(out_table, std::move(gens)), std::move(excluded)};
}

EssentialFiniteness essential_finiteness(const CRManifold& manifold, const Point& w, const EngineConfig& config) {
  InversionSet inv = inversion_set(manifold, w, config);
  Ideal gb = groebner_basis(inv.ideal, config);
  EssentialFiniteness out;
  out.dimension = dimension(gb, config);
  if (out.dimension == 0) {
    out.finite = true;
    out.degree = degree_zero_dim(gb, config);
  }
  return out;
}

bool segre_map_locally_injective(const CRManifold& manifold, const Point& q, const EngineConfig& config) {
  auto ef = essential_finiteness(manifold, q, config);
  return ef.finite && ef.degree == 1u;
}

const char* to_string(ChainStatus status) {
  switch (status) {
    case ChainStatus::Minimal: return "minimal";
    case ChainStatus::Stabilized: return "stabilized";
    case ChainStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

SegreSetChain segre_sets(const CRManifold& manifold, const Point& p, std::size_t j_max, const EngineConfig& config) {
  if (!manifold.contains(p)) throw DomainError("base point is not on the manifold");
  const std::size_t n = manifold.n();
  if (j_max == 0) j_max = n + 2;
  TablePtr z = holomorphic_table(manifold);
  const TablePtr& table = manifold.table();
  std::vector<Poly> start;
  for (std::size_t k = 0; k < n; ++k) start.push_back(Poly::variable(z, k) - Poly::constant(z, p[k]));
  Ideal previous(z, start);

  SegreSetChain chain;
  chain.base = p;
  const auto keep = manifold.holomorphic_names();
  for (std::size_t j = 1; j <= j_max; ++j) {
    // Points z with rho(z, zeta) = 0 for some zeta = conj(z'), z' in the previous set.
    std::vector<Poly> gens = conjugate_into(previous.has_basis() ? previous.basis() : previous.generators(), manifold);
    for (const auto& r : manifold.rho()) gens.push_back(r);
    Ideal next = eliminate(Ideal(table, std::move(gens)), keep, config);
    std::vector<Poly> basis;
    for (const auto& g : next.basis()) basis.push_back(g.rebase(z));
    Ideal current = Ideal(z, basis).with_basis(basis);
    int dim = dimension(current, config);
    bool same = j > 1 && current.basis() == previous.basis();
    chain.ideals.push_back(current);
    chain.dims.push_back(dim);
    if (dim == static_cast<int>(n)) {
      chain.status = ChainStatus::Minimal;
      chain.j0 = j;
      return chain;
    }
    if (same) {
      chain.status = ChainStatus::Stabilized;
      return chain;
    }
    previous = current;
  }
  chain.status = ChainStatus::Inconclusive;
  return chain;
}

Minimality minimality(const CRManifold& manifold, const Point& p, std::size_t j_max, const EngineConfig& config) {
  Minimality out;
  out.chain = segre_sets(manifold, p, j_max, config);
  out.status = out.chain.status;
  out.minimal = out.status == ChainStatus::Minimal;
  out.j0 = out.chain.j0;
  return out;
}

}  // namespace segrekit
