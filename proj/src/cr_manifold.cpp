#include "segrekit/cr_manifold.hpp"

#include <algorithm>

#include "segrekit/errors.hpp"

namespace segrekit {

namespace {

GaussianRational value_at(const Poly& p, const CRManifold& manifold, const Point& point) {
  return eval(p, manifold.bind(point));
}

void require_point(const CRManifold& manifold, const Point& p) {
  if (p.size() != manifold.n()) {
    throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                     std::to_string(manifold.n()));
  }
}

}  // namespace

std::string describe(const Chart& chart) {
  if (chart.kind == Chart::Kind::Projective) {
    return "projective " + std::to_string(chart.index.value_or(0));
  }
  if (chart.index) return "affine (" + chart.homogenizing_name + " = 1)";
  return "affine";
}

CRManifold::CRManifold(std::vector<std::string> names, const std::vector<std::string>& rho_src, Chart chart)
    : table_(VarTable::complex(names)), chart_(std::move(chart)) {
  for (const auto& src : rho_src) rho_.push_back(parse_poly(src, table_));
}

CRManifold::CRManifold(TablePtr table, std::vector<Poly> rho, Chart chart)
    : table_(std::move(table)), rho_(std::move(rho)), chart_(std::move(chart)) {
  const std::size_t n = table_->size() / 2;
  if (table_->size() != 2 * n) throw InputError("manifold table must be [z.., ~z..]");
  for (std::size_t k = 0; k < n; ++k) {
    if (table_->partner(k) != n + k) throw InputError("manifold table must pair z_k with ~z_k");
  }
  for (const auto& r : rho_) {
    if (!same_table(r.table(), table_)) throw InputError("defining polynomial over a different table");
  }
}

std::vector<std::string> CRManifold::holomorphic_names() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n(); ++k) out.push_back(table_->name(k));
  return out;
}

std::vector<std::string> CRManifold::conjugate_names() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n(); ++k) out.push_back(table_->name(n() + k));
  return out;
}

std::map<std::string, GaussianRational> CRManifold::bind(const Point& p) const {
  require_point(*this, p);
  std::map<std::string, GaussianRational> out;
  for (std::size_t k = 0; k < n(); ++k) {
    out[table_->name(k)] = p[k];
    out[table_->name(n() + k)] = p[k].conj();
  }
  return out;
}

bool CRManifold::contains(const Point& p) const {
  auto values = bind(p);
  return std::all_of(rho_.begin(), rho_.end(), [&](const Poly& r) { return eval(r, values).is_zero(); });
}

bool check_reality(const CRManifold& manifold) {
  return std::all_of(manifold.rho().begin(), manifold.rho().end(), [](const Poly& r) { return is_real(r); });
}

std::size_t genericity_rank(const CRManifold& manifold, const Point& p) {
  if (!manifold.contains(p)) throw DomainError("point is not on the manifold");
  Matrix m;
  for (const auto& r : manifold.rho()) {
    Vector row;
    for (std::size_t k = 0; k < manifold.n(); ++k) row.push_back(value_at(r.derivative(manifold.n() + k), manifold, p));
    m.push_back(std::move(row));
  }
  return rank(m);
}

Matrix holomorphic_jacobian(const CRManifold& manifold, const Point& p) {
  Matrix m;
  for (const auto& r : manifold.rho()) {
    Vector row;
    for (std::size_t k = 0; k < manifold.n(); ++k) row.push_back(value_at(r.derivative(k), manifold, p));
    m.push_back(std::move(row));
  }
  return m;
}

Ideal polar(const CRManifold& manifold) {
  if (!check_reality(manifold)) throw DomainError("polar requires real defining polynomials");
  std::vector<std::string> names = manifold.holomorphic_names();
  std::vector<VarInfo> vars;
  const std::size_t n = manifold.n();
  std::vector<std::string> zeta;
  for (std::size_t k = 0; k < n; ++k) {
    std::string stem = "zeta" + std::to_string(k + 1);
    while (std::find(names.begin(), names.end(), stem) != names.end()) stem += "_";
    zeta.push_back(stem);
  }
  for (std::size_t k = 0; k < n; ++k) vars.push_back({names[k], VarKind::Holomorphic, n + k});
  for (std::size_t k = 0; k < n; ++k) vars.push_back({zeta[k], VarKind::Conjugate, k});
  TablePtr table = VarTable::make(std::move(vars));
  std::map<std::string, Poly> bindings;
  for (std::size_t k = 0; k < n; ++k) {
    bindings.emplace(names[k], Poly::variable(table, k));
    bindings.emplace(manifold.table()->name(n + k), Poly::variable(table, n + k));
  }
  std::vector<Poly> gens;
  for (const auto& r : manifold.rho()) gens.push_back(substitute(r, bindings));
  return Ideal(table, std::move(gens));
}

CRManifold homogenize(const CRManifold& manifold) {
  const Chart& chart = manifold.chart();
  if (chart.kind == Chart::Kind::Projective) throw DomainError("manifold is already projective");
  std::vector<std::string> names = manifold.holomorphic_names();
  std::size_t pos = chart.index.value_or(0);
  if (pos > names.size()) throw InputError("chart index out of range");
  std::string h = chart.homogenizing_name;
  if (h.empty()) {
    h = "z0";
    while (manifold.table()->index_of(h) || manifold.table()->index_of("~" + h)) h += "_";
  }
  names.insert(names.begin() + static_cast<std::ptrdiff_t>(pos), h);
  TablePtr table = VarTable::complex(names);
  const std::size_t n = manifold.n();
  const std::size_t n1 = n + 1;
  std::vector<Poly> out;
  for (const auto& r : manifold.rho()) {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (const auto& t : r.terms()) {
      std::uint64_t da = 0, db = 0;
      for (std::size_t k = 0; k < n; ++k) {
        da += t.mono[k];
        db += t.mono[n + k];
      }
      a = std::max(a, da);
      b = std::max(b, db);
    }
    std::vector<Term> terms;
    for (const auto& t : r.terms()) {
      Monomial m(2 * n1);
      std::uint64_t da = 0, db = 0;
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t slot = k < pos ? k : k + 1;
        m[slot] = t.mono[k];
        m[n1 + slot] = t.mono[n + k];
        da += t.mono[k];
        db += t.mono[n + k];
      }
      m[pos] = static_cast<Exponent>(a - da);
      m[n1 + pos] = static_cast<Exponent>(b - db);
      terms.push_back({std::move(m), t.coeff});
    }
    out.push_back(Poly::from_terms(table, std::move(terms)));
  }
  return CRManifold(table, std::move(out), Chart{Chart::Kind::Projective, pos, h});
}

CRManifold dehomogenize(const CRManifold& manifold, std::size_t index) {
  if (index >= manifold.n()) throw InputError("chart index " + std::to_string(index) + " out of range");
  std::vector<std::string> names = manifold.holomorphic_names();
  std::string h = names[index];
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  TablePtr table = VarTable::complex(names);
  std::map<std::string, GaussianRational> one{{h, 1}, {manifold.table()->name(manifold.n() + index), 1}};
  std::vector<Poly> out;
  for (const auto& r : manifold.rho()) out.push_back(substitute_values(r, one).rebase(table));
  return CRManifold(table, std::move(out), Chart{Chart::Kind::Affine, index, h});
}

LeviReport levi_signature(const CRManifold& manifold, const Point& p, const std::vector<mpq_class>& conormal) {
  if (conormal.size() != manifold.d()) throw InputError("conormal must have one entry per defining polynomial");
  if (std::all_of(conormal.begin(), conormal.end(), [](const mpq_class& c) { return sgn(c) == 0; })) {
    throw InputError("conormal must be nonzero");
  }
  if (genericity_rank(manifold, p) != manifold.d()) throw DomainError("manifold is not generic at the point");
  const std::size_t n = manifold.n();
  Matrix jac = holomorphic_jacobian(manifold, p);
  if (rank(jac) != manifold.d()) throw DomainError("degenerate basis of H_pM (rank drop)");
  auto basis = kernel(jac, n);

  Poly combo(manifold.table());
  for (std::size_t j = 0; j < manifold.d(); ++j) combo += manifold.rho()[j].scaled(GaussianRational(conormal[j]));
  auto values = manifold.bind(p);
  Matrix h(n, Vector(n));
  for (std::size_t a = 0; a < n; ++a) {
    Poly da = combo.derivative(a);
    for (std::size_t b = 0; b < n; ++b) h[a][b] = eval(da.derivative(n + b), values);
  }
  const std::size_t m = basis.size();
  Matrix g(m, Vector(m));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      GaussianRational acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (basis[k][a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) acc += basis[k][a] * h[a][b] * basis[l][b].conj();
      }
      g[k][l] = acc;
    }
  }
  return {p, conormal, hermitian_signature(g)};
}

std::vector<std::vector<mpq_class>> default_conormal_grid(std::size_t d) {
  std::vector<std::vector<mpq_class>> out;
  if (d == 1) return {{mpq_class(1)}, {mpq_class(-1)}};
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<mpq_class> v;
    std::size_t c = code;
    bool nonzero = false;
    for (std::size_t k = 0; k < d; ++k) {
      int e = static_cast<int>(c % 3) - 1;
      c /= 3;
      nonzero = nonzero || e != 0;
      v.emplace_back(e);
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

ProbeReport pseudoconcavity_probe(const CRManifold& manifold, const std::vector<Point>& points,
                                  const std::vector<std::vector<mpq_class>>& conormal_grid) {
  if (manifold.d() == 0) throw InputError("pseudoconcavity probe needs codimension at least 1");
  ProbeReport report;
  report.all_mixed = true;
  for (const auto& p : points) {
    for (const auto& c : conormal_grid) {
      LeviReport levi = levi_signature(manifold, p, c);
      bool mixed = levi.signature.positive > 0 && levi.signature.negative > 0;
      report.all_mixed = report.all_mixed && mixed;
      report.samples.push_back({p, c, levi.signature, mixed});
    }
  }
  if (report.samples.empty()) report.all_mixed = false;
  return report;
}

}  // namespace segrekit
