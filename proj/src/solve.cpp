#include "segrekit/solve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "segrekit/errors.hpp"

namespace segrekit {

namespace {

using cd = std::complex<double>;

UniPoly monic(UniPoly p) {
  trim(p);
  if (p.empty()) return p;
  GaussianRational inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

// Remainder of a modulo b.
UniPoly uni_mod(UniPoly a, const UniPoly& b) {
  trim(a);
  const int db = uni_degree(b);
  GaussianRational lead_inv = b.back().inverse();
  while (uni_degree(a) >= db) {
    const int shift = uni_degree(a) - db;
    GaussianRational f = a.back() * lead_inv;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= f * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

// Closest rational with denominator at most `limit` (continued fractions).
mpq_class rationalize(double x, long limit = 1000000) {
  if (!std::isfinite(x)) return 0;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double v = x;
  for (int iter = 0; iter < 40; ++iter) {
    double a = std::floor(v);
    if (std::fabs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0;
    long k2 = ai * k1 + k0;
    if (k2 > limit || k2 <= 0) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double frac = v - a;
    if (std::fabs(frac) < 1e-12) break;
    v = 1.0 / frac;
  }
  mpq_class out(h1, k1 == 0 ? 1 : k1);
  out.canonicalize();
  return out;
}

std::vector<cd> numeric_roots(const UniPoly& p) {
  const int n = uni_degree(p);
  std::vector<cd> coeff;
  for (const auto& c : p) coeff.emplace_back(c.re().get_d(), c.im().get_d());
  for (auto& c : coeff) c /= coeff.back();
  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(cd(0.4, 0.9), k);
  auto eval_c = [&](cd x) {
    cd acc = 0;
    for (std::size_t k = coeff.size(); k-- > 0;) acc = acc * x + coeff[k];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double change = 0;
    for (int i = 0; i < n; ++i) {
      cd denom = 1;
      for (int j = 0; j < n; ++j) {
        if (i != j) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      }
      if (std::abs(denom) < 1e-300) denom = 1e-12;
      cd step = eval_c(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-14) break;
  }
  return z;
}

void add_root(std::vector<GaussianRational>& roots, const GaussianRational& r) {
  if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
}

// Roots of a squarefree polynomial with nonzero constant term.
void roots_of_squarefree(UniPoly p, std::vector<GaussianRational>& roots) {
  p = monic(p);
  const int n = uni_degree(p);
  if (n <= 0) return;
  if (n == 1) {
    add_root(roots, -p[0]);
    return;
  }
  if (n == 2) {
    GaussianRational disc = p[1] * p[1] - GaussianRational(4) * p[0];
    if (auto s = disc.sqrt()) {
      add_root(roots, (-p[1] + *s) / GaussianRational(2));
      add_root(roots, (-p[1] - *s) / GaussianRational(2));
      return;
    }
  }
  bool binomial = true;
  for (int k = 1; k < n; ++k) binomial = binomial && p[static_cast<std::size_t>(k)].is_zero();
  if (binomial) {
    // t^n = c: take square roots while n is even, then test the unit multiples.
    GaussianRational c = -p[0];
    int e = n;
    std::optional<GaussianRational> r = c;
    while (e % 2 == 0 && r) {
      r = r->sqrt();
      e /= 2;
    }
    if (r && e == 1) {
      for (const GaussianRational& u : {GaussianRational(1), GaussianRational(-1), GaussianRational::i(), -GaussianRational::i()}) {
        GaussianRational cand = *r * u;
        if (uni_eval(p, cand).is_zero()) add_root(roots, cand);
      }
      return;
    }
  }
  // Numeric candidates, kept only when they are exact roots.
  std::vector<GaussianRational> found;
  for (const cd& z : numeric_roots(p)) {
    GaussianRational cand(rationalize(z.real()), rationalize(z.imag()));
    if (uni_eval(p, cand).is_zero()) add_root(found, cand);
  }
  for (const auto& r : found) add_root(roots, r);
  // Deflate by the linear factors found and retry the remaining low-degree part.
  if (!found.empty() && static_cast<int>(found.size()) < n) {
    UniPoly rest = p;
    for (const auto& r : found) rest = uni_divide(rest, {-r, GaussianRational(1)});
    if (uni_degree(rest) <= 2) roots_of_squarefree(rest, roots);
  }
}

}  // namespace

void trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly to_univariate(const Poly& p, std::size_t var) {
  UniPoly out;
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      if (k != var && t.mono[k] != 0) throw DomainError("polynomial is not univariate");
    }
    std::size_t e = t.mono[var];
    if (out.size() <= e) out.resize(e + 1, GaussianRational(0));
    out[e] += t.coeff;
  }
  trim(out);
  return out;
}

int uni_degree(const UniPoly& p) {
  for (std::size_t k = p.size(); k-- > 0;) {
    if (!p[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

GaussianRational uni_eval(const UniPoly& p, const GaussianRational& t) {
  GaussianRational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
  return acc;
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * GaussianRational(static_cast<long>(k)));
  trim(out);
  return out;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UniPoly uni_divide(const UniPoly& a, const UniPoly& b) {
  UniPoly rem = a;
  trim(rem);
  const int db = uni_degree(b);
  if (db < 0) throw DomainError("division by the zero polynomial");
  if (uni_degree(rem) < db) {
    if (rem.empty()) return {};
    throw DomainError("inexact univariate division");
  }
  UniPoly q(static_cast<std::size_t>(uni_degree(rem) - db + 1), GaussianRational(0));
  GaussianRational lead_inv = b[static_cast<std::size_t>(db)].inverse();
  while (uni_degree(rem) >= db) {
    const int shift = uni_degree(rem) - db;
    GaussianRational f = rem[static_cast<std::size_t>(uni_degree(rem))] * lead_inv;
    q[static_cast<std::size_t>(shift)] = f;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(k + shift)] -= f * b[static_cast<std::size_t>(k)];
    trim(rem);
  }
  if (!rem.empty()) throw DomainError("inexact univariate division");
  trim(q);
  return q;
}

UniPoly uni_squarefree(const UniPoly& p) {
  UniPoly m = monic(p);
  if (uni_degree(m) <= 0) return m;
  return monic(uni_divide(m, uni_gcd(m, uni_derivative(m))));
}

RootSet exact_roots(const UniPoly& p_in) {
  UniPoly p = p_in;
  trim(p);
  RootSet out;
  if (p.empty()) throw DomainError("roots of the zero polynomial");
  UniPoly sf = uni_squarefree(p);
  if (uni_degree(sf) <= 0) {
    out.complete = true;
    return out;
  }
  if (sf[0].is_zero()) {
    out.roots.push_back(0);
    sf.erase(sf.begin());
  }
  roots_of_squarefree(sf, out.roots);
  out.complete = static_cast<int>(out.roots.size()) == uni_degree(uni_squarefree(p));
  return out;
}

UniPoly univariate_eliminant(const Ideal& ideal, std::size_t var, const EngineConfig& config) {
  const auto& name = ideal.table()->name(var);
  Ideal e = eliminate(ideal, {name}, config);
  if (e.basis().empty()) throw DomainError("ideal is not zero-dimensional");
  return to_univariate(e.basis().front(), 0);
}

std::uint64_t radical_degree(const Ideal& ideal, const EngineConfig& config) {
  if (dimension(ideal, config) != 0) {
    if (dimension(ideal, config) < 0) return 0;
    throw DomainError("radical degree requires a zero-dimensional ideal");
  }
  const TablePtr& table = ideal.table();
  std::vector<Poly> gens = ideal.generators();
  for (std::size_t k = 0; k < table->size(); ++k) {
    UniPoly g = uni_squarefree(univariate_eliminant(ideal, k, config));
    std::vector<Term> terms;
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (!g[e].is_zero()) terms.push_back({Monomial::variable(table->size(), k, static_cast<Exponent>(e)), g[e]});
    }
    gens.push_back(Poly::from_terms(table, std::move(terms)));
  }
  return degree_zero_dim(Ideal(table, std::move(gens)), config);
}

SolutionSet solve_zero_dim(const Ideal& ideal, const EngineConfig& config) {
  const TablePtr& table = ideal.table();
  const std::size_t n = table->size();
  Ideal lex = groebner_basis(Ideal(table, ideal.generators(), MonomialOrder::lex()), config);
  SolutionSet out;
  if (lex.basis().size() == 1 && lex.basis().front().is_constant()) {
    out.complete = true;
    return out;
  }
  if (dimension(lex, config) != 0) throw DomainError("solve requires a zero-dimensional ideal");
  // Elements grouped by their largest variable (lex leading variable).
  std::vector<std::vector<Poly>> by_var(n);
  for (const auto& g : lex.basis()) {
    std::size_t lead = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (g.involves(k)) {
        lead = k;
        break;
      }
    }
    if (lead < n) by_var[lead].push_back(g);
  }
  bool complete = true;
  std::vector<std::vector<GaussianRational>> partial{std::vector<GaussianRational>(n, GaussianRational(0))};
  for (std::size_t k = n; k-- > 0;) {
    std::vector<std::vector<GaussianRational>> next;
    for (const auto& sol : partial) {
      std::map<std::string, GaussianRational> values;
      for (std::size_t j = k + 1; j < n; ++j) values[table->name(j)] = sol[j];
      UniPoly g;
      for (const auto& f : by_var[k]) {
        UniPoly u = to_univariate(substitute_values(f, values), k);
        g = g.empty() ? u : uni_gcd(g, u);
      }
      if (by_var[k].empty()) throw DomainError("lex basis is not triangular");
      if (g.empty()) throw DomainError("positive-dimensional fiber in back-substitution");
      RootSet rs = exact_roots(g);
      complete = complete && rs.complete;
      for (const auto& r : rs.roots) {
        auto s = sol;
        s[k] = r;
        next.push_back(std::move(s));
      }
    }
    partial = std::move(next);
  }
  out.points = std::move(partial);
  out.complete = complete;
  return out;
}

}  // namespace segrekit
