#include "segrekit/sampling.hpp"

#include <algorithm>

#include "segrekit/errors.hpp"
#include "segrekit/solve.hpp"

namespace segrekit {

namespace {

// p(base + t * dir) as a univariate polynomial, with conj slots either following
// the line (real t) or frozen (complex line in Q_w).
UniPoly restrict_to_line(const Poly& p, const CRManifold& m, const Point& base, const Point& dir, bool real_line) {
  static const TablePtr t_table = VarTable::make({{"t", VarKind::Parameter, std::nullopt}});
  std::map<std::string, Poly> bind;
  Poly t = Poly::variable(t_table, 0);
  const std::size_t n = m.n();
  for (std::size_t k = 0; k < n; ++k) {
    bind.emplace(m.table()->name(k), Poly::constant(t_table, base[k]) + t.scaled(dir[k]));
    if (real_line) {
      bind.emplace(m.table()->name(n + k), Poly::constant(t_table, base[k].conj()) + t.scaled(dir[k].conj()));
    }
  }
  return to_univariate(substitute(p, bind), 0);
}

Point along(const Point& base, const Point& dir, const GaussianRational& t) {
  Point out = base;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += t * dir[k];
  return out;
}

bool contains_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

// Nonzero roots of q(t) with q(0) = 0 removed.
std::vector<GaussianRational> other_roots(UniPoly q) {
  trim(q);
  if (q.empty()) return {};
  while (!q.empty() && q.front().is_zero()) q.erase(q.begin());
  if (uni_degree(q) <= 0) return {};
  auto rs = exact_roots(q);
  return rs.roots;
}

}  // namespace

GaussianRational random_gaussian(Rng& rng, long span) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

GaussianRational unit_gaussian(const mpq_class& t) {
  mpq_class d = 1 + t * t;
  return GaussianRational(mpq_class((1 - t * t) / d), mpq_class(2 * t / d));
}

GaussianRational random_unit(Rng& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 12);
  return unit_gaussian(mpq_class(num(rng), den(rng)));
}

bool hermitian_diagonal(const CRManifold& manifold) {
  const std::size_t n = manifold.n();
  for (const auto& r : manifold.rho()) {
    for (const auto& t : r.terms()) {
      for (std::size_t k = 0; k < n; ++k) {
        if (t.mono[k] != t.mono[n + k]) return false;
      }
    }
  }
  return true;
}

std::vector<Point> sample_manifold_points(const CRManifold& manifold, const std::vector<Point>& base,
                                          std::size_t count, Rng& rng) {
  std::vector<Point> pool;
  for (const auto& p : base) {
    if (!manifold.contains(p)) throw DomainError("base point is not on the manifold");
    if (!contains_point(pool, p)) pool.push_back(p);
  }
  if (pool.empty()) throw DomainError("sampling needs at least one rational point of the manifold");
  const bool diagonal = hermitian_diagonal(manifold);
  std::vector<Point> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 50 * count + 100) {
    ++attempts;
    const Point& from = pool[rng() % pool.size()];
    Point cand;
    if (diagonal && (rng() % 2 == 0 || manifold.d() != 1)) {
      cand = from;
      for (auto& c : cand) c *= random_unit(rng);
    } else if (manifold.d() == 1) {
      Point dir(manifold.n());
      for (auto& c : dir) c = random_gaussian(rng, 3);
      UniPoly line = restrict_to_line(manifold.rho()[0], manifold, from, dir, true);
      if (line.empty()) {
        // The whole real line lies in M.
        cand = along(from, dir, GaussianRational(mpq_class(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5))));
        if (!manifold.contains(cand) || contains_point(out, cand)) continue;
        out.push_back(cand);
        if (pool.size() < 64) pool.push_back(cand);
        continue;
      }
      auto roots = other_roots(line);
      std::vector<GaussianRational> real_roots;
      for (const auto& r : roots) {
        if (r.is_real()) real_roots.push_back(r);
      }
      if (real_roots.empty()) continue;
      cand = along(from, dir, real_roots[rng() % real_roots.size()]);
    } else {
      continue;
    }
    if (!manifold.contains(cand) || contains_point(out, cand)) continue;
    out.push_back(cand);
    if (pool.size() < 64) pool.push_back(cand);
  }
  return out;
}

std::vector<Poly> segre_equations(const CRManifold& manifold, const Point& w) {
  std::map<std::string, GaussianRational> frozen;
  for (std::size_t k = 0; k < manifold.n(); ++k) frozen[manifold.table()->name(manifold.n() + k)] = w[k].conj();
  std::vector<Poly> out;
  for (const auto& r : manifold.rho()) out.push_back(substitute_values(r, frozen));
  return out;
}

std::vector<Point> sample_segre_points(const CRManifold& manifold, const Point& w, std::size_t count, Rng& rng) {
  if (manifold.d() != 1) throw DomainError("Segre point sampling is implemented for hypersurfaces");
  const std::size_t n = manifold.n();
  Poly g = segre_equations(manifold, w)[0];
  auto on_q = [&](const Point& z) { return eval(g, manifold.bind(z)).is_zero(); };
  std::vector<Point> out;
  if (manifold.contains(w)) out.push_back(w);
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 60 * count + 200) {
    ++attempts;
    Point cand;
    if (!out.empty() && rng() % 3 != 0) {
      const Point& from = out[rng() % out.size()];
      Point dir(n);
      for (auto& c : dir) c = random_gaussian(rng, 3);
      auto roots = other_roots(restrict_to_line(g, manifold, from, dir, false));
      if (roots.empty()) continue;
      cand = along(from, dir, roots[rng() % roots.size()]);
    } else {
      Point base(n);
      for (auto& c : base) c = random_gaussian(rng, 4);
      Point dir(n, GaussianRational(0));
      dir[rng() % n] = 1;
      UniPoly q = restrict_to_line(g, manifold, base, dir, false);
      if (uni_degree(q) <= 0) continue;
      auto rs = exact_roots(q);
      if (rs.roots.empty()) continue;
      cand = along(base, dir, rs.roots[rng() % rs.roots.size()]);
    }
    if (!on_q(cand) || contains_point(out, cand)) continue;
    out.push_back(cand);
  }
  if (out.size() > count) out.resize(count);
  return out;
}

std::vector<std::pair<Point, Point>> sample_segre_pairs(const CRManifold& manifold, const std::vector<Point>& base,
                                                        std::size_t count, Rng& rng) {
  auto ws = sample_manifold_points(manifold, base, std::max<std::size_t>(4, count / 8), rng);
  for (const auto& b : base) ws.push_back(b);
  const bool diagonal = hermitian_diagonal(manifold);
  std::vector<std::pair<Point, Point>> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 4 * count + 20) {
    ++attempts;
    const Point& w = ws[rng() % ws.size()];
    auto zs = sample_segre_points(manifold, w, 4, rng);
    for (const auto& z : zs) {
      if (out.size() >= count) break;
      if (diagonal && rng() % 2 == 0) {
        Point z2 = z, w2 = w;
        for (std::size_t k = 0; k < z.size(); ++k) {
          GaussianRational l = random_gaussian(rng, 4);
          if (l.is_zero()) l = 2;
          z2[k] = z[k] * l;
          w2[k] = w[k] / l.conj();
        }
        out.emplace_back(z2, w2);
      } else {
        out.emplace_back(z, w);
      }
    }
  }
  return out;
}

}  // namespace segrekit
