#include <algorithm>
#include <set>
#include <sstream>

#include "segrekit/errors.hpp"
#include "segrekit/ideal.hpp"

namespace segrekit {

namespace {

// Terms sorted descending under one fixed monomial order.
using OrderedTerms = std::vector<Term>;

OrderedTerms to_ordered(const Poly& p, const MonomialOrder& order) {
  OrderedTerms out = p.terms();
  if (order.kind() != MonomialOrder::Kind::Grevlex) {
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  }
  return out;
}

Poly to_poly(const TablePtr& table, OrderedTerms terms) { return Poly::from_terms(table, std::move(terms)); }

void make_monic(OrderedTerms& p) {
  if (p.empty() || p.front().coeff.is_one()) return;
  GaussianRational inv = p.front().coeff.inverse();
  for (auto& t : p) t.coeff *= inv;
}

std::uint64_t max_degree(const OrderedTerms& p) {
  std::uint64_t d = 0;
  for (const auto& t : p) d = std::max(d, t.mono.degree());
  return d;
}

// p[head+1..] - c * m * g[1..]; the leading terms are assumed to cancel.
OrderedTerms cancel_lead(const OrderedTerms& p, std::size_t head, const OrderedTerms& g, const Monomial& m,
                         const GaussianRational& c, const MonomialOrder& order) {
  OrderedTerms out;
  out.reserve(p.size() - head + g.size());
  std::size_t a = head + 1;
  std::size_t b = 1;
  while (a < p.size() || b < g.size()) {
    if (b >= g.size()) {
      out.push_back(p[a++]);
      continue;
    }
    Monomial gm = g[b].mono * m;
    if (a >= p.size()) {
      out.push_back({std::move(gm), -(c * g[b].coeff)});
      ++b;
      continue;
    }
    auto cmp = order.compare(p[a].mono, gm);
    if (cmp > 0) {
      out.push_back(p[a++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -(c * g[b].coeff)});
      ++b;
    } else {
      GaussianRational v = p[a].coeff - c * g[b].coeff;
      if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
      ++a;
      ++b;
    }
  }
  return out;
}

// Full reduction of f by monic divisors (tail terms reduced as well).
OrderedTerms reduce(OrderedTerms f, const std::vector<const OrderedTerms*>& divisors, const MonomialOrder& order) {
  OrderedTerms rem;
  std::size_t head = 0;
  while (head < f.size()) {
    const Term& lt = f[head];
    const OrderedTerms* hit = nullptr;
    for (const auto* g : divisors) {
      if (!g->empty() && g->front().mono.divides(lt.mono)) {
        hit = g;
        break;
      }
    }
    if (hit == nullptr) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    Monomial m = lt.mono / hit->front().mono;
    GaussianRational c = lt.coeff / hit->front().coeff;
    f = cancel_lead(f, head, *hit, m, c, order);
    head = 0;
  }
  return rem;
}

OrderedTerms s_polynomial(const OrderedTerms& f, const OrderedTerms& g, const MonomialOrder& order) {
  Monomial l = f.front().mono.lcm(g.front().mono);
  Monomial mf = l / f.front().mono;
  Monomial mg = l / g.front().mono;
  OrderedTerms scaled_f;
  scaled_f.reserve(f.size());
  GaussianRational cf = f.front().coeff.inverse();
  for (const auto& t : f) scaled_f.push_back({t.mono * mf, t.coeff * cf});
  GaussianRational cg = g.front().coeff.inverse();
  return cancel_lead(scaled_f, 0, g, mg, cg, order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
};

std::vector<OrderedTerms> buchberger(std::vector<OrderedTerms> input, const MonomialOrder& order,
                                     const EngineConfig& config, GroebnerStats& stats) {
  std::vector<OrderedTerms> basis;
  std::vector<std::uint64_t> sugar;
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](OrderedTerms h, std::uint64_t s) {
    make_monic(h);
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = basis[i].front().mono.lcm(h.front().mono);
      std::uint64_t si = sugar[i] + l.degree() - basis[i].front().mono.degree();
      std::uint64_t sk = s + l.degree() - h.front().mono.degree();
      queue.push_back({i, k, std::move(l), std::max(si, sk)});
      pending.insert({i, k});
      ++stats.pairs_created;
    }
    if (stats.pairs_created > config.max_pairs) {
      throw ResourceLimitError("Groebner pair limit exceeded (" + stats.to_string() + ")");
    }
    stats.degree_peak = std::max(stats.degree_peak, max_degree(h));
    basis.push_back(std::move(h));
    sugar.push_back(s);
    stats.basis_peak = std::max(stats.basis_peak, basis.size());
    if (basis.size() > config.max_basis) {
      throw ResourceLimitError("Groebner basis size limit " + std::to_string(config.max_basis) + " exceeded (" +
                               stats.to_string() + ")");
    }
  };

  for (auto& f : input) {
    if (f.empty()) continue;
    if (max_degree(f) > config.max_degree) {
      throw ResourceLimitError("input degree exceeds limit " + std::to_string(config.max_degree));
    }
    std::uint64_t s = max_degree(f);
    add_element(std::move(f), s);
  }

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      auto cmp = order.compare(a.lcm, b.lcm);
      if (cmp != 0) return cmp < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pair = std::move(*best);
    queue.erase(best);
    pending.erase({pair.i, pair.j});

    const Monomial& lm_i = basis[pair.i].front().mono;
    const Monomial& lm_j = basis[pair.j].front().mono;
    if (lm_i.coprime(lm_j)) {
      ++stats.coprime_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].front().mono.divides(pair.lcm)) continue;
      auto ik = std::minmax(pair.i, k);
      auto jk = std::minmax(pair.j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) chain = true;
    }
    if (chain) {
      ++stats.chain_skips;
      continue;
    }

    ++stats.pairs_reduced;
    OrderedTerms s = s_polynomial(basis[pair.i], basis[pair.j], order);
    std::vector<const OrderedTerms*> divisors;
    divisors.reserve(basis.size());
    for (const auto& g : basis) divisors.push_back(&g);
    OrderedTerms h = reduce(std::move(s), divisors, order);
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    if (max_degree(h) > config.max_degree) {
      throw ResourceLimitError("Groebner degree limit " + std::to_string(config.max_degree) + " exceeded (" +
                               stats.to_string() + ")");
    }
    if (h.front().mono.is_one()) {
      return {OrderedTerms{{h.front().mono, GaussianRational(1)}}};
    }
    add_element(std::move(h), pair.sugar);
  }
  return basis;
}

std::vector<OrderedTerms> reduce_basis(std::vector<OrderedTerms> basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(),
            [&](const OrderedTerms& a, const OrderedTerms& b) { return order.compare(a.front().mono, b.front().mono) < 0; });
  std::vector<OrderedTerms> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const OrderedTerms& h) { return h.front().mono.divides(g.front().mono); });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<OrderedTerms> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const OrderedTerms*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != k) others.push_back(&minimal[j]);
    }
    OrderedTerms r = reduce(minimal[k], others, order);
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  return reduced;
}

std::vector<OrderedTerms> ordered_basis(const Ideal& ideal) {
  std::vector<OrderedTerms> out;
  for (const auto& g : ideal.basis()) out.push_back(to_ordered(g, ideal.order()));
  return out;
}

const Ideal& with_basis_ref(const Ideal& ideal, std::optional<Ideal>& holder, const EngineConfig& config) {
  if (ideal.has_basis()) return ideal;
  holder = groebner_basis(ideal, config);
  return *holder;
}

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] != 0) mask |= (std::uint64_t{1} << k);
  }
  return mask;
}

void best_independent(std::size_t var, std::size_t n, std::uint64_t chosen, int count,
                      const std::vector<std::uint64_t>& supports, int& best) {
  if (count + static_cast<int>(n - var) <= best) return;
  if (var == n) {
    best = count;
    return;
  }
  std::uint64_t with = chosen | (std::uint64_t{1} << var);
  bool ok = std::all_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~with) != 0; });
  if (ok) best_independent(var + 1, n, with, count + 1, supports, best);
  best_independent(var + 1, n, chosen, count, supports, best);
}

}  // namespace

std::string GroebnerStats::to_string() const {
  std::ostringstream os;
  os << "pairs=" << pairs_created << " reduced=" << pairs_reduced << " zero=" << zero_reductions
     << " coprime_skips=" << coprime_skips << " chain_skips=" << chain_skips << " basis_peak=" << basis_peak
     << " degree_peak=" << degree_peak;
  return os.str();
}

Ideal::Ideal(TablePtr table, std::vector<Poly> generators, MonomialOrder order)
    : table_(std::move(table)), generators_(std::move(generators)), order_(std::move(order)) {
  for (auto& g : generators_) {
    if (!same_table(g.table(), table_)) throw InputError("ideal generator over a different table");
  }
  if (order_.kind() == MonomialOrder::Kind::Block && order_.first_block().size() != table_->size()) {
    throw InputError("block order mask does not match the table");
  }
}

const std::vector<Poly>& Ideal::basis() const {
  if (!basis_) throw DomainError("ideal has no Groebner basis attached");
  return *basis_;
}

Ideal Ideal::with_basis(std::vector<Poly> basis) const {
  Ideal out = *this;
  out.basis_ = std::move(basis);
  return out;
}

Ideal Ideal::with_order(MonomialOrder order) const { return Ideal(table_, generators_, std::move(order)); }

bool Ideal::is_zero_ideal() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::string Ideal::to_string() const {
  std::string out = "<";
  const auto& polys = basis_ ? *basis_ : generators_;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (k) out += ", ";
    out += polys[k].to_string();
  }
  return out + ">";
}

Monomial leading_monomial(const Poly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading monomial of zero");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return best->mono;
}

GaussianRational leading_coefficient(const Poly& p, const MonomialOrder& order) {
  Monomial m = leading_monomial(p, order);
  for (const auto& t : p.terms()) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Ideal groebner_basis(const Ideal& ideal, const EngineConfig& config, GroebnerStats* stats) {
  if (ideal.has_basis()) return ideal;
  GroebnerStats local;
  std::vector<OrderedTerms> input;
  for (const auto& g : ideal.generators()) input.push_back(to_ordered(g, ideal.order()));
  auto raw = buchberger(std::move(input), ideal.order(), config, local);
  auto reduced = reduce_basis(std::move(raw), ideal.order());
  std::vector<Poly> polys;
  polys.reserve(reduced.size());
  for (auto& r : reduced) polys.push_back(to_poly(ideal.table(), std::move(r)));
  if (stats) *stats = local;
  return ideal.with_basis(std::move(polys));
}

Poly normal_form(const Poly& p, const Ideal& ideal, const EngineConfig& config) {
  if (!same_table(p.table(), ideal.table())) throw InputError("normal_form: polynomial and ideal tables differ");
  std::optional<Ideal> holder;
  const Ideal& with = with_basis_ref(ideal, holder, config);
  auto basis = ordered_basis(with);
  std::vector<const OrderedTerms*> divisors;
  for (const auto& g : basis) divisors.push_back(&g);
  return to_poly(p.table(), reduce(to_ordered(p, with.order()), divisors, with.order()));
}

bool member(const Poly& p, const Ideal& ideal, const EngineConfig& config) {
  return normal_form(p, ideal, config).is_zero();
}

bool is_unit_ideal(const Ideal& ideal, const EngineConfig& config) {
  std::optional<Ideal> holder;
  const Ideal& with = with_basis_ref(ideal, holder, config);
  return with.basis().size() == 1 && with.basis().front().is_constant() && !with.basis().front().is_zero();
}

bool radical_member(const Poly& p, const Ideal& ideal, const EngineConfig& config) {
  if (!same_table(p.table(), ideal.table())) throw InputError("radical_member: polynomial and ideal tables differ");
  if (p.is_zero()) return true;
  const TablePtr& table = ideal.table();
  std::string t = table->fresh_name("t");
  TablePtr ext = table->extended({VarInfo{t, VarKind::Parameter, std::nullopt}});
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebase(ext));
  Poly tp = Poly::variable(ext, t) * p.rebase(ext);
  gens.push_back(Poly::constant(ext, 1) - tp);
  return is_unit_ideal(Ideal(ext, std::move(gens)), config);
}

bool ideals_equal(const Ideal& a, const Ideal& b, const EngineConfig& config) {
  if (!same_table(a.table(), b.table())) return false;
  auto ga = groebner_basis(a.order() == MonomialOrder::grevlex() ? a : a.with_order(MonomialOrder::grevlex()), config);
  auto gb = groebner_basis(b.order() == MonomialOrder::grevlex() ? b : b.with_order(MonomialOrder::grevlex()), config);
  return ga.basis() == gb.basis();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner, const EngineConfig& config) {
  std::optional<Ideal> holder;
  const Ideal& with = with_basis_ref(outer, holder, config);
  for (const auto& g : inner.generators()) {
    if (!member(g.rebase(outer.table()), with, config)) return false;
  }
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const EngineConfig& config) {
  const TablePtr& table = ideal.table();
  std::vector<bool> elim(table->size(), true);
  for (const auto& name : keep) elim[table->require(name)] = false;
  TablePtr sub = table->subtable(keep);
  Ideal gb = groebner_basis(Ideal(table, ideal.generators(), MonomialOrder::block(elim)), config);
  std::vector<Poly> kept;
  for (const auto& g : gb.basis()) {
    bool pure = true;
    for (std::size_t k = 0; k < table->size() && pure; ++k) {
      if (elim[k] && g.involves(k)) pure = false;
    }
    if (pure) kept.push_back(g.rebase(sub));
  }
  // Under a block order the surviving elements form a reduced grevlex basis of the eliminant.
  return Ideal(sub, kept).with_basis(kept);
}

Ideal saturate(const Ideal& ideal, const Poly& h, const EngineConfig& config) {
  if (h.is_constant()) {
    if (h.is_zero()) throw DomainError("saturation by the zero polynomial");
    return ideal;
  }
  const TablePtr& table = ideal.table();
  std::string t = table->fresh_name("t");
  TablePtr ext = table->extended({VarInfo{t, VarKind::Parameter, std::nullopt}});
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebase(ext));
  gens.push_back(Poly::constant(ext, 1) - Poly::variable(ext, t) * h.rebase(ext));
  Ideal elim = eliminate(Ideal(ext, std::move(gens)), table->names(), config);
  std::vector<Poly> basis;
  for (const auto& g : elim.basis()) basis.push_back(g.rebase(table));
  return Ideal(table, basis).with_basis(basis);
}

int dimension(const Ideal& ideal, const EngineConfig& config) {
  std::optional<Ideal> holder;
  const Ideal& with = with_basis_ref(ideal, holder, config);
  const std::size_t n = ideal.table()->size();
  if (n > 60) throw ResourceLimitError("dimension: too many variables");
  std::vector<std::uint64_t> supports;
  for (const auto& g : with.basis()) {
    Monomial lm = leading_monomial(g, with.order());
    if (lm.is_one()) return -1;
    supports.push_back(support_mask(lm));
  }
  int best = -1;
  best_independent(0, n, 0, 0, supports, best);
  return best;
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, const EngineConfig& config) {
  std::optional<Ideal> holder;
  const Ideal& with = with_basis_ref(ideal, holder, config);
  if (dimension(with, config) != 0) throw DomainError("standard monomials requested for a non-zero-dimensional ideal");
  std::vector<Monomial> lms;
  for (const auto& g : with.basis()) lms.push_back(leading_monomial(g, with.order()));
  const std::size_t n = ideal.table()->size();
  std::set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (std::size_t k = 0; k < n; ++k) {
        Monomial cand = m;
        ++cand[k];
        if (seen.count(cand)) continue;
        bool divisible = std::any_of(lms.begin(), lms.end(), [&](const Monomial& lm) { return lm.divides(cand); });
        if (divisible) continue;
        seen.insert(cand);
        next.push_back(std::move(cand));
        if (seen.size() > 1000000) throw ResourceLimitError("standard monomial enumeration too large");
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return with.order().compare(a, b) < 0; });
  return out;
}

std::uint64_t degree_zero_dim(const Ideal& ideal, const EngineConfig& config) {
  std::optional<Ideal> holder;
  const Ideal& with = with_basis_ref(ideal, holder, config);
  int dim = dimension(with, config);
  if (dim < 0) return 0;
  if (dim > 0) throw DomainError("degree requested for an ideal of dimension " + std::to_string(dim));
  return standard_monomials(with, config).size();
}

bool satisfies_buchberger_criterion(const Ideal& ideal) {
  auto basis = ordered_basis(ideal);
  std::vector<const OrderedTerms*> divisors;
  for (const auto& g : basis) divisors.push_back(&g);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j], ideal.order()), divisors, ideal.order()).empty()) return false;
    }
  }
  return true;
}

bool is_reduced_basis(const Ideal& ideal) {
  auto basis = ordered_basis(ideal);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty() || !basis[i].front().coeff.is_one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[j]) {
        if (basis[i].front().mono.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

Ideal specialize(const Ideal& ideal, const std::map<std::string, GaussianRational>& values, const TablePtr& target) {
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) {
    Poly s = substitute_values(g, values).rebase(target);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  return Ideal(target, std::move(gens));
}

std::vector<Poly> block_coefficients(const Poly& p, const std::vector<bool>& block) {
  std::vector<Poly> out;
  auto groups = coefficients_in(p, block);
  // Descending in the block variables for a deterministic listing.
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) out.push_back(it->second);
  return out;
}

ParametricNormalForm parametric_normal_form(const Poly& p, const Ideal& ideal, const std::vector<std::string>& params,
                                            const EngineConfig& config) {
  const TablePtr& table = ideal.table();
  if (!same_table(p.table(), table)) throw InputError("parametric_normal_form: table mismatch");
  std::vector<bool> is_param = variable_mask(*table, params);
  std::vector<bool> main(table->size());
  for (std::size_t k = 0; k < table->size(); ++k) main[k] = !is_param[k];

  Ideal gb = groebner_basis(Ideal(table, ideal.generators(), MonomialOrder::block(main)), config);

  struct Divisor {
    Monomial lead;  // main-variable part
    Poly lc;        // parameter polynomial
    const Poly* poly;
  };
  auto main_lead = [&](const Poly& f) {
    auto groups = coefficients_in(f, main);
    auto best = groups.begin();
    for (auto it = groups.begin(); it != groups.end(); ++it) {
      if (grevlex_compare(it->first, best->first) > 0) best = it;
    }
    return *best;
  };

  std::vector<Poly> excluded;
  auto record = [&](const Poly& lc) {
    if (lc.is_constant()) return;
    if (std::find(excluded.begin(), excluded.end(), lc) == excluded.end()) excluded.push_back(lc);
  };

  std::vector<Divisor> divisors;
  for (const auto& g : gb.basis()) {
    auto [lead, lc] = main_lead(g);
    if (lead.is_one()) {
      // A pure parameter relation: the ideal is the unit ideal off its zero set.
      record(g);
      return {Poly(table), g, excluded};
    }
    divisors.push_back({lead, lc, &g});
  }

  Poly rest = p;
  Poly remainder(table);
  Poly multiplier = Poly::constant(table, 1);
  while (!rest.is_zero()) {
    auto [alpha, c] = main_lead(rest);
    const Divisor* hit = nullptr;
    for (const auto& d : divisors) {
      if (d.lead.divides(alpha)) {
        hit = &d;
        break;
      }
    }
    Monomial shift(table->size());
    Poly lead_part = Poly::monomial(table, alpha) * c;
    if (hit == nullptr) {
      remainder += lead_part;
      rest -= lead_part;
      continue;
    }
    record(hit->lc);
    shift = alpha / hit->lead;
    Poly shift_poly = Poly::monomial(table, shift);
    if (auto q = divide_exact(c, hit->lc)) {
      rest -= (*q) * shift_poly * (*hit->poly);
    } else {
      rest = hit->lc * rest - c * shift_poly * (*hit->poly);
      remainder = hit->lc * remainder;
      multiplier = hit->lc * multiplier;
    }
    if (rest.total_degree() > config.max_degree * 4) {
      throw ResourceLimitError("parametric reduction degree blow-up");
    }
  }
  if (multiplier.is_constant() && !multiplier.constant_term().is_one()) {
    GaussianRational inv = multiplier.constant_term().inverse();
    remainder = remainder.scaled(inv);
    multiplier = Poly::constant(table, 1);
  }
  return {remainder, multiplier, excluded};
}

}  // namespace segrekit
