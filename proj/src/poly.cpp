#include "segrekit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "segrekit/errors.hpp"

namespace segrekit {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

void require_same_table(const Poly& a, const Poly& b) {
  if (!same_table(a.table(), b.table())) throw InputError("polynomials over different variable tables");
}

}  // namespace

Poly::Poly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw InputError("polynomial without a variable table");
}

Poly Poly::constant(TablePtr table, const GaussianRational& c) {
  Poly p(std::move(table));
  if (!c.is_zero()) p.terms_.push_back({Monomial(p.table_->size()), c});
  return p;
}

Poly Poly::variable(TablePtr table, std::size_t index) {
  Poly p(std::move(table));
  p.terms_.push_back({Monomial::variable(p.table_->size(), index), GaussianRational(1)});
  return p;
}

Poly Poly::variable(TablePtr table, const std::string& name) {
  std::size_t idx = table->require(name);
  return variable(std::move(table), idx);
}

Poly Poly::monomial(TablePtr table, Monomial m, GaussianRational c) {
  Poly p(std::move(table));
  if (m.size() != p.table_->size()) throw InputError("monomial length does not match table");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(TablePtr table, std::vector<Term> terms) {
  Poly p(std::move(table));
  std::unordered_map<Monomial, GaussianRational, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.mono.size() != p.table_->size()) throw InputError("monomial length does not match table");
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({m, c});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

GaussianRational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint64_t Poly::total_degree() const {
  // grevlex sorts by degree first, so the leading term has maximal degree.
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

Exponent Poly::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < table_->size(); ++k) {
    if (involves(k)) out.push_back(k);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_table(*this, o);
  if (&o == this) return *this = scaled(2);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end()) {
      merged.push_back(*b++);
    } else {
      auto cmp = grevlex_compare(a->mono, b->mono);
      if (cmp > 0) {
        merged.push_back(std::move(*a++));
      } else if (cmp < 0) {
        merged.push_back(*b++);
      } else {
        GaussianRational c = a->coeff + b->coeff;
        if (!c.is_zero()) merged.push_back({std::move(a->mono), std::move(c)});
        ++a;
        ++b;
      }
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_table(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.table_);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return Poly::from_terms(a.table_, std::move(products));
}

Poly Poly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return Poly(table_);
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::mul_term(const Monomial& m, const GaussianRational& c) const {
  if (c.is_zero()) return Poly(table_);
  Poly out = *this;
  // Multiplying by a monomial preserves any monomial order.
  for (auto& t : out.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(table_, 1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_table(a.table_, b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponent e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m[var] = e - 1;
    out.push_back({std::move(m), t.coeff * GaussianRational(static_cast<long>(e))});
  }
  return from_terms(table_, std::move(out));
}

Poly Poly::rebase(const TablePtr& target) const {
  if (same_table(table_, target)) {
    Poly out = *this;
    out.table_ = target;
    return out;
  }
  std::vector<std::optional<std::size_t>> map(table_->size());
  for (std::size_t k = 0; k < table_->size(); ++k) map[k] = target->index_of(table_->name(k));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t k = 0; k < table_->size(); ++k) {
      if (t.mono[k] == 0) continue;
      if (!map[k]) throw InputError("variable '" + table_->name(k) + "' is not available in the target table");
      m[*map[k]] = t.mono[k];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const auto& c = t.coeff;
    bool one = t.mono.is_one();
    std::string mono = one ? "" : t.mono.to_string(*table_);
    bool negative = false;
    std::string body;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class a = abs(c.re());
      if (one) {
        body = a.get_str();
      } else {
        body = (a == 1) ? mono : a.get_str() + "*" + mono;
      }
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      mpq_class b = abs(c.im());
      std::string coef = (b == 1) ? "i" : b.get_str() + "*i";
      body = one ? coef : coef + "*" + mono;
    } else {
      body = "(" + c.to_string() + ")" + (one ? "" : "*" + mono);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const TablePtr& table) : src_(src), table_(table) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 0, pos_ + 1); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(src_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected a variable name");
    return std::string(src_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '.') fail("decimal literals are not supported; use a/b");
      mpq_class value(std::string(src_.substr(start, pos_ - start)), 10);
      return Poly::constant(table_, GaussianRational(value));
    }
    if (c == '~') {
      ++pos_;
      std::size_t at = pos_;
      std::string name = identifier();
      // A variable literally named `~name` (e.g. a parameter) takes precedence.
      if (auto literal = table_->index_of("~" + name)) return Poly::variable(table_, *literal);
      auto idx = table_->index_of(name);
      if (!idx) {
        pos_ = at;
        fail("unknown variable '" + name + "'");
      }
      auto partner = table_->partner(*idx);
      if (!partner) {
        pos_ = at;
        fail("variable '" + name + "' has no conjugate partner");
      }
      return Poly::variable(table_, *partner);
    }
    std::size_t at = pos_;
    std::string name = identifier();
    if (name == "i") return Poly::constant(table_, GaussianRational::i());
    auto idx = table_->index_of(name);
    if (!idx) {
      pos_ = at;
      fail("unknown variable '" + name + "'");
    }
    return Poly::variable(table_, *idx);
  }

  std::string_view src_;
  const TablePtr& table_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const TablePtr& table) { return Parser(src, table).parse(); }

Poly conjugate_poly(const Poly& p) {
  const VarTable& table = *p.table();
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(table.size());
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (t.mono[k] == 0) continue;
      auto partner = table.partner(k);
      if (!partner) throw DomainError("variable '" + table.name(k) + "' has no conjugate partner");
      m[*partner] = t.mono[k];
    }
    out.push_back({std::move(m), t.coeff.conj()});
  }
  return Poly::from_terms(p.table(), std::move(out));
}

bool is_real(const Poly& p) {
  try {
    return conjugate_poly(p) == p;
  } catch (const DomainError&) {
    return false;
  }
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings) {
  if (bindings.empty()) return p;
  const TablePtr& target = bindings.begin()->second.table();
  for (const auto& [name, b] : bindings) {
    if (!same_table(b.table(), target)) throw InputError("substitution bindings use different tables");
  }
  const VarTable& source = *p.table();
  // Per source variable: the replacement polynomial in the target table.
  std::vector<Poly> images;
  images.reserve(source.size());
  for (std::size_t k = 0; k < source.size(); ++k) {
    auto it = bindings.find(source.name(k));
    if (it != bindings.end()) {
      images.push_back(it->second);
    } else if (auto idx = target->index_of(source.name(k))) {
      images.push_back(Poly::variable(target, *idx));
    } else {
      images.push_back(Poly(target));  // only valid if the variable is absent from p
    }
  }
  std::map<std::pair<std::size_t, Exponent>, Poly> powers;
  auto power_of = [&](std::size_t var, Exponent e) -> const Poly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images[var].pow(e)).first;
    return it->second;
  };
  Poly result(target);
  for (const auto& t : p.terms()) {
    Poly acc = Poly::constant(target, t.coeff);
    for (std::size_t k = 0; k < source.size(); ++k) {
      if (t.mono[k] == 0) continue;
      if (bindings.find(source.name(k)) == bindings.end() && !target->index_of(source.name(k))) {
        throw InputError("variable '" + source.name(k) + "' is neither bound nor present in the target table");
      }
      acc = acc * power_of(k, t.mono[k]);
    }
    result += acc;
  }
  return result;
}

Poly substitute_values(const Poly& p, const std::map<std::string, GaussianRational>& values) {
  const VarTable& table = *p.table();
  std::vector<std::optional<GaussianRational>> bound(table.size());
  for (const auto& [name, v] : values) {
    if (auto idx = table.index_of(name)) bound[*idx] = v;
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    GaussianRational c = t.coeff;
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (m[k] == 0 || !bound[k]) continue;
      c *= bound[k]->pow(m[k]);
      m[k] = 0;
    }
    out.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(p.table(), std::move(out));
}

GaussianRational eval(const Poly& p, const std::vector<GaussianRational>& values) {
  if (values.size() != p.table()->size()) throw InputError("point dimension does not match table");
  GaussianRational sum(0);
  for (const auto& t : p.terms()) {
    GaussianRational v = t.coeff;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (t.mono[k] != 0) v *= values[k].pow(t.mono[k]);
    }
    sum += v;
  }
  return sum;
}

GaussianRational eval(const Poly& p, const std::map<std::string, GaussianRational>& point) {
  const VarTable& table = *p.table();
  std::vector<GaussianRational> values(table.size());
  std::vector<bool> used(table.size(), false);
  for (std::size_t k = 0; k < table.size(); ++k) used[k] = p.involves(k);
  for (std::size_t k = 0; k < table.size(); ++k) {
    auto it = point.find(table.name(k));
    if (it != point.end()) {
      values[k] = it->second;
    } else if (used[k]) {
      throw InputError("unbound variable '" + table.name(k) + "'");
    }
  }
  return eval(p, values);
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& divisor) {
  require_same_table(p, divisor);
  if (divisor.is_zero()) throw DomainError("exact division by the zero polynomial");
  const Term& lead = divisor.terms().front();
  GaussianRational lead_inv = lead.coeff.inverse();
  Poly rest = p;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& t = rest.terms().front();
    if (!lead.mono.divides(t.mono)) return std::nullopt;
    Monomial m = t.mono / lead.mono;
    GaussianRational c = t.coeff * lead_inv;
    rest -= divisor.mul_term(m, c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(p.table(), std::move(quotient));
}

std::map<Monomial, Poly> coefficients_in(const Poly& p, const std::vector<bool>& block) {
  const std::size_t n = p.table()->size();
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Monomial outer(n);
    Monomial inner = t.mono;
    for (std::size_t k = 0; k < n; ++k) {
      if (block[k]) {
        outer[k] = t.mono[k];
        inner[k] = 0;
      }
    }
    groups[outer].push_back({std::move(inner), t.coeff});
  }
  std::map<Monomial, Poly> out;
  for (auto& [m, terms] : groups) out.emplace(m, Poly::from_terms(p.table(), std::move(terms)));
  return out;
}

std::vector<bool> variable_mask(const VarTable& table, const std::vector<std::string>& names) {
  std::vector<bool> mask(table.size(), false);
  for (const auto& name : names) mask[table.require(name)] = true;
  return mask;
}

}  // namespace segrekit
