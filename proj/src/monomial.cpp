#include "segrekit/monomial.hpp"

#include <algorithm>

namespace segrekit {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] = std::max(exps_[k], other.exps_[k]);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] = exps_[k] + other.exps_[k];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] = exps_[k] - other.exps_[k];
  return out;
}

std::string Monomial::to_string(const VarTable& table) const {
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(k);
    if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return b[k] <=> a[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace segrekit
