#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "segrekit/var_table.hpp"

namespace segrekit {

using Exponent = std::uint32_t;

/// Exponent vector aligned with a VarTable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// True when this and `other` share no variable.
  bool coprime(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) in reverse: `other` must divide `*this`.
  Monomial operator/(const Monomial& other) const;

  std::string to_string(const VarTable& table) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Graded reverse lexicographic comparison (variable 0 largest).
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

}  // namespace segrekit
