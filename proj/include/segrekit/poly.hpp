#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segrekit/gaussian_rational.hpp"
#include "segrekit/monomial.hpp"
#include "segrekit/var_table.hpp"

namespace segrekit {

struct Term {
  Monomial mono;
  GaussianRational coeff;
};

/// Sparse multivariate polynomial over Q(i). Terms are stored without zero
/// coefficients, sorted by descending grevlex order, so structural equality
/// is polynomial equality.
class Poly {
 public:
  explicit Poly(TablePtr table);

  static Poly constant(TablePtr table, const GaussianRational& c);
  static Poly variable(TablePtr table, std::size_t index);
  static Poly variable(TablePtr table, const std::string& name);
  static Poly monomial(TablePtr table, Monomial m, GaussianRational c = 1);
  /// Combines like terms and drops zeros.
  static Poly from_terms(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  GaussianRational constant_term() const;
  std::uint64_t total_degree() const;
  Exponent degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  /// Indices of variables appearing with nonzero exponent.
  std::vector<std::size_t> support() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussianRational& c, const Poly& p) { return p.scaled(c); }
  Poly scaled(const GaussianRational& c) const;
  Poly mul_term(const Monomial& m, const GaussianRational& c) const;
  Poly pow(unsigned exponent) const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(std::size_t var) const;
  /// Same polynomial expressed over `target`, matching variables by name.
  Poly rebase(const TablePtr& target) const;

  /// Canonical text (descending grevlex, `~name` for conjugates).
  std::string to_string() const;

 private:
  TablePtr table_;
  std::vector<Term> terms_;
};

/// Parses integers, rationals `a/b`, `i`, variables, `~name`, + - * / ^ and parentheses.
/// Division is only allowed by nonzero constants.
Poly parse_poly(std::string_view src, const TablePtr& table);

/// Conjugates coefficients and swaps each paired variable with its partner.
Poly conjugate_poly(const Poly& p);

/// Simultaneous substitution. Every binding shares one table, which is the
/// result table; unbound variables of `p` are looked up there by name.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings);

/// Substitutes exact values (variables not mentioned stay symbolic).
Poly substitute_values(const Poly& p, const std::map<std::string, GaussianRational>& values);

/// Exact value; throws InputError on an unbound variable.
GaussianRational eval(const Poly& p, const std::map<std::string, GaussianRational>& point);
/// Values aligned with the table's variable order.
GaussianRational eval(const Poly& p, const std::vector<GaussianRational>& values);

/// Quotient when `divisor` divides `p` exactly.
std::optional<Poly> divide_exact(const Poly& p, const Poly& divisor);

/// Groups terms by their monomial in the variables flagged in `block`; each
/// coefficient is a polynomial (same table) in the remaining variables.
std::map<Monomial, Poly> coefficients_in(const Poly& p, const std::vector<bool>& block);

/// Mask over `table` selecting the named variables.
std::vector<bool> variable_mask(const VarTable& table, const std::vector<std::string>& names);

/// Reality test used for defining functions: conjugate_poly(p) == p.
bool is_real(const Poly& p);

}  // namespace segrekit
