#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segrekit/monomial_order.hpp"
#include "segrekit/poly.hpp"

namespace segrekit {

/// Caps on a single Gröbner computation. Exceeding one throws ResourceLimitError.
struct EngineConfig {
  std::size_t max_basis = 400;
  std::uint64_t max_degree = 40;
  std::size_t max_pairs = 200000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t coprime_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t basis_peak = 0;
  std::uint64_t degree_peak = 0;

  std::string to_string() const;
};

/// Generators plus an optional reduced Gröbner basis under `order`.
class Ideal {
 public:
  Ideal(TablePtr table, std::vector<Poly> generators, MonomialOrder order = MonomialOrder::grevlex());

  const TablePtr& table() const { return table_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

  bool has_basis() const { return basis_.has_value(); }
  /// Throws DomainError when no basis is attached.
  const std::vector<Poly>& basis() const;
  /// Copy carrying `basis` (assumed reduced under order()).
  Ideal with_basis(std::vector<Poly> basis) const;
  /// Same generators under another order, basis dropped.
  Ideal with_order(MonomialOrder order) const;

  /// True when every generator is zero.
  bool is_zero_ideal() const;

  std::string to_string() const;

 private:
  TablePtr table_;
  std::vector<Poly> generators_;
  MonomialOrder order_;
  std::optional<std::vector<Poly>> basis_;
};

/// Reduced Gröbner basis (Buchberger, sugar selection, coprime and chain criteria).
Ideal groebner_basis(const Ideal& ideal, const EngineConfig& config = {}, GroebnerStats* stats = nullptr);

/// Leading monomial of `p` under `order`.
Monomial leading_monomial(const Poly& p, const MonomialOrder& order);
GaussianRational leading_coefficient(const Poly& p, const MonomialOrder& order);

/// Full remainder of `p` modulo the ideal's Gröbner basis (computed when absent).
Poly normal_form(const Poly& p, const Ideal& ideal, const EngineConfig& config = {});

bool member(const Poly& p, const Ideal& ideal, const EngineConfig& config = {});
/// p in rad(I), via 1 in I + <1 - t*p> over the ring extended by t.
bool radical_member(const Poly& p, const Ideal& ideal, const EngineConfig& config = {});
bool is_unit_ideal(const Ideal& ideal, const EngineConfig& config = {});
/// Equal reduced bases under grevlex.
bool ideals_equal(const Ideal& a, const Ideal& b, const EngineConfig& config = {});
/// Every generator of `inner` lies in `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner, const EngineConfig& config = {});

/// I intersected with the subring in `keep`; result lives over the subtable of `keep`.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const EngineConfig& config = {});

/// I : h^infinity.
Ideal saturate(const Ideal& ideal, const Poly& h, const EngineConfig& config = {});

/// Krull dimension (-1 for the unit ideal).
int dimension(const Ideal& ideal, const EngineConfig& config = {});
/// Number of solutions with multiplicity; requires dimension 0.
std::uint64_t degree_zero_dim(const Ideal& ideal, const EngineConfig& config = {});
/// Standard monomials of a zero-dimensional ideal, ascending in the ideal's order.
std::vector<Monomial> standard_monomials(const Ideal& ideal, const EngineConfig& config = {});

/// Buchberger criterion: every S-polynomial of the attached basis reduces to zero.
bool satisfies_buchberger_criterion(const Ideal& ideal);
/// No leading monomial divides another basis term, and leading coefficients are 1.
bool is_reduced_basis(const Ideal& ideal);

/// Substitutes exact values into the generators and moves them to `target`.
Ideal specialize(const Ideal& ideal, const std::map<std::string, GaussianRational>& values, const TablePtr& target);

struct ParametricNormalForm {
  Poly remainder;
  /// Product of inverted leading coefficients: multiplier * p - remainder lies in I.
  Poly multiplier;
  /// Parameter polynomials whose vanishing invalidates the reduction.
  std::vector<Poly> excluded;
};

/// Pseudo-reduction of `p` modulo I with `params` treated as coefficients.
ParametricNormalForm parametric_normal_form(const Poly& p, const Ideal& ideal, const std::vector<std::string>& params,
                                            const EngineConfig& config = {});

/// Coefficients of `p` viewed as a polynomial in the masked variables.
std::vector<Poly> block_coefficients(const Poly& p, const std::vector<bool>& block);

}  // namespace segrekit
