#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segrekit/cr_manifold.hpp"

namespace segrekit {

/// Q_w = {z : rho_j(z, conj w) = 0}. For a rational w the ideal lives over the
/// plain z table; for symbolic w it lives over [z.., ~w..] with ~w parameters.
struct SegreVariety {
  std::optional<Point> point;
  Ideal ideal;
  std::vector<std::string> parameter_names;  // symbolic case only
};

SegreVariety segre_variety(const CRManifold& manifold, const Point& w);
SegreVariety segre_variety_symbolic(const CRManifold& manifold);

/// z in Q_w, by exact evaluation.
bool in_segre(const CRManifold& manifold, const Point& z, const Point& w);
/// z in Q_w <=> w in Q_z.
bool check_symmetry(const CRManifold& manifold, const Point& z, const Point& w);

struct RationalFunction {
  Poly numerator;
  Poly denominator;
};

/// Solves the generators (linear in the `solve_for` block) by Cramer's rule.
/// DomainError when a generator is nonlinear in the block or the block Jacobian
/// is singular.
std::map<std::string, RationalFunction> graph_form(const SegreVariety& q, const std::vector<std::string>& solve_for);

struct InversionSet {
  /// Numeric w: ideal over the plain z table. Symbolic w: incidence ideal over [~z.., ~w..].
  Ideal ideal;
  std::vector<Poly> excluded;
};

/// {z : Q_w contained in Q_z}, from the remainders of rho_j(t, ~z) modulo <rho(t, ~w)>.
InversionSet inversion_set(const CRManifold& manifold, const Point& w, const EngineConfig& config = {});
InversionSet inversion_set_symbolic(const CRManifold& manifold, const EngineConfig& config = {});

struct EssentialFiniteness {
  bool finite = false;
  int dimension = 0;
  std::optional<std::uint64_t> degree;  // set when finite
};

EssentialFiniteness essential_finiteness(const CRManifold& manifold, const Point& w, const EngineConfig& config = {});

/// Algebraic proxy: the inversion set at q has degree 1.
bool segre_map_locally_injective(const CRManifold& manifold, const Point& q, const EngineConfig& config = {});

enum class ChainStatus { Minimal, Stabilized, Inconclusive };
const char* to_string(ChainStatus status);

/// Entry j-1 is the ideal (over the plain z table) of the Zariski closure of Q^j_p.
struct SegreSetChain {
  Point base;
  std::vector<Ideal> ideals;
  std::vector<int> dims;
  ChainStatus status = ChainStatus::Inconclusive;
  std::optional<std::size_t> j0;
};

/// j_max = 0 selects the default n + 2.
SegreSetChain segre_sets(const CRManifold& manifold, const Point& p, std::size_t j_max = 0,
                         const EngineConfig& config = {});

struct Minimality {
  bool minimal = false;
  std::optional<std::size_t> j0;
  ChainStatus status = ChainStatus::Inconclusive;
  SegreSetChain chain;
};

Minimality minimality(const CRManifold& manifold, const Point& p, std::size_t j_max = 0,
                      const EngineConfig& config = {});

/// Plain table of the manifold's holomorphic variables.
TablePtr holomorphic_table(const CRManifold& manifold);

}  // namespace segrekit
