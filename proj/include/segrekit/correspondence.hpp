#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segrekit/algebraic_map.hpp"
#include "segrekit/cr_manifold.hpp"
#include "segrekit/sampling.hpp"

namespace segrekit {

struct RankReport {
  std::size_t rank = 0;
  std::size_t expected = 0;  // min(n, N)
  bool maximal = false;
  /// Rank of df restricted to H_pM, when a source manifold is supplied.
  std::optional<std::size_t> restricted_rank;
};

RankReport max_rank_check(const AlgebraicMap& f, const Point& p, const CRManifold* source = nullptr);

struct InvarianceReport {
  std::size_t manifold_points = 0;
  std::size_t manifold_failures = 0;  // f(p) not on M'
  std::size_t evaluations = 0;        // (p, z) pairs checked
  std::size_t failures = 0;
  bool passed() const { return manifold_failures == 0 && failures == 0 && evaluations > 0; }
};

/// For sampled p on M and z in Q_p, checks rho'(f(z), conj f(p)) = 0 exactly.
InvarianceReport verify_invariance(const CRManifold& source, const CRManifold& target, const AlgebraicMap& f,
                                   const std::vector<Point>& base_points, std::size_t samples,
                                   std::size_t segre_per_point, Rng& rng);

/// Graph {(w, w') : f(Q_w) in Q'_{w'}} over the plain table [w.., wp..].
struct Correspondence {
  CRManifold source;
  CRManifold target;
  TablePtr table;
  std::vector<std::string> source_block;
  std::vector<std::string> target_block;
  Ideal graph;
  /// Parameter polynomials inverted during the reduction, over ledger_table.
  TablePtr ledger_table;
  std::vector<Poly> excluded;
  std::string route;
};

Correspondence build_correspondence(const CRManifold& source, const CRManifold& target, const AlgebraicMap& f,
                                    const EngineConfig& config = {});

/// Same graph with the roles of source and target exchanged.
Correspondence transpose(const Correspondence& c);

struct FiberReport {
  std::uint64_t degree = 0;   // with multiplicity
  std::uint64_t distinct = 0; // number of distinct solutions
  std::vector<Point> solutions;
  bool solutions_complete = false;
  bool on_excluded_locus = false;
};

/// Graph specialized at w, over the plain target block table.
Ideal fiber_ideal(const Correspondence& c, const Point& w);

/// Specializes the source block at w. DomainError for a positive-dimensional fiber.
FiberReport fiber(const Correspondence& c, const Point& w, const EngineConfig& config = {});

struct SplitReport {
  bool splits = false;
  bool simple_roots = false;
  bool target_injective = false;
  FiberReport fiber;
};

/// Simple fiber and degree-1 target inversion sets at every fiber point.
SplitReport splits_at(const Correspondence& c, const Point& q, const EngineConfig& config = {});
bool splits(const Correspondence& c, const Point& q, const EngineConfig& config = {});

/// Fiber equals the target inversion set of one of its points.
bool complete_at(const Correspondence& c, const Point& w, const EngineConfig& config = {});

/// Joins over the shared middle block and eliminates it.
Correspondence compose(const Correspondence& first, const Correspondence& second, const EngineConfig& config = {});

enum class Containment { Member, RadicalMember, Fails };
const char* to_string(Containment c);

/// f(Q_w) in Q'_{w'} decided by membership, then radical membership.
Containment containment_at(const CRManifold& source, const CRManifold& target, const AlgebraicMap& f, const Point& w,
                           const Point& wp, const EngineConfig& config = {});

}  // namespace segrekit
