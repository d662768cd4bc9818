#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segrekit/ideal.hpp"
#include "segrekit/linalg.hpp"

namespace segrekit {

using Point = std::vector<GaussianRational>;

/// Affine charts remember which homogeneous coordinate was set to 1 so that
/// homogenize can restore it; projective charts record the coordinate
/// suggested for dehomogenization.
struct Chart {
  enum class Kind { Affine, Projective };
  Kind kind = Kind::Affine;
  std::optional<std::size_t> index;
  std::string homogenizing_name;

  friend bool operator==(const Chart&, const Chart&) = default;
};

std::string describe(const Chart& chart);

/// Real-algebraic submanifold {rho_j(z, ~z) = 0} of C^n (or P^n in a projective chart).
/// The table is [z1..zn, ~z1..~zn] with conjugate pairing.
class CRManifold {
 public:
  CRManifold(std::vector<std::string> names, const std::vector<std::string>& rho_src, Chart chart = {});
  CRManifold(TablePtr table, std::vector<Poly> rho, Chart chart = {});

  const TablePtr& table() const { return table_; }
  const std::vector<Poly>& rho() const { return rho_; }
  const Chart& chart() const { return chart_; }
  std::size_t n() const { return table_->size() / 2; }
  std::size_t d() const { return rho_.size(); }
  /// CR dimension assuming genericity.
  std::size_t m() const { return n() - d(); }
  std::vector<std::string> holomorphic_names() const;
  std::vector<std::string> conjugate_names() const;

  /// Binding z -> p, ~z -> conj(p).
  std::map<std::string, GaussianRational> bind(const Point& p) const;
  /// Every rho_j(p, conj p) vanishes.
  bool contains(const Point& p) const;

 private:
  TablePtr table_;
  std::vector<Poly> rho_;
  Chart chart_;
};

bool check_reality(const CRManifold& manifold);

/// Rank of (d rho_j / d ~z_k)(p). Throws DomainError when p is not on M.
std::size_t genericity_rank(const CRManifold& manifold, const Point& p);

/// Holomorphic Jacobian (d rho_j / d z_k)(p).
Matrix holomorphic_jacobian(const CRManifold& manifold, const Point& p);

/// Ideal of the complexification over [z.., zeta..] with zeta_k paired to z_k.
Ideal polar(const CRManifold& manifold);

/// Bihomogeneous version in P^n; the homogenizing coordinate is inserted at the
/// recorded chart position (default 0, named z0 or a fresh name).
CRManifold homogenize(const CRManifold& manifold);
/// Sets homogeneous coordinate `index` to 1.
CRManifold dehomogenize(const CRManifold& manifold, std::size_t index);

struct LeviReport {
  Point point;
  std::vector<mpq_class> conormal;
  Signature signature;
};

/// Signature of sum_j c_j i d dbar rho_j at p restricted to H_pM = ker d rho/dz.
LeviReport levi_signature(const CRManifold& manifold, const Point& p, const std::vector<mpq_class>& conormal);

struct ProbeSample {
  Point point;
  std::vector<mpq_class> conormal;
  Signature signature;
  bool mixed = false;
};

struct ProbeReport {
  std::vector<ProbeSample> samples;
  /// All samples mixed. A finite probe, not a proof of pseudoconcavity.
  bool all_mixed = false;
};

/// {+1, -1} for d = 1; nonzero vectors with entries in {-1, 0, 1} otherwise.
std::vector<std::vector<mpq_class>> default_conormal_grid(std::size_t d);

ProbeReport pseudoconcavity_probe(const CRManifold& manifold, const std::vector<Point>& points,
                                  const std::vector<std::vector<mpq_class>>& conormal_grid);

}  // namespace segrekit
