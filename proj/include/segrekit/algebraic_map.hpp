#pragma once

#include <string>
#include <vector>

#include "segrekit/linalg.hpp"
#include "segrekit/poly.hpp"

namespace segrekit {

/// Holomorphic map given either by rational components f_k = num_k / den_k in z,
/// or (for multivalued correspondences such as z -> z^{1/2}) by relations in (z, y)
/// cutting out its graph.
class AlgebraicMap {
 public:
  static AlgebraicMap from_components(const std::vector<std::string>& source_names,
                                      const std::vector<std::string>& numerators,
                                      const std::vector<std::string>& denominators = {});
  static AlgebraicMap from_polys(TablePtr source, std::vector<Poly> numerators, std::vector<Poly> denominators);
  static AlgebraicMap from_relations(const std::vector<std::string>& source_names,
                                     const std::vector<std::string>& target_names,
                                     const std::vector<std::string>& relations);

  bool is_relation() const { return !relations_.empty(); }
  /// Plain table of the source variables z.
  const TablePtr& source() const { return source_; }
  std::vector<std::string> source_names() const { return source_->names(); }
  std::size_t source_dim() const { return source_->size(); }
  std::size_t target_dim() const;

  const std::vector<Poly>& numerators() const { return numerators_; }
  const std::vector<Poly>& denominators() const { return denominators_; }

  /// Relation form: table [z.., y..] and the relations over it.
  const TablePtr& joint() const { return joint_; }
  const std::vector<std::string>& target_names() const { return target_names_; }
  const std::vector<Poly>& relations() const { return relations_; }

  /// f(p); DomainError on a vanishing denominator or for relation maps.
  std::vector<GaussianRational> evaluate(const std::vector<GaussianRational>& p) const;
  /// Jacobian (d f_k / d z_j)(p), N x n.
  Matrix jacobian(const std::vector<GaussianRational>& p) const;

  std::string to_string() const;

 private:
  TablePtr source_;
  std::vector<Poly> numerators_;
  std::vector<Poly> denominators_;
  TablePtr joint_;
  std::vector<std::string> target_names_;
  std::vector<Poly> relations_;
};

}  // namespace segrekit
