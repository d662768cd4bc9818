#include "segrekit/algebraic_map.hpp"

#include "segrekit/errors.hpp"

namespace segrekit {

AlgebraicMap AlgebraicMap::from_components(const std::vector<std::string>& source_names,
                                           const std::vector<std::string>& numerators,
                                           const std::vector<std::string>& denominators) {
  TablePtr t = plain_table(source_names);
  std::vector<Poly> nums, dens;
  for (const auto& s : numerators) nums.push_back(parse_poly(s, t));
  for (const auto& s : denominators) dens.push_back(parse_poly(s, t));
  return from_polys(t, std::move(nums), std::move(dens));
}

AlgebraicMap AlgebraicMap::from_polys(TablePtr source, std::vector<Poly> numerators, std::vector<Poly> denominators) {
  if (numerators.empty()) throw InputError("map needs at least one component");
  if (denominators.empty()) denominators.assign(numerators.size(), Poly::constant(source, 1));
  if (denominators.size() != numerators.size()) throw InputError("one denominator per component required");
  for (const auto& d : denominators) {
    if (d.is_zero()) throw InputError("map denominator is the zero polynomial");
  }
  AlgebraicMap out;
  out.source_ = std::move(source);
  out.numerators_ = std::move(numerators);
  out.denominators_ = std::move(denominators);
  return out;
}

AlgebraicMap AlgebraicMap::from_relations(const std::vector<std::string>& source_names,
                                          const std::vector<std::string>& target_names,
                                          const std::vector<std::string>& relations) {
  if (relations.empty()) throw InputError("relation map needs at least one relation");
  AlgebraicMap out;
  out.source_ = plain_table(source_names);
  std::vector<std::string> all = source_names;
  all.insert(all.end(), target_names.begin(), target_names.end());
  out.joint_ = plain_table(all);
  out.target_names_ = target_names;
  for (const auto& s : relations) out.relations_.push_back(parse_poly(s, out.joint_));
  return out;
}

std::size_t AlgebraicMap::target_dim() const {
  return is_relation() ? target_names_.size() : numerators_.size();
}

std::vector<GaussianRational> AlgebraicMap::evaluate(const std::vector<GaussianRational>& p) const {
  if (is_relation()) throw DomainError("relation maps are multivalued; evaluate through the correspondence");
  if (p.size() != source_dim()) throw InputError("point dimension does not match the map");
  std::vector<GaussianRational> out;
  for (std::size_t k = 0; k < numerators_.size(); ++k) {
    GaussianRational d = eval(denominators_[k], p);
    if (d.is_zero()) throw DomainError("point lies on a denominator zero set");
    out.push_back(eval(numerators_[k], p) / d);
  }
  return out;
}

Matrix AlgebraicMap::jacobian(const std::vector<GaussianRational>& p) const {
  if (p.size() != source_dim()) throw InputError("point dimension does not match the map");
  Matrix out;
  if (is_relation()) {
    throw DomainError("Jacobian of a relation map requires choosing a branch");
  }
  for (std::size_t k = 0; k < numerators_.size(); ++k) {
    GaussianRational d = eval(denominators_[k], p);
    if (d.is_zero()) throw DomainError("point lies on a denominator zero set");
    GaussianRational nv = eval(numerators_[k], p);
    Vector row;
    for (std::size_t j = 0; j < source_dim(); ++j) {
      GaussianRational dn = eval(numerators_[k].derivative(j), p);
      GaussianRational dd = eval(denominators_[k].derivative(j), p);
      row.push_back((dn * d - nv * dd) / (d * d));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string AlgebraicMap::to_string() const {
  std::string out = "(";
  if (is_relation()) {
    for (std::size_t k = 0; k < relations_.size(); ++k) {
      if (k) out += ", ";
      out += relations_[k].to_string() + " = 0";
    }
    return out + ")";
  }
  for (std::size_t k = 0; k < numerators_.size(); ++k) {
    if (k) out += ", ";
    out += numerators_[k].to_string();
    if (!denominators_[k].is_constant() || !denominators_[k].constant_term().is_one()) {
      out += " / (" + denominators_[k].to_string() + ")";
    }
  }
  return out + ")";
}

}  // namespace segrekit
