#pragma once

#include <compare>
#include <string>
#include <vector>

#include "segrekit/monomial.hpp"
#include "segrekit/var_table.hpp"

namespace segrekit {

/// grevlex, lex, or a two-block product order whose first block (the
/// variables flagged in the mask) dominates; grevlex inside each block.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder block(std::vector<bool> first_block) {
    return MonomialOrder(Kind::Block, std::move(first_block));
  }

  Kind kind() const { return kind_; }
  const std::vector<bool>& first_block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe(const VarTable& table) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<bool> block) : kind_(kind), block_(std::move(block)) {}

  Kind kind_;
  std::vector<bool> block_;
};

}  // namespace segrekit
