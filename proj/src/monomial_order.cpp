#include "segrekit/monomial_order.hpp"

namespace segrekit {

namespace {

std::strong_ordering grevlex_masked(const Monomial& a, const Monomial& b, const std::vector<bool>& mask,
                                    bool want) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (mask[k] != want) continue;
    da += a[k];
    db += b[k];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (mask[k] != want) continue;
    if (a[k] != b[k]) return b[k] <=> a[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Lex:
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] <=> b[k];
      }
      return std::strong_ordering::equal;
    case Kind::Block: {
      auto first = grevlex_masked(a, b, block_, true);
      if (first != 0) return first;
      return grevlex_masked(a, b, block_, false);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe(const VarTable& table) const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: {
      std::string names;
      for (std::size_t k = 0; k < table.size() && k < block_.size(); ++k) {
        if (!block_[k]) continue;
        if (!names.empty()) names += ",";
        names += table.name(k);
      }
      return "block(" + names + "; grevlex)";
    }
  }
  return "?";
}

}  // namespace segrekit
