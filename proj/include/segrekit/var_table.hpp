#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace segrekit {

enum class VarKind { Holomorphic, Conjugate, Parameter };

const char* to_string(VarKind kind);

struct VarInfo {
  std::string name;
  VarKind kind = VarKind::Holomorphic;
  std::optional<std::size_t> partner;  // index of the conjugate partner
};

class VarTable;
using TablePtr = std::shared_ptr<const VarTable>;

/// Ordered, immutable list of ring variables. Position 0 is the largest
/// variable for every monomial order. Pairing is an involution used by
/// conjugation; the `~name` syntax resolves through it.
class VarTable {
 public:
  /// Validates names (unique, identifier-like or `~identifier`) and pairing.
  static TablePtr make(std::vector<VarInfo> vars);

  /// [z1..zn, ~z1..~zn] with zk <-> ~zk paired.
  static TablePtr complex(const std::vector<std::string>& holomorphic_names,
                          VarKind holo_kind = VarKind::Holomorphic,
                          VarKind conj_kind = VarKind::Conjugate);

  std::size_t size() const { return vars_.size(); }
  const VarInfo& operator[](std::size_t i) const { return vars_[i]; }
  const std::string& name(std::size_t i) const { return vars_[i].name; }
  VarKind kind(std::size_t i) const { return vars_[i].kind; }
  std::optional<std::size_t> partner(std::size_t i) const { return vars_[i].partner; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;
  const std::vector<VarInfo>& vars() const { return vars_; }
  std::vector<std::string> names() const;

  /// Variables kept in this table's order; pairings survive when both ends are kept.
  TablePtr subtable(const std::vector<std::string>& keep) const;
  /// This table followed by `extra` (partners in `extra` index the combined table).
  TablePtr extended(const std::vector<VarInfo>& extra) const;

  /// Name not present in the table, built from `stem` (stem, stem_1, stem_2, ...).
  std::string fresh_name(const std::string& stem) const;

  friend bool operator==(const VarTable& a, const VarTable& b);
  friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

 private:
  explicit VarTable(std::vector<VarInfo> vars) : vars_(std::move(vars)) {}
  std::vector<VarInfo> vars_;
};

bool same_table(const TablePtr& a, const TablePtr& b);

/// Unpaired holomorphic variables with the given names.
TablePtr plain_table(const std::vector<std::string>& names);

}  // namespace segrekit
