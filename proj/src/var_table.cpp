#include "segrekit/var_table.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "segrekit/errors.hpp"

namespace segrekit {

const char* to_string(VarKind kind) {
  switch (kind) {
    case VarKind::Holomorphic: return "holomorphic";
    case VarKind::Conjugate: return "conjugate";
    case VarKind::Parameter: return "parameter";
  }
  return "?";
}

namespace {

bool valid_identifier(const std::string& name) {
  std::size_t start = (!name.empty() && name[0] == '~') ? 1 : 0;
  if (name.size() <= start) return false;
  unsigned char first = static_cast<unsigned char>(name[start]);
  if (!(std::isalpha(first) || first == '_')) return false;
  for (std::size_t k = start + 1; k < name.size(); ++k) {
    unsigned char c = static_cast<unsigned char>(name[k]);
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  return name != "i";
}

}  // namespace

TablePtr VarTable::make(std::vector<VarInfo> vars) {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const auto& v = vars[k];
    if (!valid_identifier(v.name)) throw InputError("invalid variable name '" + v.name + "'");
    if (!seen.insert(v.name).second) throw InputError("duplicate variable '" + v.name + "'");
    if (v.partner) {
      std::size_t p = *v.partner;
      if (p >= vars.size() || p == k || vars[p].partner != k) {
        throw InputError("pairing of '" + v.name + "' is not an involution");
      }
    } else if (v.kind == VarKind::Conjugate) {
      throw InputError("conjugate variable '" + v.name + "' has no partner");
    }
  }
  return TablePtr(new VarTable(std::move(vars)));
}

TablePtr VarTable::complex(const std::vector<std::string>& holomorphic_names, VarKind holo_kind,
                           VarKind conj_kind) {
  std::vector<VarInfo> vars;
  const std::size_t n = holomorphic_names.size();
  for (std::size_t k = 0; k < n; ++k) vars.push_back({holomorphic_names[k], holo_kind, n + k});
  for (std::size_t k = 0; k < n; ++k) vars.push_back({"~" + holomorphic_names[k], conj_kind, k});
  return make(std::move(vars));
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (vars_[k].name == name) return k;
  }
  return std::nullopt;
}

std::size_t VarTable::require(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw InputError("unknown variable '" + name + "'");
  return *idx;
}

std::vector<std::string> VarTable::names() const {
  std::vector<std::string> out;
  out.reserve(vars_.size());
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

TablePtr VarTable::subtable(const std::vector<std::string>& keep) const {
  std::vector<std::size_t> old_index;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (std::find(keep.begin(), keep.end(), vars_[k].name) != keep.end()) old_index.push_back(k);
  }
  for (const auto& name : keep) require(name);
  std::vector<VarInfo> out;
  for (std::size_t k : old_index) {
    VarInfo v = vars_[k];
    v.partner.reset();
    if (vars_[k].partner) {
      auto it = std::find(old_index.begin(), old_index.end(), *vars_[k].partner);
      if (it != old_index.end()) v.partner = static_cast<std::size_t>(it - old_index.begin());
    }
    // A conjugate variable without its partner degrades to a parameter.
    if (!v.partner && v.kind == VarKind::Conjugate) v.kind = VarKind::Parameter;
    out.push_back(std::move(v));
  }
  return make(std::move(out));
}

TablePtr VarTable::extended(const std::vector<VarInfo>& extra) const {
  std::vector<VarInfo> out = vars_;
  out.insert(out.end(), extra.begin(), extra.end());
  return make(std::move(out));
}

std::string VarTable::fresh_name(const std::string& stem) const {
  if (!index_of(stem)) return stem;
  for (int k = 1;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

bool operator==(const VarTable& a, const VarTable& b) {
  if (a.vars_.size() != b.vars_.size()) return false;
  for (std::size_t k = 0; k < a.vars_.size(); ++k) {
    const auto& x = a.vars_[k];
    const auto& y = b.vars_[k];
    if (x.name != y.name || x.kind != y.kind || x.partner != y.partner) return false;
  }
  return true;
}

bool same_table(const TablePtr& a, const TablePtr& b) { return a == b || (a && b && *a == *b); }

TablePtr plain_table(const std::vector<std::string>& names) {
  std::vector<VarInfo> vars;
  for (const auto& n : names) vars.push_back({n, VarKind::Holomorphic, std::nullopt});
  return VarTable::make(std::move(vars));
}

}  // namespace segrekit
