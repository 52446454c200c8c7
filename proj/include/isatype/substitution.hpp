#pragma once

#include <initializer_list>
#include <map>
#include <string>

#include "isatype/type.hpp"

namespace isatype {

/// A set of bindings `var := type`. Sets produced by `reduce` are
/// idempotent: no bound variable appears in any bound type.
class SubstitutionSet {
 public:
  SubstitutionSet() = default;
  SubstitutionSet(std::initializer_list<std::pair<const TypeVar, Type>> bindings)
      : bindings_(bindings) {}

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  const Type* find(const TypeVar& v) const {
    auto it = bindings_.find(v);
    return it == bindings_.end() ? nullptr : &it->second;
  }
  bool binds(const TypeVar& v) const { return bindings_.contains(v); }

  void bind(TypeVar v, Type t) { bindings_.insert_or_assign(std::move(v), std::move(t)); }

  const std::map<TypeVar, Type>& bindings() const { return bindings_; }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  friend bool operator==(const SubstitutionSet&, const SubstitutionSet&) = default;

 private:
  std::map<TypeVar, Type> bindings_;
};

/// Simultaneous replacement of every bound variable of `s` in `t`.
inline Type apply_subst(const SubstitutionSet& s, const Type& t) {
  if (s.empty()) return t;
  if (const auto* v = t.as_var()) {
    const Type* bound = s.find(*v);
    return bound ? *bound : t;
  }
  if (children(t).empty()) return t;
  return map_children(t, [&](const Type& c) { return apply_subst(s, c); });
}

inline std::string to_string(const SubstitutionSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(v) + " := " + to_string(t);
  }
  return out + "}";
}

}  // namespace isatype
