#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isatype/expr.hpp"
#include "isatype/substitution.hpp"

namespace isatype {

/// Γ: types keyed by AST node id, plus the lexical scopes that link each
/// variable occurrence to its binder.
///
/// Alongside node types the context keeps the instantiated head type of every
/// application, so substitutions reach them as well.
class TypeContext {
 public:
  const Type* type_of(NodeId id) const {
    auto it = node_types_.find(id);
    return it == node_types_.end() ? nullptr : &it->second;
  }
  bool has(NodeId id) const { return node_types_.contains(id); }
  void set(NodeId id, Type t) { node_types_.insert_or_assign(id, std::move(t)); }

  const Type* head_type_of(NodeId app) const {
    auto it = head_types_.find(app);
    return it == head_types_.end() ? nullptr : &it->second;
  }
  void set_head_type(NodeId app, Type t) { head_types_.insert_or_assign(app, std::move(t)); }

  const std::map<NodeId, Type>& node_types() const { return node_types_; }

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }
  void clear_scopes() { scopes_.clear(); }
  std::size_t scope_depth() const { return scopes_.size(); }

  void bind(const std::string& name, NodeId binder) {
    if (scopes_.empty()) push_scope();
    scopes_.back().insert_or_assign(name, binder);
  }

  std::optional<NodeId> resolve(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    return std::nullopt;
  }

  void record_occurrence(NodeId occurrence, NodeId binder) { binders_.insert_or_assign(occurrence, binder); }
  std::optional<NodeId> binder_of(NodeId occurrence) const {
    auto it = binders_.find(occurrence);
    if (it == binders_.end()) return std::nullopt;
    return it->second;
  }

  /// Γ = SΓ, in place. Scopes are untouched.
  void apply(const SubstitutionSet& s) {
    if (s.empty()) return;
    for (auto& [id, t] : node_types_) t = apply_subst(s, t);
    for (auto& [id, t] : head_types_) t = apply_subst(s, t);
  }

  friend bool operator==(const TypeContext& a, const TypeContext& b) {
    return a.node_types_ == b.node_types_ && a.head_types_ == b.head_types_;
  }

 private:
  std::map<NodeId, Type> node_types_;
  std::map<NodeId, Type> head_types_;
  std::vector<std::unordered_map<std::string, NodeId>> scopes_;
  std::unordered_map<NodeId, NodeId> binders_;
};

inline TypeContext apply_subst_ctx(const SubstitutionSet& s, TypeContext g) {
  g.apply(s);
  return g;
}

}  // namespace isatype
