#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "isatype/diagnostics.hpp"
#include "isatype/parser.hpp"
#include "isatype/prelude.hpp"
#include "isatype/substitution.hpp"
#include "isatype/type.hpp"

namespace isatype {

enum class SchemeOrigin { Builtin, DatatypeDecl, FunctionDecl };

struct TypeScheme {
  Type body = Type::bottom();
  SchemeOrigin origin = SchemeOrigin::Builtin;
  bool constructor = false;
  bool polymorphic_comparison = false;
};

/// Σ. Schemes keep their unmodified variables; `instantiate` decorates every
/// variable of one scheme with the same fresh counter.
class SolverRegistry {
 public:
  static SolverRegistry with_prelude() {
    SolverRegistry reg;
    for (const auto& e : kPrelude) {
      reg.add(std::string(e.name),
              TypeScheme{parse_type(e.scheme), SchemeOrigin::Builtin, e.constructor, e.polymorphic_comparison});
    }
    return reg;
  }

  /// User declarations may shadow a builtin; redeclaring a user name throws.
  void register_datatype(const DatatypeDecl& d) {
    Type result = d.result_type();
    for (const auto& c : d.ctors) {
      std::vector<Type> parts = c.args;
      parts.push_back(result);
      Type body = parts.size() == 1 ? result : Type::fun(std::move(parts));
      declare(c.name, TypeScheme{std::move(body), SchemeOrigin::DatatypeDecl, true, false});
    }
  }

  void register_function(const FunctionSpec& f) {
    declare(f.name, TypeScheme{f.declared_type, SchemeOrigin::FunctionDecl, false, false});
  }

  void register_scheme(const std::string& name, TypeScheme scheme) { declare(name, std::move(scheme)); }

  const TypeScheme* find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second].second;
  }
  bool contains(const std::string& name) const { return index_.contains(name); }

  Type lookup_unmodified(const std::string& name) const {
    const TypeScheme* s = find(name);
    if (!s) throw UnknownName(name);
    return s->body;
  }

  Type instantiate(const std::string& name) {
    const TypeScheme* s = find(name);
    if (!s) throw UnknownName(name);
    std::uint32_t k = fresh_counter_++;
    SubstitutionSet decorate;
    for (const auto& v : free_type_vars(s->body)) decorate.bind(v, Type::var(v.name, k));
    return apply_subst(decorate, s->body);
  }

  std::uint32_t fresh_counter() const { return fresh_counter_; }
  void set_fresh_counter(std::uint32_t k) { fresh_counter_ = k; }

  /// Declaration order; a shadowed builtin keeps its original position.
  const std::vector<std::pair<std::string, TypeScheme>>& entries() const { return entries_; }

  /// `name :: type`, one per line.
  std::string dump() const {
    std::string out;
    for (const auto& [name, scheme] : entries_) out += name + " :: " + to_string(scheme.body) + "\n";
    return out;
  }

 private:
  void add(const std::string& name, TypeScheme scheme) {
    auto it = index_.find(name);
    if (it != index_.end()) {
      entries_[it->second].second = std::move(scheme);
      return;
    }
    index_.emplace(name, entries_.size());
    entries_.emplace_back(name, std::move(scheme));
  }

  void declare(const std::string& name, TypeScheme scheme) {
    if (const TypeScheme* old = find(name); old && old->origin != SchemeOrigin::Builtin) throw DuplicateName(name);
    add(name, std::move(scheme));
  }

  std::vector<std::pair<std::string, TypeScheme>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint32_t fresh_counter_ = 0;
};

}  // namespace isatype
