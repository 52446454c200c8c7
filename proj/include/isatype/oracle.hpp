#pragma once

// Brute-force unifier used to cross-check `reduce`. It tries every ground
// substitution drawn from a small type grammar and reports the first one
// that makes the two types equal.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "isatype/substitution.hpp"
#include "isatype/type.hpp"
#include "isatype/unify.hpp"

namespace isatype {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Depth of a type with leaves at depth 1, reading `a => b => c` as
/// `a => (b => c)`.
inline std::size_t type_depth(const Type& t) {
  if (const auto* f = std::get_if<FunType>(&t.node().value)) {
    std::size_t d = type_depth(f->parts.back());
    for (std::size_t i = f->parts.size() - 1; i-- > 0;) d = 1 + std::max(type_depth(f->parts[i]), d);
    return d;
  }
  std::size_t d = 0;
  for (const auto& c : children(t)) d = std::max(d, type_depth(c));
  return d + 1;
}

/// All ground types over {nat, bool}, `list`, `option` and binary `=>` up
/// to the given depth.
inline std::vector<Type> ground_types(std::size_t depth) {
  std::vector<Type> out;
  if (depth == 0) return out;
  out = {Type::prim("nat"), Type::prim("bool")};
  if (depth == 1) return out;
  std::vector<Type> smaller = ground_types(depth - 1);
  for (const auto& a : smaller) out.push_back(Type::list(a));
  for (const auto& a : smaller) out.push_back(Type::option(a));
  for (const auto& a : smaller)
    for (const auto& b : smaller) out.push_back(Type::fun({a, b}));
  return out;
}

namespace detail {

// Could some substitution equalize `a` and `b`, judging by their
// non-variable structure alone?
inline bool skeletons_agree(const Type& a, const Type& b) {
  if (a.is_var() || b.is_var()) return true;
  auto pairs = component_pairs(a, b);
  if (!pairs) return false;
  for (const auto& [x, y] : *pairs)
    if (!skeletons_agree(x, y)) return false;
  return true;
}

class OracleSearch {
 public:
  OracleSearch(const Type& t, const Type& s, std::vector<TypeVar> vars, std::vector<Type> candidates)
      : t_(t), s_(s), vars_(std::move(vars)), candidates_(std::move(candidates)) {}

  bool run(SubstitutionSet& found) { return step(0, SubstitutionSet{}, found); }

 private:
  bool step(std::size_t i, const SubstitutionSet& partial, SubstitutionSet& found) {
    Type l = apply_subst(partial, t_);
    Type r = apply_subst(partial, s_);
    if (!skeletons_agree(l, r)) return false;
    if (i == vars_.size()) {
      if (!(l == r)) return false;
      found = partial;
      return true;
    }
    for (const auto& c : candidates_) {
      SubstitutionSet next = partial;
      next.bind(vars_[i], c);
      if (step(i + 1, next, found)) return true;
    }
    return false;
  }

  Type t_;
  Type s_;
  std::vector<TypeVar> vars_;
  std::vector<Type> candidates_;
};

}  // namespace detail

/// Finds a ground substitution equalizing `t` and `s`, or reports a
/// mismatch when none exists within the budget.
inline ReductionOutcome oracle_unify(const Type& t, const Type& s, std::size_t var_budget = 2,
                                     std::size_t depth_budget = 3, std::uint64_t cap = 4'000'000) {
  std::set<TypeVar> vs = free_type_vars(t);
  for (const auto& v : free_type_vars(s)) vs.insert(v);
  if (vs.size() > var_budget)
    throw BudgetExceeded(std::to_string(vs.size()) + " variables exceed the budget of " + std::to_string(var_budget));
  std::vector<Type> candidates = ground_types(depth_budget);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    space *= candidates.size();
    if (space > cap) throw BudgetExceeded("search space of " + std::to_string(space) + " candidates exceeds the cap");
  }
  detail::OracleSearch search(t, s, std::vector<TypeVar>(vs.begin(), vs.end()), std::move(candidates));
  SubstitutionSet found;
  if (search.run(found)) return found;
  return ReductionFailure{MismatchError{t, s}};
}

}  // namespace isatype
