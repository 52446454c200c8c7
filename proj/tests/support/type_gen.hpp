#pragma once

// Hand-rolled generators for property tests.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isatype/oracle.hpp"
#include "isatype/substitution.hpp"
#include "isatype/type.hpp"

namespace isatype {

inline void PrintTo(const Type& t, std::ostream* os) { *os << to_string(t); }
inline void PrintTo(const SubstitutionSet& s, std::ostream* os) { *os << to_string(s); }

}  // namespace isatype

namespace isatype::testgen {

inline std::vector<Type> oracle_leaves() {
  return {Type::prim("nat"), Type::prim("bool"), Type::var("a"), Type::var("b")};
}

/// Every type over `leaves`, `list`, `option` and binary `=>` of depth at
/// most `depth` (leaves have depth 1).
inline std::vector<Type> all_types(std::size_t depth, const std::vector<Type>& leaves) {
  if (depth == 0) return {};
  std::vector<Type> out = leaves;
  if (depth == 1) return out;
  std::vector<Type> smaller = all_types(depth - 1, leaves);
  for (const auto& a : smaller) out.push_back(Type::list(a));
  for (const auto& a : smaller) out.push_back(Type::option(a));
  for (const auto& a : smaller)
    for (const auto& b : smaller) out.push_back(Type::fun({a, b}));
  return out;
}

/// A type in the oracle grammar of depth at most `depth`.
inline Type oracle_type(std::mt19937& rng, std::size_t depth, const std::vector<Type>& leaves) {
  std::uniform_int_distribution<int> pick(0, 9);
  int k = pick(rng);
  if (depth <= 1 || k < 3) return leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
  if (k < 5) return Type::list(oracle_type(rng, depth - 1, leaves));
  if (k < 7) return Type::option(oracle_type(rng, depth - 1, leaves));
  return Type::fun({oracle_type(rng, depth - 1, leaves), oracle_type(rng, depth - 1, leaves)});
}

/// Replaces random subterms of `t` by leaves; used to derive a partner
/// type that often unifies with `t`.
inline Type abstract_some(std::mt19937& rng, const Type& t, const std::vector<Type>& leaves) {
  std::uniform_int_distribution<int> pick(0, 3);
  if (pick(rng) == 0) return leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
  if (children(t).empty()) return t;
  return map_children(t, [&](const Type& c) { return abstract_some(rng, c, leaves); });
}

/// Pairs within depth 3 and the leaves {nat, bool, 'a, 'b}: half of them
/// independent, half derived from each other.
inline std::pair<Type, Type> oracle_pair(std::mt19937& rng) {
  const auto leaves = oracle_leaves();
  for (;;) {
    Type t = oracle_type(rng, 3, leaves);
    Type s = std::bernoulli_distribution(0.5)(rng) ? oracle_type(rng, 3, leaves) : abstract_some(rng, t, leaves);
    if (type_depth(t) <= 3 && type_depth(s) <= 3) return {t, s};
  }
}

/// Any well-formed type, including tuples, user constructors and counters.
inline Type any_type(std::mt19937& rng, std::size_t depth) {
  std::uniform_int_distribution<int> pick(0, 11);
  int k = pick(rng);
  if (depth <= 1 || k < 4) {
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0: return Type::prim("nat");
      case 1: return Type::prim("bool");
      case 2: return Type::var("a");
      case 3: return Type::var("b", 1);
      default: return Type::var("c", 7);
    }
  }
  switch (k) {
    case 4: return Type::list(any_type(rng, depth - 1));
    case 5: return Type::set(any_type(rng, depth - 1));
    case 6: return Type::option(any_type(rng, depth - 1));
    case 7: return Type::tuple(any_type(rng, depth - 1), any_type(rng, depth - 1));
    case 8: return Type::constructed({any_type(rng, depth - 1), any_type(rng, depth - 1)}, "pair");
    default: {
      std::vector<Type> parts;
      int n = std::uniform_int_distribution<int>(2, 4)(rng);
      for (int i = 0; i < n; ++i) parts.push_back(any_type(rng, depth - 1));
      return Type::fun(std::move(parts));
    }
  }
}

/// A substitution whose domain ({'a, 'b#1}) is disjoint from the variables
/// of its range, so it satisfies the idempotence invariant.
inline SubstitutionSet idempotent_subst(std::mt19937& rng) {
  auto range = [&]() {
    for (;;) {
      Type t = any_type(rng, 3);
      if (!occurs_in(TypeVar{"a", std::nullopt}, t) && !occurs_in(TypeVar{"b", 1}, t)) return t;
    }
  };
  SubstitutionSet s;
  if (std::bernoulli_distribution(0.8)(rng)) s.bind(TypeVar{"a", std::nullopt}, range());
  if (std::bernoulli_distribution(0.5)(rng)) s.bind(TypeVar{"b", 1}, range());
  return s;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".thy") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isatype::testgen
