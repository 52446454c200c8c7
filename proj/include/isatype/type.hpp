#pragma once

// Type expressions: variables (with an optional modification counter),
// primitives, curried function types, tuples, constructed types and the
// error type.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "isatype/overloaded.hpp"

namespace isatype {

/// A type variable. `'a` and `'a#1` are different variables; the counter is
/// the suffix added when a scheme is instantiated.
struct TypeVar {
  std::string name;
  std::optional<std::uint32_t> counter;

  /// Placeholders name the parameters of a lambda before anything is known
  /// about them; they live in the reserved `lambda@k` namespace.
  bool is_placeholder() const { return name.starts_with("lambda@"); }

  friend auto operator<=>(const TypeVar&, const TypeVar&) = default;
  friend bool operator==(const TypeVar&, const TypeVar&) = default;
};

inline std::string to_string(const TypeVar& v) {
  std::string out = "'" + v.name;
  if (v.counter) out += "#" + std::to_string(*v.counter);
  return out;
}

struct TypeNode;

enum class TypeKind { Var, Prim, Fun, Tuple, Constructed, Bottom };

/// Immutable, cheaply copyable handle to a type expression.
class Type {
 public:
  static Type var(std::string name, std::optional<std::uint32_t> counter = std::nullopt);
  static Type var(TypeVar v);
  static Type prim(std::string name);
  /// Builds `p1 => ... => pn`. A trailing function part is flattened into the
  /// result, so a function type never ends in a function type.
  static Type fun(std::vector<Type> parts);
  static Type tuple(Type left, Type right);
  static Type constructed(std::vector<Type> args, std::string ctor);
  static Type list(Type elem) { return constructed({std::move(elem)}, "list"); }
  static Type set(Type elem) { return constructed({std::move(elem)}, "set"); }
  static Type option(Type elem) { return constructed({std::move(elem)}, "option"); }
  static Type bottom();

  TypeKind kind() const;
  const TypeNode& node() const { return *node_; }

  bool is_var() const { return kind() == TypeKind::Var; }
  bool is_bottom() const { return kind() == TypeKind::Bottom; }
  bool is_fun() const { return kind() == TypeKind::Fun; }

  const TypeVar* as_var() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  explicit Type(std::shared_ptr<const TypeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TypeNode> node_;
};

struct PrimType {
  std::string name;
};

struct FunType {
  std::vector<Type> parts;  // size >= 2, last part is never a FunType
};

struct TupleType {
  Type left;
  Type right;
};

struct ConstructedType {
  std::vector<Type> args;
  std::string ctor;
};

struct BottomType {};

struct TypeNode {
  std::variant<TypeVar, PrimType, FunType, TupleType, ConstructedType, BottomType> value;
};

inline Type Type::var(std::string name, std::optional<std::uint32_t> counter) {
  return var(TypeVar{std::move(name), counter});
}

inline Type Type::var(TypeVar v) {
  return Type(std::make_shared<const TypeNode>(TypeNode{std::move(v)}));
}

inline Type Type::prim(std::string name) {
  return Type(std::make_shared<const TypeNode>(TypeNode{PrimType{std::move(name)}}));
}

inline Type Type::fun(std::vector<Type> parts) {
  if (parts.size() < 2) throw std::invalid_argument("function type needs at least two parts");
  while (parts.back().is_fun()) {
    auto tail = std::get<FunType>(parts.back().node().value).parts;
    parts.pop_back();
    parts.insert(parts.end(), tail.begin(), tail.end());
  }
  return Type(std::make_shared<const TypeNode>(TypeNode{FunType{std::move(parts)}}));
}

inline Type Type::tuple(Type left, Type right) {
  return Type(std::make_shared<const TypeNode>(TypeNode{TupleType{std::move(left), std::move(right)}}));
}

inline Type Type::constructed(std::vector<Type> args, std::string ctor) {
  if ((ctor == "list" || ctor == "set" || ctor == "option") && args.size() != 1)
    throw std::invalid_argument("type constructor " + ctor + " takes exactly one argument");
  return Type(std::make_shared<const TypeNode>(
      TypeNode{ConstructedType{std::move(args), std::move(ctor)}}));
}

inline Type Type::bottom() {
  static const Type bot(std::make_shared<const TypeNode>(TypeNode{BottomType{}}));
  return bot;
}

inline TypeKind Type::kind() const { return static_cast<TypeKind>(node_->value.index()); }

inline const TypeVar* Type::as_var() const { return std::get_if<TypeVar>(&node_->value); }

inline bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node_->value;
  const auto& y = b.node_->value;
  if (x.index() != y.index()) return false;
  return std::visit(
      overloaded{
          [&](const TypeVar& v) { return v == std::get<TypeVar>(y); },
          [&](const PrimType& p) { return p.name == std::get<PrimType>(y).name; },
          [&](const FunType& f) { return f.parts == std::get<FunType>(y).parts; },
          [&](const TupleType& t) {
            const auto& o = std::get<TupleType>(y);
            return t.left == o.left && t.right == o.right;
          },
          [&](const ConstructedType& c) {
            const auto& o = std::get<ConstructedType>(y);
            return c.ctor == o.ctor && c.args == o.args;
          },
          [](const BottomType&) { return true; },
      },
      x);
}

/// Immediate sub-expressions in left-to-right order.
inline std::vector<Type> children(const Type& t) {
  return std::visit(overloaded{
                        [](const FunType& f) { return f.parts; },
                        [](const TupleType& p) { return std::vector<Type>{p.left, p.right}; },
                        [](const ConstructedType& c) { return c.args; },
                        [](const auto&) { return std::vector<Type>{}; },
                    },
                    t.node().value);
}

inline void collect_type_vars(const Type& t, std::set<TypeVar>& out) {
  if (const auto* v = t.as_var()) {
    out.insert(*v);
    return;
  }
  for (const auto& c : children(t)) collect_type_vars(c, out);
}

/// Var(t): every type variable occurring in `t`.
inline std::set<TypeVar> free_type_vars(const Type& t) {
  std::set<TypeVar> out;
  collect_type_vars(t, out);
  return out;
}

inline bool occurs_in(const TypeVar& v, const Type& t) {
  if (const auto* w = t.as_var()) return *w == v;
  for (const auto& c : children(t))
    if (occurs_in(v, c)) return true;
  return false;
}

inline bool contains_bottom(const Type& t) {
  if (t.is_bottom()) return true;
  for (const auto& c : children(t))
    if (contains_bottom(c)) return true;
  return false;
}

/// Rebuilds `t` with `f` applied to every immediate child.
template <class F>
Type map_children(const Type& t, F&& f) {
  return std::visit(overloaded{
                        [&](const FunType& fn) {
                          std::vector<Type> parts;
                          parts.reserve(fn.parts.size());
                          for (const auto& p : fn.parts) parts.push_back(f(p));
                          return Type::fun(std::move(parts));
                        },
                        [&](const TupleType& p) { return Type::tuple(f(p.left), f(p.right)); },
                        [&](const ConstructedType& c) {
                          std::vector<Type> args;
                          args.reserve(c.args.size());
                          for (const auto& a : c.args) args.push_back(f(a));
                          return Type::constructed(std::move(args), c.ctor);
                        },
                        [&](const auto&) { return t; },
                    },
                    t.node().value);
}

/// Parameter types and result of an application to `argc` arguments:
/// `t1 => ... => tn => r` applied to k arguments yields `t(k+1) => ... => r`.
struct Arity {
  std::vector<Type> params;
  Type result;
};

inline std::size_t param_count(const Type& t) {
  if (const auto* f = std::get_if<FunType>(&t.node().value)) return f->parts.size() - 1;
  return 0;
}

inline Arity split_application(const Type& head, std::size_t argc) {
  if (argc == 0) return {{}, head};
  const auto& parts = std::get<FunType>(head.node().value).parts;
  if (argc > parts.size() - 1) throw std::out_of_range("too many arguments for function type");
  Arity out{std::vector<Type>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(argc)),
            Type::bottom()};
  if (argc == parts.size() - 1) {
    out.result = parts.back();
  } else {
    out.result = Type::fun(std::vector<Type>(parts.begin() + static_cast<std::ptrdiff_t>(argc), parts.end()));
  }
  return out;
}

namespace detail {

inline void print_type(const Type& t, std::string& out);

inline void print_atomic(const Type& t, std::string& out) {
  bool wrap = t.kind() == TypeKind::Fun || t.kind() == TypeKind::Tuple;
  if (wrap) out += '(';
  print_type(t, out);
  if (wrap) out += ')';
}

inline void print_type(const Type& t, std::string& out) {
  std::visit(overloaded{
                 [&](const TypeVar& v) { out += to_string(v); },
                 [&](const PrimType& p) { out += p.name; },
                 [&](const FunType& f) {
                   for (std::size_t i = 0; i < f.parts.size(); ++i) {
                     if (i) out += " => ";
                     if (f.parts[i].is_fun()) {
                       out += '(';
                       print_type(f.parts[i], out);
                       out += ')';
                     } else {
                       print_type(f.parts[i], out);
                     }
                   }
                 },
                 [&](const TupleType& p) {
                   bool wrap_left = p.left.kind() == TypeKind::Tuple || p.left.is_fun();
                   if (wrap_left) out += '(';
                   print_type(p.left, out);
                   if (wrap_left) out += ')';
                   out += " * ";
                   if (p.right.is_fun()) out += '(';
                   print_type(p.right, out);
                   if (p.right.is_fun()) out += ')';
                 },
                 [&](const ConstructedType& c) {
                   if (c.args.size() == 1) {
                     print_atomic(c.args[0], out);
                     out += ' ';
                   } else if (c.args.size() > 1) {
                     out += '(';
                     for (std::size_t i = 0; i < c.args.size(); ++i) {
                       if (i) out += ", ";
                       print_type(c.args[i], out);
                     }
                     out += ") ";
                   }
                   out += c.ctor;
                 },
                 [&](const BottomType&) { out += "<error>"; },
             },
             t.node().value);
}

}  // namespace detail

/// Surface syntax accepted by `parse_type`, e.g. `('d => 'e) => 'd list => 'e list`.
inline std::string to_string(const Type& t) {
  std::string out;
  detail::print_type(t, out);
  return out;
}

}  // namespace isatype
