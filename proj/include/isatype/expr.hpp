#pragma once

// Expression AST. Every node has a theory-unique id and a type slot that the
// inference pipeline fills in.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "isatype/type.hpp"

namespace isatype {

using NodeId = std::uint32_t;

struct SourceLocation {
  int line = 0;
  int column = 0;
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct SourceSpan {
  SourceLocation begin;
  SourceLocation end;
};

/// Owning pointer with value semantics, for recursive AST members.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

struct Expr;

enum class LiteralKind { Integral, Boolean };

struct ConstExpr {
  std::string literal;
  LiteralKind kind = LiteralKind::Integral;
};

struct VarExpr {
  std::string name;
};

/// How an application was written; inference treats all three alike.
enum class AppStyle { Prefix, Infix, KeywordIf };

/// Function application or value construction. A nullary constructor or
/// constant such as `Nil` is an application with no arguments.
struct AppExpr {
  std::string head;
  std::vector<Expr> args;
  AppStyle style = AppStyle::Prefix;
};

/// Parameters are VarExpr nodes so each binder owns a node id.
struct LambdaExpr {
  std::vector<Expr> params;
  Box<Expr> body;
};

struct CaseBranch {
  Box<Expr> pattern;
  Box<Expr> body;
};

struct CaseExpr {
  Box<Expr> scrutinee;
  std::vector<CaseBranch> branches;
};

struct LetInExpr {
  Box<Expr> pattern;
  Box<Expr> bound;
  Box<Expr> body;
};

struct ListExpr {
  std::vector<Expr> elems;
};

struct SetExpr {
  std::vector<Expr> elems;
};

enum class ExprKind { Const, Var, App, Lambda, Case, LetIn, List, Set };

struct Expr {
  using Node = std::variant<ConstExpr, VarExpr, AppExpr, LambdaExpr, CaseExpr, LetInExpr, ListExpr, SetExpr>;

  NodeId id = 0;
  SourceSpan span;
  Node node;
  std::optional<Type> type;

  ExprKind kind() const { return static_cast<ExprKind>(node.index()); }

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

inline std::string_view kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::Const: return "ConstExpr";
    case ExprKind::Var: return "VarExpr";
    case ExprKind::App: return "AppExpr";
    case ExprKind::Lambda: return "LambdaExpr";
    case ExprKind::Case: return "CaseExpr";
    case ExprKind::LetIn: return "LetInExpr";
    case ExprKind::List: return "ListExpr";
    case ExprKind::Set: return "SetExpr";
  }
  return "?";
}

/// Visits the direct children of `e` in source order.
template <class E, class F>
void for_each_child(E& e, F&& f) {
  std::visit(
      [&](auto& n) {
        using N = std::remove_cvref_t<decltype(n)>;
        if constexpr (std::is_same_v<N, AppExpr>) {
          for (auto& a : n.args) f(a);
        } else if constexpr (std::is_same_v<N, LambdaExpr>) {
          for (auto& p : n.params) f(p);
          f(*n.body);
        } else if constexpr (std::is_same_v<N, CaseExpr>) {
          f(*n.scrutinee);
          for (auto& b : n.branches) {
            f(*b.pattern);
            f(*b.body);
          }
        } else if constexpr (std::is_same_v<N, LetInExpr>) {
          f(*n.pattern);
          f(*n.bound);
          f(*n.body);
        } else if constexpr (std::is_same_v<N, ListExpr> || std::is_same_v<N, SetExpr>) {
          for (auto& x : n.elems) f(x);
        }
      },
      e.node);
}

template <class E, class F>
void walk_preorder(E& e, F&& f) {
  f(e);
  for_each_child(e, [&](auto& c) { walk_preorder(c, f); });
}

inline bool is_operator_name(std::string_view name) {
  return name == "=" || name == "<" || name == "+" || name == "-" || name == "*" ||
         name == "div" || name == "#" || name == "!";
}

/// Structural equality ignoring ids, spans and type slots.
inline bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return false;
  bool heads_match = std::visit(
      overloaded{
          [&](const ConstExpr& c) {
            const auto& o = *b.as<ConstExpr>();
            return c.literal == o.literal && c.kind == o.kind;
          },
          [&](const VarExpr& v) { return v.name == b.as<VarExpr>()->name; },
          [&](const AppExpr& x) {
            const auto& o = *b.as<AppExpr>();
            return x.head == o.head && x.style == o.style && x.args.size() == o.args.size();
          },
          [&](const LambdaExpr& l) { return l.params.size() == b.as<LambdaExpr>()->params.size(); },
          [&](const CaseExpr& c) { return c.branches.size() == b.as<CaseExpr>()->branches.size(); },
          [&](const ListExpr& l) { return l.elems.size() == b.as<ListExpr>()->elems.size(); },
          [&](const SetExpr& s) { return s.elems.size() == b.as<SetExpr>()->elems.size(); },
          [](const LetInExpr&) { return true; },
      },
      a.node);
  if (!heads_match) return false;
  std::vector<const Expr*> left, right;
  for_each_child(a, [&](const Expr& c) { left.push_back(&c); });
  for_each_child(b, [&](const Expr& c) { right.push_back(&c); });
  for (std::size_t i = 0; i < left.size(); ++i)
    if (!same_structure(*left[i], *right[i])) return false;
  return true;
}

namespace detail {

inline bool is_atomic(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Const:
    case ExprKind::Var:
    case ExprKind::List:
    case ExprKind::Set: return true;
    case ExprKind::App: return e.as<AppExpr>()->args.empty();
    default: return false;
  }
}

inline void print_source(const Expr& e, std::string& out);

inline void print_wrapped(const Expr& e, std::string& out, bool wrap) {
  if (wrap) out += '(';
  print_source(e, out);
  if (wrap) out += ')';
}

inline void print_elems(const std::vector<Expr>& elems, std::string& out) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    print_source(elems[i], out);
  }
}

inline void print_source(const Expr& e, std::string& out) {
  std::visit(overloaded{
                 [&](const ConstExpr& c) { out += c.literal; },
                 [&](const VarExpr& v) { out += v.name; },
                 [&](const AppExpr& a) {
                   if (a.style == AppStyle::Infix && a.args.size() == 2) {
                     print_wrapped(a.args[0], out, !is_atomic(a.args[0]) && !(a.args[0].kind() == ExprKind::App && a.args[0].as<AppExpr>()->style == AppStyle::Prefix));
                     out += ' ' + a.head + ' ';
                     print_wrapped(a.args[1], out, !is_atomic(a.args[1]) && !(a.args[1].kind() == ExprKind::App && a.args[1].as<AppExpr>()->style == AppStyle::Prefix));
                   } else if (a.style == AppStyle::KeywordIf && a.args.size() == 3) {
                     out += "if ";
                     print_source(a.args[0], out);
                     out += " then ";
                     print_source(a.args[1], out);
                     out += " else ";
                     print_source(a.args[2], out);
                   } else {
                     out += a.head;
                     for (const auto& arg : a.args) {
                       out += ' ';
                       print_wrapped(arg, out, !is_atomic(arg));
                     }
                   }
                 },
                 [&](const LambdaExpr& l) {
                   out += "\\<lambda>";
                   for (std::size_t i = 0; i < l.params.size(); ++i) {
                     if (i) out += ' ';
                     print_source(l.params[i], out);
                   }
                   out += ". ";
                   print_source(*l.body, out);
                 },
                 [&](const CaseExpr& c) {
                   out += "case ";
                   print_source(*c.scrutinee, out);
                   out += " of ";
                   for (std::size_t i = 0; i < c.branches.size(); ++i) {
                     if (i) out += " | ";
                     print_source(*c.branches[i].pattern, out);
                     out += " => ";
                     const Expr& body = *c.branches[i].body;
                     bool greedy = body.kind() == ExprKind::Case || body.kind() == ExprKind::Lambda ||
                                   body.kind() == ExprKind::LetIn;
                     print_wrapped(body, out, greedy && i + 1 < c.branches.size());
                   }
                 },
                 [&](const LetInExpr& l) {
                   out += "let ";
                   print_source(*l.pattern, out);
                   out += " = ";
                   print_source(*l.bound, out);
                   out += " in ";
                   print_source(*l.body, out);
                 },
                 [&](const ListExpr& l) {
                   out += '[';
                   print_elems(l.elems, out);
                   out += ']';
                 },
                 [&](const SetExpr& s) {
                   out += '{';
                   print_elems(s.elems, out);
                   out += '}';
                 },
             },
             e.node);
}

}  // namespace detail

/// Concrete syntax for `e` that the parser reads back to the same structure.
inline std::string to_source(const Expr& e) {
  std::string out;
  detail::print_source(e, out);
  return out;
}

/// Like `to_source`, but parenthesized so it can stand as an argument.
inline std::string to_source_atomic(const Expr& e) {
  std::string out;
  detail::print_wrapped(e, out, !detail::is_atomic(e));
  return out;
}

}  // namespace isatype
