#pragma once

// The abstract-concrete relation between types, reduction of a pair of
// types to a substitution set, and the two unification rules used by the
// bottom-up pass (one for applications, one for lambdas).

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "isatype/diagnostics.hpp"
#include "isatype/expr.hpp"
#include "isatype/substitution.hpp"
#include "isatype/type.hpp"
#include "isatype/type_context.hpp"

namespace isatype {

enum class Relation { MoreAbstractStrict, MoreAbstract, Incomparable };

/// True for both the strict and the non-strict relation.
inline bool more_abstract(Relation r) { return r != Relation::Incomparable; }

inline std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::MoreAbstractStrict: return "more-abstract-strict";
    case Relation::MoreAbstract: return "more-abstract";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

namespace detail {

inline Type fun_tail(const std::vector<Type>& parts, std::size_t from) {
  if (parts.size() - from == 1) return parts[from];
  return Type::fun(std::vector<Type>(parts.begin() + static_cast<std::ptrdiff_t>(from), parts.end()));
}

/// Component pairs of two function types. When one side has fewer parts its
/// last part is matched against the remaining suffix of the other:
/// `a => b` against `x => y => z` gives (a, x) and (b, y => z).
inline std::vector<std::pair<Type, Type>> align_fun(const std::vector<Type>& a, const std::vector<Type>& b) {
  std::size_t k = std::min(a.size(), b.size());
  std::vector<std::pair<Type, Type>> out;
  out.reserve(k);
  for (std::size_t i = 0; i + 1 < k; ++i) out.emplace_back(a[i], b[i]);
  out.emplace_back(fun_tail(a, k - 1), fun_tail(b, k - 1));
  return out;
}

/// Pairs of immediate components when `a` and `b` share an outer
/// constructor, nullopt when they clash. Not meaningful for variables.
inline std::optional<std::vector<std::pair<Type, Type>>> component_pairs(const Type& a, const Type& b) {
  if (a.kind() != b.kind()) return std::nullopt;
  using Pairs = std::vector<std::pair<Type, Type>>;
  return std::visit(
      overloaded{
          [&](const PrimType& p) -> std::optional<Pairs> {
            if (p.name != std::get<PrimType>(b.node().value).name) return std::nullopt;
            return Pairs{};
          },
          [&](const FunType& f) -> std::optional<Pairs> {
            return align_fun(f.parts, std::get<FunType>(b.node().value).parts);
          },
          [&](const TupleType& t) -> std::optional<Pairs> {
            const auto& o = std::get<TupleType>(b.node().value);
            return Pairs{{t.left, o.left}, {t.right, o.right}};
          },
          [&](const ConstructedType& c) -> std::optional<Pairs> {
            const auto& o = std::get<ConstructedType>(b.node().value);
            if (c.ctor != o.ctor || c.args.size() != o.args.size()) return std::nullopt;
            Pairs out;
            for (std::size_t i = 0; i < c.args.size(); ++i) out.emplace_back(c.args[i], o.args[i]);
            return out;
          },
          [](const auto&) -> std::optional<Pairs> { return std::nullopt; },
      },
      a.node().value);
}

}  // namespace detail

/// `t ⪰ s`: `t` can be specialized to `s` position by position. A variable
/// is more abstract than anything it does not occur in; two variables are
/// mutually more abstract.
inline Relation compare(const Type& t, const Type& s) {
  if (t.is_bottom() || s.is_bottom()) return Relation::Incomparable;
  if (const auto* v = t.as_var()) {
    if (s.is_var()) return Relation::MoreAbstract;
    return occurs_in(*v, s) ? Relation::Incomparable : Relation::MoreAbstractStrict;
  }
  if (s.is_var()) return Relation::Incomparable;
  auto pairs = detail::component_pairs(t, s);
  if (!pairs) return Relation::Incomparable;
  bool strict = false;
  for (const auto& [a, b] : *pairs) {
    Relation r = compare(a, b);
    if (r == Relation::Incomparable) return r;
    strict = strict || r == Relation::MoreAbstractStrict;
  }
  return strict ? Relation::MoreAbstractStrict : Relation::MoreAbstract;
}

struct MismatchError {
  Type left;
  Type right;
};

struct OccursError {
  TypeVar var;
  Type type;
};

struct ConflictError {
  TypeVar var;
  Type first;
  Type second;
};

using ReductionFailure = std::variant<MismatchError, OccursError, ConflictError>;

inline std::string describe(const ReductionFailure& f) {
  return std::visit(overloaded{
                        [](const MismatchError& m) {
                          return "cannot match " + to_string(m.left) + " with " + to_string(m.right);
                        },
                        [](const OccursError& o) {
                          return "type variable " + to_string(o.var) + " occurs in " + to_string(o.type);
                        },
                        [](const ConflictError& c) {
                          return "type variable " + to_string(c.var) + " is bound to both " + to_string(c.first) +
                                 " and " + to_string(c.second);
                        },
                    },
                    f);
}

inline DiagnosticKind diagnostic_kind(const ReductionFailure& f) {
  switch (f.index()) {
    case 1: return DiagnosticKind::Occurs;
    case 2: return DiagnosticKind::Conflict;
    default: return DiagnosticKind::Mismatch;
  }
}

class ReductionOutcome {
 public:
  ReductionOutcome(SubstitutionSet s) : value_(std::move(s)) {}
  ReductionOutcome(ReductionFailure f) : value_(std::move(f)) {}

  bool ok() const { return value_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const SubstitutionSet& substitutions() const { return std::get<SubstitutionSet>(value_); }
  const ReductionFailure& failure() const { return std::get<ReductionFailure>(value_); }

 private:
  std::variant<SubstitutionSet, ReductionFailure> value_;
};

namespace detail {

// Placeholders are bound first, then fresher variables, so user-written
// variables survive.
inline auto bind_priority(const TypeVar& v) {
  return std::make_tuple(v.is_placeholder(), v.counter.has_value(), v.counter.value_or(0));
}

class Reducer {
 public:
  std::optional<ReductionFailure> unify(const Type& a, const Type& b) {
    if (contains_bottom(a) || contains_bottom(b)) return MismatchError{resolve(a), resolve(b)};
    if (const auto* v = a.as_var(); v && bound(*v)) return through_binding(*v, bindings_.at(*v), b);
    if (const auto* v = b.as_var(); v && bound(*v)) return through_binding(*v, bindings_.at(*v), a);
    const auto* va = a.as_var();
    const auto* vb = b.as_var();
    if (va && vb) {
      if (*va == *vb) return std::nullopt;
      if (bind_priority(*vb) > bind_priority(*va)) return bind(*vb, a);
      return bind(*va, b);
    }
    if (va) return bind(*va, b);
    if (vb) return bind(*vb, a);
    auto pairs = component_pairs(a, b);
    if (!pairs) return MismatchError{resolve(a), resolve(b)};
    for (const auto& [x, y] : *pairs)
      if (auto err = unify(x, y)) return err;
    return std::nullopt;
  }

  SubstitutionSet result() const {
    SubstitutionSet out;
    for (const auto& [v, t] : bindings_) {
      Type r = resolve(t);
      if (const auto* w = r.as_var(); w && *w == v) continue;
      out.bind(v, std::move(r));
    }
    return out;
  }

 private:
  bool bound(const TypeVar& v) const { return bindings_.contains(v); }

  Type resolve(const Type& t) const {
    if (const auto* v = t.as_var()) {
      auto it = bindings_.find(*v);
      return it == bindings_.end() ? t : resolve(it->second);
    }
    if (children(t).empty()) return t;
    return map_children(t, [&](const Type& c) { return resolve(c); });
  }

  std::optional<ReductionFailure> through_binding(const TypeVar& v, const Type& old, const Type& other) {
    Type old_r = resolve(old);
    Type other_r = resolve(other);
    auto err = unify(old, other);
    if (err && std::holds_alternative<MismatchError>(*err)) return ConflictError{v, old_r, other_r};
    return err;
  }

  std::optional<ReductionFailure> bind(const TypeVar& v, const Type& t) {
    Type r = resolve(t);
    if (const auto* w = r.as_var(); w && *w == v) return std::nullopt;
    if (occurs_in(v, r)) return OccursError{v, r};
    bindings_.emplace(v, r);
    return std::nullopt;
  }

  std::map<TypeVar, Type> bindings_;
};

}  // namespace detail

/// Decomposes `t ⪰ s` into variable bindings. The result is idempotent and
/// equalizes the two types. A variable on either side may be bound; when
/// both sides are variables, placeholders and fresher variables are bound
/// to the other one, ties going to the left.
inline ReductionOutcome reduce(const Type& t, const Type& s) {
  detail::Reducer r;
  if (auto err = r.unify(t, s)) return *err;
  return r.result();
}

namespace detail {

inline std::optional<Type> param_at(const Type& head, std::size_t argc, std::size_t i) {
  if (param_count(head) < argc) return std::nullopt;
  return split_application(head, argc).params[i];
}

}  // namespace detail

/// Uni-App. Unifies each argument's inferred type with the matching
/// parameter of the application's head type (stored in `g` under the
/// application's id) and applies every substitution to all of `g`. The
/// application's own type becomes what is left of the head after the
/// arguments; ⊥ if any argument is ⊥.
inline void unify_app(TypeContext& g, const Expr& app, InferenceLog& log) {
  const auto& a = *app.as<AppExpr>();
  std::size_t argc = a.args.size();
  bool poisoned = false;
  for (std::size_t i = 0; i < argc; ++i) {
    const Expr& arg = a.args[i];
    const Type* sigma_p = g.type_of(arg.id);
    if (!sigma_p || sigma_p->is_bottom()) {
      poisoned = true;
      continue;
    }
    Type sigma = *sigma_p;
    auto tau = detail::param_at(*g.head_type_of(app.id), argc, i);
    if (!tau) return;
    std::optional<ReductionOutcome> out;
    if (more_abstract(compare(sigma, *tau))) {
      out = reduce(sigma, *tau);
    } else if (more_abstract(compare(*tau, sigma))) {
      out = reduce(*tau, sigma);
    }
    if (!out) {
      log.error(arg, DiagnosticKind::Mismatch,
                "argument " + std::to_string(i + 1) + " of '" + a.head + "' has type " + to_string(sigma) +
                    " but " + to_string(*tau) + " is expected");
      g.set(arg.id, Type::bottom());
      poisoned = true;
      continue;
    }
    if (!out->ok()) {
      log.error(arg, diagnostic_kind(out->failure()), describe(out->failure()));
      g.set(arg.id, Type::bottom());
      poisoned = true;
      continue;
    }
    g.apply(out->substitutions());
    log.rule("Uni-App", arg.id, sigma, *g.type_of(arg.id));
  }
  Type result = poisoned ? Type::bottom() : split_application(*g.head_type_of(app.id), argc).result;
  g.set(app.id, result);
}

/// Uni-Abs. Links each lambda parameter that appears directly as an argument
/// of the body application to that argument's parameter type, then sets the
/// lambda's type from its parameters and body.
inline void unify_abs(TypeContext& g, const Expr& lambda, InferenceLog& log) {
  const auto& l = *lambda.as<LambdaExpr>();
  const Expr& body = *l.body;
  if (const auto* app = body.as<AppExpr>(); app && g.head_type_of(body.id)) {
    for (std::size_t i = 0; i < app->args.size(); ++i) {
      const Expr& arg = app->args[i];
      if (arg.kind() != ExprKind::Var) continue;
      auto binder = g.binder_of(arg.id);
      if (!binder) continue;
      bool is_param = false;
      for (const auto& p : l.params) is_param = is_param || p.id == *binder;
      if (!is_param) continue;
      const Type* param_type = g.type_of(*binder);
      auto tau = detail::param_at(*g.head_type_of(body.id), app->args.size(), i);
      if (!param_type || param_type->is_bottom() || !tau) continue;
      Type before = *param_type;
      ReductionOutcome out = reduce(before, *tau);
      if (!out.ok()) continue;
      g.apply(out.substitutions());
      log.rule("Uni-Abs", *binder, before, *g.type_of(*binder));
    }
  }
  const Type* body_type = g.type_of(body.id);
  if (!body_type || body_type->is_bottom()) {
    g.set(lambda.id, Type::bottom());
    return;
  }
  std::vector<Type> parts;
  for (const auto& p : l.params) {
    const Type* pt = g.type_of(p.id);
    if (!pt || pt->is_bottom()) {
      g.set(lambda.id, Type::bottom());
      return;
    }
    parts.push_back(*pt);
  }
  parts.push_back(*body_type);
  g.set(lambda.id, Type::fun(std::move(parts)));
}

}  // namespace isatype
