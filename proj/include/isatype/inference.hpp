#pragma once

// Per-equation inference: pattern extraction (EX), bottom-up inference with
// unification (BU) and top-down completion against the declared result
// type (TD).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isatype/diagnostics.hpp"
#include "isatype/expr.hpp"
#include "isatype/parser.hpp"
#include "isatype/solver_registry.hpp"
#include "isatype/substitution.hpp"
#include "isatype/type.hpp"
#include "isatype/type_context.hpp"
#include "isatype/unify.hpp"

namespace isatype {

/// A function specification whose every pattern and rhs node carries a type.
struct TypedSpec {
  FunctionSpec spec;
  std::map<NodeId, Type> types;
  std::vector<Diagnostic> diagnostics;

  Type type_of(NodeId id) const {
    auto it = types.find(id);
    return it == types.end() ? Type::bottom() : it->second;
  }
};

class InferenceSession {
 public:
  explicit InferenceSession(SolverRegistry registry = SolverRegistry::with_prelude())
      : registry_(std::move(registry)) {}

  SolverRegistry& registry() { return registry_; }
  const SolverRegistry& registry() const { return registry_; }
  TypeContext& context() { return ctx_; }
  const TypeContext& context() const { return ctx_; }
  const std::vector<Diagnostic>& diagnostics() const { return log_.diagnostics(); }
  std::uint32_t lambda_counter() const { return lambda_counter_; }

  void set_trace(TraceSink sink) { log_.set_trace(std::move(sink)); }

  /// EX. The pattern's own type must already be in the context. Variables
  /// bound by the pattern are added to the innermost scope.
  void extract_pattern_types(const Expr& p) {
    const Type* known_p = ctx_.type_of(p.id);
    if (!known_p || known_p->is_bottom()) {
      poison_pattern(p);
      return;
    }
    Type known = *known_p;
    switch (p.kind()) {
      case ExprKind::Var:
        ctx_.bind(p.as<VarExpr>()->name, p.id);
        return;
      case ExprKind::Const: {
        Type lit = literal_type(*p.as<ConstExpr>());
        if (!unify_pair(p, known, lit, "pattern")) {
          ctx_.set(p.id, Type::bottom());
          return;
        }
        ctx_.set(p.id, lit);
        return;
      }
      case ExprKind::App: extract_constructor(p, known); return;
      case ExprKind::List:
      case ExprKind::Set: extract_collection(p, known); return;
      default:
        log_.error(p, DiagnosticKind::Unsupported, std::string(kind_name(p.kind())) + " cannot be used as a pattern");
        poison_pattern(p);
        return;
    }
  }

  /// BU. Free variables of `e` must be bound in the context's scopes.
  void bottom_up(const Expr& e) {
    std::visit(overloaded{
                   [&](const ConstExpr& c) { assign("Exp-BU", e, literal_type(c)); },
                   [&](const VarExpr& v) { infer_var(e, v); },
                   [&](const AppExpr& a) { infer_app(e, a); },
                   [&](const ListExpr& l) { infer_collection(e, l.elems, "list", "List-BU"); },
                   [&](const SetExpr& s) { infer_collection(e, s.elems, "set", "Set-BU"); },
                   [&](const LetInExpr& l) { infer_let(e, l); },
                   [&](const CaseExpr& c) { infer_case(e, c); },
                   [&](const LambdaExpr& l) { infer_lambda(e, l); },
               },
               e.node);
  }

  /// TD. The node's expected type must already be in the context.
  void top_down(const Expr& e) {
    const Type* self = ctx_.type_of(e.id);
    if (!self || self->is_bottom()) return;
    Type expected = *self;
    std::visit(overloaded{
                   [&](const AppExpr& a) { complete_app(e, a, expected); },
                   [&](const ListExpr& l) { complete_collection(l.elems, expected, "List-TD"); },
                   [&](const SetExpr& s) { complete_collection(s.elems, expected, "Set-TD"); },
                   [&](const LetInExpr& l) {
                     replace_if_more_abstract(*l.body, expected, "Let-TD");
                     top_down(*l.body);
                   },
                   [&](const CaseExpr& c) {
                     for (const auto& b : c.branches) {
                       replace_if_more_abstract(*b.body, expected, "Case-TD");
                       top_down(*b.body);
                     }
                   },
                   [](const auto&) {},
               },
               e.node);
  }

  TypedSpec infer_spec(const FunctionSpec& f) {
    if (!registry_.contains(f.name)) registry_.register_function(f);
    TypedSpec out{f, {}, {}};
    std::size_t first_diag = log_.diagnostics().size();
    std::size_t arity = f.param_count();
    std::vector<Type> params = f.param_types();
    Type result = f.return_type();
    for (std::size_t i = 0; i < f.equations.size(); ++i) {
      const Equation& eq = f.equations[i];
      ctx_ = TypeContext{};
      ctx_.push_scope();
      for (std::size_t j = 0; j < eq.patterns.size() && j < arity; ++j) {
        ctx_.set(eq.patterns[j].id, params[j]);
        log_.rule("Seed", eq.patterns[j].id, std::nullopt, params[j]);
        extract_pattern_types(eq.patterns[j]);
      }
      bottom_up(eq.rhs);
      complete_root(eq.rhs, result);
      Equation& typed = out.spec.equations[i];
      auto fill = [&](Expr& node) {
        const Type* t = ctx_.type_of(node.id);
        node.type = t ? *t : Type::bottom();
        out.types.insert_or_assign(node.id, *node.type);
      };
      for (auto& p : typed.patterns) walk_preorder(p, fill);
      walk_preorder(typed.rhs, fill);
    }
    ctx_ = TypeContext{};
    const auto& all = log_.diagnostics();
    out.diagnostics.assign(all.begin() + static_cast<std::ptrdiff_t>(first_diag), all.end());
    return out;
  }

 private:
  static Type literal_type(const ConstExpr& c) {
    return Type::prim(c.kind == LiteralKind::Boolean ? "bool" : "nat");
  }

  void assign(const char* rule, const Expr& e, Type t) {
    std::optional<Type> before;
    if (const Type* old = ctx_.type_of(e.id)) before = *old;
    log_.rule(rule, e.id, before, t);
    ctx_.set(e.id, std::move(t));
  }

  Type type_or_bottom(NodeId id) const {
    const Type* t = ctx_.type_of(id);
    return t ? *t : Type::bottom();
  }

  Type fresh_placeholder() { return Type::var("lambda@" + std::to_string(lambda_counter_++)); }

  // Uni-App style agreement between a node's type and the type its context
  // demands. Failures are reported on `at`.
  bool unify_pair(const Expr& at, const Type& sigma, const Type& tau, const std::string& what) {
    if (sigma.is_bottom() || tau.is_bottom()) return false;
    std::optional<ReductionOutcome> out;
    if (more_abstract(compare(sigma, tau))) {
      out = reduce(sigma, tau);
    } else if (more_abstract(compare(tau, sigma))) {
      out = reduce(tau, sigma);
    }
    if (!out) {
      log_.error(at, DiagnosticKind::Mismatch,
                 what + " has type " + to_string(sigma) + " but " + to_string(tau) + " is expected");
      return false;
    }
    if (!out->ok()) {
      log_.error(at, diagnostic_kind(out->failure()), describe(out->failure()));
      return false;
    }
    ctx_.apply(out->substitutions());
    return true;
  }

  void poison_pattern(const Expr& p) {
    walk_preorder(p, [&](const Expr& n) {
      ctx_.set(n.id, Type::bottom());
      if (const auto* v = n.as<VarExpr>()) ctx_.bind(v->name, n.id);
    });
  }

  void extract_constructor(const Expr& p, const Type& known) {
    const auto& a = *p.as<AppExpr>();
    const TypeScheme* scheme = registry_.find(a.head);
    if (!scheme) {
      log_.error(p, DiagnosticKind::UnknownName, "unknown constructor '" + a.head + "'");
      poison_pattern(p);
      return;
    }
    Type instance = registry_.instantiate(a.head);
    if (param_count(instance) != a.args.size()) {
      log_.error(p, DiagnosticKind::Mismatch,
                 "constructor '" + a.head + "' takes " + std::to_string(param_count(instance)) + " arguments, " +
                     std::to_string(a.args.size()) + " given");
      poison_pattern(p);
      return;
    }
    ctx_.set_head_type(p.id, instance);
    Type ret = split_application(instance, a.args.size()).result;
    if (!unify_pair(p, ret, known, "pattern " + to_source(p))) {
      poison_pattern(p);
      return;
    }
    log_.rule("App-TD", p.id, known, type_or_bottom(p.id));
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      Type param = split_application(*ctx_.head_type_of(p.id), a.args.size()).params[i];
      assign("App-TD", a.args[i], param);
      extract_pattern_types(a.args[i]);
    }
  }

  void extract_collection(const Expr& p, const Type& known) {
    bool is_list = p.kind() == ExprKind::List;
    const char* ctor = is_list ? "list" : "set";
    const auto& elems = is_list ? p.as<ListExpr>()->elems : p.as<SetExpr>()->elems;
    if (known.is_var()) {
      ReductionOutcome out = reduce(known, registry_.instantiate(is_list ? "Nil" : "EmptySet"));
      if (out.ok()) ctx_.apply(out.substitutions());
    }
    Type now = type_or_bottom(p.id);
    const auto* c = std::get_if<ConstructedType>(&now.node().value);
    if (!c || c->ctor != ctor) {
      log_.error(p, DiagnosticKind::Mismatch,
                 std::string(is_list ? "list" : "set") + " pattern cannot have type " + to_string(now));
      poison_pattern(p);
      return;
    }
    for (const auto& elem : elems) {
      Type current = type_or_bottom(p.id);
      const auto* cc = std::get_if<ConstructedType>(&current.node().value);
      if (!cc) {
        poison_pattern(elem);
        continue;
      }
      assign(is_list ? "List-TD" : "Set-TD", elem, cc->args[0]);
      extract_pattern_types(elem);
    }
  }

  void infer_var(const Expr& e, const VarExpr& v) {
    auto binder = ctx_.resolve(v.name);
    if (!binder) {
      log_.error(e, DiagnosticKind::UnknownName, "unknown variable '" + v.name + "'");
      assign("Exp-BU", e, Type::bottom());
      return;
    }
    ctx_.record_occurrence(e.id, *binder);
    assign("Exp-BU", e, type_or_bottom(*binder));
  }

  std::optional<Type> head_instance(const Expr& e, const AppExpr& a) {
    if (auto binder = ctx_.resolve(a.head)) {
      Type bt = type_or_bottom(*binder);
      if (bt.is_var() && !a.args.empty()) {
        std::vector<Type> parts;
        for (std::size_t i = 0; i <= a.args.size(); ++i) parts.push_back(fresh_placeholder());
        ReductionOutcome out = reduce(bt, Type::fun(std::move(parts)));
        if (out.ok()) ctx_.apply(out.substitutions());
        bt = type_or_bottom(*binder);
      }
      return bt;
    }
    if (!registry_.contains(a.head)) {
      log_.error(e, DiagnosticKind::UnknownName, "unknown function or constructor '" + a.head + "'");
      return std::nullopt;
    }
    return registry_.instantiate(a.head);
  }

  void infer_app(const Expr& e, const AppExpr& a) {
    for (const auto& arg : a.args) bottom_up(arg);
    auto head = head_instance(e, a);
    if (!head || head->is_bottom()) {
      assign("App-BU", e, Type::bottom());
      return;
    }
    if (param_count(*head) < a.args.size()) {
      log_.error(e, DiagnosticKind::Mismatch,
                 "'" + a.head + "' of type " + to_string(*head) + " is applied to " + std::to_string(a.args.size()) +
                     " arguments");
      assign("App-BU", e, Type::bottom());
      return;
    }
    ctx_.set_head_type(e.id, *head);
    unify_app(ctx_, e, log_);
    log_.rule("App-BU", e.id, std::nullopt, type_or_bottom(e.id));
  }

  void infer_collection(const Expr& e, const std::vector<Expr>& elems, const char* ctor, const char* rule) {
    bool is_list = std::string_view(ctor) == "list";
    if (elems.empty()) {
      assign(rule, e, registry_.instantiate(is_list ? "Nil" : "EmptySet"));
      return;
    }
    for (const auto& x : elems) bottom_up(x);
    Type first = type_or_bottom(elems[0].id);
    if (first.is_bottom()) {
      assign(rule, e, Type::bottom());
      return;
    }
    assign(rule, e, Type::constructed({first}, ctor));
    bool poisoned = false;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      Type sigma = type_or_bottom(elems[i].id);
      Type tau = std::get<ConstructedType>(type_or_bottom(e.id).node().value).args[0];
      if (sigma.is_bottom()) {
        poisoned = true;
      } else if (!unify_pair(elems[i], sigma, tau, std::string(is_list ? "list" : "set") + " element")) {
        ctx_.set(elems[i].id, Type::bottom());
        poisoned = true;
      }
    }
    if (poisoned) ctx_.set(e.id, Type::bottom());
  }

  void infer_let(const Expr& e, const LetInExpr& l) {
    bottom_up(*l.bound);
    ctx_.push_scope();
    assign("Let-BU", *l.pattern, type_or_bottom(l.bound->id));
    extract_pattern_types(*l.pattern);
    bottom_up(*l.body);
    ctx_.pop_scope();
    assign("Let-BU", e, type_or_bottom(l.body->id));
  }

  void infer_case(const Expr& e, const CaseExpr& c) {
    bottom_up(*c.scrutinee);
    for (const auto& b : c.branches) {
      ctx_.push_scope();
      assign("Case-BU", *b.pattern, type_or_bottom(c.scrutinee->id));
      extract_pattern_types(*b.pattern);
      bottom_up(*b.body);
      ctx_.pop_scope();
    }
    const Expr& first = *c.branches.front().body;
    for (std::size_t i = 1; i < c.branches.size(); ++i) {
      const Expr& body = *c.branches[i].body;
      Type sigma = type_or_bottom(body.id);
      Type tau = type_or_bottom(first.id);
      if (sigma.is_bottom() || tau.is_bottom()) continue;
      if (!unify_pair(body, sigma, tau, "case branch " + std::to_string(i + 1))) ctx_.set(body.id, Type::bottom());
    }
    assign("Case-BU", e, type_or_bottom(first.id));
  }

  void infer_lambda(const Expr& e, const LambdaExpr& l) {
    ctx_.push_scope();
    for (const auto& p : l.params) {
      assign("Abs-BU", p, fresh_placeholder());
      ctx_.bind(p.as<VarExpr>()->name, p.id);
    }
    bottom_up(*l.body);
    ctx_.pop_scope();
    unify_abs(ctx_, e, log_);
    log_.rule("Abs-BU", e.id, std::nullopt, type_or_bottom(e.id));
  }

  // Writes the declared result type into the rhs root, then runs TD.
  void complete_root(const Expr& rhs, const Type& declared) {
    Type current = type_or_bottom(rhs.id);
    if (current.is_bottom()) return;
    if (more_abstract(compare(current, declared))) {
      ReductionOutcome out = reduce(current, declared);
      if (out.ok()) {
        ctx_.apply(out.substitutions());
        assign("TD", rhs, declared);
        top_down(rhs);
        return;
      }
    }
    log_.error(rhs, DiagnosticKind::Mismatch,
               "right-hand side has type " + to_string(current) + " but the declared result type is " +
                   to_string(declared));
    ctx_.set(rhs.id, Type::bottom());
  }

  // Replaces the node's type with `target` when the current type is more
  // abstract and the two reduce; otherwise leaves it alone.
  void replace_if_more_abstract(const Expr& node, const Type& target, const char* rule) {
    const Type* cur_p = ctx_.type_of(node.id);
    if (!cur_p || cur_p->is_bottom() || *cur_p == target) return;
    Type cur = *cur_p;
    if (!more_abstract(compare(cur, target))) return;
    ReductionOutcome out = reduce(cur, target);
    if (!out.ok()) return;
    ctx_.apply(out.substitutions());
    Type next = apply_subst(out.substitutions(), target);
    log_.rule(rule, node.id, cur, next);
    ctx_.set(node.id, next);
  }

  void complete_app(const Expr& e, const AppExpr& a, const Type& expected) {
    if (!ctx_.resolve(a.head)) {
      if (const TypeScheme* s = registry_.find(a.head); s && s->polymorphic_comparison) return;
    }
    const Type* head = ctx_.head_type_of(e.id);
    if (!head) return;
    Arity split = split_application(*head, a.args.size());
    SubstitutionSet s;
    if (more_abstract(compare(split.result, expected))) {
      ReductionOutcome out = reduce(split.result, expected);
      if (!out.ok()) {
        log_.error(e, diagnostic_kind(out.failure()), describe(out.failure()));
        return;
      }
      s = out.substitutions();
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      replace_if_more_abstract(a.args[i], apply_subst(s, split.params[i]), "App-TD");
      top_down(a.args[i]);
    }
  }

  void complete_collection(const std::vector<Expr>& elems, const Type& expected, const char* rule) {
    const auto* c = std::get_if<ConstructedType>(&expected.node().value);
    if (!c || c->args.size() != 1) return;
    for (const auto& x : elems) {
      replace_if_more_abstract(x, c->args[0], rule);
      top_down(x);
    }
  }

  SolverRegistry registry_;
  TypeContext ctx_;
  InferenceLog log_;
  std::uint32_t lambda_counter_ = 0;
};

/// Registers the theory's datatypes, then infers each function in order,
/// registering it just before its own equations.
inline std::vector<TypedSpec> infer_theory(const TheoryFile& theory, TraceSink trace = {},
                                           std::optional<SolverRegistry>* registry_out = nullptr) {
  InferenceSession sess;
  if (trace) sess.set_trace(std::move(trace));
  for (const auto& d : theory.datatypes) sess.registry().register_datatype(d);
  std::vector<TypedSpec> out;
  for (const auto& f : theory.functions) {
    sess.registry().register_function(f);
    out.push_back(sess.infer_spec(f));
  }
  if (registry_out) *registry_out = sess.registry();
  return out;
}

}  // namespace isatype
