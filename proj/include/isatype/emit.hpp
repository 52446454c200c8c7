#pragma once

// Renderings of typed specifications: fully annotated expressions, a JSON
// dump of the typed AST, and C++ type strings.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "isatype/diagnostics.hpp"
#include "isatype/expr.hpp"
#include "isatype/inference.hpp"
#include "isatype/type.hpp"

namespace isatype {

/// Type in annotation style: `('a )list`, `(('a )list => nat)`.
inline std::string annotated_type(const Type& t) {
  return std::visit(overloaded{
                        [](const TypeVar& v) { return to_string(v); },
                        [](const PrimType& p) { return p.name; },
                        [](const FunType& f) {
                          std::string out = "(";
                          for (std::size_t i = 0; i < f.parts.size(); ++i) {
                            if (i) out += " => ";
                            out += annotated_type(f.parts[i]);
                          }
                          return out + ")";
                        },
                        [](const TupleType& p) {
                          return "(" + annotated_type(p.left) + " * " + annotated_type(p.right) + ")";
                        },
                        [](const ConstructedType& c) {
                          std::string out = "(";
                          for (std::size_t i = 0; i < c.args.size(); ++i) {
                            if (i) out += ", ";
                            out += annotated_type(c.args[i]);
                          }
                          return out + " )" + c.ctor;
                        },
                        [](const BottomType&) { return std::string("<error>"); },
                    },
                    t.node().value);
}

namespace detail {

inline std::string annotation_of(const Expr& e) { return annotated_type(e.type ? *e.type : Type::bottom()); }

inline std::string annotate(const Expr& e);

inline std::string annotate_list(const std::vector<Expr>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += annotate(xs[i]);
  }
  return out;
}

inline std::string annotate(const Expr& e) {
  std::string body = std::visit(
      overloaded{
          [](const ConstExpr& c) { return c.literal; },
          [](const VarExpr& v) { return v.name; },
          [](const AppExpr& a) {
            if (a.args.empty()) return a.head;
            if (a.style == AppStyle::Infix && a.args.size() == 2)
              return "(" + annotate(a.args[0]) + " " + a.head + " " + annotate(a.args[1]) + ")";
            if (a.style == AppStyle::KeywordIf && a.args.size() == 3)
              return "(if " + annotate(a.args[0]) + " then " + annotate(a.args[1]) + " else " + annotate(a.args[2]) +
                     ")";
            std::string out = "(" + a.head;
            for (const auto& x : a.args) out += " " + annotate(x);
            return out + ")";
          },
          [](const LambdaExpr& l) {
            std::string out = "\\<lambda>";
            for (std::size_t i = 0; i < l.params.size(); ++i) {
              if (i) out += " ";
              out += l.params[i].as<VarExpr>()->name;
            }
            return out + "." + annotate(*l.body);
          },
          [](const CaseExpr& c) {
            std::string out = "(case " + annotate(*c.scrutinee) + " of ";
            for (std::size_t i = 0; i < c.branches.size(); ++i) {
              if (i) out += " | ";
              out += annotate(*c.branches[i].pattern) + " => " + annotate(*c.branches[i].body);
            }
            return out + ")";
          },
          [](const LetInExpr& l) {
            return "(let " + annotate(*l.pattern) + " = " + annotate(*l.bound) + " in " + annotate(*l.body) + ")";
          },
          [](const ListExpr& l) { return l.elems.empty() ? std::string("Nil") : "[" + annotate_list(l.elems) + "]"; },
          [](const SetExpr& s) { return "{" + annotate_list(s.elems) + "}"; },
      },
      e.node);
  return "(" + body + " :: " + annotation_of(e) + ")";
}

}  // namespace detail

inline std::string annotate_expr(const Expr& e) { return detail::annotate(e); }

/// The function name, then one annotated right-hand side per equation.
inline std::string emit_annotated(const TypedSpec& spec) {
  std::string out = spec.spec.name + "\n";
  for (const auto& eq : spec.spec.equations) out += annotate_expr(eq.rhs) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

using nlohmann::ordered_json;

inline constexpr const char* kJsonSchema = "isatype.typed-spec";
inline constexpr int kJsonVersion = 1;

namespace detail {

inline ordered_json location_json(const SourceLocation& l) { return {{"line", l.line}, {"column", l.column}}; }

inline ordered_json node_json(const Expr& e) {
  ordered_json j;
  j["node_id"] = e.id;
  j["kind"] = std::string(kind_name(e.kind()));
  std::visit(overloaded{
                 [&](const ConstExpr& c) { j["value"] = c.literal; },
                 [&](const VarExpr& v) { j["name"] = v.name; },
                 [&](const AppExpr& a) { j["head"] = a.head; },
                 [](const auto&) {},
             },
             e.node);
  j["type"] = e.type ? to_string(*e.type) : std::string("<error>");
  j["span"] = {{"begin", location_json(e.span.begin)}, {"end", location_json(e.span.end)}};
  ordered_json children = ordered_json::array();
  for_each_child(e, [&](const Expr& c) { children.push_back(node_json(c)); });
  j["children"] = std::move(children);
  return j;
}

}  // namespace detail

/// Document layout (version 1):
///   { schema, version, function, declared_type,
///     equations: [ { index, patterns: [node], rhs: node } ],
///     diagnostics: [ { node_id, kind, message, line, column } ] }
/// node = { node_id, kind, head|name|value?, type, span, children: [node] }
inline ordered_json typed_spec_json(const TypedSpec& spec) {
  ordered_json doc;
  doc["schema"] = kJsonSchema;
  doc["version"] = kJsonVersion;
  doc["function"] = spec.spec.name;
  doc["declared_type"] = to_string(spec.spec.declared_type);
  ordered_json eqs = ordered_json::array();
  for (std::size_t i = 0; i < spec.spec.equations.size(); ++i) {
    const auto& eq = spec.spec.equations[i];
    ordered_json pats = ordered_json::array();
    for (const auto& p : eq.patterns) pats.push_back(detail::node_json(p));
    eqs.push_back({{"index", i + 1}, {"patterns", std::move(pats)}, {"rhs", detail::node_json(eq.rhs)}});
  }
  doc["equations"] = std::move(eqs);
  ordered_json diags = ordered_json::array();
  for (const auto& d : spec.diagnostics) {
    diags.push_back({{"node_id", d.node},
                     {"kind", std::string(kind_name(d.kind))},
                     {"message", d.message},
                     {"line", d.location.line},
                     {"column", d.location.column}});
  }
  doc["diagnostics"] = std::move(diags);
  return doc;
}

inline std::string emit_json(const TypedSpec& spec) { return typed_spec_json(spec).dump(2) + "\n"; }

inline std::string emit_json(const std::vector<TypedSpec>& specs) {
  ordered_json all = ordered_json::array();
  for (const auto& s : specs) all.push_back(typed_spec_json(s));
  return all.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

class RenderError : public std::runtime_error {
 public:
  explicit RenderError(const std::string& head)
      : std::runtime_error("no C++ mapping for type '" + head + "'"), head_(head) {}
  const std::string& head() const { return head_; }

 private:
  std::string head_;
};

/// C++ spelling per type head. In templates `$1`, `$2`, ... stand for the
/// constructor arguments; for functions (`=>`) `$R` is the result and `$*`
/// the comma-separated parameters.
class CppTypeMap {
 public:
  static CppTypeMap defaults() {
    CppTypeMap m;
    m.set("nat", "std::uint64_t");
    m.set("bool", "bool");
    m.set("int", "std::int64_t");
    m.set("list", "std::deque<$1>");
    m.set("option", "std::optional<$1>");
    m.set("set", "std::set<$1>");
    m.set("*", "std::pair<$1, $2>");
    m.set("=>", "std::function<$R($*)>");
    return m;
  }

  void set(std::string head, std::string tmpl) { templates_.insert_or_assign(std::move(head), std::move(tmpl)); }
  const std::string* find(const std::string& head) const {
    auto it = templates_.find(head);
    return it == templates_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, std::string> templates_;
};

/// Renders types against one map, naming type variables `T1`, `T2`, ... in
/// the order they first appear in the rendered text. Reusing a renderer
/// keeps names stable across the types of one function.
class CppTypeRenderer {
 public:
  explicit CppTypeRenderer(CppTypeMap map = CppTypeMap::defaults()) : map_(std::move(map)) {}

  std::string render(const Type& t) {
    return std::visit(overloaded{
                          [&](const TypeVar& v) { return var_name(v); },
                          [&](const PrimType& p) { return expand(lookup(p.name), {}); },
                          [&](const FunType& f) {
                            std::vector<Type> args(f.parts.begin(), f.parts.end() - 1);
                            return expand(lookup("=>"), args, &f.parts.back());
                          },
                          [&](const TupleType& p) { return expand(lookup("*"), {p.left, p.right}); },
                          [&](const ConstructedType& c) { return expand(lookup(c.ctor), c.args); },
                          [](const BottomType&) -> std::string { throw RenderError("<error>"); },
                      },
                      t.node().value);
  }

  const std::vector<std::string>& template_params() const { return order_; }

 private:
  const std::string& lookup(const std::string& head) const {
    const std::string* t = map_.find(head);
    if (!t) throw RenderError(head);
    return *t;
  }

  std::string var_name(const TypeVar& v) {
    auto it = names_.find(v);
    if (it != names_.end()) return it->second;
    std::string name = "T" + std::to_string(names_.size() + 1);
    names_.emplace(v, name);
    order_.push_back(name);
    return name;
  }

  std::string expand(const std::string& tmpl, const std::vector<Type>& args, const Type* result = nullptr) {
    std::string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
      if (tmpl[i] != '$' || i + 1 == tmpl.size()) {
        out += tmpl[i];
        continue;
      }
      char c = tmpl[i + 1];
      if (c == 'R' && result) {
        out += render(*result);
        ++i;
      } else if (c == '*') {
        for (std::size_t k = 0; k < args.size(); ++k) {
          if (k) out += ", ";
          out += render(args[k]);
        }
        ++i;
      } else if (c >= '1' && c <= '9') {
        std::size_t j = i + 1;
        std::size_t n = 0;
        while (j < tmpl.size() && tmpl[j] >= '0' && tmpl[j] <= '9') n = n * 10 + static_cast<std::size_t>(tmpl[j++] - '0');
        if (n > args.size()) throw RenderError("template argument $" + std::to_string(n) + " in '" + tmpl + "'");
        out += render(args[n - 1]);
        i = j - 1;
      } else {
        out += tmpl[i];
      }
    }
    return out;
  }

  CppTypeMap map_;
  std::map<TypeVar, std::string> names_;
  std::vector<std::string> order_;
};

inline std::string render_cpp_type(const Type& t, const CppTypeMap& map = CppTypeMap::defaults()) {
  return CppTypeRenderer(map).render(t);
}

/// The C++ signature of the function, then the C++ type of every pattern
/// and rhs node, one per line. Template parameter names are shared across
/// the whole function.
inline std::string emit_cpp_types(const TypedSpec& spec, const CppTypeMap& map = CppTypeMap::defaults()) {
  CppTypeRenderer r(map);
  std::string ret = r.render(spec.spec.return_type());
  std::string params;
  auto ps = spec.spec.param_types();
  for (std::size_t i = 0; i < ps.size(); ++i) params += (i ? ", " : "") + r.render(ps[i]);
  std::string body;
  for (std::size_t i = 0; i < spec.spec.equations.size(); ++i) {
    const auto& eq = spec.spec.equations[i];
    body += "  equation " + std::to_string(i + 1) + "\n";
    auto line = [&](const Expr& e) {
      std::string cpp = e.type && !contains_bottom(*e.type) ? r.render(*e.type) : std::string("<error>");
      body += "    #" + std::to_string(e.id) + " " + to_source(e) + " : " + cpp + "\n";
    };
    for (const auto& p : eq.patterns) walk_preorder(p, line);
    walk_preorder(eq.rhs, line);
  }
  std::string tmpl;
  if (!r.template_params().empty()) {
    tmpl = "template <";
    for (std::size_t i = 0; i < r.template_params().size(); ++i)
      tmpl += (i ? ", typename " : "typename ") + r.template_params()[i];
    tmpl += "> ";
  }
  return tmpl + ret + " " + spec.spec.name + "(" + params + ")\n" + body;
}

}  // namespace isatype
