#include <gtest/gtest.h>

#include <map>

#include "isatype/inference.hpp"
#include "isatype/parser.hpp"
#include "support/type_gen.hpp"

using namespace isatype;

namespace {

Type T(const char* s) { return parse_type(s); }

std::vector<TypedSpec> infer_text(const std::string& text, TraceSink trace = {}) {
  return infer_theory(parse_theory(text), std::move(trace));
}

std::vector<TypedSpec> infer_corpus_file(const std::string& name) {
  return infer_text(testgen::read_file(std::string(ISATYPE_CORPUS_DIR) + "/" + name));
}

const TypedSpec& by_name(const std::vector<TypedSpec>& specs, const std::string& name) {
  for (const auto& s : specs)
    if (s.spec.name == name) return s;
  throw std::runtime_error("no spec " + name);
}

// Renames counter-decorated and placeholder variables to #0, #1, ... in
// order of first appearance, so equal-up-to-freshness types compare equal.
class Canonicalizer {
 public:
  Type operator()(const Type& t) {
    if (const auto* v = t.as_var()) {
      if (!v->counter && !v->is_placeholder()) return t;
      auto [it, inserted] = names_.try_emplace(*v, static_cast<std::uint32_t>(names_.size()));
      return Type::var("fresh", it->second);
    }
    if (children(t).empty()) return t;
    return map_children(t, [&](const Type& c) { return (*this)(c); });
  }

 private:
  std::map<TypeVar, std::uint32_t> names_;
};

std::vector<Type> equation_types(const Equation& eq) {
  std::vector<Type> out;
  Canonicalizer canon;
  auto take = [&](const Expr& e) { out.push_back(canon(e.type ? *e.type : Type::bottom())); };
  for (const auto& p : eq.patterns) walk_preorder(p, take);
  walk_preorder(eq.rhs, take);
  return out;
}

}  // namespace

TEST(ExtractPatterns, ConsPatternBindsElementAndTail) {
  TheoryFile th = parse_theory(R"(fun f :: "'a list => nat" where "f (Cons x xs) = 0")");
  const Expr& p = th.functions[0].equations[0].patterns[0];
  InferenceSession sess;
  sess.context().push_scope();
  sess.context().set(p.id, T("'a list"));
  sess.extract_pattern_types(p);
  const auto& args = p.as<AppExpr>()->args;
  EXPECT_EQ(*sess.context().type_of(args[0].id), T("'a"));
  EXPECT_EQ(*sess.context().type_of(args[1].id), T("'a list"));
  EXPECT_EQ(sess.context().resolve("x"), std::optional<NodeId>(args[0].id));
  EXPECT_TRUE(sess.diagnostics().empty());
}

TEST(ExtractPatterns, ListLiteralPattern) {
  TheoryFile th = parse_theory(R"(fun f :: "nat list => nat" where "f [y] = y")");
  const Expr& p = th.functions[0].equations[0].patterns[0];
  InferenceSession sess;
  sess.context().push_scope();
  sess.context().set(p.id, T("nat list"));
  sess.extract_pattern_types(p);
  EXPECT_EQ(*sess.context().type_of(p.as<ListExpr>()->elems[0].id), T("nat"));
}

TEST(ExtractPatterns, WrongConstructorIsMismatch) {
  TheoryFile th = parse_theory(R"(fun f :: "nat => nat" where "f (Some x) = 0")");
  const Expr& p = th.functions[0].equations[0].patterns[0];
  InferenceSession sess;
  sess.context().push_scope();
  sess.context().set(p.id, T("nat"));
  sess.extract_pattern_types(p);
  ASSERT_EQ(sess.diagnostics().size(), 1u);
  EXPECT_TRUE(sess.context().type_of(p.as<AppExpr>()->args[0].id)->is_bottom());
}

TEST(BottomUp, LiteralsAndApplications) {
  TheoryFile th = parse_theory(R"(fun f :: "nat => nat" where "f n = length [n, 1]")");
  InferenceSession sess;
  const Equation& eq = th.functions[0].equations[0];
  sess.context().push_scope();
  sess.context().set(eq.patterns[0].id, T("nat"));
  sess.extract_pattern_types(eq.patterns[0]);
  sess.bottom_up(eq.rhs);
  EXPECT_EQ(*sess.context().type_of(eq.rhs.id), T("nat"));
  const Expr& list = eq.rhs.as<AppExpr>()->args[0];
  EXPECT_EQ(*sess.context().type_of(list.id), T("nat list"));
}

TEST(BottomUp, UnknownVariableIsDiagnosed) {
  auto specs = infer_text(R"(fun f :: "nat => nat" where "f n = m")");
  ASSERT_EQ(specs[0].diagnostics.size(), 1u);
  EXPECT_EQ(specs[0].diagnostics[0].kind, DiagnosticKind::UnknownName);
}

TEST(InferSpec, TestSpecTypes) {
  auto specs = infer_corpus_file("test.thy");
  const TypedSpec& s = by_name(specs, "test");
  EXPECT_TRUE(s.diagnostics.empty());
  const Equation& eq2 = s.spec.equations[1];
  EXPECT_EQ(*eq2.rhs.type, T("nat"));
  const Expr* if_node = nullptr;
  walk_preorder(eq2.rhs, [&](const Expr& e) {
    if (const auto* a = e.as<AppExpr>(); a && a->head == "If") if_node = &e;
  });
  ASSERT_NE(if_node, nullptr);
  EXPECT_EQ(*if_node->type, T("'a list"));
  for (const auto& arg : if_node->as<AppExpr>()->args) EXPECT_FALSE(arg.type->is_bottom());
  EXPECT_EQ(*if_node->as<AppExpr>()->args[1].type, T("'a list"));
}

TEST(InferSpec, ProductListsTypes) {
  auto specs = infer_corpus_file("product_lists.thy");
  const TypedSpec& s = specs.at(0);
  EXPECT_TRUE(s.diagnostics.empty());
  EXPECT_EQ(*s.spec.equations[0].rhs.type, T("'a list list"));
  EXPECT_EQ(*s.spec.equations[1].rhs.type, T("'a list list"));
  const auto& concat_arg = s.spec.equations[1].rhs.as<AppExpr>()->args[0];
  EXPECT_EQ(*concat_arg.type, T("'a list list list"));
}

TEST(InferSpec, DeclaredResultMismatchIsOneDiagnostic) {
  auto specs = infer_text(R"(fun g :: "nat => bool" where "g x = x")");
  ASSERT_EQ(specs[0].diagnostics.size(), 1u);
  const Diagnostic& d = specs[0].diagnostics[0];
  EXPECT_EQ(d.kind, DiagnosticKind::Mismatch);
  EXPECT_EQ(d.node, specs[0].spec.equations[0].rhs.id);
  EXPECT_TRUE(specs[0].type_of(d.node).is_bottom());
}

TEST(InferSpec, SingleErrorDoesNotCascade) {
  auto specs = infer_text(R"T(fun h :: "nat => nat" where "h x = Suc (Suc (Suc True))")T");
  EXPECT_EQ(specs[0].diagnostics.size(), 1u);
}

TEST(InferSpec, ErrorsInSeparateEquationsAreIndependent) {
  auto specs = infer_text(R"(fun h :: "nat => nat" where "h 0 = True" | "h n = n" | "h x = Suc False")");
  ASSERT_EQ(specs[0].diagnostics.size(), 2u);
  EXPECT_FALSE(specs[0].spec.equations[1].rhs.type->is_bottom());
}

TEST(InferSpec, UnknownFunctionIsDiagnosed) {
  auto specs = infer_text(R"(fun h :: "nat => nat" where "h x = frob x")");
  ASSERT_EQ(specs[0].diagnostics.size(), 1u);
  EXPECT_EQ(specs[0].diagnostics[0].kind, DiagnosticKind::UnknownName);
}

TEST(InferSpec, CountersStayMonotoneAcrossFunctions) {
  InferenceSession sess;
  TheoryFile th = parse_theory(R"(fun a :: "nat => nat" where "a x = length [x]"
fun b :: "nat => nat" where "b x = length [x]")");
  sess.infer_spec(th.functions[0]);
  std::uint32_t after_first = sess.registry().fresh_counter();
  EXPECT_GT(after_first, 0u);
  sess.infer_spec(th.functions[1]);
  EXPECT_GT(sess.registry().fresh_counter(), after_first);
}

TEST(InferSpec, UserMapShadowsPrelude) {
  auto specs = infer_corpus_file("map.thy");
  for (const auto& s : specs) EXPECT_TRUE(s.diagnostics.empty()) << s.spec.name;
  EXPECT_EQ(*by_name(specs, "squares").spec.equations[0].rhs.type, T("nat list"));
}

TEST(InferenceProperty, CorpusCompletesWithoutDiagnostics) {
  std::size_t specs_seen = 0;
  for (const auto& path : testgen::corpus_files(ISATYPE_CORPUS_DIR)) {
    for (const auto& s : infer_theory(parse_theory(testgen::read_file(path)))) {
      ++specs_seen;
      EXPECT_TRUE(s.diagnostics.empty()) << s.spec.name;
      for (const auto& eq : s.spec.equations) {
        auto check = [&](const Expr& e) {
          ASSERT_TRUE(e.type.has_value()) << s.spec.name;
          EXPECT_FALSE(contains_bottom(*e.type)) << s.spec.name << " node " << e.id;
        };
        for (const auto& p : eq.patterns) walk_preorder(p, check);
        walk_preorder(eq.rhs, check);
      }
    }
  }
  EXPECT_GE(specs_seen, 20u);
}

TEST(InferenceProperty, TopDownOnlySpecializes) {
  std::size_t td_events = 0;
  for (const auto& path : testgen::corpus_files(ISATYPE_CORPUS_DIR)) {
    auto sink = [&](const TraceEvent& ev) {
      if (!ev.rule.ends_with("-TD") || !ev.before) return;
      if (ev.before->is_bottom()) return;
      ++td_events;
      EXPECT_TRUE(more_abstract(compare(*ev.before, ev.after)))
          << ev.rule << " " << to_string(*ev.before) << " -> " << to_string(ev.after);
    };
    infer_theory(parse_theory(testgen::read_file(path)), sink);
  }
  EXPECT_GT(td_events, 0u);
}

TEST(InferenceProperty, EquationOrderDoesNotMatter) {
  for (const auto& path : testgen::corpus_files(ISATYPE_CORPUS_DIR)) {
    TheoryFile th = parse_theory(testgen::read_file(path));
    auto forward = infer_theory(th);
    TheoryFile reversed = th;
    for (auto& f : reversed.functions) std::reverse(f.equations.begin(), f.equations.end());
    auto backward = infer_theory(reversed);
    for (std::size_t i = 0; i < forward.size(); ++i) {
      const auto& fe = forward[i].spec.equations;
      const auto& be = backward[i].spec.equations;
      for (std::size_t j = 0; j < fe.size(); ++j)
        EXPECT_EQ(equation_types(fe[j]), equation_types(be[fe.size() - 1 - j])) << forward[i].spec.name;
    }
  }
}

TEST(InferenceProperty, NodeTypesMatchTypedSpecMap) {
  for (const auto& s : infer_corpus_file("misc.thy"))
    for (const auto& eq : s.spec.equations)
      walk_preorder(eq.rhs, [&](const Expr& e) { EXPECT_EQ(*e.type, s.type_of(e.id)); });
}
