#include <gtest/gtest.h>

#include <random>

#include "isatype/parser.hpp"
#include "isatype/substitution.hpp"
#include "isatype/type.hpp"
#include "isatype/type_context.hpp"
#include "support/type_gen.hpp"

using namespace isatype;

namespace {

TypeVar tv(std::string n, std::optional<std::uint32_t> k = std::nullopt) { return TypeVar{std::move(n), k}; }

}  // namespace

TEST(Type, FunFlattensTrailingFunction) {
  Type inner = Type::fun({Type::var("b"), Type::var("c")});
  Type t = Type::fun({Type::var("a"), inner});
  EXPECT_EQ(t, Type::fun({Type::var("a"), Type::var("b"), Type::var("c")}));
  EXPECT_EQ(param_count(t), 2u);
}

TEST(Type, FunKeepsLeadingFunctionNested) {
  Type t = Type::fun({Type::fun({Type::var("d"), Type::var("e")}), Type::prim("nat")});
  EXPECT_EQ(param_count(t), 1u);
  EXPECT_EQ(to_string(t), "('d => 'e) => nat");
}

TEST(Type, RejectsMalformedShapes) {
  EXPECT_THROW(Type::fun({Type::prim("nat")}), std::invalid_argument);
  EXPECT_THROW(Type::constructed({}, "list"), std::invalid_argument);
  EXPECT_THROW(Type::constructed({Type::prim("nat"), Type::prim("nat")}, "option"), std::invalid_argument);
}

TEST(Type, CountersDistinguishVariables) {
  EXPECT_NE(Type::var("a"), Type::var("a", 1));
  EXPECT_EQ(Type::var("a", 1), Type::var("a", 1));
  EXPECT_EQ(to_string(Type::var("a", 3)), "'a#3");
}

TEST(Type, Printing) {
  EXPECT_EQ(to_string(parse_type("'a list list")), "'a list list");
  EXPECT_EQ(to_string(parse_type("('a, 'b) pair")), "('a, 'b) pair");
  EXPECT_EQ(to_string(parse_type("('a => 'b) list")), "('a => 'b) list");
  EXPECT_EQ(to_string(parse_type("nat * bool * 'a")), "nat * bool * 'a");
  EXPECT_EQ(to_string(parse_type("(nat * bool) * 'a")), "(nat * bool) * 'a");
  EXPECT_EQ(to_string(Type::bottom()), "<error>");
}

TEST(Type, SplitApplicationCurries) {
  Type t = parse_type("'a => 'a list => 'a list");
  Arity one = split_application(t, 1);
  ASSERT_EQ(one.params.size(), 1u);
  EXPECT_EQ(one.result, parse_type("'a list => 'a list"));
  EXPECT_EQ(split_application(t, 2).result, parse_type("'a list"));
  EXPECT_EQ(split_application(t, 0).result, t);
  EXPECT_THROW(split_application(t, 3), std::out_of_range);
}

TEST(FreeTypeVars, Examples) {
  EXPECT_EQ(free_type_vars(Type::var("a")), std::set<TypeVar>{tv("a")});
  EXPECT_TRUE(free_type_vars(Type::prim("nat")).empty());
  EXPECT_EQ(free_type_vars(parse_type("('a => 'b#1) => nat list")), (std::set<TypeVar>{tv("a"), tv("b", 1)}));
  EXPECT_TRUE(free_type_vars(Type::bottom()).empty());
}

TEST(ApplySubst, Examples) {
  EXPECT_EQ(apply_subst({{tv("a"), Type::prim("nat")}}, parse_type("'a list")), parse_type("nat list"));
  EXPECT_EQ(apply_subst({}, parse_type("'a => 'b")), parse_type("'a => 'b"));
  EXPECT_EQ(apply_subst({{tv("a", 1), Type::prim("bool")}}, parse_type("'a => 'a#1")), parse_type("'a => bool"));
}

TEST(ApplySubst, IsSimultaneous) {
  SubstitutionSet s{{tv("a"), Type::var("b")}, {tv("b"), Type::var("a")}};
  EXPECT_EQ(apply_subst(s, parse_type("'a => 'b")), parse_type("'b => 'a"));
}

TEST(ApplySubst, ReflattensFunctionResults) {
  SubstitutionSet s{{tv("b"), parse_type("nat => bool")}};
  EXPECT_EQ(apply_subst(s, parse_type("'a => 'b")), parse_type("'a => nat => bool"));
}

TEST(ApplySubstCtx, Examples) {
  TypeContext g;
  g.set(1, parse_type("'a list"));
  EXPECT_EQ(*apply_subst_ctx({{tv("a"), Type::prim("nat")}}, g).type_of(1), parse_type("nat list"));
  EXPECT_EQ(apply_subst_ctx({}, g), g);

  TypeContext h;
  h.set(1, Type::prim("bool"));
  EXPECT_EQ(*apply_subst_ctx({{tv("a"), Type::prim("nat")}}, h).type_of(1), Type::prim("bool"));
}

TEST(ApplySubstCtx, LeavesScopesAlone) {
  TypeContext g;
  g.push_scope();
  g.set(4, Type::var("a"));
  g.bind("x", 4);
  g.apply({{tv("a"), Type::prim("nat")}});
  EXPECT_EQ(g.resolve("x"), std::optional<NodeId>(4));
  EXPECT_EQ(*g.type_of(4), Type::prim("nat"));
}

TEST(TypeContext, RebindingReplaces) {
  TypeContext g;
  g.set(1, Type::prim("nat"));
  g.set(1, Type::prim("bool"));
  EXPECT_EQ(*g.type_of(1), Type::prim("bool"));
  EXPECT_EQ(g.node_types().size(), 1u);
}

TEST(TypeContext, InnerScopesShadow) {
  TypeContext g;
  g.push_scope();
  g.bind("x", 1);
  g.push_scope();
  g.bind("x", 2);
  EXPECT_EQ(g.resolve("x"), std::optional<NodeId>(2));
  g.pop_scope();
  EXPECT_EQ(g.resolve("x"), std::optional<NodeId>(1));
  EXPECT_FALSE(g.resolve("y"));
}

TEST(SubstitutionProperty, DomainVanishesAndApplicationIsIdempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 3000; ++i) {
    SubstitutionSet s = testgen::idempotent_subst(rng);
    Type t = testgen::any_type(rng, 4);
    Type once = apply_subst(s, t);
    for (const auto& v : free_type_vars(once)) EXPECT_FALSE(s.binds(v)) << to_string(t);
    EXPECT_EQ(apply_subst(s, once), once) << to_string(t);
  }
}

TEST(SubstitutionProperty, OuterKindPreservedUnlessBoundVariable) {
  std::mt19937 rng(12);
  for (int i = 0; i < 3000; ++i) {
    SubstitutionSet s = testgen::idempotent_subst(rng);
    Type t = testgen::any_type(rng, 4);
    if (const auto* v = t.as_var(); v && s.binds(*v)) continue;
    EXPECT_EQ(apply_subst(s, t).kind(), t.kind()) << to_string(t);
  }
}
