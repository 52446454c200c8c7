#include <gtest/gtest.h>

#include "isatype/parser.hpp"
#include "isatype/solver_registry.hpp"
#include "isatype/unify.hpp"
#include "support/type_gen.hpp"

using namespace isatype;

namespace {

// Structural shape with every variable erased.
std::string skeleton(const Type& t) {
  if (t.is_var()) return "_";
  std::string out = std::to_string(static_cast<int>(t.kind()));
  if (const auto* p = std::get_if<PrimType>(&t.node().value)) out += p->name;
  if (const auto* c = std::get_if<ConstructedType>(&t.node().value)) out += c->ctor;
  out += "(";
  for (const auto& ch : children(t)) out += skeleton(ch) + ",";
  return out + ")";
}

}  // namespace

TEST(Registry, PreludeHasRequiredNames) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  for (const char* n : {"Nil", "Cons", "#", "None", "Some", "Suc", "If", "length", "map", "concat", "drop", "take",
                        "!", "div", "+", "-", "=", "<"})
    EXPECT_TRUE(reg.contains(n)) << n;
  EXPECT_EQ(reg.lookup_unmodified("If"), parse_type("bool => 'a => 'a => 'a"));
  EXPECT_TRUE(reg.find("Cons")->constructor);
  EXPECT_FALSE(reg.find("length")->constructor);
  EXPECT_TRUE(reg.find("=")->polymorphic_comparison);
}

TEST(Registry, InstantiateMapWithCounterSeven) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  reg.set_fresh_counter(7);
  EXPECT_EQ(reg.instantiate("map"), parse_type("('d#7 => 'e#7) => 'd#7 list => 'e#7 list"));
  EXPECT_EQ(reg.fresh_counter(), 8u);
}

TEST(Registry, InstantiateExamples) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  EXPECT_EQ(reg.instantiate("Nil"), parse_type("'a#0 list"));
  EXPECT_EQ(reg.instantiate("length"), parse_type("'a#1 list => nat"));
  EXPECT_EQ(reg.instantiate("Suc"), parse_type("nat => nat"));
  EXPECT_THROW(reg.instantiate("nosuch"), UnknownName);
}

TEST(Registry, LookupUnmodified) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  EXPECT_EQ(reg.lookup_unmodified("map"), parse_type("('d => 'e) => 'd list => 'e list"));
  EXPECT_THROW(reg.lookup_unmodified("nosuch"), UnknownName);
}

TEST(Registry, RegisterDatatype) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  TheoryFile th = parse_theory(R"(datatype color = Red | Green
datatype 'a tree = Leaf | Node "'a tree" 'a "'a tree")");
  for (const auto& d : th.datatypes) reg.register_datatype(d);
  EXPECT_EQ(reg.lookup_unmodified("Red"), Type::prim("color"));
  EXPECT_EQ(reg.lookup_unmodified("Leaf"), parse_type("'a tree"));
  EXPECT_EQ(reg.lookup_unmodified("Node"), parse_type("'a tree => 'a => 'a tree => 'a tree"));
  EXPECT_TRUE(reg.find("Node")->constructor);
  EXPECT_EQ(reg.find("Node")->origin, SchemeOrigin::DatatypeDecl);
}

TEST(Registry, RedeclaringUserNameThrows) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  TheoryFile th = parse_theory(R"(fun f :: "nat => nat" where "f x = x")");
  reg.register_function(th.functions[0]);
  EXPECT_THROW(reg.register_function(th.functions[0]), DuplicateName);
}

TEST(Registry, UserDeclarationShadowsBuiltinInPlace) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  auto position = [&](const std::string& n) {
    for (std::size_t i = 0; i < reg.entries().size(); ++i)
      if (reg.entries()[i].first == n) return i;
    return reg.entries().size();
  };
  std::size_t before = position("map");
  std::size_t total = reg.entries().size();
  reg.register_scheme("map", TypeScheme{parse_type("('a => 'b) => 'a list => 'b list"), SchemeOrigin::FunctionDecl});
  EXPECT_EQ(position("map"), before);
  EXPECT_EQ(reg.entries().size(), total);
  EXPECT_EQ(reg.lookup_unmodified("map"), parse_type("('a => 'b) => 'a list => 'b list"));
}

TEST(Registry, DumpListsEveryEntry) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  std::string d = reg.dump();
  EXPECT_NE(d.find("Cons :: 'a => 'a list => 'a list\n"), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(d.begin(), d.end(), '\n')), reg.entries().size());
}

TEST(RegistryProperty, InstancesAreFreshAndKeepTheSkeleton) {
  SolverRegistry reg = SolverRegistry::with_prelude();
  const SolverRegistry prelude = SolverRegistry::with_prelude();
  for (int round = 0; round < 20; ++round) {
    for (const auto& [name, scheme] : prelude.entries()) {
      Type a = reg.instantiate(name);
      Type b = reg.instantiate(name);
      for (const auto& v : free_type_vars(a)) {
        EXPECT_TRUE(v.counter.has_value()) << name;
        EXPECT_FALSE(occurs_in(v, b)) << name;
      }
      EXPECT_EQ(skeleton(a), skeleton(scheme.body)) << name;
      EXPECT_EQ(free_type_vars(a).size(), free_type_vars(scheme.body).size()) << name;
      EXPECT_TRUE(more_abstract(compare(scheme.body, a))) << name;
      EXPECT_TRUE(more_abstract(compare(a, scheme.body))) << name;
    }
  }
}
