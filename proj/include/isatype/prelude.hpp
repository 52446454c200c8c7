#pragma once

#include <array>
#include <string_view>

namespace isatype {

/// Library entities that specifications use without declaring them.
struct PreludeEntry {
  std::string_view name;
  std::string_view scheme;
  bool constructor = false;
  // `=`, `<`: the result type says nothing about the operand types.
  bool polymorphic_comparison = false;
};

inline constexpr std::array<PreludeEntry, 27> kPrelude{{
    {"Nil", "'a list", true},
    {"Cons", "'a => 'a list => 'a list", true},
    {"#", "'a => 'a list => 'a list", true},
    {"None", "'a option", true},
    {"Some", "'a => 'a option", true},
    {"EmptySet", "'a set", true},
    {"Suc", "nat => nat", true},
    {"If", "bool => 'a => 'a => 'a"},
    {"length", "'a list => nat"},
    {"map", "('d => 'e) => 'd list => 'e list"},
    {"concat", "'a list list => 'a list"},
    {"drop", "nat => 'a list => 'a list"},
    {"take", "nat => 'a list => 'a list"},
    {"!", "'a list => nat => 'a"},
    {"div", "nat => nat => nat"},
    {"+", "nat => nat => nat"},
    {"-", "nat => nat => nat"},
    {"*", "nat => nat => nat"},
    {"=", "'a => 'a => bool", false, true},
    {"<", "'a => 'a => bool", false, true},
    {"hd", "'a list => 'a"},
    {"tl", "'a list => 'a list"},
    {"rev", "'a list => 'a list"},
    {"append", "'a list => 'a list => 'a list"},
    {"filter", "('a => bool) => 'a list => 'a list"},
    {"insert", "'a => 'a set => 'a set"},
    {"Not", "bool => bool"},
}};

}  // namespace isatype
