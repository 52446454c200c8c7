#pragma once

// `isatype check|annotate <file>`. Exit codes: 0 success, 1 parse error,
// 2 type diagnostics, 3 usage, I/O or rendering error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isatype/emit.hpp"
#include "isatype/inference.hpp"
#include "isatype/parser.hpp"

namespace isatype {

enum ExitCode : int { kExitOk = 0, kExitParseError = 1, kExitTypeError = 2, kExitUsage = 3 };

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type inference for function specifications", "isatype"};
  app.require_subcommand(1);

  std::string emit;
  bool trace = false;
  bool dump_sigma = false;
  std::string output;
  std::vector<std::string> cpp_overrides;
  app.add_option("--emit", emit, "Output format")->check(CLI::IsMember({"annotated", "json", "cpp-types"}));
  app.add_flag("--trace", trace, "Print one line per inference rule to stderr");
  app.add_flag("--dump-sigma", dump_sigma, "Print every registered name with its type");
  app.add_option("--output", output, "Write the output to a file instead of stdout");
  app.add_option("--cpp-map", cpp_overrides, "Override a C++ mapping, e.g. list=std::vector<$1>");

  std::string file;
  CLI::App* check = app.add_subcommand("check", "Infer types and report diagnostics");
  CLI::App* annotate = app.add_subcommand("annotate", "Print every expression with its type");
  for (CLI::App* sub : {check, annotate}) {
    sub->add_option("file", file, "Theory file")->required();
    sub->fallthrough();
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "isatype: " << e.what() << "\n";
    return kExitUsage;
  }

  CppTypeMap cpp_map = CppTypeMap::defaults();
  for (const auto& o : cpp_overrides) {
    auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) {
      err << "isatype: --cpp-map expects head=template, got '" << o << "'\n";
      return kExitUsage;
    }
    cpp_map.set(o.substr(0, eq), o.substr(eq + 1));
  }
  if (emit.empty() && annotate->parsed()) emit = "annotated";

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    err << "isatype: cannot read '" << file << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  TheoryFile theory;
  try {
    theory = parse_theory(buf.str());
  } catch (const ParseError& e) {
    err << file << ":" << e.line() << ":" << e.column() << ": parse error: " << e.message() << "\n";
    return kExitParseError;
  }

  TraceSink sink;
  if (trace) sink = [&err](const TraceEvent& ev) { err << to_string(ev) << "\n"; };
  std::optional<SolverRegistry> registry;
  std::vector<TypedSpec> specs;
  try {
    specs = infer_theory(theory, sink, &registry);
  } catch (const DuplicateName& e) {
    err << file << ": parse error: " << e.message() << "\n";
    return kExitParseError;
  }

  std::string artifact;
  if (dump_sigma) artifact += registry->dump();
  try {
    if (emit == "annotated") {
      for (const auto& s : specs) artifact += emit_annotated(s);
    } else if (emit == "json") {
      artifact += emit_json(specs);
    } else if (emit == "cpp-types") {
      for (const auto& s : specs) artifact += emit_cpp_types(s, cpp_map);
    }
  } catch (const RenderError& e) {
    err << "isatype: " << e.what() << "\n";
    return kExitUsage;
  }

  std::size_t diagnostics = 0;
  for (const auto& s : specs) {
    for (const auto& d : s.diagnostics) {
      ++diagnostics;
      err << file << ":" << d.location.line << ":" << d.location.column << ": error[" << kind_name(d.kind)
          << "]: " << d.message << " (node " << d.node << ", in " << s.spec.name << ")\n";
    }
  }

  if (!output.empty()) {
    std::ofstream o(output, std::ios::binary);
    if (!o) {
      err << "isatype: cannot write '" << output << "'\n";
      return kExitUsage;
    }
    o << artifact;
  } else {
    out << artifact;
  }
  return diagnostics ? kExitTypeError : kExitOk;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), out, err);
}

}  // namespace isatype
