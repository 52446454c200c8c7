#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isatype/expr.hpp"
#include "isatype/type.hpp"

namespace isatype {

/// Malformed theory text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

class DuplicateName : public ParseError {
 public:
  DuplicateName(int line, int column, const std::string& name)
      : ParseError(line, column, "duplicate declaration of '" + name + "'"), name_(name) {}
  explicit DuplicateName(const std::string& name) : DuplicateName(0, 0, name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ArityMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownName : public std::runtime_error {
 public:
  explicit UnknownName(const std::string& name)
      : std::runtime_error("unknown function or constructor '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

enum class DiagnosticKind { Mismatch, Occurs, Conflict, UnknownName, Unsupported };

inline std::string_view kind_name(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::Mismatch: return "mismatch";
    case DiagnosticKind::Occurs: return "occurs";
    case DiagnosticKind::Conflict: return "conflict";
    case DiagnosticKind::UnknownName: return "unknown-name";
    case DiagnosticKind::Unsupported: return "unsupported";
  }
  return "?";
}

struct Diagnostic {
  NodeId node = 0;
  SourceLocation location;
  DiagnosticKind kind = DiagnosticKind::Mismatch;
  std::string message;
};

/// One inference-rule application: `rule @ node : before ⟶ after`.
struct TraceEvent {
  std::string rule;
  NodeId node = 0;
  std::optional<Type> before;
  Type after = Type::bottom();
};

inline std::string to_string(const TraceEvent& ev) {
  return ev.rule + " @ " + std::to_string(ev.node) + " : " +
         (ev.before ? to_string(*ev.before) : std::string("_")) + " ⟶ " + to_string(ev.after);
}

using TraceSink = std::function<void(const TraceEvent&)>;

/// Collects diagnostics and forwards rule applications to an optional sink.
class InferenceLog {
 public:
  void set_trace(TraceSink sink) { trace_ = std::move(sink); }
  bool tracing() const { return static_cast<bool>(trace_); }

  void rule(std::string rule, NodeId node, std::optional<Type> before, Type after) {
    if (trace_) trace_(TraceEvent{std::move(rule), node, std::move(before), std::move(after)});
  }

  void error(const Expr& at, DiagnosticKind kind, std::string message) {
    diagnostics_.push_back(Diagnostic{at.id, at.span.begin, kind, std::move(message)});
  }

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
  TraceSink trace_;
};

}  // namespace isatype
