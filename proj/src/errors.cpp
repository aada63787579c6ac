#include "mafia/errors.hpp"

namespace mafia {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax: return "SyntaxError";
    case Errc::unbound_constant: return "UnboundConstant";
    case Errc::undeclared_state: return "UndeclaredState";
    case Errc::duplicate_decl: return "DuplicateDecl";
    case Errc::unknown_stream: return "UnknownStream";
    case Errc::arity: return "ArityError";
    case Errc::unknown_field: return "UnknownField";
    case Errc::unknown_state: return "UnknownState";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::filter_too_wide: return "FilterTooWide";
    case Errc::unsupported_expr: return "UnsupportedExpr";
    case Errc::trace_format: return "TraceFormatError";
    case Errc::config: return "ConfigError";
    case Errc::io: return "IoError";
    case Errc::runtime: return "RuntimeError";
  }
  return "Error";
}

const char* severity_name(Diagnostic::Severity s) {
  switch (s) {
    case Diagnostic::Severity::info: return "info";
    case Diagnostic::Severity::warning: return "warning";
    case Diagnostic::Severity::error: return "error";
  }
  return "?";
}

std::string Diagnostic::str() const {
  std::string out = file.empty() ? "<input>" : file;
  out += ":" + std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": ";
  out += severity_name(severity);
  out += ": ";
  out += message;
  return out;
}

}  // namespace mafia
