#pragma once

#include <stdexcept>
#include <string>

namespace mafia {

enum class Errc {
  syntax,
  unbound_constant,
  undeclared_state,
  duplicate_decl,
  unknown_stream,
  arity,
  unknown_field,
  unknown_state,
  division_by_zero,
  filter_too_wide,
  unsupported_expr,
  trace_format,
  config,
  io,
  runtime,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + std::move(msg)),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct SourceLoc {
  int line = 0;
  int col = 0;
};

struct Diagnostic {
  enum class Severity { info, warning, error };

  Severity severity = Severity::error;
  std::string file;
  SourceLoc loc;
  std::string message;

  std::string str() const;
};

const char* severity_name(Diagnostic::Severity s);

}  // namespace mafia
