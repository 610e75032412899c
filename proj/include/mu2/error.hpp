#pragma once

#include <stdexcept>
#include <string>

namespace mu2 {

// Error categories, kept coarse so the C API and the CLI can map them to
// stable status / exit codes.
enum class ErrorKind {
  parse,    // malformed input text
  invalid,  // argument outside the operation's domain (bad range, not 2-CNF, ...)
  not_mu,   // operation requires a minimally unsatisfiable input
  cap,      // configurable resource guard tripped
  logic,    // internal consistency check failed; indicates a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace mu2
