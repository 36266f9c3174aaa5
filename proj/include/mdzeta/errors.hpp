#pragma once

#include <stdexcept>
#include <string>

namespace mdzeta {

enum class Errc {
  NotSquarefree,
  DegenerateField,
  FieldMismatch,
  WrongSignature,
  NotTotallyPositive,
  DependentGenerators,
  MalformedDiagram,
  UnsupportedDepth,
  Divergent,
  DomainMismatch,
  ParseError,
  IoError,
};

/// Library errors carry a machine-readable code so the CLI can map them
/// to exit codes.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace mdzeta
