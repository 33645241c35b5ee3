#pragma once

#include <stdexcept>
#include <string>

namespace augcheck {

enum class Errc {
  FieldNotComputable,
  DimensionMismatch,
  SizeBound,
  BoundExceeded,
  NotIdempotent,
  NoIdempotents,
  IsGroup,
  Not0Transitive,
  NotTwoTransitive,
  NotPartialMonoid,
  Disconnected,
  Cyclic,
  NoMinimum,
  NotSemilattice,
  BadMatrix,
  NotUpperSets,
  Parse,
  Internal,
};

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code);

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace augcheck
