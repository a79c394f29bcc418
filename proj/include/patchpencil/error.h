#pragma once

#include <stdexcept>
#include <string>

namespace patchpencil {

enum class ErrorKind {
  Precondition,   // caller violated a documented precondition
  Parse,          // malformed interchange data
  Inconsistent,   // an exact system has no solution (e.g. edge scalings)
  Certification,  // a certificate was definitively refuted
  Inconclusive,   // refinement budget exhausted; no claim either way
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

  /// Prefixes the message with the pipeline stage that raised it.
  Error with_stage(const std::string& stage) const {
    Error tagged(kind_, stage + ": " + what());
    tagged.stage_ = stage;
    return tagged;
  }

 private:
  ErrorKind kind_;
  std::string stage_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace patchpencil
