#pragma once

#include <stdexcept>
#include <string>

namespace kirwanlab {

/// Base of every error raised by the library. `code()` is the stable,
/// machine-readable name reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define KIRWANLAB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

KIRWANLAB_DEFINE_ERROR(ParseError);
KIRWANLAB_DEFINE_ERROR(ValidationError);
KIRWANLAB_DEFINE_ERROR(CustomBasisNotABasis);
KIRWANLAB_DEFINE_ERROR(Inconsistent);
KIRWANLAB_DEFINE_ERROR(Singular);
KIRWANLAB_DEFINE_ERROR(DegenerateSpec);
KIRWANLAB_DEFINE_ERROR(CriticalLevel);
KIRWANLAB_DEFINE_ERROR(WrongDegree);
KIRWANLAB_DEFINE_ERROR(BasisMismatch);
KIRWANLAB_DEFINE_ERROR(MissingBranch);
KIRWANLAB_DEFINE_ERROR(InvalidWeighting);

#undef KIRWANLAB_DEFINE_ERROR

}  // namespace kirwanlab
