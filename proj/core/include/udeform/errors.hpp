#ifndef UDEFORM_ERRORS_HPP
#define UDEFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace udeform {

enum class ErrorCode {
  InvalidInput,
  ModeMismatch,
  AntisymmetryViolation,
  JacobiViolation,
  EmbeddingMismatch,
  ClosureFailure,
  DegreeCapExceeded,
  MalleabilityViolation,
  NotAnEigenvector,
  TruncationNotCertified,
  UnsupportedFamilyOrder,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code);

}  // namespace udeform

#endif
