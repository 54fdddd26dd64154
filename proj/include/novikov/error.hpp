#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

enum class ErrorKind {
  DivisionByZero,
  SingularMatrix,
  SingularForm,
  ShapeMismatch,
  NonHomogeneous,
  InvalidForm,
  NotLie,
  PreconditionUnverified,
  ParityMismatch,
  NotAdmissible,
  NonDegenerateProduct,
  StarPropertiesFail,
  HNotAssociative,
  OmegaNotInvariant,
  BadParams,
  UnknownFamily,
  GridTooLarge,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace novikov
