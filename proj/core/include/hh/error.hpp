#pragma once
#include <stdexcept>
#include <string>

namespace hh {

enum class ErrorKind {
  ShapeMismatch,
  NotAComplex,
  UnitNotSplit,
  WindowTooWide,
  InvalidAction,
  TargetMismatch,
  NotASubgroup,
  InvalidComplex,
  NotSimplicial,
  NotFree,
  OrbitCollision,
  InvalidRing,
  ParseError,
  ValidationError,
  CapExceeded,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(error_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hh
