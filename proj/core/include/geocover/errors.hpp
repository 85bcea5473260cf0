#pragma once

#include <stdexcept>
#include <string>

namespace geocover {

enum class ErrorKind {
  kInput,       // malformed ids, pieces, or files
  kSizeGuard,   // instance too large for an exhaustive routine
  kInfeasible,  // parameters admit no valid construction
  kNotFound,    // a search that should succeed came back empty
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::kInput, what) {}
};

class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(ErrorKind::kSizeGuard, what) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error(ErrorKind::kInfeasible, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(ErrorKind::kNotFound, what) {}
};

}  // namespace geocover
