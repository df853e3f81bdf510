#ifndef S1D_ERROR_HPP
#define S1D_ERROR_HPP

#include <stdexcept>
#include <string>

namespace s1d {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated. The message names the
/// operation and the violated condition, e.g. "scale: eps must be positive".
class DomainError : public Error {
 public:
  DomainError(const std::string& operation, const std::string& condition)
      : Error(operation + ": " + condition), operation_(operation) {}

  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string operation_;
};

/// An iterative refinement did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& operation, const std::string& what)
      : Error(operation + ": " + what) {}
};

}  // namespace s1d

#endif  // S1D_ERROR_HPP
