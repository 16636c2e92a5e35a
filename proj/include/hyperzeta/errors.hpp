#pragma once

#include <stdexcept>
#include <string>

namespace hyperzeta {

/// Broad failure classes; the CLI maps each onto an exit code.
enum class ErrorCategory { Domain, Convergence, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define HYPERZETA_DEFINE_ERROR(Name, Category)                         \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what)                             \
        : Error(ErrorCategory::Category, #Name ": " + what) {}         \
  };

HYPERZETA_DEFINE_ERROR(DomainError, Domain)
HYPERZETA_DEFINE_ERROR(PoleError, Domain)
HYPERZETA_DEFINE_ERROR(SingularityError, Domain)
HYPERZETA_DEFINE_ERROR(EvaluationError, Domain)
HYPERZETA_DEFINE_ERROR(TruncationError, Domain)
HYPERZETA_DEFINE_ERROR(StepError, Domain)
HYPERZETA_DEFINE_ERROR(ConvergenceError, Convergence)
HYPERZETA_DEFINE_ERROR(QuadratureError, Convergence)
HYPERZETA_DEFINE_ERROR(SchemaError, Io)
HYPERZETA_DEFINE_ERROR(IoError, Io)

#undef HYPERZETA_DEFINE_ERROR

}  // namespace hyperzeta
