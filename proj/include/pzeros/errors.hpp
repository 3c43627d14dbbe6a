#pragma once

#include <stdexcept>
#include <string>

namespace pzeros {

// Every failure the library reports derives from Error so callers (the CLI in
// particular) can map computational failures to a single exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PZEROS_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  }

PZEROS_DEFINE_ERROR(DomainError);
PZEROS_DEFINE_ERROR(PrecisionError);
PZEROS_DEFINE_ERROR(ResourceError);
PZEROS_DEFINE_ERROR(UnsupportedFamily);
PZEROS_DEFINE_ERROR(GcdError);
PZEROS_DEFINE_ERROR(SingularError);
PZEROS_DEFINE_ERROR(BranchError);
PZEROS_DEFINE_ERROR(NoSignChange);
PZEROS_DEFINE_ERROR(StepFailure);
PZEROS_DEFINE_ERROR(ConvergenceError);
PZEROS_DEFINE_ERROR(EmptySelection);
PZEROS_DEFINE_ERROR(ValidationError);

#undef PZEROS_DEFINE_ERROR

}  // namespace pzeros
