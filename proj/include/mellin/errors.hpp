#ifndef MELLIN_ERRORS_HPP
#define MELLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mellin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define MELLIN_DEFINE_ERROR(Name)                 \
  struct Name : Error {                           \
    explicit Name(const std::string& msg)         \
        : Error(std::string(#Name ": ") + msg) {} \
  }

MELLIN_DEFINE_ERROR(InvalidPole);
MELLIN_DEFINE_ERROR(InvalidAngle);
MELLIN_DEFINE_ERROR(IndexRange);
MELLIN_DEFINE_ERROR(PoleHit);
MELLIN_DEFINE_ERROR(RealPolePresent);
MELLIN_DEFINE_ERROR(BranchViolation);
MELLIN_DEFINE_ERROR(QuadratureFailure);
MELLIN_DEFINE_ERROR(DimensionMismatch);
MELLIN_DEFINE_ERROR(AnalyticityViolation);
MELLIN_DEFINE_ERROR(UnsupportedMultiplicity);
MELLIN_DEFINE_ERROR(UnsupportedMultiplier);
MELLIN_DEFINE_ERROR(NotElliptic);
MELLIN_DEFINE_ERROR(RefinementExhausted);
MELLIN_DEFINE_ERROR(WindowLeakage);
MELLIN_DEFINE_ERROR(ConstraintViolation);
MELLIN_DEFINE_ERROR(SingularSection);
MELLIN_DEFINE_ERROR(InputError);

#undef MELLIN_DEFINE_ERROR

}  // namespace mellin

#endif
