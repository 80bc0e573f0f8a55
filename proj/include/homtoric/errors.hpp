// Error types thrown across the library. Every error carries a stable
// machine-readable code next to the human-readable message.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace homtoric {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define HOMTORIC_DEFINE_ERROR(Name)                        \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& message)              \
        : Error(#Name, message) {}                         \
  }

// root_system
HOMTORIC_DEFINE_ERROR(InvalidRank);

// flag
HOMTORIC_DEFINE_ERROR(TrivialFlag);
HOMTORIC_DEFINE_ERROR(DegenerateFunctional);

// toric_fiber
HOMTORIC_DEFINE_ERROR(NonPrimitiveRay);
HOMTORIC_DEFINE_ERROR(NonUnimodularCone);
HOMTORIC_DEFINE_ERROR(IncompleteFan);
HOMTORIC_DEFINE_ERROR(NotFano);

// twist
HOMTORIC_DEFINE_ERROR(NotInCenter);
HOMTORIC_DEFINE_ERROR(NotABasis);
HOMTORIC_DEFINE_ERROR(RankDeficient);

// problem documents
HOMTORIC_DEFINE_ERROR(SyntaxError);
HOMTORIC_DEFINE_ERROR(BadRational);
HOMTORIC_DEFINE_ERROR(DimensionMismatch);
HOMTORIC_DEFINE_ERROR(RankTooSmall);

// internal linear algebra misuse (a singular system where an invertible
// one is guaranteed indicates a bug upstream, not bad user input)
HOMTORIC_DEFINE_ERROR(SingularMatrix);

#undef HOMTORIC_DEFINE_ERROR

}  // namespace homtoric
