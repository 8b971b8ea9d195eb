#pragma once

#include <stdexcept>
#include <string>

namespace glsmx {

// Base of every error thrown by the library.  The CLI reports what() verbatim.
class Error : public std::runtime_error {
public:
    Error(const std::string& kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(kind) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define GLSMX_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    };

GLSMX_DEFINE_ERROR(DivisionByNonUnit)
GLSMX_DEFINE_ERROR(BadConstantTerm)
GLSMX_DEFINE_ERROR(SubstitutionPole)
GLSMX_DEFINE_ERROR(NonIntegralChi)
GLSMX_DEFINE_ERROR(OnWall)
GLSMX_DEFINE_ERROR(NotInfinityStable)
GLSMX_DEFINE_ERROR(WrongMultiplicity)
GLSMX_DEFINE_ERROR(BoundsExceeded)
GLSMX_DEFINE_ERROR(OutOfUnstableRange)
GLSMX_DEFINE_ERROR(DegreeViolation)
GLSMX_DEFINE_ERROR(InconsistentOrbData)
GLSMX_DEFINE_ERROR(IdentityFailed)
GLSMX_DEFINE_ERROR(ConfigError)

#undef GLSMX_DEFINE_ERROR

}  // namespace glsmx
