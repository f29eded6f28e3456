#pragma once

#include <stdexcept>
#include <string>

namespace permpoly {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PERMPOLY_DEFINE_ERROR(Name)                 \
    struct Name : Error {                           \
        using Error::Error;                         \
    }

PERMPOLY_DEFINE_ERROR(NotPrime);
PERMPOLY_DEFINE_ERROR(NotIrreducible);
PERMPOLY_DEFINE_ERROR(DegreeMismatch);
PERMPOLY_DEFINE_ERROR(FieldTooLarge);
PERMPOLY_DEFINE_ERROR(FieldMismatch);
PERMPOLY_DEFINE_ERROR(DivisionByZero);
PERMPOLY_DEFINE_ERROR(WrongLength);
PERMPOLY_DEFINE_ERROR(EqualPoints);
PERMPOLY_DEFINE_ERROR(ZeroScale);
PERMPOLY_DEFINE_ERROR(ConstantInput);
PERMPOLY_DEFINE_ERROR(SumMismatch);
PERMPOLY_DEFINE_ERROR(DegreeTooHigh);
PERMPOLY_DEFINE_ERROR(NotLinearized);
PERMPOLY_DEFINE_ERROR(BadParameters);
PERMPOLY_DEFINE_ERROR(EvenCharacteristic);
PERMPOLY_DEFINE_ERROR(BadDivisor);
PERMPOLY_DEFINE_ERROR(NotAPP);
PERMPOLY_DEFINE_ERROR(NotNormalized);
PERMPOLY_DEFINE_ERROR(DegreeOutOfRange);
PERMPOLY_DEFINE_ERROR(UnknownFamily);
PERMPOLY_DEFINE_ERROR(SearchTooLarge);
PERMPOLY_DEFINE_ERROR(UnknownAudit);

#undef PERMPOLY_DEFINE_ERROR

}  // namespace permpoly
