#pragma once

#include <stdexcept>
#include <string>

namespace syzygy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SYZYGY_DEFINE_ERROR(Name)                    \
    class Name : public Error {                      \
    public:                                          \
        explicit Name(const std::string& what)       \
            : Error(std::string(#Name ": ") + what) {} \
    }

SYZYGY_DEFINE_ERROR(NotBasePointFree);
SYZYGY_DEFINE_ERROR(NotAmple);
SYZYGY_DEFINE_ERROR(DimensionMismatch);
SYZYGY_DEFINE_ERROR(EmptySystem);
SYZYGY_DEFINE_ERROR(NonPolynomialHilbert);
SYZYGY_DEFINE_ERROR(SizeCap);
SYZYGY_DEFINE_ERROR(FieldFailure);
SYZYGY_DEFINE_ERROR(DimensionTooSmall);
SYZYGY_DEFINE_ERROR(HypothesisViolation);
SYZYGY_DEFINE_ERROR(UncertifiedTable);
SYZYGY_DEFINE_ERROR(ParseError);

#undef SYZYGY_DEFINE_ERROR

} // namespace syzygy
