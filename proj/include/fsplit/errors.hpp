#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsplit {

// Base of every error raised by the library. kind() is a stable short name
// used in machine-readable reports ("error:<kind>").
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define FSPLIT_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                             \
    public:                                                                 \
        using Error::Error;                                                 \
        const char* kind() const noexcept override { return #Name; }        \
    }

FSPLIT_DEFINE_ERROR(InvalidArgument);
FSPLIT_DEFINE_ERROR(ContextMismatch);
FSPLIT_DEFINE_ERROR(ExponentOverflow);
FSPLIT_DEFINE_ERROR(NotHomogeneous);
FSPLIT_DEFINE_ERROR(NotASplitting);
FSPLIT_DEFINE_ERROR(VanishingResidue);
FSPLIT_DEFINE_ERROR(NonConstantTerminal);
FSPLIT_DEFINE_ERROR(NoSuchIndex);
FSPLIT_DEFINE_ERROR(EnumerationTooLarge);
FSPLIT_DEFINE_ERROR(MethodDisagreement);

#undef FSPLIT_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    const char* kind() const noexcept override { return "ParseError"; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace fsplit
