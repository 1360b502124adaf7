#pragma once

#include <stdexcept>
#include <string>

namespace floquet {

// Numeric-regime failures map to CLI exit status 2, everything else to 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what, bool numeric)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), numeric_(numeric) {}

    const std::string& kind() const noexcept { return kind_; }
    bool numeric() const noexcept { return numeric_; }

private:
    std::string kind_;
    bool numeric_;
};

#define FLOQUET_ERROR(Name, numeric)                                      \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(#Name, what, numeric) {} \
    };

FLOQUET_ERROR(ImaginaryResidue, true)
FLOQUET_ERROR(InvalidOrder, false)
FLOQUET_ERROR(ZeroInput, true)
FLOQUET_ERROR(IndexOutOfRange, false)
FLOQUET_ERROR(StepUnderflow, true)
FLOQUET_ERROR(OverflowRegime, true)
FLOQUET_ERROR(PalindromeViolation, true)
FLOQUET_ERROR(AmbiguousMatching, true)
FLOQUET_ERROR(RootCountMismatch, true)
FLOQUET_ERROR(GridTooCoarse, true)
FLOQUET_ERROR(ParityViolation, true)
FLOQUET_ERROR(ContourTooClose, true)
FLOQUET_ERROR(NewtonDivergence, true)
FLOQUET_ERROR(TruncationTooSmall, true)
FLOQUET_ERROR(ConfigError, false)

#undef FLOQUET_ERROR

}  // namespace floquet
