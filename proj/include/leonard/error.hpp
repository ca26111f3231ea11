#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leonard {

enum class Errc {
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    CharTwoUnsupported,
    SizeMismatch,
    ZeroScale,
    NotMultiplicityFree,
    InvalidInput,
    BadCharacteristic,
    ConstraintViolated,
    RepeatedDualEigenvalue,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace leonard
