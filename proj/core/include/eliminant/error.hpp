#pragma once

#include <stdexcept>
#include <string>

namespace eliminant {

// Machine-readable error codes surfaced through the CLI.
enum class ErrCode {
    RingMismatch,
    DomainError,
    NonSquare,
    SingularMatrix,
    NotHomogeneous,
    GenericityFailed,
    ZeroDenominator,
    NonFieldCoefficients,
    DimMismatch,
    UnknownVariable,
    ParseError,
    BadArgument,
};

const char* err_code_name(ErrCode c);

class Error : public std::runtime_error {
public:
    Error(ErrCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrCode code() const { return code_; }

private:
    ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace eliminant
