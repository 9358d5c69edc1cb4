#pragma once

#include <stdexcept>
#include <string>

namespace edom {

enum class ErrorKind {
    // gf
    NonPrimeCharacteristic,
    OrderOverflow,
    EvenCharacteristic,
    NonDivisor,
    NonSquareOrder,
    // core / io
    ParseError,
    DuplicateBlock,
    IndexOutOfRange,
    EmptyBlock,
    TooLarge,
    // matching
    NotBiregular,
    UnequalSides,
    WrongOrder,
    IsolatedPoint,
    NotDominating,
    // constructions
    OutOfRange,
    BadResidueClass,
    NotRegular,
    DegenerateLambda,
    NoSeedAvailable,
    OddQ,
    EvenQ,
    SpanTooSmall,
    ContainsPlane,
    BadOrder,
    TooSmallN,
    ParameterMismatch,
    // ifpairs / bounds
    NotAPolarity,
    NotADesign,
    NotSIS,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace edom
