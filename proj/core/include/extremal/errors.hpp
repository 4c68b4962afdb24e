#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

enum class Errc {
    LoopArc,
    DuplicateArc,
    OutOfRange,
    SameVertex,
    TooSmall,
    EmptySide,
    BudgetExceeded,
    CutTooBig,
    InvalidInput,
    BadParameter,
    MissingArc,
    MissingDigon,
    ComponentViolation,
    InvalidPeripheral,
    BadPartition,
    ParityViolation,
    BadK,
    MissingEdge,
    VertexNotInEdge,
    ParseError,
    Timeout,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace extremal
