#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathcon {

enum class ErrorKind {
    Parse,
    CapacityExceeded,
    NotAPartition,
    PartNotConnected,
    NotConnected,
    Disconnected,
    KeyAbsent,
    TerminalsOverlap,
    EmptyTerminal,
    InvalidSolution,
    DomainError,
};

constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::CapacityExceeded: return "capacity exceeded";
        case ErrorKind::NotAPartition: return "not a partition";
        case ErrorKind::PartNotConnected: return "part not connected";
        case ErrorKind::NotConnected: return "set not connected";
        case ErrorKind::Disconnected: return "graph disconnected";
        case ErrorKind::KeyAbsent: return "key absent";
        case ErrorKind::TerminalsOverlap: return "terminals overlap";
        case ErrorKind::EmptyTerminal: return "empty terminal set";
        case ErrorKind::InvalidSolution: return "invalid solution";
        case ErrorKind::DomainError: return "domain error";
    }
    return "unknown error";
}

/// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pathcon
