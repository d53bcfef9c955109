#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauerkit {

enum class Errc {
    DegreeMismatch,
    OrderCapExceeded,
    LatticeCapExceeded,
    NotNormal,
    NotSubgroup,
    NotPrime,
    DimensionMismatch,
    NotSublattice,
    IntegralityViolation,
    GroupMismatch,
    ParseError,
    UnsupportedSize,
    CacheError,
    InvalidArgument,
};

constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::LatticeCapExceeded: return "LatticeCapExceeded";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSublattice: return "NotSublattice";
    case Errc::IntegralityViolation: return "IntegralityViolation";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::CacheError: return "CacheError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace brauerkit
