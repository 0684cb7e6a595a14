#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace difflat {

enum class ErrorKind {
    BadInput,
    NotALattice,
    NotBounded,
    CyclicCovers,
    BadSize,
    NotAChain,
    BadPair,
    BadBound,
    NotADerivation,
    WrongShape,
    DifferentLattices,
    TooLarge,
    PosetNotLattice,
    IsoFailure,
    Overflow,
    Parse,
    Internal,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message);

    [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

} // namespace difflat
