#include <difflat/error.hpp>

namespace difflat {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::BadPair: return "BadPair";
    case ErrorKind::BadBound: return "BadBound";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::DifferentLattices: return "DifferentLattices";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PosetNotLattice: return "PosetNotLattice";
    case ErrorKind::IsoFailure: return "IsoFailure";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(to_string(kind)) + ": " + message),
    _kind(kind)
{
}

} // namespace difflat
