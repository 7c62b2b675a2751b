#include "latmin/error.hpp"

namespace latmin {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionDeficient: return "DimensionDeficient";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotAVertex: return "NotAVertex";
    case ErrorKind::SingularVertex: return "SingularVertex";
    case ErrorKind::NotAmplePolytope: return "NotAmplePolytope";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::MixedProfile: return "MixedProfile";
    case ErrorKind::NegativeParameter: return "NegativeParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

} // namespace latmin
