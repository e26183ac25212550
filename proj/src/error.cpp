#include "oddu/error.hpp"

namespace oddu {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadModulus: return "BadModulus";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::BadInvolution: return "BadInvolution";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::LambdaNotUnitary: return "LambdaNotUnitary";
    case Errc::MuConditionFailed: return "MuConditionFailed";
    case Errc::InvolutionSquareFailed: return "InvolutionSquareFailed";
    case Errc::GeneratorOutsideMax: return "GeneratorOutsideMax";
    case Errc::KTimesZeroInvalid: return "KTimesZeroInvalid";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::BadIndices: return "BadIndices";
    case Errc::ParameterNotInDelta: return "ParameterNotInDelta";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotMember: return "NotMember";
    case Errc::WrongLevel: return "WrongLevel";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::ParameterUnsolvable: return "ParameterUnsolvable";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::InternalInvariant: return "InternalInvariant";
    case Errc::OrbitCapExceeded: return "OrbitCapExceeded";
    case Errc::FrontierCapExceeded: return "FrontierCapExceeded";
    case Errc::Parse: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

}  // namespace oddu
