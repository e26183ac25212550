#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddu {

enum class Errc {
  NotPrime,
  BadModulus,
  ReducibleModulus,
  BadInvolution,
  FieldTooLarge,
  LambdaNotUnitary,
  MuConditionFailed,
  InvolutionSquareFailed,
  GeneratorOutsideMax,
  KTimesZeroInvalid,
  RankOutOfRange,
  BadIndices,
  ParameterNotInDelta,
  ZeroScalar,
  NotMember,
  WrongLevel,
  RankTooSmall,
  ParameterUnsolvable,
  PreconditionFailed,
  InternalInvariant,
  OrbitCapExceeded,
  FrontierCapExceeded,
  Parse,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

private:
  Errc code_;
  std::string detail_;
};

}  // namespace oddu
