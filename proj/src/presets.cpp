#include "oddu/presets.hpp"

#include <memory>

#include "oddu/error.hpp"

namespace oddu {

namespace {

struct Row {
  std::string_view name;
  int p, k;
  std::vector<int> modulus;
  InvolutionKind inv;
  int lambda, mu;
  DeltaKind delta;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> r = {
      {"sp2", 2, 1, {1, 1}, InvolutionKind::Identity, 1, 1, DeltaKind::Max},
      {"pr2", 2, 1, {1, 1}, InvolutionKind::Identity, 1, 0, DeltaKind::Max},
      {"pr4", 2, 2, {1, 1, 1}, InvolutionKind::Identity, 1, 0, DeltaKind::Max},
      {"pr8", 2, 3, {1, 1, 0, 1}, InvolutionKind::Identity, 1, 0, DeltaKind::Max},
      {"k0", 2, 1, {1, 1}, InvolutionKind::Identity, 1, 0, DeltaKind::KTimesZero},
      {"gf5", 5, 1, {0, 1}, InvolutionKind::Identity, 4, 0, DeltaKind::Min},
      {"gf9", 3, 2, {1, 0, 1}, InvolutionKind::FrobeniusHalf, 1, 1, DeltaKind::Max},
      {"gf3", 3, 1, {0, 1}, InvolutionKind::Identity, 1, 1, DeltaKind::Max},
  };
  return r;
}

}  // namespace

FormSetup preset(std::string_view name, int n) {
  for (const Row& r : rows()) {
    if (r.name != name) continue;
    auto F = std::make_shared<FieldCtx>(r.p, r.k, r.modulus, r.inv);
    HermitianScalars sc{F->from_int(r.lambda), F->from_int(r.mu)};
    return make_setup(F, sc, r.delta, {}, n);
  }
  throw Error(Errc::Parse, "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const Row& r : rows()) out.emplace_back(r.name);
  return out;
}

}  // namespace oddu
