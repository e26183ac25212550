#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddu/form_ring.hpp"

namespace oddu {

/// Named setups used by tests, the acceptance run and `--setup @name`.
///   sp2   GF(2), id, lambda=1, mu=1, delta=max (0 x K)
///   pr2   GF(2), id, lambda=1, mu=0, delta=max (K x K)
///   pr4   GF(4), id, lambda=1, mu=0, delta=max
///   pr8   GF(8), id, lambda=1, mu=0, delta=max
///   k0    GF(2), id, lambda=1, mu=0, delta=K x 0
///   gf5   GF(5), id, lambda=4, mu=0, delta=min (0 x K)
///   gf9   GF(9), frobenius, lambda=1, mu=1, delta=max
///   gf3   GF(3), id, lambda=1, mu=1, delta=max
FormSetup preset(std::string_view name, int n);
std::vector<std::string> preset_names();

}  // namespace oddu
