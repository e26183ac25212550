#pragma once

#include <optional>
#include <vector>

#include "oddu/level.hpp"

namespace oddu {

struct ConjFactor {
  EWord conj;
  int exp = 1;

  friend bool operator==(const ConjFactor&, const ConjFactor&) = default;
};

/// target = prod_k conj_k * base^{exp_k} * conj_k^{-1}, left to right.
struct ConjugateWord {
  UMatrix base;
  std::vector<ConjFactor> factors;
  UMatrix target;
  /// Set when the target is a single transvection.
  std::optional<Atom> target_atom;

  std::size_t length() const noexcept { return factors.size(); }
};

/// Multiplies out the factors.
UMatrix certificate_product(const FormSetup& s, const UMatrix& base,
                            const std::vector<ConjFactor>& factors);

/// Recomputes the product and compares with the target; re-validates the base
/// and all conjugators.
bool verify_certificate(const FormSetup& s, const ConjugateWord& cw);

enum class ReductionKind { ToMinus1, To2, Colinear10 };

struct ReductionOutcome {
  ReductionKind kind = ReductionKind::Colinear10;
  /// (^tau sigma)_{*1} = e_{-1} x or e_2 x. Empty for Colinear10.
  EWord tau;
  Elem x;
  /// Only for Colinear10: sigma_{*1} = e_1 x + e_0 y.
  Elem y;
};

ReductionOutcome reduce_first_column(const FormSetup& s, const UMatrix& sigma);

/// For zeta with zeta_{*1} = e_2 x returns tau keeping that column and making
/// (^tau zeta)_{i,-2} = 0 for some i in {3,-3}. Needs n >= 3.
EWord clear_minus2(const FormSetup& s, const UMatrix& zeta);

/// Word pi with ^pi from = to; both short (any nonzero parameters) or both
/// extra with zero second component. Verified numerically.
EWord map_transvection(const FormSetup& s, const Atom& from, const Atom& to);

ConjugateWord factor_short(const FormSetup& s, const UMatrix& sigma, int i, int j, Elem x);
ConjugateWord factor_extra(const FormSetup& s, const UMatrix& sigma, int i, HPair a);

struct TLevelOptions {
  /// Allow the length-1 answers (sigma itself, or a recognized transvection).
  bool shortcut = true;
};

ConjugateWord factor_tlevel(const FormSetup& s, const UMatrix& sigma, int i, Elem x,
                            TLevelOptions opts = {});

/// Dispatch on the target atom kind and the level of sigma.
ConjugateWord factorize(const FormSetup& s, const UMatrix& sigma, const Atom& target);

}  // namespace oddu
