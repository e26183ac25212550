#pragma once

#include <string>

#include "oddu/elementary.hpp"

namespace oddu {

enum class LevelKind { Zero, TLevel, Full };

std::string_view to_string(LevelKind k);

struct LevelClass {
  LevelKind kind = LevelKind::Zero;
  /// The generator that forced the class, e.g. "sigma[1,-1]=1" or
  /// "Q(sigma[*,-1])=(1;0)". Empty for Zero.
  std::string witness;
};

/// One of the (at most three) odd form ideals of a form field.
class OddFormIdeal {
public:
  static OddFormIdeal zero() { return OddFormIdeal(LevelKind::Zero); }
  /// (0, K x 0); only an odd form ideal when mu = 0 and K x 0 lies in delta.
  static OddFormIdeal t_level() { return OddFormIdeal(LevelKind::TLevel); }
  static OddFormIdeal full() { return OddFormIdeal(LevelKind::Full); }
  static OddFormIdeal of(LevelKind k) { return OddFormIdeal(k); }

  LevelKind kind() const noexcept { return kind_; }
  bool ideal_is_K() const noexcept { return kind_ == LevelKind::Full; }
  bool ideal_contains(Elem x) const { return ideal_is_K() || x.v == 0; }
  /// Membership in Omega^sign.
  bool omega_contains(const FormSetup& s, HPair a, int sign = 1) const;

private:
  explicit OddFormIdeal(LevelKind k) : kind_(k) {}
  LevelKind kind_;
};

LevelClass level_of(const FormSetup& s, const UMatrix& sigma);
bool in_congruence(const FormSetup& s, const UMatrix& sigma, const OddFormIdeal& ideal);
bool is_ideal_elementary(const FormSetup& s, const Atom& atom, const OddFormIdeal& ideal);

}  // namespace oddu
