#pragma once

#include <memory>
#include <vector>

#include "oddu/field.hpp"

namespace oddu {

inline constexpr int kDefaultRankCap = 6;

struct HermitianScalars {
  Elem lambda;
  Elem mu;
};

/// Checks bar(lambda)*lambda = 1, mu = bar(mu)*lambda and
/// bar(bar(x)) = lambda*x*bar(lambda) for every x.
HermitianScalars validate_scalars(const FieldCtx& field, Elem lambda, Elem mu);

/// Element of the Heisenberg group.
struct HPair {
  Elem x;
  Elem y;

  friend constexpr bool operator==(HPair, HPair) = default;
  friend constexpr auto operator<=>(HPair, HPair) = default;
};

/// A field with involution and Hermitian scalars. Sign +1 is the given data,
/// sign -1 the inverse Hermitian ring (same involution for commutative K,
/// symmetry lambda^{-1}, mu replaced by bar(mu)).
struct HermitianRing {
  std::shared_ptr<const FieldCtx> field;
  HermitianScalars scalars;

  const FieldCtx& F() const { return *field; }
  Elem lambda(int sign = 1) const;
  Elem mu(int sign = 1) const;
  /// lambda^e for e in {-1, 0, 1}.
  Elem lambda_pow(int e) const;
};

HPair h_add(const HermitianRing& ring, int sign, HPair a, HPair b);
HPair h_neg(const HermitianRing& ring, int sign, HPair a);
/// a -. b, i.e. a +. (-. b).
HPair h_sub(const HermitianRing& ring, int sign, HPair a, HPair b);
HPair h_scale(const HermitianRing& ring, int sign, HPair a, Elem c);
Elem trace(const HermitianRing& ring, HPair a, int sign = 1);

enum class DeltaKind { Min, Max, KTimesZero, Generated };

/// A materialized odd form parameter (or its sign -1 twin).
class FormParameter {
public:
  FormParameter() = default;
  FormParameter(const FieldCtx& field, DeltaKind kind, int sign, std::vector<HPair> generators,
                std::vector<HPair> elements);

  DeltaKind kind() const noexcept { return kind_; }
  int sign() const noexcept { return sign_; }
  const std::vector<HPair>& generators() const noexcept { return generators_; }
  /// Sorted lexicographically on (x, y).
  const std::vector<HPair>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(HPair a) const {
    return member_[std::size_t(a.x.v) * q_ + a.y.v];
  }

private:
  DeltaKind kind_ = DeltaKind::Min;
  int sign_ = 1;
  int q_ = 0;
  std::vector<HPair> generators_;
  std::vector<HPair> elements_;
  std::vector<bool> member_;
};

std::vector<HPair> delta_min_elements(const HermitianRing& ring, int sign = 1);
std::vector<HPair> delta_max_elements(const HermitianRing& ring, int sign = 1);

/// Smallest subgroup of the (sign) Heisenberg group containing `gens`
/// (and delta_min unless `include_min` is false), stable under scaling by K.
std::vector<HPair> module_closure(const HermitianRing& ring, int sign,
                                  const std::vector<HPair>& gens, bool include_min = true);

FormParameter build_parameter(const HermitianRing& ring, DeltaKind kind,
                              const std::vector<HPair>& generators = {});

/// {(x, y) : (x, bar(y)) in p}.
FormParameter flip_sign(const HermitianRing& ring, const FormParameter& p);

/// Hermitian form field plus odd form parameter and rank.
struct FormSetup : HermitianRing {
  FormParameter delta;      // sign +1
  FormParameter delta_inv;  // sign -1
  int n = 0;
  /// j_delta[y.v] iff (y, z) in delta for some z.
  std::vector<bool> j_delta;

  const FormParameter& delta_signed(int sign) const { return sign > 0 ? delta : delta_inv; }
  bool j_is_field() const { return j_delta.size() > 1 && j_delta[1]; }
  /// mu = 0 and K x 0 is contained in delta.
  bool admits_tlevel() const;
};

FormSetup make_setup(std::shared_ptr<const FieldCtx> field, HermitianScalars scalars,
                     DeltaKind kind, const std::vector<HPair>& generators, int n,
                     int rank_cap = kDefaultRankCap);

/// Same form ring at another rank.
FormSetup with_rank(const FormSetup& setup, int n, int rank_cap = kDefaultRankCap);

}  // namespace oddu
