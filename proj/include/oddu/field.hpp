#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddu {

inline constexpr int kDefaultFieldCap = 512;

/// Element of GF(p^k). The value is the base-p number whose digits are the
/// little-endian coefficients, so enumeration order is value order and the
/// encoding is canonical.
struct Elem {
  std::uint16_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class InvolutionKind { Identity, FrobeniusHalf };

/// GF(p^k) = GF(p)[t]/(modulus) with a field involution. All arithmetic is
/// table driven; the context is immutable after construction.
class FieldCtx {
public:
  /// `modulus` holds k+1 little-endian coefficients and must be monic.
  FieldCtx(int p, int k, std::vector<int> modulus, InvolutionKind involution,
           int cap = kDefaultFieldCap);

  int p() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  int size() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  InvolutionKind involution() const noexcept { return involution_; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  Elem add(Elem a, Elem b) const { return Elem{add_[idx(a, b)]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[idx(a, b)]}; }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  Elem bar(Elem a) const { return Elem{bar_[a.v]}; }
  /// Throws Errc::ZeroScalar on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  /// bar(x) * x.
  Elem norm(Elem a) const { return mul(bar(a), a); }

  Elem from_int(long long value) const;
  Elem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Elem a) const;
  bool contains(Elem a) const noexcept { return a.v < q_; }

  /// All elements in enumeration order.
  std::vector<Elem> elements() const;
  /// Nonzero elements in enumeration order.
  std::vector<Elem> units() const;
  int order(Elem a) const;
  /// First element (in enumeration order) generating the multiplicative group.
  Elem primitive() const;

  /// Element literal: base-p digits, little-endian, comma separated.
  std::string format(Elem a) const;
  /// Strict: digits in 0..p-1, at most k of them (missing high digits are 0).
  Elem parse(std::string_view text) const;
  /// Digits (possibly negative, reduced mod p) to an element; fewer than k
  /// digits are zero padded.
  Elem from_digits(std::span<const long long> digits) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_ &&
           a.involution_ == b.involution_;
  }

private:
  std::size_t idx(Elem a, Elem b) const { return std::size_t(a.v) * q_ + b.v; }

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  InvolutionKind involution_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> bar_;
};

bool is_prime(int p);

/// True iff the monic polynomial (little-endian coefficients) is irreducible
/// over GF(p), by trial division against all monic polynomials of degree
/// at most deg/2.
bool is_irreducible(int p, std::span<const int> poly);

/// Splits a comma separated list of integers.
std::vector<long long> parse_digit_list(std::string_view text);

}  // namespace oddu
