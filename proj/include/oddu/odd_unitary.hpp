#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddu/form_ring.hpp"

namespace oddu {

/// Sign of a hyperbolic index.
constexpr int eps(int i) { return i > 0 ? 1 : -1; }

/// Storage position of a Theta index: 1..n, 0, -n..-1.
constexpr int pos(int n, int i) { return i > 0 ? i - 1 : (i == 0 ? n : 2 * n + 1 + i); }
constexpr int index_at(int n, int p) { return p < n ? p + 1 : (p == n ? 0 : p - 2 * n - 1); }

/// Theta in storage order.
std::vector<int> theta(int n);
/// Theta without 0, in storage order.
std::vector<int> theta_hb(int n);

struct UVector {
  int n = 0;
  std::vector<Elem> c;

  UVector() = default;
  explicit UVector(int rank) : n(rank), c(std::size_t(2 * rank + 1)) {}

  Elem& operator[](int i) { return c[std::size_t(pos(n, i))]; }
  Elem operator[](int i) const { return c[std::size_t(pos(n, i))]; }

  static UVector basis(int rank, int i);
  friend bool operator==(const UVector&, const UVector&) = default;
};

class UMatrix {
public:
  UMatrix() = default;
  /// Zero matrix.
  explicit UMatrix(int rank) : n_(rank), dim_(2 * rank + 1), a_(std::size_t(dim_) * dim_) {}

  static UMatrix identity(int rank);

  int n() const noexcept { return n_; }
  int dim() const noexcept { return dim_; }

  Elem& operator()(int i, int j) { return a_[std::size_t(pos(n_, i)) * dim_ + pos(n_, j)]; }
  Elem operator()(int i, int j) const { return a_[std::size_t(pos(n_, i)) * dim_ + pos(n_, j)]; }
  /// Storage-order access.
  Elem& raw(int r, int c) { return a_[std::size_t(r) * dim_ + c]; }
  Elem raw(int r, int c) const { return a_[std::size_t(r) * dim_ + c]; }
  const std::vector<Elem>& data() const noexcept { return a_; }

  UVector column(int j) const;
  UVector row(int i) const;
  bool is_identity() const;

  friend bool operator==(const UMatrix&, const UMatrix&) = default;

private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<Elem> a_;
};

struct UMatrixHash {
  std::size_t operator()(const UMatrix& m) const noexcept;
};

UMatrix mul(const FieldCtx& F, const UMatrix& a, const UMatrix& b);
/// Gaussian elimination; nullopt when singular.
std::optional<UMatrix> try_inverse(const FieldCtx& F, const UMatrix& a);
/// Throws NotMember on a singular matrix.
UMatrix inverse(const FieldCtx& F, const UMatrix& a);
Elem det(const FieldCtx& F, const UMatrix& a);
UVector apply(const FieldCtx& F, const UMatrix& a, const UVector& u);
/// g h g^{-1}
UMatrix conj(const FieldCtx& F, const UMatrix& g, const UMatrix& h);
/// g h g^{-1} h^{-1}
UMatrix comm(const FieldCtx& F, const UMatrix& g, const UMatrix& h);

Elem form_B(const FormSetup& s, const UVector& u, const UVector& v);
HPair form_Q(const FormSetup& s, const UVector& u);
/// The row vector tilde(u), stored Theta-indexed like a column.
UVector polarity(const FormSetup& s, const UVector& u);
/// Row times column.
Elem dot(const FieldCtx& F, const UVector& row, const UVector& col);
/// row * matrix.
UVector row_apply(const FieldCtx& F, const UVector& row, const UMatrix& a);

/// a = b mod delta, i.e. a -. b in delta.
bool congruent(const FormSetup& s, HPair a, HPair b);

struct MemberReport {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

MemberReport is_member(const FormSetup& s, const UMatrix& sigma);
/// Definitional check. `exhaustive` runs over all of M (only for n <= 2 and
/// tiny fields).
bool member_oracle(const FormSetup& s, const UMatrix& sigma, bool exhaustive = false);

/// For sigma_{*j} = e_k x returns x-hat and asserts row -k = (e_{-j} x-hat)^t.
Elem column_companion(const FormSetup& s, const UMatrix& sigma, int j, int k, Elem x);

}  // namespace oddu
