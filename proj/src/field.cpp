#include "oddu/field.hpp"

#include <charconv>
#include <string>

#include "oddu/error.hpp"

namespace oddu {

namespace {

using Poly = std::vector<int>;

int mod(long long a, int p) {
  long long r = a % p;
  return int(r < 0 ? r + p : r);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inv_mod_p(int a, int p) {
  // p is prime and small; Fermat.
  long long r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return int(r);
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_rem(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = int(g.size()) - 1;
  const int lead_inv = inv_mod_p(g.back(), p);
  while (int(f.size()) - 1 >= dg && !f.empty()) {
    const int shift = int(f.size()) - 1 - dg;
    const int c = int((long long)f.back() * lead_inv % p);
    for (int i = 0; i <= dg; ++i) f[shift + i] = mod(f[shift + i] - (long long)c * g[i], p);
    trim(f);
  }
  return f;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  const int deg = int(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    // enumerate monic polynomials of degree d
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = int(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldCtx::FieldCtx(int p, int k, std::vector<int> modulus, InvolutionKind involution, int cap)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)), involution_(involution) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::BadModulus, "extension degree must be >= 1");
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > cap)
      throw Error(Errc::FieldTooLarge, "field size exceeds cap " + std::to_string(cap));
  }
  if (int(modulus_.size()) != k + 1)
    throw Error(Errc::BadModulus, "modulus must have k+1 coefficients");
  for (auto& c : modulus_) c = mod(c, p);
  if (modulus_.back() != 1) throw Error(Errc::BadModulus, "modulus must be monic");
  if (!is_irreducible(p, modulus_))
    throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  if (involution == InvolutionKind::FrobeniusHalf && k % 2 != 0)
    throw Error(Errc::BadInvolution, "frobenius involution requires even degree");

  const std::size_t q = std::size_t(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  bar_.resize(q);

  std::vector<Poly> polys(q);
  for (int a = 0; a < q_; ++a) polys[a] = coeffs(Elem{std::uint16_t(a)});
  auto encode = [&](const Poly& f) {
    int v = 0;
    for (int i = int(f.size()) - 1; i >= 0; --i) v = v * p_ + f[i];
    return std::uint16_t(v);
  };

  for (int a = 0; a < q_; ++a) {
    Poly n(k_);
    for (int i = 0; i < k_; ++i) n[i] = mod(-polys[a][i], p_);
    neg_[a] = encode(n);
    for (int b = 0; b < q_; ++b) {
      Poly s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * q + b] = encode(s);
      Poly prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
          prod[i + j] = int((prod[i + j] + (long long)polys[a][i] * polys[b][j]) % p_);
      Poly r = poly_rem(prod, modulus_, p_);
      r.resize(k_, 0);
      mul_[a * q + b] = encode(r);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = std::uint16_t(b);
        break;
      }

  long long frob = 1;
  if (involution_ == InvolutionKind::FrobeniusHalf)
    for (int i = 0; i < k_ / 2; ++i) frob *= p_;
  for (int a = 0; a < q_; ++a)
    bar_[a] = involution_ == InvolutionKind::Identity ? std::uint16_t(a)
                                                      : pow(Elem{std::uint16_t(a)}, frob).v;
}

Elem FieldCtx::inv(Elem a) const {
  if (a.v == 0) throw Error(Errc::ZeroScalar, "inverse of zero");
  return Elem{inv_[a.v]};
}

Elem FieldCtx::pow(Elem a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem FieldCtx::from_int(long long value) const {
  return Elem{std::uint16_t(mod(value, p_))};
}

Elem FieldCtx::from_coeffs(std::span<const int> c) const {
  std::vector<long long> d(c.begin(), c.end());
  return from_digits(d);
}

Elem FieldCtx::from_digits(std::span<const long long> digits) const {
  if (int(digits.size()) > k_)
    throw Error(Errc::Parse, "element literal has more than " + std::to_string(k_) + " digits");
  int v = 0;
  for (int i = int(digits.size()) - 1; i >= 0; --i) v = v * p_ + mod(digits[i], p_);
  return Elem{std::uint16_t(v)};
}

std::vector<int> FieldCtx::coeffs(Elem a) const {
  std::vector<int> c(k_);
  int v = a.v;
  for (int i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::vector<Elem> FieldCtx::elements() const {
  std::vector<Elem> out(q_);
  for (int a = 0; a < q_; ++a) out[a] = Elem{std::uint16_t(a)};
  return out;
}

std::vector<Elem> FieldCtx::units() const {
  std::vector<Elem> out;
  for (int a = 1; a < q_; ++a) out.push_back(Elem{std::uint16_t(a)});
  return out;
}

int FieldCtx::order(Elem a) const {
  if (a.v == 0) throw Error(Errc::ZeroScalar, "order of zero");
  int k = 1;
  for (Elem x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

Elem FieldCtx::primitive() const {
  for (Elem a : units())
    if (order(a) == q_ - 1) return a;
  throw Error(Errc::InternalInvariant, "no primitive element");
}

std::string FieldCtx::format(Elem a) const {
  std::string out;
  auto c = coeffs(a);
  for (int i = 0; i < k_; ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

std::vector<long long> parse_digit_list(std::string_view text) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? end : end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    long long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (tok.empty() || ec != std::errc{} || ptr != last)
      throw Error(Errc::Parse, "bad digit '" + std::string(tok) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

Elem FieldCtx::parse(std::string_view text) const {
  auto digits = parse_digit_list(text);
  for (long long d : digits)
    if (d < 0 || d >= p_)
      throw Error(Errc::Parse, "digit " + std::to_string(d) + " outside 0.." + std::to_string(p_ - 1));
  return from_digits(digits);
}

}  // namespace oddu
