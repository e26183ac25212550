#include "oddu/odd_unitary.hpp"

#include <cstdlib>
#include <string>

#include "oddu/error.hpp"

namespace oddu {

std::vector<int> theta(int n) {
  std::vector<int> out;
  for (int p = 0; p < 2 * n + 1; ++p) out.push_back(index_at(n, p));
  return out;
}

std::vector<int> theta_hb(int n) {
  std::vector<int> out;
  for (int i : theta(n))
    if (i != 0) out.push_back(i);
  return out;
}

UVector UVector::basis(int rank, int i) {
  UVector u(rank);
  u[i] = FieldCtx::one();
  return u;
}

UMatrix UMatrix::identity(int rank) {
  UMatrix m(rank);
  for (int p = 0; p < m.dim_; ++p) m.raw(p, p) = FieldCtx::one();
  return m;
}

UVector UMatrix::column(int j) const {
  UVector u(n_);
  for (int i : theta(n_)) u[i] = (*this)(i, j);
  return u;
}

UVector UMatrix::row(int i) const {
  UVector u(n_);
  for (int j : theta(n_)) u[j] = (*this)(i, j);
  return u;
}

bool UMatrix::is_identity() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (raw(r, c).v != (r == c ? 1 : 0)) return false;
  return true;
}

std::size_t UMatrixHash::operator()(const UMatrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ std::uint64_t(m.n());
  for (Elem e : m.data()) {
    h ^= e.v;
    h *= 1099511628211ull;
  }
  return std::size_t(h);
}

UMatrix mul(const FieldCtx& F, const UMatrix& a, const UMatrix& b) {
  const int d = a.dim();
  UMatrix out(a.n());
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      Elem x = a.raw(r, k);
      if (x.v == 0) continue;
      for (int c = 0; c < d; ++c) {
        Elem y = b.raw(k, c);
        if (y.v) out.raw(r, c) = F.add(out.raw(r, c), F.mul(x, y));
      }
    }
  return out;
}

std::optional<UMatrix> try_inverse(const FieldCtx& F, const UMatrix& a) {
  const int d = a.dim();
  UMatrix m = a;
  UMatrix inv = UMatrix::identity(a.n());
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (m.raw(r, col).v) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int c = 0; c < d; ++c) {
        std::swap(m.raw(piv, c), m.raw(col, c));
        std::swap(inv.raw(piv, c), inv.raw(col, c));
      }
    Elem s = F.inv(m.raw(col, col));
    for (int c = 0; c < d; ++c) {
      m.raw(col, c) = F.mul(s, m.raw(col, c));
      inv.raw(col, c) = F.mul(s, inv.raw(col, c));
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || m.raw(r, col).v == 0) continue;
      Elem f = m.raw(r, col);
      for (int c = 0; c < d; ++c) {
        m.raw(r, c) = F.sub(m.raw(r, c), F.mul(f, m.raw(col, c)));
        inv.raw(r, c) = F.sub(inv.raw(r, c), F.mul(f, inv.raw(col, c)));
      }
    }
  }
  return inv;
}

UMatrix inverse(const FieldCtx& F, const UMatrix& a) {
  auto r = try_inverse(F, a);
  if (!r) throw Error(Errc::NotMember, "singular matrix");
  return *r;
}

Elem det(const FieldCtx& F, const UMatrix& a) {
  const int d = a.dim();
  UMatrix m = a;
  Elem out = F.one();
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (m.raw(r, col).v) {
        piv = r;
        break;
      }
    if (piv < 0) return F.zero();
    if (piv != col) {
      for (int c = 0; c < d; ++c) std::swap(m.raw(piv, c), m.raw(col, c));
      out = F.neg(out);
    }
    Elem p = m.raw(col, col);
    out = F.mul(out, p);
    Elem pinv = F.inv(p);
    for (int r = col + 1; r < d; ++r) {
      if (m.raw(r, col).v == 0) continue;
      Elem f = F.mul(m.raw(r, col), pinv);
      for (int c = col; c < d; ++c) m.raw(r, c) = F.sub(m.raw(r, c), F.mul(f, m.raw(col, c)));
    }
  }
  return out;
}

UVector apply(const FieldCtx& F, const UMatrix& a, const UVector& u) {
  UVector out(a.n());
  for (int r = 0; r < a.dim(); ++r) {
    Elem acc = F.zero();
    for (int c = 0; c < a.dim(); ++c) acc = F.add(acc, F.mul(a.raw(r, c), u.c[std::size_t(c)]));
    out.c[std::size_t(r)] = acc;
  }
  return out;
}

UMatrix conj(const FieldCtx& F, const UMatrix& g, const UMatrix& h) {
  return mul(F, mul(F, g, h), inverse(F, g));
}

UMatrix comm(const FieldCtx& F, const UMatrix& g, const UMatrix& h) {
  return mul(F, mul(F, mul(F, g, h), inverse(F, g)), inverse(F, h));
}

Elem form_B(const FormSetup& s, const UVector& u, const UVector& v) {
  return dot(s.F(), polarity(s, u), v);
}

HPair form_Q(const FormSetup& s, const UVector& u) {
  const FieldCtx& F = s.F();
  Elem acc = F.zero();
  for (int i = 1; i <= s.n; ++i) acc = F.add(acc, F.mul(F.bar(u[i]), u[-i]));
  return {u[0], acc};
}

UVector polarity(const FormSetup& s, const UVector& u) {
  const FieldCtx& F = s.F();
  UVector out(u.n);
  for (int j = 1; j <= u.n; ++j) {
    out[j] = F.mul(F.bar(u[-j]), s.lambda());
    out[-j] = F.bar(u[j]);
  }
  out[0] = F.mul(F.bar(u[0]), s.mu());
  return out;
}

Elem dot(const FieldCtx& F, const UVector& row, const UVector& col) {
  Elem acc = F.zero();
  for (std::size_t p = 0; p < row.c.size(); ++p) acc = F.add(acc, F.mul(row.c[p], col.c[p]));
  return acc;
}

UVector row_apply(const FieldCtx& F, const UVector& row, const UMatrix& a) {
  UVector out(a.n());
  for (int c = 0; c < a.dim(); ++c) {
    Elem acc = F.zero();
    for (int r = 0; r < a.dim(); ++r) acc = F.add(acc, F.mul(row.c[std::size_t(r)], a.raw(r, c)));
    out.c[std::size_t(c)] = acc;
  }
  return out;
}

bool congruent(const FormSetup& s, HPair a, HPair b) {
  return s.delta.contains(h_sub(s, 1, a, b));
}

namespace {

std::string idx_name(int i) { return std::to_string(i); }

}  // namespace

MemberReport is_member(const FormSetup& s, const UMatrix& sigma) {
  const FieldCtx& F = s.F();
  MemberReport rep;
  auto fail = [&](std::string d) {
    rep.ok = false;
    rep.diagnostic = std::move(d);
    return rep;
  };
  if (sigma.n() != s.n) return fail("RankMismatch");
  auto inv_opt = try_inverse(F, sigma);
  if (!inv_opt) return fail("Singular");
  const UMatrix& sp = *inv_opt;
  const Elem mu = s.mu();
  auto lp = [&](int e) { return s.lambda_pow(e); };
  for (int i : theta_hb(s.n))
    for (int j : theta_hb(s.n)) {
      Elem rhs = F.mul(F.mul(lp(-(eps(i) + 1) / 2), F.bar(sigma(-j, -i))), lp((eps(j) + 1) / 2));
      if (sp(i, j) != rhs)
        return fail("(i) hyperbolic identity at (" + idx_name(i) + "," + idx_name(j) + ")");
    }
  for (int j : theta_hb(s.n)) {
    Elem rhs = F.mul(F.bar(sigma(-j, 0)), lp((eps(j) + 1) / 2));
    if (F.mul(mu, sp(0, j)) != rhs) return fail("(i) row-0 identity at (0," + idx_name(j) + ")");
  }
  for (int i : theta_hb(s.n)) {
    Elem rhs = F.mul(F.mul(lp(-(eps(i) + 1) / 2), F.bar(sigma(0, -i))), mu);
    if (sp(i, 0) != rhs) return fail("(i) column-0 identity at (" + idx_name(i) + ",0)");
  }
  if (F.mul(mu, sp(0, 0)) != F.mul(F.bar(sigma(0, 0)), mu)) return fail("(i) identity at (0,0)");
  for (int j : theta(s.n)) {
    HPair want{j == 0 ? F.one() : F.zero(), F.zero()};
    if (!congruent(s, form_Q(s, sigma.column(j)), want))
      return fail("(ii) Q condition at column " + idx_name(j));
  }
  return rep;
}

bool member_oracle(const FormSetup& s, const UMatrix& sigma, bool exhaustive) {
  const FieldCtx& F = s.F();
  if (sigma.n() != s.n || !try_inverse(F, sigma)) return false;
  const auto th = theta(s.n);
  std::vector<UVector> img;
  for (int j : th) img.push_back(sigma.column(j));
  for (std::size_t a = 0; a < th.size(); ++a)
    for (std::size_t b = 0; b < th.size(); ++b) {
      if (form_B(s, img[a], img[b]) !=
          form_B(s, UVector::basis(s.n, th[a]), UVector::basis(s.n, th[b])))
        return false;
    }
  auto q_ok = [&](const UVector& u) {
    return congruent(s, form_Q(s, apply(F, sigma, u)), form_Q(s, u));
  };
  if (!exhaustive) {
    for (std::size_t a = 0; a < th.size(); ++a) {
      UVector u = UVector::basis(s.n, th[a]);
      if (!q_ok(u)) return false;
      for (std::size_t b = a + 1; b < th.size(); ++b) {
        UVector w = u;
        w[th[b]] = F.one();
        if (!q_ok(w)) return false;
      }
    }
    return true;
  }
  const int d = 2 * s.n + 1;
  double total = 1;
  for (int i = 0; i < d; ++i) total *= F.size();
  if (s.n > 2 || total > 2e6)
    throw Error(Errc::PreconditionFailed, "exhaustive oracle limited to n <= 2 and |M| <= 2e6");
  UVector u(s.n);
  while (true) {
    if (!q_ok(u)) return false;
    int p = 0;
    while (p < d) {
      u.c[std::size_t(p)].v = std::uint16_t(u.c[std::size_t(p)].v + 1);
      if (u.c[std::size_t(p)].v < F.size()) break;
      u.c[std::size_t(p)].v = 0;
      ++p;
    }
    if (p == d) break;
  }
  return true;
}

Elem column_companion(const FormSetup& s, const UMatrix& sigma, int j, int k, Elem x) {
  const FieldCtx& F = s.F();
  if (j == 0 || k == 0 || std::abs(j) > s.n || std::abs(k) > s.n || x.v == 0)
    throw Error(Errc::PreconditionFailed, "column_companion needs hyperbolic j,k and x != 0");
  for (int i : theta(s.n))
    if (sigma(i, j) != (i == k ? x : F.zero()))
      throw Error(Errc::PreconditionFailed, "column " + std::to_string(j) + " is not e_k x");
  Elem xhat = F.mul(F.mul(s.lambda_pow((eps(k) - 1) / 2), F.inv(F.bar(x))),
                    s.lambda_pow((1 - eps(j)) / 2));
  for (int c : theta(s.n))
    if (sigma(-k, c) != (c == -j ? xhat : F.zero()))
      throw Error(Errc::InternalInvariant, "row -k does not match companion claim");
  return xhat;
}

}  // namespace oddu
