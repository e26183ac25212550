#include "oddu/elementary.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>

#include "oddu/error.hpp"

namespace oddu {

namespace {

void check_pair(const FormSetup& s, int i, int j) {
  auto ok = [&](int a) { return a != 0 && std::abs(a) <= s.n; };
  if (!ok(i) || !ok(j) || i == j || i == -j)
    throw Error(Errc::BadIndices,
                "indices (" + std::to_string(i) + "," + std::to_string(j) + ") not admissible");
}

void check_index(const FormSetup& s, int i) {
  if (i == 0 || std::abs(i) > s.n)
    throw Error(Errc::BadIndices, "index " + std::to_string(i) + " not hyperbolic");
}

}  // namespace

UMatrix transvection_short(const FormSetup& s, int i, int j, Elem x) {
  check_pair(s, i, j);
  const FieldCtx& F = s.F();
  UMatrix m = UMatrix::identity(s.n);
  m(i, j) = x;
  Elem c = F.mul(F.mul(s.lambda_pow((eps(j) - 1) / 2), F.bar(x)), s.lambda_pow((1 - eps(i)) / 2));
  m(-j, -i) = F.neg(c);
  return m;
}

UMatrix transvection_extra(const FormSetup& s, int i, HPair a) {
  check_index(s, i);
  const FieldCtx& F = s.F();
  if (!s.delta_signed(-eps(i)).contains(a))
    throw Error(Errc::ParameterNotInDelta, "(" + F.format(a.x) + ";" + F.format(a.y) +
                                               ") not in delta^" + std::to_string(-eps(i)));
  UMatrix m = UMatrix::identity(s.n);
  m(0, -i) = a.x;
  m(i, 0) = F.neg(F.mul(F.mul(s.lambda_pow(-(1 + eps(i)) / 2), F.bar(a.x)), s.mu()));
  m(i, -i) = a.y;
  return m;
}

Decomposed build_diag(const FormSetup& s, int i, int j, Elem x) {
  check_pair(s, i, j);
  const FieldCtx& F = s.F();
  if (x.v == 0) throw Error(Errc::ZeroScalar, "D_ij(0)");
  const Elem one = F.one();
  Elem xi = F.inv(x);
  UMatrix m = UMatrix::identity(s.n);
  m(i, i) = x;
  m(j, j) = xi;
  m(-i, -i) = F.mul(F.mul(s.lambda_pow((eps(i) - 1) / 2), F.inv(F.bar(x))),
                    s.lambda_pow(-(eps(i) - 1) / 2));
  m(-j, -j) = F.mul(F.mul(s.lambda_pow((eps(j) - 1) / 2), F.bar(x)), s.lambda_pow(-(eps(j) - 1) / 2));
  EWord w{Atom::shorty(i, j, F.sub(x, one)), Atom::shorty(j, i, one),
          Atom::shorty(i, j, F.sub(xi, one)), Atom::shorty(j, i, F.neg(x))};
  return {std::move(m), std::move(w)};
}

Decomposed build_perm(const FormSetup& s, int i, int j) {
  check_pair(s, i, j);
  const FieldCtx& F = s.F();
  const Elem one = F.one();
  UMatrix m = UMatrix::identity(s.n);
  for (int k : {i, j, -i, -j}) m(k, k) = F.zero();
  m(i, j) = one;
  m(j, i) = F.neg(one);
  m(-i, -j) = s.lambda_pow((eps(i) - eps(j)) / 2);
  m(-j, -i) = F.neg(s.lambda_pow((eps(j) - eps(i)) / 2));
  EWord w{Atom::shorty(i, j, one), Atom::shorty(j, i, F.neg(one)), Atom::shorty(i, j, one)};
  return {std::move(m), std::move(w)};
}

void validate_atom(const FormSetup& s, const Atom& a) { (void)atom_matrix(s, a); }

UMatrix atom_matrix(const FormSetup& s, const Atom& a) {
  switch (a.kind) {
    case AtomKind::Short: return transvection_short(s, a.i, a.j, a.x);
    case AtomKind::Extra: return transvection_extra(s, a.i, {a.x, a.y});
    case AtomKind::Diag: return build_diag(s, a.i, a.j, a.x).matrix;
    case AtomKind::Perm: return build_perm(s, a.i, a.j).matrix;
  }
  throw Error(Errc::InternalInvariant, "unknown atom kind");
}

UMatrix eval_word(const FormSetup& s, const EWord& w) {
  UMatrix m = UMatrix::identity(s.n);
  for (const Atom& a : w) m = mul(s.F(), m, atom_matrix(s, a));
  return m;
}

Atom inverse_atom(const FormSetup& s, const Atom& a) {
  const FieldCtx& F = s.F();
  switch (a.kind) {
    case AtomKind::Short: return Atom::shorty(a.i, a.j, F.neg(a.x));
    case AtomKind::Extra: return Atom::extra(a.i, h_neg(s, -eps(a.i), {a.x, a.y}));
    case AtomKind::Diag: return Atom::diag(a.i, a.j, F.inv(a.x));
    case AtomKind::Perm: return Atom::perm(a.j, a.i);
  }
  throw Error(Errc::InternalInvariant, "unknown atom kind");
}

EWord inverse_word(const FormSetup& s, const EWord& w) {
  EWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_atom(s, *it));
  return out;
}

EWord concat(EWord a, const EWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

namespace {

std::vector<std::pair<int, int>> short_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i : theta_hb(n))
    for (int j : theta_hb(n))
      if (i != j && i != -j) out.push_back({i, j});
  return out;
}

std::size_t draw(std::mt19937_64& rng, std::size_t m) { return std::size_t(rng() % m); }

}  // namespace

Atom random_transvection(const FormSetup& s, std::mt19937_64& rng) {
  const FieldCtx& F = s.F();
  auto pairs = short_pairs(s.n);
  const std::size_t total = pairs.size() + std::size_t(2 * s.n);
  std::size_t r = draw(rng, total);
  if (r < pairs.size()) {
    Elem x{std::uint16_t(draw(rng, std::size_t(F.size())))};
    return Atom::shorty(pairs[r].first, pairs[r].second, x);
  }
  int i = theta_hb(s.n)[r - pairs.size()];
  const auto& d = s.delta_signed(-eps(i)).elements();
  return Atom::extra(i, d[draw(rng, d.size())]);
}

EWord random_word(const FormSetup& s, std::mt19937_64& rng, int length) {
  EWord w;
  for (int k = 0; k < length; ++k) w.push_back(random_transvection(s, rng));
  return w;
}

std::vector<Atom> all_transvections(const FormSetup& s) {
  const FieldCtx& F = s.F();
  std::vector<Atom> out;
  for (auto [i, j] : short_pairs(s.n)) {
    // T_ij and T_{-j,-i} coincide up to reparametrization; keep one family.
    if (std::pair(pos(s.n, i), pos(s.n, j)) > std::pair(pos(s.n, -j), pos(s.n, -i))) continue;
    for (Elem x : F.units()) out.push_back(Atom::shorty(i, j, x));
  }
  for (int i : theta_hb(s.n))
    for (HPair a : s.delta_signed(-eps(i)).elements())
      if (a.x.v || a.y.v) out.push_back(Atom::extra(i, a));
  return out;
}

std::optional<Atom> recognize_transvection(const FormSetup& s, const UMatrix& m) {
  if (m.n() != s.n || m.is_identity()) return std::nullopt;
  for (int i : theta_hb(s.n)) {
    if (m(0, -i).v == 0 && m(i, -i).v == 0) continue;
    HPair a{m(0, -i), m(i, -i)};
    if (s.delta_signed(-eps(i)).contains(a) && transvection_extra(s, i, a) == m)
      return Atom::extra(i, a);
  }
  for (int i : theta_hb(s.n))
    for (int j : theta_hb(s.n)) {
      if (i == j || i == -j || m(i, j).v == 0) continue;
      if (transvection_short(s, i, j, m(i, j)) == m) return Atom::shorty(i, j, m(i, j));
    }
  return std::nullopt;
}

std::string format_atom(const FieldCtx& F, const Atom& a) {
  auto idx = [](int i) { return std::to_string(i); };
  switch (a.kind) {
    case AtomKind::Short: return "S(" + idx(a.i) + "," + idx(a.j) + "," + F.format(a.x) + ")";
    case AtomKind::Extra: return "X(" + idx(a.i) + "," + F.format(a.x) + "," + F.format(a.y) + ")";
    case AtomKind::Diag: return "D(" + idx(a.i) + "," + idx(a.j) + "," + F.format(a.x) + ")";
    case AtomKind::Perm: return "P(" + idx(a.i) + "," + idx(a.j) + ")";
  }
  return "?";
}

std::string format_word(const FieldCtx& F, const EWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ";";
    out += format_atom(F, w[k]);
  }
  return out;
}

Atom parse_atom(const FieldCtx& F, std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 4 || t[1] != '(' || t.back() != ')')
    throw Error(Errc::Parse, "malformed atom '" + std::string(text) + "'");
  const char tag = t[0];
  auto nums = parse_digit_list(std::string_view(t).substr(2, t.size() - 3));
  const int k = F.degree();
  auto elem = [&](std::size_t from, std::size_t count) {
    if (count == 0 || int(count) > k)
      throw Error(Errc::Parse, "element literal needs 1.." + std::to_string(k) + " digits");
    return F.from_digits(std::span<const long long>(nums.data() + from, count));
  };
  auto index = [&](std::size_t p) {
    long long v = nums[p];
    if (v < -64 || v > 64) throw Error(Errc::Parse, "index out of range");
    return int(v);
  };
  switch (tag) {
    case 'S':
    case 'D': {
      if (nums.size() < 3) throw Error(Errc::Parse, "atom needs i,j,x");
      Elem x = elem(2, nums.size() - 2);
      return tag == 'S' ? Atom::shorty(index(0), index(1), x) : Atom::diag(index(0), index(1), x);
    }
    case 'X': {
      if (nums.size() != std::size_t(1 + 2 * k))
        throw Error(Errc::Parse, "X atom needs i and 2k digits");
      return Atom::extra(index(0), {elem(1, std::size_t(k)), elem(1 + std::size_t(k), std::size_t(k))});
    }
    case 'P':
      if (nums.size() != 2) throw Error(Errc::Parse, "P atom needs i,j");
      return Atom::perm(index(0), index(1));
    default:
      throw Error(Errc::Parse, "unknown atom tag '" + std::string(1, tag) + "'");
  }
}

EWord parse_word(const FieldCtx& F, std::string_view text) {
  EWord w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? end : end - start);
    bool blank = true;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) w.push_back(parse_atom(F, tok));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return w;
}

bool RelationReport::all_ok() const {
  for (const auto& r : results)
    if (r.failed) return false;
  return true;
}

namespace {

struct RelCtx {
  const FormSetup& s;
  const FieldCtx& F;
  std::mt19937_64& rng;

  Elem any() { return Elem{std::uint16_t(draw(rng, std::size_t(F.size())))}; }
  Elem unit() { return Elem{std::uint16_t(1 + draw(rng, std::size_t(F.size() - 1)))}; }
  HPair param(int sign) {
    const auto& d = s.delta_signed(sign).elements();
    return d[draw(rng, d.size())];
  }
  Elem lp(int e) { return s.lambda_pow(e); }
  UMatrix T(int i, int j, Elem x) { return transvection_short(s, i, j, x); }
  UMatrix X(int i, HPair a) { return transvection_extra(s, i, a); }
  UMatrix D(int i, int j, Elem x) { return build_diag(s, i, j, x).matrix; }
  UMatrix P(int i, int j) { return build_perm(s, i, j).matrix; }
  UMatrix cm(const UMatrix& a, const UMatrix& b) { return comm(F, a, b); }
  UMatrix cj(const UMatrix& a, const UMatrix& b) { return conj(F, a, b); }
  UMatrix e() { return UMatrix::identity(s.n); }
  std::string el(Elem x) { return F.format(x); }
  std::string hp(HPair a) { return "(" + F.format(a.x) + ";" + F.format(a.y) + ")"; }
};

// Index tuples of given arity over Theta_hb satisfying a predicate.
std::vector<std::vector<int>> tuples(int n, int arity,
                                     const std::function<bool(const std::vector<int>&)>& pred) {
  std::vector<std::vector<int>> out;
  auto hb = theta_hb(n);
  std::vector<int> cur(static_cast<std::size_t>(arity));
  std::function<void(int)> rec = [&](int d) {
    if (d == arity) {
      if (pred(cur)) out.push_back(cur);
      return;
    }
    for (int v : hb) {
      cur[std::size_t(d)] = v;
      rec(d + 1);
    }
  };
  rec(0);
  return out;
}

bool ne_pm(int a, int b) { return a != b && a != -b; }

}  // namespace

RelationReport check_relations(const FormSetup& s, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::PreconditionFailed, "samples must be >= 1");
  RelationReport rep;
  rep.seed = seed;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  RelCtx c{s, s.F(), rng};
  const FieldCtx& F = s.F();

  using Tuple = std::vector<int>;
  using Body = std::function<std::pair<bool, std::string>(const Tuple&)>;
  auto run = [&](const std::string& name, int arity, std::function<bool(const Tuple&)> pred,
                 Body body) {
    RelationResult r;
    r.name = name;
    auto ts = tuples(s.n, arity, pred);
    if (ts.empty()) {
      r.skipped = true;
      rep.results.push_back(r);
      return;
    }
    for (int k = 0; k < samples; ++k) {
      const Tuple& t = ts[draw(rng, ts.size())];
      std::pair<bool, std::string> res;
      try {
        res = body(t);
      } catch (const Error& e) {
        res = {false, std::string("error ") + e.what()};
      }
      if (res.first) {
        ++r.passed;
      } else {
        if (r.failed == 0) r.counterexample = res.second;
        ++r.failed;
      }
    }
    rep.results.push_back(r);
  };
  auto ij = [](int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };

  run("S1", 2, [](const Tuple& t) { return ne_pm(t[0], t[1]); }, [&](const Tuple& t) {
    int i = t[0], j = t[1];
    Elem x = c.any();
    Elem y = F.neg(F.mul(F.mul(c.lp((eps(j) - 1) / 2), F.bar(x)), c.lp((1 - eps(i)) / 2)));
    return std::pair{c.T(i, j, x) == c.T(-j, -i, y), "T" + ij(i, j) + "(" + c.el(x) + ")"};
  });
  run("S2", 2, [](const Tuple& t) { return ne_pm(t[0], t[1]); }, [&](const Tuple& t) {
    int i = t[0], j = t[1];
    Elem x = c.any(), y = c.any();
    return std::pair{mul(F, c.T(i, j, x), c.T(i, j, y)) == c.T(i, j, F.add(x, y)),
                     "T" + ij(i, j) + " x=" + c.el(x) + " y=" + c.el(y)};
  });
  run("S3", 4,
      [](const Tuple& t) {
        return ne_pm(t[0], t[1]) && ne_pm(t[2], t[3]) && t[2] != t[1] && t[2] != -t[0] &&
               t[3] != t[0] && t[3] != -t[1];
      },
      [&](const Tuple& t) {
        Elem x = c.any(), y = c.any();
        return std::pair{c.cm(c.T(t[0], t[1], x), c.T(t[2], t[3], y)).is_identity(),
                         "T" + ij(t[0], t[1]) + "(" + c.el(x) + "),T" + ij(t[2], t[3]) + "(" +
                             c.el(y) + ")"};
      });
  run("S4", 3,
      [](const Tuple& t) { return ne_pm(t[0], t[1]) && ne_pm(t[1], t[2]) && ne_pm(t[0], t[2]); },
      [&](const Tuple& t) {
        int i = t[0], j = t[1], k = t[2];
        Elem x = c.any(), y = c.any();
        return std::pair{c.cm(c.T(i, j, x), c.T(j, k, y)) == c.T(i, k, F.mul(x, y)),
                         "i,j,k=" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + " x=" + c.el(x) + " y=" + c.el(y)};
      });
  run("S5", 2, [](const Tuple& t) { return ne_pm(t[0], t[1]); }, [&](const Tuple& t) {
    int i = t[0], j = t[1];
    Elem x = c.any(), y = c.any();
    Elem z = F.sub(F.mul(x, y), F.mul(F.mul(c.lp((-1 - eps(i)) / 2), F.mul(F.bar(y), F.bar(x))),
                                      c.lp((1 - eps(i)) / 2)));
    return std::pair{c.cm(c.T(i, j, x), c.T(j, -i, y)) == c.X(i, {F.zero(), z}),
                     "T" + ij(i, j) + "(" + c.el(x) + ") y=" + c.el(y)};
  });
  run("E1", 1, [](const Tuple&) { return true; }, [&](const Tuple& t) {
    int i = t[0];
    HPair a = c.param(-eps(i)), b = c.param(-eps(i));
    return std::pair{mul(F, c.X(i, a), c.X(i, b)) == c.X(i, h_add(s, -eps(i), a, b)),
                     "i=" + std::to_string(i) + " " + c.hp(a) + " " + c.hp(b)};
  });
  run("E2", 2, [](const Tuple& t) { return ne_pm(t[0], t[1]); }, [&](const Tuple& t) {
    int i = t[0], j = t[1];
    HPair a = c.param(-eps(i)), b = c.param(-eps(j));
    Elem z = F.neg(F.mul(F.mul(c.lp(-(1 + eps(i)) / 2), F.bar(a.x)), F.mul(s.mu(), b.x)));
    return std::pair{c.cm(c.X(i, a), c.X(j, b)) == c.T(i, -j, z),
                     "i,j=" + ij(i, j) + " " + c.hp(a) + " " + c.hp(b)};
  });
  run("E3", 1, [](const Tuple&) { return true; }, [&](const Tuple& t) {
    int i = t[0];
    HPair a = c.param(-eps(i)), b = c.param(-eps(i));
    Elem d = F.sub(F.mul(F.mul(F.bar(a.x), s.mu()), b.x), F.mul(F.mul(F.bar(b.x), s.mu()), a.x));
    Elem z = F.neg(F.mul(c.lp(-(1 + eps(i)) / 2), d));
    return std::pair{c.cm(c.X(i, a), c.X(i, b)) == c.X(i, {F.zero(), z}),
                     "i=" + std::to_string(i) + " " + c.hp(a) + " " + c.hp(b)};
  });
  run("SE1", 3,
      [](const Tuple& t) { return ne_pm(t[0], t[1]) && t[2] != t[1] && t[2] != -t[0]; },
      [&](const Tuple& t) {
        int i = t[0], j = t[1], k = t[2];
        Elem x = c.any();
        HPair a = c.param(-eps(k));
        return std::pair{c.cm(c.T(i, j, x), c.X(k, a)).is_identity(),
                         "T" + ij(i, j) + "(" + c.el(x) + ") k=" + std::to_string(k) + " " +
                             c.hp(a)};
      });
  run("SE2", 2, [](const Tuple& t) { return ne_pm(t[0], t[1]); }, [&](const Tuple& t) {
    int i = t[0], j = t[1];
    Elem x = c.any();
    HPair a = c.param(-eps(j));
    Elem cc = F.mul(F.mul(c.lp((eps(j) - 1) / 2), F.bar(x)), c.lp((1 - eps(i)) / 2));
    UMatrix rhs = mul(F, c.T(j, -i, F.mul(a.y, cc)),
                      c.X(i, {F.mul(a.x, cc), F.mul(F.mul(x, a.y), cc)}));
    return std::pair{c.cm(c.T(i, j, x), c.X(j, a)) == rhs,
                     "T" + ij(i, j) + "(" + c.el(x) + ") " + c.hp(a)};
  });
  auto third = [](const Tuple& t) {
    return ne_pm(t[0], t[1]) && ne_pm(t[2], t[0]) && ne_pm(t[2], t[1]);
  };
  run("D(i)", 3, third, [&](const Tuple& t) {
    int i = t[0], j = t[1], k = t[2];
    Elem a = c.unit(), x = c.any();
    return std::pair{c.cj(c.D(i, k, a), c.T(i, j, x)) == c.T(i, j, F.mul(a, x)),
                     "i,j,k=" + ij(i, j) + "," + std::to_string(k) + " a=" + c.el(a)};
  });
  run("D(ii)", 3, third, [&](const Tuple& t) {
    int i = t[0], j = t[1], k = t[2];
    Elem a = c.unit(), x = c.any();
    return std::pair{c.cj(c.D(k, j, a), c.T(i, j, x)) == c.T(i, j, F.mul(x, a)),
                     "i,j,k=" + ij(i, j) + "," + std::to_string(k) + " a=" + c.el(a)};
  });
  run("D(iii)", 2, [](const Tuple& t) { return ne_pm(t[0], t[1]); }, [&](const Tuple& t) {
    int i = t[0], k = t[1];
    Elem a = c.unit();
    HPair p = c.param(-eps(i));
    Elem z = F.mul(F.mul(F.mul(c.lp(-(eps(i) + 1) / 2), F.bar(a)), c.lp((eps(i) + 1) / 2)),
                   F.mul(p.y, a));
    return std::pair{c.cj(c.D(-i, k, F.inv(a)), c.X(i, p)) == c.X(i, {F.mul(p.x, a), z}),
                     "i,k=" + ij(i, k) + " a=" + c.el(a) + " " + c.hp(p)};
  });
  run("P(i)", 3, third, [&](const Tuple& t) {
    int i = t[0], j = t[1], k = t[2];
    Elem x = c.any();
    return std::pair{c.cj(c.P(k, i), c.T(i, j, x)) == c.T(k, j, x),
                     "i,j,k=" + ij(i, j) + "," + std::to_string(k) + " x=" + c.el(x)};
  });
  run("P(ii)", 3, third, [&](const Tuple& t) {
    int i = t[0], j = t[1], k = t[2];
    Elem x = c.any();
    return std::pair{c.cj(c.P(k, j), c.T(i, j, x)) == c.T(i, k, x),
                     "i,j,k=" + ij(i, j) + "," + std::to_string(k) + " x=" + c.el(x)};
  });
  run("P(iii)", 2, [](const Tuple& t) { return ne_pm(t[0], t[1]); }, [&](const Tuple& t) {
    int i = t[0], k = t[1];
    HPair p = c.param(-eps(i));
    Elem z = F.mul(c.lp((eps(i) - eps(k)) / 2), p.y);
    return std::pair{c.cj(c.P(-k, -i), c.X(i, p)) == c.X(k, {p.x, z}),
                     "i,k=" + ij(i, k) + " " + c.hp(p)};
  });
  return rep;
}

}  // namespace oddu
