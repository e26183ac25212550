#include "oddu/factor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "oddu/error.hpp"

namespace oddu {

UMatrix certificate_product(const FormSetup& s, const UMatrix& base,
                            const std::vector<ConjFactor>& factors) {
  const FieldCtx& F = s.F();
  const UMatrix base_inv = inverse(F, base);
  UMatrix out = UMatrix::identity(s.n);
  for (const ConjFactor& f : factors) {
    UMatrix g = eval_word(s, f.conj);
    out = mul(F, out, conj(F, g, f.exp > 0 ? base : base_inv));
  }
  return out;
}

bool verify_certificate(const FormSetup& s, const ConjugateWord& cw) {
  try {
    if (cw.base.n() != s.n || cw.target.n() != s.n) return false;
    if (!is_member(s, cw.base)) return false;
    for (const ConjFactor& f : cw.factors) {
      if (f.exp != 1 && f.exp != -1) return false;
      if (!is_member(s, eval_word(s, f.conj))) return false;
    }
    return certificate_product(s, cw.base, cw.factors) == cw.target;
  } catch (const Error&) {
    return false;
  }
}

namespace {

// zeta = ^rho sigma, tracked together.
struct Reducer {
  const FormSetup& s;
  UMatrix zeta;
  EWord rho;

  void apply(const EWord& w) {
    if (w.empty()) return;
    zeta = conj(s.F(), eval_word(s, w), zeta);
    rho = concat(w, rho);
  }
  void apply(const Atom& a) { apply(EWord{a}); }
  Elem operator()(int i, int j) const { return zeta(i, j); }
};

void invariant(bool ok, const char* what) {
  if (!ok) throw Error(Errc::InternalInvariant, what);
}

std::optional<HPair> first_with_x(const FormParameter& p, Elem x) {
  auto it = std::lower_bound(p.elements().begin(), p.elements().end(), HPair{x, Elem{0}});
  if (it == p.elements().end() || it->x != x) return std::nullopt;
  return *it;
}

// Conjugates so that column c becomes e_p x inside `block` (a symmetric index
// set containing 0, p and c). Only atoms with indices in the block are used.
void clear_column(Reducer& r, int c, int p, const std::vector<int>& block) {
  const FormSetup& s = r.s;
  const FieldCtx& F = s.F();
  auto in = [&](int i) { return std::find(block.begin(), block.end(), i) != block.end(); };
  if (c == 0 || p == 0 || p == c || !in(p) || !in(-p) || !in(0))
    throw Error(Errc::PreconditionFailed, "clear_column: bad pivot");
  if (r(p, c).v == 0) throw Error(Errc::PreconditionFailed, "clear_column: zero pivot");
  if (-c != p && in(-c) && r(-c, c).v != 0)
    throw Error(Errc::PreconditionFailed, "clear_column: entry (-c,c) must vanish");

  if (r(0, c).v) {
    Elem b = F.neg(F.div(r(0, c), r(p, c)));
    auto par = first_with_x(s.delta_signed(eps(p)), b);
    if (!par) throw Error(Errc::InternalInvariant, "clear_column: first component outside J(delta)");
    r.apply(Atom::extra(-p, *par));
    invariant(r(0, c).v == 0, "clear_column: row 0 not cleared");
  }
  for (int i : theta_hb(s.n)) {
    if (!in(i) || i == p || i == -p || i == -c || r(i, c).v == 0) continue;
    r.apply(Atom::shorty(i, p, F.neg(F.div(r(i, c), r(p, c)))));
    invariant(r(i, c).v == 0, "clear_column: row not cleared");
  }
  if (r(-p, c).v) {
    Elem d = F.neg(F.div(r(-p, c), r(p, c)));
    if (!s.delta_signed(eps(p)).contains({F.zero(), d}))
      throw Error(Errc::InternalInvariant, "clear_column: long root parameter outside delta");
    r.apply(Atom::extra(-p, {F.zero(), d}));
  }
  for (int i : block)
    invariant((i == p) == (r(i, c).v != 0), "clear_column: column not of shape e_p x");
}

// Moves a nonzero entry of column 1 at row t (t not in {0,1,-1}) to row 2,
// keeping e_1 and e_{-1} fixed.
void move_row_to_2(Reducer& r, int t) {
  const FormSetup& s = r.s;
  const FieldCtx& F = s.F();
  if (t == 2) return;
  if (t != -2) {
    r.apply(Atom::perm(2, t));
  } else if (s.n >= 3) {
    r.apply(Atom::perm(3, -2));
    r.apply(Atom::perm(2, 3));
  } else {
    // Rank 2: no permutation fixing +-1 sends -2 to 2; use an extra
    // transvection T_2(b,c) instead.
    bool done = false;
    for (HPair a : s.delta_signed(-1).elements()) {
      UMatrix g = transvection_extra(s, 2, a);
      if (apply(F, g, r.zeta.column(1))[2].v) {
        r.apply(Atom::extra(2, a));
        done = true;
        break;
      }
    }
    if (!done) throw Error(Errc::PreconditionFailed, "cannot move row -2 to 2 at rank 2");
  }
  invariant(r(2, 1).v != 0, "move_row_to_2 failed");
}

std::vector<ConjFactor> double_commutator(const EWord& B, const EWord& A, const EWord& rho) {
  // [B,[A,z]] = ^{BA}z * ^B z^{-1} * z * ^A z^{-1}
  return {{concat(concat(B, A), rho), 1}, {concat(B, rho), -1}, {rho, 1}, {concat(A, rho), -1}};
}

std::vector<ConjFactor> prefix(const EWord& pi, std::vector<ConjFactor> f) {
  for (auto& x : f) x.conj = concat(pi, x.conj);
  return f;
}

void require_rank3(const FormSetup& s) {
  if (s.n < 3) throw Error(Errc::RankTooSmall, "factorization needs n >= 3");
}

UMatrix require_member(const FormSetup& s, const UMatrix& sigma) {
  auto rep = is_member(s, sigma);
  if (!rep) throw Error(Errc::NotMember, rep.diagnostic);
  return sigma;
}

ConjugateWord finish(const FormSetup& s, const UMatrix& sigma, std::vector<ConjFactor> f,
                     const Atom& target) {
  ConjugateWord cw{sigma, std::move(f), atom_matrix(s, target), target};
  invariant(verify_certificate(s, cw), "emitted certificate does not verify");
  return cw;
}

bool hb_offdiag_nonzero(const UMatrix& m, int n) {
  for (int i : theta_hb(n))
    for (int j : theta_hb(n))
      if (i != j && m(i, j).v) return true;
  return false;
}

std::optional<EWord> try_map(const FormSetup& s, const Atom& from, const Atom& to) {
  try {
    return map_transvection(s, from, to);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

ReductionOutcome reduce_first_column(const FormSetup& s, const UMatrix& sigma) {
  require_member(s, sigma);
  Reducer r{s, sigma, {}};
  const auto all = theta(s.n);
  if (sigma(-1, 1).v) {
    clear_column(r, 1, -1, all);
    return {ReductionKind::ToMinus1, r.rho, r(-1, 1), {}};
  }
  for (int t : theta_hb(s.n)) {
    if (t == 1 || t == -1 || sigma(t, 1).v == 0) continue;
    move_row_to_2(r, t);
    clear_column(r, 1, 2, all);
    return {ReductionKind::To2, r.rho, r(2, 1), {}};
  }
  return {ReductionKind::Colinear10, {}, sigma(1, 1), sigma(0, 1)};
}

EWord clear_minus2(const FormSetup& s, const UMatrix& zeta) {
  if (s.n < 3) throw Error(Errc::PreconditionFailed, "clear_minus2 needs n >= 3");
  const FieldCtx& F = s.F();
  for (int i : theta(s.n))
    if ((i == 2) != (zeta(i, 1).v != 0))
      throw Error(Errc::PreconditionFailed, "clear_minus2: first column is not e_2 x");
  Reducer r{s, zeta, {}};
  auto done = [&] { return r(3, -2).v == 0 || r(-3, -2).v == 0; };
  if (done()) return {};
  if (r(-1, -2).v) {
    r.apply(Atom::shorty(-3, -1, F.neg(F.div(r(-3, -2), r(-1, -2)))));
  } else {
    for (int k : theta_hb(s.n)) {
      if (std::abs(k) < 4 || r(k, -2).v == 0 || done()) continue;
      r.apply(Atom::shorty(k, -3, F.neg(F.div(r(k, -2), r(-3, -2)))));
      invariant(r(k, -2).v == 0, "clear_minus2: entry not cleared");
    }
    if (!done()) {
      const UVector w = r.zeta.column(-2);
      bool ok = false;
      for (HPair a : s.delta_signed(1).elements()) {
        if (apply(F, transvection_extra(s, -3, a), w)[-3].v == 0) {
          r.apply(Atom::extra(-3, a));
          ok = true;
          break;
        }
      }
      if (!ok)
        for (HPair a : s.delta_signed(-1).elements()) {
          if (apply(F, transvection_extra(s, 3, a), w)[3].v == 0) {
            r.apply(Atom::extra(3, a));
            ok = true;
            break;
          }
        }
      if (!ok) throw Error(Errc::ParameterUnsolvable, "clear_minus2: no extra parameter clears row 3");
    }
  }
  invariant(done(), "clear_minus2: postcondition");
  for (int i : theta(s.n)) invariant((i == 2) == (r(i, 1).v != 0), "clear_minus2: column 1 moved");
  return r.rho;
}

EWord map_transvection(const FormSetup& s, const Atom& from, const Atom& to) {
  const FieldCtx& F = s.F();
  const auto hb = theta_hb(s.n);
  EWord path;
  Elem reached;
  if (from.kind == AtomKind::Short && to.kind == AtomKind::Short) {
    if (from.x.v == 0 || to.x.v == 0) throw Error(Errc::PreconditionFailed, "trivial transvection");
    using Key = std::tuple<int, int, std::uint16_t>;
    std::map<Key, std::pair<Key, std::optional<Atom>>> parent;
    std::deque<Key> q;
    Key start{from.i, from.j, from.x.v};
    parent[start] = {start, std::nullopt};
    q.push_back(start);
    std::optional<Key> goal;
    while (!q.empty()) {
      Key cur = q.front();
      q.pop_front();
      auto [k, l, v] = cur;
      if (k == to.i && l == to.j) {
        goal = cur;
        break;
      }
      auto visit = [&](Key nk, std::optional<Atom> a) {
        if (parent.count(nk)) return;
        parent[nk] = {cur, a};
        q.push_back(nk);
      };
      Elem fv = F.neg(F.mul(F.mul(s.lambda_pow((eps(l) - 1) / 2), F.bar(Elem{v})),
                            s.lambda_pow((1 - eps(k)) / 2)));
      visit(Key{-l, -k, fv.v}, std::nullopt);
      for (int m : hb) {
        if (m == k || m == -k || m == l || m == -l) continue;
        visit(Key{m, l, v}, Atom::perm(m, k));
        visit(Key{k, m, v}, Atom::perm(m, l));
      }
    }
    if (!goal) throw Error(Errc::InternalInvariant, "no permutation route between transvections");
    reached = Elem{std::get<2>(*goal)};
    for (Key cur = *goal; cur != start; cur = parent[cur].first)
      if (parent[cur].second) path.push_back(*parent[cur].second);
    if (reached != to.x) {
      int m = 0;
      for (int c : hb)
        if (c != to.i && c != -to.i && c != to.j && c != -to.j) {
          m = c;
          break;
        }
      if (m == 0) throw Error(Errc::RankTooSmall, "no free index for diagonal scaling");
      path.insert(path.begin(), Atom::diag(to.i, m, F.div(to.x, reached)));
    }
  } else if (from.kind == AtomKind::Extra && to.kind == AtomKind::Extra) {
    if (from.y.v || to.y.v || from.x.v == 0 || to.x.v == 0)
      throw Error(Errc::PreconditionFailed, "extra mapping needs parameters (x,0), x != 0");
    std::map<int, std::pair<int, std::optional<Atom>>> parent;
    std::deque<int> q{from.i};
    parent[from.i] = {from.i, std::nullopt};
    while (!q.empty()) {
      int k = q.front();
      q.pop_front();
      if (k == to.i) break;
      for (int m : hb) {
        if (m == k || m == -k || parent.count(m)) continue;
        parent[m] = {k, Atom::perm(-m, -k)};
        q.push_back(m);
      }
    }
    if (!parent.count(to.i)) throw Error(Errc::InternalInvariant, "no route between extra indices");
    for (int cur = to.i; cur != from.i; cur = parent[cur].first) path.push_back(*parent[cur].second);
    if (from.x != to.x) {
      int m = 0;
      for (int c : hb)
        if (c != to.i && c != -to.i) {
          m = c;
          break;
        }
      if (m == 0) throw Error(Errc::RankTooSmall, "no free index for diagonal scaling");
      path.insert(path.begin(), Atom::diag(-to.i, m, F.div(from.x, to.x)));
    }
  } else {
    throw Error(Errc::PreconditionFailed, "transvections of different kinds");
  }
  invariant(conj(F, eval_word(s, path), atom_matrix(s, from)) == atom_matrix(s, to),
            "transvection map does not conjugate correctly");
  return path;
}

ConjugateWord factor_short(const FormSetup& s, const UMatrix& sigma, int i, int j, Elem x) {
  require_rank3(s);
  const FieldCtx& F = s.F();
  if (x.v == 0) throw Error(Errc::ZeroScalar, "target T_ij(0) is trivial");
  const Atom target = Atom::shorty(i, j, x);
  const UMatrix tm = transvection_short(s, i, j, x);
  LevelClass lv = level_of(s, sigma);
  if (lv.kind != LevelKind::Full) throw Error(Errc::WrongLevel, "factor_short needs level Full");

  if (sigma == tm) return finish(s, sigma, {{{}, 1}}, target);
  if (inverse(F, sigma) == tm) return finish(s, sigma, {{{}, -1}}, target);
  if (auto a = recognize_transvection(s, sigma); a && a->kind == AtomKind::Short)
    if (auto pi = try_map(s, *a, target)) return finish(s, sigma, {{*pi, 1}}, target);

  Reducer r{s, sigma, {}};
  const auto hb = theta_hb(s.n);
  for (int iter = 0; !hb_offdiag_nonzero(r.zeta, s.n); ++iter) {
    invariant(iter < 4, "factor_short: pre-conjugation left no off-diagonal entry");
    std::optional<std::pair<int, int>> kl;
    for (int k : hb)
      for (int l : hb)
        if (!kl && k != l && k != -l && r(k, k) != r(l, l)) kl = {k, l};
    if (kl) {
      r.apply(Atom::shorty(kl->first, kl->second, F.one()));
      continue;
    }
    std::optional<int> jj;
    for (int c : hb)
      if (!jj && r(0, c).v) jj = c;
    if (jj) {
      int ii = 0;
      for (int c : hb)
        if (!ii && c != *jj && c != -*jj) ii = c;
      HPair a{r(0, *jj), F.zero()};
      if (!s.delta_signed(-eps(ii)).contains(a))
        throw Error(Errc::InternalInvariant, "(sigma_0j, 0) outside delta");
      r.apply(Atom::extra(ii, a));
      continue;
    }
    auto y = first_with_x(s.delta, F.one());
    if (!y) throw Error(Errc::InternalInvariant, "diagonal element of level Full with J(delta) = 0");
    r.apply(Atom::extra(-1, *y));
  }

  // Permute a nonzero off-diagonal entry into column 1.
  {
    int t = 0, c = 0;
    for (int a : hb)
      for (int b : hb)
        if (!c && a != b && r(a, b).v) {
          t = a;
          c = b;
        }
    if (c != 1) {
      if (c > 1) {
        r.apply(Atom::perm(1, c));
      } else if (c < -1) {
        r.apply(Atom::perm(1, c));
      } else {
        r.apply(Atom::perm(2, -1));
        r.apply(Atom::perm(1, 2));
      }
    }
    (void)t;
    bool found = false;
    for (int a : hb)
      if (a != 1 && r(a, 1).v) found = true;
    invariant(found, "factor_short: permutation did not produce an entry in column 1");
  }
  const auto all = theta(s.n);
  std::vector<ConjFactor> f;
  if (r(-1, 1).v) {
    clear_column(r, 1, -1, all);
    // column 1 is e_-1 x; need zeta(-a,2) = 0 for a = +-3
    int a = 0;
    if (r(-3, 2).v == 0) a = 3;
    else if (r(3, 2).v == 0) a = -3;
    else {
      std::vector<int> block;
      for (int b : all)
        if (b != 1 && b != -1) block.push_back(b);
      clear_column(r, 2, r(-2, 2).v ? -2 : 3, block);
      invariant(r(-3, 2).v == 0, "factor_short: entry (-3,2) not cleared");
      a = 3;
    }
    f = double_commutator({Atom::shorty(a, 1, F.one())}, {Atom::shorty(1, -2, F.one())}, r.rho);
  } else {
    int t = 0;
    for (int b : hb)
      if (!t && b != 1 && b != -1 && r(b, 1).v) t = b;
    invariant(t != 0, "factor_short: no row for the To2 reduction");
    move_row_to_2(r, t);
    clear_column(r, 1, 2, all);
    // column 1 is e_2 x
    r.apply(clear_minus2(s, r.zeta));
    int ii = r(3, -2).v == 0 ? 3 : -3;
    f = double_commutator({Atom::shorty(2, ii, F.neg(F.one()))}, {Atom::shorty(1, 2, F.one())},
                          r.rho);
  }
  UMatrix prod = certificate_product(s, sigma, f);
  auto got = recognize_transvection(s, prod);
  if (!got || got->kind != AtomKind::Short)
    throw Error(Errc::InternalInvariant, "double commutator is not a short transvection");
  return finish(s, sigma, prefix(map_transvection(s, *got, target), std::move(f)), target);
}

ConjugateWord factor_extra(const FormSetup& s, const UMatrix& sigma, int i, HPair a) {
  require_rank3(s);
  const FieldCtx& F = s.F();
  if (i == 0 || std::abs(i) > s.n) throw Error(Errc::BadIndices, "extra index out of range");
  if (a.x.v == 0 && a.y.v == 0)
    throw Error(Errc::PreconditionFailed, "target T_i(0,0) is trivial");
  const Atom target = Atom::extra(i, a);
  const UMatrix tm = transvection_extra(s, i, a);
  if (level_of(s, sigma).kind != LevelKind::Full)
    throw Error(Errc::WrongLevel, "factor_extra needs level Full");
  if (sigma == tm) return finish(s, sigma, {{{}, 1}}, target);
  if (inverse(F, sigma) == tm) return finish(s, sigma, {{{}, -1}}, target);

  int j = 0;
  for (int c : theta_hb(s.n))
    if (!j && c != i && c != -i && eps(c) == eps(i)) j = c;
  for (int c : theta_hb(s.n))
    if (!j && c != i && c != -i) j = c;

  for (Elem x : F.units()) {
    Elem c = F.mul(F.mul(s.lambda_pow((eps(j) - 1) / 2), F.bar(x)), s.lambda_pow((1 - eps(i)) / 2));
    for (HPair yz : s.delta_signed(-eps(j)).elements()) {
      if (F.mul(yz.x, c) != a.x || F.mul(F.mul(x, yz.y), c) != a.y) continue;
      // T_i(a) = T_{j,-i}(-zc) * T_ij(x) * ^{T_j(y,z)} T_ij(-x)
      std::vector<ConjFactor> f;
      Elem zc = F.mul(yz.y, c);
      if (zc.v) {
        auto c1 = factor_short(s, sigma, j, -i, F.neg(zc));
        f.insert(f.end(), c1.factors.begin(), c1.factors.end());
      }
      auto c2 = factor_short(s, sigma, i, j, x);
      f.insert(f.end(), c2.factors.begin(), c2.factors.end());
      auto c3 = factor_short(s, sigma, i, j, F.neg(x));
      auto p3 = prefix({Atom::extra(j, yz)}, c3.factors);
      f.insert(f.end(), p3.begin(), p3.end());
      return finish(s, sigma, std::move(f), target);
    }
  }
  throw Error(Errc::ParameterUnsolvable, "no SE2 parameters reach the target");
}

ConjugateWord factor_tlevel(const FormSetup& s, const UMatrix& sigma, int i, Elem x,
                            TLevelOptions opts) {
  require_rank3(s);
  const FieldCtx& F = s.F();
  if (!s.admits_tlevel()) throw Error(Errc::WrongLevel, "setup has no level (0, K x 0)");
  if (i == 0 || std::abs(i) > s.n) throw Error(Errc::BadIndices, "extra index out of range");
  if (x.v == 0) throw Error(Errc::ZeroScalar, "target T_i(0,0) is trivial");
  if (level_of(s, sigma).kind != LevelKind::TLevel)
    throw Error(Errc::WrongLevel, "factor_tlevel needs level (0, K x 0)");
  const Atom target = Atom::extra(i, {x, F.zero()});
  const UMatrix tm = atom_matrix(s, target);
  const auto hb = theta_hb(s.n);

  if (opts.shortcut) {
    if (sigma == tm) return finish(s, sigma, {{{}, 1}}, target);
    if (inverse(F, sigma) == tm) return finish(s, sigma, {{{}, -1}}, target);
    if (auto a = recognize_transvection(s, sigma); a && a->kind == AtomKind::Extra && a->y.v == 0)
      if (auto pi = try_map(s, *a, target)) return finish(s, sigma, {{*pi, 1}}, target);
  }

  if (F.size() == 2 && s.delta.contains({F.zero(), F.one()})) {
    for (int ip : hb) {
      if (sigma(0, ip).v == 0) continue;
      std::vector<int> others;
      for (int c : hb)
        if (c != ip && c != -ip) others.push_back(c);
      const Atom goal = Atom::extra(-ip, {F.one(), F.zero()});
      const UMatrix gm = atom_matrix(s, goal);
      for (unsigned mask = 0; mask < (1u << others.size()); ++mask)
        for (int d = 0; d < 2; ++d) {
          HPair ld{F.zero(), Elem{std::uint16_t(d)}};
          if (!s.delta_signed(-eps(ip)).contains(ld)) continue;
          EWord tau;
          for (std::size_t b = 0; b < others.size(); ++b)
            if (mask >> b & 1u) tau.push_back(Atom::shorty(ip, others[b], F.one()));
          if (d) tau.push_back(Atom::extra(ip, ld));
          EWord tinv = inverse_word(s, tau);
          if (conj(F, eval_word(s, tinv), sigma) != gm) continue;
          EWord pi = map_transvection(s, goal, target);
          return finish(s, sigma, {{concat(pi, tinv), 1}}, target);
        }
    }
  }

  std::vector<ConjFactor> f;
  int i0 = 0;
  for (int c : hb)
    if (!i0 && sigma(0, c).v) i0 = c;
  if (i0) {
    Reducer r{s, sigma, {}};
    int j = 0;
    for (int c : hb)
      if (!j && c != i0 && c != -i0 && sigma(0, c).v == 0) j = c;
    if (!j) {
      for (int c : hb)
        if (!j && c != i0 && c != -i0) j = c;
      bool ok = false;
      for (Elem a : F.units()) {
        UMatrix z = conj(F, transvection_short(s, i0, j, a), sigma);
        if (z(0, j).v == 0 && z(0, i0).v) {
          r.apply(Atom::shorty(i0, j, a));
          ok = true;
          break;
        }
      }
      invariant(ok, "factor_tlevel: cannot clear sigma_0j");
    }
    EWord g{Atom::shorty(i0, -j, F.one())};
    f = {{r.rho, 1}, {concat(g, r.rho), -1}};
  } else {
    invariant(sigma(0, 0) != F.one(), "factor_tlevel: central element with trivial middle row");
    f = {{{}, 1}, {{Atom::extra(1, {F.one(), F.zero()})}, -1}};
  }
  UMatrix prod = certificate_product(s, sigma, f);
  auto got = recognize_transvection(s, prod);
  if (!got || got->kind != AtomKind::Extra || got->y.v)
    throw Error(Errc::InternalInvariant, "commutator is not a transvection T_k(y,0)");
  return finish(s, sigma, prefix(map_transvection(s, *got, target), std::move(f)), target);
}

ConjugateWord factorize(const FormSetup& s, const UMatrix& sigma, const Atom& target) {
  switch (target.kind) {
    case AtomKind::Short:
      return factor_short(s, sigma, target.i, target.j, target.x);
    case AtomKind::Extra: {
      LevelClass lv = level_of(s, sigma);
      if (lv.kind == LevelKind::Full) return factor_extra(s, sigma, target.i, {target.x, target.y});
      if (lv.kind == LevelKind::TLevel) {
        if (target.y.v) throw Error(Errc::WrongLevel, "level (0, K x 0) only reaches T_i(x,0)");
        return factor_tlevel(s, sigma, target.i, target.x);
      }
      throw Error(Errc::WrongLevel, "sigma has level zero");
    }
    default:
      throw Error(Errc::PreconditionFailed, "target must be a short or extra transvection");
  }
}

}  // namespace oddu
