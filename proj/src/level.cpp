#include "oddu/level.hpp"

#include "oddu/error.hpp"

namespace oddu {

std::string_view to_string(LevelKind k) {
  switch (k) {
    case LevelKind::Zero: return "Zero";
    case LevelKind::TLevel: return "TLevel";
    case LevelKind::Full: return "Full";
  }
  return "?";
}

bool OddFormIdeal::omega_contains(const FormSetup& s, HPair a, int sign) const {
  switch (kind_) {
    case LevelKind::Zero: return a.x.v == 0 && a.y.v == 0;
    case LevelKind::TLevel: return a.y.v == 0;
    case LevelKind::Full: return s.delta_signed(sign).contains(a);
  }
  return false;
}

namespace {

std::string entry(int i, int j) { return "sigma[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

std::string pair_text(const FieldCtx& F, HPair a) {
  return "(" + F.format(a.x) + ";" + F.format(a.y) + ")";
}

void require_member(const FormSetup& s, const UMatrix& sigma) {
  auto rep = is_member(s, sigma);
  if (!rep) throw Error(Errc::NotMember, rep.diagnostic);
}

}  // namespace

LevelClass level_of(const FormSetup& s, const UMatrix& sigma) {
  require_member(s, sigma);
  const FieldCtx& F = s.F();
  const auto hb = theta_hb(s.n);
  const bool j_nonzero = s.j_is_field();
  const bool mu_nonzero = s.mu().v != 0;

  for (int i : hb)
    for (int j : hb) {
      if (i == j) continue;
      if (sigma(i, j).v) return {LevelKind::Full, entry(i, j) + "=" + F.format(sigma(i, j))};
      Elem d = F.sub(sigma(i, i), sigma(j, j));
      if (d.v)
        return {LevelKind::Full, entry(i, i) + "-" + entry(j, j) + "=" + F.format(d)};
    }
  if (j_nonzero) {
    for (int i : hb)
      if (sigma(i, 0).v)
        return {LevelKind::Full, entry(i, 0) + "*J=" + F.format(sigma(i, 0))};
    if (mu_nonzero) {
      for (int j : hb)
        if (sigma(0, j).v)
          return {LevelKind::Full, "bar(J)*mu*" + entry(0, j) + "=" + F.format(sigma(0, j))};
      for (int j : hb) {
        Elem d = F.sub(sigma(0, 0), sigma(j, j));
        if (d.v)
          return {LevelKind::Full,
                  "bar(J)*mu*(" + entry(0, 0) + "-" + entry(j, j) + ")*J=" + F.format(d)};
      }
    }
  }

  std::vector<HPair> z;
  std::string first;
  auto push = [&](HPair a, const std::string& name) {
    if ((a.x.v || a.y.v) && first.empty()) first = name + "=" + pair_text(F, a);
    z.push_back(a);
  };
  for (int j : hb) push(form_Q(s, sigma.column(j)), "Q(sigma[*," + std::to_string(j) + "])");
  const HPair q0 = h_sub(s, 1, form_Q(s, sigma.column(0)), {F.one(), F.zero()});
  for (int i : hb)
    for (HPair yz : s.delta.elements()) {
      HPair a = h_add(s, 1, h_scale(s, 1, q0, yz.x), yz);
      a = h_sub(s, 1, a, h_scale(s, 1, yz, sigma(i, i)));
      push(a, "(Q(sigma[*,0])-(1,0))o" + F.format(yz.x) + "+" + pair_text(F, yz) + "-" +
                  pair_text(F, yz) + "o" + entry(i, i));
    }
  if (first.empty()) return {LevelKind::Zero, ""};
  auto closure = module_closure(s, 1, z, false);
  for (HPair a : closure)
    if (a.y.v) throw Error(Errc::InternalInvariant, "Z closure leaves K x 0");
  if (!s.admits_tlevel())
    throw Error(Errc::InternalInvariant, "nonzero Z closure in a setup without a T level");
  return {LevelKind::TLevel, first};
}

bool in_congruence(const FormSetup& s, const UMatrix& sigma, const OddFormIdeal& ideal) {
  require_member(s, sigma);
  if (ideal.kind() == LevelKind::TLevel && !s.admits_tlevel())
    throw Error(Errc::PreconditionFailed, "(0, K x 0) is not an odd form ideal here");
  const FieldCtx& F = s.F();
  const auto hb = theta_hb(s.n);
  for (int i : hb)
    for (int j : hb) {
      Elem d = F.sub(sigma(i, j), i == j ? F.one() : F.zero());
      if (!ideal.ideal_contains(d)) return false;
    }
  for (int j : hb)
    if (!ideal.omega_contains(s, form_Q(s, sigma.column(j)))) return false;
  const HPair q0 = h_sub(s, 1, form_Q(s, sigma.column(0)), {F.one(), F.zero()});
  for (Elem a : F.elements())
    if (s.j_delta[a.v] && !ideal.omega_contains(s, h_scale(s, 1, q0, a))) return false;
  return true;
}

bool is_ideal_elementary(const FormSetup& s, const Atom& atom, const OddFormIdeal& ideal) {
  switch (atom.kind) {
    case AtomKind::Short: return ideal.ideal_contains(atom.x);
    case AtomKind::Extra: return ideal.omega_contains(s, {atom.x, atom.y}, -eps(atom.i));
    default: return false;
  }
}

}  // namespace oddu
