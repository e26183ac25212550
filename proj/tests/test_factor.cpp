#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "oddu/error.hpp"
#include "oddu/factor.hpp"
#include "oddu/presets.hpp"

using namespace oddu;

namespace {

const std::vector<std::string> kSetups = {"sp2", "pr2", "pr8", "gf5", "gf9", "k0", "pr4", "gf3"};

HPair hp(int x, int y) { return {Elem{std::uint16_t(x)}, Elem{std::uint16_t(y)}}; }

UMatrix full_sigma(const FormSetup& s, std::mt19937_64& rng) {
  while (true) {
    UMatrix g = eval_word(s, random_word(s, rng, 1 + int(rng() % 10)));
    if (level_of(s, g).kind == LevelKind::Full) return g;
  }
}

UMatrix short_target(const FormSetup& s, int i, int j, Elem x) {
  return transvection_short(s, i, j, x);
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InternalInvariant;
}

/// Product of the factors computed without the library's certificate helper.
UMatrix expand(const FormSetup& s, const UMatrix& base, const std::vector<ConjFactor>& f) {
  const auto& F = s.F();
  UMatrix acc = UMatrix::identity(s.n);
  UMatrix inv = inverse(F, base);
  for (const auto& c : f) {
    UMatrix t = eval_word(s, c.conj);
    acc = mul(F, acc, mul(F, mul(F, t, c.exp > 0 ? base : inv), inverse(F, t)));
  }
  return acc;
}

}  // namespace

TEST(Factor, ShortExampleSymplectic) {
  auto sp = preset("sp2", 3);
  UMatrix sigma = transvection_extra(sp, 1, hp(0, 1));
  auto cw = factor_short(sp, sigma, 1, 2, Elem{1});
  EXPECT_LE(cw.length(), 4u);
  EXPECT_TRUE(verify_certificate(sp, cw));
  EXPECT_EQ(expand(sp, sigma, cw.factors), short_target(sp, 1, 2, Elem{1}));
}

TEST(Factor, DoubleCommutatorIdentity) {
  auto sp = preset("sp2", 3);
  const auto& F = sp.F();
  // A Weyl-type element with first column e_{-1}.
  UMatrix zeta = eval_word(sp, parse_word(F, "X(-1,0,1);X(1,0,1);X(-1,0,1)"));
  ASSERT_EQ(zeta.column(1), UVector::basis(3, -1));
  ASSERT_EQ(zeta(-3, 2).v, 0);
  UMatrix A = transvection_short(sp, 1, -2, Elem{1});
  UMatrix B = transvection_short(sp, 3, 1, Elem{1});
  EXPECT_EQ(comm(F, B, comm(F, A, zeta)), transvection_short(sp, 3, -2, Elem{1}));
  // [B,[A,z]] = ^{BA}z ^{B}z^{-1} z ^{A}z^{-1}.
  UMatrix zi = inverse(F, zeta);
  UMatrix expanded = mul(F, mul(F, conj(F, mul(F, B, A), zeta), conj(F, B, zi)),
                         mul(F, zeta, conj(F, A, zi)));
  EXPECT_EQ(expanded, comm(F, B, comm(F, A, zeta)));
}

TEST(Factor, ShortExampleDiagonal) {
  auto g5 = preset("gf5", 3);
  UMatrix d = build_diag(g5, 1, 2, Elem{2}).matrix;
  ASSERT_EQ(level_of(g5, d).kind, LevelKind::Full);
  auto cw = factor_short(g5, d, 1, 3, Elem{1});
  EXPECT_LE(cw.length(), 4u);
  EXPECT_TRUE(verify_certificate(g5, cw));
}

TEST(Factor, ExtraExamples) {
  auto pr = preset("pr2", 3);
  auto cw = factor_extra(pr, short_target(pr, 1, 2, Elem{1}), 1, hp(1, 0));
  EXPECT_LE(cw.length(), 12u);
  EXPECT_TRUE(verify_certificate(pr, cw));
  auto sp = preset("sp2", 3);
  UMatrix t = transvection_extra(sp, 1, hp(0, 1));
  auto cw2 = factor_extra(sp, t, 1, hp(0, 1));
  EXPECT_LE(cw2.length(), 12u);
  EXPECT_TRUE(verify_certificate(sp, cw2));
  EXPECT_EQ(code_of([&] { factor_extra(sp, t, 1, hp(0, 0)); }), Errc::PreconditionFailed);
}

TEST(Factor, TLevelExamples) {
  auto pr = preset("pr2", 3);
  const auto& F = pr.F();
  UMatrix sigma = mul(F, transvection_extra(pr, 1, hp(1, 0)), transvection_extra(pr, 2, hp(1, 0)));
  auto cw = factor_tlevel(pr, sigma, 1, Elem{1});
  EXPECT_EQ(cw.length(), 1u);
  EXPECT_TRUE(verify_certificate(pr, cw));

  auto k0 = preset("k0", 3);
  UMatrix t1 = transvection_extra(k0, 1, hp(1, 0));
  auto cw2 = factor_tlevel(k0, t1, 2, Elem{1}, TLevelOptions{false});
  EXPECT_EQ(cw2.length(), 2u);
  EXPECT_TRUE(verify_certificate(k0, cw2));
  auto cw2s = factor_tlevel(k0, t1, 2, Elem{1});
  EXPECT_LE(cw2s.length(), 2u);
  EXPECT_TRUE(verify_certificate(k0, cw2s));

  auto same = factor_tlevel(k0, t1, 1, Elem{1});
  EXPECT_EQ(same.length(), 1u);
  EXPECT_TRUE(same.factors[0].conj.empty());
}

TEST(Factor, LevelAndRankErrors) {
  auto sp = preset("sp2", 3);
  EXPECT_EQ(code_of([&] { factor_short(sp, UMatrix::identity(3), 1, 2, Elem{1}); }),
            Errc::WrongLevel);
  auto sp2 = preset("sp2", 2);
  EXPECT_EQ(code_of([&] {
              factor_short(sp2, transvection_extra(sp2, 1, hp(0, 1)), 1, 2, Elem{1});
            }),
            Errc::RankTooSmall);
  auto pr = preset("pr2", 3);
  EXPECT_EQ(code_of([&] {
              factor_tlevel(pr, short_target(pr, 1, 2, Elem{1}), 1, Elem{1});
            }),
            Errc::WrongLevel);
  EXPECT_EQ(code_of([&] {
              factor_tlevel(sp, transvection_extra(sp, 1, hp(0, 1)), 1, Elem{1});
            }),
            Errc::WrongLevel);
}

TEST(Reduction, FirstColumnExamples) {
  auto sp = preset("sp2", 3);
  const auto& F = sp.F();
  UMatrix w = eval_word(sp, parse_word(F, "X(-1,0,1);X(1,0,1);X(-1,0,1)"));
  auto a = reduce_first_column(sp, w);
  EXPECT_EQ(a.kind, ReductionKind::ToMinus1);
  EXPECT_TRUE(a.tau.empty());
  auto b = reduce_first_column(sp, short_target(sp, 2, 1, Elem{1}));
  EXPECT_EQ(b.kind, ReductionKind::To2);
  UMatrix z = conj(F, eval_word(sp, b.tau), short_target(sp, 2, 1, Elem{1}));
  UVector want = UVector::basis(3, 2);
  want[2] = b.x;
  EXPECT_EQ(z.column(1), want);
  auto c = reduce_first_column(sp, UMatrix::identity(3));
  EXPECT_EQ(c.kind, ReductionKind::Colinear10);
  EXPECT_EQ(c.x.v, 1);
  EXPECT_EQ(c.y.v, 0);
}

TEST(Reduction, FirstColumnShapeOnRandomMembers) {
  std::mt19937_64 rng(31);
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    for (int t = 0; t < 40; ++t) {
      UMatrix g = eval_word(s, random_word(s, rng, 8));
      auto r = reduce_first_column(s, g);
      UMatrix z = conj(F, eval_word(s, r.tau), g);
      for (int i : theta(3)) {
        Elem want = F.zero();
        if (r.kind == ReductionKind::ToMinus1 && i == -1) want = r.x;
        if (r.kind == ReductionKind::To2 && i == 2) want = r.x;
        if (r.kind == ReductionKind::Colinear10) {
          if (i == 1) want = r.x;
          if (i == 0) want = r.y;
        }
        ASSERT_EQ(z(i, 1), want) << name;
      }
    }
  }
}

TEST(Reduction, ClearMinus2) {
  std::mt19937_64 rng(41);
  auto sp = preset("sp2", 3);
  const auto& F = sp.F();
  // Already clear.
  UMatrix p12 = build_perm(sp, 1, 2).matrix;
  ASSERT_EQ(p12(3, -2).v, 0);
  EXPECT_TRUE(clear_minus2(sp, p12).empty());

  int branch_hits = 0;
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    const auto& G = s.F();
    for (int t = 0; t < 200; ++t) {
      UMatrix g = eval_word(s, random_word(s, rng, 8));
      auto r = reduce_first_column(s, g);
      if (r.kind != ReductionKind::To2) continue;
      UMatrix zeta = conj(G, eval_word(s, r.tau), g);
      EWord tau = clear_minus2(s, zeta);
      UMatrix out = conj(G, eval_word(s, tau), zeta);
      ASSERT_EQ(out.column(1), zeta.column(1)) << name;
      ASSERT_TRUE(out(3, -2).v == 0 || out(-3, -2).v == 0) << name;
      if (zeta(-1, -2).v && zeta(-3, -2).v && zeta(3, -2).v) {
        ++branch_hits;
        ASSERT_EQ(tau.size(), 1u);
        Elem a = G.neg(G.mul(zeta(-3, -2), G.inv(zeta(-1, -2))));
        ASSERT_EQ(tau[0], Atom::shorty(-3, -1, a)) << name;
      }
    }
  }
  EXPECT_GT(branch_hits, 0);
  (void)F;
}

TEST(Factor, BoundsOnRandomFullElements) {
  std::mt19937_64 rng(51);
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    for (int t = 0; t < 15; ++t) {
      UMatrix sigma = full_sigma(s, rng);
      auto hb = theta_hb(3);
      int i = hb[rng() % hb.size()], j;
      do j = hb[rng() % hb.size()];
      while (j == i || j == -i);
      Elem x = F.units()[rng() % F.units().size()];
      auto cw = factor_short(s, sigma, i, j, x);
      ASSERT_LE(cw.length(), 4u) << name;
      ASSERT_TRUE(verify_certificate(s, cw)) << name;
      ASSERT_EQ(expand(s, sigma, cw.factors), short_target(s, i, j, x));
      const auto& par = s.delta_signed(-eps(i)).elements();
      if (par.size() > 1) {
        HPair a = par[1 + rng() % (par.size() - 1)];
        auto ce = factor_extra(s, sigma, i, a);
        ASSERT_LE(ce.length(), 12u) << name;
        ASSERT_TRUE(verify_certificate(s, ce)) << name;
        ASSERT_EQ(expand(s, sigma, ce.factors), transvection_extra(s, i, a));
      }
    }
  }
}

TEST(Factor, TLevelBoundsOnRandomElements) {
  std::mt19937_64 rng(61);
  for (const auto& name : {"pr2", "k0", "pr4", "pr8"}) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    std::vector<Atom> gens;
    for (const Atom& a : all_transvections(s))
      if (a.kind == AtomKind::Extra && a.y.v == 0) gens.push_back(a);
    for (int t = 0; t < 30; ++t) {
      EWord w;
      for (int k = 0; k < 1 + t % 4; ++k) w.push_back(gens[rng() % gens.size()]);
      UMatrix sigma = eval_word(s, w);
      if (level_of(s, sigma).kind != LevelKind::TLevel) continue;
      sigma = conj(F, eval_word(s, random_word(s, rng, 3)), sigma);
      int i = theta_hb(3)[rng() % 6];
      Elem x = F.units()[rng() % F.units().size()];
      auto cw = factor_tlevel(s, sigma, i, x);
      ASSERT_LE(cw.length(), std::string(name) == "pr2" ? 1u : 2u) << name;
      ASSERT_TRUE(verify_certificate(s, cw)) << name;
    }
  }
}

TEST(Verify, DetectsTampering) {
  auto g5 = preset("gf5", 3);
  UMatrix d = build_diag(g5, 1, 2, Elem{2}).matrix;
  auto cw = factor_short(g5, d, 1, 3, Elem{1});
  ASSERT_TRUE(verify_certificate(g5, cw));
  for (std::size_t k = 0; k < cw.factors.size(); ++k) {
    auto bad = cw;
    bad.factors[k].exp = -bad.factors[k].exp;
    EXPECT_FALSE(verify_certificate(g5, bad)) << k;
  }
  auto dropped = cw;
  dropped.factors.pop_back();
  EXPECT_FALSE(verify_certificate(g5, dropped));
  for (std::size_t k = 0; k < cw.factors.size(); ++k) {
    if (cw.factors[k].conj.empty()) continue;
    auto bad = cw;
    Atom& a = bad.factors[k].conj.front();
    a.x = g5.F().add(a.x, Elem{1});
    if (a.kind == AtomKind::Extra) a.y = g5.F().add(a.y, Elem{1});
    EXPECT_FALSE(verify_certificate(g5, bad)) << k;
  }
  auto nonmember = cw;
  nonmember.base(1, 2) = g5.F().add(nonmember.base(1, 2), Elem{1});
  EXPECT_FALSE(verify_certificate(g5, nonmember));
}

TEST(Factor, GlobalConjugationClosure) {
  std::mt19937_64 rng(71);
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    UMatrix sigma = full_sigma(s, rng);
    auto cw = factor_short(s, sigma, 1, 2, Elem{1});
    for (int t = 0; t < 5; ++t) {
      EWord rho = random_word(s, rng, 4);
      ConjugateWord moved = cw;
      for (auto& f : moved.factors) f.conj = concat(rho, f.conj);
      moved.target = conj(F, eval_word(s, rho), cw.target);
      moved.target_atom.reset();
      ASSERT_TRUE(verify_certificate(s, moved)) << name;
    }
  }
}

TEST(Factor, DispatchAndTiming) {
  std::mt19937_64 rng(81);
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    UMatrix sigma = full_sigma(s, rng);
    for (const Atom& a : all_transvections(s)) {
      auto t0 = std::chrono::steady_clock::now();
      auto cw = factorize(s, sigma, a);
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      ASSERT_TRUE(verify_certificate(s, cw)) << name << " " << format_atom(s.F(), a);
      ASSERT_LE(cw.length(), a.kind == AtomKind::Short ? 4u : 12u);
      ASSERT_LT(dt, 1.0);
      if (s.F().size() > 4) break;
    }
  }
}
