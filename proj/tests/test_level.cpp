#include <gtest/gtest.h>

#include <random>

#include "oddu/error.hpp"
#include "oddu/level.hpp"
#include "oddu/presets.hpp"

using namespace oddu;

namespace {

const std::vector<std::string> kSetups = {"sp2", "pr2", "pr8", "gf5", "gf9", "k0", "pr4", "gf3"};

HPair hp(int x, int y) { return {Elem{std::uint16_t(x)}, Elem{std::uint16_t(y)}}; }

}  // namespace

TEST(Level, Examples) {
  auto pr = preset("pr2", 3);
  EXPECT_EQ(level_of(pr, UMatrix::identity(3)).kind, LevelKind::Zero);
  EXPECT_TRUE(level_of(pr, UMatrix::identity(3)).witness.empty());
  auto t = level_of(pr, transvection_extra(pr, 1, hp(1, 0)));
  EXPECT_EQ(t.kind, LevelKind::TLevel);
  EXPECT_EQ(t.witness, "Q(sigma[*,-1])=(1;0)");
  auto sp = preset("sp2", 3);
  auto f = level_of(sp, transvection_extra(sp, 1, hp(0, 1)));
  EXPECT_EQ(f.kind, LevelKind::Full);
  EXPECT_EQ(f.witness, "sigma[1,-1]=1");
}

TEST(Level, RejectsNonMembers) {
  auto sp = preset("sp2", 3);
  UMatrix bad = UMatrix::identity(3);
  bad(1, 2) = Elem{1};
  try {
    level_of(sp, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotMember);
  }
  EXPECT_THROW(in_congruence(sp, bad, OddFormIdeal::full()), Error);
}

TEST(Level, CongruenceExamples) {
  auto pr = preset("pr2", 3);
  UMatrix t = transvection_extra(pr, 1, hp(1, 0));
  for (auto ideal : {OddFormIdeal::zero(), OddFormIdeal::t_level(), OddFormIdeal::full()})
    EXPECT_TRUE(in_congruence(pr, UMatrix::identity(3), ideal));
  EXPECT_TRUE(in_congruence(pr, t, OddFormIdeal::t_level()));
  EXPECT_FALSE(in_congruence(pr, t, OddFormIdeal::zero()));
}

TEST(Level, IdealElementaryExamples) {
  auto pr = preset("pr2", 3);
  EXPECT_FALSE(is_ideal_elementary(pr, Atom::shorty(1, 2, Elem{1}), OddFormIdeal::t_level()));
  EXPECT_TRUE(is_ideal_elementary(pr, Atom::extra(1, hp(1, 0)), OddFormIdeal::t_level()));
  EXPECT_FALSE(is_ideal_elementary(pr, Atom::extra(1, hp(0, 1)), OddFormIdeal::t_level()));
  EXPECT_TRUE(is_ideal_elementary(pr, Atom::shorty(1, 2, Elem{1}), OddFormIdeal::full()));
  EXPECT_FALSE(is_ideal_elementary(pr, Atom::extra(1, hp(1, 0)), OddFormIdeal::zero()));
}

TEST(Level, TransvectionLevels) {
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    for (const Atom& a : all_transvections(s)) {
      UMatrix m = atom_matrix(s, a);
      LevelKind want = LevelKind::Full;
      if (a.kind == AtomKind::Extra && a.y.v == 0) want = LevelKind::TLevel;
      if (a.kind == AtomKind::Extra && a.y.v == 0 && !s.admits_tlevel()) continue;
      ASSERT_EQ(level_of(s, m).kind, want) << name << " " << format_atom(s.F(), a);
    }
  }
}

TEST(Level, ConjugationInvariant) {
  std::mt19937_64 rng(8);
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    const auto& F = s.F();
    std::vector<UMatrix> probes = {UMatrix::identity(3), eval_word(s, random_word(s, rng, 4))};
    for (const Atom& a : all_transvections(s))
      if (a.kind == AtomKind::Extra && a.y.v == 0) {
        probes.push_back(atom_matrix(s, a));
        break;
      }
    for (const UMatrix& sigma : probes) {
      LevelKind k = level_of(s, sigma).kind;
      for (int t = 0; t < 100; ++t) {
        UMatrix tau = eval_word(s, random_word(s, rng, 1 + t % 6));
        ASSERT_EQ(level_of(s, conj(F, tau, sigma)).kind, k) << name;
      }
    }
  }
}

TEST(Level, ConsistentWithCongruence) {
  std::mt19937_64 rng(13);
  for (const auto& name : kSetups) {
    auto s = preset(name, 3);
    std::vector<UMatrix> probes;
    for (const Atom& a : all_transvections(s)) probes.push_back(atom_matrix(s, a));
    for (int t = 0; t < 20; ++t) probes.push_back(eval_word(s, random_word(s, rng, 3)));
    for (const UMatrix& sigma : probes) {
      LevelKind k = level_of(s, sigma).kind;
      ASSERT_TRUE(in_congruence(s, sigma, OddFormIdeal::of(k))) << name;
      if (k == LevelKind::Full) {
        if (s.admits_tlevel()) ASSERT_FALSE(in_congruence(s, sigma, OddFormIdeal::t_level()));
        ASSERT_FALSE(in_congruence(s, sigma, OddFormIdeal::zero()));
      }
      if (k == LevelKind::TLevel) ASSERT_FALSE(in_congruence(s, sigma, OddFormIdeal::zero()));
    }
  }
}
