#include <gtest/gtest.h>

#include <set>

#include "oddu/error.hpp"
#include "oddu/field.hpp"
#include "oracle.hpp"

using namespace oddu;

namespace {

struct Case {
  int p, k;
  std::vector<int> mod;
  InvolutionKind inv;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {2, 1, {1, 1}, InvolutionKind::Identity},
      {2, 2, {1, 1, 1}, InvolutionKind::FrobeniusHalf},
      {2, 3, {1, 1, 0, 1}, InvolutionKind::Identity},
      {3, 2, {1, 0, 1}, InvolutionKind::FrobeniusHalf},
      {5, 1, {0, 1}, InvolutionKind::Identity},
      {5, 2, {2, 0, 1}, InvolutionKind::FrobeniusHalf},
      {2, 4, {1, 1, 0, 0, 1}, InvolutionKind::FrobeniusHalf},
  };
  return c;
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

}  // namespace

TEST(Field, Gf8Builds) {
  FieldCtx F(2, 3, {1, 1, 0, 1}, InvolutionKind::Identity);
  EXPECT_EQ(F.size(), 8);
  EXPECT_EQ(F.units().size(), 7u);
}

TEST(Field, Gf4FrobeniusBuilds) {
  FieldCtx F(2, 2, {1, 1, 1}, InvolutionKind::FrobeniusHalf);
  EXPECT_EQ(F.size(), 4);
  EXPECT_EQ(F.format(F.bar(F.parse("0,1"))), "1,1");
}

TEST(Field, ReducibleModulusRejected) {
  EXPECT_EQ(code_of([] { FieldCtx(2, 2, {1, 0, 1}, InvolutionKind::Identity); }),
            Errc::ReducibleModulus);
}

TEST(Field, ConstructionErrors) {
  EXPECT_EQ(code_of([] { FieldCtx(4, 1, {0, 1}, InvolutionKind::Identity); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { FieldCtx(2, 3, {1, 1, 0, 1}, InvolutionKind::FrobeniusHalf); }),
            Errc::BadInvolution);
  EXPECT_EQ(code_of([] { FieldCtx(3, 6, {2, 1, 0, 0, 0, 0, 1}, InvolutionKind::Identity); }),
            Errc::FieldTooLarge);
}

TEST(Field, InvolutionExamples) {
  FieldCtx f8(2, 3, {1, 1, 0, 1}, InvolutionKind::Identity);
  EXPECT_EQ(f8.format(f8.bar(f8.parse("0,0,1"))), "0,0,1");
  FieldCtx f9(3, 2, {1, 0, 1}, InvolutionKind::FrobeniusHalf);
  EXPECT_EQ(f9.format(f9.bar(f9.parse("0,1"))), "0,2");
}

TEST(Field, ScalarExamples) {
  FieldCtx f2(2, 1, {1, 1}, InvolutionKind::Identity);
  EXPECT_NO_THROW(validate_scalars(f2, f2.one(), f2.one()));
  FieldCtx f5(5, 1, {0, 1}, InvolutionKind::Identity);
  EXPECT_EQ(code_of([&] { validate_scalars(f5, f5.from_int(4), f5.one()); }),
            Errc::MuConditionFailed);
  EXPECT_NO_THROW(validate_scalars(f5, f5.from_int(4), f5.zero()));
  EXPECT_EQ(code_of([&] { validate_scalars(f5, f5.from_int(2), f5.zero()); }),
            Errc::LambdaNotUnitary);
}

TEST(Field, MatchesPolynomialOracle) {
  for (const Case& c : cases()) {
    FieldCtx F(c.p, c.k, c.mod, c.inv);
    oracle::PolyField O{c.p, c.k, c.mod, c.inv == InvolutionKind::FrobeniusHalf};
    ASSERT_EQ(F.size(), O.q());
    for (int a = 0; a < O.q(); ++a) {
      Elem ea{std::uint16_t(a)};
      ASSERT_EQ(F.neg(ea).v, O.neg(a));
      ASSERT_EQ(F.bar(ea).v, O.bar(a));
      if (a) ASSERT_EQ(F.inv(ea).v, O.inv(a));
      for (int b = 0; b < O.q(); ++b) {
        Elem eb{std::uint16_t(b)};
        ASSERT_EQ(F.add(ea, eb).v, O.add(a, b)) << a << "+" << b;
        ASSERT_EQ(F.mul(ea, eb).v, O.mul(a, b)) << a << "*" << b;
      }
    }
  }
}

TEST(Field, InvolutionIsAutomorphismOfOrderTwo) {
  for (const Case& c : cases()) {
    FieldCtx F(c.p, c.k, c.mod, c.inv);
    EXPECT_EQ(F.bar(F.one()), F.one());
    for (Elem a : F.elements()) {
      ASSERT_EQ(F.bar(F.bar(a)), a);
      for (Elem b : F.elements()) {
        ASSERT_EQ(F.bar(F.add(a, b)), F.add(F.bar(a), F.bar(b)));
        ASSERT_EQ(F.bar(F.mul(a, b)), F.mul(F.bar(b), F.bar(a)));
      }
    }
  }
}

TEST(Field, EnumerationIsDistinctAndOrdered) {
  for (const Case& c : cases()) {
    FieldCtx F(c.p, c.k, c.mod, c.inv);
    auto el = F.elements();
    std::set<std::string> seen;
    for (std::size_t i = 0; i < el.size(); ++i) {
      EXPECT_EQ(el[i].v, i);
      seen.insert(F.format(el[i]));
    }
    EXPECT_EQ(int(seen.size()), F.size());
  }
}

TEST(Field, LiteralRoundTrip) {
  for (const Case& c : cases()) {
    FieldCtx F(c.p, c.k, c.mod, c.inv);
    for (Elem a : F.elements()) ASSERT_EQ(F.parse(F.format(a)), a);
  }
  FieldCtx f8(2, 3, {1, 1, 0, 1}, InvolutionKind::Identity);
  EXPECT_EQ(f8.format(f8.parse("1,1,0")), "1,1,0");
  EXPECT_EQ(f8.parse("1,1,0").v, 3);
}

TEST(Field, LiteralRejectsJunk) {
  FieldCtx f8(2, 3, {1, 1, 0, 1}, InvolutionKind::Identity);
  EXPECT_EQ(code_of([&] { f8.parse("1,2,0"); }), Errc::Parse);
  EXPECT_EQ(code_of([&] { f8.parse("1,0,0,1"); }), Errc::Parse);
  EXPECT_EQ(code_of([&] { f8.parse("a"); }), Errc::Parse);
  EXPECT_EQ(code_of([&] { f8.parse(""); }), Errc::Parse);
}

TEST(Field, PrimitiveAndPow) {
  FieldCtx f8(2, 3, {1, 1, 0, 1}, InvolutionKind::Identity);
  Elem x = f8.primitive();
  EXPECT_EQ(f8.order(x), 7);
  EXPECT_EQ(f8.pow(x, 7), f8.one());
  EXPECT_EQ(f8.mul(f8.pow(x, -2), f8.pow(x, 2)), f8.one());
  EXPECT_EQ(code_of([&] { f8.inv(f8.zero()); }), Errc::ZeroScalar);
}

TEST(Field, Irreducibility) {
  const std::vector<int> a{1, 1, 0, 1}, b{1, 0, 1}, c{1, 0, 1};
  EXPECT_TRUE(is_irreducible(2, a));
  EXPECT_FALSE(is_irreducible(2, b));
  EXPECT_TRUE(is_irreducible(3, c));
}
