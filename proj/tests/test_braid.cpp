#include <gtest/gtest.h>

#include "gyb/braid.hpp"
#include "gyb/errors.hpp"

using namespace gyb;

TEST(ParseBraid, Examples) {
  EXPECT_EQ(parse_braid("1 1 1"), BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(parse_braid("", 3), BraidWord::identity(3));
  EXPECT_EQ(parse_braid("1 -2 1 -2"), BraidWord(3, {1, -2, 1, -2}));
  EXPECT_EQ(parse_braid("  +2\t-1\n"), BraidWord(3, {2, -1}));
  EXPECT_EQ(parse_braid(""), BraidWord::identity(1));
  EXPECT_EQ(parse_braid("1", 4).strands(), 4);
}

TEST(ParseBraid, Errors) {
  EXPECT_THROW(parse_braid("1 0 1"), ParseError);
  EXPECT_THROW(parse_braid("1 x"), ParseError);
  EXPECT_THROW(parse_braid("1.5"), ParseError);
  EXPECT_THROW(parse_braid("--1"), ParseError);
  EXPECT_THROW(parse_braid("3", 3), ParseError);
  EXPECT_THROW(parse_braid("", 0), ParseError);
}

TEST(ParseBraid, RoundTripsFormattedWords) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int strands = 1 + static_cast<int>(seed % 6);
    const auto b = random_braid(strands, seed % 15, seed);
    EXPECT_EQ(parse_braid(format_braid(b), b.strands()), b);
  }
}

TEST(BraidWordType, RejectsOutOfRangeLetters) {
  EXPECT_THROW(BraidWord(2, {2}), DomainError);
  EXPECT_THROW(BraidWord(2, {0}), DomainError);
  EXPECT_THROW(BraidWord(0, {}), DomainError);
  EXPECT_THROW(BraidWord(1, {1}), DomainError);
}

TEST(Writhe, Examples) {
  EXPECT_EQ(writhe(BraidWord(2, {1, 1, 1})), 3);
  EXPECT_EQ(writhe(BraidWord::identity(4)), 0);
  EXPECT_EQ(writhe(BraidWord(3, {1, -2, 1, -2})), 0);
}

TEST(Writhe, IsAdditiveUnderConcatenation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = random_braid(4, 9, seed);
    const auto b = random_braid(4, 7, seed + 1000);
    EXPECT_EQ(writhe(concat(a, b)), writhe(a) + writhe(b));
    EXPECT_EQ(writhe(inverse(a)), -writhe(a));
  }
}

TEST(Conjugate, Examples) {
  const auto b = BraidWord(3, {1, -2, 2, 1});
  EXPECT_EQ(conjugate(b, BraidWord::identity(3)), b);
  EXPECT_EQ(conjugate(BraidWord(3, {1}), BraidWord(3, {2})), BraidWord(3, {-2, 1, 2}));
  EXPECT_THROW(conjugate(b, BraidWord::identity(2)), DomainError);
}

TEST(Conjugate, PreservesWritheAndComponents) {
  BraidSampler sampler(7);
  for (int i = 0; i < 40; ++i) {
    const auto b = sampler.next(1, 5, 10);
    const auto eta = sampler.next(b.strands(), 6);
    const auto c = conjugate(b, eta);
    EXPECT_EQ(writhe(c), writhe(b));
    EXPECT_EQ(closure_components(c), closure_components(b));
  }
}

TEST(Stabilize, Examples) {
  EXPECT_EQ(stabilize(BraidWord::identity(1), 1), BraidWord(2, {1}));
  EXPECT_EQ(stabilize(BraidWord(2, {1, 1}), -1), BraidWord(3, {1, 1, -2}));
  EXPECT_THROW(stabilize(BraidWord::identity(1), 0), DomainError);
}

TEST(Stabilize, PreservesComponentsAndShiftsWrithe) {
  BraidSampler sampler(9);
  for (int i = 0; i < 40; ++i) {
    const auto b = sampler.next(1, 5, 10);
    for (int sign : {1, -1}) {
      const auto s = stabilize(b, sign);
      EXPECT_EQ(closure_components(s), closure_components(b));
      EXPECT_EQ(writhe(s), writhe(b) + sign);
    }
  }
}

TEST(Juxtapose, Examples) {
  EXPECT_EQ(juxtapose(BraidWord::identity(1), BraidWord::identity(1)), BraidWord::identity(2));
  EXPECT_EQ(juxtapose(BraidWord(2, {1}), BraidWord(2, {1})), BraidWord(4, {1, 3}));
  EXPECT_EQ(juxtapose(BraidWord(2, {-1}), BraidWord(3, {-2, 1})), BraidWord(5, {-1, -4, 3}));
}

TEST(Juxtapose, AddsWritheAndComponents) {
  BraidSampler sampler(10);
  for (int i = 0; i < 40; ++i) {
    const auto a = sampler.next(1, 4, 8);
    const auto b = sampler.next(1, 4, 8);
    const auto j = juxtapose(a, b);
    EXPECT_EQ(writhe(j), writhe(a) + writhe(b));
    EXPECT_EQ(closure_components(j), closure_components(a) + closure_components(b));
  }
}

TEST(ClosureComponents, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(closure_components(BraidWord::identity(n)), n);
  EXPECT_EQ(closure_components(BraidWord(2, {1, 1})), 2);
  EXPECT_EQ(closure_components(BraidWord(2, {1, 1, 1})), 1);
  EXPECT_EQ(closure_components(BraidWord(3, {1, -2, 1, -2})), 1);
  EXPECT_EQ(closure_components(BraidWord(4, {1, 2, 3})), 1);
  EXPECT_EQ(closure_components(BraidWord(4, {1, 3})), 2);
}

TEST(RandomBraid, RegressionAnchors) {
  EXPECT_EQ(random_braid(3, 8, 1), parse_braid("1 2 2 2 1 -1 1 -1", 3));
  EXPECT_EQ(random_braid(4, 10, 42), parse_braid("1 2 3 1 -3 2 3 1 3 -1", 4));
  EXPECT_EQ(random_braid(5, 6, 20261018), parse_braid("-2 3 -1 2 3 -2", 5));
}

TEST(RandomBraid, DeterministicAndInRange) {
  EXPECT_EQ(random_braid(6, 30, 77), random_braid(6, 30, 77));
  EXPECT_EQ(random_braid(1, 10, 3), BraidWord::identity(1));
  const auto b = random_braid(6, 500, 5);
  EXPECT_EQ(b.length(), 500u);
  bool saw_negative = false;
  bool saw_top = false;
  for (int g : b.letters()) {
    saw_negative |= g < 0;
    saw_top |= std::abs(g) == 5;
  }
  EXPECT_TRUE(saw_negative);
  EXPECT_TRUE(saw_top);
}

TEST(Catalog, StandardLinksHaveMatchingComponents) {
  for (const auto& link : standard_links()) {
    EXPECT_EQ(closure_components(link.braid), link.components) << link.name;
  }
  ASSERT_TRUE(find_link("figure-eight"));
  EXPECT_EQ(find_link("figure-eight")->braid, BraidWord(3, {1, -2, 1, -2}));
  EXPECT_EQ(find_link("hopf-")->braid, BraidWord(2, {-1, -1}));
  EXPECT_EQ(find_link("trivial4")->braid, BraidWord::identity(4));
  EXPECT_FALSE(find_link("nonsense"));
}

TEST(Catalog, FileRoundTripAndOverrides) {
  const std::string text = "# comment\nmytwist\t3\t1 1 -2\n\ntrefoil\t3\t1 1 1 2\n";
  const auto links = parse_catalog(text);
  ASSERT_EQ(links.size(), 2u);
  EXPECT_EQ(links[0].braid, BraidWord(3, {1, 1, -2}));
  EXPECT_EQ(links[0].components, 2);
  EXPECT_EQ(parse_catalog(format_catalog(links))[1].braid, links[1].braid);
  // extra entries shadow the built-in names
  EXPECT_EQ(find_link("trefoil", links)->braid.strands(), 3);
  EXPECT_THROW(parse_catalog("bad line without tabs\n"), ParseError);
  EXPECT_THROW(parse_catalog("x\t0\t\n"), ParseError);
  EXPECT_THROW(parse_catalog("x\t2\t2\n"), ParseError);
}
