#include <gtest/gtest.h>

#include <random>

#include "hinv/presentation.hpp"

using namespace hinv;

namespace {

FreeWord w(std::initializer_list<Letter> ls) {
  std::vector<Letter> v(ls);
  return FreeWord::reduce(v);
}

} // namespace

TEST(ReduceWord, CancelsInverseLetters) {
  std::vector<Letter> raw{{0, 1}, {0, -1}};
  EXPECT_TRUE(reduce_word(raw).empty());
}

TEST(ReduceWord, AddsExponents) {
  std::vector<Letter> raw{{0, 2}, {0, -1}};
  EXPECT_EQ(reduce_word(raw), FreeWord::generator(0));
}

TEST(ReduceWord, CancelsAcrossTheSeam) {
  // (x y)(y^-1 x) = x^2
  std::vector<Letter> raw{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  EXPECT_EQ(reduce_word(raw), FreeWord::generator(0, 2));
}

TEST(ReduceWord, RejectsOutOfRangeGenerator) {
  std::vector<Letter> raw{{0, 1}, {3, 1}};
  EXPECT_THROW(reduce_word(raw, 2), InputError);
}

TEST(ReduceWord, IsIdempotentOnRandomWords) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    int len = rng() % 20;
    for (int k = 0; k < len; ++k)
      raw.push_back({static_cast<int>(rng() % 3), static_cast<long long>(rng() % 5) - 2});
    FreeWord once = reduce_word(raw);
    FreeWord twice = reduce_word(once.letters());
    EXPECT_EQ(once, twice);
    for (std::size_t k = 0; k + 1 < once.letters().size(); ++k)
      EXPECT_NE(once.letters()[k].gen, once.letters()[k + 1].gen);
    for (const Letter &l : once.letters())
      EXPECT_NE(l.exp, 0);
  }
}

TEST(FreeWord, InverseAndPowers) {
  FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1);
  FreeWord u = x * y * x.inverse();
  EXPECT_TRUE((u * u.inverse()).empty());
  EXPECT_EQ(u.pow(3), x * y.pow(3) * x.inverse());
  EXPECT_EQ(u.pow(-2), x * y.pow(-2) * x.inverse());
  EXPECT_EQ(commutator(x, y), w({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
}

TEST(FreeWord, CyclicConjugates) {
  FreeWord r = w({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}});
  FreeWord rotated = w({{1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}, {0, 1}});
  EXPECT_TRUE(is_cyclic_conjugate(rotated, r));
  EXPECT_TRUE(is_cyclic_conjugate(rotated.inverse(), r));
  FreeWord c = FreeWord::generator(2);
  EXPECT_TRUE(is_cyclic_conjugate(conjugate(r, c), r));
  EXPECT_FALSE(is_cyclic_conjugate(r * FreeWord::generator(0), r));
}

TEST(FpPresentation, RejectsRelatorWithUndeclaredGenerator) {
  EXPECT_THROW(FpPresentation({"a"}, {FreeWord::generator(1)}), InputError);
}
