#include <random>

#include <gtest/gtest.h>

#include "tiltcat/engine/matrix.hpp"
#include "tiltcat/engine/prime_field.hpp"

using namespace tiltcat::engine;

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, InverseTimesSelfIsOne) {
  const PrimeField f(101);
  for (Elem x = 1; x < 101; ++x) EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
  EXPECT_EQ(f.reduce(-1), 100u);
  EXPECT_EQ(f.neg(0), 0u);
}

TEST(PrimeField, FermatLittle) {
  const PrimeField f(97);
  for (Elem x = 1; x < 97; ++x) EXPECT_EQ(f.pow(x, 96), 1u);
}

TEST(Matrix, RankAndNullspace) {
  const PrimeField f(101);
  const auto m = Matrix::from_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
  EXPECT_EQ(rank(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.rows(), 1u);
  EXPECT_TRUE((m * ns.transpose()).is_zero());
  const auto lk = left_kernel(m);
  ASSERT_EQ(lk.rows(), 1u);
  EXPECT_TRUE((lk * m).is_zero());
}

TEST(Matrix, RankDependsOnCharacteristic) {
  const auto m2 = Matrix::from_rows(PrimeField(2), {{1, 1}, {1, -1}}, 2);
  const auto m3 = Matrix::from_rows(PrimeField(3), {{1, 1}, {1, -1}}, 2);
  EXPECT_EQ(rank(m2), 1u);
  EXPECT_EQ(rank(m3), 2u);
}

TEST(Matrix, RandomInverse) {
  const PrimeField f(101);
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    const auto m = Matrix::random(f, 5, 5, rng);
    const auto inv = inverse(m);
    if (rank(m) < 5) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, Matrix::identity(f, 5));
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(Matrix, SolveLeft) {
  const PrimeField f(101);
  std::mt19937_64 rng(3);
  const auto a = Matrix::random(f, 3, 6, rng);
  const auto x = Matrix::random(f, 2, 3, rng);
  const auto sol = solve_left(a, x * a);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol * a, x * a);
  // a vector outside the row space has no solution
  const auto c = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}}, 3);
  EXPECT_FALSE(solve_left(c, Matrix::from_rows(f, {{0, 0, 1}}, 3)).has_value());
}

TEST(EchelonBasis, InsertKeepsIndependent) {
  const PrimeField f(5);
  EchelonBasis eb(f, 3);
  EXPECT_TRUE(eb.insert(std::vector<Elem>{1, 2, 3}));
  EXPECT_FALSE(eb.insert(std::vector<Elem>{2, 4, 1}));
  EXPECT_TRUE(eb.insert(std::vector<Elem>{0, 0, 1}));
  EXPECT_EQ(eb.rank(), 2u);
  EXPECT_TRUE(eb.contains(std::vector<Elem>{1, 2, 0}));
}

TEST(Matrix, BlockDiagonalAndStack) {
  const PrimeField f(7);
  const auto a = Matrix::identity(f, 2);
  const auto b = Matrix::from_rows(f, {{3}}, 1);
  const auto d = block_diagonal({a, b}, f);
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d(2, 2), 3u);
  EXPECT_EQ(d(0, 2), 0u);
  EXPECT_EQ(vstack({a, a}, f, 2).rows(), 4u);
}
