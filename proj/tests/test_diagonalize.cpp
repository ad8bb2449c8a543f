#include <random>

#include <gtest/gtest.h>

#include "random_maps.hpp"
#include "tiltcat/engine/diagonalize.hpp"

using namespace tiltcat;
using namespace tiltcat::engine;

namespace {

Matrix inclusion_between(const AlgebraPtr& alg, int row_from, int row_to) {
  const auto a = grid_projective(alg, 1, row_from);
  const auto b = grid_projective(alg, 1, row_to);
  return *solve_left(b.inclusion, a.inclusion);
}

}  // namespace

TEST(DiagonalizeMono, AlreadyDiagonal) {
  const auto alg = upper_triangular_algebra(3);
  const auto src = projective_sum(alg, {{1, 2}, {1, 3}});
  const auto tgt = projective_sum(alg, {{1, 1}, {1, 2}});
  Matrix f(alg->field(), src.sum.module.dim(), tgt.sum.module.dim());
  f.set_block(0, 0, inclusion_between(alg, 2, 1));
  f.set_block(src.offset(1), tgt.offset(1), inclusion_between(alg, 3, 2));
  const auto d = diagonalize_mono(src, tgt, f);
  EXPECT_TRUE(is_valid_diagonalization(src, tgt, f, d));
  EXPECT_EQ(d.diagonal, f);
  EXPECT_EQ(d.matching, (std::vector<std::size_t>{0, 1}));
}

TEST(DiagonalizeMono, PicksShortestTarget) {
  const auto alg = upper_triangular_algebra(3);
  const auto src = projective_sum(alg, {{1, 3}});
  const auto tgt = projective_sum(alg, {{1, 1}, {1, 2}});
  Matrix f(alg->field(), src.sum.module.dim(), tgt.sum.module.dim());
  f.set_block(0, 0, inclusion_between(alg, 3, 1));
  f.set_block(0, tgt.offset(1), inclusion_between(alg, 3, 2));
  const auto d = diagonalize_mono(src, tgt, f);
  EXPECT_TRUE(is_valid_diagonalization(src, tgt, f, d));
  EXPECT_EQ(d.matching, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(d.diagonal.block(0, 0, src.dim(0), tgt.dim(0)).is_zero());
}

TEST(DiagonalizeMono, RejectsNonInjective) {
  const auto alg = upper_triangular_algebra(3);
  const auto src = projective_sum(alg, {{1, 2}});
  const auto tgt = projective_sum(alg, {{1, 1}});
  EXPECT_THROW(diagonalize_mono(src, tgt, Matrix(alg->field(), src.sum.module.dim(), tgt.sum.module.dim())),
               precondition_error);
  Matrix bogus(alg->field(), src.sum.module.dim(), tgt.sum.module.dim());
  bogus(0, 0) = 1;
  if (!is_module_map(src.sum.module, tgt.sum.module, bogus)) {
    EXPECT_THROW(diagonalize_mono(src, tgt, bogus), precondition_error);
  }
}

TEST(DiagonalizeMono, RandomMapsOverBlockExtension) {
  const auto alg = block_extension(nakayama_qf(1, 2), {3});
  std::mt19937_64 rng(20240611);
  int ok = 0;
  for (int t = 0; t < 100; ++t) {
    const auto m = testkit::random_mono(alg, rng);
    const auto d = diagonalize_mono(m.source, m.target, m.f);
    if (is_valid_diagonalization(m.source, m.target, m.f, d)) ++ok;
  }
  EXPECT_EQ(ok, 100);
}

TEST(DiagonalizeMono, RandomMapsOverTwoBlocks) {
  const auto alg = block_extension(nakayama_qf(2, 2), {2, 1});
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto m = testkit::random_mono(alg, rng);
    EXPECT_TRUE(is_valid_diagonalization(m.source, m.target, m.f, diagonalize_mono(m.source, m.target, m.f)));
  }
}
