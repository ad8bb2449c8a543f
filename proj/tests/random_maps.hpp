#pragma once

// Seeded random injective maps between sums of grid projectives, shared by
// the diagonalization tests and the acceptance run.

#include <random>
#include <vector>

#include "tiltcat/engine/diagonalize.hpp"

namespace tiltcat::testkit {

struct RandomMono {
  engine::ProjectiveSum source;
  engine::ProjectiveSum target;
  engine::Matrix f;
};

inline std::vector<engine::GridLabel> random_labels(const harada::HaradaType& h, std::size_t count,
                                                    std::mt19937_64& rng) {
  std::vector<engine::GridLabel> out;
  for (std::size_t s = 0; s < count; ++s) {
    const int block = std::uniform_int_distribution<int>(1, h.m())(rng);
    const int row = std::uniform_int_distribution<int>(1, h.size(block))(rng);
    out.push_back({block, row});
  }
  return out;
}

/// Draws sums of 1..max_summands projectives and a random element of the Hom
/// space until the map is injective.
inline RandomMono random_mono(const engine::AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_summands = 3) {
  const auto h = engine::grid_type(*alg);
  const auto& field = alg->field();
  std::uniform_int_distribution<engine::Elem> coeff(0, field.modulus() - 1);
  while (true) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_summands)(rng);
    const std::size_t l = std::uniform_int_distribution<std::size_t>(k, max_summands)(rng);
    auto source = engine::projective_sum(alg, random_labels(h, k, rng));
    auto target = engine::projective_sum(alg, random_labels(h, l, rng));
    if (source.sum.module.dim() > target.sum.module.dim()) continue;
    const auto basis = engine::hom_space(source.sum.module, target.sum.module);
    if (basis.empty()) continue;
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<engine::Elem> c(basis.size());
      for (auto& x : c) x = coeff(rng);
      auto f = engine::combine(basis, c, field, source.sum.module.dim(), target.sum.module.dim());
      if (engine::rank(f) == source.sum.module.dim()) return {std::move(source), std::move(target), std::move(f)};
    }
  }
}

}  // namespace tiltcat::testkit
