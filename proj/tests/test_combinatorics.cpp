#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "tiltcat/combinatorics.hpp"

using namespace tiltcat::comb;

namespace {

Coordinate C(int n, int a, int b) { return Coordinate(n, a, b); }

std::set<Coordinate> as_set(const std::vector<Coordinate>& v) { return {v.begin(), v.end()}; }

// Chords of a convex polygon cross iff their endpoints alternate around it.
bool geometric_cross(const Coordinate& x, const Coordinate& y) {
  auto inside = [](int v, int lo, int hi) { return lo < v && v < hi; };
  return inside(y.a(), x.a(), x.b()) != inside(y.b(), x.a(), x.b()) && x.a() != y.a() && x.a() != y.b() &&
         x.b() != y.a() && x.b() != y.b();
}

// All maximal pairwise non-crossing diagonal sets: every non-crossing set is
// reached by backtracking, and kept when no other diagonal fits.
std::vector<std::vector<Coordinate>> maximal_noncrossing(int n) {
  const auto d = all_diagonals(n);
  std::vector<std::vector<Coordinate>> out;
  std::vector<Coordinate> cur;
  auto fits = [&](const Coordinate& x) {
    for (const auto& y : cur)
      if (geometric_cross(x, y)) return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    bool maximal = true;
    for (const auto& x : d)
      if (std::find(cur.begin(), cur.end(), x) == cur.end() && fits(x)) maximal = false;
    if (maximal) out.push_back(cur);
    for (std::size_t i = start; i < d.size(); ++i) {
      if (!fits(d[i])) continue;
      cur.push_back(d[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Catalan numbers from the recurrence C_{n+1} = sum C_i C_{n-i}, indexed so
// that catalan(n) counts triangulations of an (n+2)-gon.
std::vector<BigInt> catalan_recurrence(int upto) {
  std::vector<BigInt> c{1};
  for (int m = 1; m <= upto; ++m) {
    BigInt s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c;
}

}  // namespace

TEST(Coordinate, RejectsInvalid) {
  EXPECT_THROW(C(3, 1, 2), std::invalid_argument);
  EXPECT_THROW(C(3, 0, 3), std::invalid_argument);
  EXPECT_THROW(C(3, 2, 6), std::invalid_argument);
  EXPECT_THROW(C(0, 1, 3), std::invalid_argument);
  EXPECT_NO_THROW(C(3, 1, 5));
  EXPECT_TRUE(C(3, 1, 5).is_projective_injective());
  EXPECT_TRUE(C(3, 2, 5).is_projective());
  EXPECT_FALSE(C(3, 2, 4).is_projective());
}

TEST(Crosses, Examples) {
  EXPECT_TRUE(crosses(C(3, 1, 3), C(3, 2, 4)));
  EXPECT_FALSE(crosses(C(3, 1, 3), C(3, 1, 4)));
  EXPECT_FALSE(crosses(C(3, 1, 3), C(3, 3, 5)));
  EXPECT_THROW(crosses(C(3, 1, 3), C(4, 2, 4)), std::invalid_argument);
}

TEST(Crosses, MatchesGeometry) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& x : all_coordinates(n))
      for (const auto& y : all_coordinates(n)) EXPECT_EQ(crosses(x, y), geometric_cross(x, y)) << x.str() << y.str();
}

TEST(EnumerateTriangulations, Examples) {
  EXPECT_THROW(enumerate_triangulations(0), std::invalid_argument);
  const auto t1 = enumerate_triangulations(1);
  ASSERT_EQ(t1.size(), 1u);
  EXPECT_TRUE(t1[0].diagonals().empty());
  EXPECT_EQ(enumerate_triangulations(3).size(), 5u);
  EXPECT_EQ(enumerate_triangulations(4).size(), 14u);
}

TEST(EnumerateTriangulations, FiveGonPictures) {
  std::set<std::set<Coordinate>> got;
  for (const auto& t : enumerate_triangulations(3)) got.insert(as_set(t.diagonals()));
  const std::set<std::set<Coordinate>> want{
      {C(3, 2, 4), C(3, 2, 5)}, {C(3, 1, 3), C(3, 1, 4)}, {C(3, 1, 3), C(3, 3, 5)},
      {C(3, 1, 4), C(3, 2, 4)}, {C(3, 2, 5), C(3, 3, 5)}};
  EXPECT_EQ(got, want);
}

TEST(EnumerateTriangulations, MatchesBruteForceMaximalSets) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::set<Coordinate>> brute, fast;
    for (const auto& s : maximal_noncrossing(n)) brute.insert(as_set(s));
    for (const auto& t : enumerate_triangulations(n)) fast.insert(as_set(t.diagonals()));
    EXPECT_EQ(brute, fast) << "n=" << n;
  }
}

TEST(EnumerateTriangulations, LexicographicAndDistinct) {
  const auto ts = enumerate_triangulations(5);
  for (std::size_t i = 1; i < ts.size(); ++i) EXPECT_LT(ts[i - 1].diagonals(), ts[i].diagonals());
}

TEST(EnumerateTriangulations, CountIsCatalanUpToNine) {
  const auto c = catalan_recurrence(9);
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(BigInt(enumerate_triangulations(n).size()), c[n]) << "n=" << n;
    EXPECT_EQ(catalan(n), c[n]);
  }
}

TEST(MaximalNoncrossing, AlwaysHasNMinusOneDiagonals) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : maximal_noncrossing(n)) EXPECT_EQ(static_cast<int>(s.size()), n - 1) << "n=" << n;
}

TEST(IsTriangulation, Examples) {
  EXPECT_TRUE(is_triangulation(3, {C(3, 2, 4), C(3, 2, 5)}));
  EXPECT_FALSE(is_triangulation(3, {C(3, 1, 3), C(3, 2, 4)}));
  EXPECT_FALSE(is_triangulation(3, {C(3, 1, 3)}));
  EXPECT_THROW(is_triangulation(3, {C(3, 1, 5), C(3, 2, 4)}), std::invalid_argument);
  EXPECT_THROW(Triangulation(3, {C(3, 1, 3)}), std::invalid_argument);
}

TEST(Catalan, Examples) {
  EXPECT_EQ(catalan(1), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(6), 132);
  EXPECT_EQ(catalan(6), BigInt(enumerate_triangulations(6).size()));
  EXPECT_EQ(catalan(60), BigInt("1583850964596120042686772779038896"));
}

TEST(Phi, Examples) {
  const auto m = phi(Triangulation(3, {C(3, 2, 4), C(3, 2, 5)}));
  EXPECT_EQ(as_set(m.summands()), (std::set<Coordinate>{C(3, 1, 5), C(3, 2, 4), C(3, 2, 5)}));
  EXPECT_EQ(as_set(phi(Triangulation(1, {})).summands()), (std::set<Coordinate>{C(1, 1, 3)}));
  EXPECT_EQ(as_set(phi(Triangulation(2, {C(2, 1, 3)})).summands()), (std::set<Coordinate>{C(2, 1, 4), C(2, 1, 3)}));
}

TEST(Phi, OutputsAreTilting) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      const auto s = phi(t).summands();
      EXPECT_EQ(static_cast<int>(s.size()), n);
      for (const auto& x : s)
        for (const auto& y : s) EXPECT_EQ(ext1_dim(x, y), 0);
    }
}

TEST(TnTiltingModule, RejectsBadSets) {
  EXPECT_THROW(TnTiltingModule(3, {C(3, 1, 5), C(3, 1, 3), C(3, 2, 4)}), std::invalid_argument);
  EXPECT_THROW(TnTiltingModule(3, {C(3, 2, 4), C(3, 2, 5), C(3, 3, 5)}), std::invalid_argument);
}

TEST(HomDim, Examples) {
  const int n = 4;
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l) EXPECT_EQ(hom_dim(C(n, j, n + 2), C(n, l, n + 2)), j >= l ? 1 : 0);
  for (const auto& x : all_coordinates(n)) EXPECT_EQ(hom_dim(x, x), 1);
  EXPECT_EQ(hom_dim(C(3, 1, 3), C(3, 2, 4)), 0);
}

TEST(Ext1Dim, Examples) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& x : all_coordinates(n)) {
      EXPECT_EQ(ext1_dim(x, x), 0);
      EXPECT_EQ(ext1_dim(x, C(n, 1, n + 2)), 0);
    }
  EXPECT_EQ(ext1_dim(C(3, 1, 3), C(3, 2, 4)), 1);
  EXPECT_EQ(ext1_dim(C(3, 2, 4), C(3, 1, 3)), 0);
}

TEST(Ext1Dim, SymmetricVanishingIsNonCrossing) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& x : all_coordinates(n))
      for (const auto& y : all_coordinates(n))
        EXPECT_EQ(ext1_dim(x, y) == 0 && ext1_dim(y, x) == 0, !crosses(x, y)) << x.str() << y.str();
}

TEST(ArQuiver, Examples) {
  const auto q1 = ar_quiver(1);
  EXPECT_EQ(q1.vertices.size(), 1u);
  EXPECT_TRUE(q1.arrows.empty());
  const auto q3 = ar_quiver(3);
  EXPECT_EQ(q3.vertices.size(), 6u);
  EXPECT_EQ(q3.arrows.size(), 6u);
  const auto q2 = ar_quiver(2);
  EXPECT_EQ(q2.vertices.size(), 3u);
  ASSERT_EQ(q2.arrows.size(), 2u);
  std::set<std::pair<Coordinate, Coordinate>> arrows;
  for (const auto& a : q2.arrows) arrows.insert({a.from, a.to});
  EXPECT_TRUE(arrows.count({C(2, 1, 3), C(2, 1, 4)}));
  EXPECT_TRUE(arrows.count({C(2, 1, 4), C(2, 2, 4)}));
}

TEST(ArQuiver, ArrowsReverseNonzeroMaps) {
  // drawn arrows point against the irreducible maps of right modules
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : ar_quiver(n).arrows) {
      EXPECT_EQ(hom_dim(a.to, a.from), 1);
      EXPECT_EQ(hom_dim(a.from, a.to), 0);
    }
}

TEST(DimensionVector, Examples) {
  EXPECT_EQ(dimension_vector(C(3, 1, 5)), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(dimension_vector(C(3, 1, 3)), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(dimension_vector(C(3, 2, 4)), (std::vector<int>{0, 1, 0}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& x : all_coordinates(n)) {
      const auto v = dimension_vector(x);
      EXPECT_EQ(std::accumulate(v.begin(), v.end(), 0), x.b() - x.a() - 1);
    }
}

TEST(CachedTriangulations, SameAsEnumeration) {
  const auto& a = cached_triangulations(5);
  const auto b = enumerate_triangulations(5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].diagonals(), b[i].diagonals());
  EXPECT_EQ(&cached_triangulations(5), &a);
}
