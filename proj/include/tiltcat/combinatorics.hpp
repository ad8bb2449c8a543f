#pragma once

// Polygon diagonals, triangulations and the coordinate system on
// indecomposable modules over the upper triangular matrix algebra T_n(K).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tiltcat::comb {

using BigInt = boost::multiprecision::cpp_int;

/// Label (a,b) of an indecomposable T_n(K)-module, equivalently a chord of
/// the (n+2)-gon with vertices 1..n+2. The module has composition factors
/// S_a, ..., S_{b-2} with top S_a. (1, n+2) is the projective-injective
/// module; every other coordinate is a proper diagonal.
class Coordinate {
 public:
  Coordinate(int n, int a, int b) : n_(n), a_(a), b_(b) {
    if (n < 1 || a < 1 || b > n + 2 || b - a < 2)
      throw std::invalid_argument("invalid coordinate (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") for n=" + std::to_string(n));
  }

  int n() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }

  bool is_projective_injective() const { return a_ == 1 && b_ == n_ + 2; }
  bool is_projective() const { return b_ == n_ + 2; }
  /// Composition length, b - a - 1.
  int length() const { return b_ - a_ - 1; }

  auto operator<=>(const Coordinate&) const = default;

  std::string str() const { return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")"; }

 private:
  int n_;
  int a_;
  int b_;
};

inline void require_same_n(const Coordinate& x, const Coordinate& y) {
  if (x.n() != y.n()) throw std::invalid_argument("coordinates for different n");
}

/// Strict interleaving of the chords; chords sharing an endpoint never cross.
inline bool crosses(const Coordinate& d1, const Coordinate& d2) {
  require_same_n(d1, d2);
  const int a = d1.a(), b = d1.b(), c = d2.a(), d = d2.b();
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

/// All valid coordinates for n, in lexicographic order.
inline std::vector<Coordinate> all_coordinates(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Coordinate> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n + 2; ++b) out.emplace_back(n, a, b);
  return out;
}

/// All diagonals of the (n+2)-gon, i.e. every coordinate except (1, n+2).
inline std::vector<Coordinate> all_diagonals(int n) {
  auto all = all_coordinates(n);
  std::erase_if(all, [](const Coordinate& c) { return c.is_projective_injective(); });
  return all;
}

/// dim Hom(M_x, M_y): 1 iff, for x=(a,b), y=(c,d), c <= a <= d-2 and d <= b.
inline int hom_dim(const Coordinate& x, const Coordinate& y) {
  require_same_n(x, y);
  const int a = x.a(), b = x.b(), c = y.a(), d = y.b();
  return (c <= a && a <= d - 2 && d <= b) ? 1 : 0;
}

/// dim Ext^1(M_x, M_y): 1 iff, for x=(a,b), y=(c,d), a < c < b < d.
inline int ext1_dim(const Coordinate& x, const Coordinate& y) {
  require_same_n(x, y);
  const int a = x.a(), b = x.b(), c = y.a(), d = y.b();
  return (a < c && c < b && b < d) ? 1 : 0;
}

/// Entry k (1-based) is 1 for a <= k <= b-2.
inline std::vector<int> dimension_vector(const Coordinate& x) {
  std::vector<int> v(static_cast<std::size_t>(x.n()), 0);
  for (int k = x.a(); k <= x.b() - 2; ++k) v[static_cast<std::size_t>(k - 1)] = 1;
  return v;
}

struct Arrow {
  Coordinate from;
  Coordinate to;
  auto operator<=>(const Arrow&) const = default;
};

struct ArQuiver {
  int n = 0;
  std::vector<Coordinate> vertices;
  std::vector<Arrow> arrows;
};

/// Arrows (i,j) -> (i,j+1) and (i,j) -> (i+1,j) whenever the target exists.
inline ArQuiver ar_quiver(int n) {
  ArQuiver q{n, all_coordinates(n), {}};
  for (const auto& v : q.vertices) {
    if (v.b() + 1 <= n + 2) q.arrows.push_back({v, Coordinate(n, v.a(), v.b() + 1)});
    if (v.b() - (v.a() + 1) >= 2) q.arrows.push_back({v, Coordinate(n, v.a() + 1, v.b())});
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

inline bool pairwise_noncrossing(const std::vector<Coordinate>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (crosses(s[i], s[j])) return false;
  return true;
}

/// True iff |S| = n-1 and the diagonals are pairwise non-crossing. A
/// pairwise non-crossing set of diagonals is a triangulation exactly when it
/// is maximal, and every maximal one has n-1 elements.
inline bool is_triangulation(int n, const std::vector<Coordinate>& s) {
  for (const auto& d : s) {
    if (d.n() != n) throw std::invalid_argument("is_triangulation: coordinate for a different n");
    if (d.is_projective_injective())
      throw std::invalid_argument("is_triangulation: (1,n+2) is an edge, not a diagonal");
  }
  std::vector<Coordinate> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return static_cast<int>(s.size()) == n - 1 && pairwise_noncrossing(s);
}

/// A triangulation of the (n+2)-gon, diagonals kept sorted.
class Triangulation {
 public:
  Triangulation(int n, std::vector<Coordinate> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    std::sort(diagonals_.begin(), diagonals_.end());
    if (!is_triangulation(n_, diagonals_))
      throw std::invalid_argument("diagonals do not triangulate the polygon");
  }

  int n() const { return n_; }
  const std::vector<Coordinate>& diagonals() const { return diagonals_; }

  auto operator<=>(const Triangulation&) const = default;

 private:
  int n_;
  std::vector<Coordinate> diagonals_;
};

namespace detail {

// Triangulations of the sub-polygon on consecutive vertices lo..hi, as lists
// of diagonals strictly inside it.
inline void triangulate(int n, int lo, int hi, std::vector<Coordinate>& current,
                        const std::function<void()>& emit);

inline void triangulate_pair(int n, int lo, int k, int hi, std::vector<Coordinate>& current,
                             const std::function<void()>& emit) {
  triangulate(n, lo, k, current, [&] { triangulate(n, k, hi, current, emit); });
}

inline void triangulate(int n, int lo, int hi, std::vector<Coordinate>& current,
                        const std::function<void()>& emit) {
  if (hi - lo < 2) {
    emit();
    return;
  }
  for (int k = lo + 1; k < hi; ++k) {
    const std::size_t mark = current.size();
    if (k - lo >= 2) current.emplace_back(n, lo, k);
    if (hi - k >= 2) current.emplace_back(n, k, hi);
    triangulate_pair(n, lo, k, hi, current, emit);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(mark), current.end());
  }
}

}  // namespace detail

/// All triangulations of the (n+2)-gon, lexicographic on sorted diagonal
/// lists; catalan(n) of them.
inline std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_triangulations: n must be positive");
  std::vector<std::vector<Coordinate>> raw;
  std::vector<Coordinate> current;
  detail::triangulate(n, 1, n + 2, current, [&] {
    auto t = current;
    std::sort(t.begin(), t.end());
    raw.push_back(std::move(t));
  });
  std::sort(raw.begin(), raw.end());
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(n, std::move(r));
  return out;
}

/// (1/(n+1)) * binomial(2n, n), exact.
inline BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative argument");
  BigInt c = 1;
  // C_{k+1} = C_k * 2(2k+1) / (k+2)
  for (int k = 0; k < n; ++k) c = c * (2 * (2 * k + 1)) / (k + 2);
  return c;
}

/// A basic tilting T_n(K)-module given by its n summand coordinates.
class TnTiltingModule {
 public:
  TnTiltingModule(int n, std::vector<Coordinate> summands) : n_(n), summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
    if (static_cast<int>(summands_.size()) != n_) throw std::invalid_argument("tilting module needs n summands");
    if (std::adjacent_find(summands_.begin(), summands_.end()) != summands_.end())
      throw std::invalid_argument("tilting module summands must be distinct");
    if (!std::binary_search(summands_.begin(), summands_.end(), Coordinate(n_, 1, n_ + 2)))
      throw std::invalid_argument("tilting module must contain (1,n+2)");
    if (!pairwise_noncrossing(summands_)) throw std::invalid_argument("tilting module summands cross");
  }

  int n() const { return n_; }
  const std::vector<Coordinate>& summands() const { return summands_; }

  auto operator<=>(const TnTiltingModule&) const = default;

 private:
  int n_;
  std::vector<Coordinate> summands_;
};

/// The diagonals of T together with (1, n+2).
inline TnTiltingModule phi(const Triangulation& t) {
  auto s = t.diagonals();
  s.emplace_back(t.n(), 1, t.n() + 2);
  return TnTiltingModule(t.n(), std::move(s));
}

/// Shared, lazily built triangulation lists for repeated enumeration.
inline const std::vector<Triangulation>& cached_triangulations(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Triangulation>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_triangulations(n)).first;
  return it->second;
}

}  // namespace tiltcat::comb
