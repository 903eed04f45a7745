#pragma once

// Helpers shared by the test binaries: small independent re-derivations of
// quantities the library computes, a seeded generator and a surface census.

#include <cstdint>
#include <set>
#include <vector>

#include "toricseq/surface.hpp"

namespace testing_support {

using toricseq::Int;

/// splitmix64; deterministic across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  Int range(Int lo, Int hi) { return lo + static_cast<Int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

/// Intersection numbers of the D_i straight from the self-intersections.
inline std::vector<std::vector<Int>> intersection_matrix(const std::vector<Int>& selfints) {
  const std::size_t n = selfints.size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = selfints[i];
    m[i][(i + 1) % n] = m[(i + 1) % n][i] = 1;
  }
  return m;
}

inline Int expand(const std::vector<Int>& selfints, const std::vector<Int>& a, const std::vector<Int>& b) {
  const auto m = intersection_matrix(selfints);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * m[i][j] * b[j];
  return s;
}

struct Vec2 {
  Int x, y;
  bool operator==(const Vec2&) const = default;
};

/// v_{i+1} = -a_i v_i - v_{i-1} from v_0 = (1,0), v_1 = (0,1); returns n + 2 vectors.
inline std::vector<Vec2> ray_recursion(const std::vector<Int>& a) {
  std::vector<Vec2> v{{1, 0}, {0, 1}};
  for (std::size_t i = 1; i <= a.size(); ++i) {
    const Vec2 cur = v[i], prev = v[i - 1];
    const Int ai = a[i % a.size()];
    v.push_back({-ai * cur.x - prev.x, -ai * cur.y - prev.y});
  }
  return v;
}

inline std::vector<Int> blow_up_formula(const std::vector<Int>& a, std::size_t p) {
  std::vector<Int> out = a;
  const std::size_t q = (p + 1) % a.size();
  out[p] -= 1;
  out[q] -= 1;
  if (q == 0)
    out.push_back(-1);
  else
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(q), -1);
  return out;
}

inline std::vector<Int> normal_form(const std::vector<Int>& a) {
  std::vector<Int> best;
  const std::size_t n = a.size();
  for (int flip = 0; flip < 2; ++flip)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Int> s;
      for (std::size_t t = 0; t < n; ++t) s.push_back(a[flip ? (k + n - t) % n : (k + t) % n]);
      if (best.empty() || s < best) best = s;
    }
  return best;
}

/// Every surface with at most `max_rays` rays reachable by torus-fixed
/// blow-ups from F_0, ..., F_{max_r}, one representative per normal form.
inline std::vector<std::vector<Int>> surface_census(std::size_t max_rays, Int max_r = 3) {
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> frontier;
  for (Int r = 0; r <= max_r; ++r) {
    auto f = normal_form({r, 0, -r, 0});
    if (seen.insert(f).second) frontier.push_back(f);
  }
  std::vector<std::vector<Int>> all = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& s : frontier) {
      if (s.size() >= max_rays) continue;
      for (std::size_t p = 0; p < s.size(); ++p) {
        auto b = normal_form(blow_up_formula(s, p));
        if (seen.insert(b).second) {
          next.push_back(b);
          all.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace testing_support
