#include "toricseq/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace toricseq {
namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int max_ray_norm(const ToricSurface& s) {
  Int m = 1;
  for (const Ray& v : s.rays()) m = std::max({m, std::abs(v.x), std::abs(v.y)});
  return m;
}

// |c_i| + |c_j| for the two largest coefficients.
Int two_largest(const std::vector<Int>& c) {
  std::vector<Int> a;
  a.reserve(c.size());
  for (Int x : c) a.push_back(std::abs(x));
  std::partial_sort(a.begin(), a.begin() + 2, a.end(), std::greater<>());
  return checked::add(a[0], a[1]);
}

}  // namespace

Int euler_char(const DivisorClass& d) {
  const auto k = canonical_class(d.surface());
  const Int twice = checked::sub(pairing(d, d), pairing(d, k));
  if (twice % 2 != 0) fail(ErrorCode::InternalInconsistency, "D^2 - D.K is odd");
  return 1 + twice / 2;
}

Int h0(const DivisorClass& d) {
  const auto& rays = d.surface().rays();
  const auto& c = d.coeffs();
  // Every vertex of the section polygon solves two of the equations
  // <m, v_i> = -c_i, so Cramer's rule bounds it by this.
  const Int bound = checked::mul(two_largest(c), max_ray_norm(d.surface()));
  Int count = 0;
  for (Int x = -bound; x <= bound; ++x) {
    Int lo = -bound, hi = bound;
    bool empty = false;
    for (std::size_t i = 0; i < rays.size() && !empty; ++i) {
      // v.x * x + v.y * y >= -c_i
      const Int rhs = checked::sub(checked::neg(c[i]), checked::mul(rays[i].x, x));
      if (rays[i].y > 0)
        lo = std::max(lo, ceil_div(rhs, rays[i].y));
      else if (rays[i].y < 0)
        hi = std::min(hi, floor_div(rhs, rays[i].y));
      else if (rhs > 0)
        empty = true;
    }
    if (!empty && hi >= lo) count += hi - lo + 1;
  }
  return count;
}

CohomologyDims cohomology_dims(const DivisorClass& d) {
  const auto k = canonical_class(d.surface());
  CohomologyDims out;
  out.h0 = h0(d);
  out.h2 = h0(k - d);
  out.h1 = checked::sub(checked::add(out.h0, out.h2), euler_char(d));
  if (out.h1 < 0) fail(ErrorCode::InternalInconsistency, "negative h1");
  return out;
}

bool vanishes_totally(const DivisorClass& d) {
  // h0 and h2 first: they are cheap and usually decide the question.
  if (h0(d) != 0) return false;
  const auto k = canonical_class(d.surface());
  if (h0(k - d) != 0) return false;
  return euler_char(d) == 0;
}

Int oracle_box_bound(const DivisorClass& d) {
  // Contributing characters lie in bounded cells of the arrangement
  // <m, v_i> = -c_i - 1/2; their vertices satisfy this by Cramer's rule.
  return checked::mul(checked::add(two_largest(d.coeffs()), 1), max_ray_norm(d.surface()));
}

CohomologyDims oracle_cohomology_dims(const DivisorClass& d, std::optional<Int> bound) {
  const Int b = bound.value_or(oracle_box_bound(d));
  const auto& rays = d.surface().rays();
  const auto& c = d.coeffs();
  const std::size_t n = rays.size();
  std::vector<char> negative(n);
  CohomologyDims out;
  for (Int x = -b; x <= b; ++x)
    for (Int y = -b; y <= b; ++y) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Int value = checked::add(checked::mul(x, rays[i].x), checked::mul(y, rays[i].y));
        negative[i] = value < -c[i];
        count += negative[i];
      }
      if (count == 0) {
        ++out.h0;
      } else if (count == n) {
        ++out.h2;
      } else {
        Int arcs = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (negative[i] && !negative[(i + n - 1) % n]) ++arcs;
        out.h1 += arcs - 1;
      }
    }
  return out;
}

}  // namespace toricseq
