#include "toricseq/isometry.hpp"

#include <cmath>
#include <deque>
#include <string>
#include <unordered_set>

namespace toricseq {
namespace {

void require_rank(const ToricSurface& s) {
  if (s.pic_rank() < 3 || s.pic_rank() > 9)
    fail(ErrorCode::RankOutOfRange, "Picard rank " + std::to_string(s.pic_rank()) + " is outside 3..9");
}

Int isqrt(Int v) {
  auto r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Integer vectors of length `slots` with the given sum and sum of squares.
void fill_slots(std::vector<Int>& prefix, std::size_t slots, Int sum, Int squares,
                std::vector<std::vector<Int>>& out) {
  if (slots == 0) {
    if (sum == 0 && squares == 0) out.push_back(prefix);
    return;
  }
  const Int bound = isqrt(squares);
  for (Int d = -bound; d <= bound; ++d) {
    const Int rest_sum = sum - d;
    const Int rest_sq = squares - d * d;
    // Cauchy-Schwarz on the remaining slots.
    if (rest_sum * rest_sum > static_cast<Int>(slots - 1) * rest_sq) continue;
    prefix.push_back(d);
    fill_slots(prefix, slots - 1, rest_sum, rest_sq, out);
    prefix.pop_back();
  }
}

Int good_pairing(std::span<const Int> x, std::span<const Int> y) {
  Int s = checked::mul(x[0], y[0]);
  for (std::size_t i = 1; i < x.size(); ++i) s = checked::sub(s, checked::mul(x[i], y[i]));
  return s;
}

Isometry from_good_images(const ToricSurface& surface, const GoodBasis& basis,
                          const std::vector<std::vector<Int>>& images) {
  const std::size_t rho = surface.pic_rank();
  IntMatrix m(rho);
  for (std::size_t j = 0; j < rho; ++j) {
    const auto d = basis.coords(surface.divisor(j + 2));
    std::vector<Int> image(rho, 0);
    for (std::size_t k = 0; k < rho; ++k)
      for (std::size_t t = 0; t < rho; ++t) image[t] = checked::fma(image[t], d[k], images[k][t]);
    const auto col = basis.from_coords(image).pic_coords();
    for (std::size_t r = 0; r < rho; ++r) m(r, j) = col[r];
  }
  return Isometry(std::move(m));
}

}  // namespace

DivisorClass Isometry::apply(const DivisorClass& d) const {
  if (d.surface().pic_rank() != pic_rank()) fail(ErrorCode::SurfaceMismatch, "isometry has the wrong rank");
  const auto coords = matrix_.apply(d.pic_coords());
  return d.surface().from_pic_coords(coords);
}

bool is_k_isometry(const ToricSurface& surface, const Isometry& w) {
  if (w.pic_rank() != surface.pic_rank()) return false;
  const IntMatrix g = surface.gram();
  const IntMatrix& m = w.matrix();
  if (!(m.transpose() * g * m == g)) return false;
  const auto k = canonical_class(surface);
  if (!(w.apply(k) == k)) return false;
  const Int det = determinant(m);
  return det == 1 || det == -1;
}

std::vector<DivisorClass> classes_with(const GoodBasis& basis, Int square, Int k_degree) {
  const std::size_t l = basis.elements.size() - 1;
  if (l >= 9) fail(ErrorCode::RankOutOfRange, "K^2 <= 0: the search would not terminate");
  // In the good basis K = -3H + sum R_i, so for D = d0 H + sum d_i R_i:
  //   sum d_i = -k_degree - 3 d0,  sum d_i^2 = d0^2 - square.
  auto feasible = [&](Int d0) {
    const Int sum = -k_degree - 3 * d0;
    const Int sq = d0 * d0 - square;
    return sq >= 0 && sum * sum <= static_cast<Int>(l) * sq;
  };
  const Int vertex = static_cast<Int>(std::floor(-3.0 * static_cast<double>(k_degree) / static_cast<double>(9 - l)));
  Int lo = vertex, hi = vertex;
  while (feasible(lo - 1) || feasible(lo - 2)) --lo;
  while (feasible(hi + 1) || feasible(hi + 2)) ++hi;
  std::vector<DivisorClass> out;
  for (Int d0 = lo - 2; d0 <= hi + 2; ++d0) {
    if (!feasible(d0)) continue;
    std::vector<std::vector<Int>> tails;
    std::vector<Int> prefix;
    fill_slots(prefix, l, -k_degree - 3 * d0, d0 * d0 - square, tails);
    for (auto& t : tails) {
      std::vector<Int> coords{d0};
      coords.insert(coords.end(), t.begin(), t.end());
      out.push_back(basis.from_coords(coords));
    }
  }
  return out;
}

std::vector<DivisorClass> roots(const ToricSurface& surface) {
  require_rank(surface);
  const GoodBasis basis = good_basis(surface);
  auto found = classes_with(basis, -2, 0);
  const auto k = canonical_class(surface);
  for (const auto& d : found)
    if (pairing(d, d) != -2 || pairing(d, k) != 0)
      fail(ErrorCode::InternalInconsistency, "root search produced a non-root");
  return found;
}

Isometry reflection(const DivisorClass& root) {
  const ToricSurface& s = root.surface();
  if (pairing(root, root) != -2 || pairing(root, canonical_class(s)) != 0)
    fail(ErrorCode::InvalidInput, "not a root");
  const std::size_t rho = s.pic_rank();
  const auto r = root.pic_coords();
  IntMatrix m = IntMatrix::identity(rho);
  for (std::size_t j = 0; j < rho; ++j) {
    const Int c = pairing(root, s.divisor(j + 2));
    for (std::size_t i = 0; i < rho; ++i) m(i, j) = checked::fma(m(i, j), c, r[i]);
  }
  return Isometry(std::move(m));
}

std::vector<Isometry> weyl_group(const ToricSurface& surface, std::size_t cap) {
  require_rank(surface);
  std::vector<Isometry> generators;
  for (const auto& r : roots(surface)) generators.push_back(reflection(r));
  std::vector<Isometry> elements{Isometry::identity(surface.pic_rank())};
  std::unordered_set<Isometry> seen(elements.begin(), elements.end());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Isometry next = s * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          fail(ErrorCode::SizeCapExceeded, "Weyl group exceeds " + std::to_string(cap) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::vector<Isometry> all_k_isometries(const ToricSurface& surface, std::size_t cap) {
  require_rank(surface);
  const GoodBasis basis = good_basis(surface);
  const std::size_t rho = surface.pic_rank();
  auto to_coords = [&](const std::vector<DivisorClass>& classes) {
    std::vector<std::vector<Int>> out;
    for (const auto& c : classes) out.push_back(basis.coords(c));
    return out;
  };
  // H goes to a class with H^2 = 1, H.K = -3; each R_i to one with R^2 = -1, R.K = -1.
  const auto h_images = to_coords(classes_with(basis, 1, -3));
  const auto r_images = to_coords(classes_with(basis, -1, -1));

  std::vector<Isometry> out;
  std::vector<std::vector<Int>> chosen;
  auto extend = [&](auto&& self) -> void {
    if (chosen.size() == rho) {
      if (out.size() >= cap) fail(ErrorCode::SizeCapExceeded, "more than " + std::to_string(cap) + " isometries");
      out.push_back(from_good_images(surface, basis, chosen));
      return;
    }
    for (const auto& cand : r_images) {
      bool orthogonal = true;
      for (const auto& c : chosen) orthogonal = orthogonal && good_pairing(c, cand) == 0;
      if (!orthogonal) continue;
      chosen.push_back(cand);
      self(self);
      chosen.pop_back();
    }
  };
  for (const auto& h : h_images) {
    chosen = {h};
    extend(extend);
  }
  for (const auto& w : out)
    if (!is_k_isometry(surface, w)) fail(ErrorCode::InternalInconsistency, "enumerated map is not a K-isometry");
  return out;
}

std::string_view weyl_type(std::size_t pic_rank) {
  switch (pic_rank) {
    case 3: return "A1";
    case 4: return "A1 x A2";
    case 5: return "A4";
    case 6: return "D5";
    case 7: return "E6";
    case 8: return "E7";
    case 9: return "E8";
    default: return "";
  }
}

ToricSystem apply(const Isometry& w, const ToricSystem& system) {
  std::vector<DivisorClass> entries;
  entries.reserve(system.size());
  for (const auto& a : system.entries()) entries.push_back(w.apply(a));
  return ToricSystem::validate(system.surface(), std::move(entries));
}

std::vector<ToricSystem> orbit(const ToricSystem& system, std::span<const Isometry> group) {
  std::vector<ToricSystem> out;
  std::unordered_set<ToricSystem> seen;
  for (const auto& w : group) {
    ToricSystem image = apply(w, system);
    if (seen.insert(image).second) out.push_back(std::move(image));
  }
  return out;
}

}  // namespace toricseq
