#pragma once

// K-isometries of Pic(X): the Weyl group generated by reflections in the
// roots {D : D^2 = -2, D.K = 0}, an independent brute-force enumeration of
// all isometries fixing K, and orbits of toric systems under them.

#include <span>
#include <string_view>
#include <vector>

#include "toricseq/linalg.hpp"
#include "toricseq/surface.hpp"
#include "toricseq/systems.hpp"

namespace toricseq {

/// Integer automorphism of Pic(X), as a matrix acting on coordinates in the
/// fixed basis (D_2, ..., D_{n-1}). Column j is the image of D_{j+2}.
class Isometry {
 public:
  explicit Isometry(IntMatrix matrix) : matrix_(std::move(matrix)) {}
  static Isometry identity(std::size_t pic_rank) { return Isometry(IntMatrix::identity(pic_rank)); }

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t pic_rank() const noexcept { return matrix_.dim(); }

  DivisorClass apply(const DivisorClass& d) const;

  friend Isometry operator*(const Isometry& a, const Isometry& b) { return Isometry(a.matrix_ * b.matrix_); }
  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  IntMatrix matrix_;
};

constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// Preserves the pairing and fixes K.
bool is_k_isometry(const ToricSurface& surface, const Isometry& w);

/// Integer vectors D with D^2 = square and D.K = k_degree, found by bounded
/// search in good-basis coordinates. Finite whenever K^2 > 0.
std::vector<DivisorClass> classes_with(const GoodBasis& basis, Int square, Int k_degree);

/// All roots, in a deterministic order. Throws RankOutOfRange unless 3 <= rho <= 9.
std::vector<DivisorClass> roots(const ToricSurface& surface);

/// s(D') = D' + (D.D') D. Throws InvalidInput if `root` is not a root.
Isometry reflection(const DivisorClass& root);

/// Closure of the root reflections under composition, identity first.
/// Throws RankOutOfRange or SizeCapExceeded.
std::vector<Isometry> weyl_group(const ToricSurface& surface, std::size_t cap = kDefaultGroupCap);

/// Every isometry fixing K, by backtracking over images of a good basis.
/// Does not use roots or reflections.
std::vector<Isometry> all_k_isometries(const ToricSurface& surface, std::size_t cap = kDefaultGroupCap);

/// Weyl group type for ranks 3..9 (informational).
std::string_view weyl_type(std::size_t pic_rank);

ToricSystem apply(const Isometry& w, const ToricSystem& system);

/// Images w.A for each w, first occurrences kept, in group order.
std::vector<ToricSystem> orbit(const ToricSystem& system, std::span<const Isometry> group);

}  // namespace toricseq

template <>
struct std::hash<toricseq::Isometry> {
  std::size_t operator()(const toricseq::Isometry& w) const noexcept { return std::hash<toricseq::IntMatrix>{}(w.matrix()); }
};
