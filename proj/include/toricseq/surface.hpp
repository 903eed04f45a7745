#pragma once

// Smooth projective toric surfaces given by their cyclic self-intersection
// numbers, together with the Picard lattice and its intersection pairing.
//
// Ray and divisor indices are 0-based throughout the C++ API: D_0 .. D_{n-1}.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "toricseq/checked.hpp"
#include "toricseq/linalg.hpp"

namespace toricseq {

struct Ray {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const Ray&, const Ray&) = default;
};

class DivisorClass;

/// Immutable, cheaply copyable handle. Two surfaces compare equal iff their
/// self-intersection sequences agree entry by entry (the labelling matters).
class ToricSurface {
 public:
  /// Rebuilds the fan from v_0 = (1,0), v_1 = (0,1) through
  /// v_{i-1} + a_i v_i + v_{i+1} = 0. Throws InvalidFan if the fan does not
  /// close up or winds around the origin more than once.
  static ToricSurface from_selfints(std::span<const Int> selfints);
  static ToricSurface from_selfints(std::initializer_list<Int> selfints) {
    return from_selfints(std::span<const Int>(selfints.begin(), selfints.size()));
  }

  const std::vector<Int>& selfints() const noexcept { return data_->selfints; }
  const std::vector<Ray>& rays() const noexcept { return data_->rays; }
  Int selfint(std::size_t i) const { return data_->selfints.at(i); }

  std::size_t num_rays() const noexcept { return data_->selfints.size(); }
  std::size_t k0_rank() const noexcept { return num_rays(); }
  std::size_t pic_rank() const noexcept { return num_rays() - 2; }

  bool adjacent(std::size_t i, std::size_t j) const noexcept;

  DivisorClass divisor(std::size_t i) const;
  DivisorClass zero() const;
  DivisorClass make_class(std::vector<Int> coeffs) const;

  /// Classes from coordinates in the fixed Picard basis (D_2, ..., D_{n-1}).
  DivisorClass from_pic_coords(std::span<const Int> coords) const;

  /// Classes from coordinates over a declared basis of torus-invariant
  /// divisors. The two omitted rays must form a lattice basis.
  DivisorClass from_basis_coords(std::span<const std::size_t> basis, std::span<const Int> coords) const;

  /// Gram matrix of the pairing in the fixed Picard basis.
  IntMatrix gram() const;

  friend bool operator==(const ToricSurface& a, const ToricSurface& b) {
    return a.data_ == b.data_ || a.data_->selfints == b.data_->selfints;
  }

 private:
  struct Data {
    std::vector<Int> selfints;
    std::vector<Ray> rays;
  };
  explicit ToricSurface(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// An element of Pic(X), kept as an integer combination of the D_i.
/// Equality is linear equivalence.
class DivisorClass {
 public:
  DivisorClass(ToricSurface surface, std::vector<Int> coeffs);

  const ToricSurface& surface() const noexcept { return surface_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  /// Representative with vanishing coefficients on D_0 and D_1.
  DivisorClass reduced() const;

  /// Coordinates in the fixed basis (D_2, ..., D_{n-1}) of Pic(X).
  std::vector<Int> pic_coords() const;

  /// Coordinates over the declared basis; see ToricSurface::from_basis_coords.
  std::vector<Int> basis_coords(std::span<const std::size_t> basis) const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(const DivisorClass& a);
  friend DivisorClass operator*(Int k, const DivisorClass& a);

  /// Classes on different surfaces are never equal.
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

  std::size_t hash() const;

 private:
  ToricSurface surface_;
  std::vector<Int> coeffs_;
};

/// Intersection number. Throws SurfaceMismatch across surfaces.
Int pairing(const DivisorClass& d, const DivisorClass& e);

/// K_X = -(D_0 + ... + D_{n-1}).
DivisorClass canonical_class(const ToricSurface& surface);

/// Result of blowing up the torus-fixed point D_p ∩ D_{p+1}. Old rays keep
/// their relative order; the new ray sits between them at `new_ray`.
struct Blowup {
  ToricSurface source;
  ToricSurface target;
  std::size_t position;
  std::size_t new_ray;

  DivisorClass exceptional() const { return target.divisor(new_ray); }
  std::size_t new_index(std::size_t old_index) const;
  DivisorClass pullback(const DivisorClass& d) const;
};

/// New ray at position+1 (appended at the end for the wrap-around point).
Blowup blow_up(const ToricSurface& surface, std::size_t position);

/// Same, with an explicit index for the new ray: position+1, or 0 for the
/// wrap-around point.
Blowup blow_up(const ToricSurface& surface, std::size_t position, std::size_t new_ray);

/// Contraction of the (-1)-ray `contracted` of `source`; identifies the
/// orthogonal complement of the exceptional class with Pic(target).
struct BlowdownMap {
  ToricSurface source;
  ToricSurface target;
  std::size_t contracted;

  DivisorClass exceptional() const { return source.divisor(contracted); }
  /// Index in `source` of ray `target_index` of `target`.
  std::size_t source_index(std::size_t target_index) const;
  /// Throws NotOrthogonal unless d.R = 0.
  DivisorClass push(const DivisorClass& d) const;
  DivisorClass pull(const DivisorClass& d) const;
  /// The blow-up of `target` that recreates `source` with its labelling.
  Blowup inverse() const;
};

BlowdownMap blow_down(const ToricSurface& surface, std::size_t ray);

/// Orthogonal basis (H, R_1, ..., R_l) with Gram matrix diag(1, -1, ..., -1).
struct GoodBasis {
  std::vector<DivisorClass> elements;
  /// Contracted rays, as indices into the original surface, in contraction order.
  std::vector<std::size_t> blowdown_path;
  Int terminal_r = 0;

  /// (D.H, -D.R_1, ..., -D.R_l).
  std::vector<Int> coords(const DivisorClass& d) const;
  DivisorClass from_coords(std::span<const Int> coords) const;
};

/// Good basis along an explicit blow-down path (indices into `surface`).
/// Throws InvalidPath, NotContractible or EvenTerminalHirzebruch.
GoodBasis good_basis(const ToricSurface& surface, std::span<const std::size_t> path);

/// Depth-first search for a path to an odd Hirzebruch surface, rays tried in
/// ascending order. The projective plane gets the basis (D_0) and terminal_r 0.
GoodBasis good_basis(const ToricSurface& surface);

/// Lattice automorphism of the fan: v_i is sent to v_{perm[i]}.
struct FanAutomorphism {
  std::array<Int, 4> lattice_map;  // row-major 2x2
  std::vector<std::size_t> ray_permutation;

  /// Induced map on Pic(X): D_i -> D_{perm[i]}.
  DivisorClass apply(const DivisorClass& d) const;
  bool is_identity() const;
};

std::vector<FanAutomorphism> fan_automorphisms(const ToricSurface& surface);

/// Lexicographically least sequence among all rotations and reversals.
std::vector<Int> normalize(std::span<const Int> selfints);

/// Indices i with a_i = value.
std::vector<std::size_t> rays_with_selfint(const ToricSurface& surface, Int value);

}  // namespace toricseq

template <>
struct std::hash<toricseq::DivisorClass> {
  std::size_t operator()(const toricseq::DivisorClass& d) const { return d.hash(); }
};
