#pragma once

// Toric systems: cyclic sequences of divisor classes with the intersection
// pattern and anticanonical sum of the torus-invariant divisors.

#include <optional>
#include <vector>

#include "toricseq/surface.hpp"

namespace toricseq {

class ToricSystem {
 public:
  /// Throws BadLength, BadIntersection, BadCanonicalSum or SurfaceMismatch.
  static ToricSystem validate(ToricSurface surface, std::vector<DivisorClass> entries);

  /// The standard system (D_0, ..., D_{n-1}).
  static ToricSystem standard(const ToricSurface& surface);

  const ToricSurface& surface() const noexcept { return surface_; }
  const std::vector<DivisorClass>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const DivisorClass& operator[](std::size_t i) const { return entries_.at(i); }

  /// A_i^2 for each entry.
  std::vector<Int> squares() const;

  friend bool operator==(const ToricSystem& a, const ToricSystem& b) {
    return a.surface_ == b.surface_ && a.entries_ == b.entries_;
  }
  std::size_t hash() const;

 private:
  ToricSystem(ToricSurface surface, std::vector<DivisorClass> entries)
      : surface_(std::move(surface)), entries_(std::move(entries)) {}

  ToricSurface surface_;
  std::vector<DivisorClass> entries_;
};

/// Line bundles (E_0, ..., E_{n-1}).
struct LineBundleSequence {
  ToricSurface surface;
  std::vector<DivisorClass> entries;

  /// Tensors by -E_0 so that the first entry is trivial.
  LineBundleSequence normalized() const;
  friend bool operator==(const LineBundleSequence&, const LineBundleSequence&) = default;
};

/// A_i = E_{i+1} - E_i for i < n-1, and A_{n-1} = -K - (A_0 + ... + A_{n-2}).
ToricSystem from_sequence(const LineBundleSequence& sequence);

/// E_0 = 0, E_{i+1} = E_i + A_i.
LineBundleSequence to_sequence(const ToricSystem& system);

/// TV(A_0^2, ..., A_{n-1}^2).
ToricSurface associated_surface(const ToricSystem& system);

/// (A_k, ..., A_{n-1}, A_0, ..., A_{k-1}); negative k rotates the other way.
ToricSystem rotate(const ToricSystem& system, std::ptrdiff_t k);

/// (A_{n-1}, ..., A_0).
ToricSystem mirror(const ToricSystem& system);

struct Augmentation {
  ToricSystem system;
  Blowup blowup;
  std::size_t inserted_at;
};

/// Augmentation at position i along the blow-up of D_p ∩ D_{p+1}:
/// (..., A_i - R, R, A_{i+1} - R, A_{i+2}, ...). For i = n-1 the new entry
/// is appended and A_0 loses R.
Augmentation augment(const ToricSystem& system, std::size_t blowup_position, std::size_t i);

/// Inserts R at index `insert_at` (0 ..= n) of the pulled-back system and
/// subtracts R from its two cyclic neighbours.
ToricSystem augment_at(const ToricSystem& system, const Blowup& blowup, std::size_t insert_at);

struct Deaugmentation {
  ToricSystem system;
  BlowdownMap blowdown;
  std::size_t position;

  DivisorClass exceptional() const { return blowdown.exceptional(); }
  /// Augmentation that recreates the original system.
  ToricSystem undo() const { return augment_at(system, blowdown.inverse(), position); }
};

/// Removes entry `position`, which must equal R = [D_ray] for a (-1)-ray,
/// adds R to both neighbours and pushes everything down to the contraction.
/// Throws NotDeaugmentable.
Deaugmentation deaugment(const ToricSystem& system, std::size_t position, std::size_t ray);
std::optional<Deaugmentation> try_deaugment(const ToricSystem& system, std::size_t position, std::size_t ray);

/// No Ext from later to earlier line bundles: every consecutive sum
/// -(A_i + ... + A_j), 0 <= i <= j <= n-2, has vanishing cohomology.
bool is_exceptional(const ToricSystem& system);

enum class HirzebruchKind { A, ATilde };

/// One of the two families of toric systems on F_r, written in P (fibre,
/// P^2 = 0) and Q (Q^2 = r, P.Q = 1).
struct HirzebruchSystemClass {
  HirzebruchKind kind;
  Int r;
  Int i;
  DivisorClass p;
  DivisorClass q;
};

/// F_r = TV(r, 0, -r, 0) with P = D_1 and Q = D_0.
ToricSurface hirzebruch_surface(Int r);

/// A_{r,i} = (P, iP + Q, P, -(r+i)P + Q), or for even r
/// Ã_{r,i} = (S, P + iS, S, P - iS) with S = Q - (r/2)P, on hirzebruch_surface(r).
ToricSystem hirzebruch_system(HirzebruchKind kind, Int r, Int i);

/// Every (kind, r, i) that matches the system up to rotation and mirror, in
/// canonical form (i >= -r-i for A, i >= 0 for Ã), family A listed first.
std::vector<HirzebruchSystemClass> hirzebruch_forms(const ToricSystem& system);

/// First entry of hirzebruch_forms. Throws NotHirzebruch or Unclassifiable.
HirzebruchSystemClass classify_hirzebruch(const ToricSystem& system);

/// Which members of the two families are exceptional: all A_{r,i}; Ã_{r,i}
/// only for r = 0 or i = 0.
bool hirzebruch_family_exceptional(HirzebruchKind kind, Int r, Int i);

}  // namespace toricseq

template <>
struct std::hash<toricseq::ToricSystem> {
  std::size_t operator()(const toricseq::ToricSystem& s) const { return s.hash(); }
};
