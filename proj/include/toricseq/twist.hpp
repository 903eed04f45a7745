#pragma once

// Spherical twists along torus-invariant (-2)-curves, through their action
// on Pic(X) and on line bundles.

#include <optional>
#include <vector>

#include "toricseq/isometry.hpp"
#include "toricseq/systems.hpp"

namespace toricseq {

/// Twist by O_C(-1) for the (-2)-curve C = D_{curve_ray}.
struct TwistByCurve {
  std::size_t curve_ray;
  DivisorClass curve;
};

/// Throws NotAMinusTwoCurve unless a_ray = -2.
TwistByCurve twist_at(const ToricSurface& surface, std::size_t ray);

std::vector<std::size_t> minus_two_rays(const ToricSurface& surface);

/// chi(O_C(-1), O(D)) = -C.D.
Int euler_pair_chi(const TwistByCurve& twist, const DivisorClass& d);

/// D + (C.D) C, the reflection in the root C.
DivisorClass twist_class(const TwistByCurve& twist, const DivisorClass& d);

/// The same map as an isometry matrix.
Isometry twist_isometry(const TwistByCurve& twist);

enum class TwistCase {
  Unchanged,  // C.D = 0
  AddCurve,   // C.D = 1, image L(C)
};

struct LineBundleTwist {
  DivisorClass result;
  TwistCase twist_case;
};

/// Image of O(D) when it is again a line bundle; nullopt otherwise.
std::optional<LineBundleTwist> try_twist_line_bundle(const TwistByCurve& twist, const DivisorClass& d);

/// Throws NotALineBundle when C.D is neither 0 nor 1.
LineBundleTwist twist_line_bundle(const TwistByCurve& twist, const DivisorClass& d);

struct SequenceTwist {
  LineBundleSequence sequence;
  std::vector<TwistCase> cases;

  /// Entries that picked up the curve.
  std::vector<std::size_t> applied_positions() const;
};

/// Twists every entry and renormalises so the first is trivial.
/// Throws NotALineBundle naming the first failing entry.
SequenceTwist twist_sequence(const TwistByCurve& twist, const LineBundleSequence& sequence);
std::optional<SequenceTwist> try_twist_sequence(const TwistByCurve& twist, const LineBundleSequence& sequence);

}  // namespace toricseq
