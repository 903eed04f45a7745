#pragma once

// Constructibility of exceptional toric systems (repeated de-augmentation
// down to a Hirzebruch surface) and fullness certificates built from
// constructibility plus spherical twists.

#include <optional>
#include <shared_mutex>
#include <unordered_set>
#include <vector>

#include "toricseq/systems.hpp"
#include "toricseq/twist.hpp"

namespace toricseq {

/// One de-augmentation: `surface` is the surface before contracting
/// `contracted_ray`, and entry `position` of the system there was R.
struct ConstructionStep {
  ToricSurface surface;
  std::size_t contracted_ray;
  std::size_t position;
  DivisorClass exceptional;
};

struct ConstructibilityWitness {
  std::vector<ConstructionStep> steps;  // top surface first
  ToricSystem base;
  HirzebruchSystemClass base_class;

  /// Augments `base` along the reversed steps.
  ToricSystem replay() const;
};

struct KeyHash {
  std::size_t operator()(const std::vector<Int>& key) const noexcept { return hash_values(key); }
};

/// Depth-first search over (-1)-rays and positions in ascending order,
/// first witness wins. Failures are cached under a key that is invariant
/// under relabelling the surface and rotating or mirroring the system; the
/// cache may be shared between threads.
class ConstructibilityChecker {
 public:
  /// Throws NotExceptionalInput, or RankOutOfRange on the projective plane.
  std::optional<ConstructibilityWitness> find_witness(const ToricSystem& system);

  std::size_t cached_failures() const;

 private:
  std::optional<ConstructibilityWitness> search(const ToricSystem& system);

  mutable std::shared_mutex mutex_;
  std::unordered_set<std::vector<Int>, KeyHash> failures_;
};

std::optional<ConstructibilityWitness> is_constructible(const ToricSystem& system);

/// Key used by the cache: normalised self-intersections followed by the
/// least entry list over all relabellings and rotations/mirrors.
std::vector<Int> symmetry_key(const ToricSystem& system);

enum class Verdict { Full, Unknown };

struct AppliedTwist {
  std::size_t curve_ray;
  std::vector<TwistCase> cases;
  std::vector<std::size_t> applied_positions;
};

struct FullnessCertificate {
  Verdict verdict = Verdict::Unknown;
  std::vector<AppliedTwist> twists;
  /// Sequence after all twists (the input itself when `twists` is empty).
  LineBundleSequence final_sequence;
  std::optional<ConstructibilityWitness> witness;
};

constexpr std::size_t kDefaultTwistDepth = 3;

/// Full when the system of `sequence` is constructible, or when a chain of
/// at most `max_depth` twists at (-2)-rays keeps every entry a line bundle
/// and reaches a constructible system. Only forward twists at
/// torus-invariant curves are tried; anything else is Unknown.
/// Throws NotExceptionalInput.
FullnessCertificate certify_full(const LineBundleSequence& sequence, std::size_t max_depth = kDefaultTwistDepth,
                                 ConstructibilityChecker* checker = nullptr);

/// Two non-constructible systems with f(first) equal to second up to
/// rotation and mirror.
struct AutomorphismPairing {
  std::size_t first;
  std::size_t second;
  FanAutomorphism automorphism;
};

struct OrbitReport {
  std::size_t total = 0;
  std::size_t exceptional_count = 0;
  std::size_t constructible_count = 0;
  std::vector<ToricSystem> orbit;
  std::vector<bool> exceptional;
  std::vector<bool> constructible;
  std::vector<ToricSystem> nonconstructible;
  std::vector<AutomorphismPairing> automorphism_pairing;
};

/// Weyl orbit of the standard system with exceptionality and
/// constructibility of every member. Results do not depend on `threads`
/// (0 = hardware concurrency). Throws RankOutOfRange unless 3 <= rho <= 5.
OrbitReport orbit_report(const ToricSurface& surface, unsigned threads = 0);

/// True if b is a, up to rotation and mirror.
bool same_up_to_dihedral(const ToricSystem& a, const ToricSystem& b);

}  // namespace toricseq
