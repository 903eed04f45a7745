#pragma once

// The worked example X = TV(-2,-1,-1,-1,-1,-2,-1): Weyl orbit of the
// standard system, its two non-constructible members, and the twist at the
// (-2)-curves that make them constructible.

#include <optional>

#include "toricseq/serialize.hpp"

namespace toricseq {

ToricSurface example_surface();

/// Rays D_2, D_3, D_4, D_5, D_7 (0-based 1, 2, 3, 4, 6), the basis the
/// example's matrices are written in.
std::span<const std::size_t> example_basis();

/// Blow-down path D_7, D_5, D_1 (0-based 6, 4, 0) to F_1.
std::span<const std::size_t> example_blowdown_path();

/// The non-constructible system of the example in the order it is usually
/// displayed, columns over example_basis().
ToricSystem example_nonconstructible_system();

struct CurveTwist {
  std::size_t curve_ray;
  SequenceTwist result;
  bool constructible = false;
};

struct ExampleReproduction {
  ToricSurface surface;
  GoodBasis good_basis;
  OrbitReport orbit;
  /// Index into orbit.nonconstructible equal to the displayed system up to
  /// rotation and mirror.
  std::optional<std::size_t> displayed_match;
  ToricSystem system;
  LineBundleSequence sequence;
  FanAutomorphism automorphism;  // the reflection exchanging D_1 and D_6
  ToricSystem mirrored_system;   // f applied to `system`
  LineBundleSequence mirrored_sequence;
  std::vector<CurveTwist> twists;  // `sequence` twisted at each (-2)-curve, D_1 first
  FullnessCertificate certificate;
  FullnessCertificate mirrored_certificate;
};

ExampleReproduction reproduce_example(unsigned threads = 0);

io::Json to_json(const ExampleReproduction& r);

}  // namespace toricseq
