#include "toricseq/twist.hpp"

#include <string>

namespace toricseq {

TwistByCurve twist_at(const ToricSurface& surface, std::size_t ray) {
  if (ray >= surface.num_rays() || surface.selfint(ray) != -2)
    fail(ErrorCode::NotAMinusTwoCurve, "ray " + std::to_string(ray) + " is not a (-2)-curve");
  return TwistByCurve{ray, surface.divisor(ray)};
}

std::vector<std::size_t> minus_two_rays(const ToricSurface& surface) { return rays_with_selfint(surface, -2); }

Int euler_pair_chi(const TwistByCurve& twist, const DivisorClass& d) { return -pairing(twist.curve, d); }

DivisorClass twist_class(const TwistByCurve& twist, const DivisorClass& d) {
  return d + pairing(twist.curve, d) * twist.curve;
}

Isometry twist_isometry(const TwistByCurve& twist) {
  const ToricSurface& s = twist.curve.surface();
  const std::size_t rho = s.pic_rank();
  IntMatrix m(rho);
  for (std::size_t j = 0; j < rho; ++j) {
    const auto col = twist_class(twist, s.divisor(j + 2)).pic_coords();
    for (std::size_t i = 0; i < rho; ++i) m(i, j) = col[i];
  }
  return Isometry(std::move(m));
}

std::optional<LineBundleTwist> try_twist_line_bundle(const TwistByCurve& twist, const DivisorClass& d) {
  const Int cd = pairing(twist.curve, d);
  if (cd == 0) return LineBundleTwist{d, TwistCase::Unchanged};
  if (cd == 1) return LineBundleTwist{d + twist.curve, TwistCase::AddCurve};
  return std::nullopt;
}

LineBundleTwist twist_line_bundle(const TwistByCurve& twist, const DivisorClass& d) {
  auto t = try_twist_line_bundle(twist, d);
  if (!t) fail(ErrorCode::NotALineBundle, "C.D = " + std::to_string(pairing(twist.curve, d)));
  return std::move(*t);
}

std::vector<std::size_t> SequenceTwist::applied_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (cases[i] == TwistCase::AddCurve) out.push_back(i);
  return out;
}

std::optional<SequenceTwist> try_twist_sequence(const TwistByCurve& twist, const LineBundleSequence& sequence) {
  SequenceTwist out{LineBundleSequence{sequence.surface, {}}, {}};
  for (const auto& e : sequence.entries) {
    auto t = try_twist_line_bundle(twist, e);
    if (!t) return std::nullopt;
    out.sequence.entries.push_back(std::move(t->result));
    out.cases.push_back(t->twist_case);
  }
  out.sequence = out.sequence.normalized();
  return out;
}

SequenceTwist twist_sequence(const TwistByCurve& twist, const LineBundleSequence& sequence) {
  for (std::size_t i = 0; i < sequence.entries.size(); ++i)
    if (!try_twist_line_bundle(twist, sequence.entries[i]))
      fail(ErrorCode::NotALineBundle, "entry " + std::to_string(i) + " has C.E = " +
                                          std::to_string(pairing(twist.curve, sequence.entries[i])));
  return *try_twist_sequence(twist, sequence);
}

}  // namespace toricseq
