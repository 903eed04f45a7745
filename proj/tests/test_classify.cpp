#include <doctest.h>

#include "support.hpp"
#include "toricseq/classify.hpp"
#include "toricseq/error.hpp"
#include "toricseq/isometry.hpp"
#include "toricseq/reproduce.hpp"

using namespace toricseq;
namespace ts = testing_support;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

ToricSystem pull_back(const FanAutomorphism& f, const ToricSystem& s) {
  std::vector<DivisorClass> image;
  for (const auto& e : s.entries()) image.push_back(f.apply(e));
  return ToricSystem::validate(s.surface(), std::move(image));
}

ToricSystem mirrored_example() {
  const auto x = example_surface();
  for (const auto& f : fan_automorphisms(x))
    if (f.ray_permutation[0] == 5) return pull_back(f, example_nonconstructible_system());
  FAIL("no automorphism exchanging the (-2)-curves");
  return example_nonconstructible_system();
}

// Replays a witness from scratch: every step must be a valid de-augmentation.
void check_witness(const ToricSystem& top, const ConstructibilityWitness& w) {
  ToricSystem current = top;
  for (const auto& step : w.steps) {
    REQUIRE(current.surface() == step.surface);
    CHECK(pairing(step.exceptional, step.exceptional) == -1);
    CHECK(current[step.position] == step.exceptional);
    const auto down = deaugment(current, step.position, step.contracted_ray);
    CHECK(is_exceptional(down.system));
    current = down.system;
  }
  CHECK(current == w.base);
  CHECK(current.size() == 4);
  const auto cls = classify_hirzebruch(current);
  CHECK(cls.kind == w.base_class.kind);
  CHECK(cls.r == w.base_class.r);
  CHECK(cls.i == w.base_class.i);
  CHECK(hirzebruch_family_exceptional(cls.kind, cls.r, cls.i));
  CHECK(w.replay() == top);
}

}  // namespace

TEST_CASE("standard systems are constructible") {
  for (const auto& a : ts::surface_census(8)) {
    const auto x = ToricSurface::from_selfints(a);
    if (x.num_rays() < 4) continue;
    const auto s = ToricSystem::standard(x);
    const auto w = is_constructible(s);
    REQUIRE(w.has_value());
    CHECK(w->steps.size() == x.num_rays() - 4);
    check_witness(s, *w);
  }
}

TEST_CASE("Hirzebruch base cases") {
  for (Int r = 0; r <= 4; ++r)
    for (Int i = -3; i <= 3; ++i) {
      const auto a = hirzebruch_system(HirzebruchKind::A, r, i);
      const auto w = is_constructible(a);
      REQUIRE(w.has_value());
      CHECK(w->steps.empty());
      CHECK(w->base == a);
    }
  const auto t = hirzebruch_system(HirzebruchKind::ATilde, 2, 0);
  CHECK(is_constructible(t).has_value());
  CHECK(code_of([] { is_constructible(hirzebruch_system(HirzebruchKind::ATilde, 2, 1)); }) ==
        ErrorCode::NotExceptionalInput);
  const auto p = ToricSurface::from_selfints({1, 1, 1});
  CHECK(code_of([&] { is_constructible(ToricSystem::standard(p)); }) == ErrorCode::RankOutOfRange);
}

TEST_CASE("the example systems are not constructible") {
  const auto a = example_nonconstructible_system();
  CHECK(is_exceptional(a));
  CHECK_FALSE(is_constructible(a).has_value());
  const auto fa = mirrored_example();
  CHECK(is_exceptional(fa));
  CHECK_FALSE(is_constructible(fa).has_value());
  // The pull-back is a rotation or mirror of the same system.
  CHECK(same_up_to_dihedral(a, fa));
}

TEST_CASE("symmetry key") {
  const auto a = example_nonconstructible_system();
  const auto key = symmetry_key(a);
  for (std::ptrdiff_t k = 0; k < 7; ++k) {
    CHECK(symmetry_key(rotate(a, k)) == key);
    CHECK(symmetry_key(mirror(rotate(a, k))) == key);
  }
  for (const auto& f : fan_automorphisms(a.surface())) CHECK(symmetry_key(pull_back(f, a)) == key);
  CHECK(symmetry_key(ToricSystem::standard(a.surface())) != key);
}

TEST_CASE("checker caches failures and agrees with a fresh search") {
  ConstructibilityChecker shared;
  const auto x = example_surface();
  const auto o = orbit(ToricSystem::standard(x), weyl_group(x));
  std::size_t checked = 0;
  for (std::size_t k = 0; k < o.size(); k += 7) {
    if (!is_exceptional(o[k])) continue;
    const bool cached = shared.find_witness(o[k]).has_value();
    CHECK(cached == is_constructible(o[k]).has_value());
    ++checked;
  }
  CHECK(checked > 5);
  CHECK_FALSE(shared.find_witness(example_nonconstructible_system()).has_value());
  CHECK(shared.cached_failures() > 0);
  CHECK_FALSE(shared.find_witness(example_nonconstructible_system()).has_value());
}

TEST_CASE("fullness certificates") {
  const auto x = example_surface();
  const auto seq = to_sequence(example_nonconstructible_system());

  SUBCASE("directly constructible input needs no twist") {
    const auto s = to_sequence(ToricSystem::standard(x));
    const auto c = certify_full(s);
    CHECK(c.verdict == Verdict::Full);
    CHECK(c.twists.empty());
    CHECK(c.final_sequence == s);
    REQUIRE(c.witness.has_value());
  }

  SUBCASE("depth zero leaves the example undecided") {
    const auto c = certify_full(seq, 0);
    CHECK(c.verdict == Verdict::Unknown);
    CHECK_FALSE(c.witness.has_value());
  }

  SUBCASE("one twist at D1 suffices") {
    const auto c = certify_full(seq, 1);
    CHECK(c.verdict == Verdict::Full);
    REQUIRE(c.twists.size() == 1);
    CHECK(c.twists[0].curve_ray == 0);
    CHECK(c.twists[0].applied_positions == std::vector<std::size_t>{1, 2, 4, 6});
    CHECK(c.final_sequence == twist_sequence(twist_at(x, 0), seq).sequence);
    REQUIRE(c.witness.has_value());
    check_witness(from_sequence(c.final_sequence), *c.witness);
  }

  SUBCASE("the mirrored sequence") {
    const auto fseq = to_sequence(mirrored_example());
    const auto c = certify_full(fseq, 1);
    CHECK(c.verdict == Verdict::Full);
    REQUIRE(c.twists.size() == 1);
    // The conjugate twist at the image curve works as well.
    const auto at_sixth = twist_sequence(twist_at(x, 5), fseq);
    CHECK(is_constructible(from_sequence(at_sixth.sequence)).has_value());
  }

  SUBCASE("both (-2)-curves lead to constructible sequences") {
    for (std::size_t ray : minus_two_rays(x)) {
      const auto t = twist_sequence(twist_at(x, ray), seq);
      CHECK(is_constructible(from_sequence(t.sequence)).has_value());
    }
  }

  for (const auto& s : orbit(ToricSystem::standard(x), weyl_group(x)))
    if (!is_exceptional(s)) {
      CHECK(code_of([&] { certify_full(to_sequence(s)); }) == ErrorCode::NotExceptionalInput);
      break;
    }
}

TEST_CASE("certificates are sound on random orbit members") {
  const auto x = example_surface();
  const auto o = orbit(ToricSystem::standard(x), weyl_group(x));
  ts::Rng rng(41);
  ConstructibilityChecker checker;
  for (int t = 0; t < 25; ++t) {
    const auto& s = o[rng.below(o.size())];
    if (!is_exceptional(s)) continue;
    const auto seq = to_sequence(s);
    const auto c = certify_full(seq, 2, &checker);
    if (c.verdict != Verdict::Full) continue;
    auto current = seq;
    for (const auto& step : c.twists) {
      current = twist_sequence(twist_at(x, step.curve_ray), current).sequence;
      CHECK(is_exceptional(from_sequence(current)));
    }
    CHECK(current == c.final_sequence);
    REQUIRE(c.witness.has_value());
    check_witness(from_sequence(current), *c.witness);
  }
}

TEST_CASE("orbit report on the example") {
  const auto x = example_surface();
  const auto r = orbit_report(x, 1);
  CHECK(r.total == 120);
  CHECK(r.exceptional_count == 98);
  CHECK(r.constructible_count == 96);
  REQUIRE(r.nonconstructible.size() == 2);
  std::size_t matches = 0;
  for (const auto& s : r.nonconstructible) matches += same_up_to_dihedral(s, example_nonconstructible_system());
  CHECK(matches >= 1);
  REQUIRE(r.automorphism_pairing.size() == 1);
  const auto& p = r.automorphism_pairing[0];
  CHECK(same_up_to_dihedral(pull_back(p.automorphism, r.nonconstructible[p.first]), r.nonconstructible[p.second]));
  for (std::size_t k = 0; k < r.total; ++k) {
    CHECK(r.exceptional[k] == is_exceptional(r.orbit[k]));
    if (!r.exceptional[k]) CHECK_FALSE(r.constructible[k]);
  }
}

TEST_CASE("orbit report does not depend on the thread count") {
  const auto x = example_surface();
  const auto one = orbit_report(x, 1);
  const auto four = orbit_report(x, 4);
  CHECK(one.orbit == four.orbit);
  CHECK(one.exceptional == four.exceptional);
  CHECK(one.constructible == four.constructible);
  CHECK(one.nonconstructible == four.nonconstructible);
  CHECK(io::to_json(one).dump() == io::to_json(four).dump());
}

TEST_CASE("rank four surfaces have no non-constructible systems") {
  for (const auto& a : ts::surface_census(6)) {
    const auto x = ToricSurface::from_selfints(a);
    if (x.pic_rank() != 4) continue;
    const auto r = orbit_report(x, 1);
    CHECK(r.exceptional_count == r.constructible_count);
    CHECK(r.nonconstructible.empty());
  }
  CHECK(code_of([] { orbit_report(hirzebruch_surface(1)); }) == ErrorCode::RankOutOfRange);
}
