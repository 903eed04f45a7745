#include <doctest.h>

#include "support.hpp"
#include "toricseq/error.hpp"
#include "toricseq/reproduce.hpp"
#include "toricseq/twist.hpp"

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

std::vector<std::vector<Int>> rows_of(std::initializer_list<std::initializer_list<Int>> rows) {
  std::vector<std::vector<Int>> out;
  for (auto r : rows) out.emplace_back(r);
  return out;
}

}  // namespace

TEST_CASE("(-2)-rays") {
  CHECK(minus_two_rays(example_surface()) == std::vector<std::size_t>{0, 5});
  CHECK(minus_two_rays(ToricSurface::from_selfints({1, 1, 1})).empty());
  CHECK(minus_two_rays(ToricSurface::from_selfints({2, 0, -2, 0})) == std::vector<std::size_t>{2});
  CHECK(code_of([] { twist_at(example_surface(), 1); }) == ErrorCode::NotAMinusTwoCurve);
}

TEST_CASE("Euler pairing with the curve") {
  const auto x = example_surface();
  const auto t = twist_at(x, 0);
  CHECK(euler_pair_chi(t, x.divisor(3)) == 0);
  CHECK(euler_pair_chi(t, x.divisor(1)) == -1);
  CHECK(euler_pair_chi(t, x.divisor(6)) == -1);
  CHECK(euler_pair_chi(t, x.divisor(0)) == 2);
}

TEST_CASE("twist on classes is the reflection in the curve") {
  const auto x = example_surface();
  for (std::size_t ray : minus_two_rays(x)) {
    const auto t = twist_at(x, ray);
    CHECK(twist_class(t, t.curve) == -t.curve);
    CHECK(twist_isometry(t) == reflection(t.curve));
    CHECK(is_k_isometry(x, twist_isometry(t)));
    ts::Rng rng(ray);
    for (int k = 0; k < 50; ++k) {
      std::vector<Int> c(7);
      for (auto& v : c) v = rng.range(-4, 4);
      const auto d = x.make_class(c);
      CHECK(twist_class(t, twist_class(t, d)) == d);
      CHECK(twist_class(t, d) == twist_isometry(t).apply(d));
      CHECK(twist_class(t, d) == d + ts::expand(x.selfints(), t.curve.coeffs(), c) * t.curve);
    }
  }
}

TEST_CASE("line bundle cases") {
  const auto x = example_surface();
  const auto t = twist_at(x, 0);
  const auto orth = x.divisor(3);
  const auto a = twist_line_bundle(t, orth);
  CHECK(a.result == orth);
  CHECK(a.twist_case == TwistCase::Unchanged);

  const auto one = x.divisor(1);
  const auto b = twist_line_bundle(t, one);
  CHECK(b.result == one + t.curve);
  CHECK(b.twist_case == TwistCase::AddCurve);

  // After adding the curve the degree is -1 and a second twist leaves line bundles.
  CHECK(pairing(b.result, t.curve) == -1);
  CHECK(code_of([&] { twist_line_bundle(t, b.result); }) == ErrorCode::NotALineBundle);
  CHECK_FALSE(try_twist_line_bundle(t, 2 * one).has_value());
}

TEST_CASE("sequence twists") {
  const auto x = example_surface();
  const auto t = twist_at(x, 0);
  // A sequence orthogonal to the curve is unchanged.
  const LineBundleSequence flat{x, {x.zero(), x.divisor(3), x.divisor(3) + x.divisor(4)}};
  const auto same = twist_sequence(t, flat);
  CHECK(same.sequence == flat);
  CHECK(same.applied_positions().empty());

  const LineBundleSequence bad{x, {x.zero(), x.divisor(1), 2 * x.divisor(1)}};
  CHECK(code_of([&] { twist_sequence(t, bad); }) == ErrorCode::NotALineBundle);
  CHECK_FALSE(try_twist_sequence(t, bad).has_value());
}

TEST_CASE("twists of the non-constructible example") {
  const auto x = example_surface();
  const auto seq = to_sequence(example_nonconstructible_system());
  const auto basis = example_basis();

  const auto reference_sequence = rows_of({{0, 0, 1, 0, 1, 1, 1},
                                           {0, -1, 0, 0, 1, 1, 1},
                                           {0, 0, 0, 1, 1, 2, 1},
                                           {0, 0, 0, 1, 0, 1, 1},
                                           {0, 1, 0, 0, 0, -1, 0}});
  CHECK(io::basis_matrix(seq.entries, basis) == reference_sequence);

  // D_1 pairs to 1 with entries 2, 3, 5 and 7 (1-based).
  const auto at_first = twist_sequence(twist_at(x, 0), seq);
  CHECK(at_first.applied_positions() == std::vector<std::size_t>{1, 2, 4, 6});
  for (std::size_t k = 0; k < 7; ++k) {
    const Int degree = ts::expand(x.selfints(), x.divisor(0).coeffs(), seq.entries[k].coeffs());
    CHECK((degree == 0 || degree == 1));
    CHECK(at_first.sequence.entries[k] == seq.entries[k] + degree * x.divisor(0));
  }
  CHECK(is_exceptional(from_sequence(at_first.sequence)));
  CHECK(is_exceptional(from_sequence(seq)));

  // The reference twisted matrix is the twist at the other (-2)-curve.
  const auto reference_twist = rows_of({{0, 1, 1, 1, 1, 1, 2},
                                        {0, 0, 0, 1, 1, 1, 2},
                                        {0, 0, 0, 1, 1, 2, 1},
                                        {0, -1, 0, 0, 0, 1, 0},
                                        {0, 0, 0, -1, 0, -1, -1}});
  const auto at_sixth = twist_sequence(twist_at(x, 5), seq);
  CHECK(io::basis_matrix(at_sixth.sequence.entries, basis) == reference_twist);
  CHECK(at_sixth.applied_positions() == std::vector<std::size_t>{1, 3, 6});
  CHECK(is_exceptional(from_sequence(at_sixth.sequence)));
}
