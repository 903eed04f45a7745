#include <doctest.h>

#include <set>
#include <unordered_set>

#include "support.hpp"
#include "toricseq/error.hpp"
#include "toricseq/isometry.hpp"

using namespace toricseq;
namespace ts = testing_support;

namespace {

ToricSurface rank(std::size_t rho) {
  switch (rho) {
    case 3: return ToricSurface::from_selfints({0, -1, -1, -1, 0});
    case 4: return ToricSurface::from_selfints({-1, -1, -1, -1, -1, -1});
    default: return ToricSurface::from_selfints({-2, -1, -1, -1, -1, -2, -1});
  }
}

// Roots by brute force over Picard coordinates in a box.
std::size_t brute_root_count(const ToricSurface& x, Int box) {
  const std::size_t rho = x.pic_rank();
  const auto k = canonical_class(x);
  std::vector<Int> c(rho, -box);
  std::size_t count = 0;
  while (true) {
    const auto d = x.from_pic_coords(c);
    if (pairing(d, d) == -2 && pairing(d, k) == 0) ++count;
    std::size_t i = 0;
    while (i < rho && c[i] == box) c[i++] = -box;
    if (i == rho) break;
    ++c[i];
  }
  return count;
}

}  // namespace

TEST_CASE("root counts") {
  CHECK(roots(rank(3)).size() == 2);
  CHECK(roots(rank(4)).size() == 8);
  CHECK(roots(rank(5)).size() == 20);
  CHECK(brute_root_count(rank(3), 3) == 2);
  CHECK(brute_root_count(rank(4), 3) == 8);
  CHECK(brute_root_count(rank(5), 3) == 20);
  for (const auto& r : roots(rank(5))) {
    CHECK(pairing(r, r) == -2);
    CHECK(pairing(r, canonical_class(rank(5))) == 0);
  }
  CHECK_THROWS_AS(roots(ToricSurface::from_selfints({1, 0, -1, 0})), Error);
}

TEST_CASE("reflections") {
  const auto x = rank(5);
  for (const auto& r : roots(x)) {
    const auto s = reflection(r);
    CHECK(s.apply(r) == -r);
    CHECK(s * s == Isometry::identity(x.pic_rank()));
    CHECK(is_k_isometry(x, s));
    for (std::size_t i = 0; i < x.num_rays(); ++i) {
      const auto d = x.divisor(i);
      if (pairing(d, r) == 0) CHECK(s.apply(d) == d);
      CHECK(s.apply(d) == d + pairing(d, r) * r);
    }
  }
  CHECK_THROWS_AS(reflection(x.divisor(1)), Error);
}

TEST_CASE("Weyl group orders and types") {
  CHECK(weyl_group(rank(3)).size() == 2);
  CHECK(weyl_group(rank(4)).size() == 12);
  CHECK(weyl_group(rank(5)).size() == 120);
  CHECK(weyl_type(3) == "A1");
  CHECK(weyl_type(4) == "A1 x A2");
  CHECK(weyl_type(5) == "A4");
  const auto w = weyl_group(rank(4));
  CHECK(w.front() == Isometry::identity(4));
  for (const auto& g : w) CHECK(is_k_isometry(rank(4), g));
}

TEST_CASE("group cap") {
  try {
    weyl_group(rank(5), 50);
    FAIL("expected the cap to trigger");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
}

TEST_CASE("Weyl group equals all K-isometries") {
  for (std::size_t rho : {3, 4, 5}) {
    const auto x = rank(rho);
    const auto w = weyl_group(x);
    const auto all = all_k_isometries(x);
    std::unordered_set<Isometry> a(w.begin(), w.end()), b(all.begin(), all.end());
    CHECK(a.size() == w.size());
    CHECK(a == b);
    bool identity = false;
    for (const auto& g : all) identity |= g == Isometry::identity(x.pic_rank());
    CHECK(identity);
  }
}

TEST_CASE("every census surface of rank 3 to 5 has the tabulated group") {
  const std::size_t orders[] = {0, 0, 0, 2, 12, 120};
  for (const auto& a : ts::surface_census(7)) {
    const auto x = ToricSurface::from_selfints(a);
    if (x.pic_rank() < 3) continue;
    CHECK(weyl_group(x).size() == orders[x.pic_rank()]);
  }
}

TEST_CASE("orbit of the standard system") {
  const auto x = rank(5);
  const auto w = weyl_group(x);
  const auto o = orbit(ToricSystem::standard(x), w);
  CHECK(o.size() == 120);
  CHECK(o.front() == ToricSystem::standard(x));
  std::unordered_set<ToricSystem> distinct(o.begin(), o.end());
  CHECK(distinct.size() == o.size());
  // Each image is a toric system on the same surface.
  for (const auto& s : o) CHECK(s.surface() == x);
}

TEST_CASE("matrices have images of the fixed basis as columns") {
  const auto x = rank(4);
  for (const auto& g : weyl_group(x))
    for (std::size_t j = 0; j < x.pic_rank(); ++j) {
      const auto image = g.apply(x.divisor(j + 2)).pic_coords();
      for (std::size_t i = 0; i < x.pic_rank(); ++i) CHECK(image[i] == g.matrix()(i, j));
    }
}

TEST_CASE("classes with prescribed square and degree") {
  const auto x = rank(5);
  const auto gb = good_basis(x);
  const auto k = canonical_class(x);
  // The ten lines of a quintic del Pezzo surface.
  const auto minus_one = classes_with(gb, -1, -1);
  std::set<std::vector<Int>> seen;
  for (const auto& d : minus_one) {
    CHECK(pairing(d, d) == -1);
    CHECK(pairing(d, k) == -1);
    CHECK(seen.insert(d.pic_coords()).second);
  }
  CHECK(minus_one.size() == 10);
}
