#include "toricseq/reproduce.hpp"

#include <array>

#include "toricseq/error.hpp"

namespace toricseq {

namespace {

constexpr std::array<std::size_t, 5> kBasis{1, 2, 3, 4, 6};
constexpr std::array<std::size_t, 3> kPath{6, 4, 0};

// Rows over D_2, D_3, D_4, D_5, D_7; columns are the entries.
constexpr Int kDisplayed[5][7] = {
    {0, 1, -1, 1, 0, 0, 0},  {-1, 1, 0, 1, 0, 0, 1}, {0, 0, 1, 0, 1, -1, 1},
    {0, 0, 1, -1, 1, 0, 0},  {1, -1, 0, 0, -1, 1, -1},
};

io::Json rows_json(const std::vector<std::vector<Int>>& rows) {
  io::Json out = io::Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

}  // namespace

ToricSurface example_surface() { return ToricSurface::from_selfints({-2, -1, -1, -1, -1, -2, -1}); }

std::span<const std::size_t> example_basis() { return kBasis; }

std::span<const std::size_t> example_blowdown_path() { return kPath; }

ToricSystem example_nonconstructible_system() {
  const ToricSurface x = example_surface();
  std::vector<DivisorClass> entries;
  for (std::size_t c = 0; c < 7; ++c) {
    std::vector<Int> coords;
    for (std::size_t r = 0; r < 5; ++r) coords.push_back(kDisplayed[r][c]);
    entries.push_back(x.from_basis_coords(kBasis, coords));
  }
  return ToricSystem::validate(x, std::move(entries));
}

ExampleReproduction reproduce_example(unsigned threads) {
  const ToricSurface x = example_surface();
  const ToricSystem system = example_nonconstructible_system();

  std::optional<FanAutomorphism> f;
  for (auto& a : fan_automorphisms(x))
    if (a.ray_permutation[0] == 5 && !a.is_identity()) f = a;
  if (!f) fail(ErrorCode::InternalInconsistency, "no automorphism exchanges the two (-2)-curves");

  std::vector<DivisorClass> image;
  for (const auto& e : system.entries()) image.push_back(f->apply(e));
  const ToricSystem mirrored = ToricSystem::validate(x, std::move(image));

  const LineBundleSequence sequence = to_sequence(system);
  const LineBundleSequence mirrored_sequence = to_sequence(mirrored);
  ConstructibilityChecker checker;
  std::vector<CurveTwist> twists;
  for (std::size_t ray : minus_two_rays(x)) {
    SequenceTwist t = twist_sequence(twist_at(x, ray), sequence);
    const bool constructible = checker.find_witness(from_sequence(t.sequence)).has_value();
    twists.push_back({ray, std::move(t), constructible});
  }
  FullnessCertificate certificate = certify_full(sequence, 1, &checker);
  FullnessCertificate mirrored_certificate = certify_full(mirrored_sequence, 1, &checker);

  ExampleReproduction r{x,
                        good_basis(x, kPath),
                        orbit_report(x, threads),
                        std::nullopt,
                        system,
                        sequence,
                        *f,
                        mirrored,
                        mirrored_sequence,
                        std::move(twists),
                        std::move(certificate),
                        std::move(mirrored_certificate)};
  for (std::size_t k = 0; k < r.orbit.nonconstructible.size() && !r.displayed_match; ++k)
    if (same_up_to_dihedral(r.orbit.nonconstructible[k], system)) r.displayed_match = k;
  return r;
}

io::Json to_json(const ExampleReproduction& r) {
  using io::Json;
  const auto matrix = [](std::span<const DivisorClass> classes) {
    return rows_json(io::basis_matrix(classes, kBasis));
  };
  const auto standard = ToricSystem::standard(r.surface);

  Json nonconstructible = Json::array();
  for (const auto& s : r.orbit.nonconstructible) nonconstructible.push_back(matrix(s.entries()));

  Json basis = Json::array();
  for (std::size_t b : kBasis) basis.push_back(b + 1);

  return Json{
      {"surface", io::to_json(r.surface)},
      {"good_basis", io::to_json(r.good_basis)},
      {"standard_system_in_good_basis", rows_json(io::good_basis_matrix(standard.entries(), r.good_basis))},
      {"orbit", io::to_json(r.orbit)},
      {"matrix_basis", basis},
      {"nonconstructible_matrices", nonconstructible},
      {"system",
       {{"matrix", matrix(r.system.entries())},
        {"matches_nonconstructible", r.displayed_match ? Json(*r.displayed_match + 1) : Json(nullptr)}}},
      {"sequence", matrix(r.sequence.entries)},
      {"automorphism", io::to_json(r.automorphism)},
      {"mirrored_system", matrix(r.mirrored_system.entries())},
      {"mirrored_sequence", matrix(r.mirrored_sequence.entries)},
      {"twists", [&] {
         Json out = Json::array();
         for (const auto& t : r.twists) {
           Json positions = Json::array();
           for (std::size_t k : t.result.applied_positions()) positions.push_back(k + 1);
           out.push_back({{"curve_ray", t.curve_ray + 1},
                          {"applied_positions", positions},
                          {"sequence", matrix(t.result.sequence.entries)},
                          {"constructible", t.constructible}});
         }
         return out;
       }()},
      {"certificates",
       {{"sequence", io::to_json(r.certificate)}, {"mirrored_sequence", io::to_json(r.mirrored_certificate)}}},
  };
}

}  // namespace toricseq
