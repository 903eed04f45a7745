#include "toricseq/serialize.hpp"

#include "toricseq/error.hpp"

namespace toricseq::io {

namespace {

Json label_list(std::span<const std::size_t> zero_based) {
  Json out = Json::array();
  for (std::size_t k : zero_based) out.push_back(k + 1);
  return out;
}

std::vector<Int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, std::string(what) + " must be a list of integers");
  std::vector<Int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorCode::InvalidInput, std::string(what) + " must be a list of integers");
    out.push_back(v.get<Int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<DivisorClass> classes_from_json(const ToricSurface& x, const Json& j, const char* key) {
  std::vector<DivisorClass> out;
  if (j.contains(key)) {
    const Json& list = j.at(key);
    if (!list.is_array()) fail(ErrorCode::InvalidInput, std::string(key) + " must be a list");
    for (const auto& e : list) out.push_back(class_from_json(x, e));
    return out;
  }
  if (!j.contains("basis") || !j.contains("matrix"))
    fail(ErrorCode::InvalidInput, std::string("expected \"") + key + "\" or \"basis\" with \"matrix\"");
  std::vector<std::size_t> basis;
  for (Int b : int_list(j.at("basis"), "basis")) {
    if (b < 1 || b > static_cast<Int>(x.num_rays())) fail(ErrorCode::InvalidInput, "basis ray out of range");
    basis.push_back(static_cast<std::size_t>(b - 1));
  }
  const Json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != basis.size())
    fail(ErrorCode::InvalidInput, "matrix needs one row per basis divisor");
  std::vector<std::vector<Int>> m;
  for (const auto& r : rows) m.push_back(int_list(r, "matrix row"));
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& r : m)
    if (r.size() != cols) fail(ErrorCode::InvalidInput, "matrix rows differ in length");
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Int> coords;
    for (const auto& r : m) coords.push_back(r[c]);
    out.push_back(x.from_basis_coords(basis, coords));
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Full ? "Full" : "Unknown"; }
std::string_view to_string(TwistCase c) { return c == TwistCase::Unchanged ? "unchanged" : "add_curve"; }
std::string_view to_string(HirzebruchKind k) { return k == HirzebruchKind::A ? "A" : "A~"; }

Json to_json(const ToricSurface& surface) { return Json{{"selfints", surface.selfints()}}; }

Json to_json(const DivisorClass& d) { return Json{{"coeffs", d.coeffs()}}; }

Json to_json(const ToricSystem& system) {
  Json entries = Json::array();
  for (const auto& a : system.entries()) entries.push_back(a.coeffs());
  return Json{{"surface", to_json(system.surface())}, {"entries", entries}};
}

Json to_json(const LineBundleSequence& sequence) {
  Json entries = Json::array();
  for (const auto& e : sequence.entries) entries.push_back(e.coeffs());
  return Json{{"surface", to_json(sequence.surface)}, {"line_bundles", entries}};
}

Json to_json(const CohomologyDims& dims) { return Json{{"h0", dims.h0}, {"h1", dims.h1}, {"h2", dims.h2}}; }

Json to_json(const GoodBasis& basis) {
  Json elements = Json::array();
  for (const auto& e : basis.elements) elements.push_back(e.coeffs());
  return Json{{"blowdown_path", label_list(basis.blowdown_path)},
              {"terminal_r", basis.terminal_r},
              {"elements", elements}};
}

Json to_json(const HirzebruchSystemClass& cls) {
  return Json{{"family", to_string(cls.kind)}, {"r", cls.r}, {"i", cls.i}};
}

Json to_json(const ConstructibilityWitness& witness) {
  Json steps = Json::array();
  for (const auto& s : witness.steps)
    steps.push_back(Json{{"surface", to_json(s.surface)},
                         {"contracted_ray", s.contracted_ray + 1},
                         {"position", s.position + 1},
                         {"exceptional", s.exceptional.coeffs()}});
  Json base = to_json(witness.base_class);
  base["system"] = to_json(witness.base);
  return Json{{"steps", steps}, {"base", base}};
}

Json to_json(const FullnessCertificate& certificate) {
  Json twists = Json::array();
  for (const auto& t : certificate.twists) {
    Json cases = Json::array();
    for (auto c : t.cases) cases.push_back(to_string(c));
    twists.push_back(Json{{"curve_ray", t.curve_ray + 1},
                          {"applied_positions", label_list(t.applied_positions)},
                          {"case_per_entry", cases}});
  }
  return Json{{"verdict", to_string(certificate.verdict)},
              {"twists", twists},
              {"twist_search", {{"curves", "torus-invariant (-2)-curves only"}, {"direction", "forward twists only"}}},
              {"final_sequence", to_json(certificate.final_sequence)},
              {"witness", certificate.witness ? to_json(*certificate.witness) : Json(nullptr)}};
}

Json to_json(const FanAutomorphism& f) {
  return Json{{"lattice_map", {{f.lattice_map[0], f.lattice_map[1]}, {f.lattice_map[2], f.lattice_map[3]}}},
              {"ray_permutation", label_list(f.ray_permutation)}};
}

Json to_json(const OrbitReport& report) {
  Json nonconstructible = Json::array();
  for (const auto& s : report.nonconstructible) nonconstructible.push_back(to_json(s));
  Json pairing = Json::array();
  for (const auto& p : report.automorphism_pairing)
    pairing.push_back(Json{{"first", p.first + 1}, {"second", p.second + 1}, {"automorphism", to_json(p.automorphism)}});
  return Json{{"total", report.total},
              {"exceptional_count", report.exceptional_count},
              {"constructible_count", report.constructible_count},
              {"nonconstructible", nonconstructible},
              {"automorphism_pairing", pairing}};
}

ToricSurface surface_from_json(const Json& j) {
  const Json& s = j.is_array() ? j : field(j, "selfints");
  return ToricSurface::from_selfints(int_list(s, "selfints"));
}

DivisorClass class_from_json(const ToricSurface& surface, const Json& j) {
  const Json& c = j.is_array() ? j : field(j, "coeffs");
  return surface.make_class(int_list(c, "coeffs"));
}

ToricSystem system_from_json(const Json& j) {
  const ToricSurface x = surface_from_json(field(j, "surface"));
  return ToricSystem::validate(x, classes_from_json(x, j, "entries"));
}

LineBundleSequence sequence_from_json(const Json& j) {
  const ToricSurface x = surface_from_json(field(j, "surface"));
  return LineBundleSequence{x, classes_from_json(x, j, "line_bundles")};
}

std::vector<std::vector<Int>> basis_matrix(std::span<const DivisorClass> classes, std::span<const std::size_t> basis) {
  std::vector<std::vector<Int>> rows(basis.size());
  for (const auto& d : classes) {
    const auto c = d.basis_coords(basis);
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(c[r]);
  }
  return rows;
}

std::vector<std::vector<Int>> good_basis_matrix(std::span<const DivisorClass> classes, const GoodBasis& basis) {
  std::vector<std::vector<Int>> rows(basis.elements.size());
  for (const auto& d : classes) {
    const auto c = basis.coords(d);
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(c[r]);
  }
  return rows;
}

}  // namespace toricseq::io
