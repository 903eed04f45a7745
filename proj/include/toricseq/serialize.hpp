#pragma once

// JSON encodings. Ray labels and entry positions are 1-based here, matching
// the D_1, ..., D_n naming; coefficient arrays are plain lists.
//
//   surface      {"selfints": [int]}
//   class        {"coeffs": [int]}
//   system       {"surface": surface, "entries": [[int]]}
//                or {"surface": surface, "basis": [ray], "matrix": [[int]]}
//                with one row per basis divisor and one column per entry
//   sequence     same shapes as a system, under "line_bundles"
//                commands taking a sequence also accept a system; a basis and
//                matrix document is read as a system when "kind" is "system"
//   certificate  {"verdict", "twists": [...], "witness": {...}}

#include <json.hpp>

#include "toricseq/classify.hpp"
#include "toricseq/cohomology.hpp"

namespace toricseq::io {

using Json = nlohmann::ordered_json;

Json to_json(const ToricSurface& surface);
Json to_json(const DivisorClass& d);
Json to_json(const ToricSystem& system);
Json to_json(const LineBundleSequence& sequence);
Json to_json(const CohomologyDims& dims);
Json to_json(const GoodBasis& basis);
Json to_json(const HirzebruchSystemClass& cls);
Json to_json(const ConstructibilityWitness& witness);
Json to_json(const FullnessCertificate& certificate);
Json to_json(const FanAutomorphism& f);
Json to_json(const OrbitReport& report);

/// Parsers throw InvalidInput on malformed documents; the library's own
/// validation errors pass through unchanged.
ToricSurface surface_from_json(const Json& j);
/// Accepts {"coeffs": [...]} or a bare list.
DivisorClass class_from_json(const ToricSurface& surface, const Json& j);
ToricSystem system_from_json(const Json& j);
LineBundleSequence sequence_from_json(const Json& j);

/// Rows over the basis rays (0-based), one column per class.
std::vector<std::vector<Int>> basis_matrix(std::span<const DivisorClass> classes, std::span<const std::size_t> basis);
/// Rows over (H, R_1, ..., R_l).
std::vector<std::vector<Int>> good_basis_matrix(std::span<const DivisorClass> classes, const GoodBasis& basis);

std::string_view to_string(Verdict v);
std::string_view to_string(TwistCase c);
std::string_view to_string(HirzebruchKind k);

}  // namespace toricseq::io
