// toricseq: command-line front end.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 bad input.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "toricseq/classify.hpp"
#include "toricseq/cohomology.hpp"
#include "toricseq/error.hpp"
#include "toricseq/isometry.hpp"
#include "toricseq/reproduce.hpp"
#include "toricseq/serialize.hpp"

using namespace toricseq;
using io::Json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::size_t max_depth = kDefaultTwistDepth;
  std::string input;
  std::string json;
  std::string surface;
  std::string divisor;
  std::string basis;
  std::size_t samples = 0;
};

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json load_document(const Options& o) {
  if (!o.json.empty()) return parse_json(o.json, "--json");
  if (o.input.empty()) throw InputError("expected --input FILE or --json DOCUMENT");
  std::stringstream buffer;
  if (o.input == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(o.input);
    if (!in) throw InputError("cannot read " + o.input);
    buffer << in.rdbuf();
  }
  return parse_json(buffer.str(), o.input);
}

ToricSurface load_surface(const Options& o) {
  if (!o.surface.empty()) return io::surface_from_json(parse_json(o.surface, "--surface"));
  Json doc = load_document(o);
  return io::surface_from_json(doc.contains("surface") ? doc.at("surface") : doc);
}

ToricSystem load_system(const Options& o) { return io::system_from_json(load_document(o)); }

LineBundleSequence load_sequence(const Options& o) {
  Json doc = load_document(o);
  const bool system = doc.is_object() && (doc.contains("entries") || doc.value("kind", "") == "system");
  return system ? to_sequence(io::system_from_json(doc)) : io::sequence_from_json(doc);
}

/// Declared basis as 0-based rays; defaults to the fixed Picard basis.
std::vector<std::size_t> display_basis(const Options& o, const ToricSurface& x) {
  std::vector<std::size_t> basis;
  if (o.basis.empty()) {
    for (std::size_t k = 2; k < x.num_rays(); ++k) basis.push_back(k);
    return basis;
  }
  for (const auto& v : parse_json(o.basis, "--basis")) {
    if (!v.is_number_integer() || v.get<Int>() < 1 || v.get<Int>() > static_cast<Int>(x.num_rays()))
      throw InputError("--basis lists 1-based ray labels");
    basis.push_back(v.get<std::size_t>() - 1);
  }
  return basis;
}

std::string ray_name(std::size_t zero_based) { return "D" + std::to_string(zero_based + 1); }

void print_matrix(std::ostream& out, const std::vector<std::string>& row_names,
                  const std::vector<std::vector<Int>>& rows) {
  std::size_t width = 2;
  for (const auto& r : rows)
    for (Int v : r) width = std::max(width, std::to_string(v).size() + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "  " << row_names[i] << std::string(4 - std::min<std::size_t>(3, row_names[i].size()), ' ') << "|";
    for (Int v : rows[i]) {
      const std::string s = std::to_string(v);
      out << std::string(width - s.size() + 1, ' ') << s;
    }
    out << "\n";
  }
}

void print_classes(std::ostream& out, std::span<const DivisorClass> classes, std::span<const std::size_t> basis) {
  std::vector<std::string> names;
  for (std::size_t b : basis) names.push_back(ray_name(b));
  print_matrix(out, names, io::basis_matrix(classes, basis));
}

std::string format_list(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void print_witness(std::ostream& out, const ConstructibilityWitness& w) {
  for (const auto& s : w.steps)
    out << "  on TV" << format_list(s.surface.selfints()) << ": contract " << ray_name(s.contracted_ray)
        << ", entry " << s.position + 1 << " is the exceptional divisor\n";
  out << "  base: " << io::to_string(w.base_class.kind) << "_{" << w.base_class.r << "," << w.base_class.i
      << "} on TV" << format_list(w.base.surface().selfints()) << "\n";
}

void print_certificate(std::ostream& out, const FullnessCertificate& c) {
  out << "verdict: " << io::to_string(c.verdict) << "\n";
  if (c.twists.empty() && c.verdict == Verdict::Full) out << "directly constructible\n";
  for (const auto& t : c.twists) {
    out << "twist at " << ray_name(t.curve_ray) << ", curve added at entries";
    for (std::size_t p : t.applied_positions) out << " " << p + 1;
    out << "\n";
  }
  if (c.witness) {
    out << "witness:\n";
    print_witness(out, *c.witness);
  } else {
    out << "no witness within the twist budget (forward twists at torus-invariant (-2)-curves only)\n";
  }
}

int emit(const Options& o, const Json& j, const std::function<void(std::ostream&)>& text, int code = 0) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    text(std::cout);
  return code;
}

int run_surface(const Options& o) {
  const ToricSurface x = load_surface(o);
  const DivisorClass k = canonical_class(x);
  Json j = io::to_json(x);
  Json rays = Json::array();
  for (const auto& r : x.rays()) rays.push_back({r.x, r.y});
  j["rays"] = rays;
  j["pic_rank"] = x.pic_rank();
  j["canonical_square"] = pairing(k, k);
  std::vector<std::size_t> m1 = rays_with_selfint(x, -1), m2 = rays_with_selfint(x, -2);
  Json jm1 = Json::array(), jm2 = Json::array();
  for (auto r : m1) jm1.push_back(r + 1);
  for (auto r : m2) jm2.push_back(r + 1);
  j["minus_one_rays"] = jm1;
  j["minus_two_rays"] = jm2;
  j["normalized"] = normalize(x.selfints());
  j["fan_automorphisms"] = fan_automorphisms(x).size();
  std::optional<GoodBasis> gb;
  try {
    gb = good_basis(x);
    j["good_basis"] = io::to_json(*gb);
  } catch (const Error&) {
    j["good_basis"] = nullptr;
  }
  return emit(o, j, [&](std::ostream& out) {
    out << "TV" << format_list(x.selfints()) << "\n";
    out << "rays:";
    for (const auto& r : x.rays()) out << " (" << r.x << "," << r.y << ")";
    out << "\npicard rank: " << x.pic_rank() << "\nK^2: " << pairing(k, k) << "\n";
    out << "(-1)-rays:";
    for (auto r : m1) out << " " << ray_name(r);
    out << "\n(-2)-rays:";
    for (auto r : m2) out << " " << ray_name(r);
    out << "\nfan automorphisms: " << fan_automorphisms(x).size() << "\n";
    if (gb) {
      if (x.num_rays() == 3) {
        out << "good basis (the plane):\n";
      } else {
        out << "good basis (contracting";
        for (auto r : gb->blowdown_path) out << " " << ray_name(r);
        out << " down to F_" << gb->terminal_r << "):\n";
      }
      for (std::size_t i = 0; i < gb->elements.size(); ++i)
        out << "  " << (i ? "R" + std::to_string(i) : std::string("H")) << " = "
            << format_list(gb->elements[i].coeffs()) << "\n";
    }
  });
}

int run_cohomology(const Options& o) {
  const ToricSurface x = load_surface(o);
  if (o.samples > 0) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<Int> coeff(-5, 5);
    std::size_t mismatches = 0;
    for (std::size_t s = 0; s < o.samples; ++s) {
      std::vector<Int> c(x.num_rays());
      for (auto& v : c) v = coeff(rng);
      const DivisorClass d = x.make_class(c);
      if (!(cohomology_dims(d) == oracle_cohomology_dims(d))) ++mismatches;
    }
    Json j{{"samples", o.samples}, {"seed", o.seed}, {"mismatches", mismatches}};
    return emit(o, j, [&](std::ostream& out) {
      out << o.samples << " random classes (seed " << o.seed << "), " << mismatches << " disagree with the oracle\n";
    }, mismatches ? 1 : 0);
  }
  if (o.divisor.empty()) throw InputError("cohomology needs --class or --random");
  const DivisorClass d = io::class_from_json(x, parse_json(o.divisor, "--class"));
  const CohomologyDims h = cohomology_dims(d);
  Json j = io::to_json(h);
  j["euler"] = h.euler();
  return emit(o, j, [&](std::ostream& out) { out << "(" << h.h0 << "," << h.h1 << "," << h.h2 << ")\n"; });
}

int run_check_system(const Options& o) {
  Json doc = load_document(o);
  try {
    const ToricSystem s = io::system_from_json(doc);
    return emit(o, Json{{"valid", true}, {"system", io::to_json(s)}}, [&](std::ostream& out) {
      out << "valid toric system\n";
      print_classes(out, s.entries(), display_basis(o, s.surface()));
    });
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::BadLength:
      case ErrorCode::BadIntersection:
      case ErrorCode::BadCanonicalSum:
        return emit(o, Json{{"valid", false}, {"reason", e.what()}},
                    [&](std::ostream& out) { out << "not a toric system: " << e.what() << "\n"; }, 1);
      default:
        throw;
    }
  }
}

int run_check_exceptional(const Options& o) {
  const ToricSystem s = load_system(o);
  const bool ok = is_exceptional(s);
  return emit(o, Json{{"exceptional", ok}},
              [&](std::ostream& out) { out << (ok ? "exceptional\n" : "not exceptional\n"); }, ok ? 0 : 1);
}

int run_check_constructible(const Options& o) {
  const ToricSystem s = load_system(o);
  ConstructibilityChecker checker;
  const auto w = checker.find_witness(s);
  Json j{{"constructible", w.has_value()}, {"witness", w ? io::to_json(*w) : Json(nullptr)}};
  return emit(o, j, [&](std::ostream& out) {
    out << (w ? "constructible\n" : "not constructible\n");
    if (w) print_witness(out, *w);
  }, w ? 0 : 1);
}

int run_certify_full(const Options& o) {
  const LineBundleSequence seq = load_sequence(o);
  const FullnessCertificate c = certify_full(seq, o.max_depth);
  return emit(o, io::to_json(c), [&](std::ostream& out) {
    print_certificate(out, c);
    out << "final sequence:\n";
    print_classes(out, c.final_sequence.entries, display_basis(o, seq.surface));
  }, c.verdict == Verdict::Full ? 0 : 1);
}

int run_orbit_report(const Options& o) {
  const ToricSurface x = load_surface(o);
  const OrbitReport r = orbit_report(x, o.threads);
  return emit(o, io::to_json(r), [&](std::ostream& out) {
    out << "TV" << format_list(x.selfints()) << ", Weyl group " << weyl_type(x.pic_rank()) << "\n";
    out << "orbit of the standard system: " << r.total << "\nexceptional: " << r.exceptional_count
        << "\nconstructible: " << r.constructible_count << "\nnon-constructible: " << r.nonconstructible.size()
        << "\n";
    const auto basis = display_basis(o, x);
    for (std::size_t k = 0; k < r.nonconstructible.size(); ++k) {
      out << "non-constructible #" << k + 1 << ":\n";
      print_classes(out, r.nonconstructible[k].entries(), basis);
    }
    for (const auto& p : r.automorphism_pairing) {
      out << "#" << p.first + 1 << " -> #" << p.second + 1 << " under the ray permutation";
      for (auto v : p.automorphism.ray_permutation) out << " " << v + 1;
      out << "\n";
    }
  });
}

int run_reproduce(const Options& o) {
  const ExampleReproduction r = reproduce_example(o.threads);
  const auto basis = example_basis();
  const bool ok = r.orbit.total == 120 && r.orbit.exceptional_count == 98 && r.orbit.nonconstructible.size() == 2 &&
                  r.displayed_match && !r.twists.empty() &&
                  std::all_of(r.twists.begin(), r.twists.end(), [](const CurveTwist& t) { return t.constructible; }) &&
                  r.certificate.verdict == Verdict::Full &&
                  r.mirrored_certificate.verdict == Verdict::Full;
  return emit(o, to_json(r), [&](std::ostream& out) {
    out << "X = TV" << format_list(r.surface.selfints()) << "\n\ngood basis, contracting";
    for (auto k : r.good_basis.blowdown_path) out << " " << ray_name(k);
    out << " down to F_" << r.good_basis.terminal_r << ":\n";
    for (std::size_t i = 0; i < r.good_basis.elements.size(); ++i)
      out << "  " << (i ? "R" + std::to_string(i) : std::string("H")) << " = "
          << format_list(r.good_basis.elements[i].coeffs()) << "\n";
    out << "standard system in the good basis:\n";
    std::vector<std::string> names{"H"};
    for (std::size_t i = 1; i < r.good_basis.elements.size(); ++i) names.push_back("R" + std::to_string(i));
    const ToricSystem standard = ToricSystem::standard(r.surface);
    print_matrix(out, names, io::good_basis_matrix(standard.entries(), r.good_basis));

    out << "\nWeyl orbit of the standard system: " << r.orbit.total << "\nexceptional: "
        << r.orbit.exceptional_count << "\nconstructible: " << r.orbit.constructible_count
        << "\nnon-constructible: " << r.orbit.nonconstructible.size() << "\n";
    for (std::size_t k = 0; k < r.orbit.nonconstructible.size(); ++k) {
      out << "non-constructible #" << k + 1 << ":\n";
      print_classes(out, r.orbit.nonconstructible[k].entries(), basis);
    }
    out << "\nA (matches #" << (r.displayed_match ? std::to_string(*r.displayed_match + 1) : "none")
        << " up to rotation and mirror):\n";
    print_classes(out, r.system.entries(), basis);
    out << "its exceptional sequence E:\n";
    print_classes(out, r.sequence.entries, basis);
    out << "automorphism f, ray permutation";
    for (auto v : r.automorphism.ray_permutation) out << " " << v + 1;
    out << "\nf*A:\n";
    print_classes(out, r.mirrored_system.entries(), basis);
    for (const auto& t : r.twists) {
      out << "\ntwist of E at " << ray_name(t.curve_ray) << ", curve added at entries";
      for (auto k : t.result.applied_positions()) out << " " << k + 1;
      out << ":\n";
      print_classes(out, t.result.sequence.entries, basis);
      out << "constructible: " << (t.constructible ? "yes" : "no") << "\n";
    }
    out << "\ncertificate for E:\n";
    print_certificate(out, r.certificate);
    out << "\ncertificate for f*E:\n";
    print_certificate(out, r.mirrored_certificate);
  }, ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional sequences of line bundles on toric surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads for orbit scans (0 = all cores)");
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "JSON file, - for stdin");
    sub->add_option("--json", o.json, "Inline JSON document");
    sub->add_option("--basis", o.basis, "Rays (1-based) to print matrices over, e.g. [2,3,4,5,7]");
    return sub;
  };
  auto with_surface = [&](CLI::App* sub) {
    sub->add_option("--surface", o.surface, "Self-intersection numbers, e.g. [1,1,1]");
    return with_input(sub);
  };

  std::map<std::string, std::function<int(const Options&)>> handlers{
      {"surface", run_surface},
      {"cohomology", run_cohomology},
      {"check-system", run_check_system},
      {"check-exceptional", run_check_exceptional},
      {"check-constructible", run_check_constructible},
      {"certify-full", run_certify_full},
      {"orbit-report", run_orbit_report},
      {"reproduce-paper", run_reproduce},
  };

  with_surface(app.add_subcommand("surface", "Fan, Picard lattice and good basis"));
  auto* coh = with_surface(app.add_subcommand("cohomology", "Line bundle cohomology"));
  coh->add_option("--class", o.divisor, "Coefficients on D1..Dn, e.g. [-1,0,0]");
  coh->add_option("--random", o.samples, "Compare this many seeded random classes against the oracle");
  with_input(app.add_subcommand("check-system", "Validate a toric system"));
  with_input(app.add_subcommand("check-exceptional", "Exceptionality of a toric system"));
  with_input(app.add_subcommand("check-constructible", "Constructibility of an exceptional toric system"));
  auto* cert = with_input(app.add_subcommand("certify-full", "Fullness via constructibility and twists"));
  cert->add_option("--max-depth", o.max_depth, "Maximum number of twists");
  with_surface(app.add_subcommand("orbit-report", "Weyl orbit of the standard system"));
  app.add_subcommand("reproduce-paper", "Run the worked example on TV(-2,-1,-1,-1,-1,-2,-1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(o);
  } catch (const InputError& e) {
    std::cerr << "toricseq " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "toricseq " << name << ": " << e.what() << "\n";
    return 2;
  }
}
