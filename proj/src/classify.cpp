#include "toricseq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

#include "toricseq/cohomology.hpp"
#include "toricseq/error.hpp"
#include "toricseq/isometry.hpp"

namespace toricseq {

ToricSystem ConstructibilityWitness::replay() const {
  ToricSystem current = base;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    current = augment_at(current, blow_down(it->surface, it->contracted_ray).inverse(), it->position);
  return current;
}

std::vector<Int> symmetry_key(const ToricSystem& system) {
  const ToricSurface& x = system.surface();
  const std::size_t n = x.num_rays();
  const std::vector<Int> norm = normalize(x.selfints());
  const ToricSurface target = ToricSurface::from_selfints(norm);

  std::vector<Int> best;
  std::vector<Int> coeffs(n);
  std::vector<std::vector<Int>> coords(n);
  for (int reflect = 0; reflect < 2; ++reflect)
    for (std::size_t k0 = 0; k0 < n; ++k0) {
      auto relabel = [&](std::size_t k) { return reflect ? (k0 + n - k) % n : (k0 + k) % n; };
      bool match = true;
      for (std::size_t k = 0; k < n && match; ++k) match = x.selfint(relabel(k)) == norm[k];
      if (!match) continue;
      for (std::size_t e = 0; e < n; ++e) {
        for (std::size_t k = 0; k < n; ++k) coeffs[k] = system[e].coeffs()[relabel(k)];
        coords[e] = target.make_class(coeffs).pic_coords();
      }
      for (int flip = 0; flip < 2; ++flip)
        for (std::size_t shift = 0; shift < n; ++shift) {
          std::vector<Int> flat;
          flat.reserve(n * (n - 2));
          for (std::size_t t = 0; t < n; ++t) {
            const auto& c = coords[flip ? (shift + n - t) % n : (shift + t) % n];
            flat.insert(flat.end(), c.begin(), c.end());
          }
          if (best.empty() || flat < best) best = std::move(flat);
        }
    }

  std::vector<Int> key;
  key.push_back(static_cast<Int>(n));
  key.insert(key.end(), norm.begin(), norm.end());
  key.insert(key.end(), best.begin(), best.end());
  return key;
}

std::optional<ConstructibilityWitness> ConstructibilityChecker::find_witness(const ToricSystem& system) {
  if (system.size() <= 3) fail(ErrorCode::RankOutOfRange, "constructibility needs at least four rays");
  if (!is_exceptional(system)) fail(ErrorCode::NotExceptionalInput, "toric system is not exceptional");
  return search(system);
}

std::size_t ConstructibilityChecker::cached_failures() const {
  std::shared_lock lock(mutex_);
  return failures_.size();
}

std::optional<ConstructibilityWitness> ConstructibilityChecker::search(const ToricSystem& system) {
  if (system.size() == 4) {
    const HirzebruchSystemClass cls = classify_hirzebruch(system);
    const bool exceptional = is_exceptional(system);
    if (exceptional != hirzebruch_family_exceptional(cls.kind, cls.r, cls.i))
      fail(ErrorCode::InternalInconsistency, "Hirzebruch system disagrees with its family");
    if (!exceptional) return std::nullopt;
    return ConstructibilityWitness{{}, system, cls};
  }

  const std::vector<Int> key = symmetry_key(system);
  {
    std::shared_lock lock(mutex_);
    if (failures_.count(key)) return std::nullopt;
  }

  const ToricSurface& x = system.surface();
  for (std::size_t ray : rays_with_selfint(x, -1)) {
    const DivisorClass r = x.divisor(ray);
    for (std::size_t j = 0; j < system.size(); ++j) {
      if (!(system[j] == r)) continue;
      auto down = try_deaugment(system, j, ray);
      if (!down) continue;
      if (!is_exceptional(down->system))
        fail(ErrorCode::InternalInconsistency, "de-augmentation of an exceptional system is not exceptional");
      auto sub = search(down->system);
      if (!sub) continue;
      sub->steps.insert(sub->steps.begin(), ConstructionStep{x, ray, j, r});
      return sub;
    }
  }

  std::unique_lock lock(mutex_);
  failures_.insert(key);
  return std::nullopt;
}

std::optional<ConstructibilityWitness> is_constructible(const ToricSystem& system) {
  ConstructibilityChecker checker;
  return checker.find_witness(system);
}

namespace {

struct TwistNode {
  LineBundleSequence sequence;
  std::vector<AppliedTwist> twists;
};

std::vector<Int> sequence_key(const LineBundleSequence& s) {
  std::vector<Int> key;
  for (const auto& e : s.entries) {
    auto c = e.pic_coords();
    key.insert(key.end(), c.begin(), c.end());
  }
  return key;
}

}  // namespace

FullnessCertificate certify_full(const LineBundleSequence& sequence, std::size_t max_depth,
                                 ConstructibilityChecker* checker) {
  ConstructibilityChecker local;
  if (!checker) checker = &local;
  const LineBundleSequence start = sequence.normalized();
  const ToricSystem system = from_sequence(start);

  FullnessCertificate cert{Verdict::Unknown, {}, start, std::nullopt};
  if (auto w = checker->find_witness(system)) {
    cert.verdict = Verdict::Full;
    cert.witness = std::move(w);
    return cert;
  }

  std::vector<TwistByCurve> curves;
  for (std::size_t ray : minus_two_rays(start.surface)) curves.push_back(twist_at(start.surface, ray));

  std::unordered_set<std::vector<Int>, KeyHash> seen{sequence_key(start)};
  std::vector<TwistNode> level{{start, {}}};
  for (std::size_t depth = 1; depth <= max_depth && !level.empty(); ++depth) {
    std::vector<TwistNode> next;
    for (const auto& node : level)
      for (const auto& c : curves) {
        auto twisted = try_twist_sequence(c, node.sequence);
        if (!twisted || !seen.insert(sequence_key(twisted->sequence)).second) continue;
        TwistNode child{twisted->sequence, node.twists};
        child.twists.push_back({c.curve_ray, twisted->cases, twisted->applied_positions()});
        const ToricSystem image = from_sequence(child.sequence);
        if (!is_exceptional(image))
          fail(ErrorCode::InternalInconsistency, "spherical twist broke exceptionality");
        if (auto w = checker->find_witness(image)) {
          cert.verdict = Verdict::Full;
          cert.twists = std::move(child.twists);
          cert.final_sequence = std::move(child.sequence);
          cert.witness = std::move(w);
          return cert;
        }
        next.push_back(std::move(child));
      }
    level = std::move(next);
  }
  return cert;
}

bool same_up_to_dihedral(const ToricSystem& a, const ToricSystem& b) {
  const std::size_t n = a.size();
  if (!(a.surface() == b.surface()) || n != b.size()) return false;
  for (int flip = 0; flip < 2; ++flip)
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool equal = true;
      for (std::size_t t = 0; t < n && equal; ++t)
        equal = a[flip ? (shift + n - t) % n : (shift + t) % n] == b[t];
      if (equal) return true;
    }
  return false;
}

OrbitReport orbit_report(const ToricSurface& surface, unsigned threads) {
  const std::size_t rho = surface.pic_rank();
  if (rho < 3 || rho > 5) fail(ErrorCode::RankOutOfRange, "orbit reports need Picard rank 3, 4 or 5");

  const std::vector<Isometry> group = weyl_group(surface);
  OrbitReport report;
  report.orbit = orbit(ToricSystem::standard(surface), group);
  const std::size_t total = report.orbit.size();
  report.total = total;

  std::vector<char> exceptional(total, 0), constructible(total, 0);
  ConstructibilityChecker checker;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < total; k = next++) {
        if (!is_exceptional(report.orbit[k])) continue;
        exceptional[k] = 1;
        constructible[k] = checker.find_witness(report.orbit[k]).has_value();
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = total;
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t k = 0; k < total; ++k) {
    report.exceptional.push_back(exceptional[k]);
    report.constructible.push_back(constructible[k]);
    report.exceptional_count += exceptional[k];
    report.constructible_count += constructible[k];
    if (exceptional[k] && !constructible[k]) report.nonconstructible.push_back(report.orbit[k]);
  }

  const auto automorphisms = fan_automorphisms(surface);
  for (std::size_t a = 0; a < report.nonconstructible.size(); ++a)
    for (std::size_t b = a + 1; b < report.nonconstructible.size(); ++b)
      for (const auto& f : automorphisms) {
        if (f.is_identity()) continue;
        std::vector<DivisorClass> image;
        for (const auto& e : report.nonconstructible[a].entries()) image.push_back(f.apply(e));
        if (same_up_to_dihedral(ToricSystem::validate(surface, std::move(image)), report.nonconstructible[b])) {
          report.automorphism_pairing.push_back({a, b, f});
          break;
        }
      }
  return report;
}

}  // namespace toricseq
