#include "toricseq/systems.hpp"

#include <algorithm>
#include <string>

#include "toricseq/cohomology.hpp"

namespace toricseq {

ToricSystem ToricSystem::validate(ToricSurface surface, std::vector<DivisorClass> entries) {
  const std::size_t n = surface.num_rays();
  if (entries.size() != n)
    fail(ErrorCode::BadLength,
         "toric system needs " + std::to_string(n) + " entries, got " + std::to_string(entries.size()));
  for (const auto& e : entries)
    if (!(e.surface() == surface)) fail(ErrorCode::SurfaceMismatch, "entry lives on another surface");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int expected = surface.adjacent(i, j) ? 1 : 0;
      const Int actual = pairing(entries[i], entries[j]);
      if (actual != expected)
        fail(ErrorCode::BadIntersection, "A_" + std::to_string(i) + ".A_" + std::to_string(j) + " = " +
                                             std::to_string(actual) + ", expected " + std::to_string(expected));
    }
  DivisorClass sum = surface.zero();
  for (const auto& e : entries) sum += e;
  if (!(sum == -canonical_class(surface))) fail(ErrorCode::BadCanonicalSum, "entries do not sum to -K");
  return ToricSystem(std::move(surface), std::move(entries));
}

ToricSystem ToricSystem::standard(const ToricSurface& surface) {
  std::vector<DivisorClass> entries;
  for (std::size_t i = 0; i < surface.num_rays(); ++i) entries.push_back(surface.divisor(i));
  return ToricSystem(surface, std::move(entries));
}

std::vector<Int> ToricSystem::squares() const {
  std::vector<Int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(pairing(e, e));
  return out;
}

std::size_t ToricSystem::hash() const {
  std::size_t seed = hash_values(surface_.selfints());
  for (const auto& e : entries_) seed ^= e.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

LineBundleSequence LineBundleSequence::normalized() const {
  LineBundleSequence out{surface, {}};
  for (const auto& e : entries) out.entries.push_back(e - entries.front());
  return out;
}

ToricSystem from_sequence(const LineBundleSequence& sequence) {
  const auto& e = sequence.entries;
  if (e.size() != sequence.surface.num_rays())
    fail(ErrorCode::BadLength, "sequence length must equal the rank of K_0");
  std::vector<DivisorClass> a;
  DivisorClass partial = sequence.surface.zero();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    a.push_back(e[i + 1] - e[i]);
    partial += a.back();
  }
  a.push_back(-canonical_class(sequence.surface) - partial);
  return ToricSystem::validate(sequence.surface, std::move(a));
}

LineBundleSequence to_sequence(const ToricSystem& system) {
  LineBundleSequence out{system.surface(), {system.surface().zero()}};
  for (std::size_t i = 0; i + 1 < system.size(); ++i) out.entries.push_back(out.entries.back() + system[i]);
  return out;
}

ToricSurface associated_surface(const ToricSystem& system) {
  try {
    return ToricSurface::from_selfints(system.squares());
  } catch (const Error& e) {
    fail(ErrorCode::InternalInconsistency, std::string("squares of a toric system form no fan: ") + e.what());
  }
}

ToricSystem rotate(const ToricSystem& system, std::ptrdiff_t k) {
  const auto n = static_cast<std::ptrdiff_t>(system.size());
  const std::ptrdiff_t shift = ((k % n) + n) % n;
  std::vector<DivisorClass> out;
  for (std::ptrdiff_t t = 0; t < n; ++t) out.push_back(system[static_cast<std::size_t>((t + shift) % n)]);
  return ToricSystem::validate(system.surface(), std::move(out));
}

ToricSystem mirror(const ToricSystem& system) {
  std::vector<DivisorClass> out(system.entries().rbegin(), system.entries().rend());
  return ToricSystem::validate(system.surface(), std::move(out));
}

ToricSystem augment_at(const ToricSystem& system, const Blowup& blowup, std::size_t insert_at) {
  if (!(blowup.source == system.surface())) fail(ErrorCode::SurfaceMismatch, "blow-up of another surface");
  const std::size_t n = system.size();
  if (insert_at > n) fail(ErrorCode::InvalidInput, "insertion index out of range");
  const DivisorClass r = blowup.exceptional();
  std::vector<DivisorClass> out;
  for (const auto& a : system.entries()) out.push_back(blowup.pullback(a));
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(insert_at), r);
  out[(insert_at + n) % (n + 1)] -= r;
  out[(insert_at + 1) % (n + 1)] -= r;
  try {
    return ToricSystem::validate(blowup.target, std::move(out));
  } catch (const Error& e) {
    fail(ErrorCode::InternalInconsistency, std::string("augmentation produced an invalid system: ") + e.what());
  }
}

Augmentation augment(const ToricSystem& system, std::size_t blowup_position, std::size_t i) {
  if (i >= system.size()) fail(ErrorCode::InvalidInput, "augmentation position out of range");
  Blowup b = blow_up(system.surface(), blowup_position);
  ToricSystem out = augment_at(system, b, i + 1);
  return Augmentation{std::move(out), std::move(b), i + 1};
}

std::optional<Deaugmentation> try_deaugment(const ToricSystem& system, std::size_t position, std::size_t ray) {
  const ToricSurface& x = system.surface();
  const std::size_t n = system.size();
  if (position >= n || ray >= n || n <= 3 || x.selfint(ray) != -1) return std::nullopt;
  const DivisorClass r = x.divisor(ray);
  if (!(system[position] == r)) return std::nullopt;
  BlowdownMap down = blow_down(x, ray);
  std::vector<DivisorClass> merged;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == position) continue;
    DivisorClass a = system[k];
    if (k == (position + 1) % n || k == (position + n - 1) % n) a += r;
    if (pairing(a, r) != 0) return std::nullopt;
    merged.push_back(down.push(a));
  }
  try {
    ToricSystem result = ToricSystem::validate(down.target, std::move(merged));
    return Deaugmentation{std::move(result), std::move(down), position};
  } catch (const Error&) {
    return std::nullopt;
  }
}

Deaugmentation deaugment(const ToricSystem& system, std::size_t position, std::size_t ray) {
  auto d = try_deaugment(system, position, ray);
  if (!d)
    fail(ErrorCode::NotDeaugmentable, "entry " + std::to_string(position) + " does not split off ray " +
                                          std::to_string(ray));
  return std::move(*d);
}

bool is_exceptional(const ToricSystem& system) {
  const std::size_t n = system.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    DivisorClass segment = system.surface().zero();
    for (std::size_t j = i; j + 1 < n; ++j) {
      segment += system[j];
      if (!vanishes_totally(-segment)) return false;
    }
  }
  return true;
}

ToricSurface hirzebruch_surface(Int r) { return ToricSurface::from_selfints({r, 0, checked::neg(r), 0}); }

ToricSystem hirzebruch_system(HirzebruchKind kind, Int r, Int i) {
  const ToricSurface f = hirzebruch_surface(r);
  const DivisorClass p = f.divisor(1);
  const DivisorClass q = f.divisor(0);
  if (kind == HirzebruchKind::A)
    return ToricSystem::validate(f, {p, i * p + q, p, q - checked::add(r, i) * p});
  if (r % 2 != 0) fail(ErrorCode::InvalidInput, "the second family needs even r");
  const DivisorClass s = q - (r / 2) * p;
  return ToricSystem::validate(f, {s, p + i * s, s, p - i * s});
}

namespace {

struct PQ {
  Int x;  // coefficient of P
  Int y;  // coefficient of Q
  friend bool operator==(const PQ&, const PQ&) = default;
};

}  // namespace

std::vector<HirzebruchSystemClass> hirzebruch_forms(const ToricSystem& system) {
  const ToricSurface& f = system.surface();
  if (f.num_rays() != 4) fail(ErrorCode::NotHirzebruch, "toric system does not live on a Hirzebruch surface");
  Int r = 0;
  std::size_t top = 0;
  for (std::size_t k = 0; k < 4; ++k)
    if (f.selfint(k) > r) r = f.selfint(k), top = k;
  const DivisorClass p = f.divisor((top + 1) % 4);
  const DivisorClass q = f.divisor(top);

  std::vector<PQ> coords;
  for (const auto& a : system.entries()) {
    const Int y = pairing(a, p);
    coords.push_back({checked::sub(pairing(a, q), checked::mul(r, y)), y});
  }

  std::vector<HirzebruchSystemClass> found;
  auto record = [&](HirzebruchKind kind, Int i) {
    const Int canon = kind == HirzebruchKind::A ? std::max(i, -r - i) : std::abs(i);
    for (const auto& c : found)
      if (c.kind == kind && c.i == canon) return;
    found.push_back({kind, r, canon, p, q});
  };
  for (int reflect = 0; reflect < 2; ++reflect)
    for (std::size_t k = 0; k < 4; ++k) {
      PQ e[4];
      for (std::size_t t = 0; t < 4; ++t) e[t] = coords[reflect ? (k + 4 - t) % 4 : (t + k) % 4];
      const PQ fibre{1, 0};
      if (e[0] == fibre && e[2] == fibre && e[1].y == 1) {
        const Int i = e[1].x;
        if (e[3] == PQ{-(r + i), 1}) record(HirzebruchKind::A, i);
      }
      if (r % 2 == 0) {
        const PQ s{-r / 2, 1};
        if (e[0] == s && e[2] == s) {
          const Int i = e[1].y;
          if (e[1] == PQ{1 - i * r / 2, i} && e[3] == PQ{1 + i * r / 2, -i}) record(HirzebruchKind::ATilde, i);
        }
      }
    }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.kind != b.kind) return a.kind == HirzebruchKind::A;
    return std::abs(a.i) < std::abs(b.i) || (std::abs(a.i) == std::abs(b.i) && a.i < b.i);
  });
  return found;
}

HirzebruchSystemClass classify_hirzebruch(const ToricSystem& system) {
  auto forms = hirzebruch_forms(system);
  if (forms.empty()) fail(ErrorCode::Unclassifiable, "toric system on F_r matches neither family");
  return forms.front();
}

bool hirzebruch_family_exceptional(HirzebruchKind kind, Int r, Int i) {
  if (kind == HirzebruchKind::A) return true;
  // i = 0 is a rotation of A_{r,-r/2}, hence exceptional for every even r.
  return r == 0 || i == 0;
}

}  // namespace toricseq
