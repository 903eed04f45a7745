#include "toricseq/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace toricseq {
namespace {

Int det2(const Ray& u, const Ray& w) { return checked::sub(checked::mul(u.x, w.y), checked::mul(u.y, w.x)); }

// Does the counterclockwise sweep from u to w (less than half a turn) pass
// the positive x-axis? The start direction is excluded, the end included.
bool crosses_positive_axis(const Ray& u, const Ray& w) {
  const Ray axis{1, 0};
  const Int before = det2(u, axis);
  const Int after = det2(axis, w);
  if (before <= 0 || after < 0) return false;
  return after > 0 || w.x > 0;
}

std::string seq_to_string(std::span<const Int> values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + ")";
}

void require_same_surface(const ToricSurface& a, const ToricSurface& b) {
  if (!(a == b))
    fail(ErrorCode::SurfaceMismatch,
         "classes live on TV" + seq_to_string(a.selfints()) + " and TV" + seq_to_string(b.selfints()));
}

// Two rays not in `basis`; validates the declared basis.
std::pair<std::size_t, std::size_t> omitted_rays(const ToricSurface& s, std::span<const std::size_t> basis) {
  const std::size_t n = s.num_rays();
  if (basis.size() != s.pic_rank()) fail(ErrorCode::InvalidBasis, "basis must have pic_rank elements");
  std::vector<bool> used(n, false);
  for (std::size_t b : basis) {
    if (b >= n || used[b]) fail(ErrorCode::InvalidBasis, "basis indices must be distinct rays");
    used[b] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) rest.push_back(i);
  const Int d = det2(s.rays()[rest[0]], s.rays()[rest[1]]);
  if (d != 1 && d != -1)
    fail(ErrorCode::InvalidBasis, "omitted rays " + std::to_string(rest[0]) + "," + std::to_string(rest[1]) +
                                      " do not span the lattice");
  return {rest[0], rest[1]};
}

}  // namespace

ToricSurface ToricSurface::from_selfints(std::span<const Int> selfints) {
  const std::size_t n = selfints.size();
  if (n < 3) fail(ErrorCode::InvalidFan, "a complete fan needs at least three rays");
  auto data = std::make_shared<Data>();
  data->selfints.assign(selfints.begin(), selfints.end());
  auto& v = data->rays;
  v.resize(n);
  v[0] = {1, 0};
  v[1] = {0, 1};
  auto next = [&](const Ray& prev, Int a, const Ray& cur) {
    return Ray{checked::sub(checked::neg(prev.x), checked::mul(a, cur.x)),
               checked::sub(checked::neg(prev.y), checked::mul(a, cur.y))};
  };
  for (std::size_t i = 1; i + 1 < n; ++i) v[i + 1] = next(v[i - 1], selfints[i], v[i]);
  if (!(next(v[n - 2], selfints[n - 1], v[n - 1]) == v[0]) || !(next(v[n - 1], selfints[0], v[0]) == v[1]))
    fail(ErrorCode::InvalidFan, "ray recursion does not close for TV" + seq_to_string(selfints));

  std::size_t winding = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (crosses_positive_axis(v[i], v[(i + 1) % n])) ++winding;
  if (winding != 1)
    fail(ErrorCode::InvalidFan,
         "rays of TV" + seq_to_string(selfints) + " wind " + std::to_string(winding) + " times around the origin");

  Int total = 0;
  for (Int a : selfints) total = checked::add(total, a);
  if (total != 12 - 3 * static_cast<Int>(n))
    fail(ErrorCode::InvalidFan, "self-intersections of TV" + seq_to_string(selfints) + " do not sum to 12 - 3n");
  return ToricSurface(std::move(data));
}

bool ToricSurface::adjacent(std::size_t i, std::size_t j) const noexcept {
  const std::size_t n = num_rays();
  return i != j && ((i + 1) % n == j || (j + 1) % n == i);
}

DivisorClass ToricSurface::divisor(std::size_t i) const {
  if (i >= num_rays()) fail(ErrorCode::InvalidInput, "ray index " + std::to_string(i) + " out of range");
  std::vector<Int> c(num_rays(), 0);
  c[i] = 1;
  return DivisorClass(*this, std::move(c));
}

DivisorClass ToricSurface::zero() const { return DivisorClass(*this, std::vector<Int>(num_rays(), 0)); }

DivisorClass ToricSurface::make_class(std::vector<Int> coeffs) const { return DivisorClass(*this, std::move(coeffs)); }

DivisorClass ToricSurface::from_pic_coords(std::span<const Int> coords) const {
  if (coords.size() != pic_rank()) fail(ErrorCode::InvalidInput, "expected pic_rank coordinates");
  std::vector<Int> c(num_rays(), 0);
  std::copy(coords.begin(), coords.end(), c.begin() + 2);
  return DivisorClass(*this, std::move(c));
}

DivisorClass ToricSurface::from_basis_coords(std::span<const std::size_t> basis, std::span<const Int> coords) const {
  omitted_rays(*this, basis);
  if (coords.size() != basis.size()) fail(ErrorCode::InvalidInput, "expected one coordinate per basis element");
  std::vector<Int> c(num_rays(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) c[basis[k]] = coords[k];
  return DivisorClass(*this, std::move(c));
}

IntMatrix ToricSurface::gram() const {
  const std::size_t rho = pic_rank();
  IntMatrix g(rho);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) {
      const std::size_t a = i + 2, b = j + 2;
      g(i, j) = a == b ? selfint(a) : (adjacent(a, b) ? 1 : 0);
    }
  return g;
}

DivisorClass::DivisorClass(ToricSurface surface, std::vector<Int> coeffs)
    : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != surface_.num_rays())
    fail(ErrorCode::InvalidInput, "class needs " + std::to_string(surface_.num_rays()) + " coefficients, got " +
                                      std::to_string(coeffs_.size()));
}

DivisorClass DivisorClass::reduced() const {
  // Subtract c_0 * div(chi^{e1}) + c_1 * div(chi^{e2}); v_0, v_1 are the standard basis.
  const auto& rays = surface_.rays();
  std::vector<Int> c(coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = checked::sub(checked::sub(coeffs_[j], checked::mul(coeffs_[0], rays[j].x)),
                        checked::mul(coeffs_[1], rays[j].y));
  return DivisorClass(surface_, std::move(c));
}

std::vector<Int> DivisorClass::pic_coords() const {
  const auto r = reduced();
  return {r.coeffs_.begin() + 2, r.coeffs_.end()};
}

std::vector<Int> DivisorClass::basis_coords(std::span<const std::size_t> basis) const {
  const auto [p, q] = omitted_rays(surface_, basis);
  const Ray vp = surface_.rays()[p];
  const Ray vq = surface_.rays()[q];
  const Int det = det2(vp, vq);
  // Solve <m, v_p> = -c_p, <m, v_q> = -c_q.
  const Int bp = checked::neg(coeffs_[p]);
  const Int bq = checked::neg(coeffs_[q]);
  const Int mx = checked::mul(det, checked::sub(checked::mul(vq.y, bp), checked::mul(vp.y, bq)));
  const Int my = checked::mul(det, checked::sub(checked::mul(vp.x, bq), checked::mul(vq.x, bp)));
  std::vector<Int> out;
  out.reserve(basis.size());
  for (std::size_t b : basis) {
    const Ray v = surface_.rays()[b];
    out.push_back(checked::add(coeffs_[b], checked::add(checked::mul(mx, v.x), checked::mul(my, v.y))));
  }
  return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_surface(surface_, other.surface_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_surface(surface_, other.surface_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], other.coeffs_[i]);
  return *this;
}

DivisorClass operator-(const DivisorClass& a) { return Int{-1} * a; }

DivisorClass operator*(Int k, const DivisorClass& a) {
  std::vector<Int> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::mul(k, a.coeffs_[i]);
  return DivisorClass(a.surface_, std::move(c));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.surface_ == b.surface_)) return false;
  return a.pic_coords() == b.pic_coords();
}

std::size_t DivisorClass::hash() const {
  const auto coords = pic_coords();
  return hash_values(coords, hash_values(surface_.selfints()));
}

Int pairing(const DivisorClass& d, const DivisorClass& e) {
  require_same_surface(d.surface(), e.surface());
  const auto& a = d.surface().selfints();
  const auto& c = d.coeffs();
  const auto& f = e.coeffs();
  const std::size_t n = a.size();
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    Int row = checked::mul(a[i], f[i]);
    row = checked::add(row, f[(i + 1) % n]);
    row = checked::add(row, f[(i + n - 1) % n]);
    total = checked::fma(total, c[i], row);
  }
  return total;
}

DivisorClass canonical_class(const ToricSurface& surface) {
  return surface.make_class(std::vector<Int>(surface.num_rays(), -1));
}

std::size_t Blowup::new_index(std::size_t old_index) const {
  return old_index < new_ray ? old_index : old_index + 1;
}

DivisorClass Blowup::pullback(const DivisorClass& d) const {
  require_same_surface(d.surface(), source);
  const std::size_t n = source.num_rays();
  std::vector<Int> c(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) c[new_index(j)] = d.coeffs()[j];
  c[new_ray] = checked::add(d.coeffs()[position], d.coeffs()[(position + 1) % n]);
  return target.make_class(std::move(c));
}

Blowup blow_up(const ToricSurface& surface, std::size_t position) {
  return blow_up(surface, position, position + 1);
}

Blowup blow_up(const ToricSurface& surface, std::size_t position, std::size_t new_ray) {
  const std::size_t n = surface.num_rays();
  if (position >= n) fail(ErrorCode::InvalidInput, "blow-up position out of range");
  if (new_ray != position + 1 && !(position == n - 1 && new_ray == 0))
    fail(ErrorCode::InvalidInput, "new ray must sit between the blown-up neighbours");
  std::vector<Int> a = surface.selfints();
  a[position] = checked::sub(a[position], 1);
  a[(position + 1) % n] = checked::sub(a[(position + 1) % n], 1);
  a.insert(a.begin() + static_cast<std::ptrdiff_t>(new_ray), Int{-1});
  return Blowup{surface, ToricSurface::from_selfints(a), position, new_ray};
}

std::size_t BlowdownMap::source_index(std::size_t target_index) const {
  return target_index < contracted ? target_index : target_index + 1;
}

DivisorClass BlowdownMap::push(const DivisorClass& d) const {
  require_same_surface(d.surface(), source);
  if (pairing(d, exceptional()) != 0)
    fail(ErrorCode::NotOrthogonal, "class is not orthogonal to the contracted ray " + std::to_string(contracted));
  std::vector<Int> c;
  c.reserve(target.num_rays());
  for (std::size_t j = 0; j < source.num_rays(); ++j)
    if (j != contracted) c.push_back(d.coeffs()[j]);
  return target.make_class(std::move(c));
}

DivisorClass BlowdownMap::pull(const DivisorClass& d) const { return inverse().pullback(d); }

Blowup BlowdownMap::inverse() const {
  const std::size_t n = source.num_rays();
  const std::size_t prev = (contracted + n - 1) % n;
  const std::size_t position = prev < contracted ? prev : prev - 1;
  const std::size_t new_ray = contracted;
  return Blowup{target, source, position, new_ray};
}

BlowdownMap blow_down(const ToricSurface& surface, std::size_t ray) {
  const std::size_t n = surface.num_rays();
  if (ray >= n) fail(ErrorCode::InvalidInput, "ray index out of range");
  if (surface.selfint(ray) != -1)
    fail(ErrorCode::NotContractible, "ray " + std::to_string(ray) + " has self-intersection " +
                                         std::to_string(surface.selfint(ray)) + ", not -1");
  if (n <= 3) fail(ErrorCode::RankTooLow, "cannot blow down below three rays");
  std::vector<Int> a = surface.selfints();
  a[(ray + n - 1) % n] = checked::add(a[(ray + n - 1) % n], 1);
  a[(ray + 1) % n] = checked::add(a[(ray + 1) % n], 1);
  a.erase(a.begin() + static_cast<std::ptrdiff_t>(ray));
  return BlowdownMap{surface, ToricSurface::from_selfints(a), ray};
}

std::vector<Int> GoodBasis::coords(const DivisorClass& d) const {
  std::vector<Int> out;
  out.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Int p = pairing(d, elements[k]);
    out.push_back(k == 0 ? p : checked::neg(p));
  }
  return out;
}

DivisorClass GoodBasis::from_coords(std::span<const Int> coords) const {
  if (coords.size() != elements.size()) fail(ErrorCode::InvalidInput, "expected one coordinate per basis element");
  DivisorClass d = elements.front().surface().zero();
  for (std::size_t k = 0; k < coords.size(); ++k) d += coords[k] * elements[k];
  return d;
}

namespace {

GoodBasis basis_from_steps(const ToricSurface& surface, const std::vector<BlowdownMap>& steps,
                           std::vector<std::size_t> path) {
  const ToricSurface terminal = steps.empty() ? surface : steps.back().target;
  GoodBasis basis;
  basis.blowdown_path = std::move(path);
  if (terminal.num_rays() == 3) {
    basis.elements.push_back(terminal.divisor(0));
    return basis;
  }
  // Hirzebruch surface (r, 0, -r, 0) up to rotation and reflection.
  Int r = 0;
  std::size_t p = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (terminal.selfint(i) > r) r = terminal.selfint(i), p = i;
  if (r % 2 == 0)
    fail(ErrorCode::EvenTerminalHirzebruch,
         "blow-down path ends at F_" + std::to_string(r) + ", which has no diagonalising basis");
  const Int a = (r - 1) / 2;
  const DivisorClass dp = terminal.divisor(p);
  const DivisorClass dq = terminal.divisor((p + 1) % 4);
  basis.terminal_r = r;
  basis.elements = {dp - a * dq, dp - (a + 1) * dq};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    for (auto& e : basis.elements) e = it->pull(e);
    basis.elements.push_back(it->exceptional());
  }
  return basis;
}

bool search_odd_path(const ToricSurface& current, std::vector<std::size_t>& labels, std::vector<BlowdownMap>& steps,
                     std::vector<std::size_t>& path, std::set<std::vector<Int>>& dead_ends) {
  if (current.num_rays() == 4) {
    const Int r = std::abs(current.selfint(0)) + std::abs(current.selfint(1));
    return r % 2 == 1;
  }
  if (current.num_rays() < 4 || dead_ends.count(current.selfints())) return false;
  for (std::size_t i = 0; i < current.num_rays(); ++i) {
    if (current.selfint(i) != -1) continue;
    BlowdownMap step = blow_down(current, i);
    const std::size_t label = labels[i];
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(i));
    steps.push_back(step);
    path.push_back(label);
    if (search_odd_path(step.target, labels, steps, path, dead_ends)) return true;
    path.pop_back();
    steps.pop_back();
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(i), label);
  }
  dead_ends.insert(current.selfints());
  return false;
}

}  // namespace

GoodBasis good_basis(const ToricSurface& surface, std::span<const std::size_t> path) {
  std::vector<std::size_t> labels(surface.num_rays());
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  std::vector<BlowdownMap> steps;
  ToricSurface current = surface;
  for (std::size_t label : path) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      fail(ErrorCode::InvalidPath, "ray " + std::to_string(label) + " is not present (already contracted?)");
    const auto i = static_cast<std::size_t>(it - labels.begin());
    if (current.num_rays() <= 4) fail(ErrorCode::InvalidPath, "path continues below a Hirzebruch surface");
    steps.push_back(blow_down(current, i));
    current = steps.back().target;
    labels.erase(it);
  }
  if (current.num_rays() != 4 && !(current.num_rays() == 3 && path.empty()))
    fail(ErrorCode::InvalidPath, "path does not end at a Hirzebruch surface");
  return basis_from_steps(surface, steps, {path.begin(), path.end()});
}

GoodBasis good_basis(const ToricSurface& surface) {
  if (surface.num_rays() <= 4) return good_basis(surface, std::span<const std::size_t>{});
  std::vector<std::size_t> labels(surface.num_rays());
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  std::vector<BlowdownMap> steps;
  std::vector<std::size_t> path;
  std::set<std::vector<Int>> dead_ends;
  if (!search_odd_path(surface, labels, steps, path, dead_ends))
    fail(ErrorCode::EvenTerminalHirzebruch, "no blow-down path reaches an odd Hirzebruch surface");
  return basis_from_steps(surface, steps, std::move(path));
}

DivisorClass FanAutomorphism::apply(const DivisorClass& d) const {
  const std::size_t n = d.surface().num_rays();
  if (ray_permutation.size() != n) fail(ErrorCode::SurfaceMismatch, "automorphism acts on a different surface");
  std::vector<Int> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) c[ray_permutation[i]] = d.coeffs()[i];
  return d.surface().make_class(std::move(c));
}

bool FanAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < ray_permutation.size(); ++i)
    if (ray_permutation[i] != i) return false;
  return true;
}

std::vector<FanAutomorphism> fan_automorphisms(const ToricSurface& surface) {
  const std::size_t n = surface.num_rays();
  const auto& a = surface.selfints();
  const auto& v = surface.rays();
  std::vector<FanAutomorphism> out;
  for (int reflect = 0; reflect < 2; ++reflect)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = reflect ? (k + n - i) % n : (i + k) % n;
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) match = a[perm[i]] == a[i];
      if (!match) continue;
      const Ray c0 = v[perm[0]], c1 = v[perm[1]];
      FanAutomorphism f{{c0.x, c1.x, c0.y, c1.y}, perm};
      for (std::size_t i = 0; i < n; ++i) {
        const Ray img{checked::add(checked::mul(c0.x, v[i].x), checked::mul(c1.x, v[i].y)),
                      checked::add(checked::mul(c0.y, v[i].x), checked::mul(c1.y, v[i].y))};
        if (!(img == v[perm[i]]))
          fail(ErrorCode::InternalInconsistency, "fan automorphism does not map rays to rays");
      }
      out.push_back(std::move(f));
    }
  return out;
}

std::vector<Int> normalize(std::span<const Int> selfints) {
  const std::size_t n = selfints.size();
  std::vector<Int> best(selfints.begin(), selfints.end());
  std::vector<Int> cand(n);
  for (int reflect = 0; reflect < 2; ++reflect)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = selfints[reflect ? (k + n - i) % n : (i + k) % n];
      if (cand < best) best = cand;
    }
  return best;
}

std::vector<std::size_t> rays_with_selfint(const ToricSurface& surface, Int value) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < surface.num_rays(); ++i)
    if (surface.selfint(i) == value) out.push_back(i);
  return out;
}

}  // namespace toricseq
