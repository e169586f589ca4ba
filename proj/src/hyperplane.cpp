#include "toric/hyperplane.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

// Primitive, sign-normalized representative of the line spanned by v.
IntVector normal_direction(std::span<const Integer> v) {
  Integer g = lattice::content(v);
  IntVector out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  auto lead = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0)
    for (auto& x : out) x = -x;
  return out;
}

}  // namespace

CentralArrangement::CentralArrangement(std::size_t l) : l_(l), normals_(0, l) {}

CentralArrangement::CentralArrangement(std::size_t l, IntMatrix normals)
    : l_(l), normals_(std::move(normals)) {
  if (normals_.cols() != l_ && normals_.rows() > 0)
    throw std::invalid_argument("central arrangement: normal length differs from dimension");
  if (normals_.rows() == 0) normals_ = IntMatrix(0, l_);
  std::vector<IntVector> seen;
  for (std::size_t i = 0; i < normals_.rows(); ++i) {
    auto r = normals_.row(i);
    if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; }))
      throw std::invalid_argument("central arrangement: zero normal");
    IntVector d = normal_direction(r);
    if (std::find(seen.begin(), seen.end(), d) != seen.end())
      throw std::invalid_argument("central arrangement: repeated hyperplane");
    seen.push_back(std::move(d));
  }
}

CentralArrangement CentralArrangement::deletion(std::size_t h) const {
  if (h >= size()) throw std::out_of_range("deletion: hyperplane index");
  IntMatrix rest(0, l_);
  for (std::size_t i = 0; i < size(); ++i)
    if (i != h) rest.append_row(normals_.row(i));
  return CentralArrangement(l_, std::move(rest));
}

CentralArrangement CentralArrangement::restriction(std::size_t h) const {
  if (h >= size()) throw std::out_of_range("restriction: hyperplane index");
  IntMatrix line(0, l_);
  line.append_row(normals_.row(h));
  // Rows span the integer points of H_h; they serve as coordinates on it.
  IntMatrix frame = lattice::right_kernel(line);
  std::vector<IntVector> seen;
  IntMatrix out(0, frame.rows());
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == h) continue;
    IntVector image(frame.rows(), Integer(0));
    for (std::size_t k = 0; k < frame.rows(); ++k) image[k] = lattice::dot(normals_.row(i), frame.row(k));
    IntVector d = normal_direction(image);
    if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
    out.append_row(d);
    seen.push_back(std::move(d));
  }
  return CentralArrangement(frame.rows(), std::move(out));
}

SubspaceLattice::SubspaceLattice(std::vector<Flat> flats) : flats_(std::move(flats)) {}

bool SubspaceLattice::leq(std::size_t a, std::size_t b) const {
  return (flats_.at(a).mask & ~flats_.at(b).mask) == 0;
}

std::size_t SubspaceLattice::rank() const {
  std::size_t r = 0;
  for (const auto& f : flats_) r = std::max(r, f.rank());
  return r;
}

CentralArrangement local_arrangement(const ToricArrangement& arr, const Component& w) {
  const std::size_t l = arr.dimension();
  if (w.ambient_dimension() != l || w.witness.size() != l || w.values.size() != w.basis.rows())
    throw std::invalid_argument("local_arrangement: component shape does not match arrangement");
  if (!(lattice::saturation(w.basis) == w.basis))
    throw std::invalid_argument("local_arrangement: component basis is not a saturated HNF");
  IntMatrix normals(0, l);
  for (const auto& h : arr.hypersurfaces())
    if (hypersurface_contains(h, w)) normals.append_row(h.chi);
  if (lattice::rank(normals) != w.codimension())
    throw std::invalid_argument("local_arrangement: not a component of the arrangement");
  return CentralArrangement(l, std::move(normals));
}

SubspaceLattice intersection_lattice(const CentralArrangement& c) {
  const std::size_t n = c.size();
  if (n > 64) throw std::invalid_argument("intersection_lattice: more than 64 hyperplanes");
  const IntMatrix& normals = c.normals();

  std::vector<Flat> flats;
  flats.push_back({IntMatrix(0, c.dimension()), {}, 0, 1});
  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::map<std::uint64_t, Flat> next;
    for (std::size_t f : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        if (flats[f].mask >> i & 1ULL) continue;
        IntMatrix gens = flats[f].basis;
        gens.append_row(normals.row(i));
        IntMatrix sat = lattice::saturation(gens);
        std::uint64_t mask = 0;
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < n; ++j)
          if (lattice::contains(sat, normals.row(j))) {
            mask |= 1ULL << j;
            members.push_back(j);
          }
        if (!next.contains(mask)) next.emplace(mask, Flat{std::move(sat), std::move(members), mask, 0});
      }
    }
    layer.clear();
    for (auto& [mask, flat] : next) {
      layer.push_back(flats.size());
      flats.push_back(std::move(flat));
    }
  }
  std::stable_sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.hyperplanes < b.hyperplanes;
  });
  // mu(0, X) = - sum over Y < X of mu(0, Y); flats are in rank order.
  for (std::size_t x = 1; x < flats.size(); ++x) {
    std::int64_t s = 0;
    for (std::size_t y = 0; y < x; ++y)
      if (flats[y].rank() < flats[x].rank() && (flats[y].mask & ~flats[x].mask) == 0)
        s += flats[y].mobius;
    flats[x].mobius = -s;
  }
  return SubspaceLattice(std::move(flats));
}

Polynomial whitney_poincare(const CentralArrangement& c) {
  SubspaceLattice lat = intersection_lattice(c);
  std::vector<std::int64_t> coeffs(lat.rank() + 1, 0);
  for (const auto& f : lat.flats()) coeffs[f.rank()] += f.mobius < 0 ? -f.mobius : f.mobius;
  return Polynomial(std::move(coeffs));
}

std::vector<std::int64_t> nbc_dimensions(const CentralArrangement& c,
                                         std::span<const std::size_t> ordering) {
  const std::size_t n = c.size();
  if (ordering.size() != n) throw std::invalid_argument("nbc: ordering has wrong length");
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (ordering[k] >= n || position[ordering[k]] != n)
      throw std::invalid_argument("nbc: ordering is not a permutation");
    position[ordering[k]] = k;
  }
  if (n > 24) throw std::invalid_argument("nbc: subset enumeration limited to 24 hyperplanes");

  const std::uint32_t total = 1u << n;
  std::vector<bool> independent(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    IntMatrix sub(0, c.dimension());
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.append_row(c.normals().row(i));
    independent[mask] = lattice::rank(sub) == static_cast<std::size_t>(std::popcount(mask));
  }
  std::vector<std::uint32_t> broken;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (independent[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if (mask >> i & 1u) minimal = independent[mask & ~(1u << i)];
    if (!minimal) continue;
    std::size_t least = n;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1u) && (least == n || position[i] < position[least])) least = i;
    broken.push_back(mask & ~(1u << least));
  }
  std::vector<std::int64_t> dims(c.dimension() + 1, 0);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!independent[mask]) continue;
    bool nbc = std::none_of(broken.begin(), broken.end(),
                            [mask](std::uint32_t b) { return (b & ~mask) == 0; });
    if (nbc) ++dims[static_cast<std::size_t>(std::popcount(mask))];
  }
  while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
  return dims;
}

std::vector<std::int64_t> nbc_dimensions(const CentralArrangement& c) {
  std::vector<std::size_t> identity(c.size());
  std::iota(identity.begin(), identity.end(), 0);
  return nbc_dimensions(c, identity);
}

std::int64_t top_local_multiplicity(const ToricArrangement& arr, const Component& w) {
  return whitney_poincare(local_arrangement(arr, w)).coefficient(w.codimension());
}

}  // namespace toric
