#include "toric/poset.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace toric {

Component Component::torus(std::size_t l) {
  return {IntMatrix(0, l), {}, std::vector<Rational>(l, Rational(0))};
}

std::string Component::label() const {
  std::ostringstream os;
  os << "basis " << basis.str() << " values [";
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << values[k].str();
  os << ']';
  return os.str();
}

bool label_less(const Component& a, const Component& b) {
  if (a.basis.rows() != b.basis.rows()) return a.basis.rows() < b.basis.rows();
  if (!(a.basis == b.basis)) return lex_less(a.basis, b.basis);
  return a.values < b.values;
}

namespace {

std::vector<TorsionValue> evaluate_rows(const IntMatrix& basis,
                                        std::span<const Rational> witness) {
  std::vector<TorsionValue> vals;
  vals.reserve(basis.rows());
  for (std::size_t k = 0; k < basis.rows(); ++k)
    vals.emplace_back(lattice::dot(basis.row(k), witness));
  return vals;
}

// Shared SNF back-substitution. When `components` is null only the count and
// emptiness are determined.
IntersectionResult solve_system(const IntMatrix& a, std::span<const TorsionValue> b,
                                bool enumerate) {
  if (b.size() != a.rows())
    throw std::invalid_argument("intersect_system: " + std::to_string(a.rows()) +
                                " characters but " + std::to_string(b.size()) + " values");
  const std::size_t m = a.rows();
  const std::size_t l = a.cols();
  IntersectionResult res;
  if (m == 0) {
    res.empty = false;
    res.count = 1;
    if (enumerate) res.components.push_back(Component::torus(l));
    return res;
  }

  SnfResult s = lattice::snf(a);
  std::vector<Rational> beta(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k)
      if (s.u(i, k) != 0) beta[i] += Rational(s.u(i, k)) * b[k].value();
    beta[i].canonicalize();
  }
  // Rows beyond the rank are consistency conditions k . b = 0 mod 1.
  for (std::size_t i = s.rank; i < m; ++i)
    if (reduce_mod_one(beta[i]) != 0) return res;

  res.empty = false;
  res.count = 1;
  for (std::size_t j = 0; j < s.rank; ++j) res.count *= s.d(j, j);
  if (!enumerate) return res;

  const std::size_t r = s.rank;
  // Full rank or trivial divisors: the row lattice needs no saturation.
  bool unit_divisors = true;
  for (std::size_t j = 0; j < r; ++j) unit_divisors = unit_divisors && s.d(j, j) == 1;
  const IntMatrix sat = r == l ? IntMatrix::identity(l)
                        : unit_divisors ? lattice::row_basis(a)
                                        : lattice::saturation(a);
  // Work with numerators over one denominator: w_j = (beta_j + t_j) / d_j has
  // denominator dividing q_j d_j, and u = V w is updated column by column as t
  // advances.
  Integer den = 1;
  for (std::size_t j = 0; j < r; ++j) {
    Integer qd = beta[j].get_den() * s.d(j, j);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), qd.get_mpz_t());
  }
  std::vector<Integer> step(l * r), num(l, Integer(0));
  for (std::size_t j = 0; j < r; ++j) {
    Integer scale = den / s.d(j, j);
    Integer base = beta[j].get_num() * (scale / beta[j].get_den());
    for (std::size_t i = 0; i < l; ++i) {
      step[i * r + j] = s.v(i, j) * scale;
      num[i] += s.v(i, j) * base;
    }
  }
  std::vector<unsigned long> t(r, 0), radix(r);
  for (std::size_t j = 0; j < r; ++j) radix[j] = s.d(j, j).get_ui();
  Integer x;
  for (;;) {
    std::vector<Rational> u(l);
    for (std::size_t i = 0; i < l; ++i) {
      mpz_fdiv_r(x.get_mpz_t(), num[i].get_mpz_t(), den.get_mpz_t());
      u[i] = Rational(x, den);
      u[i].canonicalize();
    }
    std::vector<TorsionValue> vals;
    vals.reserve(sat.rows());
    for (std::size_t k = 0; k < sat.rows(); ++k) {
      x = 0;
      for (std::size_t i = 0; i < l; ++i)
        if (sat(k, i) != 0) x += sat(k, i) * num[i];
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
      Rational v(x, den);
      v.canonicalize();
      vals.emplace_back(std::move(v));
    }
    res.components.push_back(Component{sat, std::move(vals), std::move(u)});

    std::size_t k = 0;
    for (; k < r; ++k) {
      if (++t[k] < radix[k]) {
        for (std::size_t i = 0; i < l; ++i) num[i] += step[i * r + k];
        break;
      }
      t[k] = 0;
      for (std::size_t i = 0; i < l; ++i) num[i] -= step[i * r + k] * (radix[k] - 1);
    }
    if (k == r) break;
  }
  return res;
}

}  // namespace

Component make_component(const IntMatrix& characters, std::vector<Rational> witness) {
  IntMatrix sat = lattice::saturation(characters);
  auto vals = evaluate_rows(sat, witness);
  return {std::move(sat), std::move(vals), std::move(witness)};
}

bool contained_in(const Component& small, const Component& big) {
  if (small.ambient_dimension() != big.ambient_dimension()) return false;
  if (!lattice::is_sublattice(big.basis, small.basis)) return false;
  for (std::size_t k = 0; k < big.basis.rows(); ++k)
    if (TorsionValue(lattice::dot(big.basis.row(k), small.witness)) != big.values[k])
      return false;
  return true;
}

bool hypersurface_contains(const Hypersurface& h, const Component& w) {
  return lattice::contains(w.basis, h.chi) &&
         TorsionValue(lattice::dot(h.chi, w.witness)) == h.c;
}

IntersectionResult intersect_system(const IntMatrix& a, std::span<const TorsionValue> b) {
  return solve_system(a, b, true);
}

IntersectionResult intersect_hypersurfaces(const ToricArrangement& arr,
                                           std::span<const std::size_t> indices) {
  IntMatrix a(0, arr.dimension());
  std::vector<TorsionValue> b;
  for (std::size_t i : indices) {
    a.append_row(arr[i].chi);
    b.push_back(arr[i].c);
  }
  return intersect_system(a, b);
}

std::vector<Component> cut(const Component& w, const Hypersurface& h) {
  if (lattice::contains(w.basis, h.chi)) return {};  // contains w, or misses it
  IntMatrix a = w.basis;
  a.append_row(h.chi);
  std::vector<TorsionValue> b = w.values;
  b.push_back(h.c);
  return intersect_system(a, b).components;
}

IntersectionPoset::IntersectionPoset(std::size_t l, std::vector<Component> components)
    : l_(l), components_(std::move(components)) {
  std::stable_sort(components_.begin(), components_.end(), label_less);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    std::size_t codim = components_[i].codimension();
    if (layers_.size() <= codim) layers_.resize(codim + 1);
    layers_[codim].push_back(i);
  }
  const std::size_t n = components_.size();
  order_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (components_[a].codimension() > components_[b].codimension() &&
          contained_in(components_[a], components_[b]))
        order_[a * n + b] = true;
}

std::vector<std::size_t> IntersectionPoset::layer_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers_) out.push_back(l.size());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (less(a, b) && components_[a].codimension() == components_[b].codimension() + 1)
        out.emplace_back(a, b);
  return out;
}

std::size_t IntersectionPoset::find(const Component& c) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), c, label_less);
  if (it != components_.end() && *it == c) return static_cast<std::size_t>(it - components_.begin());
  return components_.size();
}

namespace kernels {

std::vector<Component> expand_layer_serial(const ToricArrangement& arr,
                                           std::span<const Component> layer) {
  std::vector<Component> out;
  for (const auto& w : layer)
    for (const auto& h : arr.hypersurfaces()) {
      auto pieces = cut(w, h);
      std::move(pieces.begin(), pieces.end(), std::back_inserter(out));
    }
  return out;
}

std::vector<Component> expand_layer_omp(const ToricArrangement& arr,
                                        std::span<const Component> layer) {
  const std::size_t n = arr.size();
  const std::size_t pairs = layer.size() * n;
  std::vector<std::vector<Component>> slots(pairs);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pairs); ++p) {
    const auto idx = static_cast<std::size_t>(p);
    slots[idx] = cut(layer[idx / n], arr[idx % n]);
  }
  std::vector<Component> out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

namespace {

bool subset_connected(const ToricArrangement& arr, unsigned long long mask) {
  IntMatrix a(0, arr.dimension());
  std::vector<TorsionValue> b;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (mask >> i & 1ULL) {
      a.append_row(arr[i].chi);
      b.push_back(arr[i].c);
    }
  IntersectionResult r = solve_system(a, b, false);
  return r.empty || r.count <= 1;
}

void check_sweep_size(const ToricArrangement& arr) {
  if (arr.size() >= 40) throw std::invalid_argument("unimodularity sweep limited to n < 40");
}

}  // namespace

bool all_intersections_connected_serial(const ToricArrangement& arr) {
  check_sweep_size(arr);
  const unsigned long long total = 1ULL << arr.size();
  for (unsigned long long mask = 1; mask < total; ++mask)
    if (!subset_connected(arr, mask)) return false;
  return true;
}

bool all_intersections_connected_omp(const ToricArrangement& arr) {
  check_sweep_size(arr);
  const long long total = static_cast<long long>(1ULL << arr.size());
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 64)
  for (long long mask = 1; mask < total; ++mask) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    if (!subset_connected(arr, static_cast<unsigned long long>(mask)))
      ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

}  // namespace kernels

IntersectionPoset build_poset(const ToricArrangement& arr, Execution exec) {
  std::vector<Component> all{Component::torus(arr.dimension())};
  std::vector<Component> layer = all;
  while (!layer.empty()) {
    std::vector<Component> next = exec == Execution::parallel
                                      ? kernels::expand_layer_omp(arr, layer)
                                      : kernels::expand_layer_serial(arr, layer);
    std::sort(next.begin(), next.end(), label_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return IntersectionPoset(arr.dimension(), std::move(all));
}

bool is_unimodular_by_minors(const ToricArrangement& arr) {
  IntMatrix a = arr.exponent_matrix();
  IntMatrix sat = lattice::saturation(a);
  IntMatrix coords(0, sat.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto c = lattice::coordinates(sat, a.row(i));
    if (!c) throw std::logic_error("character outside its own saturated lattice");
    coords.append_row(*c);
  }
  return lattice::is_unimodular_matrix(coords);
}

bool is_unimodular(const ToricArrangement& arr, Execution exec) {
  bool connected = exec == Execution::parallel
                       ? kernels::all_intersections_connected_omp(arr)
                       : kernels::all_intersections_connected_serial(arr);
  bool minors = is_unimodular_by_minors(arr);
  if (connected != minors)
    throw UnimodularityMismatch(
        std::string("unimodularity conditions disagree: intersections ") +
        (connected ? "connected" : "disconnected") + ", minor test " +
        (minors ? "passes" : "fails"));
  return connected;
}

}  // namespace toric
