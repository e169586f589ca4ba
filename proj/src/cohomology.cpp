#include "toric/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "toric/hyperplane.hpp"

namespace toric {

Polynomial dcp_poincare(const ToricArrangement& arr, const IntersectionPoset& poset) {
  Polynomial total;
  for (const auto& w : poset.components()) {
    std::int64_t m = top_local_multiplicity(arr, w);
    total += Polynomial::monomial(m, w.codimension()) *
             Polynomial::one_plus_t_pow(w.dimension());
  }
  return total;
}

Polynomial dcp_poincare(const ToricArrangement& arr, Execution exec) {
  return dcp_poincare(arr, build_poset(arr, exec));
}

namespace {

// Components of K_r cap K_i for every ordered pair, computed on demand.
class PairTable {
 public:
  explicit PairTable(const ToricArrangement& arr)
      : arr_(arr), cells_(arr.size() * arr.size()), ready_(arr.size() * arr.size(), false) {}

  const std::vector<Component>& get(std::size_t r, std::size_t i) {
    const std::size_t k = std::min(r, i) * arr_.size() + std::max(r, i);
    if (!ready_[k]) {
      const std::size_t idx[2] = {r, i};
      cells_[k] = intersect_hypersurfaces(arr_, idx).components;
      ready_[k] = true;
    }
    return cells_[k];
  }

  // Distinct components on K_i cut out by the hypersurfaces in `prior`.
  std::size_t count(std::span<const std::size_t> prior, std::size_t i) {
    std::vector<Component> seen;
    for (std::size_t r : prior)
      for (const auto& c : get(r, i))
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
    return seen.size();
  }

 private:
  const ToricArrangement& arr_;
  std::vector<std::vector<Component>> cells_;
  std::vector<bool> ready_;
};

void check_permutation(std::span<const std::size_t> ordering, std::size_t n) {
  if (ordering.size() != n)
    throw std::invalid_argument("ordering must list all " + std::to_string(n) + " hypersurfaces");
  std::vector<bool> seen(n, false);
  for (std::size_t i : ordering) {
    if (i >= n || seen[i]) throw std::invalid_argument("ordering is not a permutation");
    seen[i] = true;
  }
}

}  // namespace

DrReport dr_condition_check(const ToricArrangement& arr, std::span<const std::size_t> ordering) {
  check_permutation(ordering, arr.size());
  PairTable pairs(arr);
  DrReport rep;
  rep.found = true;
  rep.ordering.assign(ordering.begin(), ordering.end());
  rep.verdict = true;
  for (std::size_t k = 1; k < ordering.size(); ++k) {
    std::size_t c = pairs.count(ordering.subspan(0, k), ordering[k]);
    rep.step_counts.push_back(c);
    if (c > k) rep.verdict = false;
  }
  return rep;
}

DrReport find_dr_ordering(const ToricArrangement& arr) {
  const std::size_t n = arr.size();
  if (n > 12) throw std::invalid_argument("ordering search limited to 12 hypersurfaces");
  PairTable pairs(arr);
  // A prefix's viability depends only on its set of hypersurfaces, so failed
  // sets are remembered.
  std::vector<bool> dead(std::size_t{1} << n, false);
  std::vector<std::size_t> seq;

  auto search = [&](auto&& self, std::uint32_t used) -> bool {
    if (seq.size() == n) return true;
    if (dead[used]) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (used >> i & 1u) continue;
      if (pairs.count(seq, i) > seq.size()) continue;
      seq.push_back(i);
      if (self(self, used | (1u << i))) return true;
      seq.pop_back();
    }
    dead[used] = true;
    return false;
  };

  if (!search(search, 0)) return DrReport{};
  return dr_condition_check(arr, seq);
}

std::vector<Polynomial> dr_poincare_chain(const ToricArrangement& arr,
                                          std::span<const std::size_t> ordering) {
  DrReport rep = dr_condition_check(arr, ordering);
  if (!rep.verdict) {
    std::size_t k = 0;
    while (rep.step_counts[k] <= k + 1) ++k;
    throw DrRefusal("deletion-restriction condition fails at step " + std::to_string(k + 2) +
                    ": " + std::to_string(rep.step_counts[k]) + " components > " +
                    std::to_string(k + 1));
  }
  const std::size_t l = arr.dimension();
  std::vector<Polynomial> chain{Polynomial::one_plus_t_pow(l)};
  for (std::size_t k = 0; k < ordering.size(); ++k) {
    RestrictedArrangement res = restrict_to(arr, ordering[k], ordering.subspan(0, k));
    if (k > 0 && res.ambient.size() != rep.step_counts[k - 1])
      throw std::logic_error("restriction and component count disagree at step " +
                             std::to_string(k + 1));
    Polynomial restricted;
    if (res.ambient.empty()) {
      restricted = Polynomial::one_plus_t_pow(l - 1);
    } else {
      DrReport inner = find_dr_ordering(res.ambient);
      if (!inner.found)
        throw DrRefusal("restricted arrangement at step " + std::to_string(k + 1) +
                        " admits no deletion-restriction ordering");
      restricted = dr_poincare(res.ambient, inner.ordering);
    }
    chain.push_back(chain.back() + Polynomial::monomial(1, 1) * restricted);
  }
  return chain;
}

Polynomial dr_poincare(const ToricArrangement& arr, std::span<const std::size_t> ordering) {
  return dr_poincare_chain(arr, ordering).back();
}

std::vector<std::int64_t> betti(const ToricArrangement& arr) {
  return dcp_poincare(arr).coefficients();
}

}  // namespace toric
