#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/execution.hpp"
#include "toric/polynomial.hpp"
#include "toric/poset.hpp"

namespace toric {

/// Poincaré polynomial of the complement from the layered decomposition:
/// sum over components W of m(W) t^{codim W} (1 + t)^{dim W}, where m(W) is
/// the top coefficient of the local hyperplane complement at W.
Polynomial dcp_poincare(const ToricArrangement& arr, Execution exec = Execution::parallel);
Polynomial dcp_poincare(const ToricArrangement& arr, const IntersectionPoset& poset);

/// Outcome of checking (or searching for) a deletion-restriction ordering.
struct DrReport {
  bool found = false;                  ///< an ordering is present
  std::vector<std::size_t> ordering;   ///< 0-based hypersurface indices
  std::vector<std::size_t> step_counts;  ///< entry k: distinct components on K_{ordering[k+1]}
  bool verdict = false;                ///< every step_counts[k] <= k + 1
};

/// For each step i >= 2 counts the distinct components among
/// K_{s(1)} cap K_{s(i)}, ..., K_{s(i-1)} cap K_{s(i)}.
DrReport dr_condition_check(const ToricArrangement& arr, std::span<const std::size_t> ordering);

/// Lexicographically first ordering passing dr_condition_check, found by
/// depth-first search abandoning a prefix at its first failing step.
/// Requires at most 12 hypersurfaces.
DrReport find_dr_ordering(const ToricArrangement& arr);

/// Raised when the deletion-restriction recursion is not justified.
class DrRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Poincaré polynomial via Poin(M_i) = Poin(M_{i-1}) + t Poin(M''), with
/// Poin(M'') evaluated recursively on the restricted arrangement.
/// Throws DrRefusal when `ordering` fails the condition or when some
/// restricted arrangement admits no ordering.
Polynomial dr_poincare(const ToricArrangement& arr, std::span<const std::size_t> ordering);

/// Intermediate polynomials Poin(M_0), ..., Poin(M_n) of the recursion.
std::vector<Polynomial> dr_poincare_chain(const ToricArrangement& arr,
                                          std::span<const std::size_t> ordering);

/// Betti numbers of the complement (coefficients of dcp_poincare).
std::vector<std::int64_t> betti(const ToricArrangement& arr);

}  // namespace toric
