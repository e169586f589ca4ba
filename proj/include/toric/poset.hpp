#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/execution.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// A connected component of an intersection of toric hypersurfaces: the
/// coset { u : h . u = values[h] mod 1 for every row h of basis } of a
/// subtorus, in log coordinates z = exp(2 pi i u).
///
/// `basis` is the saturated HNF basis of the characters that are constant on
/// the component. Equality and ordering look only at (basis, values); the
/// witness is any rational point on the component.
struct Component {
  IntMatrix basis;
  std::vector<TorsionValue> values;
  std::vector<Rational> witness;

  std::size_t ambient_dimension() const { return basis.cols(); }
  std::size_t codimension() const { return basis.rows(); }
  std::size_t dimension() const { return basis.cols() - basis.rows(); }

  /// The full torus (ℂ*)^l.
  static Component torus(std::size_t l);

  std::string label() const;

  friend bool operator==(const Component& a, const Component& b) {
    return a.basis == b.basis && a.values == b.values;
  }
};

/// Total order on canonical labels.
bool label_less(const Component& a, const Component& b);

/// Canonical component through a witness: saturates the row lattice of
/// `characters` and evaluates each basis row at the witness.
Component make_component(const IntMatrix& characters, std::vector<Rational> witness);

/// Component `small` lies inside component `big`.
bool contained_in(const Component& small, const Component& big);

/// The hypersurface contains the component.
bool hypersurface_contains(const Hypersurface& h, const Component& w);

struct IntersectionResult {
  bool empty = true;
  Integer count = 0;
  std::vector<Component> components;
};

/// Solves chi_k . u = b_k (mod 1) for the rows chi_k of `a`. Components are
/// produced by Smith-normal-form back-substitution, one per residue vector,
/// with free coordinates fixed to zero.
IntersectionResult intersect_system(const IntMatrix& a, std::span<const TorsionValue> b);

/// intersect_system for the hypersurfaces of `arr` with the given indices.
IntersectionResult intersect_hypersurfaces(const ToricArrangement& arr,
                                           std::span<const std::size_t> indices);

/// Components of `w` intersected with hypersurface h (empty when h contains
/// w or misses it).
std::vector<Component> cut(const Component& w, const Hypersurface& h);

class IntersectionPoset {
 public:
  IntersectionPoset() = default;
  IntersectionPoset(std::size_t l, std::vector<Component> components);

  std::size_t ambient_dimension() const { return l_; }
  std::size_t size() const { return components_.size(); }
  const Component& operator[](std::size_t i) const { return components_.at(i); }
  const std::vector<Component>& components() const { return components_; }

  /// Indices of components of codimension k (sorted by label).
  const std::vector<std::size_t>& layer(std::size_t codim) const { return layers_.at(codim); }
  std::size_t layer_count() const { return layers_.size(); }
  std::vector<std::size_t> layer_sizes() const;

  /// components_[a] is strictly contained in components_[b].
  bool less(std::size_t a, std::size_t b) const { return order_[a * components_.size() + b]; }

  /// Pairs (lower, upper) with lower < upper and codimensions differing by 1.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Index of a component with the same label, or size() when absent.
  std::size_t find(const Component& c) const;

 private:
  std::size_t l_ = 0;
  std::vector<Component> components_;
  std::vector<std::vector<std::size_t>> layers_;
  std::vector<bool> order_;
};

namespace kernels {

/// Every component obtained by cutting a component of `layer` with a
/// hypersurface of `arr`, in (component, hypersurface) order. Not deduplicated.
std::vector<Component> expand_layer_serial(const ToricArrangement& arr,
                                           std::span<const Component> layer);
std::vector<Component> expand_layer_omp(const ToricArrangement& arr,
                                        std::span<const Component> layer);

/// Condition (1) of unimodularity: every subset intersection is empty or
/// connected. Sweeps all 2^n subsets.
bool all_intersections_connected_serial(const ToricArrangement& arr);
bool all_intersections_connected_omp(const ToricArrangement& arr);

}  // namespace kernels

/// Ranked poset of all connected components of all intersections, built
/// layer by layer by codimension.
IntersectionPoset build_poset(const ToricArrangement& arr,
                              Execution exec = Execution::parallel);

/// Raised when the intersection-connectivity test and the minor test
/// disagree, which would indicate a defect in the lattice code.
class UnimodularityMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every intersection is empty or connected. Cross-checked against the minor
/// criterion applied to the exponent matrix in coordinates of its saturated
/// row lattice.
bool is_unimodular(const ToricArrangement& arr, Execution exec = Execution::parallel);

/// Minor criterion only: all maximal minors of the exponent matrix, written
/// in a basis of its saturated row lattice, lie in {-1, 0, 1}.
bool is_unimodular_by_minors(const ToricArrangement& arr);

}  // namespace toric
