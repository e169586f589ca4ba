#pragma once

// Central hyperplane arrangements arising as local arrangements of toric
// arrangements: intersection lattice, Möbius function, Orlik-Solomon
// dimensions by nbc sets, and restriction.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/lattice.hpp"
#include "toric/polynomial.hpp"
#include "toric/poset.hpp"

namespace toric {

/// Hyperplanes through the origin of C^l, one integer normal per row. No
/// zero normals; no two normals define the same hyperplane.
class CentralArrangement {
 public:
  explicit CentralArrangement(std::size_t l = 0);
  CentralArrangement(std::size_t l, IntMatrix normals);

  std::size_t dimension() const { return l_; }
  std::size_t size() const { return normals_.rows(); }
  const IntMatrix& normals() const { return normals_; }

  /// Arrangement without hyperplane h.
  CentralArrangement deletion(std::size_t h) const;
  /// Arrangement {H cap H_h : H != H_h} inside H_h, identified with C^{l-1}
  /// through an integer basis of H_h; coincident restrictions merged.
  CentralArrangement restriction(std::size_t h) const;

 private:
  std::size_t l_ = 0;
  IntMatrix normals_;
};

/// A flat X of the lattice: the subspace cut out by the hyperplanes in
/// `hyperplanes` (every hyperplane containing X).
struct Flat {
  IntMatrix basis;  ///< saturated HNF basis of the normal lattice of X
  std::vector<std::size_t> hyperplanes;
  std::uint64_t mask = 0;
  std::int64_t mobius = 0;  ///< mu(0, X)

  std::size_t rank() const { return basis.rows(); }
};

class SubspaceLattice {
 public:
  SubspaceLattice() = default;
  explicit SubspaceLattice(std::vector<Flat> flats);

  std::size_t size() const { return flats_.size(); }
  const Flat& operator[](std::size_t i) const { return flats_.at(i); }
  const std::vector<Flat>& flats() const { return flats_; }

  /// X_a <= X_b in the lattice (X_a contains X_b as a subspace).
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t rank() const;

 private:
  std::vector<Flat> flats_;
};

/// Local arrangement at W: the characters of the hypersurfaces containing W.
/// Throws std::invalid_argument when W is not a component of the arrangement.
CentralArrangement local_arrangement(const ToricArrangement& arr, const Component& w);

/// All flats ordered by rank, with Möbius values from the defining recursion.
SubspaceLattice intersection_lattice(const CentralArrangement& c);

/// sum_X |mu(0, X)| t^{rank X}.
Polynomial whitney_poincare(const CentralArrangement& c);

/// Number of nbc sets of each size for the total order `ordering`
/// (ordering[k] = index of the k-th smallest hyperplane).
std::vector<std::int64_t> nbc_dimensions(const CentralArrangement& c,
                                         std::span<const std::size_t> ordering);
std::vector<std::int64_t> nbc_dimensions(const CentralArrangement& c);

/// Top coefficient of the local Poincaré polynomial at W.
std::int64_t top_local_multiplicity(const ToricArrangement& arr, const Component& w);

}  // namespace toric
