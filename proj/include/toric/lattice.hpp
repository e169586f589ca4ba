#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integer
// kernels, saturation and minor tests. All arithmetic is arbitrary precision.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Zero-sized
/// dimensions are allowed (a 0 x l matrix is the empty character system).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Integer> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  IntVector row_vector(std::size_t i) const;

  void append_row(std::span<const Integer> r);
  IntMatrix select_rows(std::span<const std::size_t> indices) const;
  IntMatrix top_rows(std::size_t count) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Lexicographic order on (rows, cols, entries); used for canonical sorting.
bool lex_less(const IntMatrix& a, const IntMatrix& b);

struct HnfResult {
  IntMatrix h;  ///< row-style Hermite normal form, zero rows last
  IntMatrix u;  ///< unimodular, u * a == h
  std::size_t rank = 0;
};

struct SnfResult {
  IntMatrix d;  ///< diagonal d_1 | d_2 | ... | d_r, zeros afterwards
  IntMatrix u;  ///< unimodular, m x m
  IntMatrix v;  ///< unimodular, n x n
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 .. d_r.
  IntVector divisors() const;
};

namespace lattice {

/// Row-style HNF with positive pivots and entries above each pivot
/// reduced into [0, pivot). Unique for a given row lattice.
HnfResult hnf(const IntMatrix& a);

/// Smith normal form with u * a * v == d.
SnfResult snf(const IntMatrix& a);

/// HNF basis of { k : k * a == 0 }, as a (rows - rank) x rows matrix.
IntMatrix left_kernel(const IntMatrix& a);

/// HNF basis of { x : a * x == 0 }, one kernel vector per row.
IntMatrix right_kernel(const IntMatrix& a);

/// HNF basis of the integer points of the rational row span of a.
IntMatrix saturation(const IntMatrix& a);

/// Nonzero rows of hnf(a).h, i.e. the canonical basis of the row lattice.
IntMatrix row_basis(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Determinant of a square matrix by fraction-free elimination.
Integer determinant(const IntMatrix& a);

/// True iff every cols x cols minor lies in {-1, 0, 1}. Vacuously true when
/// rows < cols.
bool is_unimodular_matrix(const IntMatrix& a);

/// gcd of the entries; throws std::invalid_argument on the zero vector.
Integer content(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);

/// Coordinates of v with respect to the rows of an HNF basis (nonzero rows
/// only), or nullopt when v is not in the row lattice.
std::optional<IntVector> coordinates(const IntMatrix& hnf_basis,
                                     std::span<const Integer> v);
bool contains(const IntMatrix& hnf_basis, std::span<const Integer> v);

/// Row lattice of `sub` is contained in the lattice with HNF basis `basis`.
bool is_sublattice(const IntMatrix& sub, const IntMatrix& basis);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);

}  // namespace lattice
}  // namespace toric
