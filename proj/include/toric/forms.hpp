#pragma once

// Numerical relations among products of the logarithmic 1-forms
//   xi_i  = dz_i / z_i                    (1 <= i <= l)
//   psi_j = d(chi_j - c_j) / (chi_j - c_j) (1 <= j <= n)
// evaluated pointwise on the complement.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "toric/arrangement.hpp"
#include "toric/execution.hpp"

namespace toric {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;

struct FormGenerator {
  enum class Kind { coordinate, character };
  Kind kind = Kind::coordinate;
  std::size_t index = 0;  ///< 0-based

  static FormGenerator xi(std::size_t i) { return {Kind::coordinate, i}; }
  static FormGenerator psi(std::size_t j) { return {Kind::character, j}; }

  /// "x1", "p3", ... (1-based).
  std::string name() const;
};

/// Generators in the fixed order xi_1..xi_l, psi_1..psi_n.
std::vector<FormGenerator> generators(const ToricArrangement& arr);

/// Ordered pairs (a, b), a < b, indexing the wedge monomials g_a ^ g_b.
std::vector<std::pair<std::size_t, std::size_t>> wedge_monomials(std::size_t generator_count);

/// Position of g_a ^ g_b (a < b) among the wedge monomials.
std::size_t monomial_index(std::size_t a, std::size_t b, std::size_t generator_count);

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimum distance |chi_j(z) - c_j| required of sample points.
inline constexpr double kSampleClearance = 1e-3;

/// Deterministic point of the complement: log-uniform moduli in [1/2, 2],
/// uniform arguments, redrawn (up to 1000 times) while some
/// |chi_j(z) - c_j| < kSampleClearance.
Point sample_point(const ToricArrangement& arr, std::uint64_t seed);

/// The k-th point of the sample stream for `seed`.
Point sample_point(const ToricArrangement& arr, std::uint64_t seed, std::size_t k);

Complex character_value(const Hypersurface& h, const Point& z);
Complex root_of_unity(const TorsionValue& c);

/// Covector of the generator at z in the basis dz_1, ..., dz_l.
Eigen::VectorXcd eval_generator(const ToricArrangement& arr, FormGenerator g, const Point& z);

/// Coefficients of u ^ v in the basis dz_p ^ dz_q, p < q, lexicographic.
Eigen::VectorXcd wedge(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

struct RelationBasis {
  Eigen::MatrixXcd relations;  ///< one orthonormal relation per row
  std::vector<double> singular_values;  ///< descending, relative to the largest
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::size_t monomial_count = 0;
  /// Smallest kept over largest discarded singular value (infinity when
  /// nothing is discarded or nothing kept).
  double gap = 0.0;

  std::size_t nullity() const { return static_cast<std::size_t>(relations.rows()); }
  std::size_t rank() const { return monomial_count - nullity(); }
};

inline constexpr double kDefaultRelationTolerance = 1e-8;
std::size_t default_sample_count(const ToricArrangement& arr);

namespace kernels {

/// (samples * C(l,2)) x C(l+n,2) matrix of wedge monomials at the sample
/// points, each row scaled to unit 2-norm.
Eigen::MatrixXcd evaluation_matrix_serial(const ToricArrangement& arr, std::size_t samples,
                                          std::uint64_t seed);
Eigen::MatrixXcd evaluation_matrix_omp(const ToricArrangement& arr, std::size_t samples,
                                       std::uint64_t seed);

}  // namespace kernels

/// Numerical null space of the evaluation matrix at relative singular-value
/// threshold `tol`. Requires samples >= 3 * C(l+n, 2).
RelationBasis degree2_relations(const ToricArrangement& arr, std::size_t samples, double tol,
                                std::uint64_t seed, Execution exec = Execution::parallel);

/// True iff sum_m coeffs[m] * monomial_m vanishes at every sample point, up
/// to tol times |coeffs| times the largest monomial magnitude there.
bool verify_relation(const ToricArrangement& arr, const Eigen::VectorXcd& coeffs,
                     std::size_t samples, double tol, std::uint64_t seed);

/// Builds a coefficient vector from (coefficient, a, b) terms meaning
/// coefficient * g_a ^ g_b with 0-based generator indices; a > b flips sign.
Eigen::VectorXcd relation_from_terms(
    const ToricArrangement& arr,
    const std::vector<std::tuple<double, std::size_t, std::size_t>>& terms);

}  // namespace toric
