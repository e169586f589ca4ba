#include "toric/forms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/SVD>

namespace toric {

std::string FormGenerator::name() const {
  return (kind == Kind::coordinate ? "x" : "p") + std::to_string(index + 1);
}

std::vector<FormGenerator> generators(const ToricArrangement& arr) {
  std::vector<FormGenerator> out;
  for (std::size_t i = 0; i < arr.dimension(); ++i) out.push_back(FormGenerator::xi(i));
  for (std::size_t j = 0; j < arr.size(); ++j) out.push_back(FormGenerator::psi(j));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> wedge_monomials(std::size_t generator_count) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < generator_count; ++a)
    for (std::size_t b = a + 1; b < generator_count; ++b) out.emplace_back(a, b);
  return out;
}

std::size_t monomial_index(std::size_t a, std::size_t b, std::size_t generator_count) {
  if (a >= b || b >= generator_count) throw std::invalid_argument("monomial_index: need a < b < count");
  // Pairs starting with a' < a come first: sum_{a' < a} (count - 1 - a').
  return a * generator_count - a * (a + 1) / 2 + (b - a - 1);
}

std::size_t default_sample_count(const ToricArrangement& arr) {
  const std::size_t g = arr.dimension() + arr.size();
  return std::max<std::size_t>(4 * (g * (g - 1) / 2), 1);
}

Complex root_of_unity(const TorsionValue& c) {
  if (c.is_zero()) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * c.value().get_d();
  return {std::cos(angle), std::sin(angle)};
}

namespace {

Complex int_power(Complex z, long e) {
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  Complex r{1.0, 0.0};
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

Complex character_value(const Hypersurface& h, const Point& z) {
  Complex v{1.0, 0.0};
  for (std::size_t k = 0; k < z.size(); ++k)
    if (h.chi[k] != 0) v *= int_power(z[k], h.chi[k].get_si());
  return v;
}

Point sample_point(const ToricArrangement& arr, std::uint64_t seed, std::size_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(std::uint64_t(k) >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> log_modulus(-std::numbers::ln2, std::numbers::ln2);
  std::uniform_real_distribution<double> argument(0.0, 2.0 * std::numbers::pi);
  const std::size_t l = arr.dimension();
  std::vector<Complex> constants;
  for (const auto& h : arr.hypersurfaces()) constants.push_back(root_of_unity(h.c));

  for (int attempt = 0; attempt < 1000; ++attempt) {
    Point z(l);
    for (auto& x : z) x = std::polar(std::exp(log_modulus(rng)), argument(rng));
    bool clear = true;
    for (std::size_t j = 0; j < arr.size() && clear; ++j)
      if (std::abs(character_value(arr[j], z) - constants[j]) < kSampleClearance) clear = false;
    if (clear) return z;
  }
  throw SamplingError("no sample point of the complement found within 1000 draws");
}

Point sample_point(const ToricArrangement& arr, std::uint64_t seed) {
  return sample_point(arr, seed, 0);
}

Eigen::VectorXcd eval_generator(const ToricArrangement& arr, FormGenerator g, const Point& z) {
  const std::size_t l = arr.dimension();
  if (z.size() != l) throw std::invalid_argument("eval_generator: point has wrong dimension");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(l));
  if (g.kind == FormGenerator::Kind::coordinate) {
    if (g.index >= l) throw std::out_of_range("eval_generator: coordinate index");
    out[static_cast<Eigen::Index>(g.index)] = 1.0 / z[g.index];
    return out;
  }
  if (g.index >= arr.size()) throw std::out_of_range("eval_generator: character index");
  const Hypersurface& h = arr[g.index];
  const Complex chi = character_value(h, z);
  const Complex denom = chi - root_of_unity(h.c);
  if (std::abs(denom) == 0.0) throw std::domain_error("eval_generator: point lies on the hypersurface");
  const Complex factor = chi / denom;
  for (std::size_t k = 0; k < l; ++k)
    if (h.chi[k] != 0) out[static_cast<Eigen::Index>(k)] = factor * h.chi[k].get_d() / z[k];
  return out;
}

Eigen::VectorXcd wedge(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  const Eigen::Index l = u.size();
  Eigen::VectorXcd out(l * (l - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index p = 0; p < l; ++p)
    for (Eigen::Index q = p + 1; q < l; ++q) out[k++] = u[p] * v[q] - u[q] * v[p];
  return out;
}

namespace {

// Columns: wedge monomials; rows: basis 2-forms dz_p ^ dz_q.
Eigen::MatrixXcd monomials_at(const ToricArrangement& arr, const Point& z) {
  auto gens = generators(arr);
  std::vector<Eigen::VectorXcd> cov;
  cov.reserve(gens.size());
  for (auto g : gens) cov.push_back(eval_generator(arr, g, z));
  auto pairs = wedge_monomials(gens.size());
  const Eigen::Index l = static_cast<Eigen::Index>(arr.dimension());
  Eigen::MatrixXcd block(l * (l - 1) / 2, static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t m = 0; m < pairs.size(); ++m)
    block.col(static_cast<Eigen::Index>(m)) = wedge(cov[pairs[m].first], cov[pairs[m].second]);
  return block;
}

void fill_rows(const ToricArrangement& arr, std::uint64_t seed, std::size_t k,
               Eigen::MatrixXcd& out) {
  Eigen::MatrixXcd block = monomials_at(arr, sample_point(arr, seed, k));
  for (Eigen::Index r = 0; r < block.rows(); ++r) {
    double norm = block.row(r).norm();
    if (norm > 0) block.row(r) /= norm;
  }
  out.middleRows(static_cast<Eigen::Index>(k) * block.rows(), block.rows()) = block;
}

std::size_t wedge_rows(const ToricArrangement& arr) {
  return arr.dimension() * (arr.dimension() - (arr.dimension() ? 1 : 0)) / 2;
}

}  // namespace

namespace kernels {

Eigen::MatrixXcd evaluation_matrix_serial(const ToricArrangement& arr, std::size_t samples,
                                          std::uint64_t seed) {
  const std::size_t g = arr.dimension() + arr.size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(samples * wedge_rows(arr)),
                     static_cast<Eigen::Index>(g * (g - (g ? 1 : 0)) / 2));
  if (wedge_rows(arr) == 0) return m;
  for (std::size_t k = 0; k < samples; ++k) fill_rows(arr, seed, k, m);
  return m;
}

Eigen::MatrixXcd evaluation_matrix_omp(const ToricArrangement& arr, std::size_t samples,
                                       std::uint64_t seed) {
  const std::size_t g = arr.dimension() + arr.size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(samples * wedge_rows(arr)),
                     static_cast<Eigen::Index>(g * (g - (g ? 1 : 0)) / 2));
  if (wedge_rows(arr) == 0) return m;
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(samples); ++k) {
    try {
      fill_rows(arr, seed, static_cast<std::size_t>(k), m);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        message = e.what();
      }
    }
  }
  if (failed) throw SamplingError(message);
  return m;
}

}  // namespace kernels

RelationBasis degree2_relations(const ToricArrangement& arr, std::size_t samples, double tol,
                                std::uint64_t seed, Execution exec) {
  const std::size_t g = arr.dimension() + arr.size();
  const std::size_t monomials = g * (g - (g ? 1 : 0)) / 2;
  if (samples < 3 * monomials)
    throw std::invalid_argument("degree2_relations: need at least " +
                                std::to_string(3 * monomials) + " samples");
  if (!(tol > 0.0)) throw std::invalid_argument("degree2_relations: tolerance must be positive");

  RelationBasis out;
  out.tolerance = tol;
  out.samples = samples;
  out.monomial_count = monomials;
  out.gap = std::numeric_limits<double>::infinity();
  const auto cols = static_cast<Eigen::Index>(monomials);

  Eigen::MatrixXcd m = exec == Execution::parallel
                           ? kernels::evaluation_matrix_omp(arr, samples, seed)
                           : kernels::evaluation_matrix_serial(arr, samples, seed);
  if (m.rows() == 0 || cols == 0) {
    // No 2-forms on a torus of dimension < 2: every monomial vanishes.
    out.relations = Eigen::MatrixXcd::Identity(cols, cols);
    return out;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double top = sv.size() ? sv[0] : 0.0;
  Eigen::Index keep = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    double rel = top > 0 ? sv[k] / top : 0.0;
    out.singular_values.push_back(rel);
    if (top > 0 && rel >= tol) ++keep;
  }
  if (keep > 0 && keep < sv.size()) {
    out.gap = sv[keep] > 0 ? sv[keep - 1] / sv[keep] : std::numeric_limits<double>::infinity();
  }
  const Eigen::Index null = cols - keep;
  out.relations = svd.matrixV().rightCols(null).transpose();
  return out;
}

bool verify_relation(const ToricArrangement& arr, const Eigen::VectorXcd& coeffs,
                     std::size_t samples, double tol, std::uint64_t seed) {
  const std::size_t g = arr.dimension() + arr.size();
  const std::size_t monomials = g * (g - (g ? 1 : 0)) / 2;
  if (static_cast<std::size_t>(coeffs.size()) != monomials)
    throw std::invalid_argument("verify_relation: coefficient vector has wrong length");
  if (wedge_rows(arr) == 0) return true;
  const double cnorm = coeffs.norm();
  for (std::size_t k = 0; k < samples; ++k) {
    Eigen::MatrixXcd block = monomials_at(arr, sample_point(arr, seed, k));
    double largest = 0.0;
    for (Eigen::Index c = 0; c < block.cols(); ++c) largest = std::max(largest, block.col(c).norm());
    double residual = (block * coeffs).norm();
    if (residual > tol * cnorm * largest) return false;
  }
  return true;
}

Eigen::VectorXcd relation_from_terms(
    const ToricArrangement& arr,
    const std::vector<std::tuple<double, std::size_t, std::size_t>>& terms) {
  const std::size_t g = arr.dimension() + arr.size();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g * (g - (g ? 1 : 0)) / 2));
  for (const auto& [coef, a, b] : terms) {
    if (a == b) continue;
    double sign = a < b ? 1.0 : -1.0;
    v[static_cast<Eigen::Index>(monomial_index(std::min(a, b), std::max(a, b), g))] += sign * coef;
  }
  return v;
}

}  // namespace toric
