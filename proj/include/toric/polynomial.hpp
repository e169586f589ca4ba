#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

/// Univariate polynomial in t with integer coefficients, lowest degree first,
/// without trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::int64_t> coeffs);
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  /// (1 + t)^k
  static Polynomial one_plus_t_pow(std::size_t k);
  /// c * t^k
  static Polynomial monomial(std::int64_t c, std::size_t k);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Space-separated coefficients, e.g. "1 6 9"; "0" for the zero polynomial.
  std::string str() const;
  /// Human form, e.g. "1 + 6t + 9t^2".
  std::string pretty() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace toric
