#include "toric/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::one_plus_t_pow(std::size_t k) {
  std::vector<std::int64_t> c(k + 1, 0);
  c[0] = 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i; j > 0; --j) c[j] += c[j - 1];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(std::int64_t c, std::size_t k) {
  std::vector<std::int64_t> v(k + 1, 0);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? " " : "") << c_[i];
  return os.str();
}

std::string Polynomial::pretty() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::int64_t v = c_[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << '-';
    std::int64_t mag = v < 0 ? -v : v;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace toric
