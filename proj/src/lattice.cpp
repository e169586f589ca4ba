#include "toric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

void IntMatrix::append_row(std::span<const Integer> r) {
  if (r.size() != cols_) throw std::invalid_argument("IntMatrix: row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntMatrix m(0, cols_);
  for (std::size_t i : indices) m.append_row(row(i));
  return m;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  IntMatrix m(0, cols_);
  for (std::size_t i = 0; i < count && i < rows_; ++i) m.append_row(row(i));
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      int c = cmp(a(i, j), b(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

IntVector SnfResult::divisors() const {
  IntVector out;
  for (std::size_t j = 0; j < rank; ++j) out.push_back(d(j, j));
  return out;
}

namespace {

struct Bezout {
  Integer g, s, t;
};

// g = s*a + t*b with g = gcd(a, b) >= 0.
Bezout xgcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

// Replaces rows (p, q) of m by [[s, t], [-y, x]] * (row_p, row_q), where
// x = a/g, y = b/g. Determinant s*x + t*y = 1.
void combine_rows(IntMatrix& m, std::size_t p, std::size_t q, const Bezout& bz,
                  const Integer& x, const Integer& y) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer rp = bz.s * m(p, j) + bz.t * m(q, j);
    Integer rq = x * m(q, j) - y * m(p, j);
    m(p, j) = std::move(rp);
    m(q, j) = std::move(rq);
  }
}

void combine_cols(IntMatrix& m, std::size_t p, std::size_t q, const Bezout& bz,
                  const Integer& x, const Integer& y) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer cp = bz.s * m(i, p) + bz.t * m(i, q);
    Integer cq = x * m(i, q) - y * m(i, p);
    m(i, p) = std::move(cp);
    m(i, q) = std::move(cq);
  }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source,
                      const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source,
                      const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

// Clears m(q, c) against m(p, c), mirroring the row operation on `track`.
void eliminate_row(IntMatrix& m, IntMatrix& track, std::size_t p, std::size_t q,
                   std::size_t c) {
  if (m(p, c) != 0 && mpz_divisible_p(m(q, c).get_mpz_t(), m(p, c).get_mpz_t())) {
    Integer f = -(m(q, c) / m(p, c));
    add_row_multiple(m, q, p, f);
    add_row_multiple(track, q, p, f);
    return;
  }
  Bezout bz = xgcd(m(p, c), m(q, c));
  Integer x = m(p, c) / bz.g;
  Integer y = m(q, c) / bz.g;
  combine_rows(m, p, q, bz, x, y);
  combine_rows(track, p, q, bz, x, y);
}

void eliminate_col(IntMatrix& m, IntMatrix& track, std::size_t p, std::size_t q,
                   std::size_t r) {
  if (m(r, p) != 0 && mpz_divisible_p(m(r, q).get_mpz_t(), m(r, p).get_mpz_t())) {
    Integer f = -(m(r, q) / m(r, p));
    add_col_multiple(m, q, p, f);
    add_col_multiple(track, q, p, f);
    return;
  }
  Bezout bz = xgcd(m(r, p), m(r, q));
  Integer x = m(r, p) / bz.g;
  Integer y = m(r, q) / bz.g;
  combine_cols(m, p, q, bz, x, y);
  combine_cols(track, p, q, bz, x, y);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

namespace lattice {

HnfResult hnf(const IntMatrix& a) {
  HnfResult res{a, IntMatrix::identity(a.rows()), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      eliminate_row(h, u, r, i, c);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      Integer f = -q;
      add_row_multiple(h, i, r, f);
      add_row_multiple(u, i, r, f);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SnfResult snf(const IntMatrix& a) {
  SnfResult res{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), 0};
  IntMatrix& d = res.d;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  std::size_t t = 0;
  while (t < m && t < n) {
    // Pivot: smallest nonzero |entry| of the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (pi == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    d.swap_rows(t, pi);
    res.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    res.v.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) != 0) eliminate_row(d, res.u, t, i, t);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) != 0) eliminate_col(d, res.v, t, j, t);
      }
      for (std::size_t i = t + 1; i < m && clean; ++i)
        if (d(i, t) != 0) clean = false;
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and redo.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row_multiple(d, t, bad, Integer(1));
      add_row_multiple(res.u, t, bad, Integer(1));
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(res.u, t);
    }
    ++t;
  }
  res.rank = t;
  return res;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HnfResult h = hnf(a);
  IntMatrix k(0, a.rows());
  for (std::size_t i = h.rank; i < a.rows(); ++i) k.append_row(h.u.row(i));
  return row_basis(k);
}

IntMatrix right_kernel(const IntMatrix& a) { return left_kernel(a.transpose()); }

IntMatrix row_basis(const IntMatrix& a) {
  HnfResult h = hnf(a);
  return h.h.top_rows(h.rank);
}

IntMatrix saturation(const IntMatrix& a) {
  IntMatrix null = right_kernel(a);
  return left_kernel(null.transpose());
}

std::size_t rank(const IntMatrix& a) { return hnf(a).rank; }

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular_matrix(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t l = a.cols();
  if (n < l) return true;
  std::vector<std::size_t> pick(l);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    Integer det = determinant(a.select_rows(pick));
    if (abs(det) > 1) return false;
    // Next l-combination of {0..n-1} in lexicographic order.
    std::size_t k = l;
    while (k > 0 && pick[k - 1] == n - l + k - 1) --k;
    if (k == 0) return true;
    ++pick[k - 1];
    for (std::size_t j = k; j < l; ++j) pick[j] = pick[j - 1] + 1;
  }
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw std::invalid_argument("content of the zero vector");
  return g;
}

bool is_primitive(std::span<const Integer> v) { return content(v) == 1; }

std::optional<IntVector> coordinates(const IntMatrix& hnf_basis,
                                     std::span<const Integer> v) {
  if (v.size() != hnf_basis.cols()) throw std::invalid_argument("coordinates: length mismatch");
  IntVector rest(v.begin(), v.end());
  IntVector coords;
  coords.reserve(hnf_basis.rows());
  std::size_t col = 0;
  for (std::size_t k = 0; k < hnf_basis.rows(); ++k) {
    while (col < hnf_basis.cols() && hnf_basis(k, col) == 0) ++col;
    if (col == hnf_basis.cols()) throw std::invalid_argument("coordinates: zero basis row");
    const Integer& pivot = hnf_basis(k, col);
    if (!mpz_divisible_p(rest[col].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    Integer q = rest[col] / pivot;
    if (q != 0)
      for (std::size_t j = col; j < rest.size(); ++j) rest[j] -= q * hnf_basis(k, j);
    coords.push_back(std::move(q));
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

bool contains(const IntMatrix& hnf_basis, std::span<const Integer> v) {
  return coordinates(hnf_basis, v).has_value();
}

bool is_sublattice(const IntMatrix& sub, const IntMatrix& basis) {
  for (std::size_t i = 0; i < sub.rows(); ++i)
    if (!contains(basis, sub.row(i))) return false;
  return true;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  s.canonicalize();
  return s;
}

}  // namespace lattice
}  // namespace toric
