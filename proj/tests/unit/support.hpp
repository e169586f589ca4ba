#pragma once

#include <random>
#include <vector>

#include "toric/arrangement.hpp"
#include "toric/lattice.hpp"

namespace toric::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

// Product of random elementary row operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    long k = mult(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
    if (rng() & 1) u.swap_rows(i, j);
  }
  return u;
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, cur, 0, out);
  return out;
}

// Cofactor expansion, independent of the library's elimination.
inline Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = a(i, c);
    Integer term = a(0, j) * cofactor_det(minor);
    total += (j % 2 ? -term : term);
  }
  return total;
}

// gcd of all k x k minors.
inline Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for (const auto& rows : combinations(a.rows(), k))
    for (const auto& cols : combinations(a.cols(), k)) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
      Integer d = cofactor_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

inline ToricArrangement four_lines() {
  return parse_arrangement(
      "torus 2\nhyp 1 0 @ 0/1\nhyp 0 1 @ 0/1\nhyp 1 1 @ 0/1\nhyp 1 -1 @ 0/1\n");
}

inline ToricArrangement cubic_pair() {
  return parse_arrangement("torus 2\nhyp 1 0 @ 0/1\nhyp 1 3 @ 0/1\n");
}

// Random arrangement with distinct primitive characters; entries in [-r, r],
// values with denominators up to maxq.
inline ToricArrangement random_arrangement(std::mt19937_64& rng, std::size_t l, std::size_t n, long r,
                                           long maxq) {
  ToricArrangement arr(l);
  std::uniform_int_distribution<long> entry(-r, r);
  std::uniform_int_distribution<long> den(1, maxq);
  for (int guard = 0; arr.size() < n && guard < 1000; ++guard) {
    IntVector chi(l);
    for (auto& x : chi) x = entry(rng);
    if (std::all_of(chi.begin(), chi.end(), [](const Integer& x) { return x == 0; })) continue;
    if (!lattice::is_primitive(chi)) continue;
    long q = den(rng);
    std::uniform_int_distribution<long> num(0, q - 1);
    Hypersurface h = make_hypersurface(chi, TorsionValue(num(rng), q));
    bool dup = false;
    for (const auto& g : arr.hypersurfaces()) dup = dup || g == h;
    if (!dup) arr.add(h);
  }
  return arr;
}

}  // namespace toric::testing
