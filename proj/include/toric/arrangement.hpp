#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Element of Q/Z: the argument b of the root of unity c = exp(2 pi i b).
/// Always stored reduced into [0, 1).
class TorsionValue {
 public:
  TorsionValue() = default;
  explicit TorsionValue(Rational b);
  TorsionValue(long p, long q);

  const Rational& value() const { return b_; }
  bool is_zero() const { return b_ == 0; }

  TorsionValue operator-() const;
  friend TorsionValue operator+(const TorsionValue& x, const TorsionValue& y);
  friend TorsionValue operator-(const TorsionValue& x, const TorsionValue& y);
  friend bool operator==(const TorsionValue& x, const TorsionValue& y) { return x.b_ == y.b_; }
  friend bool operator<(const TorsionValue& x, const TorsionValue& y) { return x.b_ < y.b_; }

  /// "p/q" with q >= 1.
  std::string str() const;

 private:
  Rational b_{0};
};

/// Reduces a rational into [0, 1).
Rational reduce_mod_one(Rational r);

/// K = { z : chi(z) = exp(2 pi i c) }. The character is primitive and
/// sign-normalized so that its first nonzero exponent is positive.
struct Hypersurface {
  IntVector chi;
  TorsionValue c;

  friend bool operator==(const Hypersurface&, const Hypersurface&) = default;
};

/// Sign-normalizes (chi, c) to the lexicographically positive representative.
/// Throws std::invalid_argument for zero or non-primitive characters.
Hypersurface make_hypersurface(IntVector chi, TorsionValue c);

bool hypersurface_less(const Hypersurface& a, const Hypersurface& b);

enum class ArrangementErrorCode {
  malformed,
  non_primitive,
  dimension_mismatch,
  duplicate,
};

class ArrangementError : public std::runtime_error {
 public:
  ArrangementError(ArrangementErrorCode code, std::size_t line, const std::string& what);

  ArrangementErrorCode code() const { return code_; }
  /// 1-based source line, 0 when not parsing text.
  std::size_t line() const { return line_; }

 private:
  ArrangementErrorCode code_;
  std::size_t line_;
};

const char* to_string(ArrangementErrorCode code);

/// Ordered finite collection of distinct toric hypersurfaces in (C*)^l.
class ToricArrangement {
 public:
  explicit ToricArrangement(std::size_t l = 0);
  ToricArrangement(std::size_t l, std::vector<Hypersurface> hypersurfaces);

  std::size_t dimension() const { return l_; }
  std::size_t size() const { return hs_.size(); }
  bool empty() const { return hs_.empty(); }
  const Hypersurface& operator[](std::size_t i) const { return hs_.at(i); }
  const std::vector<Hypersurface>& hypersurfaces() const { return hs_; }

  /// Appends a hypersurface; throws ArrangementError on dimension mismatch,
  /// non-primitive character or duplicate.
  void add(Hypersurface h);

  /// The n x l exponent matrix A of the encoding (A, c).
  IntMatrix exponent_matrix() const;
  std::vector<TorsionValue> values() const;

  /// Sub-arrangement on the given indices, in the given order.
  ToricArrangement subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const ToricArrangement&, const ToricArrangement&) = default;

 private:
  std::size_t l_ = 0;
  std::vector<Hypersurface> hs_;
};

/// Line-oriented text format:
///   torus <l>
///   hyp <a_1> ... <a_l> @ <p>/<q>
/// '#' starts a comment.
ToricArrangement parse_arrangement(std::string_view text);
std::string serialize_arrangement(const ToricArrangement& a);

/// z_i z_j^{-1} = 1 for i < j.
ToricArrangement braid(std::size_t l);

enum class WeylFamily { A, B, C, D, G2 };
WeylFamily parse_weyl_family(std::string_view name);
const char* to_string(WeylFamily family);

/// Positive roots in simple-root coordinates, Bourbaki numbering.
std::vector<IntVector> positive_roots(WeylFamily family, std::size_t rank);

/// One hypersurface exp(root) = 1 per positive root (or per simple root
/// when simple_only is set).
ToricArrangement weyl(WeylFamily family, std::size_t rank, bool simple_only = false);

/// Parent of a restricted hypersurface: index into the original
/// arrangement and index of the connected component of K_parent \cap K_i.
struct RestrictionOrigin {
  std::size_t parent = 0;
  std::size_t component = 0;

  friend bool operator==(const RestrictionOrigin&, const RestrictionOrigin&) = default;
};

struct RestrictedArrangement {
  ToricArrangement ambient;
  /// origins[k] lists every parent component that coincides with hypersurface k.
  std::vector<std::vector<RestrictionOrigin>> origins;
  /// Coordinate change u = basis * s on the log torus; s_1 = 0 cuts out
  /// the subtorus parallel to K_i, the remaining s-coordinates parametrize it.
  IntMatrix basis;
};

/// Arrangement cut out on K_i by the hypersurfaces listed in `prefix`,
/// expressed as an arrangement in an (l-1)-torus.
RestrictedArrangement restrict_to(const ToricArrangement& a, std::size_t i,
                                  std::span<const std::size_t> prefix);

}  // namespace toric
