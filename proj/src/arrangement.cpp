#include "toric/arrangement.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace toric {

Rational reduce_mod_one(Rational r) {
  r.canonicalize();
  // gcd(num mod den, den) = gcd(num, den), so the result stays canonical.
  mpz_fdiv_r(r.get_num_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return r;
}

TorsionValue::TorsionValue(Rational b) : b_(reduce_mod_one(std::move(b))) {}

TorsionValue::TorsionValue(long p, long q) {
  if (q == 0) throw std::invalid_argument("TorsionValue: zero denominator");
  b_ = reduce_mod_one(Rational(p, q));
}

TorsionValue TorsionValue::operator-() const { return TorsionValue(-b_); }

TorsionValue operator+(const TorsionValue& x, const TorsionValue& y) {
  return TorsionValue(x.b_ + y.b_);
}

TorsionValue operator-(const TorsionValue& x, const TorsionValue& y) {
  return TorsionValue(x.b_ - y.b_);
}

std::string TorsionValue::str() const {
  return b_.get_num().get_str() + "/" + b_.get_den().get_str();
}

Hypersurface make_hypersurface(IntVector chi, TorsionValue c) {
  if (!lattice::is_primitive(chi))
    throw std::invalid_argument("character is not primitive");
  auto lead = std::find_if(chi.begin(), chi.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) {
    for (auto& x : chi) x = -x;
    c = -c;
  }
  return {std::move(chi), c};
}

bool hypersurface_less(const Hypersurface& a, const Hypersurface& b) {
  if (a.chi != b.chi) return a.chi < b.chi;
  return a.c < b.c;
}

ArrangementError::ArrangementError(ArrangementErrorCode code, std::size_t line,
                                   const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      code_(code),
      line_(line) {}

const char* to_string(ArrangementErrorCode code) {
  switch (code) {
    case ArrangementErrorCode::malformed: return "malformed";
    case ArrangementErrorCode::non_primitive: return "non_primitive";
    case ArrangementErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ArrangementErrorCode::duplicate: return "duplicate";
  }
  return "unknown";
}

ToricArrangement::ToricArrangement(std::size_t l) : l_(l) {}

ToricArrangement::ToricArrangement(std::size_t l, std::vector<Hypersurface> hypersurfaces)
    : l_(l) {
  for (auto& h : hypersurfaces) add(std::move(h));
}

void ToricArrangement::add(Hypersurface h) {
  if (h.chi.size() != l_)
    throw ArrangementError(ArrangementErrorCode::dimension_mismatch, 0,
                           "character has " + std::to_string(h.chi.size()) +
                               " exponents, torus dimension is " + std::to_string(l_));
  Hypersurface norm;
  try {
    norm = make_hypersurface(std::move(h.chi), h.c);
  } catch (const std::invalid_argument&) {
    throw ArrangementError(ArrangementErrorCode::non_primitive, 0,
                           "character must be nonzero and primitive");
  }
  if (std::find(hs_.begin(), hs_.end(), norm) != hs_.end())
    throw ArrangementError(ArrangementErrorCode::duplicate, 0, "duplicate hypersurface");
  hs_.push_back(std::move(norm));
}

IntMatrix ToricArrangement::exponent_matrix() const {
  IntMatrix a(0, l_);
  for (const auto& h : hs_) a.append_row(h.chi);
  return a;
}

std::vector<TorsionValue> ToricArrangement::values() const {
  std::vector<TorsionValue> out;
  out.reserve(hs_.size());
  for (const auto& h : hs_) out.push_back(h.c);
  return out;
}

ToricArrangement ToricArrangement::subset(std::span<const std::size_t> indices) const {
  ToricArrangement out(l_);
  for (std::size_t i : indices) out.hs_.push_back(hs_.at(i));
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_integer(std::string_view tok, Integer& out) {
  if (tok.empty()) return false;
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) return false;
  for (std::size_t k = start; k < tok.size(); ++k)
    if (tok[k] < '0' || tok[k] > '9') return false;
  std::string digits(tok[0] == '+' ? tok.substr(1) : tok);
  return out.set_str(digits, 10) == 0;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw ArrangementError(ArrangementErrorCode::malformed, line, what);
}

}  // namespace

ToricArrangement parse_arrangement(std::string_view text) {
  std::optional<ToricArrangement> result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    if (!result) {
      Integer l;
      if (tok.size() != 2 || tok[0] != "torus" || !parse_integer(tok[1], l) || l < 0 ||
          !l.fits_ulong_p())
        malformed(line_no, "expected 'torus <l>'");
      result.emplace(l.get_ui());
    } else {
      if (tok[0] != "hyp") malformed(line_no, "expected 'hyp <a_1> ... <a_l> @ <p>/<q>'");
      auto at = std::find(tok.begin(), tok.end(), std::string_view("@"));
      if (at == tok.end() || at + 2 != tok.end())
        malformed(line_no, "expected '@ <p>/<q>' at end of hypersurface line");
      IntVector chi;
      for (auto it = tok.begin() + 1; it != at; ++it) {
        Integer x;
        if (!parse_integer(*it, x)) malformed(line_no, "bad exponent '" + std::string(*it) + "'");
        chi.push_back(std::move(x));
      }
      std::string_view frac = *(at + 1);
      auto slash = frac.find('/');
      Integer p, q;
      if (slash == std::string_view::npos || !parse_integer(frac.substr(0, slash), p) ||
          !parse_integer(frac.substr(slash + 1), q))
        malformed(line_no, "bad constant '" + std::string(frac) + "', expected p/q");
      if (q < 1 || p < 0 || p >= q) malformed(line_no, "constant p/q requires q >= 1, 0 <= p < q");
      try {
        result->add({std::move(chi), TorsionValue(Rational(p, q))});
      } catch (const ArrangementError& e) {
        // Re-raise with the line number attached.
        std::string msg = e.what();
        throw ArrangementError(e.code(), line_no, msg);
      }
    }
    if (eol == text.size()) break;
  }
  if (!result) malformed(line_no, "missing 'torus <l>' header");
  return *result;
}

std::string serialize_arrangement(const ToricArrangement& a) {
  std::ostringstream os;
  os << "torus " << a.dimension() << '\n';
  for (const auto& h : a.hypersurfaces()) {
    os << "hyp";
    for (const auto& x : h.chi) os << ' ' << x;
    os << " @ " << h.c.str() << '\n';
  }
  return os.str();
}

ToricArrangement braid(std::size_t l) {
  if (l < 2) throw std::invalid_argument("braid arrangement needs l >= 2");
  ToricArrangement out(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      IntVector chi(l, Integer(0));
      chi[i] = 1;
      chi[j] = -1;
      out.add({std::move(chi), TorsionValue()});
    }
  return out;
}

WeylFamily parse_weyl_family(std::string_view name) {
  if (name == "A") return WeylFamily::A;
  if (name == "B") return WeylFamily::B;
  if (name == "C") return WeylFamily::C;
  if (name == "D") return WeylFamily::D;
  if (name == "G2" || name == "G") return WeylFamily::G2;
  throw std::invalid_argument("unknown Weyl family '" + std::string(name) + "'");
}

const char* to_string(WeylFamily family) {
  switch (family) {
    case WeylFamily::A: return "A";
    case WeylFamily::B: return "B";
    case WeylFamily::C: return "C";
    case WeylFamily::D: return "D";
    case WeylFamily::G2: return "G2";
  }
  return "?";
}

namespace {

// cartan[i][j] = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(WeylFamily family, std::size_t n) {
  std::size_t min_rank = 1;
  switch (family) {
    case WeylFamily::A: min_rank = 1; break;
    case WeylFamily::B:
    case WeylFamily::C: min_rank = 2; break;
    case WeylFamily::D: min_rank = 3; break;
    case WeylFamily::G2: min_rank = 2; break;
  }
  if (n < min_rank || (family == WeylFamily::G2 && n != 2))
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(n) +
                                " for Weyl family " + to_string(family));
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  switch (family) {
    case WeylFamily::A:
    case WeylFamily::B:
    case WeylFamily::C:
      for (std::size_t i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      if (family == WeylFamily::B) c[n - 2][n - 1] = -2;
      if (family == WeylFamily::C) c[n - 1][n - 2] = -2;
      break;
    case WeylFamily::D:
      for (std::size_t i = 0; i + 2 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      break;
    case WeylFamily::G2:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

}  // namespace

std::vector<IntVector> positive_roots(WeylFamily family, std::size_t rank) {
  const auto cartan = cartan_matrix(family, rank);
  using Root = std::vector<int>;
  std::set<Root> known;
  std::vector<Root> frontier;
  for (std::size_t i = 0; i < rank; ++i) {
    Root r(rank, 0);
    r[i] = 1;
    known.insert(r);
    frontier.push_back(r);
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // p being the length of the alpha_i-string below beta.
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& beta : frontier)
      for (std::size_t i = 0; i < rank; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < rank; ++j) pairing += beta[j] * cartan[j][i];
        int p = 0;
        Root down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Root up = beta;
          ++up[i];
          if (known.insert(up).second) next.push_back(up);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Root> roots(known.begin(), known.end());
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  std::vector<IntVector> out;
  for (const auto& r : roots) out.emplace_back(r.begin(), r.end());
  return out;
}

ToricArrangement weyl(WeylFamily family, std::size_t rank, bool simple_only) {
  auto roots = positive_roots(family, rank);
  ToricArrangement out(rank);
  for (auto& r : roots) {
    if (simple_only) {
      auto ones = std::count(r.begin(), r.end(), Integer(1));
      auto zeros = std::count(r.begin(), r.end(), Integer(0));
      if (ones != 1 || zeros + 1 != static_cast<long>(rank)) continue;
    }
    out.add({std::move(r), TorsionValue()});
  }
  return out;
}

RestrictedArrangement restrict_to(const ToricArrangement& a, std::size_t i,
                                  std::span<const std::size_t> prefix) {
  if (i >= a.size()) throw std::out_of_range("restrict: hypersurface index out of range");
  for (std::size_t r : prefix) {
    if (r >= a.size()) throw std::out_of_range("restrict: prefix index out of range");
    if (r == i) throw std::invalid_argument("restrict: prefix contains the restricting index");
  }
  const std::size_t l = a.dimension();
  const Hypersurface& target = a[i];

  // u = basis * s with chi_i . u = s_1.
  IntMatrix column(0, 1);
  for (const auto& x : target.chi) column.append_row(std::span<const Integer>(&x, 1));
  IntMatrix basis = lattice::hnf(column).u.transpose();

  RestrictedArrangement out{ToricArrangement(l - 1), {}, basis};
  std::vector<Hypersurface> found;
  for (std::size_t r : prefix) {
    IntVector image(l, Integer(0));
    for (std::size_t k = 0; k < l; ++k)
      for (std::size_t j = 0; j < l; ++j) image[k] += a[r].chi[j] * basis(j, k);
    IntVector tail(image.begin() + 1, image.end());
    // chi_r . u = image_1 * b_i + tail . s'
    TorsionValue beta(a[r].c.value() - Rational(image[0]) * target.c.value());
    bool zero_tail = std::all_of(tail.begin(), tail.end(), [](const Integer& x) { return x == 0; });
    if (zero_tail) {
      if (beta.is_zero())
        throw std::logic_error("restrict: hypersurface coincides with the restricting one");
      continue;  // parallel translate, empty intersection
    }
    Integer g = lattice::content(tail);
    IntVector prim = tail;
    for (auto& x : prim) x /= g;
    for (unsigned long t = 0; t < g.get_ui(); ++t) {
      Rational v = (beta.value() + Rational(t)) / Rational(g);
      Hypersurface h = make_hypersurface(prim, TorsionValue(v));
      auto it = std::find(found.begin(), found.end(), h);
      std::size_t idx = static_cast<std::size_t>(it - found.begin());
      if (it == found.end()) {
        found.push_back(h);
        out.origins.emplace_back();
      }
      out.origins[idx].push_back({r, static_cast<std::size_t>(t)});
    }
  }
  out.ambient = ToricArrangement(l - 1, std::move(found));
  return out;
}

}  // namespace toric
