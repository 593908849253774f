#pragma once

// Genus-zero Gopakumar-Vafa invariants of a flopping curve: Toda's formula
// wid = sum_j j^2 n_j, cwid = n_1 in both directions, intersection counts of a
// one-parameter path with the root hyperplanes, and the width lower bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "freealg.hpp"
#include "rootsys.hpp"

namespace concalc {

/// (n_1, ..., n_l); n[0] is n_1.
struct GVProfile {
  std::vector<std::uint64_t> n;

  std::size_t length() const { return n.size(); }
  friend bool operator==(const GVProfile&, const GVProfile&) = default;
};

struct WidthPair {
  std::uint64_t wid = 0;
  std::uint64_t cwid = 0;
  friend bool operator==(const WidthPair&, const WidthPair&) = default;
};

WidthPair widths_from_gv(const GVProfile& p);

/// All profiles of length l with n_1 = cwid and sum_{j>=2} j^2 n_j = wid - cwid,
/// in lexicographic order. Throws ErrorKind::Inconsistent when there are none,
/// ErrorKind::Input when more than max_solutions exist.
std::vector<GVProfile> gv_from_widths(const WidthPair& w, std::size_t l,
                                      std::size_t max_solutions = 100000);

/// Univariate polynomial with rational coefficients; coeffs[k] multiplies t^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  /// Converts a polynomial in a single generator (letter 0).
  static UniPoly from_ncpoly(const NCPoly& f);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial has none.
  std::optional<std::size_t> degree() const;
  /// Multiplicity of the root t = 0; the zero polynomial has none.
  std::optional<std::size_t> order_at_zero() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// p(t + c)
  UniPoly shifted(const Rational& c) const;
  /// p(lambda * t)
  UniPoly rescaled(const Rational& lambda) const;

  UniPoly& add_scaled(const UniPoly& other, long factor);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// One polynomial per simple root: coords[j] is the pairing of the path with
/// alpha_{j+1}.
struct PolyPath {
  std::vector<UniPoly> coords;
};

enum class PathMode { AtOrigin, Total };

struct PathProfile {
  GVProfile profile;
  // Class-0 roots (singular-surface loci) kept out of the profile.
  std::uint64_t singular_incidence = 0;
  std::size_t singular_identically_zero = 0;
};

/// Sums, over positive roots alpha with marked coefficient j >= 1, the number
/// of zeros of <alpha, g>(t): at t = 0 (AtOrigin) or over all of C (Total).
PathProfile path_gv(const MarkedDynkin& m, const PolyPath& path, PathMode mode);

/// 1 (A1), 4 (D4), 12 (E6), 24 (E7), 40 (E8); none for other types.
std::optional<std::uint64_t> width_lower_bound(DynkinType type);

struct BoundCheck {
  bool ok = true;
  std::optional<std::uint64_t> bound;
};

BoundCheck width_bound_check(DynkinType type, std::size_t mark, std::uint64_t wid);

}  // namespace concalc
