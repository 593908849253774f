#pragma once

// Simply-laced root systems in Bourbaki numbering, parabolic orbits of root
// hyperplanes and the length invariant of a marked Dynkin diagram.
//
//   A_n: 1 - 2 - ... - n
//   D_n: 1 - 2 - ... - (n-2) < (n-1), n          trivalent vertex n-2
//   E_n: 1 - 3 - 4 - 5 - ... - n, with 2 - 4      trivalent vertex 4
//
// The long arm of E_7 and E_8 starts at vertex 5.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace concalc {

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family;
  std::size_t rank;

  /// "A1", "D4", "E8", ... (case-insensitive family letter).
  static DynkinType parse(std::string_view text);
  std::string name() const;
  void validate() const;

  /// Trivalent vertex (D_n with n >= 4, E_n); none for type A.
  std::optional<std::size_t> center() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

using CartanMatrix = std::vector<std::vector<int>>;

/// Coefficients over the simple roots alpha_1 .. alpha_rank (stored 0-based).
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;
  Root negated() const;
  /// Coefficient of alpha_vertex, vertex 1-based.
  int at(std::size_t vertex) const { return coeffs.at(vertex - 1); }

  friend bool operator==(const Root&, const Root&) = default;
};

/// Height first, then coefficients lexicographically.
bool root_less(const Root& a, const Root& b);

struct MarkedDynkin {
  DynkinType type;
  std::size_t mark;  // 1-based vertex
  bool realizable;

  /// Validates the mark and derives the realizable flag.
  static MarkedDynkin make(DynkinType type, std::size_t mark);
  /// mark is a 1-based vertex number or "center".
  static MarkedDynkin parse(std::string_view type, std::string_view mark);

  friend bool operator==(const MarkedDynkin&, const MarkedDynkin&) = default;
};

struct DiscriminantComponent {
  std::vector<Root> orbit;  // positive representatives, sorted by root_less
  std::size_t curve_class;  // |coefficient at the marked vertex|
};

CartanMatrix cartan_matrix(DynkinType type);

/// Symmetric bilinear form via the Cartan matrix.
int pairing(const Root& a, const Root& b, const CartanMatrix& cartan);

/// Sorted by root_less. Cached per type.
const std::vector<Root>& positive_roots(DynkinType type);

/// Simple reflection s_vertex (1-based).
Root reflect(const Root& r, std::size_t vertex, DynkinType type);

/// Largest coefficient of the marked simple root over all positive roots.
std::size_t length_invariant(const MarkedDynkin& m);

/// Orbits of positive roots (up to sign) under the reflections at the
/// unmarked vertices. Sorted by curve class, then by smallest member.
std::vector<DiscriminantComponent> discriminant_components(const MarkedDynkin& m);

/// Marks that occur for flopping curves: (A1,1), centres of D4, E6, E7, E8,
/// and the long-arm neighbour of the E8 centre.
std::vector<MarkedDynkin> realizable_marks(DynkinType type);

}  // namespace concalc
