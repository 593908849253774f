#pragma once

// Built-in contraction algebras with their known widths and GV invariants:
//   type_A(d)     = <e | e^d>,                        d = 1..12
//   D4_family(k)  = <x, y | xy + yx, x^2 - y^(2k+1)>,  k = 1..6

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gvcalc.hpp"
#include "ncgroebner.hpp"
#include "presentation.hpp"
#include "rootsys.hpp"

namespace concalc {

struct CatalogEntry {
  std::string key;
  Presentation presentation;
  std::optional<std::uint64_t> expected_wid;
  std::optional<std::uint64_t> expected_cwid;
  std::optional<MarkedDynkin> dynkin;
  std::optional<GVProfile> expected_gv;
};

Presentation type_a_presentation(std::size_t d);
Presentation d4_family_presentation(std::size_t k);

/// type_A(1..12) followed by D4_family(1..6).
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& key);

struct EntryVerification {
  std::string key;
  DimensionReport wid;
  DimensionReport cwid;
  std::vector<GVProfile> gv;  // solutions of Toda's formula for the computed widths
  std::optional<bool> commutative;
  std::optional<std::size_t> length;
  std::optional<BoundCheck> bound;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Recomputes widths, GV profile, commutativity and the width bound, and
/// records every disagreement with the stored expectations.
EntryVerification verify_entry(const CatalogEntry& entry, const CompletionConfig& cfg = {});

}  // namespace concalc
