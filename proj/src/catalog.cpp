#include "catalog.hpp"

#include <algorithm>

#include "error.hpp"
#include "presentations.hpp"

namespace concalc {

Presentation type_a_presentation(std::size_t d) {
  if (d == 0) fail(ErrorKind::Input, "type A width must be positive");
  Presentation p;
  p.name = "type_A_" + std::to_string(d);
  p.generators = {"e"};
  p.relations = {NCPoly::monomial(Word::power(0, d))};
  return p;
}

Presentation d4_family_presentation(std::size_t k) {
  Presentation p;
  p.name = "D4_family_" + std::to_string(k);
  p.generators = {"x", "y"};
  p.relations = {NCPoly::monomial(Word{0, 1}) + NCPoly::monomial(Word{1, 0}),
                 NCPoly::monomial(Word{0, 0}) - NCPoly::monomial(Word::power(1, 2 * k + 1))};
  return p;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    const MarkedDynkin a1 = MarkedDynkin::make({DynkinFamily::A, 1}, 1);
    const MarkedDynkin d4 = MarkedDynkin::make({DynkinFamily::D, 4}, 2);
    for (std::uint64_t d = 1; d <= 12; ++d)
      out.push_back({"type_A(" + std::to_string(d) + ")", type_a_presentation(d), d, d, a1,
                     GVProfile{{d}}});
    for (std::uint64_t k = 1; k <= 6; ++k)
      out.push_back({"D4_family(" + std::to_string(k) + ")", d4_family_presentation(k),
                     3 * (2 * k + 1), 2 * k + 3, d4, GVProfile{{2 * k + 3, k}}});
    return out;
  }();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& key) {
  const auto& entries = catalog();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) {
    return e.key == key || e.presentation.name == key;
  });
  return it == entries.end() ? nullptr : &*it;
}

EntryVerification verify_entry(const CatalogEntry& entry, const CompletionConfig& cfg) {
  EntryVerification v;
  v.key = entry.key;
  auto& bad = v.mismatches;

  v.wid = dimension(entry.presentation, cfg);
  v.cwid = dimension(abelianize(entry.presentation), cfg);
  if (!v.wid.finite()) bad.push_back("wid is not finite below the cutoff");
  if (!v.cwid.finite()) bad.push_back("cwid is not finite below the cutoff");
  if (entry.expected_wid && v.wid.finite() && v.wid.total != *entry.expected_wid)
    bad.push_back("wid " + std::to_string(v.wid.total) + " != expected " +
                  std::to_string(*entry.expected_wid));
  if (entry.expected_cwid && v.cwid.finite() && v.cwid.total != *entry.expected_cwid)
    bad.push_back("cwid " + std::to_string(v.cwid.total) + " != expected " +
                  std::to_string(*entry.expected_cwid));
  if (v.wid.finite() && v.cwid.finite() && v.cwid.total > v.wid.total)
    bad.push_back("cwid exceeds wid");

  if (!v.wid.truncated) {
    v.commutative = is_commutative_quotient(entry.presentation, cfg);
  }

  if (entry.dynkin) {
    v.length = length_invariant(*entry.dynkin);
    if (v.wid.finite()) {
      v.bound = width_bound_check(entry.dynkin->type, entry.dynkin->mark, v.wid.total);
      if (!v.bound->ok)
        bad.push_back("wid " + std::to_string(v.wid.total) + " is below the bound " +
                      std::to_string(*v.bound->bound));
    }
    const bool type_a = entry.dynkin->type.family == DynkinFamily::A;
    if (v.commutative && *v.commutative != type_a)
      bad.push_back(std::string("algebra is ") + (*v.commutative ? "" : "not ") +
                    "commutative but the curve is " + (type_a ? "" : "not ") + "of type A");
    if (v.wid.finite() && v.cwid.finite()) {
      try {
        v.gv = gv_from_widths({v.wid.total, v.cwid.total}, *v.length);
      } catch (const Error& e) {
        bad.push_back(e.what());
      }
      if (entry.expected_gv && (v.gv.size() != 1 || v.gv.front() != *entry.expected_gv))
        bad.push_back("GV profile does not match the expected one");
      if (!type_a && !v.gv.empty() &&
          std::all_of(v.gv.front().n.begin() + 1, v.gv.front().n.end(),
                      [](std::uint64_t n) { return n == 0; }))
        bad.push_back("noncommutative algebra without a higher GV invariant");
    }
  }
  return v;
}

}  // namespace concalc
