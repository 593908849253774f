// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "gvcalc.hpp"
#include "ncgroebner.hpp"
#include "oracle.hpp"
#include "presentations.hpp"
#include "properties.hpp"
#include "rootsys.hpp"

using namespace concalc;

namespace {

// Runtime budgets in seconds, as stated per criterion.
constexpr double kBudget1 = 1.0;
constexpr double kBudget2PerK = 10.0;
constexpr double kBudget3 = 0.001;
constexpr double kBudget4 = 1.0;
constexpr double kBudget5 = 1.0;
constexpr double kBudget6 = 0.001;
constexpr double kBudget7 = 60.0;
constexpr double kBudget8 = 30.0;
constexpr double kBudget9 = 30.0;
constexpr double kBudget10 = 0.001;
constexpr double kBudget11 = 120.0;
constexpr std::size_t kPropertyCases = 1000;
constexpr std::uint64_t kPropertySeed = 20261015;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

int failures = 0;

void criterion(int number, const std::string& title, double budget,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.problems.push_back(std::string("exception: ") + e.what());
  }
  double elapsed = seconds_since(t0);
  if (elapsed > budget) {
    std::ostringstream os;
    os << "took " << elapsed << " s, budget " << budget << " s";
    out.problems.push_back(os.str());
  }
  const bool pass = out.problems.empty();
  if (!pass) ++failures;
  std::printf("criterion %2d: %s  %s  [%.3f s]\n", number, pass ? "PASS" : "FAIL", title.c_str(),
              elapsed);
  for (const std::string& p : out.problems) std::printf("    - %s\n", p.c_str());
  std::fflush(stdout);
}

std::vector<const CatalogEntry*> entries_of(DynkinFamily f) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog())
    if (e.dynkin && e.dynkin->type.family == f) out.push_back(&e);
  return out;
}

}  // namespace

int main() {
  criterion(1, "type-A dimensions: dim <e | e^d> = Finite(d), d = 1..12", kBudget1, [](Outcome& o) {
    for (std::size_t d = 1; d <= 12; ++d) {
      DimensionReport r = dimension(type_a_presentation(d));
      o.expect(r.finite() && r.total == d,
               "d=" + std::to_string(d) + ": got total " + std::to_string(r.total));
    }
  });

  criterion(2, "D4 family: wid = 3(2k+1), cwid = 2k+3, k = 1..6", 6 * kBudget2PerK,
            [](Outcome& o) {
              for (std::size_t k = 1; k <= 6; ++k) {
                auto t0 = Clock::now();
                Presentation p = d4_family_presentation(k);
                DimensionReport w = dimension(p);
                DimensionReport c = dimension(abelianize(p));
                const std::string tag = "k=" + std::to_string(k);
                o.expect(seconds_since(t0) <= kBudget2PerK, tag + ": over the per-k budget");
                o.expect(w.finite() && w.total == 3 * (2 * k + 1),
                         tag + ": wid " + std::to_string(w.total));
                o.expect(c.finite() && c.total == 2 * k + 3,
                         tag + ": cwid " + std::to_string(c.total));
              }
            });

  criterion(3, "GV extraction: gv_from_widths((3(2k+1), 2k+3), 2) = [(2k+3, k)]", kBudget3,
            [](Outcome& o) {
              for (std::uint64_t k = 1; k <= 6; ++k) {
                auto got = gv_from_widths({3 * (2 * k + 1), 2 * k + 3}, 2);
                o.expect(got.size() == 1 && got[0] == GVProfile{{2 * k + 3, k}},
                         "k=" + std::to_string(k));
              }
            });

  criterion(4, "length table: 1, 2, 3, 4, 5, 6", kBudget4, [](Outcome& o) {
    struct Row {
      const char* type;
      const char* mark;
      std::size_t length;
    };
    for (Row r : {Row{"A1", "1", 1}, Row{"D4", "center", 2}, Row{"E6", "center", 3},
                  Row{"E7", "center", 4}, Row{"E8", "5", 5}, Row{"E8", "center", 6}}) {
      std::size_t got = length_invariant(MarkedDynkin::parse(r.type, r.mark));
      o.expect(got == r.length, std::string(r.type) + "," + r.mark + ": got " +
                                    std::to_string(got));
    }
  });

  criterion(5, "positive roots 3/12/36/63/120; A2 discriminant has 3 components in U", kBudget5,
            [](Outcome& o) {
              struct Row {
                const char* type;
                std::size_t count;
              };
              for (Row r : {Row{"A2", 3}, Row{"D4", 12}, Row{"E6", 36}, Row{"E7", 63},
                            Row{"E8", 120}}) {
                std::size_t got = positive_roots(DynkinType::parse(r.type)).size();
                o.expect(got == r.count, std::string(r.type) + ": got " + std::to_string(got));
              }
              // Upstairs every positive root gives its own hyperplane.
              std::size_t hyperplanes = 0;
              for (const auto& c : discriminant_components(MarkedDynkin::parse("A2", "1")))
                hyperplanes += c.orbit.size();
              o.expect(hyperplanes == 3, "A2 hyperplanes: " + std::to_string(hyperplanes));
            });

  criterion(6, "type-A path counting: path_gv((A1,1), t^d, at origin) = (d), d = 1..5", kBudget6,
            [](Outcome& o) {
              MarkedDynkin a1 = MarkedDynkin::parse("A1", "1");
              for (std::size_t d = 1; d <= 5; ++d) {
                PolyPath p;
                p.coords.push_back(UniPoly::from_ncpoly(NCPoly::monomial(Word::power(0, d))));
                PathProfile r = path_gv(a1, p, PathMode::AtOrigin);
                o.expect(r.profile == GVProfile{{d}}, "d=" + std::to_string(d) + ": got " +
                                                          join(r.profile.n));
              }
            });

  criterion(7, "oracle equivalence at D = d0 + max relation degree + 2, all catalogue entries",
            kBudget7, [](Outcome& o) {
              for (const CatalogEntry& e : catalog()) {
                DimensionReport r = dimension(e.presentation);
                GroebnerBasis g = complete(e.presentation);
                if (!r.finite()) {
                  o.expect(false, e.key + ": no finite verdict");
                  continue;
                }
                const std::size_t d0 = *r.finiteness_degree();
                const std::size_t D = d0 + e.presentation.max_relation_degree() + 2;
                const std::uint64_t space =
                    oracle_word_space(e.presentation.alphabet_size(), D);
                if (space > OracleConfig{}.max_words) {
                  o.expect(false, e.key + ": oracle word space at D=" + std::to_string(D) +
                                      " is " + std::to_string(space) +
                                      " words, beyond the brute-force limit");
                  continue;
                }
                auto oracle = oracle_dimension(e.presentation, D);
                auto engine = enumerate_normal_words(g, d0);
                std::vector<std::uint64_t> head(oracle.begin(), oracle.begin() + d0 + 1);
                o.expect(head == engine,
                         e.key + ": oracle " + join(head) + " vs engine " + join(engine));
              }
            });

  criterion(8, "order invariance: D4_family(k), k = 1..3, both precedences", kBudget8,
            [](Outcome& o) {
              for (std::size_t k = 1; k <= 3; ++k) {
                Presentation p = d4_family_presentation(k);
                DimensionReport a = dimension(p, {}, MonomialOrder({0, 1}));
                DimensionReport b = dimension(p, {}, MonomialOrder({1, 0}));
                o.expect(a.verdict == b.verdict && a.total == b.total,
                         "k=" + std::to_string(k) + ": " + std::to_string(a.total) + " vs " +
                             std::to_string(b.total));
              }
            });

  criterion(9, "commutativity dichotomy and n_2 > 0 for D4 entries", kBudget9, [](Outcome& o) {
    for (const CatalogEntry* e : entries_of(DynkinFamily::A))
      o.expect(is_commutative_quotient(e->presentation), e->key + " is not commutative");
    for (const CatalogEntry* e : entries_of(DynkinFamily::D)) {
      o.expect(!is_commutative_quotient(e->presentation), e->key + " is commutative");
      DimensionReport w = dimension(e->presentation);
      DimensionReport c = dimension(abelianize(e->presentation));
      auto gv = gv_from_widths({w.total, c.total}, length_invariant(*e->dynkin));
      o.expect(gv.size() == 1 && gv[0].n.size() >= 2 && gv[0].n[1] > 0,
               e->key + ": n_2 is not positive");
    }
  });

  criterion(10, "width bounds: all entries pass; (D4, wid 3) warns with bound 4", kBudget10,
            [](Outcome& o) {
              for (const CatalogEntry& e : catalog()) {
                BoundCheck b = width_bound_check(e.dynkin->type, e.dynkin->mark, *e.expected_wid);
                o.expect(b.ok, e.key + " is below its bound");
              }
              struct Row {
                const char* type;
                const char* mark;
                std::uint64_t bound;
              };
              for (Row r : {Row{"A1", "1", 1}, Row{"D4", "center", 4}, Row{"E6", "center", 12},
                            Row{"E7", "center", 24}, Row{"E8", "center", 40}}) {
                MarkedDynkin m = MarkedDynkin::parse(r.type, r.mark);
                BoundCheck at = width_bound_check(m.type, m.mark, r.bound);
                BoundCheck below = width_bound_check(m.type, m.mark, r.bound - 1);
                o.expect(at.ok && at.bound == r.bound && !below.ok,
                         std::string(r.type) + " bound is not " + std::to_string(r.bound));
              }
              BoundCheck d4 = width_bound_check(DynkinType::parse("D4"), 2, 3);
              o.expect(!d4.ok && d4.bound == 4u, "(D4, wid 3) does not warn with bound 4");
            });

  criterion(11, "property suites, >= 1000 randomized cases each", kBudget11, [](Outcome& o) {
    for (const testing::PropertyResult& r :
         testing::all_properties(kPropertySeed, kPropertyCases)) {
      o.expect(r.cases >= kPropertyCases, r.name + ": only " + std::to_string(r.cases) + " cases");
      o.expect(r.ok(), r.name + ": " + std::to_string(r.failures) + " failures, first: " +
                           r.first_failure);
    }
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
