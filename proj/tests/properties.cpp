#include "properties.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "catalog.hpp"
#include "error.hpp"
#include "gvcalc.hpp"
#include "ncgroebner.hpp"
#include "presentations.hpp"
#include "rootsys.hpp"
#include "support.hpp"

namespace testing {

namespace {

std::string show(const Word& w) {
  std::string s;
  for (Letter l : w) s += static_cast<char>('a' + l);
  return s.empty() ? "1" : s;
}

// Reference deglex: longer is larger; otherwise the first letter of higher
// precedence wins.
int reference_compare(const Word& a, const Word& b, const std::vector<Letter>& precedence) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (a[i] == b[i]) continue;
    auto pa = std::find(precedence.begin(), precedence.end(), a[i]) - precedence.begin();
    auto pb = std::find(precedence.begin(), precedence.end(), b[i]) - precedence.begin();
    return pa < pb ? 1 : -1;
  }
  return 0;
}

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

Presentation random_presentation(std::mt19937_64& rng, std::size_t gens, std::size_t relations,
                                 std::size_t max_len, std::size_t max_terms) {
  Presentation p;
  p.name = "R";
  for (std::size_t i = 0; i < gens; ++i) p.generators.push_back(std::string(1, char('a' + i)));
  while (p.relations.size() < relations) {
    NCPoly f = random_poly(rng, gens, max_len, max_terms);
    if (!f.is_zero()) p.relations.push_back(f);
  }
  return p;
}

// Catalogue presentations plus random ones whose completion finishes.
std::vector<GroebnerBasis> basis_pool(std::mt19937_64& rng, std::size_t random_wanted) {
  std::vector<GroebnerBasis> pool;
  for (std::size_t k = 1; k <= 4; ++k) pool.push_back(complete(d4_family_presentation(k)));
  pool.push_back(complete(abelianize(d4_family_presentation(2))));
  pool.push_back(complete(type_a_presentation(4)));
  std::uniform_int_distribution<std::size_t> gens(2, 3), rels(1, 3);
  for (std::size_t attempts = 0; attempts < 2000 && random_wanted > 0; ++attempts) {
    Presentation p = random_presentation(rng, gens(rng), rels(rng), 3, 3);
    GroebnerBasis g = complete(p, {9, 60});
    // A rule with a constant leading term collapses the algebra to zero.
    if (g.truncated() || g.rules().empty() || !g.is_normal(Word{})) continue;
    pool.push_back(std::move(g));
    --random_wanted;
  }
  return pool;
}

}  // namespace

PropertyResult deglex_order(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"deglex total order and concatenation monotonicity"};
  std::mt19937_64 rng(seed);
  for (; r.cases < cases; ++r.cases) {
    std::size_t g = 1 + rng() % 4;
    std::vector<Letter> precedence(g);
    for (Letter i = 0; i < g; ++i) precedence[i] = i;
    std::shuffle(precedence.begin(), precedence.end(), rng);
    MonomialOrder order(precedence);
    Word u = random_word(rng, g, 6), v = random_word(rng, g, 6), w = random_word(rng, g, 6);
    if (rng() % 4 == 0) v = u;
    Word a = random_word(rng, g, 3), b = random_word(rng, g, 3);

    int uv = sign_of(compare_words(u, v, order));
    if (uv != reference_compare(u, v, precedence)) r.fail("reference mismatch " + show(u) + " " + show(v));
    if (uv != -sign_of(compare_words(v, u, order))) r.fail("antisymmetry " + show(u) + " " + show(v));
    if ((uv == 0) != (u == v)) r.fail("equality " + show(u) + " " + show(v));
    int vw = sign_of(compare_words(v, w, order));
    if (uv < 0 && vw < 0 && !order.less(u, w)) r.fail("transitivity " + show(u) + " " + show(w));
    if (uv != sign_of(compare_words(a * u * b, a * v * b, order)))
      r.fail("monotonicity " + show(a) + "|" + show(u) + "|" + show(v) + "|" + show(b));
  }
  return r;
}

PropertyResult subword_closure(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"subword closure of normal words"};
  std::mt19937_64 rng(seed);
  std::vector<GroebnerBasis> pool = basis_pool(rng, 30);
  for (; r.cases < cases; ++r.cases) {
    const GroebnerBasis& g = pool[rng() % pool.size()];
    const std::size_t alphabet = g.alphabet_size();
    // Grow a normal word letter by letter; stop at a dead end.
    Word w;
    std::size_t target = rng() % 12;
    while (w.degree() < target) {
      std::vector<Letter> ok;
      for (Letter l = 0; l < alphabet; ++l)
        if (g.is_normal(w * Word{l})) ok.push_back(l);
      if (ok.empty()) break;
      w = w * Word{ok[rng() % ok.size()]};
    }
    if (!g.is_normal(w)) {
      r.fail("grown word is not normal: " + show(w));
      continue;
    }
    for (std::size_t i = 0; i <= w.degree(); ++i)
      for (std::size_t len = 0; i + len <= w.degree(); ++len)
        if (!g.is_normal(w.subword(i, len))) r.fail("subword of " + show(w) + " is reducible");
    // Counts must vanish forever once they vanish.
    auto counts = enumerate_normal_words(g, 9);
    auto zero = std::find(counts.begin(), counts.end(), 0u);
    if (std::any_of(zero, counts.end(), [](std::uint64_t c) { return c != 0; }))
      r.fail("nonzero count after a zero count");
  }
  return r;
}

PropertyResult confluence(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"confluence of normal_form on complete bases"};
  std::mt19937_64 rng(seed);
  std::vector<GroebnerBasis> pool = basis_pool(rng, 30);
  for (; r.cases < cases; ++r.cases) {
    const GroebnerBasis& g = pool[rng() % pool.size()];
    NCPoly f = random_poly(rng, g.alphabet_size(), 7, 5);
    NCPoly a = normal_form(f, g, ReductionStrategy::LargestFirst);
    NCPoly b = normal_form(f, g, ReductionStrategy::SmallestFirst);
    if (!(a == b)) {
      r.fail("strategies disagree");
      continue;
    }
    for (const auto& [w, c] : a.terms())
      if (!g.is_normal(w)) r.fail("normal form has a reducible word " + show(w));
    if (!(normal_form(a, g) == a)) r.fail("normal form is not idempotent");
    // Linearity: NF(f + h) = NF(f) + NF(h).
    NCPoly h = random_poly(rng, g.alphabet_size(), 7, 5);
    if (!(normal_form(f + h, g) == a + normal_form(h, g))) r.fail("normal form is not linear");
  }
  return r;
}

PropertyResult reflection_closure(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"reflect involution and root closure"};
  std::mt19937_64 rng(seed);
  std::vector<DynkinType> types;
  for (std::size_t n = 1; n <= 8; ++n) types.push_back({DynkinFamily::A, n});
  for (std::size_t n = 4; n <= 8; ++n) types.push_back({DynkinFamily::D, n});
  for (std::size_t n = 6; n <= 8; ++n) types.push_back({DynkinFamily::E, n});
  for (; r.cases < cases; ++r.cases) {
    DynkinType t = types[rng() % types.size()];
    const auto& roots = positive_roots(t);
    Root alpha = roots[rng() % roots.size()];
    if (rng() % 2) alpha = alpha.negated();
    std::size_t j = 1 + rng() % t.rank;
    Root beta = reflect(alpha, j, t);
    if (!(reflect(beta, j, t) == alpha)) r.fail(t.name() + ": reflect is not an involution");
    Root pos = beta.is_positive() ? beta : beta.negated();
    if (!std::binary_search(roots.begin(), roots.end(), pos, root_less))
      r.fail(t.name() + ": reflection left the root system");
    // A simple reflection permutes the positive roots other than alpha_j.
    bool is_alpha_j = std::abs(alpha.at(j)) == 1 && std::abs(alpha.height()) == 1;
    if (!is_alpha_j && beta.is_positive() != alpha.is_positive())
      r.fail(t.name() + ": s_j changed the sign of a root other than alpha_j");
  }
  return r;
}

PropertyResult parse_print_round_trip(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"parse/print round trip"};
  std::mt19937_64 rng(seed);
  const std::vector<std::string> names{"x", "y", "z", "a1", "b_2", "Gen", "t"};
  for (; r.cases < cases; ++r.cases) {
    std::size_t g = 1 + rng() % 4;
    std::vector<std::string> pick = names;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(g);
    Presentation p = random_presentation(rng, g, rng() % 4, 5, 4);
    p.generators = pick;
    p.name = "P" + std::to_string(r.cases);
    std::string text = print_presentation(p);
    try {
      if (!(parse_presentation(text) == p)) r.fail("round trip changed:\n" + text);
    } catch (const Error& e) {
      r.fail(std::string("printed text does not parse: ") + e.what() + "\n" + text);
    }
  }
  return r;
}

PropertyResult gv_round_trip(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"GV round trip, l <= 4"};
  std::mt19937_64 rng(seed);
  for (; r.cases < cases; ++r.cases) {
    std::size_t l = 1 + rng() % 4;
    GVProfile p{std::vector<std::uint64_t>(l)};
    p.n[0] = 1 + rng() % 30;
    for (std::size_t j = 1; j < l; ++j) p.n[j] = rng() % 8;
    WidthPair w = widths_from_gv(p);
    auto back = gv_from_widths(w, l);
    if (std::find(back.begin(), back.end(), p) == back.end()) r.fail("profile lost");
    if (l <= 2 && back.size() != 1) r.fail("profile not unique for l <= 2");
    for (const GVProfile& q : back)
      if (!(widths_from_gv(q) == w)) r.fail("solution with different widths");
  }
  return r;
}

std::vector<PropertyResult> all_properties(std::uint64_t seed, std::size_t cases) {
  return {deglex_order(seed, cases),        subword_closure(seed + 1, cases),
          confluence(seed + 2, cases),      reflection_closure(seed + 3, cases),
          parse_print_round_trip(seed + 4, cases), gv_round_trip(seed + 5, cases)};
}

}  // namespace testing
