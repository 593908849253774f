#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "error.hpp"

namespace concalc {

namespace {

struct Overflow {};

// Exact fraction in 64-bit integers, kept reduced with a positive
// denominator. Throws Overflow instead of wrapping.
struct SmallQ {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static SmallQ make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      if (n == INT64_MIN || d == INT64_MIN) throw Overflow{};
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  static SmallQ from(const Rational& r) {
    if (!r.numerator().fits_slong_p() || !r.denominator().fits_slong_p()) throw Overflow{};
    return {r.numerator().get_si(), r.denominator().get_si()};
  }

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == 1 && den == 1; }
  friend SmallQ operator*(SmallQ a, SmallQ b) {
    return make(mul(a.num, b.num), mul(a.den, b.den));
  }
  friend SmallQ operator/(SmallQ a, SmallQ b) {
    return make(mul(a.num, b.den), mul(a.den, b.num));
  }
  friend SmallQ operator-(SmallQ a, SmallQ b) {
    if (a.den == b.den) return make(add(a.num, -b.num), a.den);
    return make(add(mul(a.num, b.den), -mul(b.num, a.den)), mul(a.den, b.den));
  }
  SmallQ operator-() const {
    if (num == INT64_MIN) throw Overflow{};
    return {-num, den};
  }
};

template <typename Q>
Q convert(const Rational& r);
template <>
SmallQ convert<SmallQ>(const Rational& r) { return SmallQ::from(r); }
template <>
Rational convert<Rational>(const Rational& r) { return r; }

template <typename Q>
using Row = std::vector<std::pair<std::uint64_t, Q>>;  // descending codes

// row -= factor * pivot; both sorted by descending code.
template <typename Q>
Row<Q> subtract_multiple(const Row<Q>& row, const Q& factor, const Row<Q>& pivot) {
  Row<Q> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first > pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first > row[i].first) {
      out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      Q c = row[i].second - factor * pivot[j].second;
      if (!c.is_zero()) out.emplace_back(row[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Layout {
  std::uint64_t g;
  std::size_t cutoff;
  std::vector<std::uint64_t> power, offset;
};

struct Term {
  std::uint64_t value;
  std::size_t degree;
  Rational coeff;
};

template <typename Q>
std::vector<std::uint64_t> eliminate(const Layout& lay,
                                     const std::vector<std::vector<Term>>& relations) {
  const auto& power = lay.power;
  const auto& offset = lay.offset;
  std::vector<std::int64_t> pivot_of(offset[lay.cutoff + 1], -1);
  std::vector<Row<Q>> pivots;

  auto insert_row = [&](Row<Q> row) {
    while (!row.empty()) {
      std::int64_t piv = pivot_of[row.front().first];
      if (piv < 0) {
        Q lead = row.front().second;
        if (!lead.is_one())
          for (auto& entry : row) entry.second = entry.second / lead;
        pivot_of[row.front().first] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(row));
        return;
      }
      Q factor = row.front().second;
      row = subtract_multiple(row, factor, pivots[static_cast<std::size_t>(piv)]);
    }
  };

  for (const auto& terms : relations) {
    std::size_t e = 0;
    for (const Term& t : terms) e = std::max(e, t.degree);
    std::vector<Q> coeffs;
    for (const Term& t : terms) coeffs.push_back(convert<Q>(t.coeff));

    for (std::size_t s = 0; s + e <= lay.cutoff; ++s) {
      for (std::size_t a = 0; a <= s; ++a) {
        const std::size_t b = s - a;
        for (std::uint64_t u = 0; u < power[a]; ++u) {
          for (std::uint64_t v = 0; v < power[b]; ++v) {
            Row<Q> row;
            row.reserve(terms.size());
            for (std::size_t k = 0; k < terms.size(); ++k) {
              const Term& t = terms[k];
              std::size_t len = a + t.degree + b;
              std::uint64_t code =
                  offset[len] + (u * power[t.degree] + t.value) * power[b] + v;
              row.emplace_back(code, coeffs[k]);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first > y.first; });
            insert_row(std::move(row));
          }
        }
      }
    }
  }

  std::vector<std::uint64_t> counts(lay.cutoff + 1, 0);
  for (std::size_t d = 0; d <= lay.cutoff; ++d)
    for (std::uint64_t code = offset[d]; code < offset[d + 1]; ++code)
      if (pivot_of[code] < 0) ++counts[d];
  return counts;
}

}  // namespace

std::uint64_t oracle_word_space(std::size_t alphabet_size, std::size_t cutoff) {
  std::uint64_t total = 0, layer = 1;
  for (std::size_t d = 0; d <= cutoff; ++d) {
    if (__builtin_add_overflow(total, layer, &total)) return UINT64_MAX;
    if (d < cutoff && __builtin_mul_overflow(layer, alphabet_size, &layer)) return UINT64_MAX;
  }
  return total;
}

std::vector<std::uint64_t> oracle_dimension(const Presentation& p, std::size_t cutoff,
                                            const OracleConfig& cfg) {
  p.validate();
  if (cutoff < p.max_relation_degree())
    fail(ErrorKind::Input, "oracle cutoff " + std::to_string(cutoff) +
                               " is below the relation degree " +
                               std::to_string(p.max_relation_degree()));
  const std::uint64_t g = p.alphabet_size();
  const std::uint64_t space = oracle_word_space(g, cutoff);
  if (space > cfg.max_words)
    fail(ErrorKind::Input, "oracle cutoff " + std::to_string(cutoff) + " needs " +
                               (space == UINT64_MAX ? std::string("more than 2^64")
                                                    : std::to_string(space)) +
                               " words, above the limit of " + std::to_string(cfg.max_words));

  // Words are numbered by their position in the deglex order, so comparing
  // codes compares words.
  Layout lay{g, cutoff, std::vector<std::uint64_t>(cutoff + 1, 1),
             std::vector<std::uint64_t>(cutoff + 2, 0)};
  for (std::size_t d = 1; d <= cutoff; ++d) lay.power[d] = lay.power[d - 1] * g;
  for (std::size_t d = 0; d <= cutoff; ++d) lay.offset[d + 1] = lay.offset[d] + lay.power[d];
  const MonomialOrder order = p.order();
  std::vector<std::vector<Term>> relations;
  for (const NCPoly& r : p.relations) {
    auto& terms = relations.emplace_back();
    for (const auto& [w, c] : r.terms()) {
      std::uint64_t v = 0;
      for (Letter l : w) v = v * g + (g - 1 - order.rank(l));
      terms.push_back({v, w.degree(), c});
    }
  }

  // Machine-word fractions first; GMP only if some entry outgrows them.
  try {
    return eliminate<SmallQ>(lay, relations);
  } catch (const Overflow&) {
    return eliminate<Rational>(lay, relations);
  }
}

}  // namespace concalc
