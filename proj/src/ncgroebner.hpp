#pragma once

// Diamond-lemma completion of noncommutative presentations and normal-word
// counting. The brute-force cross-check lives in oracle.hpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freealg.hpp"
#include "presentation.hpp"
#include "word_index.hpp"

namespace concalc {

/// lead -> tail, i.e. the monic polynomial lead - tail. Every tail word is
/// strictly smaller than lead.
struct RewriteRule {
  Word lead;
  NCPoly tail;

  NCPoly poly() const { return NCPoly::monomial(lead) - tail; }
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct CompletionConfig {
  std::size_t max_degree = 32;
  std::size_t max_rules = 10000;
};

class GroebnerBasis {
 public:
  enum class Truncation {
    None,
    DegreeCutoff,  // some ambiguity above the cutoff degree does not resolve
    RuleCap,       // completion stopped at CompletionConfig::max_rules
  };

  GroebnerBasis(MonomialOrder order, std::vector<RewriteRule> rules,
                std::size_t truncation_degree, Truncation truncation);

  const MonomialOrder& order() const { return order_; }
  std::size_t alphabet_size() const { return order_.alphabet_size(); }
  std::span<const RewriteRule> rules() const { return rules_; }
  std::size_t truncation_degree() const { return truncation_degree_; }
  bool truncated() const { return truncation_ != Truncation::None; }
  Truncation truncation() const { return truncation_; }
  const WordIndex& index() const { return index_; }

  std::vector<Word> leading_words() const;
  bool is_normal(const Word& w) const { return !index_.matches(w); }

 private:
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  std::size_t truncation_degree_;
  Truncation truncation_;
  WordIndex index_;
};

enum class ReductionStrategy {
  // Largest reducible monomial first, leftmost occurrence, lowest rule index.
  LargestFirst,
  // Smallest reducible monomial first, rightmost occurrence, highest rule index.
  SmallestFirst,
};

NCPoly normal_form(const NCPoly& f, const GroebnerBasis& basis,
                   ReductionStrategy strategy = ReductionStrategy::LargestFirst);

struct Ambiguity {
  enum class Kind { Overlap, Inclusion };
  Kind kind;
  Word word;
  NCPoly first;   // one-step rewrite of word by the first rule
  NCPoly second;  // one-step rewrite of word by the second rule
};

/// Overlap ambiguities in both orders (ab*c with lead1 = ab, lead2 = bc, a, b,
/// c nonempty) and proper inclusion ambiguities of either lead in the other.
std::vector<Ambiguity> ambiguities(const RewriteRule& r1, const RewriteRule& r2);

GroebnerBasis complete(const Presentation& p, const CompletionConfig& cfg = {});
GroebnerBasis complete(const Presentation& p, const CompletionConfig& cfg,
                       const MonomialOrder& order);

/// counts[d] = number of normal words of degree d, for d = 0..up_to.
std::vector<std::uint64_t> enumerate_normal_words(const GroebnerBasis& basis,
                                                  std::size_t up_to);

/// Explicit normal words of degree <= up_to, grown by right extension with
/// subword pruning; stops after limit words.
std::vector<Word> list_normal_words(const GroebnerBasis& basis, std::size_t up_to,
                                    std::size_t limit = 1u << 20);

struct DimensionReport {
  enum class Verdict { Finite, LowerBoundAtCutoff };

  std::vector<std::uint64_t> counts;  // index = degree
  Verdict verdict = Verdict::LowerBoundAtCutoff;
  std::uint64_t total = 0;            // dimension if Finite, partial sum otherwise
  std::size_t cutoff_degree = 0;      // last degree counted
  bool truncated = false;             // counts come from an incomplete basis
  std::size_t rule_count = 0;

  bool finite() const { return verdict == Verdict::Finite; }
  /// Degree of the first zero count, for a Finite verdict.
  std::optional<std::size_t> finiteness_degree() const;
};

DimensionReport dimension(const Presentation& p, const CompletionConfig& cfg = {});
DimensionReport dimension(const Presentation& p, const CompletionConfig& cfg,
                          const MonomialOrder& order);
DimensionReport dimension_from_basis(const GroebnerBasis& basis);

}  // namespace concalc
