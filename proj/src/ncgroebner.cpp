#include "ncgroebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <string>

#include "error.hpp"

namespace concalc {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(b, a); }
};

using WorkPoly = std::map<Word, Rational, Descending>;

void accumulate(WorkPoly& work, const Word& w, const Rational& c) {
  auto [it, inserted] = work.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) work.erase(it);
}

void rewrite_into(WorkPoly& work, const Word& w, const Rational& c,
                  const RewriteRule& rule, std::size_t start) {
  Word prefix = w.subword(0, start);
  Word suffix = w.subword(start + rule.lead.degree(),
                          w.degree() - start - rule.lead.degree());
  for (const auto& [t, k] : rule.tail.terms()) accumulate(work, prefix * t * suffix, c * k);
}

NCPoly reduce(const NCPoly& f, std::span<const RewriteRule> rules,
              const WordIndex& index, const MonomialOrder& order,
              ReductionStrategy strategy) {
  WorkPoly work(Descending{&order});
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);
  NCPoly out;

  if (strategy == ReductionStrategy::LargestFirst) {
    // Rewrites only produce smaller words, so once the largest remaining
    // word is irreducible it is final.
    while (!work.empty()) {
      auto it = work.begin();
      Word w = it->first;
      Rational c = it->second;
      work.erase(it);
      if (auto m = index.leftmost(w)) {
        rewrite_into(work, w, c, rules[m->pattern], m->start);
      } else {
        out.add_term(w, c);
      }
    }
    return out;
  }

  for (;;) {
    bool rewrote = false;
    for (auto it = work.rbegin(); it != work.rend(); ++it) {
      auto m = index.rightmost(it->first);
      if (!m) continue;
      Word w = it->first;
      Rational c = it->second;
      work.erase(std::next(it).base());
      rewrite_into(work, w, c, rules[m->pattern], m->start);
      rewrote = true;
      break;
    }
    if (!rewrote) break;
  }
  for (const auto& [w, c] : work) out.add_term(w, c);
  return out;
}

struct Placement {
  Ambiguity::Kind kind;
  Word word;
  std::size_t pos1;
  std::size_t pos2;
};

// Ways a word can be rewritten by both lead1 (at pos1) and lead2 (at pos2)
// such that the two occurrences overlap or one includes the other.
std::vector<Placement> placements(const Word& lead1, const Word& lead2, bool same_rule) {
  std::vector<Placement> out;
  if (lead1.empty() || lead2.empty()) return out;
  const std::size_t n1 = lead1.degree();
  const std::size_t n2 = lead2.degree();

  auto overlaps = [&](const Word& a, const Word& b, bool a_first) {
    const std::size_t na = a.degree();
    const std::size_t nb = b.degree();
    for (std::size_t k = 1; k < std::min(na, nb); ++k) {
      if (!std::equal(a.begin() + static_cast<std::ptrdiff_t>(na - k), a.end(), b.begin()))
        continue;
      Word w = a * b.subword(k, nb - k);
      if (a_first)
        out.push_back({Ambiguity::Kind::Overlap, std::move(w), 0, na - k});
      else
        out.push_back({Ambiguity::Kind::Overlap, std::move(w), na - k, 0});
    }
  };
  overlaps(lead1, lead2, true);
  if (!same_rule) overlaps(lead2, lead1, false);

  if (!same_rule) {
    auto inclusions = [&](const Word& outer, const Word& inner, bool outer_first) {
      if (inner.degree() > outer.degree()) return;
      for (std::size_t p = 0; p + inner.degree() <= outer.degree(); ++p) {
        if (!std::equal(inner.begin(), inner.end(),
                        outer.begin() + static_cast<std::ptrdiff_t>(p)))
          continue;
        if (outer_first)
          out.push_back({Ambiguity::Kind::Inclusion, outer, 0, p});
        else
          out.push_back({Ambiguity::Kind::Inclusion, outer, p, 0});
      }
    };
    inclusions(lead1, lead2, true);
    if (n1 != n2) inclusions(lead2, lead1, false);
  }
  return out;
}

NCPoly one_step(const Word& w, const RewriteRule& rule, std::size_t pos) {
  Word prefix = w.subword(0, pos);
  Word suffix = w.subword(pos + rule.lead.degree(), w.degree() - pos - rule.lead.degree());
  return poly_shift(prefix, rule.tail, suffix);
}

class Completer {
 public:
  Completer(const MonomialOrder& order, const CompletionConfig& cfg)
      : order_(order), cfg_(cfg) {}

  GroebnerBasis run(const std::vector<NCPoly>& relations) {
    for (const NCPoly& r : relations) insert(r);
    for (;;) {
      drain();
      if (cap_hit_) break;
      if (!resolve_above_cutoff()) break;
    }

    std::vector<RewriteRule> rules;
    for (const Slot& s : slots_)
      if (s.alive) rules.push_back(s.rule);
    std::sort(rules.begin(), rules.end(), [&](const RewriteRule& a, const RewriteRule& b) {
      return order_.less(a.lead, b.lead);
    });
    auto truncation = cap_hit_        ? GroebnerBasis::Truncation::RuleCap
                      : unresolved_   ? GroebnerBasis::Truncation::DegreeCutoff
                                      : GroebnerBasis::Truncation::None;
    return GroebnerBasis(order_, std::move(rules), cfg_.max_degree, truncation);
  }

 private:
  struct Slot {
    RewriteRule rule;
    bool alive = true;
  };

  struct Pending {
    std::size_t degree;
    std::size_t seq;
    std::size_t id1;
    std::size_t id2;
    Placement where;
  };

  struct LaterFirst {
    bool operator()(const Pending& a, const Pending& b) const {
      if (a.degree != b.degree) return a.degree > b.degree;
      return a.seq > b.seq;
    }
  };

  NCPoly reduce_now(const NCPoly& f) const {
    return reduce(f, active_rules_, index_, order_, ReductionStrategy::LargestFirst);
  }

  void rebuild_index() {
    active_rules_.clear();
    std::vector<Word> leads;
    for (const Slot& s : slots_) {
      if (!s.alive) continue;
      active_rules_.push_back(s.rule);
      leads.push_back(s.rule.lead);
    }
    index_ = WordIndex(leads, order_.alphabet_size());
  }

  std::size_t alive_count() const {
    return static_cast<std::size_t>(
        std::count_if(slots_.begin(), slots_.end(), [](const Slot& s) { return s.alive; }));
  }

  void insert(const NCPoly& poly) {
    std::deque<NCPoly> todo{poly};
    while (!todo.empty() && !cap_hit_) {
      NCPoly r = reduce_now(todo.front());
      todo.pop_front();
      if (r.is_zero()) continue;

      Word lead = r.leading_word(order_);
      r = r.scaled(Rational(1) / r.coefficient(lead));
      RewriteRule rule{lead, NCPoly::monomial(lead) - r};

      // Keep the basis tip-reduced: rules whose lead is now reducible are
      // withdrawn and their polynomials re-enter the queue.
      for (Slot& s : slots_) {
        if (s.alive && s.rule.lead.contains(lead)) {
          s.alive = false;
          todo.push_back(s.rule.poly());
        }
      }
      const std::size_t id = slots_.size();
      slots_.push_back({rule, true});
      rebuild_index();

      bool tails_changed = false;
      for (std::size_t i = 0; i < slots_.size(); ++i) {
        Slot& s = slots_[i];
        if (!s.alive || i == id) continue;
        bool touches = std::any_of(s.rule.tail.terms().begin(), s.rule.tail.terms().end(),
                                   [&](const auto& t) { return t.first.contains(lead); });
        if (!touches) continue;
        s.rule.tail = reduce_now(s.rule.tail);
        tails_changed = true;
      }
      if (tails_changed) rebuild_index();

      for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (!slots_[i].alive) continue;
        for (Placement& p : placements(slots_[id].rule.lead, slots_[i].rule.lead, i == id)) {
          std::size_t degree = p.word.degree();
          queue_.push({degree, seq_++, id, i, std::move(p)});
        }
      }
      if (alive_count() > cfg_.max_rules) cap_hit_ = true;
    }
  }

  NCPoly s_poly(const Pending& p) const {
    const RewriteRule& r1 = slots_[p.id1].rule;
    const RewriteRule& r2 = slots_[p.id2].rule;
    return one_step(p.where.word, r1, p.where.pos1) - one_step(p.where.word, r2, p.where.pos2);
  }

  void drain() {
    while (!queue_.empty() && !cap_hit_) {
      Pending p = queue_.top();
      queue_.pop();
      if (!slots_[p.id1].alive || !slots_[p.id2].alive) continue;
      if (p.degree > cfg_.max_degree) {
        deferred_.push_back(std::move(p));
        continue;
      }
      NCPoly s = reduce_now(s_poly(p));
      if (!s.is_zero()) insert(s);
    }
  }

  // Ambiguities above the cutoff are only checked, never used to add rules.
  // Returns true when a check produced a low-degree remainder that was added.
  bool resolve_above_cutoff() {
    unresolved_ = false;
    std::vector<Pending> keep;
    bool added = false;
    for (Pending& p : deferred_) {
      if (!slots_[p.id1].alive || !slots_[p.id2].alive) continue;
      NCPoly s = reduce_now(s_poly(p));
      if (s.is_zero()) continue;
      if (s.max_degree() <= cfg_.max_degree) {
        insert(s);
        added = true;
        continue;
      }
      unresolved_ = true;
      keep.push_back(std::move(p));
    }
    deferred_ = std::move(keep);
    return added;
  }

  const MonomialOrder& order_;
  const CompletionConfig& cfg_;
  std::vector<Slot> slots_;
  std::vector<RewriteRule> active_rules_;
  WordIndex index_;
  std::priority_queue<Pending, std::vector<Pending>, LaterFirst> queue_;
  std::vector<Pending> deferred_;
  std::size_t seq_ = 0;
  bool cap_hit_ = false;
  bool unresolved_ = false;
};

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<RewriteRule> rules,
                             std::size_t truncation_degree, Truncation truncation)
    : order_(std::move(order)),
      rules_(std::move(rules)),
      truncation_degree_(truncation_degree),
      truncation_(truncation) {
  index_ = WordIndex(leading_words(), order_.alphabet_size());
}

std::vector<Word> GroebnerBasis::leading_words() const {
  std::vector<Word> out;
  out.reserve(rules_.size());
  for (const RewriteRule& r : rules_) out.push_back(r.lead);
  return out;
}

NCPoly normal_form(const NCPoly& f, const GroebnerBasis& basis, ReductionStrategy strategy) {
  f.check_alphabet(basis.alphabet_size());
  return reduce(f, basis.rules(), basis.index(), basis.order(), strategy);
}

std::vector<Ambiguity> ambiguities(const RewriteRule& r1, const RewriteRule& r2) {
  std::vector<Ambiguity> out;
  for (Placement& p : placements(r1.lead, r2.lead, r1 == r2)) {
    NCPoly a = one_step(p.word, r1, p.pos1);
    NCPoly b = one_step(p.word, r2, p.pos2);
    out.push_back({p.kind, std::move(p.word), std::move(a), std::move(b)});
  }
  return out;
}

GroebnerBasis complete(const Presentation& p, const CompletionConfig& cfg) {
  return complete(p, cfg, p.order());
}

GroebnerBasis complete(const Presentation& p, const CompletionConfig& cfg,
                       const MonomialOrder& order) {
  p.validate();
  if (order.alphabet_size() != p.alphabet_size())
    fail(ErrorKind::Input, "monomial order does not match the generator count");
  if (cfg.max_degree == 0 || cfg.max_rules == 0)
    fail(ErrorKind::Input, "completion limits must be positive");
  if (cfg.max_degree < p.max_relation_degree())
    fail(ErrorKind::Input, "max degree " + std::to_string(cfg.max_degree) +
                               " is below the relation degree " +
                               std::to_string(p.max_relation_degree()));
  return Completer(order, cfg).run(p.relations);
}

std::vector<std::uint64_t> enumerate_normal_words(const GroebnerBasis& basis,
                                                  std::size_t up_to) {
  if (basis.truncated() && up_to > basis.truncation_degree())
    fail(ErrorKind::Indeterminate,
         "degree " + std::to_string(up_to) + " exceeds the trustworthy range " +
             std::to_string(basis.truncation_degree()) + " of a truncated basis");
  std::vector<std::uint64_t> counts = basis.index().count_avoiding(up_to);
  if (counts.size() != up_to + 1)
    fail(ErrorKind::Internal, "normal word count exceeds 64 bits");
  auto first_zero = std::find(counts.begin(), counts.end(), 0u);
  if (std::any_of(first_zero, counts.end(), [](std::uint64_t c) { return c != 0; }))
    fail(ErrorKind::Internal, "normal words are not closed under subwords");
  return counts;
}

std::vector<Word> list_normal_words(const GroebnerBasis& basis, std::size_t up_to,
                                    std::size_t limit) {
  std::vector<Word> out;
  if (!basis.is_normal(Word{})) return out;
  std::vector<Word> level{Word{}};
  out.push_back(Word{});
  for (std::size_t d = 1; d <= up_to && !level.empty(); ++d) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Letter l : basis.order().precedence()) {
        Word v = w * Word{l};
        if (!basis.is_normal(v)) continue;
        if (out.size() >= limit) return out;
        out.push_back(v);
        next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::optional<std::size_t> DimensionReport::finiteness_degree() const {
  if (!finite()) return std::nullopt;
  return counts.size() - 1;
}

DimensionReport dimension_from_basis(const GroebnerBasis& basis) {
  DimensionReport rep;
  rep.truncated = basis.truncated();
  rep.rule_count = basis.rules().size();
  std::vector<std::uint64_t> counts = basis.index().count_avoiding(basis.truncation_degree());
  auto zero = std::find(counts.begin(), counts.end(), 0u);
  if (zero != counts.end() && !basis.truncated()) {
    counts.erase(std::next(zero), counts.end());
    rep.verdict = DimensionReport::Verdict::Finite;
  }
  rep.cutoff_degree = counts.size() - 1;
  for (std::uint64_t c : counts) {
    if (__builtin_add_overflow(rep.total, c, &rep.total)) {
      rep.total = UINT64_MAX;
      break;
    }
  }
  rep.counts = std::move(counts);
  return rep;
}

DimensionReport dimension(const Presentation& p, const CompletionConfig& cfg) {
  return dimension_from_basis(complete(p, cfg));
}

DimensionReport dimension(const Presentation& p, const CompletionConfig& cfg,
                          const MonomialOrder& order) {
  return dimension_from_basis(complete(p, cfg, order));
}

}  // namespace concalc
