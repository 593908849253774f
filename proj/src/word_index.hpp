#pragma once

// Aho-Corasick automaton over a fixed set of words. Used to find rewritable
// subwords and to count words that avoid every pattern.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freealg.hpp"

namespace concalc {

class WordIndex {
 public:
  struct Match {
    std::size_t start;
    std::size_t pattern;
  };

  WordIndex() = default;
  WordIndex(std::span<const Word> patterns, std::size_t alphabet_size);

  std::size_t pattern_count() const { return pattern_len_.size(); }

  /// Occurrence with the smallest start; ties go to the lowest pattern index.
  std::optional<Match> leftmost(const Word& w) const;
  /// Occurrence with the largest start; ties go to the highest pattern index.
  std::optional<Match> rightmost(const Word& w) const;
  bool matches(const Word& w) const;

  /// counts[d] = number of words of degree d containing no pattern, d <= up_to.
  /// Stops early (shorter result) once a count no longer fits in 64 bits.
  std::vector<std::uint64_t> count_avoiding(std::size_t up_to) const;

 private:
  struct Node {
    std::vector<std::int32_t> next;
    std::int32_t fail = 0;
    std::int32_t dict = -1;            // nearest proper suffix node with output
    std::vector<std::size_t> out;      // patterns ending exactly here
    bool terminal = false;             // some pattern is a suffix of this node
  };

  template <typename Visit>
  void for_each_match(const Word& w, Visit&& visit) const;

  std::size_t alphabet_size_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::size_t> pattern_len_;
  bool has_empty_ = false;
  std::size_t empty_index_ = 0;
};

}  // namespace concalc
