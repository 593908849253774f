#include "word_index.hpp"

#include <deque>

#include "error.hpp"

namespace concalc {

WordIndex::WordIndex(std::span<const Word> patterns, std::size_t alphabet_size)
    : alphabet_size_(alphabet_size) {
  nodes_.emplace_back();
  nodes_[0].next.assign(alphabet_size_, -1);
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const Word& w = patterns[p];
    pattern_len_.push_back(w.degree());
    if (w.empty()) {
      if (!has_empty_) empty_index_ = p;
      has_empty_ = true;
      continue;
    }
    std::int32_t cur = 0;
    for (Letter l : w) {
      if (l >= alphabet_size_) fail(ErrorKind::Input, "letter index out of alphabet range");
      if (nodes_[cur].next[l] < 0) {
        nodes_[cur].next[l] = static_cast<std::int32_t>(nodes_.size());
        nodes_.emplace_back();
        nodes_.back().next.assign(alphabet_size_, -1);
      }
      cur = nodes_[cur].next[l];
    }
    nodes_[cur].out.push_back(p);
  }

  // Breadth-first construction of failure, dictionary and goto links.
  std::deque<std::int32_t> queue;
  for (std::size_t l = 0; l < alphabet_size_; ++l) {
    std::int32_t child = nodes_[0].next[l];
    if (child < 0) {
      nodes_[0].next[l] = 0;
    } else {
      nodes_[child].fail = 0;
      queue.push_back(child);
    }
  }
  nodes_[0].terminal = has_empty_ || !nodes_[0].out.empty();
  while (!queue.empty()) {
    std::int32_t u = queue.front();
    queue.pop_front();
    const Node& f = nodes_[nodes_[u].fail];
    nodes_[u].dict = f.out.empty() ? f.dict : nodes_[u].fail;
    nodes_[u].terminal = has_empty_ || !nodes_[u].out.empty() || f.terminal;
    for (std::size_t l = 0; l < alphabet_size_; ++l) {
      std::int32_t child = nodes_[u].next[l];
      if (child < 0) {
        nodes_[u].next[l] = nodes_[nodes_[u].fail].next[l];
      } else {
        nodes_[child].fail = nodes_[nodes_[u].fail].next[l];
        queue.push_back(child);
      }
    }
  }
}

template <typename Visit>
void WordIndex::for_each_match(const Word& w, Visit&& visit) const {
  if (nodes_.empty()) return;
  if (has_empty_)
    for (std::size_t i = 0; i <= w.degree(); ++i) visit(Match{i, empty_index_});
  std::int32_t state = 0;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (w[i] >= alphabet_size_) fail(ErrorKind::Input, "letter index out of alphabet range");
    state = nodes_[state].next[w[i]];
    for (std::int32_t s = state; s >= 0;
         s = nodes_[s].dict) {
      for (std::size_t p : nodes_[s].out) visit(Match{i + 1 - pattern_len_[p], p});
      if (s == 0) break;
    }
  }
}

std::optional<WordIndex::Match> WordIndex::leftmost(const Word& w) const {
  std::optional<Match> best;
  for_each_match(w, [&](Match m) {
    if (!best || m.start < best->start ||
        (m.start == best->start && m.pattern < best->pattern))
      best = m;
  });
  return best;
}

std::optional<WordIndex::Match> WordIndex::rightmost(const Word& w) const {
  std::optional<Match> best;
  for_each_match(w, [&](Match m) {
    if (!best || m.start > best->start ||
        (m.start == best->start && m.pattern > best->pattern))
      best = m;
  });
  return best;
}

bool WordIndex::matches(const Word& w) const {
  if (nodes_.empty()) return false;
  if (nodes_[0].terminal) return true;
  std::int32_t state = 0;
  for (Letter l : w) {
    state = nodes_[state].next[l];
    if (nodes_[state].terminal) return true;
  }
  return false;
}

std::vector<std::uint64_t> WordIndex::count_avoiding(std::size_t up_to) const {
  std::vector<std::uint64_t> counts(up_to + 1, 0);
  if (nodes_.empty()) {
    // No patterns: every word avoids them.
    std::uint64_t n = 1;
    for (std::size_t d = 0; d <= up_to; ++d) {
      counts[d] = n;
      if (d < up_to && __builtin_mul_overflow(n, alphabet_size_, &n)) {
        counts.resize(d + 1);
        break;
      }
    }
    return counts;
  }
  if (nodes_[0].terminal) return counts;
  std::vector<std::uint64_t> paths(nodes_.size(), 0), next(nodes_.size(), 0);
  paths[0] = 1;
  counts[0] = 1;
  for (std::size_t d = 1; d <= up_to; ++d) {
    std::fill(next.begin(), next.end(), 0);
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < nodes_.size(); ++s) {
      if (paths[s] == 0) continue;
      for (std::size_t l = 0; l < alphabet_size_; ++l) {
        std::int32_t t = nodes_[s].next[l];
        if (nodes_[t].terminal) continue;
        if (__builtin_add_overflow(next[t], paths[s], &next[t]) ||
            __builtin_add_overflow(total, paths[s], &total)) {
          counts.resize(d);
          return counts;
        }
      }
    }
    paths.swap(next);
    counts[d] = total;
  }
  return counts;
}

}  // namespace concalc
