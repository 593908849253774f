#include "freealg.hpp"

#include <algorithm>
#include <cctype>

#include "error.hpp"

namespace concalc {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::Input, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorKind::Input, "malformed rational '" + std::string(text) + "'");
  Rational r{mpz_class(std::string(num)), mpz_class(std::string(den))};
  return negative ? -r : r;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::Inconsistent, "division by zero");
  v_ /= o.v_;
  return *this;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::contains(const Word& pattern) const {
  if (pattern.empty()) return true;
  return std::search(letters_.begin(), letters_.end(), pattern.letters_.begin(),
                     pattern.letters_.end()) != letters_.end();
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.degree() + b.degree());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= l + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

MonomialOrder::MonomialOrder(std::vector<Letter> precedence)
    : precedence_(std::move(precedence)), rank_(precedence_.size(), 0) {
  std::vector<bool> seen(precedence_.size(), false);
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    Letter l = precedence_[i];
    if (l >= precedence_.size() || seen[l])
      fail(ErrorKind::Input, "precedence is not a permutation of the alphabet");
    seen[l] = true;
    rank_[l] = i;
  }
}

MonomialOrder MonomialOrder::identity(std::size_t alphabet_size) {
  std::vector<Letter> p(alphabet_size);
  for (std::size_t i = 0; i < alphabet_size; ++i) p[i] = static_cast<Letter>(i);
  return MonomialOrder(std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (a[i] == b[i]) continue;
    // Smaller rank means larger letter.
    return rank_[b[i]] <=> rank_[a[i]];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_words(const Word& a, const Word& b,
                                   const MonomialOrder& order) {
  for (const Word* w : {&a, &b})
    for (Letter l : *w)
      if (l >= order.alphabet_size())
        fail(ErrorKind::Input, "letter index out of alphabet range");
  return order.compare(a, b);
}

std::optional<std::size_t> find_leading_occurrence(const Word& word,
                                                   const Word& pattern) {
  if (pattern.empty()) fail(ErrorKind::Input, "empty search pattern");
  auto it = std::search(word.begin(), word.end(), pattern.begin(), pattern.end());
  if (it == word.end()) return std::nullopt;
  return static_cast<std::size_t>(it - word.begin());
}

NCPoly::NCPoly(std::vector<std::pair<Word, Rational>> terms) {
  for (auto& [w, c] : terms) add_term(w, c);
}

NCPoly NCPoly::monomial(Word w, Rational c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational() : it->second;
}

std::size_t NCPoly::max_degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

void NCPoly::check_alphabet(std::size_t alphabet_size) const {
  for (const auto& [w, c] : terms_)
    for (Letter l : w)
      if (l >= alphabet_size) fail(ErrorKind::Input, "letter index out of alphabet range");
}

const Word& NCPoly::leading_word(const MonomialOrder& order) const {
  if (terms_.empty()) fail(ErrorKind::Input, "zero polynomial has no leading word");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return best->first;
}

const Rational& NCPoly::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_word(order));
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::scaled(const Rational& c) const {
  NCPoly out;
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, k * c);
  return out;
}

NCPoly operator+(const NCPoly& f, const NCPoly& g) {
  NCPoly out = f;
  for (const auto& [w, c] : g.terms_) out.add_term(w, c);
  return out;
}

NCPoly operator-(const NCPoly& f, const NCPoly& g) {
  NCPoly out = f;
  for (const auto& [w, c] : g.terms_) out.add_term(w, -c);
  return out;
}

NCPoly operator*(const NCPoly& f, const NCPoly& g) {
  NCPoly out;
  for (const auto& [u, a] : f.terms_)
    for (const auto& [v, b] : g.terms_) out.add_term(u * v, a * b);
  return out;
}

std::vector<std::pair<Word, Rational>> NCPoly::sorted_terms(
    const MonomialOrder& order) const {
  std::vector<std::pair<Word, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return order.less(b.first, a.first);
  });
  return out;
}

NCPoly poly_add(const NCPoly& f, const NCPoly& g) { return f + g; }

NCPoly poly_shift(const Word& left, const NCPoly& f, const Word& right) {
  NCPoly out;
  for (const auto& [w, c] : f.terms()) out.add_term(left * w * right, c);
  return out;
}

}  // namespace concalc
