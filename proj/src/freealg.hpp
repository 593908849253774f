#pragma once

// Exact coefficients, words over a finite alphabet, noncommutative
// polynomials and the degree-lexicographic monomial order.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace concalc {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

  /// Accepts "p", "-p" and "p/q" with decimal integers.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

/// Index of a generator in a presentation's generator list.
using Letter = std::uint32_t;

/// Finite sequence of generator indices; the empty word is the unit monomial.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word power(Letter letter, std::size_t exponent) {
    return Word(std::vector<Letter>(exponent, letter));
  }

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const;
  bool contains(const Word& pattern) const;

  friend Word operator*(const Word& a, const Word& b);

  // Plain lexicographic comparison on raw indices; only used for storage.
  // Use MonomialOrder for the algebraic order.
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Degree-lexicographic order. precedence[0] is the largest letter.
class MonomialOrder {
 public:
  explicit MonomialOrder(std::vector<Letter> precedence);
  static MonomialOrder identity(std::size_t alphabet_size);

  std::size_t alphabet_size() const { return precedence_.size(); }
  const std::vector<Letter>& precedence() const { return precedence_; }
  /// 0 for the largest letter, alphabet_size()-1 for the smallest.
  std::size_t rank(Letter letter) const { return rank_.at(letter); }

  /// Unchecked: letters must be inside the alphabet (see compare_words).
  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.precedence_ == b.precedence_;
  }

 private:
  std::vector<Letter> precedence_;
  std::vector<std::size_t> rank_;
};

std::strong_ordering compare_words(const Word& a, const Word& b,
                                   const MonomialOrder& order);

/// Leftmost start index of pattern as a contiguous subword of word.
std::optional<std::size_t> find_leading_occurrence(const Word& word,
                                                   const Word& pattern);

/// Finite map from words to nonzero rationals.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rational>;

  NCPoly() = default;
  /// Sums duplicate words and drops zero coefficients.
  explicit NCPoly(std::vector<std::pair<Word, Rational>> terms);
  static NCPoly monomial(Word w, Rational c = 1);
  static NCPoly constant(Rational c) { return monomial(Word{}, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Word& w) const;
  std::size_t max_degree() const;

  /// Throws if any letter is outside [0, alphabet_size).
  void check_alphabet(std::size_t alphabet_size) const;

  /// Largest word under order; the polynomial must be nonzero.
  const Word& leading_word(const MonomialOrder& order) const;
  const Rational& leading_coefficient(const MonomialOrder& order) const;

  void add_term(const Word& w, const Rational& c);

  NCPoly scaled(const Rational& c) const;
  NCPoly operator-() const { return scaled(-1); }
  friend NCPoly operator+(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator-(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator*(const NCPoly& f, const NCPoly& g);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// Terms sorted from largest to smallest under order.
  std::vector<std::pair<Word, Rational>> sorted_terms(
      const MonomialOrder& order) const;

 private:
  TermMap terms_;
};

NCPoly poly_add(const NCPoly& f, const NCPoly& g);
NCPoly poly_shift(const Word& left, const NCPoly& f, const Word& right);

}  // namespace concalc
