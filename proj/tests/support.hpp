#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "freealg.hpp"
#include "presentations.hpp"

namespace testing {

using namespace concalc;

inline NCPoly poly(const std::string& text, const std::vector<std::string>& gens = {"x", "y"}) {
  return parse_polynomial(text, gens);
}

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

inline Word word_of(const std::string& letters, const std::string& alphabet = "xy") {
  std::vector<Letter> out;
  for (char c : letters) out.push_back(static_cast<Letter>(alphabet.find(c)));
  return Word(out);
}

inline Word random_word(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet - 1));
  std::vector<Letter> w(len(rng));
  for (auto& l : w) l = letter(rng);
  return Word(w);
}

inline Rational random_rational(std::mt19937_64& rng, long range = 5) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline NCPoly random_poly(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len,
                          std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> terms(0, max_terms);
  NCPoly f;
  for (std::size_t i = terms(rng); i > 0; --i)
    f.add_term(random_word(rng, alphabet, max_len), random_rational(rng));
  return f;
}

}  // namespace testing
