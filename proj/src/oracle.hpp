#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "presentation.hpp"

namespace concalc {

struct OracleConfig {
  // Refuse cutoffs whose word space (all words of degree <= D) is larger.
  std::uint64_t max_words = std::uint64_t{1} << 21;
};

/// Brute-force filtered dimensions of the quotient by exact Gaussian
/// elimination: the span of all shifts u*r*v with deg(u r v) <= cutoff inside
/// the space of words of degree <= cutoff. counts[d] is the number of degree-d
/// words that are not pivots of the echelon form, i.e. the dimension of the
/// degree-d layer of the filtered quotient. Independent of the rewriting
/// engine. For inhomogeneous relations each count is an upper bound that
/// decreases to the true value as the cutoff grows.
std::vector<std::uint64_t> oracle_dimension(const Presentation& p, std::size_t cutoff,
                                            const OracleConfig& cfg = {});

/// Number of words of degree <= cutoff over the alphabet, saturating at
/// UINT64_MAX.
std::uint64_t oracle_word_space(std::size_t alphabet_size, std::size_t cutoff);

}  // namespace concalc
