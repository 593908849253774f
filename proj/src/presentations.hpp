#pragma once

// Text format for presentations, printing, abelianization and the
// commutativity test.
//
//   algebra D4k1
//   generators x, y
//   relations
//     x*y = -y*x
//     x^2 = y^3      # comments run to end of line
//
// "LHS = RHS" is stored as LHS - RHS. Coefficients are integers or p/q,
// optionally followed by '*'; '^' binds tighter than '*'.

#include <string>
#include <string_view>
#include <vector>

#include "ncgroebner.hpp"
#include "presentation.hpp"

namespace concalc {

bool is_identifier(std::string_view s);

/// Parses a presentation file. Errors carry "line L, column C" positions.
Presentation parse_presentation(std::string_view text);

/// Parses one polynomial over a fixed generator list.
NCPoly parse_polynomial(std::string_view text, const std::vector<std::string>& generators);

/// Canonical text; parse_presentation(print_presentation(p)) == p.
std::string print_presentation(const Presentation& p);
std::string print_polynomial(const NCPoly& f, const std::vector<std::string>& generators);

/// Adds g_i g_j - g_j g_i for all i < j (skipping ones already present).
Presentation abelianize(const Presentation& p);

/// Same algebra with generators listed in a new order; precedence[k] is the
/// old index of the generator that becomes k-th.
Presentation reorder_generators(const Presentation& p, const std::vector<Letter>& precedence);

/// True iff every commutator of generators reduces to zero. Refuses
/// (ErrorKind::Indeterminate) when the basis is truncated.
bool is_commutative_quotient(const Presentation& p, const CompletionConfig& cfg = {});

}  // namespace concalc
