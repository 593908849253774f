#include "presentation.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "presentations.hpp"

namespace concalc {

std::size_t Presentation::max_relation_degree() const {
  std::size_t d = 0;
  for (const NCPoly& r : relations) d = std::max(d, r.max_degree());
  return d;
}

void Presentation::validate() const {
  if (!is_identifier(name)) fail(ErrorKind::Input, "invalid algebra name '" + name + "'");
  std::set<std::string> seen;
  for (const std::string& g : generators) {
    if (!is_identifier(g)) fail(ErrorKind::Input, "invalid generator name '" + g + "'");
    if (!seen.insert(g).second) fail(ErrorKind::Input, "duplicate generator '" + g + "'");
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].is_zero())
      fail(ErrorKind::Input, "relation " + std::to_string(i + 1) + " is zero");
    relations[i].check_alphabet(generators.size());
  }
}

}  // namespace concalc
