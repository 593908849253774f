#pragma once

#include <string>
#include <vector>

#include "freealg.hpp"

namespace concalc {

/// Generators in declaration order (first = largest letter) and relations,
/// each read as "relation = 0".
struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<NCPoly> relations;

  std::size_t alphabet_size() const { return generators.size(); }
  MonomialOrder order() const { return MonomialOrder::identity(generators.size()); }
  std::size_t max_relation_degree() const;

  /// Throws ErrorKind::Input if names are malformed or duplicated, a relation
  /// is zero, or a relation uses a letter outside the alphabet.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

}  // namespace concalc
