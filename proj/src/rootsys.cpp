#include "rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>

#include "error.hpp"

namespace concalc {

namespace {

constexpr std::size_t kMaxRank = 64;

std::vector<std::pair<std::size_t, std::size_t>> edges(DynkinType t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = t.rank;
  switch (t.family) {
    case DynkinFamily::A:
      for (std::size_t i = 1; i < n; ++i) out.emplace_back(i, i + 1);
      break;
    case DynkinFamily::D:
      for (std::size_t i = 1; i + 2 < n; ++i) out.emplace_back(i, i + 1);
      out.emplace_back(n - 2, n - 1);
      out.emplace_back(n - 2, n);
      break;
    case DynkinFamily::E:
      out.emplace_back(1, 3);
      out.emplace_back(2, 4);
      for (std::size_t i = 3; i < n; ++i) out.emplace_back(i, i + 1);
      break;
  }
  return out;
}

Root simple_root(std::size_t rank, std::size_t vertex) {
  Root r{std::vector<int>(rank, 0)};
  r.coeffs[vertex - 1] = 1;
  return r;
}

struct TypeKey {
  DynkinFamily family;
  std::size_t rank;
  friend auto operator<=>(const TypeKey&, const TypeKey&) = default;
};

}  // namespace

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) fail(ErrorKind::Input, "invalid Dynkin type '" + std::string(text) + "'");
  DynkinType t{};
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': t.family = DynkinFamily::A; break;
    case 'D': t.family = DynkinFamily::D; break;
    case 'E': t.family = DynkinFamily::E; break;
    default: fail(ErrorKind::Input, "unsupported Dynkin family in '" + std::string(text) + "'");
  }
  std::string_view digits = text.substr(1);
  if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      }))
    fail(ErrorKind::Input, "invalid Dynkin rank in '" + std::string(text) + "'");
  t.rank = std::stoul(std::string(digits));
  t.validate();
  return t;
}

std::string DynkinType::name() const {
  const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
  return f + std::to_string(rank);
}

void DynkinType::validate() const {
  bool ok = false;
  switch (family) {
    case DynkinFamily::A: ok = rank >= 1 && rank <= kMaxRank; break;
    case DynkinFamily::D: ok = rank >= 4 && rank <= kMaxRank; break;
    case DynkinFamily::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) fail(ErrorKind::Input, "invalid rank for Dynkin type " + name());
}

std::optional<std::size_t> DynkinType::center() const {
  switch (family) {
    case DynkinFamily::A: return std::nullopt;
    case DynkinFamily::D: return rank - 2;
    case DynkinFamily::E: return 4;
  }
  return std::nullopt;
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; });
}

Root Root::negated() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

bool root_less(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.coeffs < b.coeffs;
}

MarkedDynkin MarkedDynkin::make(DynkinType type, std::size_t mark) {
  type.validate();
  if (mark < 1 || mark > type.rank)
    fail(ErrorKind::Input, "mark " + std::to_string(mark) + " is not a vertex of " + type.name());
  bool realizable = false;
  switch (type.family) {
    case DynkinFamily::A: realizable = type.rank == 1; break;
    case DynkinFamily::D: realizable = type.rank == 4 && mark == 2; break;
    case DynkinFamily::E: realizable = mark == 4 || (type.rank == 8 && mark == 5); break;
  }
  return MarkedDynkin{type, mark, realizable};
}

MarkedDynkin MarkedDynkin::parse(std::string_view type, std::string_view mark) {
  DynkinType t = DynkinType::parse(type);
  if (mark == "center" || mark == "centre") {
    auto c = t.center();
    if (!c) fail(ErrorKind::Input, t.name() + " has no central vertex");
    return make(t, *c);
  }
  if (mark.empty() || mark.size() > 3 || !std::all_of(mark.begin(), mark.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      }))
    fail(ErrorKind::Input, "invalid mark '" + std::string(mark) + "'");
  return make(t, std::stoul(std::string(mark)));
}

CartanMatrix cartan_matrix(DynkinType type) {
  type.validate();
  CartanMatrix c(type.rank, std::vector<int>(type.rank, 0));
  for (std::size_t i = 0; i < type.rank; ++i) c[i][i] = 2;
  for (auto [a, b] : edges(type)) {
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  }
  return c;
}

int pairing(const Root& a, const Root& b, const CartanMatrix& cartan) {
  int s = 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) s += a.coeffs[i] * cartan[i][j] * b.coeffs[j];
  }
  return s;
}

const std::vector<Root>& positive_roots(DynkinType type) {
  type.validate();
  static std::mutex mu;
  static std::map<TypeKey, std::unique_ptr<const std::vector<Root>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[TypeKey{type.family, type.rank}];
  if (slot) return *slot;

  // A positive non-simple root is alpha + alpha_j for a smaller positive
  // root alpha with (alpha, alpha_j) = -1.
  const CartanMatrix c = cartan_matrix(type);
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  std::vector<Root> roots;
  for (std::size_t v = 1; v <= type.rank; ++v) {
    Root s = simple_root(type.rank, v);
    seen.insert(s.coeffs);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    roots.push_back(r);
    for (std::size_t v = 1; v <= type.rank; ++v) {
      if (pairing(r, simple_root(type.rank, v), c) != -1) continue;
      Root s = r;
      ++s.coeffs[v - 1];
      if (seen.insert(s.coeffs).second) queue.push_back(std::move(s));
    }
  }
  std::sort(roots.begin(), roots.end(), root_less);
  slot = std::make_unique<const std::vector<Root>>(std::move(roots));
  return *slot;
}

Root reflect(const Root& r, std::size_t vertex, DynkinType type) {
  type.validate();
  if (vertex < 1 || vertex > type.rank)
    fail(ErrorKind::Input, "vertex " + std::to_string(vertex) + " is not in " + type.name());
  if (r.coeffs.size() != type.rank)
    fail(ErrorKind::Input, "root has the wrong number of coefficients for " + type.name());
  const CartanMatrix c = cartan_matrix(type);
  int coroot = 0;
  for (std::size_t k = 0; k < type.rank; ++k) coroot += r.coeffs[k] * c[vertex - 1][k];
  Root out = r;
  out.coeffs[vertex - 1] -= coroot;
  return out;
}

std::size_t length_invariant(const MarkedDynkin& m) {
  int best = 0;
  for (const Root& r : positive_roots(m.type)) best = std::max(best, r.at(m.mark));
  return static_cast<std::size_t>(best);
}

std::vector<DiscriminantComponent> discriminant_components(const MarkedDynkin& m) {
  const std::vector<Root>& roots = positive_roots(m.type);
  const CartanMatrix c = cartan_matrix(m.type);
  auto positive_rep = [](Root r) { return r.is_positive() ? r : r.negated(); };

  std::set<std::vector<int>> assigned;
  std::vector<DiscriminantComponent> out;
  for (const Root& start : roots) {
    if (assigned.count(start.coeffs)) continue;
    DiscriminantComponent comp;
    comp.curve_class = static_cast<std::size_t>(std::abs(start.at(m.mark)));
    std::deque<Root> queue{start};
    assigned.insert(start.coeffs);
    while (!queue.empty()) {
      Root r = queue.front();
      queue.pop_front();
      if (static_cast<std::size_t>(std::abs(r.at(m.mark))) != comp.curve_class)
        fail(ErrorKind::Internal, "marked coefficient is not constant on a parabolic orbit");
      comp.orbit.push_back(r);
      for (std::size_t v = 1; v <= m.type.rank; ++v) {
        if (v == m.mark) continue;
        int coroot = 0;
        for (std::size_t k = 0; k < m.type.rank; ++k) coroot += r.coeffs[k] * c[v - 1][k];
        if (coroot == 0) continue;
        Root s = r;
        s.coeffs[v - 1] -= coroot;
        s = positive_rep(std::move(s));
        if (assigned.insert(s.coeffs).second) queue.push_back(std::move(s));
      }
    }
    std::sort(comp.orbit.begin(), comp.orbit.end(), root_less);
    out.push_back(std::move(comp));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const DiscriminantComponent& a, const DiscriminantComponent& b) {
                     if (a.curve_class != b.curve_class) return a.curve_class < b.curve_class;
                     return root_less(a.orbit.front(), b.orbit.front());
                   });
  return out;
}

std::vector<MarkedDynkin> realizable_marks(DynkinType type) {
  type.validate();
  std::vector<MarkedDynkin> out;
  for (std::size_t v = 1; v <= type.rank; ++v) {
    MarkedDynkin m = MarkedDynkin::make(type, v);
    if (m.realizable) out.push_back(m);
  }
  return out;
}

}  // namespace concalc
