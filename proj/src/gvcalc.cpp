#include "gvcalc.hpp"

#include <string>

#include "error.hpp"

namespace concalc {

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
  fail(ErrorKind::Inconsistent, "inconsistent with Toda's formula: " + why);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::Input, "width exceeds 64 bits");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::Input, "width exceeds 64 bits");
  return out;
}

}  // namespace

WidthPair widths_from_gv(const GVProfile& p) {
  if (p.n.empty()) fail(ErrorKind::Input, "GV profile must have length at least 1");
  if (p.n[0] == 0) fail(ErrorKind::Input, "n_1 must be positive");
  WidthPair w;
  w.cwid = p.n[0];
  for (std::size_t j = 1; j <= p.n.size(); ++j)
    w.wid = checked_add(w.wid, checked_mul(j * j, p.n[j - 1]));
  return w;
}

std::vector<GVProfile> gv_from_widths(const WidthPair& w, std::size_t l,
                                      std::size_t max_solutions) {
  if (l == 0) fail(ErrorKind::Input, "length must be at least 1");
  if (w.cwid == 0) fail(ErrorKind::Input, "cwid must be positive");
  if (w.wid < w.cwid)
    inconsistent("wid " + std::to_string(w.wid) + " is smaller than cwid " +
                 std::to_string(w.cwid));
  const std::uint64_t rest = w.wid - w.cwid;
  if (l == 1) {
    if (rest != 0) inconsistent("length 1 requires wid = cwid");
    return {GVProfile{{w.cwid}}};
  }
  if (l == 2) {
    if (rest % 4 != 0)
      inconsistent("wid - cwid = " + std::to_string(rest) + " is not divisible by 4");
    return {GVProfile{{w.cwid, rest / 4}}};
  }

  std::vector<GVProfile> out;
  GVProfile current{std::vector<std::uint64_t>(l, 0)};
  current.n[0] = w.cwid;
  // Depth-first over n_2, n_3, ... in increasing order gives lexicographic output.
  auto search = [&](auto&& self, std::size_t j, std::uint64_t remaining) -> void {
    const std::uint64_t weight = j * j;
    if (j == l) {
      if (remaining % weight != 0) return;
      current.n[j - 1] = remaining / weight;
      if (out.size() >= max_solutions)
        fail(ErrorKind::Input, "more than " + std::to_string(max_solutions) + " GV profiles");
      out.push_back(current);
      return;
    }
    for (std::uint64_t k = 0; k * weight <= remaining; ++k) {
      current.n[j - 1] = k;
      self(self, j + 1, remaining - k * weight);
    }
    current.n[j - 1] = 0;
  };
  search(search, 2, rest);
  if (out.empty())
    inconsistent("no nonnegative n_2..n_" + std::to_string(l) + " with weighted sum " +
                 std::to_string(rest));
  return out;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::from_ncpoly(const NCPoly& f) {
  std::vector<Rational> c;
  for (const auto& [w, k] : f.terms()) {
    for (Letter l : w)
      if (l != 0) fail(ErrorKind::Input, "path coordinate must be a polynomial in one variable");
    if (c.size() <= w.degree()) c.resize(w.degree() + 1);
    c[w.degree()] += k;
  }
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::optional<std::size_t> UniPoly::order_at_zero() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return k;
  return std::nullopt;
}

UniPoly UniPoly::shifted(const Rational& c) const {
  // Horner: p(t + c) = (...(a_n (t+c) + a_{n-1})(t+c) + ...).
  std::vector<Rational> out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    std::vector<Rational> next(out.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] += out[i] * c;
    }
    next[0] += coeffs_[k];
    out = std::move(next);
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::rescaled(const Rational& lambda) const {
  std::vector<Rational> out(coeffs_.size());
  Rational p = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * p;
    p *= lambda;
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::add_scaled(const UniPoly& other, long factor) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] += other.coeffs_[k] * Rational(factor);
  trim();
  return *this;
}

PathProfile path_gv(const MarkedDynkin& m, const PolyPath& path, PathMode mode) {
  if (path.coords.size() != m.type.rank)
    fail(ErrorKind::Input, "path needs " + std::to_string(m.type.rank) +
                               " coordinates for " + m.type.name() + ", got " +
                               std::to_string(path.coords.size()));
  bool any = false;
  for (const UniPoly& a : path.coords) any = any || !a.is_zero();
  if (!any) fail(ErrorKind::Input, "path is identically zero");

  PathProfile out;
  out.profile.n.assign(length_invariant(m), 0);
  for (const Root& r : positive_roots(m.type)) {
    UniPoly g;
    for (std::size_t j = 0; j < r.coeffs.size(); ++j)
      if (r.coeffs[j] != 0) g.add_scaled(path.coords[j], r.coeffs[j]);
    const std::size_t cls = static_cast<std::size_t>(r.at(m.mark));
    if (g.is_zero()) {
      if (cls == 0) {
        ++out.singular_identically_zero;
        continue;
      }
      std::string coeffs;
      for (int c : r.coeffs) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(c);
      fail(ErrorKind::Inconsistent, "path lies in the hyperplane of root (" + coeffs +
                                        ") of class " + std::to_string(cls));
    }
    std::uint64_t zeros = mode == PathMode::AtOrigin ? *g.order_at_zero() : *g.degree();
    if (cls == 0) {
      out.singular_incidence += zeros;
    } else {
      out.profile.n[cls - 1] += zeros;
    }
  }
  return out;
}

std::optional<std::uint64_t> width_lower_bound(DynkinType type) {
  type.validate();
  switch (type.family) {
    case DynkinFamily::A:
      if (type.rank == 1) return 1;
      break;
    case DynkinFamily::D:
      if (type.rank == 4) return 4;
      break;
    case DynkinFamily::E:
      return type.rank == 6 ? 12 : type.rank == 7 ? 24 : 40;
  }
  return std::nullopt;
}

BoundCheck width_bound_check(DynkinType type, std::size_t mark, std::uint64_t wid) {
  MarkedDynkin::make(type, mark);
  BoundCheck out;
  out.bound = width_lower_bound(type);
  out.ok = !out.bound || wid >= *out.bound;
  return out;
}

}  // namespace concalc
