#include <functional>
#include <random>

#include "doctest.h"
#include "error.hpp"
#include "gvcalc.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Every profile (cwid, n_2, .., n_l) with entries bounded by the width.
std::vector<GVProfile> brute_force_profiles(WidthPair w, std::size_t l) {
  std::vector<GVProfile> out;
  if (w.wid < w.cwid) return out;
  std::vector<std::uint64_t> n(l, 0);
  n[0] = w.cwid;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t j, std::uint64_t sum) {
    if (j == l) {
      if (sum == w.wid - w.cwid) out.push_back({n});
      return;
    }
    for (std::uint64_t v = 0; v <= w.wid; ++v) {
      std::uint64_t add = (j + 1) * (j + 1) * v;
      if (sum + add > w.wid - w.cwid) break;
      n[j] = v;
      rec(j + 1, sum + add);
    }
    n[j] = 0;
  };
  rec(1, 0);
  return out;
}

UniPoly upoly(const std::string& text) { return UniPoly::from_ncpoly(poly(text, {"t"})); }

PolyPath path(std::initializer_list<const char*> coords) {
  PolyPath p;
  for (const char* c : coords) p.coords.push_back(upoly(c));
  return p;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_SUITE("gvcalc") {

TEST_CASE("widths_from_gv") {
  CHECK(widths_from_gv({{7, 2}}) == WidthPair{15, 7});
  for (std::uint64_t d = 1; d <= 12; ++d) CHECK(widths_from_gv({{d}}) == WidthPair{d, d});
  CHECK(widths_from_gv({{1, 0, 0, 0, 0, 0}}) == WidthPair{1, 1});
  CHECK(widths_from_gv({{2, 1, 1, 1, 1, 1}}).wid == 2 + 4 + 9 + 16 + 25 + 36);
  CHECK(kind_of([] { widths_from_gv({{0, 1}}); }) == ErrorKind::Input);
  CHECK(kind_of([] { widths_from_gv({{}}); }) == ErrorKind::Input);
  CHECK(kind_of([] { widths_from_gv({{1, UINT64_MAX}}); }) == ErrorKind::Input);
}

TEST_CASE("gv_from_widths examples") {
  CHECK(gv_from_widths({15, 7}, 2) == std::vector<GVProfile>{{{7, 2}}});
  CHECK(gv_from_widths({7, 7}, 1) == std::vector<GVProfile>{{{7}}});
  CHECK(gv_from_widths({5 + 13, 5}, 3) == std::vector<GVProfile>{{{5, 1, 1}}});
  for (std::uint64_t k = 1; k <= 6; ++k)
    CHECK(gv_from_widths({3 * (2 * k + 1), 2 * k + 3}, 2) ==
          std::vector<GVProfile>{{{2 * k + 3, k}}});
}

TEST_CASE("gv_from_widths errors") {
  auto message = [](WidthPair w, std::size_t l) -> std::string {
    try {
      gv_from_widths(w, l);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Inconsistent);
      return e.what();
    }
    return "";
  };
  CHECK(message({10, 7}, 2).find("not divisible by 4") != std::string::npos);
  CHECK(message({6, 7}, 2) != "");
  CHECK(message({8, 7}, 1) != "");
  CHECK(message({7 + 2, 7}, 3) != "");
  CHECK(kind_of([] { gv_from_widths({5, 5}, 0); }) == ErrorKind::Input);
  CHECK(kind_of([] { gv_from_widths({500, 1}, 5, 10); }) == ErrorKind::Input);
}

TEST_CASE("gv_from_widths matches brute force") {
  for (std::uint64_t cwid = 1; cwid <= 3; ++cwid)
    for (std::uint64_t extra = 0; extra <= 40; ++extra)
      for (std::size_t l = 1; l <= 4; ++l) {
        WidthPair w{cwid + extra, cwid};
        auto expected = brute_force_profiles(w, l);
        if (expected.empty()) {
          CHECK(kind_of([&] { gv_from_widths(w, l); }) == ErrorKind::Inconsistent);
        } else {
          CHECK(gv_from_widths(w, l) == expected);
        }
      }
}

TEST_CASE("UniPoly") {
  UniPoly p = upoly("t^3 - 2*t");
  CHECK(p.degree() == 3u);
  CHECK(p.order_at_zero() == 1u);
  CHECK_FALSE(UniPoly().degree().has_value());
  CHECK(p.shifted(Rational(1)) == upoly("t^3 + 3*t^2 + t - 1"));
  CHECK(p.rescaled(Rational(2)) == upoly("8*t^3 - 4*t"));
  CHECK_THROWS_AS(UniPoly::from_ncpoly(poly("x*y")), Error);
}

TEST_CASE("path_gv examples") {
  MarkedDynkin a1 = MarkedDynkin::parse("A1", "1");
  for (int d = 1; d <= 5; ++d) {
    PolyPath p;
    p.coords.push_back(UniPoly::from_ncpoly(NCPoly::monomial(Word::power(0, d))));
    CHECK(path_gv(a1, p, PathMode::AtOrigin).profile == GVProfile{{std::uint64_t(d)}});
  }
  CHECK(path_gv(a1, path({"t^2 - 1"}), PathMode::Total).profile == GVProfile{{2}});
  CHECK(path_gv(a1, path({"t^2 - 1"}), PathMode::AtOrigin).profile == GVProfile{{0}});

  MarkedDynkin a2 = MarkedDynkin::parse("A2", "1");
  PathProfile r = path_gv(a2, path({"t", "t - 1"}), PathMode::Total);
  CHECK(r.profile == GVProfile{{2}});
  CHECK(r.singular_incidence == 1);

  MarkedDynkin d4 = MarkedDynkin::parse("D4", "center");
  PathProfile z = path_gv(d4, path({"0", "t", "0", "0"}), PathMode::AtOrigin);
  CHECK(z.singular_identically_zero == 3);
  CHECK(z.profile.length() == 2);
  // class-1 roots: 8, each pairing is t; class-2 root: 2t.
  CHECK(z.profile == GVProfile{{8, 1}});
}

TEST_CASE("path_gv errors") {
  MarkedDynkin a2 = MarkedDynkin::parse("A2", "1");
  CHECK(kind_of([&] { path_gv(a2, path({"t", "-t"}), PathMode::Total); }) ==
        ErrorKind::Inconsistent);
  CHECK(kind_of([&] { path_gv(a2, path({"t"}), PathMode::Total); }) == ErrorKind::Input);
  CHECK(kind_of([&] { path_gv(a2, path({"0", "0"}), PathMode::Total); }) == ErrorKind::Input);
}

TEST_CASE("path_gv is invariant under translation and rescaling") {
  std::mt19937_64 rng(11);
  MarkedDynkin d4 = MarkedDynkin::parse("D4", "center");
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    PolyPath p;
    for (int j = 0; j < 4; ++j) {
      std::vector<Rational> c(4);
      for (auto& x : c) x = coef(rng);
      p.coords.emplace_back(c);
    }
    PathProfile base;
    try {
      base = path_gv(d4, p, PathMode::Total);
    } catch (const Error&) {
      continue;  // path inside a hyperplane
    }
    Rational shift = random_rational(rng);
    Rational scale = random_rational(rng);
    if (scale.is_zero()) scale = 1;
    PolyPath shifted = p, scaled = p;
    for (auto& c : shifted.coords) c = c.shifted(shift);
    for (auto& c : scaled.coords) c = c.rescaled(scale);
    CHECK(path_gv(d4, shifted, PathMode::Total).profile == base.profile);
    CHECK(path_gv(d4, scaled, PathMode::AtOrigin).profile ==
          path_gv(d4, p, PathMode::AtOrigin).profile);
  }
}

TEST_CASE("width bounds") {
  DynkinType d4 = DynkinType::parse("D4");
  CHECK(width_bound_check(d4, 2, 9).ok);
  BoundCheck low = width_bound_check(d4, 2, 3);
  CHECK_FALSE(low.ok);
  CHECK(low.bound == 4u);
  CHECK(width_bound_check(DynkinType::parse("E7"), 4, 24).ok);
  CHECK_FALSE(width_bound_check(DynkinType::parse("E7"), 4, 23).ok);
  CHECK(width_lower_bound(DynkinType::parse("A1")) == 1u);
  CHECK(width_lower_bound(DynkinType::parse("E6")) == 12u);
  CHECK(width_lower_bound(DynkinType::parse("E8")) == 40u);
  CHECK_FALSE(width_lower_bound(DynkinType::parse("A3")).has_value());
  CHECK(width_bound_check(DynkinType::parse("A3"), 2, 1).ok);
  CHECK_THROWS_AS(width_bound_check(d4, 5, 9), Error);
}

}  // TEST_SUITE
