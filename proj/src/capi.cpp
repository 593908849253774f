#include "concalc/concalc.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "gvcalc.hpp"
#include "ncgroebner.hpp"
#include "oracle.hpp"
#include "presentations.hpp"
#include "rootsys.hpp"

struct concalc_presentation {
  concalc::Presentation value;
};

struct concalc_dimension {
  concalc::DimensionReport value;
};

struct concalc_marked_dynkin {
  concalc::MarkedDynkin value;
  std::string type_name;
  std::vector<concalc::DiscriminantComponent> components;
};

struct concalc_gv_list {
  std::vector<concalc::GVProfile> value;
  std::size_t length = 0;
};

struct concalc_path_result {
  concalc::PathProfile value;
};

struct concalc_verification {
  concalc::EntryVerification value;
  concalc_dimension wid;
  concalc_dimension cwid;
  concalc_gv_list gv;
};

namespace {

using concalc::ErrorKind;

thread_local std::string last_error;

concalc_status to_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return CONCALC_INPUT_ERROR;
    case ErrorKind::Indeterminate: return CONCALC_INDETERMINATE;
    case ErrorKind::Inconsistent: return CONCALC_INCONSISTENT;
    case ErrorKind::Internal: return CONCALC_INTERNAL_ERROR;
  }
  return CONCALC_INTERNAL_ERROR;
}

concalc_status set_error(concalc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
concalc_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return CONCALC_OK;
  } catch (const concalc::Error& e) {
    return set_error(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CONCALC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CONCALC_INTERNAL_ERROR, e.what());
  }
}

#define CONCALC_REQUIRE(cond, what)                                        \
  do {                                                                      \
    if (!(cond)) return set_error(CONCALC_INPUT_ERROR, what);               \
  } while (0)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

concalc::CompletionConfig config_from(const concalc_completion_config* cfg) {
  concalc::CompletionConfig out;
  if (cfg) {
    out.max_degree = cfg->max_degree;
    out.max_rules = cfg->max_rules;
  }
  return out;
}

std::vector<std::string> split_coords(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = text.find(';', start);
    out.push_back(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* concalc_last_error(void) { return last_error.c_str(); }

const char* concalc_version(void) { return "0.1.0"; }

void concalc_string_free(char* s) { std::free(s); }

concalc_status concalc_presentation_parse(const char* text, concalc_presentation** out) {
  CONCALC_REQUIRE(text && out, "null argument");
  return guarded([&] { *out = new concalc_presentation{concalc::parse_presentation(text)}; });
}

concalc_status concalc_presentation_from_catalog(const char* key, concalc_presentation** out) {
  CONCALC_REQUIRE(key && out, "null argument");
  return guarded([&] {
    const concalc::CatalogEntry* e = concalc::find_catalog_entry(key);
    if (!e) concalc::fail(ErrorKind::Input, std::string("no catalogue entry '") + key + "'");
    *out = new concalc_presentation{e->presentation};
  });
}

concalc_status concalc_presentation_abelianize(const concalc_presentation* p,
                                               concalc_presentation** out) {
  CONCALC_REQUIRE(p && out, "null argument");
  return guarded([&] { *out = new concalc_presentation{concalc::abelianize(p->value)}; });
}

concalc_status concalc_presentation_reorder(const concalc_presentation* p,
                                            const uint32_t* precedence, size_t n,
                                            concalc_presentation** out) {
  CONCALC_REQUIRE(p && out && (precedence || n == 0), "null argument");
  return guarded([&] {
    std::vector<concalc::Letter> perm(precedence, precedence + n);
    *out = new concalc_presentation{concalc::reorder_generators(p->value, perm)};
  });
}

concalc_status concalc_presentation_print(const concalc_presentation* p, char** out) {
  CONCALC_REQUIRE(p && out, "null argument");
  return guarded([&] { *out = copy_string(concalc::print_presentation(p->value)); });
}

const char* concalc_presentation_name(const concalc_presentation* p) {
  return p ? p->value.name.c_str() : "";
}

size_t concalc_presentation_generator_count(const concalc_presentation* p) {
  return p ? p->value.generators.size() : 0;
}

const char* concalc_presentation_generator(const concalc_presentation* p, size_t i) {
  if (!p || i >= p->value.generators.size()) return nullptr;
  return p->value.generators[i].c_str();
}

size_t concalc_presentation_relation_count(const concalc_presentation* p) {
  return p ? p->value.relations.size() : 0;
}

concalc_status concalc_presentation_relation(const concalc_presentation* p, size_t i,
                                             char** out) {
  CONCALC_REQUIRE(p && out, "null argument");
  CONCALC_REQUIRE(i < p->value.relations.size(), "relation index out of range");
  return guarded([&] {
    *out = copy_string(concalc::print_polynomial(p->value.relations[i], p->value.generators));
  });
}

size_t concalc_presentation_max_relation_degree(const concalc_presentation* p) {
  return p ? p->value.max_relation_degree() : 0;
}

void concalc_presentation_free(concalc_presentation* p) { delete p; }

void concalc_completion_config_default(concalc_completion_config* cfg) {
  if (!cfg) return;
  concalc::CompletionConfig d;
  cfg->max_degree = d.max_degree;
  cfg->max_rules = d.max_rules;
}

concalc_status concalc_dimension_compute(const concalc_presentation* p,
                                         const concalc_completion_config* cfg,
                                         concalc_dimension** out) {
  CONCALC_REQUIRE(p && out, "null argument");
  return guarded([&] {
    *out = new concalc_dimension{concalc::dimension(p->value, config_from(cfg))};
  });
}

int concalc_dimension_is_finite(const concalc_dimension* d) { return d && d->value.finite(); }

int concalc_dimension_is_truncated(const concalc_dimension* d) {
  return d && d->value.truncated;
}

uint64_t concalc_dimension_total(const concalc_dimension* d) { return d ? d->value.total : 0; }

size_t concalc_dimension_cutoff(const concalc_dimension* d) {
  return d ? d->value.cutoff_degree : 0;
}

size_t concalc_dimension_rule_count(const concalc_dimension* d) {
  return d ? d->value.rule_count : 0;
}

size_t concalc_dimension_degree_count(const concalc_dimension* d) {
  return d ? d->value.counts.size() : 0;
}

uint64_t concalc_dimension_count(const concalc_dimension* d, size_t degree) {
  if (!d || degree >= d->value.counts.size()) return 0;
  return d->value.counts[degree];
}

void concalc_dimension_free(concalc_dimension* d) { delete d; }

concalc_status concalc_oracle_dimension(const concalc_presentation* p, size_t cutoff,
                                        uint64_t* counts, size_t capacity, size_t* written) {
  CONCALC_REQUIRE(p && counts && written, "null argument");
  CONCALC_REQUIRE(capacity > cutoff, "count buffer is smaller than cutoff + 1");
  return guarded([&] {
    std::vector<std::uint64_t> c = concalc::oracle_dimension(p->value, cutoff);
    std::copy(c.begin(), c.end(), counts);
    *written = c.size();
  });
}

concalc_status concalc_is_commutative(const concalc_presentation* p,
                                      const concalc_completion_config* cfg, int* out) {
  CONCALC_REQUIRE(p && out, "null argument");
  return guarded([&] { *out = concalc::is_commutative_quotient(p->value, config_from(cfg)); });
}

concalc_status concalc_normal_form(const concalc_presentation* p,
                                   const concalc_completion_config* cfg,
                                   const char* polynomial, char** out) {
  CONCALC_REQUIRE(p && polynomial && out, "null argument");
  return guarded([&] {
    concalc::NCPoly f = concalc::parse_polynomial(polynomial, p->value.generators);
    concalc::GroebnerBasis basis = concalc::complete(p->value, config_from(cfg));
    if (basis.truncated())
      concalc::fail(ErrorKind::Indeterminate, "basis is truncated; normal form is not canonical");
    *out = copy_string(
        concalc::print_polynomial(concalc::normal_form(f, basis), p->value.generators));
  });
}

concalc_status concalc_marked_dynkin_parse(const char* type, const char* mark,
                                           concalc_marked_dynkin** out) {
  CONCALC_REQUIRE(type && mark && out, "null argument");
  return guarded([&] {
    concalc::MarkedDynkin m = concalc::MarkedDynkin::parse(type, mark);
    *out = new concalc_marked_dynkin{m, m.type.name(), concalc::discriminant_components(m)};
  });
}

const char* concalc_marked_dynkin_type(const concalc_marked_dynkin* m) {
  return m ? m->type_name.c_str() : "";
}

size_t concalc_marked_dynkin_rank(const concalc_marked_dynkin* m) {
  return m ? m->value.type.rank : 0;
}

size_t concalc_marked_dynkin_mark(const concalc_marked_dynkin* m) {
  return m ? m->value.mark : 0;
}

int concalc_marked_dynkin_realizable(const concalc_marked_dynkin* m) {
  return m && m->value.realizable;
}

size_t concalc_positive_root_count(const concalc_marked_dynkin* m) {
  return m ? concalc::positive_roots(m->value.type).size() : 0;
}

size_t concalc_length_invariant(const concalc_marked_dynkin* m) {
  return m ? concalc::length_invariant(m->value) : 0;
}

size_t concalc_component_count(const concalc_marked_dynkin* m) {
  return m ? m->components.size() : 0;
}

concalc_status concalc_component_info(const concalc_marked_dynkin* m, size_t component,
                                      size_t* curve_class, size_t* orbit_size) {
  CONCALC_REQUIRE(m && curve_class && orbit_size, "null argument");
  CONCALC_REQUIRE(component < m->components.size(), "component index out of range");
  *curve_class = m->components[component].curve_class;
  *orbit_size = m->components[component].orbit.size();
  return CONCALC_OK;
}

concalc_status concalc_component_root(const concalc_marked_dynkin* m, size_t component,
                                      size_t member, int* coeffs, size_t capacity) {
  CONCALC_REQUIRE(m && coeffs, "null argument");
  CONCALC_REQUIRE(component < m->components.size(), "component index out of range");
  const auto& orbit = m->components[component].orbit;
  CONCALC_REQUIRE(member < orbit.size(), "orbit member index out of range");
  CONCALC_REQUIRE(capacity >= m->value.type.rank, "coefficient buffer is smaller than the rank");
  std::copy(orbit[member].coeffs.begin(), orbit[member].coeffs.end(), coeffs);
  return CONCALC_OK;
}

void concalc_marked_dynkin_free(concalc_marked_dynkin* m) { delete m; }

concalc_status concalc_cartan_matrix(const char* type, int* out, size_t capacity,
                                     size_t* rank) {
  CONCALC_REQUIRE(type && out && rank, "null argument");
  return guarded([&] {
    concalc::DynkinType t = concalc::DynkinType::parse(type);
    if (capacity < t.rank * t.rank)
      concalc::fail(ErrorKind::Input, "matrix buffer is smaller than rank^2");
    concalc::CartanMatrix c = concalc::cartan_matrix(t);
    for (std::size_t i = 0; i < t.rank; ++i)
      for (std::size_t j = 0; j < t.rank; ++j) out[i * t.rank + j] = c[i][j];
    *rank = t.rank;
  });
}

concalc_status concalc_realizable_marks(const char* type, size_t* marks, size_t capacity,
                                        size_t* written) {
  CONCALC_REQUIRE(type && written && (marks || capacity == 0), "null argument");
  return guarded([&] {
    auto found = concalc::realizable_marks(concalc::DynkinType::parse(type));
    if (found.size() > capacity) concalc::fail(ErrorKind::Input, "mark buffer is too small");
    for (std::size_t i = 0; i < found.size(); ++i) marks[i] = found[i].mark;
    *written = found.size();
  });
}

concalc_status concalc_widths_from_gv(const uint64_t* n, size_t length, uint64_t* wid,
                                      uint64_t* cwid) {
  CONCALC_REQUIRE((n || length == 0) && wid && cwid, "null argument");
  return guarded([&] {
    concalc::WidthPair w = concalc::widths_from_gv({std::vector<std::uint64_t>(n, n + length)});
    *wid = w.wid;
    *cwid = w.cwid;
  });
}

concalc_status concalc_gv_from_widths(uint64_t wid, uint64_t cwid, size_t length,
                                      concalc_gv_list** out) {
  CONCALC_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new concalc_gv_list{concalc::gv_from_widths({wid, cwid}, length), length};
  });
}

size_t concalc_gv_list_size(const concalc_gv_list* l) { return l ? l->value.size() : 0; }

size_t concalc_gv_list_length(const concalc_gv_list* l) { return l ? l->length : 0; }

uint64_t concalc_gv_list_entry(const concalc_gv_list* l, size_t profile, size_t j) {
  if (!l || profile >= l->value.size() || j == 0 || j > l->value[profile].n.size()) return 0;
  return l->value[profile].n[j - 1];
}

void concalc_gv_list_free(concalc_gv_list* l) { delete l; }

concalc_status concalc_width_bound_check(const concalc_marked_dynkin* m, uint64_t wid, int* ok,
                                         uint64_t* bound) {
  CONCALC_REQUIRE(m && ok && bound, "null argument");
  return guarded([&] {
    concalc::BoundCheck b = concalc::width_bound_check(m->value.type, m->value.mark, wid);
    *ok = b.ok;
    *bound = b.bound.value_or(0);
  });
}

concalc_status concalc_path_gv(const concalc_marked_dynkin* m, const char* coords,
                               concalc_path_mode mode, concalc_path_result** out) {
  CONCALC_REQUIRE(m && coords && out, "null argument");
  CONCALC_REQUIRE(mode == CONCALC_PATH_AT_ORIGIN || mode == CONCALC_PATH_TOTAL,
                  "unknown path mode");
  return guarded([&] {
    concalc::PolyPath path;
    const std::vector<std::string> vars{"t"};
    for (const std::string& piece : split_coords(coords))
      path.coords.push_back(
          concalc::UniPoly::from_ncpoly(concalc::parse_polynomial(piece, vars)));
    auto pm = mode == CONCALC_PATH_TOTAL ? concalc::PathMode::Total : concalc::PathMode::AtOrigin;
    *out = new concalc_path_result{concalc::path_gv(m->value, path, pm)};
  });
}

size_t concalc_path_result_length(const concalc_path_result* r) {
  return r ? r->value.profile.length() : 0;
}

uint64_t concalc_path_result_entry(const concalc_path_result* r, size_t j) {
  if (!r || j == 0 || j > r->value.profile.n.size()) return 0;
  return r->value.profile.n[j - 1];
}

uint64_t concalc_path_result_singular_incidence(const concalc_path_result* r) {
  return r ? r->value.singular_incidence : 0;
}

size_t concalc_path_result_singular_identically_zero(const concalc_path_result* r) {
  return r ? r->value.singular_identically_zero : 0;
}

void concalc_path_result_free(concalc_path_result* r) { delete r; }

size_t concalc_catalog_size(void) { return concalc::catalog().size(); }

concalc_status concalc_catalog_entry(size_t i, concalc_catalog_info* info) {
  CONCALC_REQUIRE(info, "null argument");
  return guarded([&] {
    const auto& entries = concalc::catalog();
    if (i >= entries.size()) concalc::fail(ErrorKind::Input, "catalogue index out of range");
    // Type names live as long as the catalogue.
    static const std::vector<std::string> type_names = [&] {
      std::vector<std::string> names;
      for (const auto& e : entries) names.push_back(e.dynkin ? e.dynkin->type.name() : "");
      return names;
    }();
    const concalc::CatalogEntry& e = entries[i];
    info->key = e.key.c_str();
    info->name = e.presentation.name.c_str();
    info->has_wid = e.expected_wid.has_value();
    info->wid = e.expected_wid.value_or(0);
    info->has_cwid = e.expected_cwid.has_value();
    info->cwid = e.expected_cwid.value_or(0);
    info->dynkin_type = e.dynkin ? type_names[i].c_str() : nullptr;
    info->mark = e.dynkin ? e.dynkin->mark : 0;
    info->gv_length = e.expected_gv ? e.expected_gv->n.size() : 0;
    info->gv = e.expected_gv ? e.expected_gv->n.data() : nullptr;
  });
}

concalc_status concalc_catalog_verify(size_t i, const concalc_completion_config* cfg,
                                      concalc_verification** out) {
  CONCALC_REQUIRE(out, "null argument");
  return guarded([&] {
    const auto& entries = concalc::catalog();
    if (i >= entries.size()) concalc::fail(ErrorKind::Input, "catalogue index out of range");
    concalc::EntryVerification v = concalc::verify_entry(entries[i], config_from(cfg));
    auto* handle = new concalc_verification{v, {v.wid}, {v.cwid}, {v.gv, v.length.value_or(0)}};
    *out = handle;
  });
}

int concalc_verification_passed(const concalc_verification* v) { return v && v->value.passed(); }

const concalc_dimension* concalc_verification_wid(const concalc_verification* v) {
  return v ? &v->wid : nullptr;
}

const concalc_dimension* concalc_verification_cwid(const concalc_verification* v) {
  return v ? &v->cwid : nullptr;
}

int concalc_verification_commutative(const concalc_verification* v) {
  if (!v || !v->value.commutative) return -1;
  return *v->value.commutative ? 1 : 0;
}

size_t concalc_verification_length(const concalc_verification* v) {
  return v ? v->value.length.value_or(0) : 0;
}

const concalc_gv_list* concalc_verification_gv(const concalc_verification* v) {
  return v ? &v->gv : nullptr;
}

int concalc_verification_bound_ok(const concalc_verification* v) {
  return v && (!v->value.bound || v->value.bound->ok);
}

size_t concalc_verification_mismatch_count(const concalc_verification* v) {
  return v ? v->value.mismatches.size() : 0;
}

const char* concalc_verification_mismatch(const concalc_verification* v, size_t i) {
  if (!v || i >= v->value.mismatches.size()) return nullptr;
  return v->value.mismatches[i].c_str();
}

void concalc_verification_free(concalc_verification* v) { delete v; }

}  // extern "C"
