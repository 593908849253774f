// concalc command-line tool. Talks to the engine only through the C API.

#include <concalc/concalc.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using PresentationPtr =
    std::unique_ptr<concalc_presentation, Deleter<concalc_presentation, concalc_presentation_free>>;
using DimensionPtr =
    std::unique_ptr<concalc_dimension, Deleter<concalc_dimension, concalc_dimension_free>>;
using DynkinPtr = std::unique_ptr<concalc_marked_dynkin,
                                  Deleter<concalc_marked_dynkin, concalc_marked_dynkin_free>>;
using GVListPtr = std::unique_ptr<concalc_gv_list, Deleter<concalc_gv_list, concalc_gv_list_free>>;
using PathPtr =
    std::unique_ptr<concalc_path_result, Deleter<concalc_path_result, concalc_path_result_free>>;
using VerificationPtr = std::unique_ptr<concalc_verification,
                                        Deleter<concalc_verification, concalc_verification_free>>;

// Thrown to abandon a command with a status; the report keeps whatever
// results were filled in so far.
struct Abort {
  int code;
  std::string message;
};

void check(concalc_status s) {
  if (s != CONCALC_OK) throw Abort{static_cast<int>(s), concalc_last_error()};
}

std::string take_string(char* s) {
  std::string out(s);
  concalc_string_free(s);
  return out;
}

struct Report {
  json doc;

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["inputs"] = json::object();
    doc["results"] = json::object();
    doc["warnings"] = json::array();
  }
  json& inputs() { return doc["inputs"]; }
  json& results() { return doc["results"]; }
  void warn(const std::string& w) { doc["warnings"].push_back(w); }

  void finish(int code, const std::string& message) {
    json status;
    status["state"] = code == 0 ? "ok" : "error";
    status["exit_code"] = code;
    if (code != 0) status["message"] = message;
    doc["status"] = status;
  }
};

void print_flat(std::ostream& os, const std::string& prefix, const json& j) {
  if (j.is_object()) {
    if (j.empty()) return;
    for (const auto& [k, v] : j.items()) print_flat(os, prefix.empty() ? k : prefix + "." + k, v);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) {
               return e.is_object() || e.is_array();
             })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      print_flat(os, prefix + "[" + std::to_string(i) + "]", j[i]);
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

struct Common {
  bool json_output = false;
};

int emit(Report& r, const Common& c, int code, const std::string& message) {
  r.finish(code, message);
  if (c.json_output) {
    std::cout << r.doc.dump(2) << "\n";
  } else {
    print_flat(std::cout, "", r.doc);
  }
  if (code != 0 && !message.empty()) std::cerr << "concalc: " << message << "\n";
  return code;
}

template <typename Body>
int run(const std::string& command, const Common& c, Body&& body) {
  Report r(command);
  try {
    int code = body(r);
    std::string message = code == CONCALC_MISMATCH ? "verification mismatch" : "";
    return emit(r, c, code, message);
  } catch (const Abort& a) {
    return emit(r, c, a.code, a.message);
  } catch (const std::exception& e) {
    return emit(r, c, CONCALC_INTERNAL_ERROR, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Abort{CONCALC_INPUT_ERROR, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PresentationPtr load_presentation(const std::string& path) {
  concalc_presentation* p = nullptr;
  concalc_status s = concalc_presentation_parse(read_file(path).c_str(), &p);
  if (s != CONCALC_OK) throw Abort{static_cast<int>(s), path + ": " + concalc_last_error()};
  return PresentationPtr(p);
}

json presentation_json(const concalc_presentation* p) {
  json out;
  out["name"] = concalc_presentation_name(p);
  out["generators"] = json::array();
  for (std::size_t i = 0; i < concalc_presentation_generator_count(p); ++i)
    out["generators"].push_back(concalc_presentation_generator(p, i));
  out["relations"] = json::array();
  for (std::size_t i = 0; i < concalc_presentation_relation_count(p); ++i) {
    char* s = nullptr;
    check(concalc_presentation_relation(p, i, &s));
    out["relations"].push_back(take_string(s));
  }
  return out;
}

json dimension_json(const concalc_dimension* d) {
  json out;
  const bool finite = concalc_dimension_is_finite(d);
  out["verdict"] = finite ? "finite" : "lower_bound_at_cutoff";
  out["dimension"] = finite ? json(concalc_dimension_total(d)) : json(nullptr);
  out["lower_bound"] = concalc_dimension_total(d);
  out["counts"] = json::array();
  for (std::size_t k = 0; k < concalc_dimension_degree_count(d); ++k)
    out["counts"].push_back(concalc_dimension_count(d, k));
  out["cutoff_degree"] = concalc_dimension_cutoff(d);
  out["truncated"] = static_cast<bool>(concalc_dimension_is_truncated(d));
  out["rules"] = concalc_dimension_rule_count(d);
  return out;
}

// --max-degree beats CONCALC_MAX_DEGREE beats the library default.
concalc_completion_config completion_config(std::optional<std::size_t> max_degree, Report& r) {
  concalc_completion_config cfg;
  concalc_completion_config_default(&cfg);
  if (max_degree) {
    cfg.max_degree = *max_degree;
  } else if (const char* env = std::getenv("CONCALC_MAX_DEGREE")) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || value == 0)
      throw Abort{CONCALC_INPUT_ERROR,
                  std::string("CONCALC_MAX_DEGREE must be a positive integer, got '") + env + "'"};
    cfg.max_degree = value;
  }
  r.inputs()["max_degree"] = cfg.max_degree;
  return cfg;
}

DynkinPtr load_dynkin(const std::string& type, const std::string& mark, Report& r) {
  concalc_marked_dynkin* m = nullptr;
  check(concalc_marked_dynkin_parse(type.c_str(), mark.c_str(), &m));
  DynkinPtr out(m);
  if (!concalc_marked_dynkin_realizable(m))
    r.warn("marked diagram " + std::string(concalc_marked_dynkin_type(m)) + " vertex " +
           std::to_string(concalc_marked_dynkin_mark(m)) +
           " does not occur for flopping curves");
  return out;
}

void bound_check(const concalc_marked_dynkin* m, std::uint64_t wid, Report& r) {
  int ok = 0;
  std::uint64_t bound = 0;
  check(concalc_width_bound_check(m, wid, &ok, &bound));
  json b;
  b["bound"] = bound ? json(bound) : json(nullptr);
  b["ok"] = static_cast<bool>(ok);
  r.results()["width_bound"] = b;
  if (!ok)
    r.warn("width " + std::to_string(wid) + " is below the lower bound " + std::to_string(bound) +
           " for " + concalc_marked_dynkin_type(m));
}

json gv_list_json(const concalc_gv_list* l) {
  json out = json::array();
  for (std::size_t i = 0; i < concalc_gv_list_size(l); ++i) {
    json profile = json::array();
    for (std::size_t j = 1; j <= concalc_gv_list_length(l); ++j)
      profile.push_back(concalc_gv_list_entry(l, i, j));
    out.push_back(profile);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct DimArgs {
  std::string file;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> oracle;
  bool abelianize = false;
};

int cmd_dim(const DimArgs& a, const Common& c) {
  return run("dim", c, [&](Report& r) {
    r.inputs()["file"] = a.file;
    r.inputs()["abelianize"] = a.abelianize;
    r.inputs()["oracle"] = a.oracle ? json(*a.oracle) : json(nullptr);
    concalc_completion_config cfg = completion_config(a.max_degree, r);
    PresentationPtr p = load_presentation(a.file);
    if (a.abelianize) {
      concalc_presentation* ab = nullptr;
      check(concalc_presentation_abelianize(p.get(), &ab));
      p.reset(ab);
    }
    r.inputs()["presentation"] = presentation_json(p.get());

    concalc_dimension* raw = nullptr;
    check(concalc_dimension_compute(p.get(), &cfg, &raw));
    DimensionPtr d(raw);
    r.results() = dimension_json(d.get());
    const bool finite = concalc_dimension_is_finite(d.get());
    if (concalc_dimension_is_truncated(d.get()))
      r.warn("rewriting system truncated at degree " +
             std::to_string(concalc_dimension_cutoff(d.get())) + "; counts are lower bounds");

    int code = CONCALC_OK;
    if (a.oracle) {
      std::vector<std::uint64_t> counts(*a.oracle + 1);
      std::size_t written = 0;
      check(concalc_oracle_dimension(p.get(), *a.oracle, counts.data(), counts.size(), &written));
      counts.resize(written);
      // Only degrees the oracle has stabilized on are comparable.
      std::size_t compared = std::min(counts.size(), concalc_dimension_degree_count(d.get()));
      bool agrees = true;
      for (std::size_t k = 0; k < compared; ++k)
        agrees = agrees && counts[k] == concalc_dimension_count(d.get(), k);
      json o;
      o["cutoff"] = *a.oracle;
      o["counts"] = counts;
      o["compared_degrees"] = compared;
      o["agrees"] = agrees;
      r.results()["oracle"] = o;
      if (!agrees) {
        r.warn("oracle counts differ from the rewriting engine; the oracle cutoff may be too low");
        code = CONCALC_MISMATCH;
      }
    }
    if (!finite)
      throw Abort{CONCALC_INDETERMINATE,
                  "no finite dimension below degree " +
                      std::to_string(concalc_dimension_cutoff(d.get()))};
    return code;
  });
}

struct GVArgs {
  std::optional<std::uint64_t> wid, cwid;
  std::optional<std::size_t> length;
  std::string file, type, mark;
  std::optional<std::size_t> max_degree;
};

int cmd_gv(const GVArgs& a, const Common& c) {
  return run("gv", c, [&](Report& r) {
    const bool numbers = a.wid || a.cwid;
    DynkinPtr m;
    if (!a.type.empty() || !a.mark.empty()) {
      if (a.type.empty() || a.mark.empty())
        throw Abort{CONCALC_INPUT_ERROR, "--type and --mark must be given together"};
      r.inputs()["type"] = a.type;
      r.inputs()["mark"] = a.mark;
      m = load_dynkin(a.type, a.mark, r);
    }

    std::uint64_t wid = 0, cwid = 0;
    if (numbers) {
      if (!a.wid || !a.cwid) throw Abort{CONCALC_INPUT_ERROR, "--wid and --cwid go together"};
      if (!a.file.empty()) throw Abort{CONCALC_INPUT_ERROR, "--file conflicts with --wid/--cwid"};
      wid = *a.wid;
      cwid = *a.cwid;
      r.inputs()["wid"] = wid;
      r.inputs()["cwid"] = cwid;
    } else {
      if (a.file.empty() || !m)
        throw Abort{CONCALC_INPUT_ERROR,
                    "give either --wid, --cwid and --length or --file, --type and --mark"};
      r.inputs()["file"] = a.file;
      concalc_completion_config cfg = completion_config(a.max_degree, r);
      PresentationPtr p = load_presentation(a.file);
      r.inputs()["presentation"] = presentation_json(p.get());
      concalc_presentation* ab_raw = nullptr;
      check(concalc_presentation_abelianize(p.get(), &ab_raw));
      PresentationPtr ab(ab_raw);
      concalc_dimension* raw = nullptr;
      check(concalc_dimension_compute(p.get(), &cfg, &raw));
      DimensionPtr dw(raw);
      check(concalc_dimension_compute(ab.get(), &cfg, &raw));
      DimensionPtr dc(raw);
      r.results()["wid"] = dimension_json(dw.get());
      r.results()["cwid"] = dimension_json(dc.get());
      if (!concalc_dimension_is_finite(dw.get()) || !concalc_dimension_is_finite(dc.get()))
        throw Abort{CONCALC_INDETERMINATE, "widths are not finite below the cutoff"};
      wid = concalc_dimension_total(dw.get());
      cwid = concalc_dimension_total(dc.get());
    }

    std::size_t length = 0;
    if (a.length) {
      length = *a.length;
    } else if (m) {
      length = concalc_length_invariant(m.get());
    } else {
      throw Abort{CONCALC_INPUT_ERROR, "--length (or --type/--mark) is required"};
    }
    r.inputs()["length"] = a.length ? json(*a.length) : json(nullptr);
    r.results()["length"] = length;
    if (m) bound_check(m.get(), wid, r);

    concalc_gv_list* l = nullptr;
    check(concalc_gv_from_widths(wid, cwid, length, &l));
    GVListPtr list(l);
    r.results()["profiles"] = gv_list_json(list.get());
    if (concalc_gv_list_size(l) > 1)
      r.warn(std::to_string(concalc_gv_list_size(l)) + " GV profiles fit these widths");
    return CONCALC_OK;
  });
}

struct RootsArgs {
  std::string type, mark;
};

int cmd_roots(const RootsArgs& a, const Common& c) {
  return run("roots", c, [&](Report& r) {
    r.inputs()["type"] = a.type;
    r.inputs()["mark"] = a.mark;
    DynkinPtr m = load_dynkin(a.type, a.mark, r);
    const std::size_t rank = concalc_marked_dynkin_rank(m.get());
    json& res = r.results();
    res["type"] = concalc_marked_dynkin_type(m.get());
    res["rank"] = rank;
    res["mark"] = concalc_marked_dynkin_mark(m.get());
    res["realizable"] = static_cast<bool>(concalc_marked_dynkin_realizable(m.get()));
    res["positive_roots"] = concalc_positive_root_count(m.get());
    res["length"] = concalc_length_invariant(m.get());

    json classes = json::array();
    json components = json::array();
    std::vector<int> coeffs(rank);
    for (std::size_t i = 0; i < concalc_component_count(m.get()); ++i) {
      std::size_t cls = 0, size = 0;
      check(concalc_component_info(m.get(), i, &cls, &size));
      check(concalc_component_root(m.get(), i, 0, coeffs.data(), coeffs.size()));
      json comp;
      comp["curve_class"] = cls;
      comp["roots"] = size;
      comp["representative"] = coeffs;
      components.push_back(comp);
      if (classes.empty() || classes.back()["curve_class"] != cls) {
        json entry;
        entry["curve_class"] = cls;
        entry["components"] = 0;
        classes.push_back(entry);
      }
      classes.back()["components"] = classes.back()["components"].get<std::size_t>() + 1;
    }
    res["classes"] = classes;
    res["components"] = components;
    return CONCALC_OK;
  });
}

struct PathArgs {
  std::string type, mark, coords, mode;
};

int cmd_path(const PathArgs& a, const Common& c) {
  return run("path", c, [&](Report& r) {
    r.inputs()["type"] = a.type;
    r.inputs()["mark"] = a.mark;
    r.inputs()["coords"] = a.coords;
    r.inputs()["mode"] = a.mode;
    concalc_path_mode mode;
    if (a.mode == "at-origin") {
      mode = CONCALC_PATH_AT_ORIGIN;
    } else if (a.mode == "total") {
      mode = CONCALC_PATH_TOTAL;
    } else {
      throw Abort{CONCALC_INPUT_ERROR, "--mode must be at-origin or total"};
    }
    DynkinPtr m = load_dynkin(a.type, a.mark, r);
    concalc_path_result* raw = nullptr;
    check(concalc_path_gv(m.get(), a.coords.c_str(), mode, &raw));
    PathPtr res(raw);
    json profile = json::array();
    for (std::size_t j = 1; j <= concalc_path_result_length(raw); ++j)
      profile.push_back(concalc_path_result_entry(raw, j));
    r.results()["profile"] = profile;
    r.results()["singular_incidence"] = concalc_path_result_singular_incidence(raw);
    r.results()["singular_identically_zero"] = concalc_path_result_singular_identically_zero(raw);
    return CONCALC_OK;
  });
}

struct CatalogArgs {
  bool verify = false;
  std::optional<std::size_t> max_degree;
  unsigned jobs = 0;
};

json verification_json(const concalc_verification* v) {
  json out;
  out["passed"] = static_cast<bool>(concalc_verification_passed(v));
  out["wid"] = dimension_json(concalc_verification_wid(v));
  out["cwid"] = dimension_json(concalc_verification_cwid(v));
  int comm = concalc_verification_commutative(v);
  out["commutative"] = comm < 0 ? json(nullptr) : json(comm == 1);
  out["length"] = concalc_verification_length(v);
  out["gv"] = gv_list_json(concalc_verification_gv(v));
  out["bound_ok"] = static_cast<bool>(concalc_verification_bound_ok(v));
  out["mismatches"] = json::array();
  for (std::size_t i = 0; i < concalc_verification_mismatch_count(v); ++i)
    out["mismatches"].push_back(concalc_verification_mismatch(v, i));
  return out;
}

int cmd_catalog(const CatalogArgs& a, const Common& c) {
  return run("catalog", c, [&](Report& r) {
    r.inputs()["verify"] = a.verify;
    concalc_completion_config cfg = completion_config(a.max_degree, r);
    const std::size_t n = concalc_catalog_size();
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      concalc_catalog_info info;
      check(concalc_catalog_entry(i, &info));
      json e;
      e["key"] = info.key;
      e["name"] = info.name;
      e["expected_wid"] = info.has_wid ? json(info.wid) : json(nullptr);
      e["expected_cwid"] = info.has_cwid ? json(info.cwid) : json(nullptr);
      e["type"] = info.dynkin_type ? json(info.dynkin_type) : json(nullptr);
      e["mark"] = info.dynkin_type ? json(info.mark) : json(nullptr);
      e["expected_gv"] = info.gv_length ? json(std::vector<std::uint64_t>(
                                              info.gv, info.gv + info.gv_length))
                                        : json(nullptr);
      entries.push_back(e);
    }

    int code = CONCALC_OK;
    if (a.verify) {
      struct Slot {
        concalc_status status = CONCALC_OK;
        std::string error;
        json result;
      };
      std::vector<Slot> slots(n);
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
          concalc_verification* v = nullptr;
          slots[i].status = concalc_catalog_verify(i, &cfg, &v);
          if (slots[i].status != CONCALC_OK) {
            slots[i].error = concalc_last_error();
            continue;
          }
          VerificationPtr owned(v);
          slots[i].result = verification_json(v);
        }
      };
      unsigned jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
      jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();

      std::size_t passed = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (slots[i].status != CONCALC_OK) {
          json err;
          err["passed"] = false;
          err["error"] = slots[i].error;
          entries[i]["verification"] = err;
          r.warn(entries[i]["key"].get<std::string>() + ": " + slots[i].error);
          code = std::max(code, static_cast<int>(slots[i].status));
          continue;
        }
        entries[i]["verification"] = slots[i].result;
        if (slots[i].result["passed"].get<bool>()) {
          ++passed;
        } else {
          for (const auto& msg : slots[i].result["mismatches"])
            r.warn(entries[i]["key"].get<std::string>() + ": " + msg.get<std::string>());
          if (code == CONCALC_OK) code = CONCALC_MISMATCH;
        }
      }
      r.results()["passed"] = passed;
    }
    r.results()["count"] = n;
    r.results()["entries"] = entries;
    return code;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of contraction algebras and flopping curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(concalc_version()));

  Common common;
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json_output, "Print one JSON document");
  };

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of a presented algebra");
  dim_cmd->add_option("file", dim.file, "Presentation file")->required();
  dim_cmd->add_option("--max-degree", dim.max_degree, "Completion cutoff degree")
      ->check(CLI::PositiveNumber);
  dim_cmd->add_option("--oracle", dim.oracle, "Cross-check with brute force up to this degree");
  dim_cmd->add_flag("--abelianize", dim.abelianize, "Use the abelianization");
  add_json(dim_cmd);

  GVArgs gv;
  auto* gv_cmd = app.add_subcommand("gv", "Gopakumar-Vafa invariants from widths");
  gv_cmd->add_option("--wid", gv.wid, "Noncommutative width");
  gv_cmd->add_option("--cwid", gv.cwid, "Commutative width");
  gv_cmd->add_option("--length", gv.length, "Length of the curve");
  gv_cmd->add_option("--file", gv.file, "Presentation of the contraction algebra");
  gv_cmd->add_option("--type", gv.type, "Dynkin type, e.g. D4");
  gv_cmd->add_option("--mark", gv.mark, "Marked vertex or 'center'");
  gv_cmd->add_option("--max-degree", gv.max_degree, "Completion cutoff degree")
      ->check(CLI::PositiveNumber);
  add_json(gv_cmd);

  RootsArgs roots;
  auto* roots_cmd = app.add_subcommand("roots", "Roots and discriminant of a marked diagram");
  roots_cmd->add_option("--type", roots.type, "Dynkin type, e.g. E8")->required();
  roots_cmd->add_option("--mark", roots.mark, "Marked vertex or 'center'")->required();
  add_json(roots_cmd);

  PathArgs path;
  path.mode = "at-origin";
  auto* path_cmd = app.add_subcommand("path", "GV invariants of a one-parameter path");
  path_cmd->add_option("--type", path.type, "Dynkin type")->required();
  path_cmd->add_option("--mark", path.mark, "Marked vertex or 'center'")->required();
  path_cmd->add_option("--coords", path.coords, "Polynomials in t, separated by ';'")
      ->required();
  path_cmd->add_option("--mode", path.mode, "at-origin or total")->required();
  add_json(path_cmd);

  CatalogArgs cat;
  auto* cat_cmd = app.add_subcommand("catalog", "List or verify the built-in examples");
  cat_cmd->add_flag("--verify", cat.verify, "Recompute every entry");
  cat_cmd->add_option("--max-degree", cat.max_degree, "Completion cutoff degree")
      ->check(CLI::PositiveNumber);
  cat_cmd->add_option("--jobs", cat.jobs, "Parallel verifications (default: all cores)");
  add_json(cat_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CONCALC_INPUT_ERROR;
  }

  if (*dim_cmd) return cmd_dim(dim, common);
  if (*gv_cmd) return cmd_gv(gv, common);
  if (*roots_cmd) return cmd_roots(roots, common);
  if (*path_cmd) return cmd_path(path, common);
  return cmd_catalog(cat, common);
}
