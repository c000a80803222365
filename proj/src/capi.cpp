#include "tieknot/tieknot.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "tieknot/catalog.hpp"
#include "tieknot/enumeration.hpp"
#include "tieknot/error.hpp"
#include "tieknot/genfunc.hpp"
#include "tieknot/grammar.hpp"
#include "tieknot/notation.hpp"
#include "tieknot/validity.hpp"

struct tk_knot {
  tieknot::KnotWord word;
};

struct tk_report {
  tieknot::ValidityReport report;
  std::vector<std::string> axioms;  // owned storage for tk_report_violation
};

struct tk_series {
  tieknot::Series series;
};

namespace {

using namespace tieknot;

thread_local std::string last_error;

tk_status fail(tk_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs `f`, translating library exceptions into status codes.
template <class F>
tk_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    return f();
  } catch (const ParseError& e) {
    return fail(TK_ERR_PARSE, e.what());
  } catch (const InvalidKnotError& e) {
    return fail(TK_INVALID, e.what());
  } catch (const RangeError& e) {
    return fail(TK_ERR_RANGE, e.what());
  } catch (const GrammarError& e) {
    return fail(TK_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TK_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

tk_status put(char** out, const std::string& s) {
  if (!out) return fail(TK_ERR_ARGUMENT, "null output pointer");
  *out = dup(s);
  return TK_OK;
}

std::optional<Region> region_arg(int r) {
  if (r < 0) return std::nullopt;
  if (r > 2) throw RangeError("region must be 0 (L), 1 (C), 2 (R) or -1");
  return static_cast<Region>(r);
}

Region start_arg(tk_region r) {
  auto region = region_arg(static_cast<int>(r));
  if (!region) throw RangeError("a start region is required");
  return *region;
}

KnotClass class_arg(tk_class c) {
  switch (c) {
    case TK_CLASS_FM: return KnotClass::FinkMao;
    case TK_CLASS_WINDINGS: return KnotClass::WindingPatterns;
    case TK_CLASS_SINGLE: return KnotClass::SingleDepth;
    case TK_CLASS_FULL: return KnotClass::Full;
    case TK_CLASS_HIDDEN: return KnotClass::Hidden;
  }
  throw RangeError("unknown knot class");
}

ValidityOptions options_arg(const tk_validity_options* o) {
  ValidityOptions v;
  if (!o) return v;
  v.require_final_tuck = o->require_final_tuck != 0;
  v.allow_final_center_no_tuck = o->allow_final_center_no_tuck != 0;
  v.allow_hidden_tucks = o->allow_hidden_tucks != 0;
  if (o->max_tuck_depth > 0) v.max_tuck_depth = o->max_tuck_depth;
  v.max_moves = o->max_moves;
  return v;
}

std::string join(const std::vector<std::string_view>& names) {
  std::string s;
  for (auto n : names) {
    if (!s.empty()) s += ',';
    s += n;
  }
  return s;
}

std::vector<NamedKnot> registry_arg(const char* path) {
  std::vector<NamedKnot> knots;
  if (path && *path) knots = load_registry(path);
  const auto& builtin = registry();
  knots.insert(knots.end(), builtin.begin(), builtin.end());
  return knots;
}

#define TK_REQUIRE(cond, msg) \
  if (!(cond)) return fail(TK_ERR_ARGUMENT, msg)

}  // namespace

extern "C" {

const char* tk_last_error(void) { return last_error.c_str(); }
const char* tk_version(void) { return "1.0.0"; }
void tk_string_free(char* s) { std::free(s); }

// ---- knots

tk_status tk_knot_parse_tw(const char* text, tk_region start, tk_knot** out) {
  return guarded([&] {
    TK_REQUIRE(text && out, "null argument");
    *out = new tk_knot{parse_tw(text, start_arg(start))};
    return TK_OK;
  });
}

tk_status tk_knot_parse_clr(const char* text, tk_knot** out) {
  return guarded([&] {
    TK_REQUIRE(text && out, "null argument");
    *out = new tk_knot{clr_to_tw(parse_clr(text))};
    return TK_OK;
  });
}

tk_status tk_knot_from_name(const char* name, tk_knot** out) {
  return guarded([&] {
    TK_REQUIRE(name && out, "null argument");
    *out = new tk_knot{knot_of(KnotName::parse(name))};
    return TK_OK;
  });
}

tk_status tk_knot_named(const char* common_name, const char* registry_path, tk_knot** out) {
  return guarded([&] {
    TK_REQUIRE(common_name && out, "null argument");
    auto found = find_named(common_name, registry_arg(registry_path));
    if (!found) return fail(TK_ERR_NOT_FOUND, std::string("no knot named '") + common_name + "'");
    *out = new tk_knot{found->tw};
    return TK_OK;
  });
}

void tk_knot_free(tk_knot* k) { delete k; }

tk_status tk_knot_tw(const tk_knot* k, char** out) {
  return guarded([&] {
    TK_REQUIRE(k, "null knot");
    return put(out, serialize(k->word));
  });
}

tk_status tk_knot_clr(const tk_knot* k, int annotate, int spaced, char** out) {
  return guarded([&] {
    TK_REQUIRE(k, "null knot");
    auto w = tw_to_clr(k->word);
    if (annotate) w = infer_orientations(w);
    return put(out, serialize(w, ClrStyle{annotate != 0, spaced != 0}));
  });
}

tk_status tk_knot_mirror(const tk_knot* k, tk_knot** out) {
  return guarded([&] {
    TK_REQUIRE(k && out, "null argument");
    *out = new tk_knot{mirror(k->word)};
    return TK_OK;
  });
}

tk_status tk_knot_metrics(const tk_knot* k, tk_metrics* out) {
  return guarded([&] {
    TK_REQUIRE(k && out, "null argument");
    const auto m = metrics(k->word);
    out->windings = m.winding_count;
    out->moves = m.move_count;
    out->symbols = m.symbol_count;
    out->tucks = m.tuck_count;
    out->max_tuck_depth = m.max_tuck_depth;
    out->net_turn = m.net_turn;
    out->start = static_cast<tk_region>(k->word.start());
    out->final_region = static_cast<tk_region>(final_region(k->word));
    out->symmetry = symmetry(k->word);
    out->balance = balance(k->word);
    return TK_OK;
  });
}

tk_status tk_knot_classify(const tk_knot* k, char** out) {
  return guarded([&] {
    TK_REQUIRE(k, "null knot");
    return put(out, std::string(to_string(classify_final(k->word))));
  });
}

tk_status tk_knot_name(const tk_knot* k, char** out) {
  return guarded([&] {
    TK_REQUIRE(k, "null knot");
    return put(out, name_of(k->word).to_string());
  });
}

tk_status tk_knot_instructions(const tk_knot* k, char** out) {
  return guarded([&] {
    TK_REQUIRE(k, "null knot");
    return put(out, render_instructions(k->word));
  });
}

tk_status tk_knot_record(const tk_knot* k, tk_format format, char** out) {
  return guarded([&] {
    TK_REQUIRE(k, "null knot");
    switch (format) {
      case TK_FORMAT_JSONL: return put(out, knot_record_json(k->word));
      case TK_FORMAT_CSV: return put(out, knot_record_csv(k->word));
      case TK_FORMAT_PLAIN: return put(out, serialize(k->word));
    }
    return fail(TK_ERR_ARGUMENT, "unknown format");
  });
}

const char* tk_record_csv_header(void) {
  static const std::string header = knot_record_csv_header();
  return header.c_str();
}

// ---- validation

void tk_validity_options_default(tk_validity_options* opts) {
  if (!opts) return;
  const ValidityOptions d;
  opts->require_final_tuck = d.require_final_tuck;
  opts->allow_final_center_no_tuck = d.allow_final_center_no_tuck;
  opts->allow_hidden_tucks = d.allow_hidden_tucks;
  opts->max_tuck_depth = d.max_tuck_depth.value_or(0);
  opts->max_moves = d.max_moves;
}

namespace {

tk_status make_report(ValidityReport r, tk_report** out) {
  auto* rep = new tk_report{std::move(r), {}};
  for (const auto& v : rep->report.violations) rep->axioms.emplace_back(axiom_id(v.axiom));
  *out = rep;
  return rep->report.valid() ? TK_OK : TK_INVALID;
}

}  // namespace

tk_status tk_validate_tw(const char* text, tk_region start, const tk_validity_options* opts,
                         tk_report** out) {
  return guarded([&] {
    TK_REQUIRE(text && out, "null argument");
    return make_report(validate(parse_tw(text, start_arg(start)), options_arg(opts)), out);
  });
}

tk_status tk_validate_clr(const char* text, const tk_validity_options* opts, tk_report** out) {
  return guarded([&] {
    TK_REQUIRE(text && out, "null argument");
    return make_report(validate(parse_clr(text), options_arg(opts)), out);
  });
}

int tk_report_valid(const tk_report* r) { return r && r->report.valid() ? 1 : 0; }

size_t tk_report_count(const tk_report* r) { return r ? r->report.violations.size() : 0; }

tk_status tk_report_violation(const tk_report* r, size_t i, const char** axiom, size_t* position,
                              const char** message) {
  if (!r) return fail(TK_ERR_ARGUMENT, "null report");
  if (i >= r->report.violations.size()) return fail(TK_ERR_RANGE, "violation index out of range");
  const auto& v = r->report.violations[i];
  if (axiom) *axiom = r->axioms[i].c_str();
  if (position) *position = v.position;
  if (message) *message = v.message.c_str();
  return TK_OK;
}

tk_status tk_report_text(const tk_report* r, char** out) {
  return guarded([&] {
    TK_REQUIRE(r, "null report");
    return put(out, r->report.text());
  });
}

tk_status tk_report_json(const tk_report* r, char** out) {
  return guarded([&] {
    TK_REQUIRE(r, "null report");
    return put(out, r->report.json());
  });
}

void tk_report_free(tk_report* r) { delete r; }

tk_status tk_clr_annotate(const char* clr, int spaced, char** out) {
  return guarded([&] {
    TK_REQUIRE(clr, "null argument");
    return put(out, serialize(infer_orientations(parse_clr(clr)), ClrStyle{true, spaced != 0}));
  });
}

// ---- enumeration

tk_status tk_enumerate(tk_class cls, int min_windings, int max_windings, int final_region,
                       tk_knot_callback cb, void* user) {
  return guarded([&] {
    TK_REQUIRE(cb, "null callback");
    tk_knot holder;
    enumerate_class(
        class_arg(cls), max_windings, region_arg(final_region),
        [&](const KnotWord& k) {
          holder.word = k;
          return cb(&holder, user) != 0;
        },
        min_windings);
    return TK_OK;
  });
}

tk_status tk_count(tk_class cls, int max_windings, int final_region, tk_series** out) {
  return guarded([&] {
    TK_REQUIRE(out, "null output pointer");
    *out = new tk_series{count_class(class_arg(cls), max_windings, region_arg(final_region))};
    return TK_OK;
  });
}

tk_status tk_sample(tk_class cls, int max_windings, int final_region, size_t count, uint64_t seed,
                    tk_knot_callback cb, void* user) {
  return guarded([&] {
    TK_REQUIRE(cb, "null callback");
    tk_knot holder;
    for (auto& k : sample_class(class_arg(cls), max_windings, region_arg(final_region), count,
                                seed)) {
      holder.word = std::move(k);
      if (!cb(&holder, user)) break;
    }
    return TK_OK;
  });
}

// ---- series

tk_status tk_series_named(const char* which, int max_degree, tk_series** out) {
  return guarded([&] {
    TK_REQUIRE(which && out, "null argument");
    TK_REQUIRE(max_degree >= 0, "degree must be non-negative");
    auto g = series_grammar(which);
    if (!g) return fail(TK_ERR_NOT_FOUND, std::string("unknown series '") + which + "'");
    *out = new tk_series{count_by_size(*g, max_degree)};
    return TK_OK;
  });
}

const char* tk_series_names(void) {
  static const std::string names = join(series_names());
  return names.c_str();
}

tk_status tk_series_expand(const char* rational, size_t order, tk_series** out) {
  return guarded([&] {
    TK_REQUIRE(rational && out, "null argument");
    *out = new tk_series{expand(parse_rational(rational), order)};
    return TK_OK;
  });
}

tk_status tk_series_parse(const char* list, tk_series** out) {
  return guarded([&] {
    TK_REQUIRE(list && out, "null argument");
    std::vector<BigInt> coeffs;
    const std::string s(list);
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i;
      if (i == s.size()) break;
      const auto start = i;
      if (s[i] == '-' || s[i] == '+') ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start || !std::isdigit(static_cast<unsigned char>(s[i - 1])))
        throw ParseError("expected an integer", start);
      if (i < s.size() && s[i] != ',' && s[i] != ' ' && s[i] != '\t')
        throw ParseError(std::string("unexpected '") + s[i] + "'", i);
      auto digits = s.substr(start, i - start);
      if (digits[0] == '+') digits.erase(0, 1);
      coeffs.emplace_back(digits);
    }
    *out = new tk_series{Series(std::move(coeffs))};
    return TK_OK;
  });
}

size_t tk_series_length(const tk_series* s) { return s ? s->series.order() : 0; }

tk_status tk_series_coefficient(const tk_series* s, size_t i, char** out) {
  return guarded([&] {
    TK_REQUIRE(s, "null series");
    if (i >= s->series.order()) return fail(TK_ERR_RANGE, "coefficient index out of range");
    return put(out, s->series[i].str());
  });
}

tk_status tk_series_list(const tk_series* s, char** out) {
  return guarded([&] {
    TK_REQUIRE(s, "null series");
    return put(out, s->series.to_list());
  });
}

tk_status tk_series_text(const tk_series* s, char** out) {
  return guarded([&] {
    TK_REQUIRE(s, "null series");
    return put(out, s->series.to_text());
  });
}

tk_status tk_series_compare(const tk_series* a, const tk_series* b, int* equal, char** report) {
  return guarded([&] {
    TK_REQUIRE(a && b && equal, "null argument");
    const auto c = compare(a->series, b->series);
    *equal = c.equal ? 1 : 0;
    if (report) return put(report, c.to_string());
    return TK_OK;
  });
}

tk_status tk_series_fit(const tk_series* s, int max_order, char** rational) {
  return guarded([&] {
    TK_REQUIRE(s, "null series");
    TK_REQUIRE(max_order >= 0, "order must be non-negative");
    auto gf = fit_recurrence(s->series, static_cast<std::size_t>(max_order));
    if (!gf) return fail(TK_ERR_NOT_FOUND, "no recurrence of order <= " +
                                               std::to_string(max_order) + " fits");
    return put(rational, gf->to_string());
  });
}

void tk_series_free(tk_series* s) { delete s; }

// ---- census, grammars, registry

tk_status tk_census_csv(int max_windings, char** out) {
  return guarded([&] { return put(out, census_csv(census(max_windings))); });
}

tk_status tk_cross_check(int max_windings, int* ok, char** report) {
  return guarded([&] {
    TK_REQUIRE(ok, "null argument");
    const auto r = cross_check(max_windings);
    *ok = r.ok() ? 1 : 0;
    if (report) return put(report, r.text());
    return TK_OK;
  });
}

const char* tk_grammar_names(void) {
  static const std::string names = join(grammar_names());
  return names.c_str();
}

tk_status tk_grammar_bnf(const char* which, char** out) {
  return guarded([&] {
    TK_REQUIRE(which, "null argument");
    auto g = grammar_by_name(which);
    if (!g) return fail(TK_ERR_NOT_FOUND, std::string("unknown grammar '") + which + "'");
    return put(out, to_bnf(*g));
  });
}

tk_status tk_grammar_generate(const char* which, int max_size, tk_string_callback cb,
                              void* user) {
  return guarded([&] {
    TK_REQUIRE(which && cb, "null argument");
    auto g = grammar_by_name(which);
    if (!g) return fail(TK_ERR_NOT_FOUND, std::string("unknown grammar '") + which + "'");
    for (int size = 0; size <= max_size; ++size) {
      for (const auto& s : generate_bucket(*g, size)) {
        if (!cb(s.c_str(), user)) return TK_OK;
      }
    }
    return TK_OK;
  });
}

tk_status tk_registry_list(const char* registry_path, char** out) {
  return guarded([&] {
    std::string text;
    for (const auto& k : registry_arg(registry_path)) {
      text += k.common_name;
      text += '\t';
      text += to_char(k.tw.start());
      text += '\t' + serialize(k.tw) + '\t' + serialize(k.clr) + '\t';
      text += k.name ? k.name->to_string() : "-";
      text += '\n';
    }
    return put(out, text);
  });
}

}  // extern "C"
