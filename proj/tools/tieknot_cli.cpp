// tieknot: command-line front end. Uses only the C interface.
//
// Exit codes: 0 success (or valid), 1 invalid knot, 2 usage or parse error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tieknot/tieknot.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

// Thrown by helpers to leave with a given exit code and message.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void usage(std::string msg) { throw Exit{kExitUsage, std::move(msg)}; }

int code_for(tk_status s) { return s == TK_INVALID ? kExitInvalid : kExitUsage; }

void check(tk_status s) {
  if (s != TK_OK) throw Exit{code_for(s), tk_last_error()};
}

struct Str {
  char* p = nullptr;
  ~Str() { tk_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct KnotDeleter {
  void operator()(tk_knot* k) const { tk_knot_free(k); }
};
using Knot = std::unique_ptr<tk_knot, KnotDeleter>;

struct SeriesDeleter {
  void operator()(tk_series* s) const { tk_series_free(s); }
};
using SeriesPtr = std::unique_ptr<tk_series, SeriesDeleter>;

template <class F>
std::string take(F&& f) {
  Str s;
  check(f(&s.p));
  return s.str();
}

tk_region parse_region(const std::string& s) {
  if (s == "L" || s == "l") return TK_REGION_L;
  if (s == "C" || s == "c") return TK_REGION_C;
  if (s == "R" || s == "r") return TK_REGION_R;
  usage("region must be L, C or R, got '" + s + "'");
}

char region_char(tk_region r) { return "LCR"[r]; }

tk_class parse_class(const std::string& s) {
  if (s == "fm") return TK_CLASS_FM;
  if (s == "windings") return TK_CLASS_WINDINGS;
  if (s == "single") return TK_CLASS_SINGLE;
  if (s == "full") return TK_CLASS_FULL;
  if (s == "hidden") return TK_CLASS_HIDDEN;
  usage("unknown class '" + s + "' (fm, windings, single, full, hidden)");
}

tk_format parse_format(const std::string& s) {
  if (s == "plain") return TK_FORMAT_PLAIN;
  if (s == "jsonl" || s == "json-lines" || s == "json") return TK_FORMAT_JSONL;
  if (s == "csv") return TK_FORMAT_CSV;
  usage("unknown format '" + s + "' (plain, jsonl, csv)");
}

int winding_cap() {
  const char* env = std::getenv("TIEKNOT_MAX_WINDINGS");
  if (!env || !*env) return 13;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    usage(std::string("TIEKNOT_MAX_WINDINGS must be a non-negative integer, got '") + env + "'");
  }
}

// Options shared by every command that takes a single knot.
struct KnotInput {
  std::string tw, clr, name, named, registry;
  std::string start = "L";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--tw", tw, "Knot in winding notation");
    cmd->add_option("--clr", clr, "Knot in region notation");
    cmd->add_option("--name", name, "Knot by catalogue name, e.g. L-373.4");
    cmd->add_option("--named", named, "Knot by common name, e.g. Trinity");
    cmd->add_option("--start", start, "Start region for --tw")->default_val("L");
    cmd->add_option("--registry", registry, "Extra registry file (TSV)");
  }

  Knot load() const {
    const int given = !tw.empty() + !clr.empty() + !name.empty() + !named.empty();
    if (given != 1) usage("give exactly one of --tw, --clr, --name, --named");
    tk_knot* k = nullptr;
    if (!tw.empty()) check(tk_knot_parse_tw(tw.c_str(), parse_region(start), &k));
    if (!clr.empty()) check(tk_knot_parse_clr(clr.c_str(), &k));
    if (!name.empty()) check(tk_knot_from_name(name.c_str(), &k));
    if (!named.empty()) {
      const tk_status s =
          tk_knot_named(named.c_str(), registry.empty() ? nullptr : registry.c_str(), &k);
      if (s == TK_ERR_NOT_FOUND) throw Exit{kExitUsage, tk_last_error()};
      check(s);
    }
    return Knot(k);
  }
};

tk_metrics metrics_of(const tk_knot* k) {
  tk_metrics m{};
  check(tk_knot_metrics(k, &m));
  return m;
}

std::string plain_line(const tk_knot* k, bool with_start) {
  std::string tw = take([&](char** o) { return tk_knot_tw(k, o); });
  if (!with_start) return tw;
  return std::string(1, region_char(metrics_of(k).start)) + "\t" + tw;
}

std::string record(const tk_knot* k, tk_format f, bool with_start) {
  if (f == TK_FORMAT_PLAIN) return plain_line(k, with_start);
  return take([&](char** o) { return tk_knot_record(k, f, o); });
}

// ---- validate

struct ValidateCmd {
  KnotInput in;
  bool no_final_tuck = false, center_end = false, hidden = false;
  int max_depth = 0;
  int max_moves = 13;
  std::string format = "plain";

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("validate", "Check a knot against the axioms");
    c->add_option("--tw", in.tw, "Knot in winding notation");
    c->add_option("--clr", in.clr, "Knot in region notation (i/o marks allowed)");
    c->add_option("--start", in.start, "Start region for --tw")->default_val("L");
    c->add_flag("--no-final-tuck", no_final_tuck, "Do not require a final tuck");
    c->add_flag("--allow-center-end", center_end, "Accept a knot ending on C without a tuck");
    c->add_flag("--hidden", hidden, "Admit tucks behind the knot");
    c->add_option("--max-depth", max_depth, "Largest tuck depth, 0 = unlimited");
    c->add_option("--max-moves", max_moves, "Largest number of moves")->default_val(13);
    c->add_option("--format", format, "plain or json")->default_val("plain");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  int run() {
    if (in.tw.empty() == in.clr.empty()) usage("give exactly one of --tw, --clr");
    tk_validity_options opts;
    tk_validity_options_default(&opts);
    opts.require_final_tuck = !no_final_tuck;
    opts.allow_final_center_no_tuck = center_end;
    opts.allow_hidden_tucks = hidden;
    opts.max_tuck_depth = max_depth;
    opts.max_moves = max_moves;
    const bool json = parse_format(format) != TK_FORMAT_PLAIN;

    tk_report* r = nullptr;
    const tk_status s = in.tw.empty()
                            ? tk_validate_clr(in.clr.c_str(), &opts, &r)
                            : tk_validate_tw(in.tw.c_str(), parse_region(in.start), &opts, &r);
    if (!r) check(s);
    std::unique_ptr<tk_report, void (*)(tk_report*)> report(r, tk_report_free);
    const std::string out = take([&](char** o) {
      return json ? tk_report_json(r, o) : tk_report_text(r, o);
    });
    std::cout << out << (out.empty() || out.back() != '\n' ? "\n" : "");
    return tk_report_valid(r) ? kExitOk : kExitInvalid;
  }
};

// ---- convert

struct ConvertCmd {
  std::string text, start = "L";
  bool to_clr = false, to_tw = false, annotate = false, spaced = false;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("convert", "Convert between winding and region notation");
    c->add_option("knot", text, "Knot string")->required();
    auto* a = c->add_flag("--to-clr", to_clr, "Winding notation to region notation");
    auto* b = c->add_flag("--to-tw", to_tw, "Region notation to winding notation");
    auto* d = c->add_flag("--annotate", annotate, "Add in/out marks to region notation");
    a->excludes(b);
    b->excludes(d);
    c->add_option("--start", start, "Start region of a winding string")->default_val("L");
    c->add_flag("--spaced", spaced, "Separate region symbols with spaces");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  static bool looks_like_clr(const std::string& s) {
    return s.find_first_of("LCRlcr") != std::string::npos;
  }

  int run() {
    const bool clr_input = to_tw || (!to_clr && looks_like_clr(text));
    if (clr_input && !to_tw && annotate && !to_clr) {
      std::cout << take([&](char** o) { return tk_clr_annotate(text.c_str(), spaced, o); })
                << '\n';
      return kExitOk;
    }
    tk_knot* k = nullptr;
    if (clr_input) {
      check(tk_knot_parse_clr(text.c_str(), &k));
    } else {
      check(tk_knot_parse_tw(text.c_str(), parse_region(start), &k));
    }
    Knot knot(k);
    if (clr_input) {
      const auto m = metrics_of(k);
      std::cout << take([&](char** o) { return tk_knot_tw(k, o); });
      if (m.start != TK_REGION_L) std::cout << "\t(start " << region_char(m.start) << ")";
      std::cout << '\n';
    } else {
      std::cout << take([&](char** o) { return tk_knot_clr(k, annotate, spaced, o); }) << '\n';
    }
    return kExitOk;
  }
};

// ---- enumerate

struct Bounds {
  int max_windings = -1;
  int max_moves = -1;
  int windings = -1;

  void add_to(CLI::App* c) {
    auto* a = c->add_option("--max-windings", max_windings, "Largest number of T/W windings");
    auto* b = c->add_option("--max-moves", max_moves, "Largest number of moves (windings + 1)");
    auto* w = c->add_option("--windings", windings, "Exactly this many windings");
    a->excludes(b);
    a->excludes(w);
    b->excludes(w);
  }

  // [min, max] in windings.
  std::pair<int, int> resolve(int fallback) const {
    int lo = 0, hi = fallback;
    if (max_windings >= 0) hi = max_windings;
    if (max_moves >= 0) hi = max_moves - 1;
    if (windings >= 0) lo = hi = windings;
    const int cap = winding_cap();
    if (hi > cap) {
      usage("at most " + std::to_string(cap) +
            " windings (raise TIEKNOT_MAX_WINDINGS to go further)");
    }
    return {lo, hi};
  }
};

struct EnumerateCmd {
  Bounds bounds;
  std::string cls = "single", final, format = "plain";
  bool both = false, count = false, progress = false;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("enumerate", "List every knot of a class");
    c->add_option("--class", cls, "fm, windings, single, full or hidden")->default_val("single");
    bounds.add_to(c);
    c->add_option("--final", final, "Only knots whose final region is L, C or R");
    c->add_option("--format", format, "plain, jsonl or csv")->default_val("plain");
    c->add_flag("--both-mirrors", both, "Also emit the mirror image of every knot");
    c->add_flag("--count", count, "Print only the number of knots");
    c->add_flag("--progress", progress, "Report each completed bucket on stderr");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  struct State {
    tk_format format;
    bool both, count, progress;
    std::size_t emitted = 0;
    std::size_t bucket = SIZE_MAX;
    std::size_t in_bucket = 0;
    std::string error;
  };

  static void flush_bucket(State& st) {
    if (st.progress && st.bucket != SIZE_MAX) {
      std::cerr << "windings " << st.bucket << ": " << st.in_bucket << " knots\n";
    }
  }

  static int on_knot(const tk_knot* k, void* user) {
    auto& st = *static_cast<State*>(user);
    try {
      const auto w = metrics_of(k).windings;
      if (w != st.bucket) {
        flush_bucket(st);
        st.bucket = w;
        st.in_bucket = 0;
      }
      ++st.in_bucket;
      st.emitted += st.both ? 2 : 1;
      if (st.count) return 1;
      std::cout << record(k, st.format, st.both) << '\n';
      if (st.both) {
        tk_knot* m = nullptr;
        check(tk_knot_mirror(k, &m));
        Knot mirrored(m);
        std::cout << record(m, st.format, true) << '\n';
      }
      return 1;
    } catch (const Exit& e) {
      st.error = e.message;
      return 0;
    }
  }

  int run() {
    const auto [lo, hi] = bounds.resolve(12);
    State st{parse_format(format), both, count, progress};
    const int fin = final.empty() ? -1 : static_cast<int>(parse_region(final));
    if (!count && st.format == TK_FORMAT_CSV) std::cout << tk_record_csv_header() << '\n';
    check(tk_enumerate(parse_class(cls), lo, hi, fin, on_knot, &st));
    if (!st.error.empty()) usage(st.error);
    flush_bucket(st);
    if (count) std::cout << st.emitted << '\n';
    return kExitOk;
  }
};

// ---- census

struct CensusCmd {
  Bounds bounds;
  std::string format = "plain";

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("census", "Counts by winding number");
    bounds.add_to(c);
    c->add_option("--format", format, "plain, jsonl or csv")->default_val("plain");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  static std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, sep)) out.push_back(cell);
    return out;
  }

  int run() {
    const auto [lo, hi] = bounds.resolve(12);
    (void)lo;
    const std::string csv = take([&, hi = hi](char** o) { return tk_census_csv(hi, o); });
    const auto f = parse_format(format);
    if (f == TK_FORMAT_CSV) {
      std::cout << csv;
      return kExitOk;
    }
    std::stringstream in(csv);
    std::string line;
    std::getline(in, line);
    const auto header = split(line, ',');
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
      if (!line.empty()) rows.push_back(split(line, ','));
    }
    if (f == TK_FORMAT_JSONL) {
      for (const auto& row : rows) {
        nlohmann::ordered_json j;
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) {
          if (row[i] == "total") {
            j[header[i]] = row[i];
          } else {
            j[header[i]] = std::stoull(row[i]);
          }
        }
        std::cout << j.dump() << '\n';
      }
      return kExitOk;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
      width[i] = header[i].size();
      for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
    }
    auto print = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::cout << (i ? "  " : "") << std::string(width[i] - cells[i].size(), ' ') << cells[i];
      }
      std::cout << '\n';
    };
    print(header);
    for (const auto& row : rows) print(row);
    return kExitOk;
  }
};

// ---- series

struct SeriesCmd {
  std::string which;
  int degree = 12;
  std::string expand_expr, compare_expr;
  bool fit = false, text = false, list = false;
  int max_order = 4;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("series", "Counting series by size");
    c->add_option("which", which, "fm, single, r-final, c-final, l-final, windings-r, "
                                  "windings-c, windings-l, full, hidden");
    c->add_option("degree", degree, "Largest degree")->default_val(12);
    c->add_option("--expand", expand_expr, "Expand a rational expression in z instead");
    c->add_option("--compare", compare_expr, "Compare against a rational expression in z");
    c->add_flag("--fit", fit, "Fit a rational generating function");
    c->add_option("--max-order", max_order, "Largest recurrence order for --fit")
        ->default_val(4);
    c->add_flag("--text", text, "Print as a power series in z");
    c->add_flag("--list", list, "List the series names");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  static std::string coefficients(const tk_series* s) {
    std::string out;
    for (std::size_t i = 0; i < tk_series_length(s); ++i) {
      if (i) out += ',';
      out += take([&](char** o) { return tk_series_coefficient(s, i, o); });
    }
    return out;
  }

  int run() {
    if (list) {
      std::cout << tk_series_names() << '\n';
      return kExitOk;
    }
    // With --expand the lone positional is the degree.
    if (!expand_expr.empty() && !which.empty() &&
        which.find_first_not_of("0123456789") == std::string::npos) {
      degree = std::stoi(which);
      which.clear();
    }
    if (degree < 0) usage("degree must be non-negative");
    tk_series* raw = nullptr;
    if (!expand_expr.empty()) {
      if (!which.empty()) usage("give a series name or --expand, not both");
      check(tk_series_expand(expand_expr.c_str(), static_cast<std::size_t>(degree) + 1, &raw));
    } else {
      if (which.empty()) usage("a series name is required");
      const tk_status s = tk_series_named(which.c_str(), degree, &raw);
      if (s != TK_OK) usage(tk_last_error());
    }
    SeriesPtr series(raw);
    if (text) {
      std::cout << take([&](char** o) { return tk_series_text(raw, o); }) << '\n';
    } else {
      std::cout << coefficients(raw) << '\n';
    }
    int code = kExitOk;
    if (!compare_expr.empty()) {
      tk_series* other = nullptr;
      check(tk_series_expand(compare_expr.c_str(), tk_series_length(raw), &other));
      SeriesPtr keep(other);
      int equal = 0;
      std::cout << take([&](char** o) { return tk_series_compare(raw, other, &equal, o); })
                << '\n';
      if (!equal) code = kExitInvalid;
    }
    if (fit) {
      Str gf;
      const tk_status s = tk_series_fit(raw, max_order, &gf.p);
      if (s == TK_ERR_NOT_FOUND) {
        std::cout << "no fit: " << tk_last_error() << '\n';
        code = kExitInvalid;
      } else {
        check(s);
        std::cout << gf.str() << '\n';
      }
    }
    return code;
  }
};

// ---- single-knot commands

struct NameCmd {
  KnotInput in;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("name", "Catalogue name of a knot");
    in.add_to(c);
    c->callback([this] { throw Exit{run(), ""}; });
  }

  int run() {
    Knot k = in.load();
    std::cout << take([&](char** o) { return tk_knot_name(k.get(), o); }) << '\n';
    return kExitOk;
  }
};

struct InstructionsCmd {
  KnotInput in;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("instructions", "Step-by-step tying instructions");
    in.add_to(c);
    c->callback([this] { throw Exit{run(), ""}; });
  }

  int run() {
    Knot k = in.load();
    std::string s = take([&](char** o) { return tk_knot_instructions(k.get(), o); });
    std::cout << s << (s.empty() || s.back() != '\n' ? "\n" : "");
    return kExitOk;
  }
};

struct AestheticsCmd {
  KnotInput in;
  std::string format = "plain";

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("aesthetics", "Symmetry, balance and shape of a knot");
    in.add_to(c);
    c->add_option("--format", format, "plain, jsonl or csv")->default_val("plain");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  int run() {
    Knot k = in.load();
    const auto f = parse_format(format);
    if (f != TK_FORMAT_PLAIN) {
      if (f == TK_FORMAT_CSV) std::cout << tk_record_csv_header() << '\n';
      std::cout << record(k.get(), f, false) << '\n';
      return kExitOk;
    }
    const auto m = metrics_of(k.get());
    std::cout << "symmetry " << m.symmetry << '\n'
              << "balance " << m.balance << '\n'
              << "windings " << m.windings << '\n'
              << "moves " << m.moves << '\n'
              << "tucks " << m.tucks << '\n'
              << "final " << region_char(m.final_region) << '\n'
              << "class " << take([&](char** o) { return tk_knot_classify(k.get(), o); })
              << '\n';
    return kExitOk;
  }
};

// ---- sample

struct SampleCmd {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  Bounds bounds;
  std::string cls = "single", final, format = "plain";

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("sample", "Knots drawn uniformly from a class");
    c->add_option("count", count, "Number of knots")->default_val(1);
    c->add_option("--seed", seed, "Random seed")->default_val(0);
    bounds.add_to(c);
    c->add_option("--class", cls, "fm, windings, single, full or hidden")->default_val("single");
    c->add_option("--final", final, "Only knots whose final region is L, C or R");
    c->add_option("--format", format, "plain, jsonl or csv")->default_val("plain");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  struct State {
    tk_format format;
    std::string error;
  };

  static int on_knot(const tk_knot* k, void* user) {
    auto& st = *static_cast<State*>(user);
    try {
      if (st.format == TK_FORMAT_PLAIN) {
        std::cout << plain_line(k, false) << '\t'
                  << take([&](char** o) { return tk_knot_name(k, o); }) << '\n';
      } else {
        std::cout << record(k, st.format, false) << '\n';
      }
      return 1;
    } catch (const Exit& e) {
      st.error = e.message;
      return 0;
    }
  }

  int run() {
    const auto [lo, hi] = bounds.resolve(12);
    if (lo != 0) usage("sample takes --max-windings or --max-moves, not --windings");
    State st{parse_format(format), {}};
    const int fin = final.empty() ? -1 : static_cast<int>(parse_region(final));
    if (st.format == TK_FORMAT_CSV) std::cout << tk_record_csv_header() << '\n';
    check(tk_sample(parse_class(cls), hi, fin, count, seed, on_knot, &st));
    if (!st.error.empty()) usage(st.error);
    return kExitOk;
  }
};

// ---- grammar, check, registry

struct GrammarCmd {
  std::string which;
  int generate = -1;
  bool list = false;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("grammar", "Print or run a built-in grammar");
    c->add_option("which", which, "Grammar name");
    c->add_option("--generate", generate, "Print every member up to this size");
    c->add_flag("--list", list, "List the grammar names");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  static int on_string(const char* s, void*) {
    std::cout << s << '\n';
    return 1;
  }

  int run() {
    if (list) {
      std::cout << tk_grammar_names() << '\n';
      return kExitOk;
    }
    if (which.empty()) usage("a grammar name is required");
    if (generate >= 0) {
      const tk_status s = tk_grammar_generate(which.c_str(), generate, on_string, nullptr);
      if (s != TK_OK) usage(tk_last_error());
      return kExitOk;
    }
    Str bnf;
    if (tk_grammar_bnf(which.c_str(), &bnf.p) != TK_OK) usage(tk_last_error());
    std::cout << bnf.str();
    return kExitOk;
  }
};

struct CheckCmd {
  Bounds bounds;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("check", "Cross-check the enumeration against the grammars");
    bounds.add_to(c);
    c->callback([this] { throw Exit{run(), ""}; });
  }

  int run() {
    const int hi = bounds.resolve(9).second;
    int ok = 0;
    std::cout << take([&](char** o) { return tk_cross_check(hi, &ok, o); });
    return ok ? kExitOk : kExitInvalid;
  }
};

struct RegistryCmd {
  std::string file;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("registry", "List the named knots");
    c->add_option("--registry", file, "Extra registry file (TSV)");
    c->callback([this] { throw Exit{run(), ""}; });
  }

  int run() {
    std::cout << take([&](char** o) {
      return tk_registry_list(file.empty() ? nullptr : file.c_str(), o);
    });
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tie-knot notation, validation, enumeration and counting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tk_version()));

  ValidateCmd validate;
  ConvertCmd convert;
  EnumerateCmd enumerate;
  CensusCmd census;
  SeriesCmd series;
  NameCmd name;
  InstructionsCmd instructions;
  AestheticsCmd aesthetics;
  SampleCmd sample;
  GrammarCmd grammar;
  CheckCmd check_cmd;
  RegistryCmd registry;
  validate.add(app);
  convert.add(app);
  enumerate.add(app);
  census.add(app);
  series.add(app);
  name.add(app);
  instructions.add(app);
  aesthetics.add(app);
  sample.add(app);
  grammar.add(app);
  check_cmd.add(app);
  registry.add(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Exit& e) {
    if (!e.message.empty()) std::cerr << "tieknot: " << e.message << '\n';
    return e.code;
  }
  return kExitOk;
}
