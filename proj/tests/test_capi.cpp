#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "tieknot/tieknot.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tk_string_free(s);
  return out;
}

tk_knot* tw(const char* s) {
  tk_knot* k = nullptr;
  REQUIRE(tk_knot_parse_tw(s, TK_REGION_L, &k) == TK_OK);
  return k;
}

int collect(const tk_knot* k, void* user) {
  char* s = nullptr;
  if (tk_knot_tw(k, &s) != TK_OK) return 0;
  static_cast<std::vector<std::string>*>(user)->push_back(take(s));
  return 1;
}

}  // namespace

TEST_CASE("knot handles") {
  tk_knot* k = tw("TWWWTTTUTTU");
  char* s = nullptr;
  CHECK(tk_knot_clr(k, 0, 0, &s) == TK_OK);
  CHECK(take(s) == "LCLRCRLCURLU");
  CHECK(tk_knot_name(k, &s) == TK_OK);
  CHECK(take(s).ends_with(".2"));
  CHECK(tk_knot_classify(k, &s) == TK_OK);
  CHECK(take(s) == "Modern-L");

  tk_metrics m{};
  CHECK(tk_knot_metrics(k, &m) == TK_OK);
  CHECK(m.windings == 9);
  CHECK(m.moves == 10);
  CHECK(m.tucks == 2);
  CHECK(m.symmetry == 1);
  CHECK(m.balance == 2);
  CHECK(m.final_region == TK_REGION_L);

  tk_knot* mirrored = nullptr;
  CHECK(tk_knot_mirror(k, &mirrored) == TK_OK);
  CHECK(tk_knot_tw(mirrored, &s) == TK_OK);
  CHECK(take(s) == "WTTTWWWUWWU");
  CHECK(tk_knot_name(mirrored, &s) == TK_INVALID);

  CHECK(tk_knot_record(k, TK_FORMAT_JSONL, &s) == TK_OK);
  CHECK(take(s).find("\"schema_version\":1") != std::string::npos);
  CHECK(std::string(tk_record_csv_header()).rfind("tw,clr,", 0) == 0);

  CHECK(tk_knot_instructions(k, &s) == TK_OK);
  CHECK(take(s).find("11.") != std::string::npos);
  tk_knot_free(mirrored);
  tk_knot_free(k);
}

TEST_CASE("errors") {
  tk_knot* k = nullptr;
  CHECK(tk_knot_parse_tw("TTX", TK_REGION_L, &k) == TK_ERR_PARSE);
  CHECK(k == nullptr);
  CHECK(std::string(tk_last_error()).find("position 2") != std::string::npos);
  CHECK(tk_knot_parse_clr("LCCU", &k) == TK_INVALID);
  CHECK(tk_knot_parse_tw(nullptr, TK_REGION_L, &k) == TK_ERR_ARGUMENT);
  CHECK(tk_knot_from_name("L-1.7", &k) == TK_ERR_RANGE);
  CHECK(tk_knot_named("Nonexistent", nullptr, &k) == TK_ERR_NOT_FOUND);
  CHECK(tk_knot_parse_tw("TTU", static_cast<tk_region>(7), &k) == TK_ERR_RANGE);
  k = tw("TWU");
  char* s = nullptr;
  CHECK(tk_knot_instructions(k, &s) == TK_INVALID);
  CHECK(s == nullptr);
  tk_knot_free(k);
  tk_knot_free(nullptr);
  tk_string_free(nullptr);
}

TEST_CASE("from names") {
  tk_knot* k = nullptr;
  char* s = nullptr;
  REQUIRE(tk_knot_from_name("R-1.0", &k) == TK_OK);
  CHECK(tk_knot_tw(k, &s) == TK_OK);
  CHECK(take(s) == "TTU");
  tk_knot_free(k);
  REQUIRE(tk_knot_named("eldredge", nullptr, &k) == TK_OK);
  CHECK(tk_knot_clr(k, 0, 0, &s) == TK_OK);
  CHECK(take(s) == "LCRLRCRLUCRCLU");
  tk_knot_free(k);
}

TEST_CASE("validation reports") {
  tk_report* r = nullptr;
  CHECK(tk_validate_clr("LL", nullptr, &r) == TK_INVALID);
  REQUIRE(r);
  CHECK_FALSE(tk_report_valid(r));
  REQUIRE(tk_report_count(r) >= 1);
  const char* axiom = nullptr;
  const char* message = nullptr;
  std::size_t pos = 99;
  CHECK(tk_report_violation(r, 0, &axiom, &pos, &message) == TK_OK);
  CHECK(std::string(axiom) == "Ƭ1");
  CHECK(pos == 1);
  CHECK(tk_report_violation(r, 99, &axiom, &pos, &message) == TK_ERR_RANGE);
  char* s = nullptr;
  CHECK(tk_report_json(r, &s) == TK_OK);
  CHECK(take(s).find("Ƭ1") != std::string::npos);
  tk_report_free(r);

  tk_validity_options o;
  tk_validity_options_default(&o);
  CHECK(o.require_final_tuck == 1);
  CHECK(o.max_moves == 13);
  CHECK(tk_validate_tw("TWTTUU", TK_REGION_L, &o, &r) == TK_OK);
  CHECK(tk_report_valid(r));
  tk_report_free(r);
  o.max_tuck_depth = 1;
  CHECK(tk_validate_tw("TWTTUU", TK_REGION_L, &o, &r) == TK_INVALID);
  tk_report_free(r);
  r = nullptr;
  CHECK(tk_validate_tw("TQ", TK_REGION_L, &o, &r) == TK_ERR_PARSE);
  CHECK(r == nullptr);
}

TEST_CASE("annotation") {
  char* s = nullptr;
  CHECK(tk_clr_annotate("LCRU", 1, &s) == TK_OK);
  CHECK(take(s) == "Lo Ci Ro U");
  CHECK(tk_clr_annotate("LR", 0, &s) == TK_INVALID);
}

TEST_CASE("enumeration through callbacks") {
  std::vector<std::string> got;
  CHECK(tk_enumerate(TK_CLASS_SINGLE, 0, 2, -1, collect, &got) == TK_OK);
  CHECK(got == std::vector<std::string>{"TTU", "WWU"});
  got.clear();
  CHECK(tk_enumerate(TK_CLASS_FULL, 4, 4, -1, collect, &got) == TK_OK);
  CHECK(got.size() == 20);
  got.clear();
  CHECK(tk_enumerate(TK_CLASS_SINGLE, 0, 2, TK_REGION_C, collect, &got) == TK_OK);
  CHECK(got == std::vector<std::string>{"WWU"});

  tk_series* counts = nullptr;
  REQUIRE(tk_count(TK_CLASS_FM, 8, -1, &counts) == TK_OK);
  char* s = nullptr;
  CHECK(tk_series_list(counts, &s) == TK_OK);
  CHECK(take(s) == "0, 0, 1, 1, 3, 5, 11, 21, 43");
  tk_series_free(counts);

  std::vector<std::string> a, b;
  CHECK(tk_sample(TK_CLASS_SINGLE, 8, -1, 4, 42, collect, &a) == TK_OK);
  CHECK(tk_sample(TK_CLASS_SINGLE, 8, -1, 4, 42, collect, &b) == TK_OK);
  CHECK(a.size() == 4);
  CHECK(a == b);
  CHECK(tk_enumerate(TK_CLASS_SINGLE, 0, 30, -1, collect, &got) == TK_ERR_RANGE);
  CHECK(tk_enumerate(TK_CLASS_SINGLE, 0, 3, 5, collect, &got) == TK_ERR_RANGE);
}

TEST_CASE("series") {
  tk_series* fm = nullptr;
  REQUIRE(tk_series_named("fm", 9, &fm) == TK_OK);
  CHECK(tk_series_length(fm) == 10);
  char* s = nullptr;
  CHECK(tk_series_coefficient(fm, 9, &s) == TK_OK);
  CHECK(take(s) == "43");
  CHECK(tk_series_coefficient(fm, 10, &s) == TK_ERR_RANGE);

  tk_series* gf = nullptr;
  REQUIRE(tk_series_expand("z^3/((1+z)(1-2z))", 10, &gf) == TK_OK);
  int equal = 0;
  CHECK(tk_series_compare(fm, gf, &equal, nullptr) == TK_OK);
  CHECK(equal == 1);
  tk_series_free(gf);

  tk_series* parsed = nullptr;
  REQUIRE(tk_series_parse("0, 0, 0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683", &parsed) == TK_OK);
  CHECK(tk_series_fit(parsed, 4, &s) == TK_OK);
  CHECK(take(s) == "z^3/(1 - z - 2z^2)");
  tk_series_free(parsed);
  CHECK(tk_series_parse("1, x", &parsed) == TK_ERR_PARSE);

  tk_series* full = nullptr;
  REQUIRE(tk_series_named("full", 12, &full) == TK_OK);
  CHECK(tk_series_fit(full, 6, &s) == TK_ERR_NOT_FOUND);
  CHECK(tk_series_text(full, &s) == TK_OK);
  CHECK(take(s).rfind("2z^2 + 4z^3 + 20z^4", 0) == 0);
  tk_series_free(full);
  tk_series_free(fm);

  CHECK(tk_series_named("nope", 3, &fm) == TK_ERR_NOT_FOUND);
  CHECK(tk_series_expand("1/(", 3, &fm) == TK_ERR_PARSE);
  CHECK(std::string(tk_series_names()).find("r-final") != std::string::npos);
}

TEST_CASE("census, grammars, registry") {
  char* s = nullptr;
  CHECK(tk_census_csv(4, &s) == TK_OK);
  CHECK(take(s).find("\n4,5,") != std::string::npos);
  int ok = 0;
  CHECK(tk_cross_check(6, &ok, &s) == TK_OK);
  CHECK(ok == 1);
  take(s);

  CHECK(tk_grammar_bnf("fm", &s) == TK_OK);
  CHECK(take(s).find("::=") != std::string::npos);
  CHECK(tk_grammar_bnf("nope", &s) == TK_ERR_NOT_FOUND);
  std::vector<std::string> members;
  CHECK(tk_grammar_generate(
            "single", 3,
            [](const char* m, void* u) {
              static_cast<std::vector<std::string>*>(u)->push_back(m);
              return 1;
            },
            &members) == TK_OK);
  CHECK(members == std::vector<std::string>{"TTU", "WWU"});

  CHECK(tk_registry_list(nullptr, &s) == TK_OK);
  const auto list = take(s);
  CHECK(list.find("Trinity\tL\tTWWWTTTUTTU\tLCLRCRLCURLU\tL-") != std::string::npos);
  CHECK(tk_registry_list("/nonexistent.tsv", &s) != TK_OK);
  CHECK(std::strlen(tk_version()) > 0);
}
