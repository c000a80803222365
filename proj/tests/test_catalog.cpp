#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "tieknot/catalog.hpp"
#include "tieknot/enumeration.hpp"
#include "tieknot/error.hpp"
#include "tieknot/validity.hpp"

using namespace tieknot;

namespace {

const KnotWord eldredge = parse_tw("TTTWWTTUTTWWU");
const KnotWord trinity = parse_tw("TWWWTTTUTTU");

}  // namespace

TEST_CASE("names of the named knots") {
  const auto e = name_of(eldredge);
  CHECK(e.region == Region::L);
  CHECK(e.tuck_bits == 4);
  const auto t = name_of(trinity);
  CHECK(t.region == Region::L);
  CHECK(t.tuck_bits == 2);
  CHECK(t.to_string().ends_with(".2"));
  CHECK(knot_of(e) == eldredge);
  CHECK(knot_of(t) == trinity);
}

TEST_CASE("knot_of") {
  CHECK(serialize(knot_of(KnotName::parse("R-1.0"))) == "TTU");
  CHECK(serialize(knot_of(KnotName::parse("C-1.0"))) == "WWU");
  // L patterns start TTT, WWW (no internal sites), then TTWW with one site.
  CHECK(serialize(knot_of(KnotName::parse("L-1.0"))) == "TTTU");
  CHECK_THROWS_AS(knot_of(KnotName::parse("L-1.1")), RangeError);
  CHECK(serialize(knot_of(KnotName::parse("L-3.1"))) == "TTUWWU");
  CHECK_THROWS_AS(knot_of(KnotName::parse("L-1.2")), RangeError);
  CHECK_THROWS_AS(knot_of(KnotName::parse("R-0.0")), RangeError);
}

TEST_CASE("KnotName text") {
  const auto n = KnotName::parse("L-373.4");
  CHECK(n.pattern_index == 373);
  CHECK(n.tuck_bits == 4);
  CHECK(n.to_string() == "L-373.4");
  const auto m = KnotName::parse("C-x12~4:1,4:2");
  CHECK(m.multi_depth());
  CHECK(m.tucks == std::vector<std::pair<std::size_t, int>>{{4, 1}, {4, 2}});
  CHECK(m.to_string() == "C-x12~4:1,4:2");
  for (const char* bad : {"", "Q-1.0", "L-", "L-1", "L-1.", "L-x1", "L-x1~", "L-1.0junk"}) {
    INFO(bad);
    CHECK_THROWS_AS(KnotName::parse(bad), ParseError);
  }
}

TEST_CASE("multi-depth names round trip") {
  enumerate_class(KnotClass::Full, 7, std::nullopt, [](const KnotWord& k) {
    const auto n = name_of(k);
    CHECK(n.multi_depth() == (metrics(k).max_tuck_depth > 1));
    CHECK(knot_of(KnotName::parse(n.to_string())) == k);
    return true;
  });
}

TEST_CASE("name_of rejects invalid knots and other starts") {
  CHECK_THROWS_AS(name_of(parse_tw("TWU")), InvalidKnotError);
  CHECK_THROWS_AS(name_of(parse_tw("TTU", Region::R)), InvalidKnotError);
}

TEST_CASE("pattern counts") {
  CHECK(pattern_count(Region::R, 2) == 1);
  CHECK(pattern_count(Region::L, 2) == 0);
  CHECK(pattern_count(Region::L, 4) == 2);
  CHECK(pattern_count(Region::C, 12) == 683);
}

TEST_CASE("every pattern has 2^sites knots") {
  for (const auto& [region, list] : winding_patterns(8)) {
    for (const auto& s : list) {
      const auto sites = internal_sites(parse_tw(s).windings());
      std::set<std::string> seen;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sites.size()); ++bits) {
        KnotName n;
        n.region = region;
        n.pattern_index = name_of(parse_tw(s + "U")).pattern_index;
        n.tuck_bits = bits;
        const auto k = knot_of(n);
        CHECK(validate(k, class_options(KnotClass::SingleDepth)).valid());
        CHECK(seen.insert(serialize(k)).second);
        CHECK(name_of(k) == n);
      }
    }
  }
}

TEST_CASE("aesthetics") {
  CHECK(symmetry(eldredge) == 0);
  CHECK(balance(eldredge) == 3);
  CHECK(symmetry(trinity) == 1);
  CHECK(balance(trinity) == 2);
  CHECK(symmetry(parse_tw("TTU")) == 0);
  CHECK(balance(parse_tw("TTU")) == 0);
  CHECK(symmetry(mirror(trinity)) == symmetry(trinity));
  CHECK(balance(mirror(eldredge)) == balance(eldredge));
}

TEST_CASE("registry") {
  CHECK(find_named("Trinity")->tw == trinity);
  CHECK(find_named("eldredge")->tw == eldredge);
  CHECK_FALSE(find_named("Nonexistent").has_value());
  const auto parsed = parse_registry(
      "# comment\n"
      "\n"
      "Four-in-hand\tL\tWTTU\n"
      "Backwards\tR\tTTU\n");
  REQUIRE(parsed.size() == 2);
  CHECK(serialize(parsed[0].clr) == "LRLCU");
  CHECK(parsed[0].name.has_value());
  CHECK_FALSE(parsed[1].name.has_value());
  CHECK(find_named("four-in-hand", parsed).has_value());
  CHECK_THROWS_AS(parse_registry("Bad\tL\tTWU\n"), ParseError);
  CHECK_THROWS_AS(parse_registry("Bad\tL\n"), ParseError);
  CHECK_THROWS_AS(parse_registry("Bad\tX\tTTU\n"), ParseError);
  CHECK_THROWS_AS(load_registry("/nonexistent/registry.tsv"), Error);
}

TEST_CASE("records") {
  const auto j = nlohmann::json::parse(knot_record_json(trinity));
  CHECK(j["tw"] == "TWWWTTTUTTU");
  CHECK(j["clr"] == "LCLRCRLCURLU");
  CHECK(j["start"] == "L");
  CHECK(j["windings"] == 9);
  CHECK(j["moves"] == 10);
  CHECK(j["final_region"] == "L");
  CHECK(j["tuck_bits"] == 2);
  CHECK(j["symmetry"] == 1);
  CHECK(j["balance"] == 2);
  CHECK(j["schema_version"] == kRecordSchemaVersion);
  CHECK(j["name"].get<std::string>().ends_with(".2"));

  const auto m = nlohmann::json::parse(knot_record_json(mirror(trinity)));
  CHECK(m["start"] == "R");
  CHECK(m["name"].is_null());
  CHECK(m["tuck_bits"].is_null());

  const auto d = nlohmann::json::parse(knot_record_json(parse_tw("TWTTUU")));
  CHECK(d["tuck_bits"].is_null());
  CHECK(d["name"].get<std::string>().find('~') != std::string::npos);

  const auto header = knot_record_csv_header();
  const auto row = knot_record_csv(trinity);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  CHECK(row.rfind("TWWWTTTUTTU,LCLRCRLCURLU,L,9,10,", 0) == 0);
}
