#include <sstream>

#include <json.hpp>

#include "tieknot/catalog.hpp"
#include "tieknot/error.hpp"

namespace tieknot {

namespace {

struct Record {
  std::string tw;
  std::string clr;
  char start;
  std::size_t windings;
  std::size_t moves;
  std::size_t tucks;
  char final;
  std::optional<std::uint64_t> tuck_bits;
  std::optional<std::string> name;
  int symmetry;
  int balance;
};

Record make_record(const KnotWord& k) {
  const auto m = metrics(k);
  Record r{serialize(k),
           serialize(tw_to_clr(k), ClrStyle{false, false}),
           to_char(k.start()),
           m.winding_count,
           m.move_count,
           m.tuck_count,
           to_char(final_region(k)),
           std::nullopt,
           std::nullopt,
           symmetry(k),
           balance(k)};
  if (k.start() == Region::L) {
    try {
      const auto n = name_of(k);
      r.name = n.to_string();
      if (!n.multi_depth()) r.tuck_bits = n.tuck_bits;
    } catch (const InvalidKnotError&) {
      // Words that are not knots are exported without a name.
    }
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string knot_record_json(const KnotWord& k) {
  const auto r = make_record(k);
  nlohmann::ordered_json j;
  j["tw"] = r.tw;
  j["clr"] = r.clr;
  j["start"] = std::string(1, r.start);
  j["windings"] = r.windings;
  j["moves"] = r.moves;
  j["tucks"] = r.tucks;
  j["final_region"] = std::string(1, r.final);
  j["tuck_bits"] = r.tuck_bits ? nlohmann::ordered_json(*r.tuck_bits) : nullptr;
  j["name"] = r.name ? nlohmann::ordered_json(*r.name) : nullptr;
  j["symmetry"] = r.symmetry;
  j["balance"] = r.balance;
  j["schema_version"] = kRecordSchemaVersion;
  return j.dump();
}

std::string knot_record_csv_header() {
  return "tw,clr,start,windings,moves,tucks,final_region,tuck_bits,name,symmetry,balance";
}

std::string knot_record_csv(const KnotWord& k) {
  const auto r = make_record(k);
  std::ostringstream os;
  os << csv_field(r.tw) << ',' << r.clr << ',' << r.start << ',' << r.windings << ','
     << r.moves << ',' << r.tucks << ',' << r.final << ','
     << (r.tuck_bits ? std::to_string(*r.tuck_bits) : "") << ','
     << (r.name ? csv_field(*r.name) : "") << ',' << r.symmetry << ',' << r.balance;
  return os.str();
}

}  // namespace tieknot
