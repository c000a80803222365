#include <limits>
#include <sstream>

#include "tieknot/error.hpp"
#include "tieknot/notation.hpp"
#include "tieknot/validity.hpp"

namespace tieknot {

namespace {

const char* region_name(Region r) {
  switch (r) {
    case Region::L: return "left";
    case Region::C: return "centre";
    case Region::R: return "right";
  }
  return "?";
}

const char* orientation_word(std::optional<Orientation> o) {
  if (!o) return "";
  return *o == Orientation::In ? "inward" : "outward";
}

}  // namespace

std::string render_instructions(const KnotWord& k) {
  ValidityOptions opts;
  opts.max_moves = std::numeric_limits<int>::max();
  const auto report = validate(k, opts);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    throw InvalidKnotError("not a valid knot: " + std::string(axiom_id(v.axiom)) +
                           ": " + v.message);
  }

  const auto clr = infer_orientations(tw_to_clr(k));
  const auto visits = clr.items();
  const auto spans = tuck_spans(k.items());

  std::ostringstream os;
  os << "Start: cross the active blade into the " << region_name(k.start())
     << " region (" << to_char(k.start()) << ", "
     << orientation_word(visits.front().orientation) << ").\n";

  Region at = k.start();
  std::size_t span_index = 0;
  const auto items = k.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    os << i + 1 << ". ";
    const auto& it = items[i];
    if (it.is_wind()) {
      const Region to = step(at, it.dir);
      os << (it.dir == WindDir::T ? "Turnwise" : "Widdershins") << " from "
         << to_char(at) << " to " << to_char(to) << ", "
         << orientation_word(visits[i + 1].orientation) << ".";
      at = to;
    } else {
      const auto& s = spans[span_index++];
      const auto covered = s.position - s.first_winding + 1;
      os << "Tuck";
      if (it.depth > 1) os << " (" << it.depth << "-fold)";
      os << " under the bow made " << covered << " windings ago.";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tieknot
