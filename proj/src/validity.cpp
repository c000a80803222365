#include "tieknot/validity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace tieknot {

std::string_view axiom_id(Axiom a) {
  switch (a) {
    case Axiom::RegionRepeat: return "Ƭ1";
    case Axiom::DirectionRepeat: return "Ƭ2";
    case Axiom::TuckPlacement: return "Ƭ3";
    case Axiom::Ending: return "Ƭ4";
    case Axiom::TuckDepth: return "Ƭ5";
    case Axiom::TuckWindow: return "Thm1";
    case Axiom::Limit: return "Limit";
  }
  return "?";
}

std::string ValidityReport::text() const {
  if (valid()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << '\n';
    os << axiom_id(v.axiom) << " at " << v.position << ": " << v.message;
  }
  return os.str();
}

std::string ValidityReport::json() const {
  nlohmann::json j;
  j["valid"] = valid();
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) {
    j["violations"].push_back({{"axiom", std::string(axiom_id(v.axiom))},
                               {"position", v.position},
                               {"message", v.message}});
  }
  return j.dump();
}

bool window_tuckable(std::span<const WindDir> window) {
  if (window.empty()) return false;
  int t = 0;
  int w = 0;
  for (auto d : window) (d == WindDir::T ? t : w)++;
  const int diff = window.front() == WindDir::T ? t - w : w - t;
  return ((diff % 3) + 3) % 3 == 2;
}

std::optional<Violation> check_tuck_site(std::span<const WindDir> windings,
                                         std::size_t position, int depth) {
  const auto span = static_cast<std::size_t>(2 * depth);
  if (depth < 1 || position > windings.size()) {
    return Violation{Axiom::TuckDepth, position, "no such tuck site"};
  }
  if (position < span) {
    return Violation{Axiom::TuckDepth, position,
                     "a " + std::to_string(depth) + "-fold tuck needs " +
                         std::to_string(span) + " preceding windings"};
  }
  if (!window_tuckable(windings.subspan(position - span, span))) {
    return Violation{Axiom::TuckWindow, position,
                     "last " + std::to_string(span) +
                         " windings do not admit a tuck"};
  }
  return std::nullopt;
}

bool tuck_site_valid(std::span<const WindDir> windings, std::size_t position,
                     int depth) {
  return !check_tuck_site(windings, position, depth).has_value();
}

bool tuck_parity_ok(std::size_t windings_total, std::size_t position,
                    bool allow_hidden_tucks) {
  if (allow_hidden_tucks) return true;
  if (position > windings_total) return false;
  return (windings_total - position) % 2 == 0;
}

namespace {

void check_bundled_tucks(const KnotWord& k, std::span<const WindDir> windings,
                         std::vector<Violation>& out) {
  const auto spans = tuck_spans(k.items());
  for (const auto& s : spans) {
    if (s.short_window) {
      out.push_back({Axiom::TuckDepth, s.item,
                     "a " + std::to_string(s.depth) +
                         "-fold tuck needs " + std::to_string(2 * s.depth) +
                         " preceding windings"});
      continue;
    }
    if (!s.formed || s.starts_on_bundle) {
      out.push_back({Axiom::TuckWindow, s.item,
                     "tuck window begins inside an earlier tuck"});
      continue;
    }
    const auto window =
        windings.subspan(s.first_winding - 1, s.position - s.first_winding + 1);
    if (!window_tuckable(window)) {
      out.push_back({Axiom::TuckWindow, s.item,
                     "windings " + std::to_string(s.first_winding) + ".." +
                         std::to_string(s.position) + " do not admit a " +
                         std::to_string(s.depth) + "-fold tuck"});
    }
  }
}

void check_raw_tucks(const KnotWord& k, std::span<const WindDir> windings,
                     std::vector<Violation>& out) {
  std::size_t position = 0;
  int last_depth_here = 0;
  const auto items = k.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].is_wind()) {
      ++position;
      last_depth_here = 0;
      continue;
    }
    const int depth = items[i].depth;
    if (depth <= last_depth_here) {
      out.push_back({Axiom::TuckWindow, i,
                     "tucks at one site must have increasing depth"});
    }
    last_depth_here = depth;
    if (auto v = check_tuck_site(windings, position, depth)) {
      v->position = i;
      out.push_back(*v);
    }
  }
}

}  // namespace

ValidityReport validate(const KnotWord& k, const ValidityOptions& opts) {
  ValidityReport report;
  auto& out = report.violations;
  const auto windings = k.windings();
  const std::size_t n = windings.size();

  if (k.empty()) {
    out.push_back({Axiom::Ending, 0, "empty word is not a knot"});
    return report;
  }

  if (k.move_count() > static_cast<std::size_t>(opts.max_moves)) {
    out.push_back({Axiom::Limit, k.items().size() - 1,
                   std::to_string(k.move_count()) + " moves exceed the cap of " +
                       std::to_string(opts.max_moves)});
  }

  if (opts.allow_hidden_tucks) {
    check_raw_tucks(k, windings, out);
  } else {
    check_bundled_tucks(k, windings, out);
  }

  std::size_t position = 0;
  const auto items = k.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].is_wind()) {
      ++position;
      continue;
    }
    if (opts.max_tuck_depth && items[i].depth > *opts.max_tuck_depth) {
      out.push_back({Axiom::Limit, i,
                     "tuck depth " + std::to_string(items[i].depth) +
                         " exceeds the cap of " +
                         std::to_string(*opts.max_tuck_depth)});
    }
    if (!tuck_parity_ok(n, position, opts.allow_hidden_tucks)) {
      out.push_back({Axiom::TuckPlacement, i,
                     "tuck after winding " + std::to_string(position) +
                         " follows an inward move (odd number of windings "
                         "remain)"});
    }
  }

  if (opts.require_final_tuck && !k.ends_with_tuck()) {
    const bool centre_ok =
        opts.allow_final_center_no_tuck && final_region(k) == Region::C;
    if (!centre_ok) {
      out.push_back({Axiom::Ending, items.size() - 1,
                     std::string("knot ends in region ") +
                         to_char(final_region(k)) + " without a tuck"});
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return a.position < b.position;
  });
  return report;
}

ValidityReport validate(const RegionWord& w, const ValidityOptions& opts) {
  ValidityReport report;
  auto& out = report.violations;
  const auto items = w.items();
  if (items.empty() || !items.front().is_visit()) {
    out.push_back({Axiom::Ending, 0, "empty word is not a knot"});
    return report;
  }

  bool repeats = false;
  std::optional<std::size_t> prev_visit;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.is_tuck()) {
      if (prev_visit && items[*prev_visit].orientation == Orientation::In) {
        out.push_back({Axiom::TuckPlacement, i, "tuck follows an inward move"});
      }
      continue;
    }
    if (prev_visit) {
      const auto& p = items[*prev_visit];
      if (p.region == it.region) {
        repeats = true;
        out.push_back({Axiom::RegionRepeat, i,
                       std::string("region ") + to_char(it.region) + " repeats"});
      }
      if (p.orientation && it.orientation && *p.orientation == *it.orientation) {
        out.push_back({Axiom::DirectionRepeat, i,
                       std::string("two consecutive ") +
                           (*it.orientation == Orientation::In ? "inward"
                                                               : "outward") +
                           " moves"});
      }
    }
    prev_visit = i;
  }
  if (items.back().is_visit() && items.back().region != Region::C) {
    out.push_back({Axiom::Ending, items.size() - 1,
                   std::string("word ends on ") + to_char(items.back().region) +
                       "; a knot ends on C or a tuck"});
  }

  if (!repeats) {
    // Knot item i corresponds to region item i + 1.
    auto inner = validate(clr_to_tw(w), opts);
    for (auto v : inner.violations) {
      if (v.axiom == Axiom::Ending) continue;  // reported above, in region terms
      v.position += 1;
      out.push_back(std::move(v));
    }
    if (opts.require_final_tuck && items.back().is_visit() &&
        !(opts.allow_final_center_no_tuck && items.back().region == Region::C)) {
      if (items.back().region == Region::C) {
        out.push_back({Axiom::Ending, items.size() - 1,
                       "knot ends on C without a tuck"});
      }
    }
  }

  // Drop duplicates that both passes found.
  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return a.position < b.position;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Violation& a, const Violation& b) {
                          return a.axiom == b.axiom && a.position == b.position;
                        }),
            out.end());
  return report;
}

std::vector<TuckSite> tuck_sites(std::span<const WindDir> windings,
                                 const ValidityOptions& opts) {
  std::vector<TuckSite> sites;
  const std::size_t n = windings.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (!tuck_parity_ok(n, p, opts.allow_hidden_tucks)) continue;
    TuckSite site{p, {}};
    int max_depth = static_cast<int>(p / 2);
    if (opts.max_tuck_depth) max_depth = std::min(max_depth, *opts.max_tuck_depth);
    for (int k = 1; k <= max_depth; ++k) {
      if (tuck_site_valid(windings, p, k)) site.depths.push_back(k);
    }
    if (!site.depths.empty()) sites.push_back(std::move(site));
  }
  return sites;
}

}  // namespace tieknot
