#include <vector>

#include "tieknot/notation.hpp"

namespace tieknot {

namespace {

// A plain winding (weight 1) or a bundle left behind by a tuck (weight 2).
struct Unit {
  std::size_t first_winding;
  int weight;
  std::optional<std::size_t> span;  // owning tuck for bundles
};

}  // namespace

std::vector<TuckSpan> tuck_spans(std::span<const KnotItem> items) {
  std::vector<TuckSpan> spans;
  std::vector<Unit> units;
  std::size_t windings = 0;

  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.is_wind()) {
      ++windings;
      units.push_back({windings, 1, std::nullopt});
      continue;
    }

    TuckSpan s;
    s.item = i;
    s.position = windings;
    s.depth = it.depth;

    const int need = 2 * it.depth;
    int have = 0;
    std::size_t j = units.size();
    while (j > 0 && have < need) {
      --j;
      have += units[j].weight;
    }

    const std::size_t index = spans.size();
    if (have < need) {
      s.short_window = true;
    } else if (have == need) {
      s.formed = true;
      s.first_winding = units[j].first_winding;
      s.starts_on_bundle = units[j].weight == 2;
      for (std::size_t u = j; u < units.size(); ++u) {
        if (units[u].span) spans[*units[u].span].absorbed_by = index;
      }
      units.resize(j);
      units.push_back({s.first_winding, 2, index});
    }
    // have > need: the window would cut a bundle in half; nothing is formed.
    spans.push_back(s);
  }
  return spans;
}

}  // namespace tieknot
