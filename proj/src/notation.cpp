#include "tieknot/notation.hpp"

#include <algorithm>
#include <cctype>

#include "tieknot/error.hpp"

namespace tieknot {

char to_char(Region r) {
  switch (r) {
    case Region::L: return 'L';
    case Region::C: return 'C';
    case Region::R: return 'R';
  }
  return '?';
}

char to_char(WindDir d) { return d == WindDir::T ? 'T' : 'W'; }

char to_char(Orientation o) { return o == Orientation::In ? 'i' : 'o'; }

std::optional<Region> region_from_char(char c) {
  switch (c) {
    case 'L': return Region::L;
    case 'C': return Region::C;
    case 'R': return Region::R;
    default: return std::nullopt;
  }
}

Region advance(Region from, int steps) {
  int v = (static_cast<int>(from) + steps) % 3;
  if (v < 0) v += 3;
  return static_cast<Region>(v);
}

Region step(Region from, WindDir d) {
  return advance(from, d == WindDir::T ? 1 : -1);
}

std::optional<WindDir> direction_between(Region from, Region to) {
  if (from == to) return std::nullopt;
  return step(from, WindDir::T) == to ? WindDir::T : WindDir::W;
}

Region reflect(Region r) {
  switch (r) {
    case Region::L: return Region::R;
    case Region::R: return Region::L;
    case Region::C: return Region::C;
  }
  return r;
}

WindDir mirror(WindDir d) { return d == WindDir::T ? WindDir::W : WindDir::T; }

// --- KnotWord -------------------------------------------------------------

KnotWord::KnotWord(Region start, std::vector<KnotItem> items)
    : start_(start), items_(std::move(items)) {
  for (const auto& it : items_) {
    if (it.is_tuck() && it.depth < 1) {
      throw InvalidKnotError("tuck depth must be at least 1");
    }
  }
}

std::vector<WindDir> KnotWord::windings() const {
  std::vector<WindDir> out;
  out.reserve(items_.size());
  for (const auto& it : items_) {
    if (it.is_wind()) out.push_back(it.dir);
  }
  return out;
}

std::size_t KnotWord::winding_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      items_.begin(), items_.end(), [](const KnotItem& i) { return i.is_wind(); }));
}

// --- RegionWord -----------------------------------------------------------

RegionWord::RegionWord(std::vector<RegionItem> items) : items_(std::move(items)) {
  for (const auto& it : items_) {
    if (it.is_tuck() && it.depth < 1) {
      throw InvalidKnotError("tuck depth must be at least 1");
    }
  }
}

std::size_t RegionWord::visit_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      items_.begin(), items_.end(), [](const RegionItem& i) { return i.is_visit(); }));
}

std::size_t RegionWord::tuck_count() const noexcept {
  return items_.size() - visit_count();
}

bool RegionWord::fully_oriented() const noexcept {
  return std::all_of(items_.begin(), items_.end(), [](const RegionItem& i) {
    return i.is_tuck() || i.orientation.has_value();
  });
}

RegionWord RegionWord::without_orientations() const {
  auto items = items_;
  for (auto& it : items) it.orientation.reset();
  return RegionWord(std::move(items));
}

// --- parsing ----------------------------------------------------------------

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Shared handling of U runs and separators. `push_tuck` receives each
// completed run.
template <typename PushTuck>
class TuckRunParser {
 public:
  explicit TuckRunParser(PushTuck push) : push_(push) {}

  // Returns true if `c` was consumed.
  bool feed(char c, std::size_t pos, bool have_symbol_before) {
    if (c == 'U') {
      if (!have_symbol_before) {
        throw ParseError("tuck with no preceding winding", pos);
      }
      ++run_;
      after_separator_ = false;
      return true;
    }
    if (c == '\'') {
      if (run_ == 0) throw ParseError("separator must follow a tuck", pos);
      flush();
      after_separator_ = true;
      separator_pos_ = pos;
      return true;
    }
    flush();
    after_separator_ = false;
    return false;
  }

  void finish() {
    if (after_separator_ && run_ == 0) {
      throw ParseError("separator at end of word", separator_pos_);
    }
    flush();
  }

  void flush() {
    if (run_ > 0) push_(run_);
    run_ = 0;
  }

 private:
  PushTuck push_;
  int run_ = 0;
  bool after_separator_ = false;
  std::size_t separator_pos_ = 0;
};

}  // namespace

KnotWord parse_tw(std::string_view text, Region start) {
  std::vector<KnotItem> items;
  auto push = [&items](int depth) { items.push_back(KnotItem::tuck(depth)); };
  TuckRunParser<decltype(push)> tucks(push);
  bool have_wind = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space(c)) continue;
    if (tucks.feed(c, i, have_wind)) continue;
    if (c == 'T' || c == 'W') {
      items.push_back(KnotItem::wind(c == 'T' ? WindDir::T : WindDir::W));
      have_wind = true;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  tucks.finish();
  return KnotWord(start, std::move(items));
}

RegionWord parse_clr(std::string_view text) {
  std::vector<RegionItem> items;
  auto push = [&items](int depth) { items.push_back(RegionItem::tuck(depth)); };
  TuckRunParser<decltype(push)> tucks(push);
  bool have_visit = false;
  bool last_was_visit = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space(c)) continue;
    if (tucks.feed(c, i, have_visit)) {
      last_was_visit = false;
      continue;
    }
    if (auto r = region_from_char(c)) {
      items.push_back(RegionItem::visit(*r));
      have_visit = true;
      last_was_visit = true;
      continue;
    }
    if (c == 'i' || c == 'o') {
      if (!last_was_visit || items.back().orientation) {
        throw ParseError("orientation mark must follow a region", i);
      }
      items.back().orientation = c == 'i' ? Orientation::In : Orientation::Out;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  tucks.finish();
  return RegionWord(std::move(items));
}

// --- serialization ----------------------------------------------------------

namespace {

// Whether a `'` follows the tuck at item index `i`.
std::vector<bool> separator_after(std::span<const KnotItem> items) {
  std::vector<bool> sep(items.size(), false);
  const auto spans = tuck_spans(items);
  for (const auto& s : spans) {
    const bool next_is_tuck =
        s.item + 1 < items.size() && items[s.item + 1].is_tuck();
    sep[s.item] = next_is_tuck || s.absorbed_by.has_value();
  }
  return sep;
}

std::vector<KnotItem> shape_of(std::span<const RegionItem> items) {
  // The first visit is the starting position, every later one a winding.
  std::vector<KnotItem> shape;
  bool seen_visit = false;
  for (const auto& it : items) {
    if (it.is_tuck()) {
      shape.push_back(KnotItem::tuck(it.depth));
    } else if (seen_visit) {
      shape.push_back(KnotItem::wind(WindDir::T));
    } else {
      seen_visit = true;
    }
  }
  return shape;
}

}  // namespace

std::string serialize(const KnotWord& k) {
  const auto items = k.items();
  const auto sep = separator_after(items);
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].is_wind()) {
      out += to_char(items[i].dir);
    } else {
      out.append(static_cast<std::size_t>(items[i].depth), 'U');
      if (sep[i]) out += '\'';
    }
  }
  return out;
}

std::string serialize(const RegionWord& w, ClrStyle style) {
  const auto items = w.items();
  // Map region items onto the winding-shape sequence to reuse the separator
  // rule; a leading visit has no counterpart.
  const auto shape = shape_of(items);
  const auto sep = separator_after(shape);
  std::string out;
  std::size_t shape_index = 0;
  bool seen_visit = false;
  for (const auto& it : items) {
    if (style.spaced && !out.empty()) out += ' ';
    if (it.is_visit()) {
      out += to_char(it.region);
      if (style.orientations && it.orientation) out += to_char(*it.orientation);
      if (seen_visit) ++shape_index;
      seen_visit = true;
    } else {
      out.append(static_cast<std::size_t>(it.depth), 'U');
      if (sep[shape_index]) out += '\'';
      ++shape_index;
    }
  }
  return out;
}

// --- conversions ------------------------------------------------------------

RegionWord tw_to_clr(const KnotWord& k) {
  std::vector<RegionItem> items;
  items.reserve(k.items().size() + 1);
  Region at = k.start();
  items.push_back(RegionItem::visit(at));
  for (const auto& it : k.items()) {
    if (it.is_wind()) {
      at = step(at, it.dir);
      items.push_back(RegionItem::visit(at));
    } else {
      items.push_back(RegionItem::tuck(it.depth));
    }
  }
  return RegionWord(std::move(items));
}

KnotWord clr_to_tw(const RegionWord& w) {
  const auto items = w.items();
  if (items.empty() || !items.front().is_visit()) {
    throw InvalidKnotError("region word must start with a region");
  }
  std::vector<KnotItem> out;
  out.reserve(items.size());
  Region at = items.front().region;
  for (std::size_t i = 1; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.is_tuck()) {
      out.push_back(KnotItem::tuck(it.depth));
      continue;
    }
    const auto dir = direction_between(at, it.region);
    if (!dir) {
      throw InvalidKnotError(std::string("region ") + to_char(at) +
                             " repeats at symbol " + std::to_string(i + 1));
    }
    out.push_back(KnotItem::wind(*dir));
    at = it.region;
  }
  return KnotWord(items.front().region, std::move(out));
}

RegionWord infer_orientations(const RegionWord& w) {
  auto items = std::vector<RegionItem>(w.items().begin(), w.items().end());
  if (items.empty()) throw InvalidKnotError("cannot orient an empty word");
  if (items.back().is_visit() && items.back().region != Region::C) {
    throw InvalidKnotError(
        "word ends on a region other than C without a tuck; it cannot be "
        "oriented");
  }
  Orientation next = Orientation::Out;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    if (!it->is_visit()) continue;
    it->orientation = next;
    next = next == Orientation::Out ? Orientation::In : Orientation::Out;
  }
  return RegionWord(std::move(items));
}

KnotWord mirror(const KnotWord& k) {
  std::vector<KnotItem> items(k.items().begin(), k.items().end());
  for (auto& it : items) {
    if (it.is_wind()) it.dir = mirror(it.dir);
  }
  return KnotWord(reflect(k.start()), std::move(items));
}

KnotMetrics metrics(const KnotWord& k) {
  KnotMetrics m;
  int turn = 0;
  for (const auto& it : k.items()) {
    if (it.is_wind()) {
      ++m.winding_count;
      ++m.symbol_count;
      turn += it.dir == WindDir::T ? 1 : -1;
    } else {
      ++m.tuck_count;
      m.symbol_count += static_cast<std::size_t>(it.depth);
      m.max_tuck_depth = std::max(m.max_tuck_depth, it.depth);
    }
  }
  m.move_count = m.winding_count + 1;
  m.net_turn = ((turn % 3) + 3) % 3;
  return m;
}

Region final_region(const KnotWord& k) {
  return advance(k.start(), metrics(k).net_turn);
}

FinalClass classify_final(const KnotWord& k) {
  switch (final_region(k)) {
    case Region::C: return FinalClass::ClassicalC;
    case Region::R: return FinalClass::ModernR;
    case Region::L: return FinalClass::ModernL;
  }
  return FinalClass::ClassicalC;
}

std::string_view to_string(FinalClass c) {
  switch (c) {
    case FinalClass::ClassicalC: return "Classical-C";
    case FinalClass::ModernR: return "Modern-R";
    case FinalClass::ModernL: return "Modern-L";
  }
  return "?";
}

}  // namespace tieknot
