#pragma once

// The two tie-knot notations.
//
// A knot is tied by moving the active blade between three regions (Left,
// Centre, Right) and occasionally tucking it under an earlier bow. The
// region notation lists the visited regions (`LCRLRCRLUCRCLU`); the winding
// notation lists only the direction of each transition, Turnwise (T) or
// Widdershins (W), plus a starting region (`TTTWWTTUTTWWU` from L).
//
// Turnwise is the cycle L -> C -> R -> L and Widdershins its inverse. A run
// of k `U` is a single k-fold tuck; `'` separates two tucks whose `U` runs
// would otherwise merge, and marks a tuck that is later bundled into an
// enclosing one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tieknot {

enum class Region : std::uint8_t { L = 0, C = 1, R = 2 };
enum class WindDir : std::uint8_t { T = 0, W = 1 };
enum class Orientation : std::uint8_t { In = 0, Out = 1 };

char to_char(Region r);
char to_char(WindDir d);
char to_char(Orientation o);
std::optional<Region> region_from_char(char c);

/// Region reached from `from` by one winding in direction `d`.
Region step(Region from, WindDir d);
/// Advance `steps` Turnwise steps (negative steps go Widdershins).
Region advance(Region from, int steps);
/// Direction of the transition `from -> to`; empty when `from == to`.
std::optional<WindDir> direction_between(Region from, Region to);
/// Mirror image: swaps L and R, fixes C.
Region reflect(Region r);
WindDir mirror(WindDir d);

/// One symbol of the winding notation.
struct KnotItem {
  enum class Kind : std::uint8_t { Wind, Tuck };

  Kind kind = Kind::Wind;
  WindDir dir = WindDir::T;  // meaningful for Wind
  int depth = 0;             // meaningful for Tuck, >= 1

  static KnotItem wind(WindDir d) { return {Kind::Wind, d, 0}; }
  static KnotItem tuck(int depth) { return {Kind::Tuck, WindDir::T, depth}; }

  bool is_tuck() const noexcept { return kind == Kind::Tuck; }
  bool is_wind() const noexcept { return kind == Kind::Wind; }

  friend bool operator==(const KnotItem&, const KnotItem&) = default;
};

struct KnotMetrics {
  std::size_t winding_count = 0;
  std::size_t move_count = 0;    // winding_count + 1, the number of regions
  std::size_t symbol_count = 0;  // windings + total U count, `'` excluded
  std::size_t tuck_count = 0;
  int max_tuck_depth = 0;
  int net_turn = 0;  // (#T - #W) mod 3, in [0, 3)

  friend bool operator==(const KnotMetrics&, const KnotMetrics&) = default;
};

/// A knot in winding notation: a start region and a sequence of windings
/// and tucks.
class KnotWord {
 public:
  KnotWord() = default;
  explicit KnotWord(Region start, std::vector<KnotItem> items = {});

  Region start() const noexcept { return start_; }
  std::span<const KnotItem> items() const noexcept { return items_; }
  bool empty() const noexcept { return items_.empty(); }

  std::vector<WindDir> windings() const;
  std::size_t winding_count() const noexcept;
  std::size_t move_count() const noexcept { return winding_count() + 1; }
  bool ends_with_tuck() const noexcept {
    return !items_.empty() && items_.back().is_tuck();
  }

  friend bool operator==(const KnotWord&, const KnotWord&) = default;

 private:
  Region start_ = Region::L;
  std::vector<KnotItem> items_;
};

/// One symbol of the region notation, optionally carrying an in/out mark.
struct RegionItem {
  enum class Kind : std::uint8_t { Visit, Tuck };

  Kind kind = Kind::Visit;
  Region region = Region::L;
  std::optional<Orientation> orientation;
  int depth = 0;

  static RegionItem visit(Region r,
                          std::optional<Orientation> o = std::nullopt) {
    return {Kind::Visit, r, o, 0};
  }
  static RegionItem tuck(int depth) {
    return {Kind::Tuck, Region::L, std::nullopt, depth};
  }

  bool is_tuck() const noexcept { return kind == Kind::Tuck; }
  bool is_visit() const noexcept { return kind == Kind::Visit; }

  friend bool operator==(const RegionItem&, const RegionItem&) = default;
};

class RegionWord {
 public:
  RegionWord() = default;
  explicit RegionWord(std::vector<RegionItem> items);

  std::span<const RegionItem> items() const noexcept { return items_; }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t visit_count() const noexcept;
  std::size_t tuck_count() const noexcept;
  /// True when every visit carries an orientation.
  bool fully_oriented() const noexcept;
  /// Drops all orientation marks.
  RegionWord without_orientations() const;

  friend bool operator==(const RegionWord&, const RegionWord&) = default;

 private:
  std::vector<RegionItem> items_;
};

// Parsing and serialization. Whitespace is ignored on input.

KnotWord parse_tw(std::string_view text, Region start = Region::L);
std::string serialize(const KnotWord& k);

RegionWord parse_clr(std::string_view text);

struct ClrStyle {
  bool orientations = true;  // emit i/o marks when present
  bool spaced = false;       // "Ri Co U" instead of "RiCoU"
};
std::string serialize(const RegionWord& w, ClrStyle style = {});

// Conversions and derived quantities.

RegionWord tw_to_clr(const KnotWord& k);
/// Throws InvalidKnotError on an empty word or a repeated region.
KnotWord clr_to_tw(const RegionWord& w);
/// Annotates every visit with in/out by backtracking from the end: the last
/// visit is outward and visits alternate. Throws InvalidKnotError when the
/// word ends on a visit other than C (nothing to backtrack from).
RegionWord infer_orientations(const RegionWord& w);

KnotWord mirror(const KnotWord& k);
Region final_region(const KnotWord& k);
KnotMetrics metrics(const KnotWord& k);

enum class FinalClass : std::uint8_t { ClassicalC, ModernR, ModernL };
FinalClass classify_final(const KnotWord& k);
std::string_view to_string(FinalClass c);

/// Step-by-step tying instructions. Throws InvalidKnotError naming the first
/// violated rule when the knot does not validate.
std::string render_instructions(const KnotWord& k);

// Tuck bundling.
//
// A completed k-fold tuck bundles the windings it spans into one unit that
// counts as a single pair for every later tuck. A later tuck of depth k spans
// the last 2k units; it has to begin on a plain winding, and every bundle it
// swallows becomes part of it (and is written with a trailing `'`).

struct TuckSpan {
  std::size_t item = 0;      // index into the item sequence
  std::size_t position = 0;  // windings before the tuck (1-based index of the
                             // winding it follows)
  int depth = 0;
  bool formed = false;        // a window of exactly 2k units was available
  bool short_window = false;  // fewer than 2k units precede the tuck
  bool starts_on_bundle = false;
  std::size_t first_winding = 0;  // 1-based, valid when formed
  std::optional<std::size_t> absorbed_by;  // index into the span list
};

/// Bundling structure for a sequence of wind/tuck items (tucks only).
std::vector<TuckSpan> tuck_spans(std::span<const KnotItem> items);

}  // namespace tieknot
