#pragma once

// Knot names, aesthetics and the registry of named knots.
//
// A single-depth knot is named `<F>-<pattern>.<bits>`: F is the region of
// the final tuck, pattern the 1-based rank of its winding string among the
// winding patterns ending in F (shorter first, then T < W), and bit i-1 of
// `bits` says whether the i-th internal depth-1 tuck site carries a tuck.
//
// Knots with deeper tucks are named `<F>-x<rank>~<pos>:<depth>,...` where
// rank orders all winding strings ending in F the same way and the suffix
// lists every tuck in order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tieknot/notation.hpp"

namespace tieknot {

struct KnotName {
  Region region = Region::L;
  std::uint64_t pattern_index = 1;
  std::uint64_t tuck_bits = 0;
  /// Non-empty for multi-depth names: (winding position, depth) per tuck.
  std::vector<std::pair<std::size_t, int>> tucks;

  bool multi_depth() const noexcept { return !tucks.empty(); }
  std::string to_string() const;
  /// Throws ParseError on malformed text.
  static KnotName parse(std::string_view text);

  friend bool operator==(const KnotName&, const KnotName&) = default;
};

/// Name of a valid knot starting at L. Throws InvalidKnotError otherwise.
KnotName name_of(const KnotWord& k);
/// Inverse of name_of. Throws RangeError for an index or bit pattern that
/// names no knot.
KnotWord knot_of(const KnotName& n);

/// Internal depth-1 tuck sites of a winding string (final position
/// excluded), ascending.
std::vector<std::size_t> internal_sites(std::span<const WindDir> windings);

/// Number of winding patterns with `windings` windings ending in `final`.
std::uint64_t pattern_count(Region final, std::size_t windings);

/// |#R - #L| over the regions visited.
int symmetry(const KnotWord& k);
/// Changes between runs of T and runs of W, ignoring tucks.
int balance(const KnotWord& k);

struct NamedKnot {
  std::string common_name;
  KnotWord tw;
  RegionWord clr;
  std::optional<KnotName> name;  // knots starting at L only
};

/// Built-in named knots.
const std::vector<NamedKnot>& registry();
/// Parses `common_name<TAB>start<TAB>tw` lines; blank lines and `#` comments
/// are skipped. Throws ParseError with the line number on bad input or an
/// invalid knot.
std::vector<NamedKnot> parse_registry(std::string_view text);
std::vector<NamedKnot> load_registry(const std::string& path);
/// Case-insensitive lookup by common name.
std::optional<NamedKnot> find_named(std::string_view common_name,
                                    const std::vector<NamedKnot>& knots = registry());

// Export records.

inline constexpr int kRecordSchemaVersion = 1;

/// One JSON object (no trailing newline) with tw, clr, start, windings,
/// moves, tucks, final_region, tuck_bits, name, symmetry, balance and
/// schema_version. name and tuck_bits are null for knots not starting at L;
/// tuck_bits is null for multi-depth knots.
std::string knot_record_json(const KnotWord& k);
std::string knot_record_csv_header();
std::string knot_record_csv(const KnotWord& k);

}  // namespace tieknot
