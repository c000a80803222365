#pragma once

// Brute-force enumeration of knots, independent of the grammars: every T/W
// winding string is decorated with every tuck assignment that `validate`
// accepts. The grammars and this search referee each other.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tieknot/genfunc.hpp"
#include "tieknot/notation.hpp"
#include "tieknot/validity.hpp"

namespace tieknot {

enum class KnotClass {
  FinkMao,          // C-final, a single final tuck
  WindingPatterns,  // any final region, a single final tuck
  SingleDepth,      // depth-1 tucks anywhere on the front
  Full,             // tucks of any depth
  Hidden,           // depth-1 tucks, front or back
};

std::string_view to_string(KnotClass c);
std::optional<KnotClass> knot_class_from_string(std::string_view s);

/// Called once per knot; return false to stop the enumeration.
using KnotSink = std::function<bool(const KnotWord&)>;

/// Streams every knot (start L) with min_windings..max_windings windings that
/// passes `validate(k, opts)`. `opts.max_moves` is ignored in favour of
/// `max_windings`. Within one winding count knots arrive in canonical order
/// (symbol_less on the serialized form); memory is bounded by one bucket.
/// Returns false if the sink stopped early.
bool oracle_enumerate(int max_windings, const ValidityOptions& opts, const KnotSink& sink,
                      int min_windings = 0);
std::vector<KnotWord> oracle_enumerate(int max_windings, const ValidityOptions& opts);

/// Options that define each class for the oracle.
ValidityOptions class_options(KnotClass c);

/// Streams the knots of a class, optionally restricted to one final region.
bool enumerate_class(KnotClass c, int max_windings, std::optional<Region> final,
                     const KnotSink& sink, int min_windings = 0);

/// Knots of a class by winding count (index = windings), length
/// max_windings + 1.
Series count_class(KnotClass c, int max_windings, std::optional<Region> final = std::nullopt);

/// `count` knots drawn uniformly, with replacement, from a class: indices
/// into the canonical enumeration order are drawn with a seeded
/// mt19937_64 and resolved in one streaming pass. Output is in draw order.
std::vector<KnotWord> sample_class(KnotClass c, int max_windings, std::optional<Region> final,
                                   std::size_t count, std::uint64_t seed);

/// Every T/W string (start L) of 2..max_windings windings whose last two
/// windings are equal, keyed by final region, in (length, T<W) order.
std::map<Region, std::vector<std::string>> winding_patterns(int max_windings);

struct CensusRow {
  int windings = 0;
  int moves = 0;
  std::size_t left_windings = 0;
  std::size_t right_windings = 0;
  std::size_t center_windings = 0;
  std::size_t left_knots = 0;
  std::size_t right_knots = 0;
  std::size_t center_knots = 0;
  std::size_t single_tuck_knots = 0;
  std::size_t total_knots = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// One row per winding count 2..max_windings. Pattern and single-depth
/// columns come from winding_patterns and the depth-1 oracle, total_knots
/// from the unlimited-depth oracle.
std::vector<CensusRow> census(int max_windings);
/// Column sums; windings and moves are zero.
CensusRow census_total(const std::vector<CensusRow>& rows);
/// Header line plus one line per row plus a `total` line.
std::string census_csv(const std::vector<CensusRow>& rows);

struct CrossCheckItem {
  std::string name;
  bool ok = true;
  std::size_t compared = 0;  // members compared
  std::string detail;        // first mismatch, when !ok
};

struct CrossCheckReport {
  std::vector<CrossCheckItem> items;

  bool ok() const;
  std::string text() const;
};

/// Compares oracle sets with grammar-generated sets (after conversion to the
/// grammar's notation) and census counts with grammar counts, for every
/// knot class up to `max_windings`.
CrossCheckReport cross_check(int max_windings);

}  // namespace tieknot
