#pragma once

// Knot validity: the five tie axioms, the tuck-window theorem and the
// configurable relaxations used by the enumerations.
//
// A k-fold tuck after winding `position` looks at the last 2k windings (the
// window). The window is tuckable when it starts with W and has
// #W - #T = 2 (mod 3), or starts with T and has #T - #W = 2 (mod 3). For
// k = 1 that is simply "the last two windings are equal". A tuck also needs an
// even number of windings after it, otherwise it would land behind the knot.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tieknot/notation.hpp"

namespace tieknot {

enum class Axiom {
  RegionRepeat,     // Ƭ1
  DirectionRepeat,  // Ƭ2
  TuckPlacement,    // Ƭ3: tucks follow an outward move
  Ending,           // Ƭ4: a knot ends on C or a tuck
  TuckDepth,        // Ƭ5: a k-fold tuck needs 2k preceding windings
  TuckWindow,       // tuck-window theorem
  Limit,            // move/depth caps from ValidityOptions
};

/// "Ƭ1" ... "Ƭ5", "Thm1", "Limit".
std::string_view axiom_id(Axiom a);

struct ValidityOptions {
  bool require_final_tuck = true;
  bool allow_final_center_no_tuck = false;
  /// Experimental: admit tucks behind the knot. Drops the even-remainder
  /// rule and checks each window over plain windings, without bundling.
  bool allow_hidden_tucks = false;
  std::optional<int> max_tuck_depth;
  int max_moves = 13;
};

struct Violation {
  Axiom axiom;
  std::size_t position;  // item index in the checked word
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidityReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  /// "valid", or one "<axiom> at <position>: <message>" line per violation.
  std::string text() const;
  std::string json() const;
};

/// Tuck-window test on a window of windings (any length >= 1).
bool window_tuckable(std::span<const WindDir> window);

/// Tuck-window test for a `depth`-fold tuck after the winding at 1-based
/// `position`. Returns false, rather than throwing, when fewer than 2k
/// windings precede the site.
bool tuck_site_valid(std::span<const WindDir> windings, std::size_t position,
                     int depth);

/// Same check, reporting why a site is rejected.
std::optional<Violation> check_tuck_site(std::span<const WindDir> windings,
                                         std::size_t position, int depth);

/// A tuck after winding `position` of `windings_total` lies on the front of
/// the knot iff the remainder is even.
bool tuck_parity_ok(std::size_t windings_total, std::size_t position,
                    bool allow_hidden_tucks = false);

ValidityReport validate(const KnotWord& k, const ValidityOptions& opts = {});
/// Checks Ƭ1 (and Ƭ2/Ƭ3 where orientations are given) on the region form,
/// then the winding form. Positions refer to region items.
ValidityReport validate(const RegionWord& w, const ValidityOptions& opts = {});

struct TuckSite {
  std::size_t position;
  std::vector<int> depths;  // ascending

  friend bool operator==(const TuckSite&, const TuckSite&) = default;
};

/// Every position of a bare winding sequence that admits a tuck, with all
/// admissible depths. Respects parity (unless hidden tucks are allowed) and
/// the depth cap in `opts`.
std::vector<TuckSite> tuck_sites(std::span<const WindDir> windings,
                                 const ValidityOptions& opts = {});

}  // namespace tieknot
