#pragma once

// Weighted context-free grammars over the knot alphabets, their generation
// and counting, and the finite automaton for single-depth knots.
//
// The size of a string is the sum of its terminal weights plus the grammar's
// size offset. Offsets let a grammar over windings report sizes in moves.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tieknot/genfunc.hpp"
#include "tieknot/notation.hpp"

namespace tieknot {

struct GrammarSymbol {
  enum class Kind : std::uint8_t { Terminal, Nonterminal };

  Kind kind = Kind::Terminal;
  std::string text;  // terminal characters, or the nonterminal name

  static GrammarSymbol terminal(std::string chars) {
    return {Kind::Terminal, std::move(chars)};
  }
  static GrammarSymbol nonterminal(std::string name) {
    return {Kind::Nonterminal, std::move(name)};
  }
  bool is_terminal() const noexcept { return kind == Kind::Terminal; }

  friend bool operator==(const GrammarSymbol&, const GrammarSymbol&) = default;
};

using Alternative = std::vector<GrammarSymbol>;  // empty = epsilon

struct Production {
  std::string lhs;
  std::vector<Alternative> alternatives;

  friend bool operator==(const Production&, const Production&) = default;
};

struct Grammar {
  std::string name;
  std::string start;
  std::vector<Production> productions;
  std::map<char, int> weights;  // every terminal character must be listed
  int size_offset = 0;

  const Production* find(std::string_view lhs) const;
  /// Throws GrammarError on a dangling nonterminal, an unweighted or
  /// negatively weighted terminal, or a missing start production.
  void check() const;
  /// Size of a terminal string under this grammar's weights and offset.
  int size_of(std::string_view s) const;

  friend bool operator==(const Grammar&, const Grammar&) = default;
};

// Built-in grammars.

/// Region-notation grammar with only a final tuck. L, C, R weigh 1, U 0.
Grammar fm_grammar();
/// Single-depth knots in winding notation. T, W weigh 1, U 0, offset 1, so
/// sizes are moves.
Grammar single_tuck_tw_grammar();
/// Single-depth knots in region notation; `final` restricts the region of
/// the final tuck. L, C, R weigh 1, U 0.
Grammar single_tuck_clr_grammar(std::optional<Region> final = std::nullopt);
/// Arbitrary-depth knots. T, W weigh 1, U and `'` 0, so sizes are windings.
Grammar full_grammar();
/// Winding patterns (a final depth-1 tuck, nothing else) ending in `final`,
/// in region notation. L, C, R weigh 1, U 0.
Grammar winding_pattern_grammar(Region final);
/// Depth-1 knots with tucks allowed behind the knot (no parity rule,
/// overlapping windows). T, W weigh 1, U 0, offset 1.
Grammar hidden_tuck_grammar();

/// Grammar behind a named counting series: fm, single, r-final, c-final,
/// l-final, windings-r, windings-c, windings-l, full, hidden. Empty for an
/// unknown name.
std::optional<Grammar> series_grammar(std::string_view which);
std::vector<std::string_view> series_names();

/// Grammar by name: the series names above plus single-clr, single-clr-L/C/R
/// and patterns-L/C/R.
std::optional<Grammar> grammar_by_name(std::string_view which);
std::vector<std::string_view> grammar_names();

// Generation and counting.

/// Members of size <= max_size, ordered by size then lexicographically with
/// L < C < R < T < W < U < '. Throws GrammarError on a size-0 cycle.
std::vector<std::string> generate(const Grammar& g, int max_size);
/// Members of exactly `size`, in the same order.
std::vector<std::string> generate_bucket(const Grammar& g, int size);
/// Number of derivations by size, coefficients 0..max_size. Equals the
/// number of members for unambiguous grammars.
Series count_by_size(const Grammar& g, int max_size);

/// Orders strings by length-independent symbol rank (L<C<R<T<W<U<').
bool symbol_less(std::string_view a, std::string_view b);

// BNF text: `<lhs> ::= "T" <x> | ""`, one production per line, preceded by
// `# grammar:`, `# start:`, `# weights:` and `# offset:` header comments.

std::string to_bnf(const Grammar& g);
Grammar parse_bnf(std::string_view text);

// Finite automata.

struct Automaton {
  struct Edge {
    std::size_t from;
    std::string label;  // empty = epsilon; several characters = a chain
    std::size_t to;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::vector<std::string> states;
  std::size_t initial = 0;
  std::set<std::size_t> accepting;
  std::vector<Edge> edges;

  bool accepts(std::string_view input) const;
  /// Deterministic automaton over single characters (subset construction
  /// after expanding chains into fresh states). Dead states are dropped.
  Automaton determinize() const;
  bool deterministic() const;
  /// Accepted strings by weighted size, via the transfer matrix of the
  /// determinized machine. Throws GrammarError on a zero-weight cycle.
  Series count_by_size(const std::map<char, int>& weights, int size_offset,
                       int max_size) const;
};

/// The five-state machine for single-depth knots in winding notation.
Automaton single_tuck_automaton();

}  // namespace tieknot
