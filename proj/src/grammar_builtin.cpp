#include <array>
#include <string>

#include "tieknot/grammar.hpp"

namespace tieknot {

Grammar fm_grammar() {
  return parse_bnf(R"(# grammar: fm
# weights: L=1 C=1 R=1 U=0
# offset: 0
<tie> ::= "L" <lastL>
<lastR> ::= "L" <lastL> | "C" <lastC> | "LCU"
<lastL> ::= "R" <lastR> | "C" <lastC> | "RCU"
<lastC> ::= "L" <lastL> | "R" <lastR>
)");
}

Grammar single_tuck_tw_grammar() {
  return parse_bnf(R"(# grammar: single
# weights: T=1 W=1 U=0
# offset: 1
<tie> ::= <prefix> <body> <tuck>
<prefix> ::= "T" | "W" | ""
<body> ::= <pair> <body> | <tuck> <body> | ""
<pair> ::= "TT" | "TW" | "WT" | "WW"
<tuck> ::= "TTU" | "WWU"
)");
}

namespace {

constexpr std::array<Region, 3> kRegions{Region::L, Region::C, Region::R};

Region third(Region a, Region b) {
  for (auto r : kRegions) {
    if (r != a && r != b) return r;
  }
  return a;
}

std::string last(Region r) { return std::string("<last") + to_char(r) + ">"; }

std::string quoted(std::initializer_list<char> cs) {
  return "\"" + std::string(cs) + "\"";
}

}  // namespace

Grammar single_tuck_clr_grammar(std::optional<Region> final) {
  std::string text = "# grammar: single-clr";
  if (final) text += std::string("-") + to_char(*final);
  text += "\n# weights: L=1 C=1 R=1 U=0\n# offset: 0\n";
  text += R"(<tie> ::= "L" <lastL> | "LR" <lastR> | "LC" <lastC>)";
  text += '\n';
  // From region y every two-step excursion y -> a -> b is a pair; when a and
  // b are both different from y the pair is tuckable (equal windings).
  for (auto y : kRegions) {
    std::string line = last(y) + " ::=";
    const char* sep = " ";
    for (auto a : kRegions) {
      if (a == y) continue;
      for (auto b : kRegions) {
        if (b == a) continue;
        line += sep + quoted({to_char(a), to_char(b)}) + " " + last(b);
        sep = " | ";
      }
    }
    for (auto a : kRegions) {
      if (a == y) continue;
      const Region b = third(y, a);
      line += " | " + quoted({to_char(a), to_char(b), 'U'}) + " " + last(b);
      if (!final || *final == b) line += " | " + quoted({to_char(a), to_char(b), 'U'});
    }
    text += line + '\n';
  }
  return parse_bnf(text);
}

Grammar winding_pattern_grammar(Region final) {
  std::string text = std::string("# grammar: patterns-") + to_char(final) +
                     "\n# weights: L=1 C=1 R=1 U=0\n# offset: 0\n";
  text += "<tie> ::= \"L\" <lastL>\n";
  for (auto y : kRegions) {
    std::string line = last(y) + " ::=";
    const char* sep = " ";
    for (auto a : kRegions) {
      if (a == y) continue;
      line += sep + quoted({to_char(a)}) + " " + last(a);
      sep = " | ";
    }
    if (y != final) {
      line += " | " + quoted({to_char(third(y, final)), to_char(final), 'U'});
    }
    text += line + '\n';
  }
  return parse_bnf(text);
}

Grammar full_grammar() {
  return parse_bnf(R"(# grammar: full
# weights: T=1 W=1 U=0 '=0
# offset: 0
<tie> ::= <prefix> <body> <tuck>
<prefix> ::= "T" | "W" | ""
<body> ::= <pair> <body> | <tuck> <body> | ""
<pair> ::= "TT" | "TW" | "WT" | "WW"
<tuck> ::= <ttuck2> | <wtuck2>
<ttuck2> ::= "TT" <w0> "U" | "TW" <w1> "U"
<wtuck2> ::= "WW" <w0> "U" | "WT" <w2> "U"
<w0> ::= "WW" <w1> "U" | "WT" <w0> "U" | "TW" <w0> "U" | "TT" <w2> "U" | <ttuck2> "'" <w2> "U" | <wtuck2> "'" <w1> "U" | ""
<w1> ::= "WW" <w2> "U" | "WT" <w1> "U" | "TW" <w1> "U" | "TT" <w0> "U" | <ttuck2> "'" <w0> "U" | <wtuck2> "'" <w2> "U"
<w2> ::= "WW" <w0> "U" | "WT" <w2> "U" | "TW" <w2> "U" | "TT" <w1> "U" | <ttuck2> "'" <w1> "U" | <wtuck2> "'" <w0> "U"
)");
}

Grammar hidden_tuck_grammar() {
  // aX: last winding X, no tuck may follow.
  // bX: last two windings are XX, so a tuck may follow.
  return parse_bnf(R"(# grammar: hidden
# weights: T=1 W=1 U=0
# offset: 1
<tie> ::= "T" <aT> | "W" <aW>
<aT> ::= "T" <bT> | "W" <aW>
<aW> ::= "W" <bW> | "T" <aT>
<bT> ::= "T" <bT> | "W" <aW> | "U" <aT> | "U"
<bW> ::= "W" <bW> | "T" <aT> | "U" <aW> | "U"
)");
}

std::vector<std::string_view> series_names() {
  return {"fm",         "single",     "r-final",    "c-final", "l-final",
          "windings-r", "windings-c", "windings-l", "full",    "hidden"};
}

std::optional<Grammar> series_grammar(std::string_view which) {
  if (which == "fm") return fm_grammar();
  if (which == "single") return single_tuck_tw_grammar();
  if (which == "r-final") return single_tuck_clr_grammar(Region::R);
  if (which == "c-final") return single_tuck_clr_grammar(Region::C);
  if (which == "l-final") return single_tuck_clr_grammar(Region::L);
  if (which == "windings-r") return winding_pattern_grammar(Region::R);
  if (which == "windings-c") return winding_pattern_grammar(Region::C);
  if (which == "windings-l") return winding_pattern_grammar(Region::L);
  if (which == "full") return full_grammar();
  if (which == "hidden") return hidden_tuck_grammar();
  return std::nullopt;
}

std::vector<std::string_view> grammar_names() {
  auto names = series_names();
  for (std::string_view n : {"single-clr", "single-clr-L", "single-clr-C", "single-clr-R",
                             "patterns-L", "patterns-C", "patterns-R"}) {
    names.push_back(n);
  }
  return names;
}

std::optional<Grammar> grammar_by_name(std::string_view which) {
  if (auto g = series_grammar(which)) return g;
  if (which == "single-clr") return single_tuck_clr_grammar();
  for (auto r : kRegions) {
    if (which == std::string("single-clr-") + to_char(r)) return single_tuck_clr_grammar(r);
    if (which == std::string("patterns-") + to_char(r)) return winding_pattern_grammar(r);
  }
  return std::nullopt;
}

}  // namespace tieknot
