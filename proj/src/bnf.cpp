#include <cctype>
#include <sstream>

#include "tieknot/error.hpp"
#include "tieknot/grammar.hpp"

namespace tieknot {

std::string to_bnf(const Grammar& g) {
  std::ostringstream os;
  if (!g.name.empty()) os << "# grammar: " << g.name << '\n';
  os << "# start: " << g.start << '\n';
  os << "# weights:";
  for (const auto& [c, w] : g.weights) os << ' ' << c << '=' << w;
  os << '\n';
  os << "# offset: " << g.size_offset << '\n';
  for (const auto& p : g.productions) {
    os << '<' << p.lhs << "> ::=";
    for (std::size_t a = 0; a < p.alternatives.size(); ++a) {
      if (a) os << " |";
      const auto& alt = p.alternatives[a];
      if (alt.empty()) os << " \"\"";
      for (const auto& s : alt) {
        if (s.is_terminal()) {
          os << " \"" << s.text << '"';
        } else {
          os << " <" << s.text << '>';
        }
      }
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

void parse_header(Grammar& g, std::string_view body, bool& saw_weights,
                  std::size_t offset) {
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) return;  // plain comment
  const auto key = trim(body.substr(0, colon));
  const auto value = trim(body.substr(colon + 1));
  if (key == "grammar") {
    g.name = value;
  } else if (key == "start") {
    g.start = value;
  } else if (key == "offset") {
    try {
      g.size_offset = std::stoi(value);
    } catch (const std::exception&) {
      throw ParseError("bad offset '" + value + "'", offset);
    }
  } else if (key == "weights") {
    saw_weights = true;
    std::istringstream is(value);
    std::string item;
    while (is >> item) {
      if (item.size() < 3 || item[1] != '=') {
        throw ParseError("bad weight '" + item + "'", offset);
      }
      try {
        g.weights[item[0]] = std::stoi(item.substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad weight '" + item + "'", offset);
      }
    }
  }
}

}  // namespace

Grammar parse_bnf(std::string_view text) {
  Grammar g;
  bool saw_weights = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const auto line = text.substr(line_start, line_end - line_start);
    const std::size_t base = line_start;
    line_start = line_end + 1;

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    if (i == line.size()) continue;
    if (line[i] == '#') {
      parse_header(g, line.substr(i + 1), saw_weights, base + i);
      continue;
    }

    auto read_name = [&]() -> std::string {
      if (line[i] != '<') throw ParseError("expected '<'", base + i);
      const auto close = line.find('>', i);
      if (close == std::string_view::npos) throw ParseError("unterminated '<'", base + i);
      auto name = std::string(line.substr(i + 1, close - i - 1));
      if (name.empty()) throw ParseError("empty nonterminal name", base + i);
      i = close + 1;
      return name;
    };

    Production p{read_name(), {}};
    skip_ws();
    if (line.substr(i, 3) != "::=") throw ParseError("expected '::='", base + i);
    i += 3;
    Alternative alt;
    for (;;) {
      skip_ws();
      if (i == line.size()) break;
      if (line[i] == '|') {
        p.alternatives.push_back(std::move(alt));
        alt.clear();
        ++i;
      } else if (line[i] == '"') {
        const auto close = line.find('"', i + 1);
        if (close == std::string_view::npos) throw ParseError("unterminated string", base + i);
        auto chars = std::string(line.substr(i + 1, close - i - 1));
        if (!chars.empty()) alt.push_back(GrammarSymbol::terminal(std::move(chars)));
        i = close + 1;
      } else if (line[i] == '<') {
        alt.push_back(GrammarSymbol::nonterminal(read_name()));
      } else {
        throw ParseError(std::string("unexpected '") + line[i] + "'", base + i);
      }
    }
    p.alternatives.push_back(std::move(alt));

    if (g.start.empty()) g.start = p.lhs;
    bool merged = false;
    for (auto& q : g.productions) {
      if (q.lhs == p.lhs) {
        q.alternatives.insert(q.alternatives.end(), p.alternatives.begin(), p.alternatives.end());
        merged = true;
      }
    }
    if (!merged) g.productions.push_back(std::move(p));
  }

  if (g.productions.empty()) throw ParseError("no productions", 0);
  if (!saw_weights) {
    for (const auto& p : g.productions) {
      for (const auto& alt : p.alternatives) {
        for (const auto& s : alt) {
          if (s.is_terminal()) {
            for (char c : s.text) g.weights.emplace(c, 1);
          }
        }
      }
    }
  }
  g.check();
  return g;
}

}  // namespace tieknot
