#include "tieknot/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <climits>
#include <fstream>
#include <sstream>

#include "tieknot/error.hpp"
#include "tieknot/validity.hpp"

namespace tieknot {

namespace {

constexpr std::size_t kMaxNamedWindings = 62;

// Number of T/W strings of total length `len` that extend `prefix`, end in
// `final` when started from L and, with `need_pair`, end in two equal
// windings.
std::uint64_t completions(std::span<const WindDir> prefix, std::size_t len, Region final,
                          bool need_pair) {
  if (prefix.size() > len) return 0;
  // state: net turn mod 3, last winding (0 none, 1 T, 2 W), last two equal
  using Table = std::array<std::array<std::array<std::uint64_t, 2>, 3>, 3>;
  Table cur{};
  int net = 0;
  int last = 0;
  bool eq = false;
  for (auto d : prefix) {
    const int c = d == WindDir::T ? 1 : 2;
    eq = c == last;
    last = c;
    net = (net + (d == WindDir::T ? 1 : 2)) % 3;
  }
  cur[net][last][eq] = 1;
  for (std::size_t step = prefix.size(); step < len; ++step) {
    Table next{};
    for (int n = 0; n < 3; ++n) {
      for (int l = 0; l < 3; ++l) {
        for (int e = 0; e < 2; ++e) {
          const auto v = cur[n][l][e];
          if (!v) continue;
          next[(n + 1) % 3][1][l == 1] += v;
          next[(n + 2) % 3][2][l == 2] += v;
        }
      }
    }
    cur = next;
  }
  std::uint64_t total = 0;
  const int target = static_cast<int>(final);
  for (int l = 0; l < 3; ++l) {
    total += cur[target][l][1];
    if (!need_pair) total += cur[target][l][0];
  }
  return total;
}

std::uint64_t rank_of(std::span<const WindDir> s, Region final, bool need_pair) {
  std::uint64_t rank = 1;
  for (std::size_t m = 2; m < s.size(); ++m) rank += completions({}, m, final, need_pair);
  std::vector<WindDir> prefix;
  for (auto d : s) {
    if (d == WindDir::W) {
      prefix.push_back(WindDir::T);
      rank += completions(prefix, s.size(), final, need_pair);
      prefix.back() = WindDir::W;
    } else {
      prefix.push_back(d);
    }
  }
  return rank;
}

std::vector<WindDir> unrank(std::uint64_t index, Region final, bool need_pair) {
  if (index == 0) throw RangeError("indices start at 1");
  std::size_t len = 2;
  for (;; ++len) {
    if (len > kMaxNamedWindings) throw RangeError("index is too large");
    const auto c = completions({}, len, final, need_pair);
    if (index <= c) break;
    index -= c;
  }
  std::vector<WindDir> s;
  for (std::size_t i = 0; i < len; ++i) {
    s.push_back(WindDir::T);
    const auto c = completions(s, len, final, need_pair);
    if (index > c) {
      index -= c;
      s.back() = WindDir::W;
    }
  }
  return s;
}

ValidityOptions naming_options() {
  ValidityOptions o;
  o.max_moves = INT_MAX;
  return o;
}

std::uint64_t parse_number(std::string_view text, std::size_t& i, std::string_view whole) {
  std::uint64_t v = 0;
  const auto* begin = whole.data() + i;
  const auto [ptr, ec] = std::from_chars(begin, whole.data() + whole.size(), v);
  if (ec != std::errc() || ptr == begin) throw ParseError("expected a number in name '" + std::string(text) + "'", i);
  i = static_cast<std::size_t>(ptr - whole.data());
  return v;
}

}  // namespace

std::string KnotName::to_string() const {
  std::string s(1, to_char(region));
  s += '-';
  if (multi_depth()) {
    s += 'x' + std::to_string(pattern_index) + '~';
    for (std::size_t i = 0; i < tucks.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(tucks[i].first) + ':' + std::to_string(tucks[i].second);
    }
  } else {
    s += std::to_string(pattern_index) + '.' + std::to_string(tuck_bits);
  }
  return s;
}

KnotName KnotName::parse(std::string_view text) {
  KnotName n;
  if (text.size() < 2) throw ParseError("knot name too short", 0);
  const auto region = region_from_char(text[0]);
  if (!region) throw ParseError("name must start with L, C or R", 0);
  n.region = *region;
  if (text[1] != '-') throw ParseError("expected '-'", 1);
  std::size_t i = 2;
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) {
      throw ParseError(std::string("expected '") + c + "'", i);
    }
    ++i;
  };
  if (i < text.size() && text[i] == 'x') {
    ++i;
    n.pattern_index = parse_number(text, i, text);
    expect('~');
    for (;;) {
      const auto pos = parse_number(text, i, text);
      expect(':');
      const auto depth = parse_number(text, i, text);
      if (depth == 0 || depth > 1000) throw ParseError("bad tuck depth", i);
      n.tucks.emplace_back(static_cast<std::size_t>(pos), static_cast<int>(depth));
      if (i == text.size()) break;
      expect(',');
    }
  } else {
    n.pattern_index = parse_number(text, i, text);
    expect('.');
    n.tuck_bits = parse_number(text, i, text);
    if (i != text.size()) throw ParseError("trailing characters in name", i);
  }
  return n;
}

std::vector<std::size_t> internal_sites(std::span<const WindDir> windings) {
  std::vector<std::size_t> out;
  ValidityOptions o;
  o.max_tuck_depth = 1;
  for (const auto& site : tuck_sites(windings, o)) {
    if (site.position < windings.size()) out.push_back(site.position);
  }
  return out;
}

std::uint64_t pattern_count(Region final, std::size_t windings) {
  return completions({}, windings, final, true);
}

KnotName name_of(const KnotWord& k) {
  if (k.start() != Region::L) throw InvalidKnotError("knot names are defined for knots starting at L");
  const auto report = validate(k, naming_options());
  if (!report.valid()) {
    const auto& v = report.violations.front();
    throw InvalidKnotError("not a valid knot: " + std::string(axiom_id(v.axiom)) + ": " + v.message);
  }
  const auto ws = k.windings();
  if (ws.size() > kMaxNamedWindings) throw RangeError("knot too long to name");
  KnotName n;
  n.region = final_region(k);
  const auto m = metrics(k);
  if (m.max_tuck_depth == 1) {
    n.pattern_index = rank_of(ws, n.region, true);
    const auto sites = internal_sites(ws);
    std::size_t position = 0;
    for (const auto& it : k.items()) {
      if (it.is_wind()) {
        ++position;
        continue;
      }
      if (position == ws.size()) continue;  // the final tuck
      const auto at = std::find(sites.begin(), sites.end(), position);
      n.tuck_bits |= std::uint64_t{1} << (at - sites.begin());
    }
    return n;
  }
  n.pattern_index = rank_of(ws, n.region, false);
  std::size_t position = 0;
  for (const auto& it : k.items()) {
    if (it.is_wind()) {
      ++position;
    } else {
      n.tucks.emplace_back(position, it.depth);
    }
  }
  return n;
}

KnotWord knot_of(const KnotName& n) {
  std::vector<KnotItem> items;
  if (!n.multi_depth()) {
    const auto ws = unrank(n.pattern_index, n.region, true);
    const auto sites = internal_sites(ws);
    if (sites.size() < 64 && n.tuck_bits >> sites.size()) {
      throw RangeError("tuck bits " + std::to_string(n.tuck_bits) + " exceed the " +
                       std::to_string(sites.size()) + " internal sites of this pattern");
    }
    std::size_t next_site = 0;
    for (std::size_t p = 1; p <= ws.size(); ++p) {
      items.push_back(KnotItem::wind(ws[p - 1]));
      if (next_site < sites.size() && sites[next_site] == p) {
        if (n.tuck_bits >> next_site & 1) items.push_back(KnotItem::tuck(1));
        ++next_site;
      }
    }
    items.push_back(KnotItem::tuck(1));
    return KnotWord(Region::L, std::move(items));
  }

  const auto ws = unrank(n.pattern_index, n.region, false);
  std::size_t t = 0;
  for (std::size_t p = 0; p <= ws.size(); ++p) {
    if (p > 0) items.push_back(KnotItem::wind(ws[p - 1]));
    while (t < n.tucks.size() && n.tucks[t].first == p) {
      items.push_back(KnotItem::tuck(n.tucks[t].second));
      ++t;
    }
  }
  if (t != n.tucks.size()) throw RangeError("tuck positions out of order or out of range");
  KnotWord k(Region::L, std::move(items));
  if (!validate(k, naming_options()).valid() || name_of(k) != n) {
    throw RangeError("'" + n.to_string() + "' does not name a knot");
  }
  return k;
}

int symmetry(const KnotWord& k) {
  int r = 0;
  int l = 0;
  const auto w = tw_to_clr(k);
  for (const auto& it : w.items()) {
    if (!it.is_visit()) continue;
    if (it.region == Region::R) ++r;
    if (it.region == Region::L) ++l;
  }
  return std::abs(r - l);
}

int balance(const KnotWord& k) {
  const auto ws = k.windings();
  int changes = 0;
  for (std::size_t i = 1; i < ws.size(); ++i) changes += ws[i] != ws[i - 1];
  return changes;
}

namespace {

NamedKnot make_named(std::string common_name, KnotWord tw) {
  const auto report = validate(tw, naming_options());
  if (!report.valid()) throw InvalidKnotError(report.text());
  auto clr = tw_to_clr(tw);
  std::optional<KnotName> name;
  if (tw.start() == Region::L) name = name_of(tw);
  return {std::move(common_name), std::move(tw), std::move(clr), std::move(name)};
}

}  // namespace

const std::vector<NamedKnot>& registry() {
  static const std::vector<NamedKnot> knots{
      make_named("Eldredge", parse_tw("TTTWWTTUTTWWU")),
      make_named("Trinity", parse_tw("TWWWTTTUTTU")),
  };
  return knots;
}

std::vector<NamedKnot> parse_registry(std::string_view text) {
  std::vector<NamedKnot> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError("registry line " + std::to_string(line_no) + " needs three tab-separated fields", line_no);
    }
    const auto start_text = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const auto start = start_text.size() == 1 ? region_from_char(start_text[0]) : std::nullopt;
    if (!start) throw ParseError("registry line " + std::to_string(line_no) + ": bad start region", line_no);
    try {
      out.push_back(make_named(line.substr(0, tab1), parse_tw(line.substr(tab2 + 1), *start)));
    } catch (const Error& e) {
      throw ParseError("registry line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return out;
}

std::vector<NamedKnot> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open registry file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

std::optional<NamedKnot> find_named(std::string_view common_name,
                                    const std::vector<NamedKnot>& knots) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const auto key = lower(common_name);
  for (const auto& k : knots) {
    if (lower(k.common_name) == key) return k;
  }
  return std::nullopt;
}

}  // namespace tieknot
