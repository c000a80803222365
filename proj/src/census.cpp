#include <algorithm>
#include <sstream>

#include "tieknot/enumeration.hpp"
#include "tieknot/grammar.hpp"

namespace tieknot {

std::vector<CensusRow> census(int max_windings) {
  std::vector<CensusRow> rows;
  if (max_windings < 2) return rows;
  for (int n = 2; n <= max_windings; ++n) rows.push_back({n, n + 1});
  auto row = [&](std::size_t windings) -> CensusRow& { return rows[windings - 2]; };

  for (const auto& [region, patterns] : winding_patterns(max_windings)) {
    for (const auto& p : patterns) {
      auto& r = row(p.size());
      (region == Region::L ? r.left_windings
       : region == Region::R ? r.right_windings
                             : r.center_windings)++;
    }
  }
  oracle_enumerate(max_windings, class_options(KnotClass::SingleDepth), [&](const KnotWord& k) {
    auto& r = row(k.winding_count());
    const auto f = final_region(k);
    (f == Region::L ? r.left_knots : f == Region::R ? r.right_knots : r.center_knots)++;
    ++r.single_tuck_knots;
    return true;
  });
  oracle_enumerate(max_windings, class_options(KnotClass::Full), [&](const KnotWord& k) {
    ++row(k.winding_count()).total_knots;
    return true;
  });
  return rows;
}

CensusRow census_total(const std::vector<CensusRow>& rows) {
  CensusRow t;
  for (const auto& r : rows) {
    t.left_windings += r.left_windings;
    t.right_windings += r.right_windings;
    t.center_windings += r.center_windings;
    t.left_knots += r.left_knots;
    t.right_knots += r.right_knots;
    t.center_knots += r.center_knots;
    t.single_tuck_knots += r.single_tuck_knots;
    t.total_knots += r.total_knots;
  }
  return t;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "windings,moves,left_windings,right_windings,center_windings,left_knots,"
        "right_knots,center_knots,single_tuck_knots,total_knots\n";
  auto counts = [&](const CensusRow& r) {
    os << r.left_windings << ',' << r.right_windings << ',' << r.center_windings << ','
       << r.left_knots << ',' << r.right_knots << ',' << r.center_knots << ','
       << r.single_tuck_knots << ',' << r.total_knots << '\n';
  };
  for (const auto& r : rows) {
    os << r.windings << ',' << r.moves << ',';
    counts(r);
  }
  os << "total,total,";
  counts(census_total(rows));
  return os.str();
}

// --- cross-check ------------------------------------------------------------

bool CrossCheckReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CrossCheckItem& i) { return i.ok; });
}

std::string CrossCheckReport::text() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.ok ? "ok   " : "FAIL ") << i.name << " (" << i.compared << ")";
    if (!i.ok) os << ": " << i.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

CrossCheckItem compare_sets(std::string name, std::vector<std::string> oracle,
                            std::vector<std::string> grammar) {
  std::sort(oracle.begin(), oracle.end());
  std::sort(grammar.begin(), grammar.end());
  CrossCheckItem item{std::move(name), true, oracle.size(), {}};
  if (auto dup = std::adjacent_find(oracle.begin(), oracle.end()); dup != oracle.end()) {
    item.ok = false;
    item.detail = "oracle produced " + *dup + " twice";
    return item;
  }
  std::vector<std::string> only_oracle;
  std::vector<std::string> only_grammar;
  std::set_difference(oracle.begin(), oracle.end(), grammar.begin(), grammar.end(),
                      std::back_inserter(only_oracle));
  std::set_difference(grammar.begin(), grammar.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(only_grammar));
  if (!only_oracle.empty()) {
    item.ok = false;
    item.detail = "oracle has " + only_oracle.front() + " which the grammar lacks";
  } else if (!only_grammar.empty()) {
    item.ok = false;
    item.detail = "grammar has " + only_grammar.front() + " which the oracle lacks";
  }
  return item;
}

std::string clr_text(const KnotWord& k) {
  return serialize(tw_to_clr(k), ClrStyle{false, false});
}

CrossCheckItem compare_series(std::string name, const Series& expected, const Series& actual) {
  const auto c = compare(expected, actual);
  CrossCheckItem item{std::move(name), c.equal, std::min(expected.order(), actual.order()), {}};
  if (!c.equal) item.detail = c.to_string();
  return item;
}

}  // namespace

CrossCheckReport cross_check(int max_windings) {
  CrossCheckReport report;
  const int max_moves = max_windings + 1;
  auto& items = report.items;

  std::vector<KnotWord> single;
  std::vector<KnotWord> full;
  std::vector<KnotWord> hidden;
  oracle_enumerate(max_windings, class_options(KnotClass::SingleDepth), [&](const KnotWord& k) {
    single.push_back(k);
    return true;
  });
  oracle_enumerate(max_windings, class_options(KnotClass::Full), [&](const KnotWord& k) {
    full.push_back(k);
    return true;
  });
  oracle_enumerate(max_windings, class_options(KnotClass::Hidden), [&](const KnotWord& k) {
    hidden.push_back(k);
    return true;
  });

  auto serialized = [](const std::vector<KnotWord>& ks, auto keep, auto render) {
    std::vector<std::string> out;
    for (const auto& k : ks) {
      if (keep(k)) out.push_back(render(k));
    }
    return out;
  };
  auto all = [](const KnotWord&) { return true; };
  auto tw = [](const KnotWord& k) { return serialize(k); };
  auto final_tuck_only = [](const KnotWord& k) { return metrics(k).tuck_count == 1; };

  items.push_back(compare_sets(
      "fm",
      serialized(single,
                 [&](const KnotWord& k) { return final_tuck_only(k) && final_region(k) == Region::C; },
                 clr_text),
      generate(fm_grammar(), max_moves)));
  items.push_back(compare_sets("single", serialized(single, all, tw),
                               generate(single_tuck_tw_grammar(), max_moves)));
  for (auto r : {Region::L, Region::C, Region::R}) {
    items.push_back(compare_sets(
        std::string("single-") + to_char(r),
        serialized(single, [&](const KnotWord& k) { return final_region(k) == r; }, clr_text),
        generate(single_tuck_clr_grammar(r), max_moves)));
  }
  const auto patterns = winding_patterns(max_windings);
  for (auto r : {Region::L, Region::C, Region::R}) {
    std::vector<std::string> as_clr;
    for (const auto& p : patterns.at(r)) as_clr.push_back(clr_text(parse_tw(p + "U")));
    items.push_back(compare_sets(std::string("patterns-") + to_char(r), std::move(as_clr),
                                 generate(winding_pattern_grammar(r), max_moves)));
  }
  items.push_back(compare_sets("full", serialized(full, all, tw),
                               generate(full_grammar(), max_windings)));
  items.push_back(compare_sets("hidden", serialized(hidden, all, tw),
                               generate(hidden_tuck_grammar(), max_moves)));

  {
    const auto automaton = single_tuck_automaton();
    CrossCheckItem item{"automaton", true, single.size(), {}};
    for (const auto& k : single) {
      if (!automaton.accepts(serialize(k))) {
        item.ok = false;
        item.detail = "automaton rejects " + serialize(k);
        break;
      }
    }
    items.push_back(std::move(item));
    items.push_back(compare_series(
        "automaton-count", count_by_size(single_tuck_tw_grammar(), max_moves),
        automaton.count_by_size({{'T', 1}, {'W', 1}, {'U', 0}}, 1, max_moves)));
  }

  // Census buckets against grammar counts, shifted from windings to moves
  // where the grammar counts moves.
  const auto rows = census(max_windings);
  auto by_moves = [&](auto field) {
    std::vector<BigInt> c(static_cast<std::size_t>(max_moves) + 1);
    for (const auto& r : rows) c[r.moves] = field(r);
    return Series(std::move(c));
  };
  auto by_windings = [&](auto field) {
    std::vector<BigInt> c(static_cast<std::size_t>(max_windings) + 1);
    for (const auto& r : rows) c[r.windings] = field(r);
    return Series(std::move(c));
  };
  items.push_back(compare_series("census-single",
                                 count_by_size(single_tuck_tw_grammar(), max_moves),
                                 by_moves([](const CensusRow& r) { return r.single_tuck_knots; })));
  items.push_back(compare_series("census-full", count_by_size(full_grammar(), max_windings),
                                 by_windings([](const CensusRow& r) { return r.total_knots; })));
  items.push_back(compare_series("census-left-knots",
                                 count_by_size(single_tuck_clr_grammar(Region::L), max_moves),
                                 by_moves([](const CensusRow& r) { return r.left_knots; })));
  items.push_back(compare_series("census-center-knots",
                                 count_by_size(single_tuck_clr_grammar(Region::C), max_moves),
                                 by_moves([](const CensusRow& r) { return r.center_knots; })));
  items.push_back(compare_series("census-right-knots",
                                 count_by_size(single_tuck_clr_grammar(Region::R), max_moves),
                                 by_moves([](const CensusRow& r) { return r.right_knots; })));
  items.push_back(compare_series("census-left-windings",
                                 count_by_size(winding_pattern_grammar(Region::L), max_moves),
                                 by_moves([](const CensusRow& r) { return r.left_windings; })));
  items.push_back(compare_series("census-center-windings",
                                 count_by_size(winding_pattern_grammar(Region::C), max_moves),
                                 by_moves([](const CensusRow& r) { return r.center_windings; })));
  items.push_back(compare_series("census-right-windings",
                                 count_by_size(winding_pattern_grammar(Region::R), max_moves),
                                 by_moves([](const CensusRow& r) { return r.right_windings; })));
  return report;
}

}  // namespace tieknot
