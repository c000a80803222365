#include "tieknot/enumeration.hpp"

#include <algorithm>
#include <climits>
#include <random>

#include "tieknot/error.hpp"
#include "tieknot/grammar.hpp"

namespace tieknot {

std::string_view to_string(KnotClass c) {
  switch (c) {
    case KnotClass::FinkMao: return "fm";
    case KnotClass::WindingPatterns: return "windings";
    case KnotClass::SingleDepth: return "single";
    case KnotClass::Full: return "full";
    case KnotClass::Hidden: return "hidden";
  }
  return "?";
}

std::optional<KnotClass> knot_class_from_string(std::string_view s) {
  for (auto c : {KnotClass::FinkMao, KnotClass::WindingPatterns, KnotClass::SingleDepth,
                 KnotClass::Full, KnotClass::Hidden}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

namespace {

// Depth-first search over tuck assignments for one winding count. Every
// time a tuck is added the prefix is re-validated, padded with placeholder
// windings so the parity rule sees the final length.
class Search {
 public:
  Search(int windings, const ValidityOptions& opts)
      : n_(static_cast<std::size_t>(windings)), leaf_opts_(opts), prefix_opts_(opts) {
    leaf_opts_.max_moves = INT_MAX;
    prefix_opts_.max_moves = INT_MAX;
    prefix_opts_.require_final_tuck = false;
  }

  std::vector<std::pair<std::string, KnotWord>> run() {
    if (n_ == 0) return {};
    const std::size_t strings = std::size_t{1} << n_;
    for (std::size_t mask = 0; mask < strings; ++mask) {
      ws_.assign(n_, WindDir::T);
      for (std::size_t i = 0; i < n_; ++i) {
        if (mask >> (n_ - 1 - i) & 1) ws_[i] = WindDir::W;
      }
      items_.clear();
      items_.push_back(KnotItem::wind(ws_[0]));
      after_winding(1);
    }
    std::sort(found_.begin(), found_.end(),
              [](const auto& a, const auto& b) { return symbol_less(a.first, b.first); });
    return std::move(found_);
  }

 private:
  void after_winding(std::size_t p) {
    if (p == n_) {
      leaf();
    } else {
      items_.push_back(KnotItem::wind(ws_[p]));
      after_winding(p + 1);
      items_.pop_back();
    }
    int max_depth = static_cast<int>(p / 2);
    if (leaf_opts_.max_tuck_depth) max_depth = std::min(max_depth, *leaf_opts_.max_tuck_depth);
    for (int d = 1; d <= max_depth; ++d) {
      items_.push_back(KnotItem::tuck(d));
      if (prefix_ok(p)) after_winding(p);
      items_.pop_back();
    }
  }

  bool prefix_ok(std::size_t p) const {
    auto padded = items_;
    padded.insert(padded.end(), n_ - p, KnotItem::wind(WindDir::T));
    return validate(KnotWord(Region::L, std::move(padded)), prefix_opts_).valid();
  }

  void leaf() {
    KnotWord k(Region::L, items_);
    if (validate(k, leaf_opts_).valid()) found_.emplace_back(serialize(k), std::move(k));
  }

  std::size_t n_;
  ValidityOptions leaf_opts_;
  ValidityOptions prefix_opts_;
  std::vector<WindDir> ws_;
  std::vector<KnotItem> items_;
  std::vector<std::pair<std::string, KnotWord>> found_;
};

}  // namespace

bool oracle_enumerate(int max_windings, const ValidityOptions& opts, const KnotSink& sink,
                      int min_windings) {
  if (max_windings > 20) throw RangeError("at most 20 windings can be enumerated");
  for (int n = std::max(0, min_windings); n <= max_windings; ++n) {
    for (const auto& entry : Search(n, opts).run()) {
      if (!sink(entry.second)) return false;
    }
  }
  return true;
}

std::vector<KnotWord> oracle_enumerate(int max_windings, const ValidityOptions& opts) {
  std::vector<KnotWord> out;
  oracle_enumerate(max_windings, opts, [&](const KnotWord& k) {
    out.push_back(k);
    return true;
  });
  return out;
}

ValidityOptions class_options(KnotClass c) {
  ValidityOptions o;
  o.max_moves = INT_MAX;
  switch (c) {
    case KnotClass::FinkMao:
    case KnotClass::WindingPatterns:
    case KnotClass::SingleDepth:
      o.max_tuck_depth = 1;
      break;
    case KnotClass::Full:
      break;
    case KnotClass::Hidden:
      o.max_tuck_depth = 1;
      o.allow_hidden_tucks = true;
      break;
  }
  return o;
}

bool enumerate_class(KnotClass c, int max_windings, std::optional<Region> final,
                     const KnotSink& sink, int min_windings) {
  if (c == KnotClass::FinkMao) {
    if (final && *final != Region::C) return true;
    final = Region::C;
  }
  const bool final_tuck_only = c == KnotClass::FinkMao || c == KnotClass::WindingPatterns;
  return oracle_enumerate(
      max_windings, class_options(c),
      [&](const KnotWord& k) {
        if (final && final_region(k) != *final) return true;
        if (final_tuck_only && metrics(k).tuck_count != 1) return true;
        return sink(k);
      },
      min_windings);
}

Series count_class(KnotClass c, int max_windings, std::optional<Region> final) {
  std::vector<BigInt> counts(max_windings < 0 ? 0 : static_cast<std::size_t>(max_windings) + 1);
  enumerate_class(c, max_windings, final, [&](const KnotWord& k) {
    ++counts[k.winding_count()];
    return true;
  });
  return Series(std::move(counts));
}

std::vector<KnotWord> sample_class(KnotClass c, int max_windings, std::optional<Region> final,
                                   std::size_t count, std::uint64_t seed) {
  if (count == 0) return {};
  const BigInt total = count_class(c, max_windings, final).sum();
  if (total == 0) throw RangeError("the class has no knots within the bound");
  const auto n = total.convert_to<std::uint64_t>();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::vector<std::uint64_t> draws(count);
  for (auto& d : draws) d = pick(rng);

  std::vector<std::uint64_t> wanted(draws);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  std::map<std::uint64_t, KnotWord> found;
  std::uint64_t index = 0;
  std::size_t next = 0;
  enumerate_class(c, max_windings, final, [&](const KnotWord& k) {
    if (index == wanted[next]) {
      found.emplace(index, k);
      if (++next == wanted.size()) return false;
    }
    ++index;
    return true;
  });
  std::vector<KnotWord> out;
  out.reserve(count);
  for (auto d : draws) out.push_back(found.at(d));
  return out;
}

std::map<Region, std::vector<std::string>> winding_patterns(int max_windings) {
  std::map<Region, std::vector<std::string>> out{
      {Region::L, {}}, {Region::C, {}}, {Region::R, {}}};
  for (int n = 2; n <= max_windings; ++n) {
    const std::size_t strings = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < strings; ++mask) {
      std::string s(static_cast<std::size_t>(n), 'T');
      int net = 0;
      for (int i = 0; i < n; ++i) {
        if (mask >> (n - 1 - i) & 1) s[i] = 'W';
        net += s[i] == 'T' ? 1 : -1;
      }
      if (s[n - 1] != s[n - 2]) continue;
      out[advance(Region::L, net)].push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace tieknot
