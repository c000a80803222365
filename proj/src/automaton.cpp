#include <algorithm>
#include <map>
#include <queue>

#include "tieknot/error.hpp"
#include "tieknot/grammar.hpp"

namespace tieknot {

namespace {

// Chains expanded into single-character edges; label '\0' is epsilon.
struct Expanded {
  std::size_t states = 0;
  std::vector<std::vector<std::pair<char, std::size_t>>> out;

  std::size_t add_state() {
    out.emplace_back();
    return states++;
  }
};

Expanded expand_chains(const Automaton& a) {
  Expanded x;
  for (std::size_t i = 0; i < a.states.size(); ++i) x.add_state();
  for (const auto& e : a.edges) {
    if (e.from >= a.states.size() || e.to >= a.states.size()) {
      throw GrammarError("automaton edge refers to a missing state");
    }
    if (e.label.empty()) {
      x.out[e.from].push_back({'\0', e.to});
      continue;
    }
    std::size_t at = e.from;
    for (std::size_t i = 0; i < e.label.size(); ++i) {
      const std::size_t next = i + 1 == e.label.size() ? e.to : x.add_state();
      x.out[at].push_back({e.label[i], next});
      at = next;
    }
  }
  return x;
}

std::set<std::size_t> closure(const Expanded& x, std::set<std::size_t> s) {
  std::vector<std::size_t> todo(s.begin(), s.end());
  while (!todo.empty()) {
    const auto v = todo.back();
    todo.pop_back();
    for (const auto& [c, w] : x.out[v]) {
      if (c == '\0' && s.insert(w).second) todo.push_back(w);
    }
  }
  return s;
}

std::set<std::size_t> move(const Expanded& x, const std::set<std::size_t>& s, char c) {
  std::set<std::size_t> next;
  for (auto v : s) {
    for (const auto& [d, w] : x.out[v]) {
      if (d == c) next.insert(w);
    }
  }
  return closure(x, std::move(next));
}

bool any_accepting(const Automaton& a, const std::set<std::size_t>& s) {
  return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return a.accepting.count(v) > 0; });
}

}  // namespace

bool Automaton::accepts(std::string_view input) const {
  const auto x = expand_chains(*this);
  auto current = closure(x, {initial});
  for (char c : input) {
    current = move(x, current, c);
    if (current.empty()) return false;
  }
  return any_accepting(*this, current);
}

bool Automaton::deterministic() const {
  std::set<std::pair<std::size_t, char>> seen;
  for (const auto& e : edges) {
    if (e.label.size() != 1) return false;
    if (!seen.insert({e.from, e.label[0]}).second) return false;
  }
  return true;
}

Automaton Automaton::determinize() const {
  const auto x = expand_chains(*this);
  std::set<char> alphabet;
  for (const auto& e : edges) alphabet.insert(e.label.begin(), e.label.end());

  Automaton d;
  std::map<std::set<std::size_t>, std::size_t> index;
  std::vector<std::set<std::size_t>> subsets;
  auto intern = [&](std::set<std::size_t> s) {
    auto [it, fresh] = index.emplace(s, subsets.size());
    if (fresh) {
      d.states.push_back("q" + std::to_string(subsets.size()));
      if (any_accepting(*this, s)) d.accepting.insert(subsets.size());
      subsets.push_back(std::move(s));
    }
    return it->second;
  };
  d.initial = intern(closure(x, {initial}));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (char c : alphabet) {
      auto next = move(x, subsets[i], c);
      if (next.empty()) continue;
      const auto j = intern(std::move(next));
      d.edges.push_back({i, std::string(1, c), j});
    }
  }

  // Drop states that cannot reach an accepting state.
  std::vector<bool> live(d.states.size(), false);
  for (auto s : d.accepting) live[s] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : d.edges) {
      if (live[e.to] && !live[e.from]) live[e.from] = changed = true;
    }
  }
  if (std::all_of(live.begin(), live.end(), [](bool b) { return b; })) return d;
  Automaton trimmed;
  std::vector<std::size_t> remap(d.states.size());
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    if (!live[i] && i != d.initial) continue;
    remap[i] = trimmed.states.size();
    trimmed.states.push_back("q" + std::to_string(remap[i]));
    if (d.accepting.count(i)) trimmed.accepting.insert(remap[i]);
  }
  trimmed.initial = remap[d.initial];
  for (const auto& e : d.edges) {
    if (live[e.from] && live[e.to]) trimmed.edges.push_back({remap[e.from], e.label, remap[e.to]});
  }
  return trimmed;
}

Series Automaton::count_by_size(const std::map<char, int>& weights, int size_offset,
                                int max_size) const {
  const Automaton d = deterministic() ? *this : determinize();
  const std::size_t n = d.states.size();
  auto weight_of = [&](char c) {
    auto it = weights.find(c);
    if (it == weights.end() || it->second < 0) {
      throw GrammarError(std::string("symbol '") + c + "' has no usable weight");
    }
    return it->second;
  };

  // Topological order over zero-weight edges.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : d.edges) {
    if (weight_of(e.label[0]) == 0) ++indegree[e.to];
  }
  std::vector<std::size_t> order;
  std::queue<std::size_t> ready;
  for (std::size_t s = 0; s < n; ++s) {
    if (indegree[s] == 0) ready.push(s);
  }
  while (!ready.empty()) {
    const auto s = ready.front();
    ready.pop();
    order.push_back(s);
    for (const auto& e : d.edges) {
      if (e.from == s && weight_of(e.label[0]) == 0 && --indegree[e.to] == 0) ready.push(e.to);
    }
  }
  if (order.size() != n) throw GrammarError("automaton has a zero-weight cycle");

  const int levels = std::max(0, max_size - size_offset + 1);
  std::vector<std::vector<BigInt>> count(levels, std::vector<BigInt>(n));
  if (levels > 0) count[0][d.initial] = 1;
  for (int w = 0; w < levels; ++w) {
    for (auto s : order) {
      if (count[w][s] == 0) continue;
      for (const auto& e : d.edges) {
        if (e.from != s) continue;
        const int c = weight_of(e.label[0]);
        if (w + c < levels) count[w + c][e.to] += count[w][s];
      }
    }
  }
  std::vector<BigInt> series(max_size < 0 ? 0 : static_cast<std::size_t>(max_size) + 1);
  for (int w = 0; w < levels; ++w) {
    for (auto s : d.accepting) series[w + size_offset] += count[w][s];
  }
  return Series(std::move(series));
}

Automaton single_tuck_automaton() {
  Automaton a;
  a.states = {"start", "cycle", "pair", "tuck", "end"};
  enum : std::size_t { kStart, kCycle, kPair, kTuck, kEnd };
  a.initial = kStart;
  a.accepting = {kEnd};
  a.edges = {
      {kStart, "T", kCycle},  {kStart, "", kCycle},    {kStart, "W", kCycle},
      {kCycle, "TT", kTuck},  {kCycle, "WW", kTuck},   {kTuck, "U", kCycle},
      {kCycle, "TTU", kEnd},  {kCycle, "WWU", kEnd},   {kCycle, "T", kPair},
      {kCycle, "W", kPair},   {kPair, "T", kCycle},    {kPair, "W", kCycle},
  };
  return a;
}

}  // namespace tieknot
