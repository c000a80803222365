#include "tieknot/grammar.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <unordered_map>

#include "tieknot/error.hpp"

namespace tieknot {

const Production* Grammar::find(std::string_view lhs) const {
  for (const auto& p : productions) {
    if (p.lhs == lhs) return &p;
  }
  return nullptr;
}

void Grammar::check() const {
  if (!find(start)) throw GrammarError("grammar has no production for start symbol <" + start + ">");
  for (const auto& p : productions) {
    for (const auto& alt : p.alternatives) {
      for (const auto& s : alt) {
        if (s.is_terminal()) {
          for (char c : s.text) {
            auto it = weights.find(c);
            if (it == weights.end()) {
              throw GrammarError(std::string("terminal '") + c + "' has no weight");
            }
            if (it->second < 0) {
              throw GrammarError(std::string("terminal '") + c + "' has a negative weight");
            }
          }
        } else if (!find(s.text)) {
          throw GrammarError("<" + s.text + "> is used in <" + p.lhs +
                             "> but has no production");
        }
      }
    }
  }
}

int Grammar::size_of(std::string_view s) const {
  int size = size_offset;
  for (char c : s) {
    auto it = weights.find(c);
    if (it == weights.end()) throw GrammarError(std::string("terminal '") + c + "' has no weight");
    size += it->second;
  }
  return size;
}

namespace {

int symbol_rank(char c) {
  static constexpr std::string_view order = "LCRTWU'";
  const auto p = order.find(c);
  return p == std::string_view::npos ? 128 + static_cast<unsigned char>(c) : static_cast<int>(p);
}

constexpr int kUnreachable = INT_MAX / 4;

// Grammar compiled to integer nonterminal ids, with memoized generation and
// counting over (nonterminal, raw size).
class Engine {
 public:
  explicit Engine(const Grammar& g) {
    g.check();
    std::unordered_map<std::string, int> ids;
    for (const auto& p : g.productions) {
      if (!ids.emplace(p.lhs, static_cast<int>(ids.size())).second) {
        throw GrammarError("<" + p.lhs + "> has more than one production");
      }
    }
    alts_.resize(ids.size());
    for (const auto& p : g.productions) {
      auto& out = alts_[ids.at(p.lhs)];
      for (const auto& alt : p.alternatives) {
        std::vector<Sym> body;
        for (const auto& s : alt) {
          if (s.is_terminal()) {
            int w = 0;
            for (char c : s.text) w += g.weights.at(c);
            body.push_back({true, -1, s.text, w});
          } else {
            body.push_back({false, ids.at(s.text), {}, 0});
          }
        }
        out.push_back(std::move(body));
      }
    }
    start_ = ids.at(g.start);
    names_.resize(ids.size());
    for (const auto& [name, id] : ids) names_[id] = name;
    compute_min_weights();
    reject_zero_cycles();
  }

  int start() const { return start_; }

  const std::vector<std::string>& strings(int nt, int n) {
    const auto k = key(nt, kWhole, 0, n);
    if (auto it = str_memo_.find(k); it != str_memo_.end()) return it->second;
    std::vector<std::string> out;
    if (n >= min_[nt]) {
      for (std::size_t a = 0; a < alts_[nt].size(); ++a) {
        const auto& part = seq_strings(nt, a, 0, n);
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    return str_memo_.emplace(k, std::move(out)).first->second;
  }

  BigInt count(int nt, int n) {
    const auto k = key(nt, kWhole, 0, n);
    if (auto it = cnt_memo_.find(k); it != cnt_memo_.end()) return it->second;
    BigInt total = 0;
    if (n >= min_[nt]) {
      for (std::size_t a = 0; a < alts_[nt].size(); ++a) total += seq_count(nt, a, 0, n);
    }
    cnt_memo_.emplace(k, total);
    return total;
  }

 private:
  struct Sym {
    bool terminal;
    int nt;
    std::string text;
    int weight;
  };

  int sym_min(const Sym& s) const { return s.terminal ? s.weight : min_[s.nt]; }

  int suffix_min(int nt, std::size_t a, std::size_t pos) const {
    int total = 0;
    const auto& body = alts_[nt][a];
    for (std::size_t i = pos; i < body.size(); ++i) {
      const int m = sym_min(body[i]);
      if (m >= kUnreachable) return kUnreachable;
      total += m;
    }
    return total;
  }

  void compute_min_weights() {
    min_.assign(alts_.size(), kUnreachable);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t nt = 0; nt < alts_.size(); ++nt) {
        for (std::size_t a = 0; a < alts_[nt].size(); ++a) {
          const int m = suffix_min(static_cast<int>(nt), a, 0);
          if (m < min_[nt]) {
            min_[nt] = m;
            changed = true;
          }
        }
      }
    }
  }

  // A nonterminal that can reach itself while every other symbol on the way
  // derives a size-0 string would have unboundedly many derivations of one
  // size.
  void reject_zero_cycles() const {
    const std::size_t n = alts_.size();
    std::vector<std::vector<int>> zero_edges(n);
    for (std::size_t nt = 0; nt < n; ++nt) {
      for (const auto& body : alts_[nt]) {
        int total = 0;
        bool productive = true;
        for (const auto& s : body) {
          const int m = sym_min(s);
          if (m >= kUnreachable) productive = false;
          total += productive ? m : 0;
        }
        if (!productive) continue;
        for (const auto& s : body) {
          if (!s.terminal && total - min_[s.nt] == 0) zero_edges[nt].push_back(s.nt);
        }
      }
    }
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::function<void(int)> visit = [&](int v) {
      state[v] = 1;
      for (int w : zero_edges[v]) {
        if (state[w] == 1) {
          throw GrammarError("size-0 cycle through <" + names_[w] + ">");
        }
        if (state[w] == 0) visit(w);
      }
      state[v] = 2;
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (state[v] == 0) visit(static_cast<int>(v));
    }
  }

  static constexpr std::size_t kWhole = (1u << 14) - 1;

  static std::uint64_t key(int nt, std::size_t a, std::size_t pos, int n) {
    return (static_cast<std::uint64_t>(nt) << 44) | (static_cast<std::uint64_t>(a) << 30) |
           (static_cast<std::uint64_t>(pos) << 16) | static_cast<std::uint64_t>(n);
  }

  const std::vector<std::string>& seq_strings(int nt, std::size_t a, std::size_t pos, int n) {
    const auto k = key(nt, a, pos, n);
    if (auto it = seq_str_.find(k); it != seq_str_.end()) return it->second;
    std::vector<std::string> out;
    const auto& body = alts_[nt][a];
    if (pos == body.size()) {
      if (n == 0) out.emplace_back();
    } else {
      const int rest_min = suffix_min(nt, a, pos + 1);
      const Sym& s = body[pos];
      if (s.terminal) {
        if (s.weight <= n && n - s.weight >= rest_min) {
          for (const auto& tail : seq_strings(nt, a, pos + 1, n - s.weight)) out.push_back(s.text + tail);
        }
      } else {
        for (int m = min_[s.nt]; m <= n - rest_min; ++m) {
          const auto& heads = strings(s.nt, m);
          if (heads.empty()) continue;
          const auto& tails = seq_strings(nt, a, pos + 1, n - m);
          for (const auto& h : heads) {
            for (const auto& t : tails) out.push_back(h + t);
          }
        }
      }
    }
    return seq_str_.emplace(k, std::move(out)).first->second;
  }

  BigInt seq_count(int nt, std::size_t a, std::size_t pos, int n) {
    const auto k = key(nt, a, pos, n);
    if (auto it = seq_cnt_.find(k); it != seq_cnt_.end()) return it->second;
    BigInt total = 0;
    const auto& body = alts_[nt][a];
    if (pos == body.size()) {
      total = n == 0 ? 1 : 0;
    } else {
      const int rest_min = suffix_min(nt, a, pos + 1);
      const Sym& s = body[pos];
      if (s.terminal) {
        if (s.weight <= n && n - s.weight >= rest_min) total = seq_count(nt, a, pos + 1, n - s.weight);
      } else {
        for (int m = min_[s.nt]; m <= n - rest_min; ++m) {
          const BigInt head = count(s.nt, m);
          if (head == 0) continue;
          total += head * seq_count(nt, a, pos + 1, n - m);
        }
      }
    }
    seq_cnt_.emplace(k, total);
    return total;
  }

  std::vector<std::vector<std::vector<Sym>>> alts_;
  std::vector<std::string> names_;
  std::vector<int> min_;
  int start_ = 0;
  // Node-based maps: references stay valid while the tables grow.
  std::unordered_map<std::uint64_t, std::vector<std::string>> str_memo_;
  std::unordered_map<std::uint64_t, BigInt> cnt_memo_;
  std::unordered_map<std::uint64_t, std::vector<std::string>> seq_str_;
  std::unordered_map<std::uint64_t, BigInt> seq_cnt_;
};

void sort_bucket(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end(), [](const std::string& a, const std::string& b) {
    return symbol_less(a, b);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool symbol_less(std::string_view a, std::string_view b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](char x, char y) { return symbol_rank(x) < symbol_rank(y); });
}

std::vector<std::string> generate_bucket(const Grammar& g, int size) {
  Engine e(g);
  const int raw = size - g.size_offset;
  if (raw < 0) return {};
  auto out = e.strings(e.start(), raw);
  sort_bucket(out);
  return out;
}

std::vector<std::string> generate(const Grammar& g, int max_size) {
  Engine e(g);
  std::vector<std::string> all;
  for (int raw = 0; raw + g.size_offset <= max_size; ++raw) {
    auto bucket = e.strings(e.start(), raw);
    sort_bucket(bucket);
    all.insert(all.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return all;
}

Series count_by_size(const Grammar& g, int max_size) {
  Engine e(g);
  std::vector<BigInt> c(max_size < 0 ? 0 : static_cast<std::size_t>(max_size) + 1);
  for (int d = 0; d <= max_size; ++d) {
    const int raw = d - g.size_offset;
    if (raw >= 0) c[d] = e.count(e.start(), raw);
  }
  return Series(std::move(c));
}

}  // namespace tieknot
