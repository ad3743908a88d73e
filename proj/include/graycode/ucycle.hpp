#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graycode/solver.hpp"

namespace graycode {

struct UcycleResult {
  Answer answer = Answer::no;
  bool cyclic = false;
  std::vector<int> sequence;
};

namespace detail {

struct EulerGraph {
  std::vector<std::vector<int>> out;  // edge ids, sorted by label
  std::vector<int> edge_to;
  std::vector<int> indeg;
};

// edge order of the trail taking the least available edge at every step
inline std::optional<std::vector<int>> euler_trail(const EulerGraph& g, bool cyclic,
                                                   size_t edges) {
  int n = static_cast<int>(g.out.size());
  int pos = 0, neg = 0, pos_node = -1;
  for (int v = 0; v < n; ++v) {
    int d = static_cast<int>(g.out[v].size()) - g.indeg[v];
    if (d == 0) continue;
    if (cyclic) return std::nullopt;
    if (d == 1) {
      ++pos;
      pos_node = v;
    } else if (d == -1) {
      ++neg;
    } else {
      return std::nullopt;
    }
  }
  if (pos > 1 || neg > 1) return std::nullopt;
  int start = pos_node != -1 ? pos_node : 0;
  std::vector<size_t> next(n, 0);
  std::vector<std::pair<int, int>> st{{start, -1}};
  std::vector<int> trail;
  while (!st.empty()) {
    auto [v, via] = st.back();
    if (next[v] < g.out[v].size()) {
      int e = g.out[v][next[v]++];
      st.emplace_back(g.edge_to[e], e);
    } else {
      st.pop_back();
      if (via != -1) trail.push_back(via);
    }
  }
  std::reverse(trail.begin(), trail.end());
  if (trail.size() != edges) return std::nullopt;  // not weakly connected
  return trail;
}

template <typename Node>
struct EulerBuilder {
  std::map<Node, int> ids;
  std::vector<Node> keys;
  std::vector<std::tuple<int, int, int>> raw;  // from, to, label

  int node(const Node& k) {
    auto [it, fresh] = ids.emplace(k, static_cast<int>(keys.size()));
    if (fresh) keys.push_back(k);
    return it->second;
  }

  void add_edge(const Node& from, const Node& to, int label) {
    int f = node(from), t = node(to);
    raw.emplace_back(f, t, label);
  }

  EulerGraph finish() {
    EulerGraph g;
    g.out.resize(keys.size());
    g.indeg.assign(keys.size(), 0);
    g.edge_to.resize(raw.size());
    // renumber nodes into lexicographic order so "least node" means least key
    std::vector<int> order(keys.size());
    int rank = 0;
    for (auto& [k, id] : ids) order[id] = rank++;
    std::vector<std::vector<std::pair<int, int>>> buckets(keys.size());  // label, edge id
    for (size_t e = 0; e < raw.size(); ++e) {
      auto [f, t, lab] = raw[e];
      g.edge_to[e] = order[t];
      ++g.indeg[order[t]];
      buckets[order[f]].emplace_back(lab, static_cast<int>(e));
    }
    for (size_t v = 0; v < buckets.size(); ++v) {
      std::sort(buckets[v].begin(), buckets[v].end());
      for (auto& [lab, e] : buckets[v]) g.out[v].push_back(e);
    }
    std::vector<Node> ordered(keys.size());
    for (size_t id = 0; id < keys.size(); ++id) ordered[order[id]] = keys[id];
    keys = std::move(ordered);
    return g;
  }
};

}  // namespace detail

// shortest-prefix transition graph over the given bitstrings; one edge per string
inline UcycleResult solve_debruijn_subset(const std::vector<std::string>& strings, bool cyclic) {
  UcycleResult res;
  res.cyclic = cyclic;
  if (strings.empty()) {
    res.answer = Answer::yes;
    return res;
  }
  size_t n = strings[0].size();
  if (n == 0) fail(errc::invariant_violation, "bitstrings must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : strings) {
    if (s.size() != n) fail(errc::mixed_sizes, "bitstrings of different lengths");
    require_bits(s, "bitstring");
    if (!seen.insert(s).second) fail(errc::duplicate_object, "duplicate bitstring " + s);
  }
  detail::EulerBuilder<std::string> b;
  std::vector<int> labels(strings.size());
  for (size_t i = 0; i < strings.size(); ++i) {
    const auto& s = strings[i];
    b.add_edge(s.substr(0, n - 1), s.substr(1), s[n - 1] - '0');
  }
  detail::EulerGraph g = b.finish();
  auto trail = detail::euler_trail(g, cyclic, strings.size());
  if (!trail) return res;
  res.answer = Answer::yes;
  if (!cyclic) {
    // the packed form starts with the source node of the first edge
    const auto& first = strings[(*trail)[0]];
    for (size_t j = 0; j + 1 < n; ++j) res.sequence.push_back(first[j] - '0');
  }
  for (int e : *trail) res.sequence.push_back(strings[e][n - 1] - '0');
  return res;
}

inline UcycleResult solve_shorthand_ucycle(const std::vector<Permutation>& perms, bool cyclic) {
  UcycleResult res;
  res.cyclic = cyclic;
  if (perms.empty()) {
    res.answer = Answer::yes;
    return res;
  }
  size_t n = perms[0].vals.size();
  if (n < 3) fail(errc::invariant_violation, "shorthand universal cycles need n >= 3");
  std::set<Permutation> seen;
  for (const auto& p : perms) {
    if (p.vals.size() != n) fail(errc::mixed_sizes, "permutations of different lengths");
    validate_permutation(p.vals);
    if (!seen.insert(p).second)
      fail(errc::duplicate_object, "duplicate permutation " + format_permutation(p.vals));
  }
  detail::EulerBuilder<std::vector<int>> b;
  for (const auto& p : perms) {
    std::vector<int> from(p.vals.begin(), p.vals.begin() + (n - 2));
    std::vector<int> to(p.vals.begin() + 1, p.vals.begin() + (n - 1));
    b.add_edge(from, to, p.vals[n - 2]);
  }
  detail::EulerGraph g = b.finish();
  auto trail = detail::euler_trail(g, cyclic, perms.size());
  if (!trail) return res;
  res.answer = Answer::yes;
  if (!cyclic) {
    const auto& first = perms[(*trail)[0]].vals;
    for (size_t j = 0; j + 2 < n; ++j) res.sequence.push_back(first[j]);
  }
  for (int e : *trail) res.sequence.push_back(perms[e].vals[n - 2]);
  return res;
}

// windows of the packed sequence, one object per window
inline std::vector<std::string> decode_debruijn(const std::vector<int>& seq, int n, bool cyclic) {
  std::vector<std::string> out;
  if (n <= 0) fail(errc::invariant_violation, "window length must be positive");
  size_t m = cyclic ? seq.size()
                    : (seq.size() >= static_cast<size_t>(n)
                           ? seq.size() - static_cast<size_t>(n) + 1
                           : 0);
  for (size_t i = 0; i < m; ++i) {
    std::string s;
    for (int j = 0; j < n; ++j) {
      int bit = cyclic ? seq[(i + j) % seq.size()] : seq[i + j];
      if (bit != 0 && bit != 1) fail(errc::malformed_text, "sequence entries must be bits");
      s.push_back(static_cast<char>('0' + bit));
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Permutation> decode_shorthand(const std::vector<int>& seq, int n,
                                                 bool cyclic) {
  std::vector<Permutation> out;
  if (n < 3) fail(errc::invariant_violation, "shorthand windows need n >= 3");
  size_t w = static_cast<size_t>(n) - 1;
  size_t m = cyclic ? seq.size() : (seq.size() >= w ? seq.size() - w + 1 : 0);
  for (size_t i = 0; i < m; ++i) {
    std::vector<char> used(n + 1, 0);
    Permutation p;
    for (size_t j = 0; j < w; ++j) {
      int sym = cyclic ? seq[(i + j) % seq.size()] : seq[i + j];
      if (sym < 1 || sym > n || used[sym])
        fail(errc::malformed_text, "window is not a partial permutation");
      used[sym] = 1;
      p.vals.push_back(sym);
    }
    for (int sym = 1; sym <= n; ++sym)
      if (!used[sym]) p.vals.push_back(sym);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace graycode
