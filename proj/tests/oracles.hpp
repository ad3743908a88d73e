#pragma once

// Brute-force "apply every flip in the family" enumerators. These deliberately
// construct neighbor sets by generation, sharing no code with the predicates
// they are used to test.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graycode/graycode.hpp"

namespace oracle {

using graycode::EdgePair;
using graycode::EdgeSubset;
using graycode::Permutation;
using graycode::SetPartition;
using graycode::SubsetRole;
using graycode::Tuple2;

inline std::set<std::string> bitflip_images(const std::string& x) {
  std::set<std::string> out;
  for (size_t i = 0; i < x.size(); ++i) {
    std::string y = x;
    y[i] = y[i] == '0' ? '1' : '0';
    out.insert(y);
  }
  return out;
}

inline std::set<std::string> substring_complement_images(const std::string& x) {
  std::set<std::string> out;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i; j < x.size(); ++j) {
      std::string y = x;
      for (size_t k = i; k <= j; ++k) y[k] = y[k] == '0' ? '1' : '0';
      out.insert(y);
    }
  return out;
}

inline std::set<Tuple2> pm1_images(const Tuple2& t) {
  std::set<Tuple2> out;
  for (long d : {-1L, 1L}) {
    if (t.a + d >= 1) out.insert({t.a + d, t.b});
    if (t.b + d >= 1) out.insert({t.a, t.b + d});
  }
  return out;
}

template <class S>
std::set<S> swap_images(const S& x) {
  std::set<S> out;
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] == x[i + 1]) continue;
    S y = x;
    std::swap(y[i], y[i + 1]);
    out.insert(y);
  }
  return out;
}

template <class S>
std::set<S> transposition_images(const S& x) {
  std::set<S> out;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) continue;
      S y = x;
      std::swap(y[i], y[j]);
      out.insert(y);
    }
  return out;
}

template <class S>
std::set<S> reversal_images(const S& x) {
  std::set<S> out;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) {
      S y = x;
      std::reverse(y.begin() + i, y.begin() + j + 1);
      if (!(y == x)) out.insert(y);
    }
  return out;
}

template <class S>
std::set<S> rotation_images(const S& x) {
  std::set<S> out;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) {
      S left = x, right = x;
      std::rotate(left.begin() + i, left.begin() + i + 1, left.begin() + j + 1);
      std::rotate(right.begin() + i, right.begin() + j, right.begin() + j + 1);
      if (!(left == x)) out.insert(left);
      if (!(right == x)) out.insert(right);
    }
  return out;
}

inline std::set<std::vector<int>> jump_images(const std::vector<int>& x) {
  std::set<std::vector<int>> out;
  int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && x[j] < x[i]; ++j) {  // right-jumps of x[i]
      std::vector<int> y = x;
      int v = y[i];
      y.erase(y.begin() + i);
      y.insert(y.begin() + j, v);
      out.insert(y);
    }
    for (int j = i - 1; j >= 0 && x[j] < x[i]; --j) {  // left-jumps of x[i]
      std::vector<int> y = x;
      int v = y[i];
      y.erase(y.begin() + i);
      y.insert(y.begin() + j, v);
      out.insert(y);
    }
  }
  return out;
}

inline std::set<SetPartition> refinement_images(const SetPartition& p) {
  std::set<SetPartition> out;
  size_t nb = p.blocks.size();
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i + 1; j < nb; ++j) {
      SetPartition q;
      for (size_t k = 0; k < nb; ++k)
        if (k != i && k != j) q.blocks.push_back(p.blocks[k]);
      std::vector<int> merged = p.blocks[i];
      merged.insert(merged.end(), p.blocks[j].begin(), p.blocks[j].end());
      q.blocks.push_back(std::move(merged));
      graycode::canonicalize(q);
      out.insert(q);
    }
  for (size_t i = 0; i < nb; ++i) {
    const auto& blk = p.blocks[i];
    size_t rest = blk.size() - 1;
    if (rest == 0) continue;
    // first element pinned to part A; any nonempty complement forms part B
    for (unsigned mask = 1; mask < (1u << rest); ++mask) {
      std::vector<int> a{blk[0]}, b;
      for (size_t t = 0; t < rest; ++t)
        (mask & (1u << t) ? b : a).push_back(blk[t + 1]);
      SetPartition q;
      for (size_t k = 0; k < nb; ++k)
        if (k != i) q.blocks.push_back(p.blocks[k]);
      q.blocks.push_back(std::move(a));
      q.blocks.push_back(std::move(b));
      graycode::canonicalize(q);
      out.insert(q);
    }
  }
  return out;
}

inline std::set<EdgeSubset> edge_exchange_images(const graycode::DiamondGraph& host,
                                                 const EdgeSubset& tree) {
  std::set<EdgeSubset> out;
  std::set<EdgePair> in_tree(tree.edges.begin(), tree.edges.end());
  for (const auto& f : tree.edges)
    for (const auto& e : host.edges) {
      if (in_tree.count(e)) continue;
      std::vector<EdgePair> cand;
      for (const auto& g : tree.edges)
        if (!(g == f)) cand.push_back(g);
      cand.push_back(e);
      std::sort(cand.begin(), cand.end());
      if (graycode::is_spanning_tree(host, cand))
        out.insert(EdgeSubset{SubsetRole::spanning_tree, tree.host_n, cand});
    }
  return out;
}

// cycle count of the symmetric difference, computed by explicit walking
inline int symdiff_cycle_count(const EdgeSubset& x, const EdgeSubset& y) {
  std::set<EdgePair> xs(x.edges.begin(), x.edges.end()), ys(y.edges.begin(), y.edges.end());
  std::map<std::string, std::vector<std::string>> adj;
  int edges = 0;
  auto add = [&](const EdgePair& e) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
    ++edges;
  };
  for (const auto& e : x.edges)
    if (!ys.count(e)) add(e);
  for (const auto& e : y.edges)
    if (!xs.count(e)) add(e);
  if (edges == 0) return 0;
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) return -1;  // not a disjoint union of cycles
  std::set<std::string> seen;
  int cycles = 0;
  for (const auto& [v, nb] : adj) {
    if (seen.count(v)) continue;
    ++cycles;
    std::vector<std::string> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      std::string u = stack.back();
      stack.pop_back();
      for (const auto& w : adj[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return cycles;
}

inline std::set<std::string> shift_images(const std::string& x) {
  std::set<std::string> out;
  for (char c : {'0', '1'}) {
    std::string y = x.substr(1) + c;
    if (y != x) out.insert(y);
  }
  return out;
}

inline std::set<std::vector<int>> shorthand_images(const std::vector<int>& x) {
  std::set<std::vector<int>> out;
  if (x.size() < 2) return out;
  std::vector<int> s0(x.begin() + 1, x.end());
  s0.push_back(x[0]);
  std::vector<int> s1(x.begin() + 1, x.end() - 1);
  s1.push_back(x[0]);
  s1.push_back(x.back());
  if (s0 != x) out.insert(s0);
  if (s1 != x) out.insert(s1);
  return out;
}

// ---- small universes ----

inline std::vector<std::string> combinations_universe(int n, int k) {
  std::vector<std::string> out;
  for (const auto& s : graycode::all_bitstrings(n))
    if (graycode::bit_weight(s) == k) out.push_back(s);
  return out;
}

inline std::vector<SetPartition> all_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      SetPartition p;
      p.blocks.assign(blocks, {});
      for (int t = 0; t < n; ++t) p.blocks[assign[t]].push_back(t + 1);
      graycode::canonicalize(p);
      out.push_back(p);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assign[i] = b;
      self(self, i + 1, blocks + (b == blocks ? 1 : 0));
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::vector<EdgeSubset> all_spanning_trees(const graycode::DiamondGraph& host) {
  std::vector<EdgeSubset> out;
  int total = static_cast<int>(host.edges.size());
  int want = 4 * host.n - 1;
  std::vector<int> pick(want);
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == want) {
      std::vector<EdgePair> edges;
      for (int id : pick) edges.push_back(host.edges[id]);
      if (graycode::is_spanning_tree(host, edges))
        out.push_back(EdgeSubset{SubsetRole::spanning_tree, host.n, edges});
      return;
    }
    for (int e = from; e < total; ++e) {
      pick[depth] = e;
      self(self, e + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::vector<EdgeSubset> all_matchings(const graycode::DiamondGraph& host) {
  std::vector<EdgeSubset> out;
  int total = static_cast<int>(host.edges.size());
  int want = 2 * host.n;
  std::vector<int> pick(want);
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == want) {
      std::vector<EdgePair> edges;
      for (int id : pick) edges.push_back(host.edges[id]);
      if (graycode::is_perfect_matching(host, edges))
        out.push_back(EdgeSubset{SubsetRole::perfect_matching, host.n, edges});
      return;
    }
    for (int e = from; e < total; ++e) {
      pick[depth] = e;
      self(self, e + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace oracle
