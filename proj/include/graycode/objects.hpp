#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "graycode/errors.hpp"

namespace graycode {

struct BitString {
  std::string bits;
  auto operator<=>(const BitString&) const = default;
};

struct Tuple2 {
  long a = 0;
  long b = 0;
  auto operator<=>(const Tuple2&) const = default;
};

struct Permutation {
  std::vector<int> vals;  // values 1..n
  auto operator<=>(const Permutation&) const = default;
};

struct Combination {
  std::string bits;  // 0/1 string, weight fixed per instance
  auto operator<=>(const Combination&) const = default;
};

struct SetPartition {
  // canonical: elements ascending within a block, blocks ordered by least element
  std::vector<std::vector<int>> blocks;
  auto operator<=>(const SetPartition&) const = default;

  int ground() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }
};

using VertexName = std::string;
using EdgePair = std::pair<VertexName, VertexName>;

inline EdgePair make_edge(VertexName a, VertexName b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

enum class SubsetRole { spanning_tree, perfect_matching };

struct EdgeSubset {
  SubsetRole role = SubsetRole::spanning_tree;
  int host_n = 0;  // edges live in the diamond graph D_host_n
  std::vector<EdgePair> edges;  // each pair canonical, list sorted
  auto operator<=>(const EdgeSubset&) const = default;
};

// D_n: n diamonds N_i/S_i/E_i/W_i joined by E_i W_{i+1}
struct DiamondGraph {
  int n = 0;
  std::vector<VertexName> vertices;  // 4n
  std::vector<EdgePair> edges;       // 5n-1, sorted
};

inline VertexName diamond_vertex(char side, int i) { return std::string(1, side) + std::to_string(i); }

inline DiamondGraph build_diamond_graph(int n) {
  if (n < 1) fail(errc::invariant_violation, "diamond graph needs n >= 1");
  DiamondGraph g;
  g.n = n;
  for (int i = 1; i <= n; ++i)
    for (char side : {'N', 'S', 'E', 'W'}) g.vertices.push_back(diamond_vertex(side, i));
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back(make_edge(diamond_vertex('N', i), diamond_vertex('E', i)));
    g.edges.push_back(make_edge(diamond_vertex('N', i), diamond_vertex('W', i)));
    g.edges.push_back(make_edge(diamond_vertex('S', i), diamond_vertex('E', i)));
    g.edges.push_back(make_edge(diamond_vertex('S', i), diamond_vertex('W', i)));
  }
  for (int i = 1; i + 1 <= n; ++i)
    g.edges.push_back(make_edge(diamond_vertex('E', i), diamond_vertex('W', i + 1)));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

enum class Kind {
  bitstring,
  tuple,
  permutation,
  combination,
  setpartition,
  ncsetpartition,
  spanningtree,
  perfectmatching,
};

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::bitstring: return "bitstring";
    case Kind::tuple: return "tuple";
    case Kind::permutation: return "permutation";
    case Kind::combination: return "combination";
    case Kind::setpartition: return "setpartition";
    case Kind::ncsetpartition: return "ncsetpartition";
    case Kind::spanningtree: return "spanningtree";
    case Kind::perfectmatching: return "perfectmatching";
  }
  return "?";
}

inline Kind kind_from_name(const std::string& s) {
  for (Kind k : {Kind::bitstring, Kind::tuple, Kind::permutation, Kind::combination,
                 Kind::setpartition, Kind::ncsetpartition, Kind::spanningtree,
                 Kind::perfectmatching})
    if (s == kind_name(k)) return k;
  fail(errc::malformed_text, "unknown kind tag '" + s + "'");
}

using Object = std::variant<BitString, Tuple2, Permutation, Combination, SetPartition, EdgeSubset>;

// ---- validation helpers ----

inline void require_bits(const std::string& s, const char* what) {
  if (s.empty()) fail(errc::malformed_text, std::string(what) + " is empty");
  for (char c : s)
    if (c != '0' && c != '1') fail(errc::malformed_text, std::string(what) + " has non-binary char");
}

inline int bit_weight(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '1'));
}

inline void validate_permutation(const std::vector<int>& v) {
  if (v.empty()) fail(errc::invariant_violation, "empty permutation");
  std::vector<char> seen(v.size() + 1, 0);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x])
      fail(errc::invariant_violation, "values are not a permutation of 1..n");
    seen[x] = 1;
  }
}

inline void canonicalize(SetPartition& p) {
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

inline void validate_set_partition(const SetPartition& p) {
  int n = p.ground();
  if (n == 0) fail(errc::invariant_violation, "empty partition");
  std::vector<char> seen(n + 1, 0);
  for (const auto& b : p.blocks) {
    if (b.empty()) fail(errc::invariant_violation, "empty block");
    for (int x : b) {
      if (x < 1 || x > n || seen[x]) fail(errc::invariant_violation, "blocks do not partition 1..n");
      seen[x] = 1;
    }
  }
}

// blocks A and B cross iff their merged element sequence alternates ABAB or BABA
inline bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  int runs = 0, last = 0;
  while (i < a.size() || j < b.size()) {
    int side;
    if (j >= b.size() || (i < a.size() && a[i] < b[j])) {
      side = 1;
      ++i;
    } else {
      side = 2;
      ++j;
    }
    if (side != last) {
      ++runs;
      last = side;
    }
  }
  return runs >= 4;
}

inline bool non_crossing(const SetPartition& p) {
  for (size_t i = 0; i < p.blocks.size(); ++i)
    for (size_t j = i + 1; j < p.blocks.size(); ++j)
      if (blocks_cross(p.blocks[i], p.blocks[j])) return false;
  return true;
}

inline bool is_peakless(const std::vector<int>& p) {
  for (size_t i = 1; i + 1 < p.size(); ++i)
    if (p[i - 1] < p[i] && p[i] > p[i + 1]) return false;
  return true;
}

inline bool is_peakless(const Permutation& p) { return is_peakless(p.vals); }

namespace detail {
inline bool pattern_dfs(const std::vector<int>& p, const std::vector<int>& pat, size_t t,
                        size_t from, std::vector<int>& chosen) {
  if (t == pat.size()) return true;
  for (size_t i = from; i < p.size(); ++i) {
    bool ok = true;
    for (size_t s = 0; s < t && ok; ++s)
      if ((pat[s] < pat[t]) != (chosen[s] < p[i])) ok = false;
    if (!ok) continue;
    chosen.push_back(p[i]);
    if (pattern_dfs(p, pat, t + 1, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}
}  // namespace detail

// classic pattern containment: some subsequence of p is order-isomorphic to pat
inline bool contains_pattern(const std::vector<int>& p, const std::vector<int>& pat) {
  if (pat.empty()) return true;
  if (pat.size() > p.size()) return false;
  std::vector<int> chosen;
  return detail::pattern_dfs(p, pat, 0, 0, chosen);
}

inline bool contains_pattern(const Permutation& p, const Permutation& pat) {
  return contains_pattern(p.vals, pat.vals);
}

// ---- edge subsets over diamond hosts ----

inline bool vertex_in_host(const VertexName& v, int n) {
  if (v.size() < 2) return false;
  char s = v[0];
  if (s != 'N' && s != 'S' && s != 'E' && s != 'W') return false;
  for (size_t i = 1; i < v.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
  int idx = std::stoi(v.substr(1));
  return idx >= 1 && idx <= n;
}

inline bool is_spanning_tree(const DiamondGraph& host, const std::vector<EdgePair>& edges) {
  int m = host.n * 4;
  if (static_cast<int>(edges.size()) != m - 1) return false;
  std::set<EdgePair> host_edges(host.edges.begin(), host.edges.end());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<VertexName> names = host.vertices;
  std::sort(names.begin(), names.end());
  auto id = [&](const VertexName& v) {
    auto it = std::lower_bound(names.begin(), names.end(), v);
    if (it == names.end() || *it != v) return -1;
    return static_cast<int>(it - names.begin());
  };
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (!host_edges.count(e)) return false;
    int u = id(e.first), v = id(e.second);
    if (u < 0 || v < 0) return false;
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;  // cycle
    parent[ru] = rv;
  }
  int root = find(0);
  for (int i = 1; i < m; ++i)
    if (find(i) != root) return false;
  return true;
}

inline bool is_perfect_matching(const DiamondGraph& host, const std::vector<EdgePair>& edges) {
  if (static_cast<int>(edges.size()) != host.n * 2) return false;
  std::set<EdgePair> host_edges(host.edges.begin(), host.edges.end());
  std::set<VertexName> covered;
  for (const auto& e : edges) {
    if (!host_edges.count(e)) return false;
    if (!covered.insert(e.first).second) return false;
    if (!covered.insert(e.second).second) return false;
  }
  return covered.size() == host.vertices.size();
}

inline void validate_edge_subset(const EdgeSubset& s) {
  if (s.host_n < 1) fail(errc::invariant_violation, "edge subset without host");
  DiamondGraph host = build_diamond_graph(s.host_n);
  for (const auto& e : s.edges) {
    if (!vertex_in_host(e.first, s.host_n) || !vertex_in_host(e.second, s.host_n))
      fail(errc::invariant_violation, "edge endpoint outside host D_" + std::to_string(s.host_n));
  }
  if (s.role == SubsetRole::spanning_tree) {
    if (!is_spanning_tree(host, s.edges)) fail(errc::invariant_violation, "not a spanning tree of the host");
  } else {
    if (!is_perfect_matching(host, s.edges)) fail(errc::invariant_violation, "not a perfect matching of the host");
  }
}

// ---- text formats ----

inline std::string format_permutation(const std::vector<int>& vals) {
  std::string out;
  bool spaced = vals.size() > 9;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (spaced && i) out += ' ';
    out += std::to_string(vals[i]);
  }
  return out;
}

inline std::string format_object(const Object& obj) {
  struct V {
    std::string operator()(const BitString& b) const { return b.bits; }
    std::string operator()(const Tuple2& t) const {
      return std::to_string(t.a) + " " + std::to_string(t.b);
    }
    std::string operator()(const Permutation& p) const { return format_permutation(p.vals); }
    std::string operator()(const Combination& c) const { return c.bits; }
    std::string operator()(const SetPartition& p) const {
      bool spaced = p.ground() > 9;
      std::string out;
      for (size_t i = 0; i < p.blocks.size(); ++i) {
        if (i) out += '|';
        for (size_t j = 0; j < p.blocks[i].size(); ++j) {
          if (spaced && j) out += ',';
          out += std::to_string(p.blocks[i][j]);
        }
      }
      return out;
    }
    std::string operator()(const EdgeSubset& s) const {
      std::string out;
      for (size_t i = 0; i < s.edges.size(); ++i) {
        if (i) out += ',';
        out += s.edges[i].first + "-" + s.edges[i].second;
      }
      return out;
    }
  };
  return std::visit(V{}, obj);
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, char sep, const char* what) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, sep)) {
    if (tok.empty()) fail(errc::malformed_text, std::string(what) + ": empty field");
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(errc::malformed_text, std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  if (out.empty()) fail(errc::malformed_text, std::string(what) + ": empty");
  return out;
}

inline std::vector<int> parse_symbol_seq(const std::string& text, const char* what) {
  if (text.find(' ') != std::string::npos) return parse_int_list(text, ' ', what);
  std::vector<int> out;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
      fail(errc::malformed_text, std::string(what) + ": bad symbol '" + std::string(1, c) + "'");
    out.push_back(c - '0');
  }
  if (out.empty()) fail(errc::malformed_text, std::string(what) + ": empty");
  return out;
}

inline SetPartition parse_partition_text(const std::string& text) {
  SetPartition p;
  std::string block;
  std::istringstream in(text);
  while (std::getline(in, block, '|')) {
    if (block.empty()) fail(errc::malformed_text, "partition: empty block");
    if (block.find(',') != std::string::npos)
      p.blocks.push_back(parse_int_list(block, ',', "partition"));
    else {
      std::vector<int> b;
      for (char c : block) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
          fail(errc::malformed_text, "partition: bad element");
        b.push_back(c - '0');
      }
      p.blocks.push_back(std::move(b));
    }
  }
  canonicalize(p);
  validate_set_partition(p);
  return p;
}

inline EdgeSubset parse_edge_subset_text(SubsetRole role, const std::string& text) {
  EdgeSubset s;
  s.role = role;
  std::string tok;
  std::istringstream in(text);
  int max_idx = 0;
  while (std::getline(in, tok, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
      fail(errc::malformed_text, "edge subset: bad edge '" + tok + "'");
    VertexName u = tok.substr(0, dash), v = tok.substr(dash + 1);
    for (const VertexName& w : {u, v}) {
      if (w.size() < 2 || (w[0] != 'N' && w[0] != 'S' && w[0] != 'E' && w[0] != 'W'))
        fail(errc::malformed_text, "edge subset: bad vertex '" + w + "'");
      for (size_t i = 1; i < w.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(w[i])))
          fail(errc::malformed_text, "edge subset: bad vertex '" + w + "'");
      max_idx = std::max(max_idx, std::stoi(w.substr(1)));
    }
    s.edges.push_back(make_edge(u, v));
  }
  if (s.edges.empty()) fail(errc::malformed_text, "edge subset: no edges");
  std::sort(s.edges.begin(), s.edges.end());
  if (std::adjacent_find(s.edges.begin(), s.edges.end()) != s.edges.end())
    fail(errc::malformed_text, "edge subset: repeated edge");
  s.host_n = max_idx;
  validate_edge_subset(s);
  return s;
}

}  // namespace detail

inline Object parse_object(Kind kind, const std::string& text) {
  switch (kind) {
    case Kind::bitstring: {
      require_bits(text, "bitstring");
      return BitString{text};
    }
    case Kind::tuple: {
      auto v = detail::parse_int_list(text, ' ', "tuple");
      if (v.size() != 2) fail(errc::malformed_text, "tuple needs exactly two values");
      if (v[0] < 1 || v[1] < 1) fail(errc::invariant_violation, "tuple values must be positive");
      return Tuple2{v[0], v[1]};
    }
    case Kind::permutation: {
      Permutation p{detail::parse_symbol_seq(text, "permutation")};
      validate_permutation(p.vals);
      return p;
    }
    case Kind::combination: {
      require_bits(text, "combination");
      return Combination{text};
    }
    case Kind::setpartition:
      return detail::parse_partition_text(text);
    case Kind::ncsetpartition: {
      SetPartition p = detail::parse_partition_text(text);
      if (!non_crossing(p)) fail(errc::invariant_violation, "partition has crossing blocks");
      return p;
    }
    case Kind::spanningtree:
      return detail::parse_edge_subset_text(SubsetRole::spanning_tree, text);
    case Kind::perfectmatching:
      return detail::parse_edge_subset_text(SubsetRole::perfect_matching, text);
  }
  fail(errc::malformed_text, "bad kind");
}

// enumeration helpers used by generators and verification sweeps

inline std::vector<std::string> all_bitstrings(int n) {
  std::vector<std::string> out;
  out.reserve(1u << n);
  for (unsigned v = 0; v < (1u << n); ++v) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
      if (v & (1u << (n - 1 - i))) s[i] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace graycode
