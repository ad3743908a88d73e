#pragma once

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graycode/objects.hpp"

namespace graycode {

enum class FlipFamily {
  bitflip,
  substring_complement,
  pm1_tuple,
  swap,
  transposition,
  reversal,
  rotation,
  jump,
  refinement,
  edge_exchange,
  alternating_cycle,
  register_shift,
  shorthand_rotation,
};

inline const char* flip_name(FlipFamily f) {
  switch (f) {
    case FlipFamily::bitflip: return "bitflip";
    case FlipFamily::substring_complement: return "substring_complement";
    case FlipFamily::pm1_tuple: return "pm1_tuple";
    case FlipFamily::swap: return "swap";
    case FlipFamily::transposition: return "transposition";
    case FlipFamily::reversal: return "reversal";
    case FlipFamily::rotation: return "rotation";
    case FlipFamily::jump: return "jump";
    case FlipFamily::refinement: return "refinement";
    case FlipFamily::edge_exchange: return "edge_exchange";
    case FlipFamily::alternating_cycle: return "alternating_cycle";
    case FlipFamily::register_shift: return "register_shift";
    case FlipFamily::shorthand_rotation: return "shorthand_rotation";
  }
  return "?";
}

inline FlipFamily flip_from_name(const std::string& s) {
  for (FlipFamily f :
       {FlipFamily::bitflip, FlipFamily::substring_complement, FlipFamily::pm1_tuple,
        FlipFamily::swap, FlipFamily::transposition, FlipFamily::reversal, FlipFamily::rotation,
        FlipFamily::jump, FlipFamily::refinement, FlipFamily::edge_exchange,
        FlipFamily::alternating_cycle, FlipFamily::register_shift, FlipFamily::shorthand_rotation})
    if (s == flip_name(f)) return f;
  fail(errc::malformed_text, "unknown flip tag '" + s + "'");
}

// register_shift and shorthand_rotation are not involutions; their flip graphs are directed
inline bool flip_directed(FlipFamily f) {
  return f == FlipFamily::register_shift || f == FlipFamily::shorthand_rotation;
}

inline bool flip_applicable(Kind k, FlipFamily f) {
  switch (k) {
    case Kind::bitstring:
      return f == FlipFamily::bitflip || f == FlipFamily::substring_complement ||
             f == FlipFamily::register_shift;
    case Kind::tuple:
      return f == FlipFamily::pm1_tuple;
    case Kind::permutation:
      return f == FlipFamily::swap || f == FlipFamily::transposition ||
             f == FlipFamily::reversal || f == FlipFamily::rotation || f == FlipFamily::jump ||
             f == FlipFamily::shorthand_rotation;
    case Kind::combination:
      return f == FlipFamily::swap || f == FlipFamily::transposition ||
             f == FlipFamily::reversal || f == FlipFamily::rotation ||
             f == FlipFamily::substring_complement;
    case Kind::setpartition:
    case Kind::ncsetpartition:
      return f == FlipFamily::refinement;
    case Kind::spanningtree:
      return f == FlipFamily::edge_exchange;
    case Kind::perfectmatching:
      return f == FlipFamily::alternating_cycle;
  }
  return false;
}

// ---- predicates; callers guarantee equal sizes ----

inline bool adjacent_bitflip(const std::string& x, const std::string& y) {
  int d = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i] && ++d > 1) return false;
  return d == 1;
}

inline bool adjacent_substring_complement(const std::string& x, const std::string& y) {
  size_t n = x.size(), i = 0;
  while (i < n && x[i] == y[i]) ++i;
  if (i == n) return false;
  size_t j = n - 1;
  while (x[j] == y[j]) --j;
  for (size_t k = i; k <= j; ++k)
    if (x[k] == y[k]) return false;
  return true;
}

inline bool adjacent_pm1(const Tuple2& x, const Tuple2& y) {
  return std::labs(x.a - y.a) + std::labs(x.b - y.b) == 1;
}

template <class Seq>
bool seq_adjacent_swap(const Seq& x, const Seq& y) {
  size_t n = x.size(), i = 0;
  while (i < n && x[i] == y[i]) ++i;
  if (i + 1 >= n) return false;
  if (!(y[i] == x[i + 1] && y[i + 1] == x[i])) return false;
  for (size_t k = i + 2; k < n; ++k)
    if (x[k] != y[k]) return false;
  return true;
}

template <class Seq>
bool seq_adjacent_transposition(const Seq& x, const Seq& y) {
  size_t n = x.size(), i = n, j = n;
  for (size_t k = 0; k < n; ++k) {
    if (x[k] == y[k]) continue;
    if (i == n) i = k;
    else if (j == n) j = k;
    else return false;
  }
  if (j == n) return false;
  return y[i] == x[j] && y[j] == x[i];
}

template <class Seq>
bool seq_adjacent_reversal(const Seq& x, const Seq& y) {
  size_t n = x.size(), i = 0;
  while (i < n && x[i] == y[i]) ++i;
  if (i == n) return false;
  size_t j = n - 1;
  while (x[j] == y[j]) --j;
  for (size_t k = i; k <= j; ++k)
    if (y[k] != x[i + j - k]) return false;
  return true;
}

template <class Seq>
bool seq_adjacent_rotation(const Seq& x, const Seq& y) {
  size_t n = x.size(), i = 0;
  while (i < n && x[i] == y[i]) ++i;
  if (i == n) return false;
  size_t j = n - 1;
  while (x[j] == y[j]) --j;
  if (i == j) return false;
  bool left = y[j] == x[i];
  for (size_t k = i; k < j && left; ++k) left = y[k] == x[k + 1];
  if (left) return true;
  bool right = y[i] == x[j];
  for (size_t k = i + 1; k <= j && right; ++k) right = y[k] == x[k - 1];
  return right;
}

// one value hops over a run of strictly smaller values, in either direction
inline bool adjacent_jump(const std::vector<int>& x, const std::vector<int>& y) {
  size_t n = x.size(), i = 0;
  while (i < n && x[i] == y[i]) ++i;
  if (i == n) return false;
  size_t j = n - 1;
  while (x[j] == y[j]) --j;
  if (i == j) return false;
  bool right = y[j] == x[i];
  for (size_t k = i; k < j && right; ++k) right = y[k] == x[k + 1] && x[k + 1] < x[i];
  if (right) return true;
  bool left = y[i] == x[j];
  for (size_t k = i + 1; k <= j && left; ++k) left = y[k] == x[k - 1] && x[k - 1] < x[j];
  return left;
}

namespace detail {
inline bool split_matches(const std::vector<int>& whole, const std::vector<int>& a,
                          const std::vector<int>& b) {
  if (a.size() + b.size() != whole.size()) return false;
  std::vector<int> merged;
  merged.reserve(whole.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return merged == whole;
}
}  // namespace detail

// one block split in two, or the reverse merge
inline bool adjacent_refinement(const SetPartition& p, const SetPartition& q) {
  std::set<std::vector<int>> sp(p.blocks.begin(), p.blocks.end());
  std::set<std::vector<int>> sq(q.blocks.begin(), q.blocks.end());
  std::vector<const std::vector<int>*> dp, dq;
  for (const auto& b : p.blocks)
    if (!sq.count(b)) dp.push_back(&b);
  for (const auto& b : q.blocks)
    if (!sp.count(b)) dq.push_back(&b);
  if (dp.size() == 1 && dq.size() == 2) return detail::split_matches(*dp[0], *dq[0], *dq[1]);
  if (dp.size() == 2 && dq.size() == 1) return detail::split_matches(*dq[0], *dp[0], *dp[1]);
  return false;
}

inline bool adjacent_edge_exchange(const EdgeSubset& x, const EdgeSubset& y) {
  size_t only_x = 0, only_y = 0, i = 0, j = 0;
  while (i < x.edges.size() || j < y.edges.size()) {
    if (j >= y.edges.size() || (i < x.edges.size() && x.edges[i] < y.edges[j])) {
      ++only_x;
      ++i;
    } else if (i >= x.edges.size() || y.edges[j] < x.edges[i]) {
      ++only_y;
      ++j;
    } else {
      ++i;
      ++j;
    }
    if (only_x > 1 || only_y > 1) return false;
  }
  return only_x == 1 && only_y == 1;
}

// symmetric difference of the two matchings is a single cycle
inline bool adjacent_alternating_cycle(const EdgeSubset& x, const EdgeSubset& y) {
  std::vector<EdgePair> diff;
  std::set_symmetric_difference(x.edges.begin(), x.edges.end(), y.edges.begin(), y.edges.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return false;
  std::map<VertexName, std::vector<int>> inc;
  for (int e = 0; e < static_cast<int>(diff.size()); ++e) {
    inc[diff[e].first].push_back(e);
    inc[diff[e].second].push_back(e);
  }
  for (const auto& [v, es] : inc)
    if (es.size() != 2) return false;
  std::vector<char> seen(diff.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (const VertexName& v : {diff[e].first, diff[e].second})
      for (int f : inc[v])
        if (!seen[f]) {
          seen[f] = 1;
          ++reached;
          stack.push_back(f);
        }
  }
  return reached == diff.size();
}

inline bool adjacent_register_shift(const std::string& x, const std::string& y) {
  if (x == y) return false;
  return std::equal(x.begin() + 1, x.end(), y.begin());
}

inline bool adjacent_shorthand_rotation(const std::vector<int>& x, const std::vector<int>& y) {
  if (x == y) return false;
  size_t n = x.size();
  bool full = y[n - 1] == x[0];
  for (size_t k = 0; k + 1 < n && full; ++k) full = y[k] == x[k + 1];
  if (full) return true;
  if (n < 2) return false;
  bool partial = y[n - 1] == x[n - 1] && y[n - 2] == x[0];
  for (size_t k = 0; k + 2 < n && partial; ++k) partial = y[k] == x[k + 1];
  return partial;
}

// ---- dispatch over instance objects ----

namespace detail {

inline const std::string* as_bits(const Object& o) {
  if (auto* b = std::get_if<BitString>(&o)) return &b->bits;
  return nullptr;
}

inline const std::string* as_combo(const Object& o) {
  if (auto* c = std::get_if<Combination>(&o)) return &c->bits;
  return nullptr;
}

template <class T>
const T* pair_get(const Object& x, const Object& y, const T** second) {
  const T* a = std::get_if<T>(&x);
  *second = std::get_if<T>(&y);
  return a;
}

}  // namespace detail

inline bool flip_adjacent(FlipFamily f, const Object& x, const Object& y) {
  auto need_same_size = [](size_t a, size_t b) {
    if (a != b) fail(errc::size_mismatch, "objects have different sizes");
  };
  switch (f) {
    case FlipFamily::bitflip: {
      const std::string *a = detail::as_bits(x), *b = detail::as_bits(y);
      if (!a || !b) fail(errc::inapplicable_flip, "bitflip needs bitstrings");
      need_same_size(a->size(), b->size());
      return adjacent_bitflip(*a, *b);
    }
    case FlipFamily::substring_complement: {
      const std::string *a = detail::as_bits(x), *b = detail::as_bits(y);
      if (!a) a = detail::as_combo(x);
      if (!b) b = detail::as_combo(y);
      if (!a || !b) fail(errc::inapplicable_flip, "substring_complement needs binary strings");
      need_same_size(a->size(), b->size());
      return adjacent_substring_complement(*a, *b);
    }
    case FlipFamily::pm1_tuple: {
      const Tuple2* b = nullptr;
      const Tuple2* a = detail::pair_get<Tuple2>(x, y, &b);
      if (!a || !b) fail(errc::inapplicable_flip, "pm1_tuple needs tuples");
      return adjacent_pm1(*a, *b);
    }
    case FlipFamily::swap:
    case FlipFamily::transposition:
    case FlipFamily::reversal:
    case FlipFamily::rotation: {
      const Permutation* pb = nullptr;
      if (const Permutation* pa = detail::pair_get<Permutation>(x, y, &pb); pa && pb) {
        need_same_size(pa->vals.size(), pb->vals.size());
        switch (f) {
          case FlipFamily::swap: return seq_adjacent_swap(pa->vals, pb->vals);
          case FlipFamily::transposition: return seq_adjacent_transposition(pa->vals, pb->vals);
          case FlipFamily::reversal: return seq_adjacent_reversal(pa->vals, pb->vals);
          default: return seq_adjacent_rotation(pa->vals, pb->vals);
        }
      }
      const std::string *a = detail::as_combo(x), *b = detail::as_combo(y);
      if (!a || !b) fail(errc::inapplicable_flip, "sequence flip needs permutations or combinations");
      need_same_size(a->size(), b->size());
      switch (f) {
        case FlipFamily::swap: return seq_adjacent_swap(*a, *b);
        case FlipFamily::transposition: return seq_adjacent_transposition(*a, *b);
        case FlipFamily::reversal: return seq_adjacent_reversal(*a, *b);
        default: return seq_adjacent_rotation(*a, *b);
      }
    }
    case FlipFamily::jump: {
      const Permutation* b = nullptr;
      const Permutation* a = detail::pair_get<Permutation>(x, y, &b);
      if (!a || !b) fail(errc::inapplicable_flip, "jump needs permutations");
      need_same_size(a->vals.size(), b->vals.size());
      return adjacent_jump(a->vals, b->vals);
    }
    case FlipFamily::refinement: {
      const SetPartition* b = nullptr;
      const SetPartition* a = detail::pair_get<SetPartition>(x, y, &b);
      if (!a || !b) fail(errc::inapplicable_flip, "refinement needs set partitions");
      need_same_size(a->ground(), b->ground());
      return adjacent_refinement(*a, *b);
    }
    case FlipFamily::edge_exchange:
    case FlipFamily::alternating_cycle: {
      const EdgeSubset* b = nullptr;
      const EdgeSubset* a = detail::pair_get<EdgeSubset>(x, y, &b);
      if (!a || !b) fail(errc::inapplicable_flip, "edge flip needs edge subsets");
      if (a->host_n != b->host_n || a->role != b->role)
        fail(errc::size_mismatch, "edge subsets over different hosts");
      SubsetRole want = f == FlipFamily::edge_exchange ? SubsetRole::spanning_tree
                                                       : SubsetRole::perfect_matching;
      if (a->role != want) fail(errc::inapplicable_flip, "edge flip role mismatch");
      return f == FlipFamily::edge_exchange ? adjacent_edge_exchange(*a, *b)
                                            : adjacent_alternating_cycle(*a, *b);
    }
    case FlipFamily::register_shift: {
      const BitString* b = nullptr;
      const BitString* a = detail::pair_get<BitString>(x, y, &b);
      if (!a || !b) fail(errc::inapplicable_flip, "register_shift needs bitstrings");
      need_same_size(a->bits.size(), b->bits.size());
      return adjacent_register_shift(a->bits, b->bits);
    }
    case FlipFamily::shorthand_rotation: {
      const Permutation* b = nullptr;
      const Permutation* a = detail::pair_get<Permutation>(x, y, &b);
      if (!a || !b) fail(errc::inapplicable_flip, "shorthand_rotation needs permutations");
      need_same_size(a->vals.size(), b->vals.size());
      return adjacent_shorthand_rotation(a->vals, b->vals);
    }
  }
  fail(errc::inapplicable_flip, "bad flip family");
}

}  // namespace graycode
