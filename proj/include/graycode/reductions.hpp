#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graycode/instance.hpp"

namespace graycode {

enum class ReductionTag {
  tuples_normalize,
  tuples_to_bits,
  tuples_to_perms,
  bits_to_ncpartitions,
  bits_to_combos_swap,
  bits_to_combos_complement,
  bits_to_combos_reversal,
  bits_to_perms_pairs,
  bits_to_peakless,
  bits_to_trees,
  bits_to_matchings,
};

inline constexpr ReductionTag kAllReductionTags[] = {
    ReductionTag::tuples_normalize,     ReductionTag::tuples_to_bits,
    ReductionTag::tuples_to_perms,      ReductionTag::bits_to_ncpartitions,
    ReductionTag::bits_to_combos_swap,  ReductionTag::bits_to_combos_complement,
    ReductionTag::bits_to_combos_reversal, ReductionTag::bits_to_perms_pairs,
    ReductionTag::bits_to_peakless,     ReductionTag::bits_to_trees,
    ReductionTag::bits_to_matchings,
};

inline const char* reduction_name(ReductionTag t) {
  switch (t) {
    case ReductionTag::tuples_normalize: return "tuples_normalize";
    case ReductionTag::tuples_to_bits: return "tuples_to_bits";
    case ReductionTag::tuples_to_perms: return "tuples_to_perms";
    case ReductionTag::bits_to_ncpartitions: return "bits_to_ncpartitions";
    case ReductionTag::bits_to_combos_swap: return "bits_to_combos_swap";
    case ReductionTag::bits_to_combos_complement: return "bits_to_combos_complement";
    case ReductionTag::bits_to_combos_reversal: return "bits_to_combos_reversal";
    case ReductionTag::bits_to_perms_pairs: return "bits_to_perms_pairs";
    case ReductionTag::bits_to_peakless: return "bits_to_peakless";
    case ReductionTag::bits_to_trees: return "bits_to_trees";
    case ReductionTag::bits_to_matchings: return "bits_to_matchings";
  }
  return "?";
}

inline ReductionTag reduction_from_name(const std::string& s) {
  for (ReductionTag t : kAllReductionTags)
    if (s == reduction_name(t)) return t;
  fail(errc::malformed_text, "unknown reduction tag '" + s + "'");
}

struct NormalizeOutcome {
  bool no_instance = false;
  int reason_case = 0;  // 1: gap among first coordinates, 2: among second
  long gap_value = 0;
  std::vector<Tuple2> tuples;
};

inline bool is_continuous(const std::vector<Tuple2>& L) {
  if (L.empty()) return true;
  std::set<long> av, bv;
  for (const auto& t : L) {
    av.insert(t.a);
    bv.insert(t.b);
  }
  for (const auto* s : {&av, &bv}) {
    long expect = 1;
    for (long v : *s)
      if (v != expect++) return false;
  }
  return true;
}

inline NormalizeOutcome normalize_continuous(const std::vector<Tuple2>& L) {
  if (L.empty()) fail(errc::empty_instance, "cannot normalize an empty tuple list");
  NormalizeOutcome out;
  std::set<long> av, bv;
  for (const auto& t : L) {
    av.insert(t.a);
    bv.insert(t.b);
  }
  int which = 1;
  for (const auto* s : {&av, &bv}) {
    long prev = *s->begin();
    for (long v : *s) {
      if (v > prev + 1) {
        out.no_instance = true;
        out.reason_case = which;
        out.gap_value = prev + 1;
        return out;
      }
      prev = v;
    }
    ++which;
  }
  long da = 1 - *av.begin(), db = 1 - *bv.begin();
  out.tuples.reserve(L.size());
  for (const auto& t : L) out.tuples.push_back({t.a + da, t.b + db});
  return out;
}

inline std::vector<BitString> tuples_to_bitstrings(const std::vector<Tuple2>& L) {
  std::vector<BitString> out;
  if (L.empty()) return out;
  if (!is_continuous(L)) fail(errc::not_continuous, "tuple list must be continuous");
  size_t a = 0, b = 0;
  for (const auto& t : L) {
    a = std::max(a, static_cast<size_t>(t.a));
    b = std::max(b, static_cast<size_t>(t.b));
  }
  out.reserve(L.size());
  for (const auto& t : L) {
    size_t x = static_cast<size_t>(t.a), y = static_cast<size_t>(t.b);
    std::string s;
    s.reserve(a + b);
    s.append(x, '0').append(a - x, '1').append(y, '0').append(b - y, '1');
    out.push_back({std::move(s)});
  }
  return out;
}

inline std::vector<Permutation> tuples_to_permutations(const std::vector<Tuple2>& L) {
  std::vector<Permutation> out;
  if (L.empty()) return out;
  if (!is_continuous(L)) fail(errc::not_continuous, "tuple list must be continuous");
  int a = 0, b = 0;
  for (const auto& t : L) {
    a = std::max(a, static_cast<int>(t.a));
    b = std::max(b, static_cast<int>(t.b));
  }
  int n = a + b + 2;
  out.reserve(L.size());
  for (const auto& t : L) {
    std::vector<int> vals(n, 0);
    vals[t.a - 1] = a + b + 1;
    vals[a + t.b - 1] = a + b + 2;
    int sym = 1;
    for (int& v : vals)
      if (v == 0) v = sym++;
    out.push_back({std::move(vals)});
  }
  return out;
}

// one non-singleton block collecting 1 and every position holding a 1-bit
inline std::vector<SetPartition> bits_to_ncpartitions(const std::vector<BitString>& B) {
  std::vector<SetPartition> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    int n = static_cast<int>(s.bits.size());
    SetPartition p;
    std::vector<int> main{1};
    for (int i = 0; i < n; ++i)
      if (s.bits[i] == '1') main.push_back(i + 2);
    p.blocks.push_back(std::move(main));
    for (int i = 0; i < n; ++i)
      if (s.bits[i] == '0') p.blocks.push_back({i + 2});
    canonicalize(p);
    out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<Combination> bits_to_combinations_swap(const std::vector<BitString>& B) {
  std::vector<Combination> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    std::string c;
    c.reserve(2 * s.bits.size());
    for (char bit : s.bits) c += bit == '0' ? "01" : "10";
    out.push_back({std::move(c)});
  }
  return out;
}

inline std::vector<Combination> bits_to_combinations_complement(const std::vector<BitString>& B) {
  std::vector<Combination> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    std::string c;
    for (size_t i = 0; i < s.bits.size(); ++i) {
      if (i) c += '1';
      c += s.bits[i] == '0' ? "01" : "10";
    }
    out.push_back({std::move(c)});
  }
  return out;
}

inline std::vector<Combination> bits_to_combinations_reversal(const std::vector<BitString>& B) {
  std::vector<Combination> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    std::string c;
    for (size_t i = 0; i < s.bits.size(); ++i) {
      if (i) c += "01";
      c += s.bits[i] == '0' ? "01" : "10";
    }
    out.push_back({std::move(c)});
  }
  return out;
}

inline std::vector<Permutation> bits_to_permutations_pairs(const std::vector<BitString>& B) {
  std::vector<Permutation> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    std::vector<int> vals;
    vals.reserve(2 * s.bits.size());
    for (size_t i = 0; i < s.bits.size(); ++i) {
      int lo = static_cast<int>(2 * i + 1), hi = lo + 1;
      if (s.bits[i] == '0') {
        vals.push_back(lo);
        vals.push_back(hi);
      } else {
        vals.push_back(hi);
        vals.push_back(lo);
      }
    }
    out.push_back({std::move(vals)});
  }
  return out;
}

// string holds b_2..b_n; symbol i goes leftmost on a 1-bit, rightmost on a 0-bit
inline std::vector<Permutation> bits_to_peakless(const std::vector<BitString>& B) {
  std::vector<Permutation> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    std::vector<int> vals{1};
    for (size_t i = 0; i < s.bits.size(); ++i) {
      int sym = static_cast<int>(i) + 2;
      if (s.bits[i] == '1')
        vals.insert(vals.begin(), sym);
      else
        vals.push_back(sym);
    }
    out.push_back({std::move(vals)});
  }
  return out;
}

inline std::vector<EdgeSubset> bits_to_spanning_trees(const std::vector<BitString>& B) {
  std::vector<EdgeSubset> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    int n = static_cast<int>(s.bits.size());
    EdgeSubset t;
    t.role = SubsetRole::spanning_tree;
    t.host_n = n;
    for (int i = 1; i <= n; ++i) {
      t.edges.push_back(make_edge(diamond_vertex('W', i), diamond_vertex('S', i)));
      t.edges.push_back(make_edge(diamond_vertex('E', i), diamond_vertex('S', i)));
      char up = s.bits[i - 1] == '0' ? 'W' : 'E';
      t.edges.push_back(make_edge(diamond_vertex(up, i), diamond_vertex('N', i)));
    }
    for (int i = 1; i + 1 <= n; ++i)
      t.edges.push_back(make_edge(diamond_vertex('E', i), diamond_vertex('W', i + 1)));
    std::sort(t.edges.begin(), t.edges.end());
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<EdgeSubset> bits_to_matchings(const std::vector<BitString>& B) {
  std::vector<EdgeSubset> out;
  out.reserve(B.size());
  for (const auto& s : B) {
    int n = static_cast<int>(s.bits.size());
    EdgeSubset m;
    m.role = SubsetRole::perfect_matching;
    m.host_n = n;
    for (int i = 1; i <= n; ++i) {
      if (s.bits[i - 1] == '0') {
        m.edges.push_back(make_edge(diamond_vertex('W', i), diamond_vertex('N', i)));
        m.edges.push_back(make_edge(diamond_vertex('E', i), diamond_vertex('S', i)));
      } else {
        m.edges.push_back(make_edge(diamond_vertex('E', i), diamond_vertex('N', i)));
        m.edges.push_back(make_edge(diamond_vertex('W', i), diamond_vertex('S', i)));
      }
    }
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(std::move(m));
  }
  return out;
}

struct ReductionRoute {
  Kind src_kind;
  FlipFamily src_flip;
  Kind dst_kind;
  FlipFamily dst_flip;
};

inline ReductionRoute reduction_route(ReductionTag t) {
  switch (t) {
    case ReductionTag::tuples_normalize:
      return {Kind::tuple, FlipFamily::pm1_tuple, Kind::tuple, FlipFamily::pm1_tuple};
    case ReductionTag::tuples_to_bits:
      return {Kind::tuple, FlipFamily::pm1_tuple, Kind::bitstring, FlipFamily::bitflip};
    case ReductionTag::tuples_to_perms:
      return {Kind::tuple, FlipFamily::pm1_tuple, Kind::permutation, FlipFamily::swap};
    case ReductionTag::bits_to_ncpartitions:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::ncsetpartition, FlipFamily::refinement};
    case ReductionTag::bits_to_combos_swap:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::combination, FlipFamily::swap};
    case ReductionTag::bits_to_combos_complement:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::combination,
              FlipFamily::substring_complement};
    case ReductionTag::bits_to_combos_reversal:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::combination, FlipFamily::reversal};
    case ReductionTag::bits_to_perms_pairs:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::permutation, FlipFamily::swap};
    case ReductionTag::bits_to_peakless:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::permutation, FlipFamily::jump};
    case ReductionTag::bits_to_trees:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::spanningtree, FlipFamily::edge_exchange};
    case ReductionTag::bits_to_matchings:
      return {Kind::bitstring, FlipFamily::bitflip, Kind::perfectmatching,
              FlipFamily::alternating_cycle};
  }
  fail(errc::malformed_text, "bad reduction tag");
}

struct ReduceOutcome {
  bool no_instance = false;
  int reason_case = 0;
  long gap_value = 0;
  std::optional<Instance> target;
};

inline ReduceOutcome reduce_instance(const Instance& src, ReductionTag tag) {
  ReductionRoute route = reduction_route(tag);
  if (src.kind != route.src_kind || src.flip != route.src_flip)
    fail(errc::kind_mismatch, std::string("reduction ") + reduction_name(tag) + " expects kind=" +
                                  kind_name(route.src_kind) + " flip=" +
                                  flip_name(route.src_flip));
  if (src.objects.empty()) fail(errc::empty_instance, "cannot reduce an empty instance");

  ReduceOutcome out;
  Instance dst;
  dst.kind = route.dst_kind;
  dst.flip = route.dst_flip;

  auto tuple_list = [&]() {
    std::vector<Tuple2> L;
    L.reserve(src.objects.size());
    for (const auto& o : src.objects) L.push_back(std::get<Tuple2>(o));
    return L;
  };
  auto bit_list = [&]() {
    std::vector<BitString> B;
    B.reserve(src.objects.size());
    for (const auto& o : src.objects) B.push_back(std::get<BitString>(o));
    return B;
  };

  switch (tag) {
    case ReductionTag::tuples_normalize: {
      NormalizeOutcome norm = normalize_continuous(tuple_list());
      if (norm.no_instance) {
        out.no_instance = true;
        out.reason_case = norm.reason_case;
        out.gap_value = norm.gap_value;
        return out;
      }
      for (auto& t : norm.tuples) dst.objects.emplace_back(t);
      break;
    }
    case ReductionTag::tuples_to_bits:
      for (auto& x : tuples_to_bitstrings(tuple_list())) dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::tuples_to_perms:
      for (auto& x : tuples_to_permutations(tuple_list())) dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_ncpartitions:
      for (auto& x : bits_to_ncpartitions(bit_list())) dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_combos_swap:
      for (auto& x : bits_to_combinations_swap(bit_list())) dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_combos_complement:
      for (auto& x : bits_to_combinations_complement(bit_list()))
        dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_combos_reversal:
      for (auto& x : bits_to_combinations_reversal(bit_list()))
        dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_perms_pairs:
      for (auto& x : bits_to_permutations_pairs(bit_list())) dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_peakless:
      for (auto& x : bits_to_peakless(bit_list())) dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_trees:
      for (auto& x : bits_to_spanning_trees(bit_list())) dst.objects.emplace_back(std::move(x));
      break;
    case ReductionTag::bits_to_matchings:
      for (auto& x : bits_to_matchings(bit_list())) dst.objects.emplace_back(std::move(x));
      break;
  }
  validate_instance(dst);
  out.target = std::move(dst);
  return out;
}

// image objects keep their positions, so a target ordering is a source ordering verbatim
inline Certificate lift_certificate(const Instance& source, const Instance& target,
                                    const Certificate& cert) {
  if (source.objects.size() != target.objects.size())
    fail(errc::bad_indices, "source and target instances have different sizes");
  int m = static_cast<int>(source.objects.size());
  for (int idx : cert.indices)
    if (idx < 1 || idx > m) fail(errc::bad_indices, "certificate index out of range");
  return cert;
}

}  // namespace graycode
