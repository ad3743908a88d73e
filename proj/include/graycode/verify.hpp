#pragma once

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "graycode/reductions.hpp"
#include "graycode/solver.hpp"

namespace graycode {

struct BruteForceResult {
  Answer answer = Answer::no;
  long long count = 0;
};

// enumerates every vertex ordering; deliberately shares nothing with the solver's search
inline BruteForceResult brute_force_hamilton(const FlipGraph& g, int bound = 10) {
  if (g.m > bound)
    fail(errc::bound_exceeded, "instance size " + std::to_string(g.m) +
                                   " exceeds brute-force bound " + std::to_string(bound));
  if (g.m <= 1) return {Answer::yes, 1};
  std::vector<int> order(g.m);
  std::iota(order.begin(), order.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < g.m; ++i)
      ok = std::binary_search(g.adj[order[i]].begin(), g.adj[order[i]].end(), order[i + 1]);
    if (ok) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  if (!g.directed) count /= 2;
  return {count > 0 ? Answer::yes : Answer::no, count};
}

struct ReductionReport {
  ReductionTag tag = ReductionTag::tuples_normalize;
  long long pairs_checked = 0;
  long long adjacency_iff_violations = 0;
  bool injective = true;
  bool no_instance_sound = true;
  std::vector<std::pair<long long, long long>> parsimony_samples;  // source, target counts
  std::map<int, bool> hypercube_checks;

  bool pass() const {
    if (adjacency_iff_violations != 0 || !injective || !no_instance_sound) return false;
    for (const auto& [s, t] : parsimony_samples)
      if (s != t) return false;
    for (const auto& [n, ok] : hypercube_checks)
      if (!ok) return false;
    return true;
  }
};

inline ReductionReport check_reduction(ReductionTag tag, const Instance& src) {
  ReductionReport rep;
  rep.tag = tag;
  ReduceOutcome out = reduce_instance(src, tag);
  int m = static_cast<int>(src.objects.size());
  if (out.no_instance) {
    // a refusal is a claim that the source has no Gray code; hold it to that
    if (m <= 10) {
      FlipGraph g = build_flip_graph(src);
      rep.no_instance_sound = brute_force_hamilton(g).answer == Answer::no;
    }
    return rep;
  }
  const Instance& dst = *out.target;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      ++rep.pairs_checked;
      bool sadj = flip_adjacent(src.flip, src.objects[i], src.objects[j]);
      bool tadj = flip_adjacent(dst.flip, dst.objects[i], dst.objects[j]);
      if (sadj != tadj) ++rep.adjacency_iff_violations;
    }
  std::set<Object> images(dst.objects.begin(), dst.objects.end());
  rep.injective = static_cast<int>(images.size()) == m;
  if (m <= 10) {
    FlipGraph sg = build_flip_graph(src);
    FlipGraph tg = build_flip_graph(dst);
    rep.parsimony_samples.emplace_back(count_hamilton_paths(sg), count_hamilton_paths(tg));
  }
  return rep;
}

inline bool check_hypercube_inducement(ReductionTag tag, int n) {
  ReductionRoute route = reduction_route(tag);
  if (route.src_kind != Kind::bitstring)
    fail(errc::kind_mismatch, "hypercube inducement applies to bitstring-source tags");
  Instance src = make_full_bn(n);
  ReduceOutcome out = reduce_instance(src, tag);
  const Instance& dst = *out.target;
  int m = static_cast<int>(src.objects.size());
  long long edges = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool ham1 = flip_adjacent(src.flip, src.objects[i], src.objects[j]);
      bool tadj = flip_adjacent(dst.flip, dst.objects[i], dst.objects[j]);
      if (ham1 != tadj) return false;
      if (tadj) ++edges;
    }
  return edges == static_cast<long long>(n) * (1LL << (n - 1));
}

// deterministic sampling helpers shared by the CLI and the test suites

inline std::vector<int> random_subset_indices(std::mt19937_64& rng, int universe,
                                              int max_size = -1) {
  for (;;) {
    std::vector<int> idx;
    for (int i = 0; i < universe; ++i)
      if (rng() & 1) idx.push_back(i);
    if (idx.empty()) idx.push_back(static_cast<int>(rng() % universe));
    if (max_size < 0 || static_cast<int>(idx.size()) <= max_size) return idx;
  }
}

inline std::vector<Tuple2> random_continuous_tuples(std::mt19937_64& rng, int max_coord,
                                                    int max_m) {
  for (;;) {
    int amax = 1 + static_cast<int>(rng() % max_coord);
    int bmax = 1 + static_cast<int>(rng() % max_coord);
    std::vector<Tuple2> pick;
    for (int a = 1; a <= amax; ++a)
      for (int b = 1; b <= bmax; ++b)
        if (rng() & 1) pick.push_back({a, b});
    if (pick.empty() || static_cast<int>(pick.size()) > max_m) continue;
    if (is_continuous(pick)) return pick;
  }
}

inline Instance full_universe_instance(ReductionTag tag, int n) {
  ReductionRoute route = reduction_route(tag);
  if (route.src_kind == Kind::bitstring) return make_full_bn(n);
  Instance inst;
  inst.kind = Kind::tuple;
  inst.flip = FlipFamily::pm1_tuple;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) inst.objects.emplace_back(Tuple2{a, b});
  validate_instance(inst);
  return inst;
}

inline Instance subset_instance(const Instance& full, const std::vector<int>& idx) {
  Instance s;
  s.kind = full.kind;
  s.flip = full.flip;
  for (int i : idx) s.objects.push_back(full.objects[i]);
  validate_instance(s);
  return s;
}

inline void merge_report(ReductionReport& into, const ReductionReport& from) {
  into.pairs_checked += from.pairs_checked;
  into.adjacency_iff_violations += from.adjacency_iff_violations;
  into.injective = into.injective && from.injective;
  into.no_instance_sound = into.no_instance_sound && from.no_instance_sound;
  into.parsimony_samples.insert(into.parsimony_samples.end(), from.parsimony_samples.begin(),
                                from.parsimony_samples.end());
}

// full-universe scan plus seeded random subsets plus the per-n hypercube checks
inline ReductionReport run_reduction_verification(ReductionTag tag, int n, uint64_t seed,
                                                  int samples) {
  Instance full = full_universe_instance(tag, n);
  ReductionReport rep = check_reduction(tag, full);
  ReductionRoute route = reduction_route(tag);
  bool needs_continuous =
      tag == ReductionTag::tuples_to_bits || tag == ReductionTag::tuples_to_perms;
  std::mt19937_64 rng(seed);
  int universe = static_cast<int>(full.objects.size());
  for (int s = 0; s < samples; ++s) {
    Instance sub;
    for (;;) {
      sub = subset_instance(full, random_subset_indices(rng, universe));
      if (needs_continuous) {
        std::vector<Tuple2> tuples;
        for (const auto& o : sub.objects) tuples.push_back(std::get<Tuple2>(o));
        if (!is_continuous(tuples)) continue;
      }
      break;
    }
    merge_report(rep, check_reduction(tag, sub));
  }
  if (route.src_kind == Kind::bitstring)
    for (int k = 1; k <= std::min(n, 5); ++k)
      rep.hypercube_checks[k] = check_hypercube_inducement(tag, k);
  return rep;
}

}  // namespace graycode
