#pragma once

#include <algorithm>
#include <ostream>
#include <thread>
#include <vector>

#include "graycode/instance.hpp"

namespace graycode {

struct FlipGraph {
  int m = 0;
  bool directed = false;
  std::vector<std::vector<int>> adj;   // out-neighbors, sorted ascending
  std::vector<std::vector<int>> radj;  // in-neighbors, directed graphs only
};

inline FlipGraph build_flip_graph(const Instance& inst, int threads = 1) {
  FlipGraph g;
  g.m = static_cast<int>(inst.objects.size());
  g.directed = flip_directed(inst.flip);
  g.adj.assign(g.m, {});
  auto fill_rows = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      for (int j = 0; j < g.m; ++j)
        if (i != j && flip_adjacent(inst.flip, inst.objects[i], inst.objects[j]))
          g.adj[i].push_back(j);
  };
  if (threads <= 1 || g.m < 2) {
    fill_rows(0, g.m);
  } else {
    int nt = std::min(threads, g.m);
    std::vector<std::thread> pool;
    int chunk = (g.m + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
      int lo = t * chunk, hi = std::min(g.m, lo + chunk);
      if (lo < hi) pool.emplace_back(fill_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  if (g.directed) {
    g.radj.assign(g.m, {});
    for (int i = 0; i < g.m; ++i)
      for (int j : g.adj[i]) g.radj[j].push_back(i);
    for (auto& r : g.radj) std::sort(r.begin(), r.end());
  }
  return g;
}

// neighbors ignoring direction, sorted, no repeats
inline std::vector<std::vector<int>> underlying_adjacency(const FlipGraph& g) {
  if (!g.directed) return g.adj;
  std::vector<std::vector<int>> u(g.m);
  for (int i = 0; i < g.m; ++i) {
    u[i].reserve(g.adj[i].size() + g.radj[i].size());
    std::set_union(g.adj[i].begin(), g.adj[i].end(), g.radj[i].begin(), g.radj[i].end(),
                   std::back_inserter(u[i]));
  }
  return u;
}

inline long long num_edges(const FlipGraph& g) {
  long long s = 0;
  for (const auto& a : g.adj) s += static_cast<long long>(a.size());
  return g.directed ? s : s / 2;
}

// weakly connected components for directed graphs; sorted by least vertex
inline std::vector<std::vector<int>> connected_components(const FlipGraph& g) {
  std::vector<std::vector<int>> under = underlying_adjacency(g);
  std::vector<char> seen(g.m, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.m; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : under[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct DegreeProfile {
  bool directed = false;
  std::vector<int> degree;  // undirected degree, or in+out for directed
  std::vector<int> in;
  std::vector<int> out;
};

inline DegreeProfile degree_profile(const FlipGraph& g) {
  DegreeProfile p;
  p.directed = g.directed;
  p.degree.resize(g.m);
  if (g.directed) {
    p.in.resize(g.m);
    p.out.resize(g.m);
    for (int i = 0; i < g.m; ++i) {
      p.out[i] = static_cast<int>(g.adj[i].size());
      p.in[i] = static_cast<int>(g.radj[i].size());
      p.degree[i] = p.in[i] + p.out[i];
    }
  } else {
    for (int i = 0; i < g.m; ++i) p.degree[i] = static_cast<int>(g.adj[i].size());
  }
  return p;
}

// edge list export: header line, then 1-based "i j" rows
inline void write_graph(const FlipGraph& g, std::ostream& out) {
  out << "m=" << g.m << " directed=" << (g.directed ? 1 : 0) << "\n";
  for (int i = 0; i < g.m; ++i)
    for (int j : g.adj[i])
      if (g.directed || i < j) out << i + 1 << " " << j + 1 << "\n";
}

}  // namespace graycode
