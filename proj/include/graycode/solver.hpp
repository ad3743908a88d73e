#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "graycode/flip_graph.hpp"

namespace graycode {

enum class Answer { yes, no, unknown };

inline const char* answer_name(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
  }
  return "?";
}

struct SolveStats {
  uint64_t nodes = 0;
  uint64_t pre_disconnected = 0;
  uint64_t pre_degree = 0;
  uint64_t pre_articulation = 0;
  uint64_t pre_isolated = 0;
  uint64_t search_connectivity = 0;
  uint64_t search_degree = 0;
  bool budget_exhausted = false;
};

struct SolveOptions {
  uint64_t budget = 100000000ULL;  // search-tree node budget
  int threads = 1;
};

struct SolveResult {
  Answer answer = Answer::no;
  std::optional<Certificate> certificate;
  SolveStats stats;
};

namespace detail {

// largest number of pieces any single vertex removal leaves behind
inline int max_cut_pieces(const std::vector<std::vector<int>>& under) {
  int n = static_cast<int>(under.size());
  if (n == 0) return 0;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), kids(n, 0), cut_kids(n, 0);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<std::pair<int, int>> st{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      auto& [v, ei] = st.back();
      if (ei < static_cast<int>(under[v].size())) {
        int u = under[v][ei++];
        if (disc[u] == -1) {
          parent[u] = v;
          ++kids[v];
          disc[u] = low[u] = timer++;
          st.emplace_back(u, 0);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        st.pop_back();
        if (int p = parent[v]; p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) ++cut_kids[p];
        }
      }
    }
  }
  int best = 1;
  for (int v = 0; v < n; ++v)
    best = std::max(best, parent[v] == -1 ? kids[v] : cut_kids[v] + 1);
  return best;
}

struct TaskOutcome {
  bool found = false;
  bool exhausted = false;
  bool aborted = false;
  SolveStats stats;
  std::vector<int> path;
};

struct SearchCore {
  const FlipGraph& g;
  const std::vector<std::vector<int>>& under;
  bool cycle;
  uint64_t budget;
  SolveStats stats;
  std::vector<char> visited;
  std::vector<int> path;
  std::vector<uint32_t> mark;
  std::vector<int> queue;
  uint32_t epoch = 0;
  bool exhausted = false;
  bool aborted = false;
  // speculation hooks for the parallel mode
  const std::atomic<int>* found_below = nullptr;
  const std::atomic<uint64_t>* global_nodes = nullptr;
  int task_index = 0;

  SearchCore(const FlipGraph& graph, const std::vector<std::vector<int>>& u, bool cyc,
             uint64_t b)
      : g(graph), under(u), cycle(cyc), budget(b), visited(g.m, 0), mark(g.m, 0) {}

  bool abort_requested() const {
    if (found_below && found_below->load(std::memory_order_relaxed) < task_index) return true;
    if (global_nodes && global_nodes->load(std::memory_order_relaxed) >= budget) return true;
    return false;
  }

  // true => no completion is possible from the current end vertex
  bool prune_here(int v) {
    int m = g.m;
    int remaining = m - static_cast<int>(path.size());
    int start = cycle ? path.front() : -1;
    bool with_start = cycle && path.size() >= 2;
    ++epoch;
    int want = remaining + (with_start ? 1 : 0);
    int reached = 0;
    queue.clear();
    auto push = [&](int w) {
      if (mark[w] == epoch) return;
      mark[w] = epoch;
      ++reached;
      queue.push_back(w);
    };
    for (int w : under[v])
      if (!visited[w] || (with_start && w == start)) push(w);
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int w : under[queue[qi]])
        if (!visited[w] || (with_start && w == start)) push(w);
    if (reached < want) {
      ++stats.search_connectivity;
      return true;
    }
    int low = 0;
    for (int u = 0; u < m; ++u) {
      if (visited[u]) continue;
      int deg = 0;
      for (int w : under[u])
        if (!visited[w] || w == v || (with_start && w == start)) ++deg;
      if (deg <= 1) {
        if (cycle && with_start) {
          ++stats.search_degree;
          return true;
        }
        if (++low >= 2) {
          ++stats.search_degree;
          return true;
        }
      }
    }
    return false;
  }

  bool dfs(int v) {
    if (stats.nodes >= budget) {
      exhausted = true;
      return false;
    }
    if (abort_requested()) {
      aborted = true;
      return false;
    }
    ++stats.nodes;
    visited[v] = 1;
    path.push_back(v);
    if (static_cast<int>(path.size()) == g.m) {
      if (!cycle || std::binary_search(g.adj[v].begin(), g.adj[v].end(), path.front())) return true;
    } else if (!prune_here(v)) {
      // fewest-options-first, ties by index: structured graphs (hypercubes,
      // permutohedra) are walked straight through instead of thrashing near
      // the lexicographic dead ends
      std::vector<std::pair<int, int>> order;
      order.reserve(g.adj[v].size());
      for (int u : g.adj[v]) {
        if (visited[u]) continue;
        int deg = 0;
        for (int w : g.adj[u])
          if (!visited[w]) ++deg;
        order.emplace_back(deg, u);
      }
      std::sort(order.begin(), order.end());
      for (auto [deg, u] : order) {
        if (dfs(u)) return true;
        if (exhausted || aborted) break;
      }
    }
    visited[v] = 0;
    path.pop_back();
    return false;
  }
};

// one top-level branch: a start vertex for paths, a first move for cycles
inline TaskOutcome run_task(const FlipGraph& g, const std::vector<std::vector<int>>& under,
                            bool cycle, int entry, uint64_t budget,
                            const std::atomic<int>* found_below,
                            const std::atomic<uint64_t>* global_nodes, int task_index) {
  SearchCore core(g, under, cycle, budget);
  core.found_below = found_below;
  core.global_nodes = global_nodes;
  core.task_index = task_index;
  if (cycle) {
    core.visited[0] = 1;
    core.path.push_back(0);
  }
  TaskOutcome out;
  out.found = core.dfs(entry);
  out.exhausted = core.exhausted;
  out.aborted = core.aborted;
  out.stats = core.stats;
  if (out.found) out.path = core.path;
  return out;
}

inline void merge_search_stats(SolveStats& into, const SolveStats& from) {
  into.nodes += from.nodes;
  into.search_connectivity += from.search_connectivity;
  into.search_degree += from.search_degree;
}

inline SolveResult solve_hamilton(const FlipGraph& g, bool cycle, const SolveOptions& opt) {
  SolveResult res;
  int m = g.m;
  if (!cycle && m == 0) {
    res.answer = Answer::yes;
    res.certificate = Certificate{};
    return res;
  }
  if (!cycle && m == 1) {
    res.answer = Answer::yes;
    res.certificate = Certificate{{1}};
    return res;
  }
  if (cycle && m <= 2) {
    res.answer = Answer::no;
    return res;
  }

  std::vector<std::vector<int>> under = underlying_adjacency(g);

  // rule (a): more than one component
  {
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : under[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached < m) {
      res.stats.pre_disconnected = 1;
      res.answer = Answer::no;
      return res;
    }
  }
  // rule (b): endpoint degrees
  {
    bool bad = false;
    if (cycle) {
      for (int v = 0; v < m && !bad; ++v) {
        if (static_cast<int>(under[v].size()) <= 1) bad = true;
        if (g.directed && (g.adj[v].empty() || g.radj[v].empty())) bad = true;
      }
    } else {
      int low = 0, in0 = 0, out0 = 0;
      for (int v = 0; v < m; ++v) {
        if (static_cast<int>(under[v].size()) <= 1) ++low;
        if (g.directed && g.adj[v].empty()) ++out0;
        if (g.directed && g.radj[v].empty()) ++in0;
      }
      bad = low > 2 || in0 >= 2 || out0 >= 2;
    }
    if (bad) {
      res.stats.pre_degree = 1;
      res.answer = Answer::no;
      return res;
    }
  }
  // rule (c): articulation cut
  {
    int pieces = max_cut_pieces(under);
    if (pieces >= (cycle ? 2 : 3)) {
      res.stats.pre_articulation = 1;
      res.answer = Answer::no;
      return res;
    }
  }
  // rule (d): isolated vertex (subsumed by (a); kept for completeness)
  for (int v = 0; v < m; ++v) {
    if (under[v].empty()) {
      res.stats.pre_isolated = 1;
      res.answer = Answer::no;
      return res;
    }
  }

  uint64_t budget = opt.budget;
  std::vector<int> entries;
  if (cycle) {
    // the root expansion happens once; branches are the first moves out of vertex 0
    if (budget == 0) {
      res.stats.budget_exhausted = true;
      res.answer = Answer::unknown;
      return res;
    }
    res.stats.nodes = 1;
    SearchCore root(g, under, true, budget);
    root.visited[0] = 1;
    root.path.push_back(0);
    bool dead = root.prune_here(0);
    merge_search_stats(res.stats, root.stats);
    if (dead) {
      res.answer = Answer::no;
      return res;
    }
    entries = g.adj[0];
  } else {
    entries.resize(m);
    for (int i = 0; i < m; ++i) entries[i] = i;
  }

  int nt = std::max(1, opt.threads);
  std::vector<TaskOutcome> spec(entries.size());
  std::vector<char> have_spec(entries.size(), 0);
  if (nt > 1 && entries.size() > 1) {
    std::atomic<int> next{0};
    std::atomic<int> found_below{static_cast<int>(entries.size())};
    std::atomic<uint64_t> global_nodes{0};
    auto worker = [&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= static_cast<int>(entries.size())) return;
        spec[i] = run_task(g, under, cycle, entries[i], budget, &found_below, &global_nodes, i);
        global_nodes.fetch_add(spec[i].stats.nodes);
        if (spec[i].found) {
          int cur = found_below.load();
          while (i < cur && !found_below.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::fill(have_spec.begin(), have_spec.end(), 1);
  }

  // deterministic replay: identical answer, certificate, and stats for any thread count
  uint64_t cum = res.stats.nodes;
  for (size_t i = 0; i < entries.size(); ++i) {
    TaskOutcome out;
    if (have_spec[i] && !spec[i].aborted && cum + spec[i].stats.nodes <= budget)
      out = std::move(spec[i]);
    else
      out = run_task(g, under, cycle, entries[i], budget - cum, nullptr, nullptr, 0);
    merge_search_stats(res.stats, out.stats);
    cum += out.stats.nodes;
    if (out.found) {
      res.answer = Answer::yes;
      Certificate cert;
      cert.indices.reserve(out.path.size());
      for (int v : out.path) cert.indices.push_back(v + 1);
      res.certificate = std::move(cert);
      return res;
    }
    if (out.exhausted) {
      res.stats.budget_exhausted = true;
      res.answer = Answer::unknown;
      return res;
    }
  }
  res.answer = Answer::no;
  return res;
}

}  // namespace detail

inline SolveResult has_hamilton_path(const FlipGraph& g, const SolveOptions& opt = {}) {
  return detail::solve_hamilton(g, false, opt);
}

inline SolveResult has_hamilton_cycle(const FlipGraph& g, const SolveOptions& opt = {}) {
  return detail::solve_hamilton(g, true, opt);
}

namespace detail {
struct PathCounter {
  const FlipGraph& g;
  std::vector<char> vis;
  long long total = 0;
  void dfs(int v, int depth) {
    vis[v] = 1;
    if (depth == g.m)
      ++total;
    else
      for (int u : g.adj[v])
        if (!vis[u]) dfs(u, depth + 1);
    vis[v] = 0;
  }
};
}  // namespace detail

// exact count; undirected paths are counted once per direction class
inline long long count_hamilton_paths(const FlipGraph& g, int bound = 10) {
  if (g.m > bound)
    fail(errc::bound_exceeded, "instance size " + std::to_string(g.m) + " exceeds count bound " +
                                   std::to_string(bound));
  if (g.m == 0) return 1;
  detail::PathCounter c{g, std::vector<char>(g.m, 0)};
  for (int s = 0; s < g.m; ++s) c.dfs(s, 1);
  return g.directed || g.m == 1 ? c.total : c.total / 2;
}

inline bool verify_certificate(const Instance& inst, const Certificate& cert) {
  int m = static_cast<int>(inst.objects.size());
  for (int idx : cert.indices)
    if (idx < 1 || idx > m)
      fail(errc::bad_indices, "certificate index " + std::to_string(idx) + " outside 1.." +
                                  std::to_string(m));
  if (static_cast<int>(cert.indices.size()) != m) return false;
  std::vector<char> seen(m + 1, 0);
  for (int idx : cert.indices) {
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  for (size_t i = 0; i + 1 < cert.indices.size(); ++i)
    if (!flip_adjacent(inst.flip, inst.objects[cert.indices[i] - 1],
                       inst.objects[cert.indices[i + 1] - 1]))
      return false;
  return true;
}

}  // namespace graycode
