#include "equifacet/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "equifacet/errors.hpp"

namespace equifacet {

namespace {

using EdgeMask = std::vector<bool>;  // indexed by edge_index

/// Calls visit(edges) for every spanning subgraph of the available edges in which every
/// vertex has degree exactly `degree`.
void for_each_regular_subgraph(int N, const EdgeMask& available, int degree,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<Edge> edges;
  for (int u = 0; u < N; ++u) {
    for (int v = u + 1; v < N; ++v) {
      if (available[edge_index(u, v)]) edges.emplace_back(u, v);
    }
  }
  std::vector<int> deg(static_cast<std::size_t>(N), 0);
  std::vector<int> open(static_cast<std::size_t>(N), 0);  // undecided incident edges
  for (const Edge& e : edges) {
    ++open[static_cast<std::size_t>(e.u)];
    ++open[static_cast<std::size_t>(e.v)];
  }
  for (int v = 0; v < N; ++v) {
    if (open[static_cast<std::size_t>(v)] < degree) return;
  }
  std::vector<std::size_t> chosen;

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == edges.size()) {
      visit(chosen);
      return;
    }
    const auto u = static_cast<std::size_t>(edges[k].u);
    const auto v = static_cast<std::size_t>(edges[k].v);
    --open[u];
    --open[v];
    if (deg[u] < degree && deg[v] < degree) {
      ++deg[u];
      ++deg[v];
      chosen.push_back(edge_index(edges[k].u, edges[k].v));
      if (deg[u] + open[u] >= degree && deg[v] + open[v] >= degree) self(self, k + 1);
      chosen.pop_back();
      --deg[u];
      --deg[v];
    }
    if (deg[u] + open[u] >= degree && deg[v] + open[v] >= degree) self(self, k + 1);
    ++open[u];
    ++open[v];
  };
  rec(rec, 0);
}

/// 2-colouring of K_N marking a subgraph, used to compare first colour classes.
ColouredGraph indicator(int N, const std::vector<std::size_t>& edges) {
  std::vector<int> colours(pair_count(N), 1);
  for (auto e : edges) colours[e] = 0;
  return ColouredGraph(N - 1, std::move(colours), 2);
}

struct Task {
  Partition partition;
  std::vector<std::size_t> first_class;
};

/// Completes a fixed first colour class in every possible way and records canonical forms.
void complete(int n, const Task& task, int max_dimension, std::set<ColouredGraph>& out) {
  const int N = n + 1;
  const auto& entries = task.partition.entries();
  std::vector<int> colours(pair_count(N), -1);
  EdgeMask available(pair_count(N), true);
  for (auto e : task.first_class) {
    colours[e] = 0;
    available[e] = false;
  }

  auto rec = [&](auto&& self, std::size_t cls) -> void {
    if (cls + 1 == entries.size()) {
      // The remaining edges are forced into the last class; degrees already add up.
      std::vector<int> full = colours;
      for (std::size_t e = 0; e < full.size(); ++e) {
        if (available[e]) full[e] = static_cast<int>(cls);
      }
      out.insert(canonical_form(ColouredGraph(n, std::move(full), static_cast<int>(entries.size())), max_dimension));
      return;
    }
    for_each_regular_subgraph(N, available, entries[cls], [&](const std::vector<std::size_t>& chosen) {
      for (auto e : chosen) {
        colours[e] = static_cast<int>(cls);
        available[e] = false;
      }
      self(self, cls + 1);
      for (auto e : chosen) {
        colours[e] = -1;
        available[e] = true;
      }
    });
  };

  if (entries.size() == 1) {
    out.insert(canonical_form(ColouredGraph::monochrome(n), max_dimension));
    return;
  }
  rec(rec, 1);
}

void check_catalog_dimension(int n, const EnumerationOptions& options) {
  if (n < 2 || n > options.max_dimension) {
    throw BoundExceeded("dimension " + std::to_string(n) + " outside 2.." + std::to_string(options.max_dimension));
  }
}

}  // namespace

std::vector<ColouredGraph> enumerate_vertex_uniform(int n, const EnumerationOptions& options) {
  check_catalog_dimension(n, options);
  const int N = n + 1;
  const int max_dimension = std::max(options.max_dimension, kDefaultSearchBound);

  // One task per (partition, first colour class up to isomorphism).
  std::vector<Task> tasks;
  for (const Partition& p : partitions_of(n)) {
    // An odd-degree regular graph needs an even number of vertices.
    if (N % 2 == 1 && !p.all_even()) continue;
    if (p.size() == 1) {
      tasks.push_back({p, {}});
      continue;
    }
    std::vector<ColouredGraph> reps;
    for_each_regular_subgraph(N, EdgeMask(pair_count(N), true), p.entries().front(),
                              [&](const std::vector<std::size_t>& chosen) {
                                ColouredGraph mark = indicator(N, chosen);
                                for (const auto& rep : reps) {
                                  if (coloured_isomorphic(rep, mark, false)) return;
                                }
                                reps.push_back(mark);
                                tasks.push_back({p, chosen});
                              });
  }

  std::set<ColouredGraph> found;
  std::mutex found_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::set<ColouredGraph> local;
    for (std::size_t t = next++; t < tasks.size(); t = next++) complete(n, tasks[t], max_dimension, local);
    std::lock_guard lock(found_mutex);
    found.merge(local);
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }

  std::vector<std::pair<Partition, ColouredGraph>> keyed;
  for (const auto& g : found) keyed.emplace_back(weak_type(g), g);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<ColouredGraph> out;
  for (auto& [p, g] : keyed) out.push_back(std::move(g));
  return out;
}

CatalogEntry make_entry(const ColouredGraph& g) {
  CatalogEntry entry{g.dimension(), canonical_form(g, std::max(g.dimension(), kDefaultSearchBound)), weak_type(g),
                     0, {}, {}};
  PermGroup group = colour_automorphisms(entry.canonical, entry.dimension);
  entry.group_order = group.order();
  if (group.order() <= kFingerprintBound) {
    entry.group_fingerprint = fingerprint(group);
  } else {
    entry.group_fingerprint.order = group.order();
  }
  for (const auto& cls : entry.canonical.colour_classes()) {
    std::vector<std::size_t> sizes;
    for (const auto& orbit : edge_orbits(group, cls)) sizes.push_back(orbit.size());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    entry.edge_orbit_sizes.push_back(std::move(sizes));
  }
  return entry;
}

std::vector<CatalogEntry> enumerate_strong_types(int n, const EnumerationOptions& options) {
  std::vector<CatalogEntry> out;
  for (const auto& g : enumerate_vertex_uniform(n, options)) {
    if (satisfies_complementarity(g)) out.push_back(make_entry(g));
  }
  return out;
}

std::vector<KnownRow> known_table(int n) {
  switch (n) {
    case 2:
      return {{{2}, 6}};
    case 3:
      return {{{3}, 24}, {{2, 1}, 8}, {{1, 1, 1}, 4}};
    case 4:
      return {{{4}, 120}, {{2, 2}, 10}};
    case 5:
      // [3,2] occurs twice: the hexagon type (dihedral, order 12) and the two-triangles
      // type (order 72).
      return {{{5}, 720}, {{4, 1}, 48}, {{3, 2}, 12}, {{3, 2}, 72},
              {{3, 1, 1}, 6}, {{2, 2, 1}, 12}, {{2, 1, 1, 1}, 6}};
    case 6:
      return {{{6}, 5040}, {{4, 2}, 14}, {{2, 2, 2}, 14}};
    default:
      throw BoundExceeded("no reference table for dimension " + std::to_string(n));
  }
}

std::vector<ColourOrbits> edge_orbit_report(const CatalogEntry& entry) {
  std::vector<ColourOrbits> out;
  for (std::size_t c = 0; c < entry.edge_orbit_sizes.size(); ++c) {
    const auto& sizes = entry.edge_orbit_sizes[c];
    out.push_back({static_cast<int>(c), sizes, sizes.size() == 1});
  }
  return out;
}

}  // namespace equifacet
