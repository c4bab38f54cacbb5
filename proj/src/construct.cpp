#include "equifacet/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "equifacet/errors.hpp"

namespace equifacet {

ColouredGraph cyclic_colouring(int n) {
  if (n < 1) throw InvalidArgument("dimension must be at least 1");
  const int m = n + 1;
  std::vector<int> colours(pair_count(m));
  for (int j = 1; j < m; ++j) {
    for (int i = 0; i < j; ++i) {
      int d = j - i;
      colours[edge_index(i, j)] = std::min(d, m - d) - 1;
    }
  }
  return ColouredGraph(n, std::move(colours), (n + 1) / 2);
}

ColouredGraph merge_colours(const ColouredGraph& g, const std::vector<std::vector<int>>& grouping) {
  std::vector<int> target(static_cast<std::size_t>(g.colour_count()), -1);
  for (std::size_t k = 0; k < grouping.size(); ++k) {
    if (grouping[k].empty()) throw InvalidArgument("empty group in colour grouping");
    for (int c : grouping[k]) {
      if (c < 0 || c >= g.colour_count()) throw InvalidArgument("grouping names unknown colour " + std::to_string(c));
      if (target[static_cast<std::size_t>(c)] >= 0) {
        throw InvalidArgument("colour " + std::to_string(c) + " appears in two groups");
      }
      target[static_cast<std::size_t>(c)] = static_cast<int>(k);
    }
  }
  if (std::find(target.begin(), target.end(), -1) != target.end()) {
    throw InvalidArgument("grouping does not cover every colour");
  }
  std::vector<int> colours(g.edge_colours().size());
  for (std::size_t e = 0; e < colours.size(); ++e) colours[e] = target[static_cast<std::size_t>(g.edge_colours()[e])];
  return ColouredGraph(g.dimension(), std::move(colours), static_cast<int>(grouping.size()));
}

ColouredGraph split_colour(const ColouredGraph& g, int c) {
  if (c < 0 || c >= g.colour_count()) throw InvalidArgument("colour out of range");
  const int N = g.vertex_count();
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(N));
  for (const Edge& e : g.colour_class(c)) {
    if ((e.u + e.v) % 2 == 0) throw NotSplittable("colour class has an edge joining vertices of equal parity");
    nbrs[static_cast<std::size_t>(e.u)].push_back(e.v);
    nbrs[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (const auto& adj : nbrs) {
    if (adj.size() != 2) throw NotSplittable("colour class is not a union of cycles through every vertex");
  }

  std::vector<int> colours = g.edge_colours();
  const int fresh = g.colour_count();
  std::vector<bool> visited(static_cast<std::size_t>(N), false);
  for (int start = 0; start < N; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    const auto& adj = nbrs[static_cast<std::size_t>(start)];
    int prev = start;
    int cur = std::min(adj[0], adj[1]);
    visited[static_cast<std::size_t>(start)] = true;
    colours[edge_index(prev, cur)] = (prev % 2 == 0) ? c : fresh;
    while (cur != start) {
      visited[static_cast<std::size_t>(cur)] = true;
      const auto& around = nbrs[static_cast<std::size_t>(cur)];
      int next = around[0] == prev ? around[1] : around[0];
      colours[edge_index(cur, next)] = (cur % 2 == 0) ? c : fresh;
      prev = cur;
      cur = next;
    }
  }
  return ColouredGraph(g.dimension(), std::move(colours), fresh + 1);
}

ColouredGraph orbit_colouring(std::span<const Permutation> generators) {
  if (generators.empty()) throw InvalidArgument("need at least one generator");
  const int degree = generators.front().degree();
  if (degree < 2) throw InvalidArgument("need at least two points");
  PermGroup group = generate(generators, degree);
  if (!is_transitive(group)) throw NotTransitive();
  auto orbits = pair_orbits(group);
  std::vector<std::vector<Edge>> classes(orbits.begin(), orbits.end());
  return ColouredGraph::from_classes(degree - 1, classes);
}

ColouredGraph elementary_abelian_colouring(int r) {
  if (r < 1 || r > 4) throw InvalidArgument("exponent must be in 1..4");
  const int m = 1 << r;
  std::vector<Permutation> gens;
  for (int b = 0; b < r; ++b) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = i ^ (1 << b);
    gens.emplace_back(std::move(img));
  }
  return orbit_colouring(gens);
}

ColouredGraph round_robin_one_factorization(int n) {
  if (n < 1 || n % 2 == 0) throw InvalidArgument("round-robin factorization needs odd n");
  const int m = n + 1;
  const int hub = m - 1;
  std::vector<int> colours(pair_count(m));
  for (int round = 0; round < hub; ++round) {
    colours[edge_index(round, hub)] = round;
    for (int i = 1; i <= (m - 2) / 2; ++i) {
      int a = (round + i) % hub;
      int b = ((round - i) % hub + hub) % hub;
      colours[edge_index(a, b)] = round;
    }
  }
  return ColouredGraph(n, std::move(colours), n);
}

std::string to_string(Obstruction o) {
  switch (o) {
    case Obstruction::parity:
      return "parity";
    case Obstruction::sum_parity:
      return "sum-parity";
    case Obstruction::power_of_two:
      return "power-of-two";
    case Obstruction::too_many_colours:
      return "too-many-colours";
  }
  return "unknown";
}

int max_odd_entries(int n) {
  if (n < 1 || n % 2 == 0) throw InvalidArgument("odd-entry bound is defined for odd n");
  const int half = (n + 1) / 2;
  return half % 2 == 1 ? half : half + 1;
}

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

int log2_exact(int x) {
  int r = 0;
  while ((1 << r) < x) ++r;
  return r;
}

// Assigns colour "atoms" to partition entries: each odd entry takes one degree-1 atom,
// then every entry is filled up with degree-2 atoms, both lists consumed in order.
std::vector<std::vector<int>> plan_grouping(const Partition& p, const std::vector<int>& degree_one,
                                            const std::vector<int>& degree_two) {
  std::vector<std::vector<int>> grouping;
  std::size_t next_one = 0;
  std::size_t next_two = 0;
  for (int entry : p.entries()) {
    std::vector<int> group;
    int remaining = entry;
    if (entry % 2 == 1) {
      group.push_back(degree_one.at(next_one++));
      --remaining;
    }
    for (; remaining > 0; remaining -= 2) group.push_back(degree_two.at(next_two++));
    grouping.push_back(std::move(group));
  }
  if (next_one != degree_one.size() || next_two != degree_two.size()) {
    throw std::logic_error("colour plan left atoms unused");
  }
  return grouping;
}

ColouredGraph even_witness(const Partition& p, int n) {
  std::vector<int> degree_two;
  for (int k = 1; k <= n / 2; ++k) degree_two.push_back(k - 1);
  return merge_colours(cyclic_colouring(n), plan_grouping(p, {}, degree_two));
}

ColouredGraph split_witness(const Partition& p, int n) {
  const int half = (n + 1) / 2;
  const int splits = static_cast<int>(p.odd_count() - 1) / 2;
  ColouredGraph g = cyclic_colouring(n);

  std::vector<int> degree_one;
  std::vector<int> degree_two;
  int done = 0;
  for (int k = 1; k < half; ++k) {
    if (k % 2 == 1 && done < splits) {
      const int appended = g.colour_count();
      g = split_colour(g, k - 1);
      degree_one.push_back(k - 1);
      degree_one.push_back(appended);
      ++done;
    } else {
      degree_two.push_back(k - 1);
    }
  }
  degree_one.push_back(half - 1);  // X_{(n+1)/2}, the long diagonals
  return merge_colours(g, plan_grouping(p, degree_one, degree_two));
}

}  // namespace

Realizability realize_partition(const Partition& p, int n) {
  if (n < 1) throw InvalidArgument("dimension must be at least 1");
  if (p.size() == 0 || p.sum() != n) {
    throw InvalidArgument("partition " + p.to_string() + " does not sum to " + std::to_string(n));
  }
  if (p.size() > static_cast<std::size_t>(n)) return NotRealizableVerdict{Obstruction::too_many_colours};

  std::optional<ColouredGraph> witness;
  const bool all_ones = p.size() == static_cast<std::size_t>(n);
  if (n % 2 == 0) {
    if (!p.all_even()) return NotRealizableVerdict{Obstruction::parity};
    witness = even_witness(p, n);
  } else {
    const auto odd = static_cast<int>(p.odd_count());
    if (odd % 2 == 0) return NotRealizableVerdict{Obstruction::sum_parity};
    if (all_ones && !is_power_of_two(n + 1)) return NotRealizableVerdict{Obstruction::power_of_two};
    if (odd <= max_odd_entries(n)) {
      witness = split_witness(p, n);
    } else if (all_ones && log2_exact(n + 1) <= 4) {
      witness = elementary_abelian_colouring(log2_exact(n + 1));
    } else {
      return UnknownVerdict{};
    }
  }

  if (!satisfies_complementarity(*witness) || weak_type(*witness) != p) {
    throw std::logic_error("constructed witness for " + p.to_string() + " failed verification");
  }
  return Realizable{std::move(*witness)};
}

std::optional<FacetExtension> extend_facet(const ColouredGraph& g) {
  const int N = g.vertex_count();
  const int R = g.colour_count();
  std::vector<std::vector<int>> deg(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(R), 0));
  for (std::size_t k = 0; k < g.edge_colours().size(); ++k) {
    Edge e = edge_at(k);
    const auto c = static_cast<std::size_t>(g.edge_colours()[k]);
    ++deg[static_cast<std::size_t>(e.u)][c];
    ++deg[static_cast<std::size_t>(e.v)][c];
  }

  std::vector<int> hi(static_cast<std::size_t>(R), 0), lo(static_cast<std::size_t>(R), N);
  for (const auto& row : deg) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      hi[c] = std::max(hi[c], row[c]);
      lo[c] = std::min(lo[c], row[c]);
    }
  }
  for (int c = 0; c < R; ++c) {
    if (hi[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)] > 1) return std::nullopt;
  }

  // Candidate target degrees: the maxima, or the maxima with one colour that is already
  // uniform on the facet raised by one (raising two would leave every vertex short twice).
  std::vector<std::vector<int>> candidates{hi};
  for (int c = 0; c < R; ++c) {
    if (hi[static_cast<std::size_t>(c)] == lo[static_cast<std::size_t>(c)]) {
      auto bumped = hi;
      ++bumped[static_cast<std::size_t>(c)];
      candidates.push_back(std::move(bumped));
    }
  }

  std::vector<std::vector<int>> valid;  // apex colour per facet vertex
  for (const auto& target : candidates) {
    std::vector<int> apex(static_cast<std::size_t>(N), -1);
    std::vector<int> apex_degree(static_cast<std::size_t>(R), 0);
    bool ok = true;
    for (int v = 0; v < N && ok; ++v) {
      int shortfall = 0;
      for (int c = 0; c < R; ++c) {
        int d = target[static_cast<std::size_t>(c)] - deg[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
        if (d == 1) apex[static_cast<std::size_t>(v)] = c;
        shortfall += d;
      }
      ok = shortfall == 1;
      if (ok) ++apex_degree[static_cast<std::size_t>(apex[static_cast<std::size_t>(v)])];
    }
    if (ok && apex_degree == target) valid.push_back(std::move(apex));
  }

  if (valid.empty()) return std::nullopt;
  if (valid.size() > 1) {
    throw AmbiguousExtension(std::to_string(valid.size()) + " target degree vectors fit this facet");
  }

  std::vector<int> colours(pair_count(N + 1));
  for (std::size_t k = 0; k < g.edge_colours().size(); ++k) colours[k] = g.edge_colours()[k];
  for (int v = 0; v < N; ++v) colours[edge_index(v, N)] = valid.front()[static_cast<std::size_t>(v)];
  ColouredGraph extended(N, std::move(colours), R);
  if (!is_vertex_uniform(extended)) throw std::logic_error("facet extension is not vertex-uniform");
  const bool complementary = satisfies_complementarity(extended);
  return FacetExtension{std::move(extended), complementary};
}

}  // namespace equifacet
