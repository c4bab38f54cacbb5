#include <doctest.h>

#include <set>

#include "equifacet/catalog.hpp"
#include "equifacet/construct.hpp"
#include "equifacet/errors.hpp"
#include "oracles.hpp"

using namespace equifacet;

namespace {

/// Brute-force canonical key: least edge-colour vector over all vertex orders, colours
/// renamed by first appearance.
std::vector<int> brute_key(const ColouredGraph& g) {
  std::vector<int> best;
  oracle::for_each_permutation(g.vertex_count(), [&](const std::vector<int>& p) {
    ColouredGraph h = g.relabelled(Permutation(p));
    std::vector<int> rename(static_cast<std::size_t>(g.colour_count()), -1);
    std::vector<int> v;
    int next = 0;
    for (int c : h.edge_colours()) {
      auto& r = rename[static_cast<std::size_t>(c)];
      if (r < 0) r = next++;
      v.push_back(r);
    }
    if (best.empty() || v < best) best = v;
    return false;
  });
  return best;
}

bool uniform_by_hand(const std::vector<int>& colours, int N, int r) {
  std::vector<std::vector<int>> deg(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (std::size_t k = 0; k < colours.size(); ++k) {
    Edge e = edge_at(k);
    ++deg[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(colours[k])];
    ++deg[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(colours[k])];
  }
  for (int v = 1; v < N; ++v) {
    if (deg[static_cast<std::size_t>(v)] != deg[0]) return false;
  }
  return true;
}

/// Every set partition of the edges of K_{n+1} (restricted growth strings), filtered to
/// vertex-uniform ones and reduced by the brute-force key.
std::set<std::vector<int>> brute_vertex_uniform(int n) {
  const int N = n + 1;
  const std::size_t E = pair_count(N);
  std::set<std::vector<int>> keys;
  std::vector<int> rgs(E, 0);
  auto rec = [&](auto&& self, std::size_t k, int used) -> void {
    if (k == E) {
      if (uniform_by_hand(rgs, N, used)) keys.insert(brute_key(ColouredGraph(n, rgs, used)));
      return;
    }
    for (int c = 0; c <= used && c < static_cast<int>(E); ++c) {
      rgs[k] = c;
      self(self, k + 1, std::max(used, c + 1));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 1);
  return keys;
}

std::vector<std::size_t> brute_orbit_sizes(const ColouredGraph& g, int colour) {
  auto autos = oracle::automorphisms(g);
  std::set<Edge> seen;
  std::vector<std::size_t> sizes;
  for (const Edge& e : g.colour_class(colour)) {
    if (seen.count(e)) continue;
    std::set<Edge> orbit;
    for (const auto& p : autos) {
      orbit.insert(Edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]));
    }
    seen.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace

TEST_CASE("catalogue counts and weak types") {
  const std::vector<std::vector<Partition>> expected{
      {{2}},
      {{3}, {2, 1}, {1, 1, 1}},
      {{4}, {2, 2}},
      {{5}, {4, 1}, {3, 2}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}},
      {{6}, {4, 2}, {2, 2, 2}}};
  for (int n = 2; n <= 6; ++n) {
    auto entries = enumerate_strong_types(n);
    const auto& want = expected[static_cast<std::size_t>(n - 2)];
    REQUIRE(entries.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(entries[k].weak == want[k]);
  }
}

TEST_CASE("catalogue entries satisfy their invariants") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& e : enumerate_strong_types(n)) {
      CHECK(e.dimension == n);
      CHECK(canonical_form(e.canonical) == e.canonical);
      CHECK(satisfies_complementarity(e.canonical));
      CHECK(is_vertex_uniform(e.canonical));
      CHECK(components_congruent(e.canonical));
      CHECK(is_vertex_transitive(e.canonical));
      CHECK(e.weak == weak_type(e.canonical));
      CHECK(e.group_fingerprint.order == e.group_order);
      CHECK(e.group_order % static_cast<std::size_t>(n + 1) == 0);
    }
  }
}

TEST_CASE("catalogue group orders match brute force and the reference table") {
  for (int n = 2; n <= 6; ++n) {
    auto entries = enumerate_strong_types(n);
    auto table = known_table(n);
    REQUIRE(entries.size() == table.size());
    std::multiset<std::pair<Partition, std::size_t>> got, want;
    for (const auto& e : entries) {
      CHECK(e.group_order == oracle::automorphism_count(e.canonical));
      got.emplace(e.weak, e.group_order);
    }
    for (const auto& row : table) want.emplace(row.weak, row.group_order);
    CHECK(got == want);
  }
}

TEST_CASE("the two [3,2] types") {
  auto entries = enumerate_strong_types(5);
  std::vector<CatalogEntry> threes;
  for (const auto& e : entries) {
    if (e.weak == Partition{3, 2}) threes.push_back(e);
  }
  REQUIRE(threes.size() == 2);
  std::set<std::size_t> orders{threes[0].group_order, threes[1].group_order};
  CHECK(orders == std::set<std::size_t>{12, 72});
  std::set<ColouredGraph> forms{threes[0].canonical, threes[1].canonical};
  CHECK(forms.count(canonical_form(fixtures::hexagon_32())) == 1);
  CHECK(forms.count(canonical_form(fixtures::two_triangles_32())) == 1);
  CHECK(make_entry(fixtures::hexagon_32()).group_fingerprint.element_orders ==
        std::map<std::size_t, std::size_t>{{1, 1}, {2, 7}, {3, 2}, {6, 2}});
}

TEST_CASE("vertex-uniform stream matches exhaustive set partitions") {
  for (int n = 2; n <= 4; ++n) {
    auto stream = enumerate_vertex_uniform(n);
    std::set<std::vector<int>> keys;
    for (const auto& g : stream) keys.insert(brute_key(g));
    CHECK(keys.size() == stream.size());
    CHECK(keys == brute_vertex_uniform(n));
  }
}

TEST_CASE("complementarity and vertex transitivity agree on the stream") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_vertex_uniform(n)) {
      CHECK(satisfies_complementarity(g) == is_vertex_transitive(g));
    }
  }
  // The stream at n = 5 contains the non-complementary [2,2,1] example.
  auto stream5 = enumerate_vertex_uniform(5);
  ColouredGraph e4 = canonical_form(fixtures::example_uniform_not_complementary());
  CHECK(std::find(stream5.begin(), stream5.end(), e4) != stream5.end());
}

TEST_CASE("enumeration is deterministic") {
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions many;
  many.threads = 4;
  CHECK(enumerate_vertex_uniform(5, one) == enumerate_vertex_uniform(5, many));
  CHECK(enumerate_vertex_uniform(6, one) == enumerate_vertex_uniform(6));
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_strong_types(1), BoundExceeded);
  CHECK_THROWS_AS(enumerate_strong_types(7), BoundExceeded);
  CHECK_THROWS_AS(known_table(7), BoundExceeded);
  CHECK(known_table(4).size() == 2);
  CHECK(known_table(4)[1].weak == Partition{2, 2});
  CHECK(known_table(4)[1].group_order == 10);
}

TEST_CASE("edge orbit reports") {
  auto six = enumerate_strong_types(6);
  for (const auto& e : six) {
    auto report = edge_orbit_report(e);
    if (e.weak == Partition{4, 2}) {
      for (const auto& r : report) {
        const auto degree = e.canonical.colour_class(r.colour).size() * 2 / 7;
        if (degree == 4) {
          CHECK(r.orbit_sizes == std::vector<std::size_t>{7, 7});
          CHECK_FALSE(r.single_orbit);
        } else {
          CHECK(r.orbit_sizes == std::vector<std::size_t>{7});
        }
      }
    }
    if (e.weak == Partition{2, 2, 2}) {
      for (const auto& r : report) CHECK(r.orbit_sizes == std::vector<std::size_t>{7});
    }
  }
  for (int n = 2; n <= 6; ++n) {
    auto report = edge_orbit_report(make_entry(ColouredGraph::monochrome(n)));
    REQUIRE(report.size() == 1);
    CHECK(report[0].single_orbit);
  }

  // Orbit decomposition for every entry up to n = 5, checked against brute force. Two
  // dimension-5 types have a colour that is not a single orbit.
  std::vector<Partition> split_types;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& e : enumerate_strong_types(n)) {
      bool all_single = true;
      for (const auto& r : edge_orbit_report(e)) {
        CHECK(r.orbit_sizes == brute_orbit_sizes(e.canonical, r.colour));
        all_single = all_single && r.single_orbit;
      }
      if (!all_single) split_types.push_back(e.weak);
    }
  }
  CHECK(split_types == std::vector<Partition>{{3, 2}, {3, 1, 1}});
}

TEST_CASE("delete then extend recovers every catalogue type") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& e : enumerate_strong_types(n)) {
      for (int v = 0; v <= n; ++v) {
        auto ext = extend_facet(delete_vertex(e.canonical, v));
        REQUIRE(ext);
        CHECK(canonical_form(ext->graph) == e.canonical);
        CHECK(ext->complementary);
      }
    }
  }
  CHECK_FALSE(extend_facet(fixtures::scalene_k4()));
}
