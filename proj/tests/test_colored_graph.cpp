#include <doctest.h>

#include <random>

#include "equifacet/colored_graph.hpp"
#include "equifacet/construct.hpp"
#include "equifacet/errors.hpp"
#include "oracles.hpp"

using namespace equifacet;

namespace {

ColouredGraph random_uniformish(int n, int colours, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, colours - 1);
  std::vector<int> c(pair_count(n + 1));
  for (auto& x : c) x = pick(rng);
  for (int k = 0; k < colours; ++k) c[static_cast<std::size_t>(k)] = k;
  return ColouredGraph(n, c, colours);
}

}  // namespace

TEST_CASE("edge indexing is colex") {
  CHECK(edge_index(0, 1) == 0);
  CHECK(edge_index(0, 2) == 1);
  CHECK(edge_index(1, 2) == 2);
  CHECK(edge_index(3, 0) == 3);
  for (std::size_t k = 0; k < 28; ++k) {
    Edge e = edge_at(k);
    CHECK(e.u < e.v);
    CHECK(edge_index(e.u, e.v) == k);
  }
}

TEST_CASE("construction and validation") {
  CHECK_THROWS_AS(ColouredGraph(2, {0, 1}, 2), InvalidArgument);
  CHECK_THROWS_AS(ColouredGraph(2, {0, 1, 3}, 2), InvalidArgument);
  CHECK_THROWS_AS(fixtures::from_lists(2, {{{0, 1}, {0, 2}}, {{0, 1}, {1, 2}}}), InvalidArgument);
  CHECK_THROWS_AS(fixtures::from_lists(2, {{{0, 1}, {0, 2}}}), InvalidArgument);
  CHECK_THROWS_AS(fixtures::from_lists(2, {{{0, 1}, {0, 2}, {1, 2}}, {}}), InvalidArgument);
  ColouredGraph g = fixtures::from_lists(2, {{{0, 1}}, {{0, 2}, {1, 2}}});
  CHECK(g.colour(2, 0) == 1);
  CHECK(g.colour(Edge(0, 1)) == 0);
  CHECK(g.colour_class(1) == std::vector<Edge>{Edge(0, 2), Edge(1, 2)});
}

TEST_CASE("vertex colour degrees") {
  CHECK(vertex_colour_degrees(ColouredGraph::monochrome(3), 0) == std::map<int, int>{{0, 3}});
  CHECK(vertex_colour_degrees(fixtures::example_three_matchings(), 0) ==
        std::map<int, int>{{0, 1}, {1, 1}, {2, 1}, {3, 2}});
  ColouredGraph tri = fixtures::from_lists(2, {{{0, 1}}, {{0, 2}, {1, 2}}});
  CHECK(vertex_colour_degrees(tri, 2) == std::map<int, int>{{1, 2}});
  CHECK_THROWS_AS(vertex_colour_degrees(tri, 3), InvalidArgument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    ColouredGraph g = random_uniformish(2 + trial % 5, 3, rng);
    for (int v = 0; v < g.vertex_count(); ++v) {
      int total = 0;
      for (const auto& [c, d] : vertex_colour_degrees(g, v)) total += d;
      CHECK(total == g.dimension());
    }
  }
}

TEST_CASE("vertex uniformity and weak type") {
  CHECK(is_vertex_uniform(ColouredGraph::monochrome(3)));
  CHECK(is_vertex_uniform(fixtures::example_uniform_not_complementary()));
  ColouredGraph tri = fixtures::from_lists(2, {{{0, 1}}, {{0, 2}, {1, 2}}});
  CHECK_FALSE(is_vertex_uniform(tri));
  CHECK_THROWS_AS(weak_type(tri), NotVertexUniform);

  CHECK(weak_type(cyclic_colouring(6)) == Partition{2, 2, 2});
  CHECK(weak_type(fixtures::heptagon_42()) == Partition{4, 2});
  CHECK(weak_type(ColouredGraph::monochrome(3)) == Partition{3});
  CHECK(weak_type(fixtures::example_three_matchings()) == Partition{2, 1, 1, 1});
}

TEST_CASE("partitions") {
  CHECK(parse_partition("3, 2,1") == Partition{3, 2, 1});
  CHECK(parse_partition("1,3,2").entries() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(parse_partition(""), InvalidArgument);
  CHECK_THROWS_AS(parse_partition("2,,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_partition("2,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_partition("2,x"), InvalidArgument);
  CHECK(Partition{2, 1, 1, 1} < Partition{2, 2, 1});
  CHECK(Partition{2, 2, 1} < Partition{3, 2});
  CHECK(Partition{3, 1, 1}.odd_count() == 3);

  // Partition counts p(n) for n = 1..8.
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    auto parts = partitions_of(n);
    CHECK(parts.size() == p[static_cast<std::size_t>(n - 1)]);
    for (std::size_t k = 1; k < parts.size(); ++k) CHECK(parts[k] < parts[k - 1]);
    for (const auto& q : parts) CHECK(q.sum() == n);
  }
}

TEST_CASE("delete_vertex") {
  CHECK(delete_vertex(ColouredGraph::monochrome(3), 3) == ColouredGraph::monochrome(2));

  ColouredGraph d = delete_vertex(fixtures::pentagon(), 4);
  CHECK(d.dimension() == 3);
  CHECK(d.colour_class(0) == std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  CHECK(d.colour_class(1) == std::vector<Edge>{Edge(0, 2), Edge(0, 3), Edge(1, 3)});

  CHECK_FALSE(is_vertex_uniform(delete_vertex(fixtures::example_three_matchings(), 0)));

  // A colour living only at vertex 0 survives as an empty class.
  ColouredGraph star = fixtures::from_lists(2, {{{0, 1}, {0, 2}}, {{1, 2}}});
  ColouredGraph rest = delete_vertex(star, 2);
  CHECK(rest.colour_count() == 2);
  CHECK(rest.colour_class(1).empty());

  CHECK_THROWS_AS(delete_vertex(star, 3), InvalidArgument);
  CHECK_THROWS_AS(delete_vertex(ColouredGraph::monochrome(1), 0), InvalidArgument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    ColouredGraph g = random_uniformish(3 + trial % 4, 3, rng);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(delete_vertex(g, v) == oracle::without_vertex(g, v));
  }
}

TEST_CASE("coloured_isomorphic") {
  ColouredGraph e1 = fixtures::example_three_matchings();
  auto self = coloured_isomorphic(e1, e1, false);
  REQUIRE(self);
  CHECK(self->mapping.is_identity());
  CHECK(self->colour_relabel == std::vector<int>{0, 1, 2, 3});

  CHECK_FALSE(coloured_isomorphic(fixtures::hexagon_32(), fixtures::two_triangles_32(), true));

  // i -> 2i mod 5 turns the pentagon into the pentagram.
  ColouredGraph pent = fixtures::pentagon();
  ColouredGraph doubled = pent.relabelled(Permutation({0, 2, 4, 1, 3}));
  auto w = coloured_isomorphic(pent, doubled, true);
  REQUIRE(w);
  CHECK(oracle::preserves(pent.recoloured(w->colour_relabel), doubled, w->mapping.images()));
  auto swapped = coloured_isomorphic(pent, pent.recoloured(std::vector<int>{1, 0}), true);
  REQUIRE(swapped);
  CHECK(swapped->mapping.is_identity());
  CHECK(swapped->colour_relabel == std::vector<int>{1, 0});

  CHECK_THROWS_AS(coloured_isomorphic(pent, ColouredGraph::monochrome(3), true), InvalidArgument);

  // Agreement with brute force, witness validity, symmetry and relabelling invariance.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    ColouredGraph a = random_uniformish(n, 2, rng);
    ColouredGraph b = trial % 2 ? a.relabelled(oracle::random_permutation(n + 1, rng)) : random_uniformish(n, 2, rng);
    auto fixed = coloured_isomorphic(a, b, false);
    CHECK(fixed.has_value() == oracle::isomorphic_fixed(a, b));
    if (fixed) {
      CHECK(oracle::preserves(a, b, fixed->mapping.images()));
      auto back = coloured_isomorphic(b, a, false);
      REQUIRE(back);
      CHECK(oracle::preserves(b, a, back->mapping.images()));
    }
    CHECK(coloured_isomorphic(a, b, true).has_value() == oracle::isomorphic_any(a, b));
    Permutation s = oracle::random_permutation(n + 1, rng);
    CHECK(coloured_isomorphic(a.relabelled(s), b.relabelled(s), false).has_value() == fixed.has_value());
  }
}

TEST_CASE("lexicographically least witness") {
  // Every automorphism of the monochrome graph is a witness; the least is the identity.
  auto w = coloured_isomorphic(ColouredGraph::monochrome(4), ColouredGraph::monochrome(4), false);
  REQUIRE(w);
  CHECK(w->mapping.is_identity());

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    ColouredGraph a = random_uniformish(4, 2, rng);
    ColouredGraph b = a.relabelled(oracle::random_permutation(5, rng));
    std::vector<int> least;
    oracle::for_each_permutation(5, [&](const std::vector<int>& p) {
      if (!oracle::preserves(a, b, p)) return false;
      least = p;
      return true;
    });
    auto got = coloured_isomorphic(a, b, false);
    REQUIRE(got);
    CHECK(got->mapping.images() == least);
  }
}

TEST_CASE("complementarity") {
  for (int n = 1; n <= 6; ++n) CHECK(satisfies_complementarity(ColouredGraph::monochrome(n)));
  CHECK_FALSE(satisfies_complementarity(fixtures::example_uniform_not_complementary()));
  CHECK(satisfies_complementarity(fixtures::example_three_matchings()));
  CHECK(satisfies_complementarity(fixtures::pentagon()));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    ColouredGraph g = random_uniformish(2 + trial % 4, 2, rng);
    CHECK(satisfies_complementarity(g) == oracle::complementarity(g));
  }
}

TEST_CASE("components congruent") {
  ColouredGraph two_triangles = fixtures::two_triangles_32();
  CHECK(components_congruent(two_triangles));

  // Triangle plus 4-cycle inside K_7.
  std::vector<std::pair<int, int>> mixed{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}};
  std::vector<std::pair<int, int>> rest;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      if (std::find(mixed.begin(), mixed.end(), std::pair{i, j}) == mixed.end() &&
          std::find(mixed.begin(), mixed.end(), std::pair{j, i}) == mixed.end()) {
        rest.emplace_back(i, j);
      }
    }
  }
  CHECK_FALSE(components_congruent(fixtures::from_lists(6, {mixed, rest})));
  CHECK(components_congruent(cyclic_colouring(5)));
}

TEST_CASE("colour automorphisms") {
  CHECK(colour_automorphisms(ColouredGraph::monochrome(3)).order() == 24);
  CHECK(colour_automorphisms(fixtures::pentagon()).order() == 10);
  ColouredGraph k41 = merge_colours(cyclic_colouring(5), {{0, 1}, {2}});
  CHECK(weak_type(k41) == Partition{4, 1});
  CHECK(colour_automorphisms(k41).order() == 48);
  CHECK(oracle::automorphism_count(k41) == 48);
  CHECK(colour_automorphisms(fixtures::hexagon_32()).order() == 12);
  CHECK(colour_automorphisms(fixtures::two_triangles_32()).order() == 72);

  CHECK(is_vertex_transitive(ColouredGraph::monochrome(4)));
  CHECK_FALSE(is_vertex_transitive(fixtures::example_uniform_not_complementary()));
  CHECK(is_vertex_transitive(cyclic_colouring(6)));
  CHECK_THROWS_AS(colour_automorphisms(ColouredGraph::monochrome(9)), BoundExceeded);
  CHECK(colour_automorphisms(ColouredGraph::monochrome(5), 5).order() == 720);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    ColouredGraph g = random_uniformish(2 + trial % 5, 3, rng);
    PermGroup group = colour_automorphisms(g);
    auto brute = oracle::automorphisms(g);
    REQUIRE(group.order() == brute.size());
    for (const auto& p : brute) CHECK(group.contains(Permutation(p)));
    if (is_transitive(group)) CHECK(satisfies_complementarity(g));
  }
}

TEST_CASE("canonical form") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    ColouredGraph g = random_uniformish(n, 3, rng);
    ColouredGraph c = canonical_form(g);
    CHECK(canonical_form(c) == c);
    ColouredGraph h = g.relabelled(oracle::random_permutation(n + 1, rng));
    std::vector<int> colour_map{2, 0, 1};
    CHECK(canonical_form(h.recoloured(colour_map)) == c);
    CHECK(oracle::isomorphic_any(c, g));
  }

  ColouredGraph pent = fixtures::pentagon();
  std::vector<int> swap{1, 0};
  CHECK(canonical_form(pent.recoloured(swap)) == canonical_form(pent));
  CHECK_FALSE(canonical_form(fixtures::hexagon_32()) == canonical_form(fixtures::two_triangles_32()));
}

TEST_CASE("canonical form is the least colour vector") {
  // Oracle: minimum over all vertex orders of the edge vector after first-appearance
  // colour renaming.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + trial % 4;
    ColouredGraph g = random_uniformish(n, 3, rng);
    std::vector<int> best;
    oracle::for_each_permutation(n + 1, [&](const std::vector<int>& p) {
      ColouredGraph h = g.relabelled(Permutation(p));
      std::vector<int> rename(3, -1);
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
    CHECK(canonical_form(g).edge_colours() == best);
  }
}
