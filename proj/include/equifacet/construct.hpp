#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "equifacet/colored_graph.hpp"
#include "equifacet/permgroup.hpp"

namespace equifacet {

/// Colour classes X_1, ..., X_ceil(n/2) of K_{n+1}, X_k = { ij : |i - j| = k mod n+1 },
/// with X_k coloured k-1.
ColouredGraph cyclic_colouring(int n);

/// Coarsens g: new colour k is the union of the old colours in grouping[k].
/// The grouping must cover every colour exactly once.
ColouredGraph merge_colours(const ColouredGraph& g, const std::vector<std::vector<int>>& grouping);

/// Splits colour c, a disjoint union of even cycles alternating even and odd vertices, into
/// two perfect matchings. Each cycle is walked from its least vertex toward its smaller
/// neighbour; edges leaving an even vertex keep colour c, the rest take the new colour r.
/// Throws NotSplittable.
ColouredGraph split_colour(const ColouredGraph& g, int c);

/// Colours each edge orbit of the group generated by `generators` with its own colour,
/// orbits ordered by least edge. Throws NotTransitive.
ColouredGraph orbit_colouring(std::span<const Permutation> generators);

/// Orbit colouring of the regular action of (Z/2)^r on r-bit strings: colour mask-1 is the
/// matching i <-> i xor mask. 1 <= r <= 4.
ColouredGraph elementary_abelian_colouring(int r);

/// Circle-method one-factorization of K_{n+1} for odd n: n perfect matchings.
ColouredGraph round_robin_one_factorization(int n);

enum class Obstruction { parity, sum_parity, power_of_two, too_many_colours };

std::string to_string(Obstruction o);

struct Realizable {
  ColouredGraph witness;
};
struct NotRealizableVerdict {
  Obstruction reason;
};
struct UnknownVerdict {};

/// Tri-state answer to "is this partition the weak type of an equifacetal simplex?"
using Realizability = std::variant<Realizable, NotRealizableVerdict, UnknownVerdict>;

/// Number of odd entries reachable by splitting cyclic classes of K_{n+1}, n odd.
int max_odd_entries(int n);

/// Classifies partition p of n. Every Realizable witness has been checked to satisfy
/// complementarity and to have weak type p.
Realizability realize_partition(const Partition& p, int n);

struct FacetExtension {
  ColouredGraph graph;
  bool complementary = false;
};

/// Treats g (on n+1 vertices) as a facet and looks for the vertex-uniform colouring of
/// K_{n+2} obtained by adding an apex whose edges take, at each facet vertex, the one colour
/// that vertex is short of. Returns nullopt when no uniform target degree vector exists.
/// Throws AmbiguousExtension when several do.
std::optional<FacetExtension> extend_facet(const ColouredGraph& g);

}  // namespace equifacet
