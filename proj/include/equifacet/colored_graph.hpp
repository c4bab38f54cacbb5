#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equifacet/edge.hpp"
#include "equifacet/permgroup.hpp"

namespace equifacet {

/// Default cap on the dimension n for searches that are exponential in n.
inline constexpr int kDefaultSearchBound = 8;

/// Edge-coloured complete graph K_{n+1}: the strong combinatorial type of an n-simplex.
///
/// Vertices are 0..n. Each unordered pair carries one colour in 0..r-1, stored in colex
/// pair order (see edge_index). Colour classes may be empty only for graphs derived by
/// delete_vertex; everything built from user input has all colours in use.
class ColouredGraph {
 public:
  /// `edge_colours[edge_index(i, j)]` is the colour of {i, j}.
  ColouredGraph(int n, std::vector<int> edge_colours, int colour_count);
  /// Number of colours is taken as 1 + the largest colour present.
  ColouredGraph(int n, std::vector<int> edge_colours);

  /// All edges one colour.
  static ColouredGraph monochrome(int n);
  /// Builds from explicit colour classes. Every pair must occur exactly once and every
  /// class must be non-empty.
  static ColouredGraph from_classes(int n, const std::vector<std::vector<Edge>>& classes);

  int dimension() const { return n_; }
  int vertex_count() const { return n_ + 1; }
  int colour_count() const { return r_; }
  std::size_t edge_count() const { return colours_.size(); }

  int colour(int i, int j) const;
  int colour(Edge e) const { return colour(e.u, e.v); }
  const std::vector<int>& edge_colours() const { return colours_; }

  std::vector<Edge> colour_class(int c) const;
  std::vector<std::vector<Edge>> colour_classes() const;
  bool all_colours_used() const;

  /// Same graph with vertex v renamed perm(v).
  ColouredGraph relabelled(const Permutation& perm) const;
  /// Same graph with colour c renamed colour_map[c].
  ColouredGraph recoloured(std::span<const int> colour_map) const;

  std::string to_string() const;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;
  friend auto operator<=>(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  int n_;
  int r_;
  std::vector<int> colours_;
};

/// Multiset of positive integers, kept sorted non-increasing: the weak combinatorial type.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> entries);
  Partition(std::initializer_list<int> entries) : Partition(std::vector<int>(entries)) {}

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int sum() const;
  std::size_t odd_count() const;
  bool all_even() const { return odd_count() == 0; }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the sorted entries: [2,1,1,1] < [2,2,1] < [3,2].
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> entries_;
};

/// Parses "3,2,1" (whitespace tolerated). Throws InvalidArgument.
Partition parse_partition(const std::string& text);

/// All partitions of n, each non-increasing, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Vertex map (and colour map, when colours may be permuted) carrying g1 onto g2.
struct IsoWitness {
  Permutation mapping;
  /// colour_relabel[c] is the colour in g2 matching colour c of g1.
  std::vector<int> colour_relabel;

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

std::map<int, int> vertex_colour_degrees(const ColouredGraph& g, int v);
bool is_vertex_uniform(const ColouredGraph& g);
/// Per-colour vertex degrees of a vertex-uniform colouring. Throws NotVertexUniform.
Partition weak_type(const ColouredGraph& g);

/// Removes vertex v and relabels the rest to 0..n-1 preserving order. Colour indices are
/// preserved; colours that lose all their edges are kept as empty classes.
ColouredGraph delete_vertex(const ColouredGraph& g, int v);

/// Lexicographically least colour-respecting vertex bijection g1 -> g2, if any.
/// With fixed colours both graphs must use the same colour alphabet.
std::optional<IsoWitness> coloured_isomorphic(const ColouredGraph& g1, const ColouredGraph& g2,
                                              bool allow_colour_permutation);

/// All vertex-deleted subgraphs are isomorphic with colours held fixed.
bool satisfies_complementarity(const ColouredGraph& g);

/// Within each colour class, all connected components are isomorphic as plain graphs.
bool components_congruent(const ColouredGraph& g);

/// Vertex permutations preserving every colour class.
PermGroup colour_automorphisms(const ColouredGraph& g, int max_dimension = kDefaultSearchBound);
bool is_vertex_transitive(const ColouredGraph& g, int max_dimension = kDefaultSearchBound);

/// Lexicographically least colex edge-colour vector over all vertex orders, colours renamed
/// by order of first appearance. Equivalent graphs get identical results.
ColouredGraph canonical_form(const ColouredGraph& g, int max_dimension = kDefaultSearchBound);

}  // namespace equifacet
