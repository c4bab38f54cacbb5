#pragma once

#include <cstddef>
#include <vector>

#include "equifacet/colored_graph.hpp"
#include "equifacet/permgroup.hpp"

namespace equifacet {

inline constexpr int kDefaultCatalogBound = 6;

struct EnumerationOptions {
  /// Largest dimension accepted; the search grows quickly beyond 6.
  int max_dimension = kDefaultCatalogBound;
  /// Worker threads for the search; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct CatalogEntry {
  int dimension = 0;
  ColouredGraph canonical;
  Partition weak;
  std::size_t group_order = 0;
  GroupFingerprint group_fingerprint;
  /// edge_orbit_sizes[c]: sizes of the automorphism orbits inside colour class c.
  std::vector<std::vector<std::size_t>> edge_orbit_sizes;
};

/// Every vertex-uniform colouring of K_{n+1}, one canonical form per class under vertex
/// permutation and colour renaming. Sorted by weak type (largest first), then canonical form.
std::vector<ColouredGraph> enumerate_vertex_uniform(int n, const EnumerationOptions& options = {});

/// The vertex-uniform colourings that satisfy complementarity, with their groups.
std::vector<CatalogEntry> enumerate_strong_types(int n, const EnumerationOptions& options = {});

/// Builds the catalogue record for a complementarity-satisfying colouring.
CatalogEntry make_entry(const ColouredGraph& g);

struct KnownRow {
  Partition weak;
  std::size_t group_order;
};

/// Reference table of weak types and isometry group orders for 2 <= n <= 6.
std::vector<KnownRow> known_table(int n);

struct ColourOrbits {
  int colour = 0;
  std::vector<std::size_t> orbit_sizes;
  bool single_orbit = false;
};

/// Per colour, how the automorphism group splits that colour class into edge orbits.
std::vector<ColourOrbits> edge_orbit_report(const CatalogEntry& entry);

}  // namespace equifacet
