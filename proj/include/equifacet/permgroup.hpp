#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "equifacet/edge.hpp"

namespace equifacet {

/// Bijection of {0, ..., m-1}; entry i of images() is the image of point i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int degree);
  /// The m-cycle i -> i+1 mod m.
  static Permutation rotation(int degree, int step = 1);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3}}.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  Edge operator()(Edge e) const { return Edge((*this)(e.u), (*this)(e.v)); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Order of the permutation as a group element.
  std::size_t order() const;
  std::string to_cycle_string() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultElementBound = 1'000'000;

/// Finite permutation group with its full element list materialized.
///
/// Elements are kept sorted, so two groups with the same element set compare
/// equal regardless of how they were generated.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators,
            std::size_t element_bound = kDefaultElementBound);

  /// Wraps an element list already known to be closed; a small generating set is derived.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  bool is_abelian() const;

 private:
  PermGroup() = default;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Breadth-first closure of the generators; throws BoundExceeded past element_bound.
PermGroup generate(std::span<const Permutation> generators, int degree,
                   std::size_t element_bound = kDefaultElementBound);

std::vector<std::vector<int>> vertex_orbits(const PermGroup& group);
/// Orbits on all unordered pairs of points.
std::vector<std::vector<Edge>> pair_orbits(const PermGroup& group);
/// Orbits on unordered pairs intersected with `edges`; for a G-invariant edge set these
/// are exactly the orbits of G acting on it.
std::vector<std::vector<Edge>> edge_orbits(const PermGroup& group, std::span<const Edge> edges);

bool is_transitive(const PermGroup& group);

struct GroupFingerprint {
  std::size_t order = 0;
  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> element_orders;
  bool abelian = false;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

inline constexpr std::size_t kFingerprintBound = 10'000;

GroupFingerprint fingerprint(const PermGroup& group);
std::string to_string(const GroupFingerprint& fp);

}  // namespace equifacet
