#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "equifacet/colored_graph.hpp"
#include "equifacet/permgroup.hpp"

namespace equifacet {

inline constexpr double kDefaultTolerance = 1e-9;

/// Colour index -> edge length.
struct LengthAssignment {
  std::vector<double> lengths;
};

/// Symmetric (n+1)x(n+1) table of pairwise distances with zero diagonal.
using LengthTable = Eigen::MatrixXd;

/// n x n matrix with entries l_{i0}^2 + l_{j0}^2 - l_{ij}^2, i, j = 1..n.
struct GramMatrix {
  Eigen::MatrixXd m;
};

/// Expands a per-colour assignment into the full distance table of K_{n+1}.
LengthTable length_table(const ColouredGraph& g, const LengthAssignment& lengths);

/// Throws InvalidArgument on asymmetric, non-positive or non-finite input.
GramMatrix gram_matrix(const LengthTable& lengths);

/// Positive-definiteness of the Gram matrix, decided by the pivots of an LDL^T
/// factorization against tolerance * max|m_ij|.
bool is_realizable(const LengthTable& lengths, double tolerance = kDefaultTolerance);

/// n+1 affinely independent points with a stored comparison tolerance (relative to the
/// largest edge). Coordinates may live in any ambient dimension d >= n.
class EmbeddedSimplex {
 public:
  /// Rows are vertices. Throws DegenerateSimplex if they are not affinely independent.
  explicit EmbeddedSimplex(Eigen::MatrixXd points, double tolerance = kDefaultTolerance);

  int dimension() const { return static_cast<int>(points_.rows()) - 1; }
  int vertex_count() const { return static_cast<int>(points_.rows()); }
  int ambient_dimension() const { return static_cast<int>(points_.cols()); }
  double tolerance() const { return tolerance_; }
  const Eigen::MatrixXd& points() const { return points_; }
  Eigen::VectorXd point(int i) const { return points_.row(i).transpose(); }

  double distance(int i, int j) const { return (points_.row(i) - points_.row(j)).norm(); }
  LengthTable distance_matrix() const;
  double diameter() const;

 private:
  Eigen::MatrixXd points_;
  double tolerance_;
};

/// A_0 at the origin, A_i = row i of the Cholesky factor of M/2. Throws NotRealizable.
EmbeddedSimplex embed(const LengthTable& lengths, double tolerance = kDefaultTolerance);

struct Realization {
  LengthAssignment lengths;
  EmbeddedSimplex simplex;
  double epsilon = 0.0;
};

/// Gives colour c the length base * (1 + eps * (c+1) / r), halving eps from 1/4 until the
/// lengths are realizable. A nonzero seed shuffles which colour gets which rung.
Realization realize_colouring(const ColouredGraph& g, double base = 1.0, std::uint64_t seed = 0,
                              double tolerance = kDefaultTolerance);

/// Distance-preserving bijection from facet F_i (vertex i deleted) onto facet F_j, returned
/// as a permutation of all n+1 vertices that also sends i to j.
std::optional<Permutation> facet_congruent(const EmbeddedSimplex& s, int i, int j);
bool is_equifacetal(const EmbeddedSimplex& s);

/// Vertex permutations preserving all distances within tolerance.
PermGroup isometry_group(const EmbeddedSimplex& s, int max_dimension = kDefaultSearchBound);

/// Groups edges whose lengths differ by at most tolerance * max length; colours ordered by
/// increasing length. Throws AmbiguousClustering when a gap between consecutive sorted
/// lengths falls in (tolerance, 10 * tolerance] relative to the max length.
ColouredGraph edge_length_partition(const EmbeddedSimplex& s);

Eigen::VectorXd centroid(const EmbeddedSimplex& s);
/// Point of the affine span equidistant from every vertex.
Eigen::VectorXd circumcentre(const EmbeddedSimplex& s);
/// Vertices weighted by the (n-1)-volume of the opposite facet.
Eigen::VectorXd incentre(const EmbeddedSimplex& s);

/// Largest pairwise distance among centroid, circumcentre and incentre.
double centre_spread(const EmbeddedSimplex& s);
/// centre_spread <= 10 * tolerance * diameter.
bool centres_coincide(const EmbeddedSimplex& s);

}  // namespace equifacet
