#include "equifacet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "equifacet/errors.hpp"

namespace equifacet {

LengthTable length_table(const ColouredGraph& g, const LengthAssignment& lengths) {
  if (lengths.lengths.size() != static_cast<std::size_t>(g.colour_count())) {
    throw InvalidArgument("need one length per colour (" + std::to_string(g.colour_count()) + "), got " +
                          std::to_string(lengths.lengths.size()));
  }
  const int N = g.vertex_count();
  LengthTable table = LengthTable::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      double l = lengths.lengths[static_cast<std::size_t>(g.colour(i, j))];
      table(i, j) = l;
      table(j, i) = l;
    }
  }
  return table;
}

GramMatrix gram_matrix(const LengthTable& lengths) {
  const auto N = lengths.rows();
  if (N < 2 || lengths.cols() != N) throw InvalidArgument("length table must be square with at least two vertices");
  for (Eigen::Index i = 0; i < N; ++i) {
    if (lengths(i, i) != 0.0) throw InvalidArgument("length table diagonal must be zero");
    for (Eigen::Index j = i + 1; j < N; ++j) {
      const double l = lengths(i, j);
      if (!std::isfinite(l) || l <= 0.0) throw InvalidArgument("edge lengths must be positive and finite");
      if (l != lengths(j, i)) throw InvalidArgument("length table is not symmetric");
    }
  }
  const auto n = N - 1;
  GramMatrix g{Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 1; i <= n; ++i) {
    for (Eigen::Index j = 1; j <= n; ++j) {
      const double lij = (i == j) ? 0.0 : lengths(i, j);
      g.m(i - 1, j - 1) = lengths(i, 0) * lengths(i, 0) + lengths(j, 0) * lengths(j, 0) - lij * lij;
    }
  }
  return g;
}

namespace {

bool positive_definite(const Eigen::MatrixXd& m, double tolerance) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale <= 0.0) return false;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
  if (ldlt.info() != Eigen::Success) return false;
  return (ldlt.vectorD().array() > tolerance * scale).all();
}

}  // namespace

bool is_realizable(const LengthTable& lengths, double tolerance) {
  return positive_definite(gram_matrix(lengths).m, tolerance);
}

// ---------------------------------------------------------------------------
// EmbeddedSimplex

EmbeddedSimplex::EmbeddedSimplex(Eigen::MatrixXd points, double tolerance)
    : points_(std::move(points)), tolerance_(tolerance) {
  if (tolerance_ < 0.0 || !std::isfinite(tolerance_)) throw InvalidArgument("tolerance must be non-negative");
  const auto rows = points_.rows();
  if (rows < 2) throw DegenerateSimplex("a simplex needs at least two vertices");
  if (points_.cols() < rows - 1) {
    throw DegenerateSimplex(std::to_string(rows) + " points cannot be affinely independent in dimension " +
                            std::to_string(points_.cols()));
  }
  if (!points_.allFinite()) throw DegenerateSimplex("coordinates must be finite");
  Eigen::MatrixXd diffs = points_.bottomRows(rows - 1).rowwise() - points_.row(0);
  Eigen::MatrixXd gram = diffs * diffs.transpose();
  if (!positive_definite(gram, std::max(tolerance_, 1e-14))) {
    throw DegenerateSimplex("vertices are not affinely independent");
  }
}

LengthTable EmbeddedSimplex::distance_matrix() const {
  const int N = vertex_count();
  LengthTable d = LengthTable::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) d(i, j) = d(j, i) = distance(i, j);
  }
  return d;
}

double EmbeddedSimplex::diameter() const { return distance_matrix().maxCoeff(); }

EmbeddedSimplex embed(const LengthTable& lengths, double tolerance) {
  GramMatrix gram = gram_matrix(lengths);
  if (!positive_definite(gram.m, tolerance)) throw NotRealizable();
  const auto n = gram.m.rows();
  // m_ij = 2 <A_i - A_0, A_j - A_0>, so the rows of a factor of M/2 are the edge vectors.
  Eigen::LLT<Eigen::MatrixXd> llt(0.5 * gram.m);
  if (llt.info() != Eigen::Success) throw NotRealizable();
  Eigen::MatrixXd points = Eigen::MatrixXd::Zero(n + 1, n);
  points.bottomRows(n) = llt.matrixL();
  return EmbeddedSimplex(std::move(points), tolerance);
}

Realization realize_colouring(const ColouredGraph& g, double base, std::uint64_t seed, double tolerance) {
  if (!(base > 0.0) || !std::isfinite(base)) throw InvalidArgument("base length must be positive");
  const int r = g.colour_count();
  std::vector<int> rung(static_cast<std::size_t>(r));
  std::iota(rung.begin(), rung.end(), 1);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(rung.begin(), rung.end(), rng);
  }
  double eps = 0.25;
  for (int attempt = 0; attempt < 60; ++attempt, eps *= 0.5) {
    LengthAssignment assignment;
    for (int c = 0; c < r; ++c) {
      assignment.lengths.push_back(base * (1.0 + eps * rung[static_cast<std::size_t>(c)] / r));
    }
    LengthTable table = length_table(g, assignment);
    if (is_realizable(table, tolerance)) {
      return Realization{assignment, embed(table, tolerance), eps};
    }
  }
  throw std::logic_error("no realizable perturbation found near the equilateral simplex");
}

// ---------------------------------------------------------------------------
// Congruence and isometries

namespace {

/// Backtracking search for distance-preserving maps between two ordered vertex lists.
class DistanceMatcher {
 public:
  DistanceMatcher(const EmbeddedSimplex& s, std::vector<int> from, std::vector<int> to)
      : dist_(s.distance_matrix()), from_(std::move(from)), to_(std::move(to)) {
    tol_ = s.tolerance() * dist_.maxCoeff();
    profile_from_ = profiles(from_);
    profile_to_ = profiles(to_);
  }

  template <class Visit>
  void run(Visit&& visit) {
    image_.assign(from_.size(), -1);
    used_.assign(to_.size(), false);
    stopped_ = false;
    extend(0, visit);
  }

  const std::vector<int>& from() const { return from_; }
  const std::vector<int>& to() const { return to_; }

 private:
  std::vector<std::vector<double>> profiles(const std::vector<int>& verts) const {
    std::vector<std::vector<double>> out;
    for (int v : verts) {
      std::vector<double> row;
      for (int w : verts) {
        if (w != v) row.push_back(dist_(v, w));
      }
      std::sort(row.begin(), row.end());
      out.push_back(std::move(row));
    }
    return out;
  }

  bool close(double a, double b) const { return std::abs(a - b) <= tol_; }

  bool profiles_match(std::size_t a, std::size_t b) const {
    const auto& pa = profile_from_[a];
    const auto& pb = profile_to_[b];
    for (std::size_t k = 0; k < pa.size(); ++k) {
      if (!close(pa[k], pb[k])) return false;
    }
    return true;
  }

  template <class Visit>
  void extend(std::size_t k, Visit& visit) {
    if (k == from_.size()) {
      if (!visit(image_)) stopped_ = true;
      return;
    }
    for (std::size_t t = 0; t < to_.size() && !stopped_; ++t) {
      if (used_[t] || !profiles_match(k, t)) continue;
      bool ok = true;
      for (std::size_t p = 0; p < k && ok; ++p) {
        ok = close(dist_(from_[p], from_[k]), dist_(to_[static_cast<std::size_t>(image_[p])], to_[t]));
      }
      if (!ok) continue;
      image_[k] = static_cast<int>(t);
      used_[t] = true;
      extend(k + 1, visit);
      used_[t] = false;
      image_[k] = -1;
    }
  }

  LengthTable dist_;
  std::vector<int> from_, to_;
  double tol_ = 0.0;
  std::vector<std::vector<double>> profile_from_, profile_to_;
  std::vector<int> image_;
  std::vector<bool> used_;
  bool stopped_ = false;
};

std::vector<int> all_but(int count, int skip) {
  std::vector<int> out;
  for (int v = 0; v < count; ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

}  // namespace

std::optional<Permutation> facet_congruent(const EmbeddedSimplex& s, int i, int j) {
  const int N = s.vertex_count();
  if (i < 0 || j < 0 || i >= N || j >= N) throw InvalidArgument("facet index out of range");
  DistanceMatcher matcher(s, all_but(N, i), all_but(N, j));
  std::optional<Permutation> found;
  matcher.run([&](const std::vector<int>& image) {
    std::vector<int> perm(static_cast<std::size_t>(N));
    perm[static_cast<std::size_t>(i)] = j;
    for (std::size_t k = 0; k < image.size(); ++k) {
      perm[static_cast<std::size_t>(matcher.from()[k])] = matcher.to()[static_cast<std::size_t>(image[k])];
    }
    found = Permutation(std::move(perm));
    return false;
  });
  return found;
}

bool is_equifacetal(const EmbeddedSimplex& s) {
  for (int j = 1; j < s.vertex_count(); ++j) {
    if (!facet_congruent(s, 0, j)) return false;
  }
  return true;
}

PermGroup isometry_group(const EmbeddedSimplex& s, int max_dimension) {
  if (s.dimension() > max_dimension) {
    throw BoundExceeded("dimension " + std::to_string(s.dimension()) + " exceeds search bound " +
                        std::to_string(max_dimension));
  }
  const int N = s.vertex_count();
  DistanceMatcher matcher(s, all_but(N, -1), all_but(N, -1));
  std::vector<Permutation> elements;
  matcher.run([&](const std::vector<int>& image) {
    elements.emplace_back(image);
    return true;
  });
  return PermGroup::from_elements(N, std::move(elements));
}

ColouredGraph edge_length_partition(const EmbeddedSimplex& s) {
  const int N = s.vertex_count();
  std::vector<std::pair<double, std::size_t>> lengths;
  for (int j = 1; j < N; ++j) {
    for (int i = 0; i < j; ++i) lengths.emplace_back(s.distance(i, j), edge_index(i, j));
  }
  std::sort(lengths.begin(), lengths.end());
  const double scale = lengths.back().first;
  const double tol = s.tolerance() * scale;

  std::vector<int> colours(lengths.size());
  int colour = 0;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (k > 0) {
      const double gap = lengths[k].first - lengths[k - 1].first;
      if (gap > tol && gap < 10.0 * tol) {
        throw AmbiguousClustering("edge length gap " + std::to_string(gap) + " is within an order of magnitude of the tolerance");
      }
      if (gap > tol) ++colour;
    }
    colours[lengths[k].second] = colour;
  }
  return ColouredGraph(s.dimension(), std::move(colours), colour + 1);
}

// ---------------------------------------------------------------------------
// Centres

Eigen::VectorXd centroid(const EmbeddedSimplex& s) { return s.points().colwise().mean().transpose(); }

Eigen::VectorXd circumcentre(const EmbeddedSimplex& s) {
  const auto& pts = s.points();
  const auto n = pts.rows() - 1;
  Eigen::MatrixXd diffs = pts.bottomRows(n).rowwise() - pts.row(0);
  Eigen::MatrixXd gram = diffs * diffs.transpose();
  Eigen::VectorXd rhs = 0.5 * diffs.rowwise().squaredNorm();
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success) throw DegenerateSimplex("singular circumcentre system");
  Eigen::VectorXd lambda = ldlt.solve(rhs);
  return pts.row(0).transpose() + diffs.transpose() * lambda;
}

Eigen::VectorXd incentre(const EmbeddedSimplex& s) {
  const auto& pts = s.points();
  const int N = s.vertex_count();
  Eigen::VectorXd weighted = Eigen::VectorXd::Zero(pts.cols());
  double total = 0.0;
  for (int j = 0; j < N; ++j) {
    std::vector<int> facet = all_but(N, j);
    double weight = 1.0;  // a 0-dimensional facet has unit content
    if (facet.size() > 1) {
      Eigen::MatrixXd diffs(static_cast<Eigen::Index>(facet.size() - 1), pts.cols());
      for (std::size_t k = 1; k < facet.size(); ++k) {
        diffs.row(static_cast<Eigen::Index>(k - 1)) = pts.row(facet[k]) - pts.row(facet[0]);
      }
      // Facet volume up to the common 1/(n-1)! factor.
      weight = std::sqrt(std::max(0.0, (diffs * diffs.transpose()).determinant()));
    }
    weighted += weight * pts.row(j).transpose();
    total += weight;
  }
  if (!(total > 0.0)) throw DegenerateSimplex("all facets have zero volume");
  return weighted / total;
}

double centre_spread(const EmbeddedSimplex& s) {
  const Eigen::VectorXd a = centroid(s);
  const Eigen::VectorXd b = circumcentre(s);
  const Eigen::VectorXd c = incentre(s);
  return std::max({(a - b).norm(), (a - c).norm(), (b - c).norm()});
}

bool centres_coincide(const EmbeddedSimplex& s) {
  return centre_spread(s) <= 10.0 * s.tolerance() * s.diameter();
}

}  // namespace equifacet
