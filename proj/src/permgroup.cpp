#include "equifacet/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "equifacet/errors.hpp"

namespace equifacet {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw InvalidArgument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::rotation(int degree, int step) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = ((i + step) % degree + degree) % degree;
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree) {
        throw InvalidArgument("cycle point out of range");
      }
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
  std::vector<int> img(b.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::vector<Permutation> closure(const std::vector<Permutation>& generators, int degree,
                                 std::size_t element_bound) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = current * g;
      if (seen.insert(next).second) {
        if (seen.size() > element_bound) {
          throw BoundExceeded("group closure exceeds element bound " + std::to_string(element_bound));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::size_t element_bound)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw InvalidArgument("group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  }
  elements_ = closure(generators_, degree_, element_bound);
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  PermGroup group;
  group.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  group.elements_ = std::move(elements);

  // Greedy generating set: add the least element not yet reached.
  std::vector<Permutation> reached{Permutation::identity(degree)};
  for (const auto& e : group.elements_) {
    if (reached.size() == group.elements_.size()) break;
    if (std::binary_search(reached.begin(), reached.end(), e)) continue;
    group.generators_.push_back(e);
    reached = closure(group.generators_, degree, group.elements_.size());
  }
  if (reached.size() != group.elements_.size()) {
    throw InvalidArgument("element list is not closed under composition");
  }
  return group;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

PermGroup generate(std::span<const Permutation> generators, int degree, std::size_t element_bound) {
  return PermGroup(degree, std::vector<Permutation>(generators.begin(), generators.end()), element_bound);
}

std::vector<std::vector<int>> vertex_orbits(const PermGroup& group) {
  const int m = group.degree();
  std::vector<int> orbit_of(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<int>> orbits;
  for (int p = 0; p < m; ++p) {
    if (orbit_of[static_cast<std::size_t>(p)] >= 0) continue;
    std::vector<int> orbit;
    for (const auto& g : group.elements()) {
      int q = g(p);
      if (orbit_of[static_cast<std::size_t>(q)] < 0) {
        orbit_of[static_cast<std::size_t>(q)] = static_cast<int>(orbits.size());
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::vector<Edge>> pair_orbits(const PermGroup& group) {
  std::vector<Edge> all;
  for (int j = 1; j < group.degree(); ++j) {
    for (int i = 0; i < j; ++i) all.emplace_back(i, j);
  }
  return edge_orbits(group, all);
}

std::vector<std::vector<Edge>> edge_orbits(const PermGroup& group, std::span<const Edge> edges) {
  std::vector<Edge> domain(edges.begin(), edges.end());
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  for (const auto& e : domain) {
    if (e.u < 0 || e.v >= group.degree() || e.u == e.v) throw InvalidArgument("edge out of range");
  }

  std::vector<bool> assigned(domain.size(), false);
  std::vector<std::vector<Edge>> orbits;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (assigned[k]) continue;
    std::vector<Edge> orbit;
    for (const auto& g : group.elements()) {
      Edge image = g(domain[k]);
      auto it = std::lower_bound(domain.begin(), domain.end(), image);
      if (it == domain.end() || *it != image) continue;
      auto pos = static_cast<std::size_t>(it - domain.begin());
      if (!assigned[pos]) {
        assigned[pos] = true;
        orbit.push_back(image);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_transitive(const PermGroup& group) { return vertex_orbits(group).size() == 1; }

GroupFingerprint fingerprint(const PermGroup& group) {
  if (group.order() > kFingerprintBound) {
    throw BoundExceeded("fingerprint requires |G| <= " + std::to_string(kFingerprintBound));
  }
  GroupFingerprint fp;
  fp.order = group.order();
  for (const auto& g : group.elements()) ++fp.element_orders[g.order()];
  fp.abelian = group.is_abelian();
  return fp;
}

std::string to_string(const GroupFingerprint& fp) {
  std::ostringstream out;
  out << "order " << fp.order << ", element orders {";
  bool first = true;
  for (const auto& [ord, count] : fp.element_orders) {
    if (!first) out << ", ";
    first = false;
    out << ord << ':' << count;
  }
  out << "}, " << (fp.abelian ? "abelian" : "non-abelian");
  return out.str();
}

}  // namespace equifacet
