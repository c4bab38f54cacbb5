#include "equifacet/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "equifacet/errors.hpp"

namespace equifacet {

// ---------------------------------------------------------------------------
// ColouredGraph

ColouredGraph::ColouredGraph(int n, std::vector<int> edge_colours, int colour_count)
    : n_(n), r_(colour_count), colours_(std::move(edge_colours)) {
  if (n_ < 1) throw InvalidArgument("dimension must be at least 1");
  if (r_ < 1) throw InvalidArgument("need at least one colour");
  if (colours_.size() != pair_count(n_ + 1)) {
    throw InvalidArgument("expected " + std::to_string(pair_count(n_ + 1)) + " edge colours, got " +
                          std::to_string(colours_.size()));
  }
  for (int c : colours_) {
    if (c < 0 || c >= r_) throw InvalidArgument("colour index " + std::to_string(c) + " out of range");
  }
}

ColouredGraph::ColouredGraph(int n, std::vector<int> edge_colours)
    : ColouredGraph(n, edge_colours,
                    edge_colours.empty() ? 1 : *std::max_element(edge_colours.begin(), edge_colours.end()) + 1) {}

ColouredGraph ColouredGraph::monochrome(int n) {
  if (n < 1) throw InvalidArgument("dimension must be at least 1");
  return ColouredGraph(n, std::vector<int>(pair_count(n + 1), 0), 1);
}

ColouredGraph ColouredGraph::from_classes(int n, const std::vector<std::vector<Edge>>& classes) {
  if (n < 1) throw InvalidArgument("dimension must be at least 1");
  std::vector<int> colours(pair_count(n + 1), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InvalidArgument("colour " + std::to_string(c) + " has no edges");
    for (const Edge& e : classes[c]) {
      if (e.u == e.v || e.u < 0 || e.v > n) {
        throw InvalidArgument("edge [" + std::to_string(e.u) + "," + std::to_string(e.v) + "] out of range");
      }
      auto& slot = colours[edge_index(e.u, e.v)];
      if (slot >= 0) {
        throw InvalidArgument("edge [" + std::to_string(e.u) + "," + std::to_string(e.v) + "] coloured twice");
      }
      slot = static_cast<int>(c);
    }
  }
  for (std::size_t k = 0; k < colours.size(); ++k) {
    if (colours[k] < 0) {
      Edge e = edge_at(k);
      throw InvalidArgument("edge [" + std::to_string(e.u) + "," + std::to_string(e.v) + "] has no colour");
    }
  }
  return ColouredGraph(n, std::move(colours), static_cast<int>(classes.size()));
}

int ColouredGraph::colour(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i > n_ || j > n_) throw InvalidArgument("not an edge of K_{n+1}");
  return colours_[edge_index(i, j)];
}

std::vector<Edge> ColouredGraph::colour_class(int c) const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < colours_.size(); ++k) {
    if (colours_[k] == c) out.push_back(edge_at(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Edge>> ColouredGraph::colour_classes() const {
  std::vector<std::vector<Edge>> out(static_cast<std::size_t>(r_));
  for (std::size_t k = 0; k < colours_.size(); ++k) out[static_cast<std::size_t>(colours_[k])].push_back(edge_at(k));
  for (auto& cls : out) std::sort(cls.begin(), cls.end());
  return out;
}

bool ColouredGraph::all_colours_used() const {
  std::vector<bool> used(static_cast<std::size_t>(r_), false);
  for (int c : colours_) used[static_cast<std::size_t>(c)] = true;
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

ColouredGraph ColouredGraph::relabelled(const Permutation& perm) const {
  if (perm.degree() != vertex_count()) throw InvalidArgument("relabelling has wrong degree");
  std::vector<int> out(colours_.size());
  for (std::size_t k = 0; k < colours_.size(); ++k) {
    Edge e = edge_at(k);
    out[edge_index(perm(e.u), perm(e.v))] = colours_[k];
  }
  return ColouredGraph(n_, std::move(out), r_);
}

ColouredGraph ColouredGraph::recoloured(std::span<const int> colour_map) const {
  if (colour_map.size() != static_cast<std::size_t>(r_)) throw InvalidArgument("colour map has wrong size");
  std::vector<int> out(colours_.size());
  for (std::size_t k = 0; k < colours_.size(); ++k) out[k] = colour_map[static_cast<std::size_t>(colours_[k])];
  int r = *std::max_element(colour_map.begin(), colour_map.end()) + 1;
  return ColouredGraph(n_, std::move(out), std::max(r, 1));
}

std::string ColouredGraph::to_string() const {
  std::ostringstream out;
  out << "K_" << vertex_count() << ':';
  auto classes = colour_classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << " c" << c << '{';
    for (std::size_t k = 0; k < classes[c].size(); ++k) {
      if (k) out << ',';
      out << classes[c][k].u << '-' << classes[c][k].v;
    }
    out << '}';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw InvalidArgument("partition entries must be positive");
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

int Partition::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::size_t Partition::odd_count() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e % 2 != 0; }));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries_[k]);
  }
  return s + "]";
}

Partition parse_partition(const std::string& text) {
  std::vector<int> entries;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    if (token.empty()) throw InvalidArgument("empty partition entry in '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("partition entry '" + token + "' is not an integer");
    }
    if (used != token.size()) throw InvalidArgument("partition entry '" + token + "' is not an integer");
    if (value < 1) throw InvalidArgument("partition entry '" + token + "' must be positive");
    entries.push_back(value);
  }
  if (entries.empty()) throw InvalidArgument("empty partition");
  return Partition(std::move(entries));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Degrees and deletion

namespace {

void check_vertex(const ColouredGraph& g, int v) {
  if (v < 0 || v > g.dimension()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(g.dimension()));
  }
}

// degrees[v][c]
std::vector<std::vector<int>> degree_table(const ColouredGraph& g) {
  std::vector<std::vector<int>> deg(static_cast<std::size_t>(g.vertex_count()),
                                    std::vector<int>(static_cast<std::size_t>(g.colour_count()), 0));
  const auto& colours = g.edge_colours();
  for (std::size_t k = 0; k < colours.size(); ++k) {
    Edge e = edge_at(k);
    ++deg[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(colours[k])];
    ++deg[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(colours[k])];
  }
  return deg;
}

}  // namespace

std::map<int, int> vertex_colour_degrees(const ColouredGraph& g, int v) {
  check_vertex(g, v);
  std::map<int, int> out;
  for (int w = 0; w <= g.dimension(); ++w) {
    if (w != v) ++out[g.colour(v, w)];
  }
  return out;
}

bool is_vertex_uniform(const ColouredGraph& g) {
  auto deg = degree_table(g);
  return std::all_of(deg.begin(), deg.end(), [&](const auto& row) { return row == deg.front(); });
}

Partition weak_type(const ColouredGraph& g) {
  if (!is_vertex_uniform(g)) throw NotVertexUniform();
  std::vector<int> entries;
  for (const auto& [colour, degree] : vertex_colour_degrees(g, 0)) entries.push_back(degree);
  return Partition(std::move(entries));
}

ColouredGraph delete_vertex(const ColouredGraph& g, int v) {
  check_vertex(g, v);
  if (g.dimension() < 2) throw InvalidArgument("cannot delete a vertex of K_2");
  const int n = g.dimension();
  std::vector<int> out(pair_count(n));
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      int oi = i < v ? i : i + 1;
      int oj = j < v ? j : j + 1;
      out[edge_index(i, j)] = g.colour(oi, oj);
    }
  }
  return ColouredGraph(n - 1, std::move(out), g.colour_count());
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

/// Backtracking over vertex maps a -> b in lexicographic order, so the first hit is the
/// lexicographically least witness.
class IsoSearch {
 public:
  IsoSearch(const ColouredGraph& a, const ColouredGraph& b, bool permute_colours)
      : a_(a), b_(b), permute_(permute_colours), n_(a.vertex_count()), r_(a.colour_count()) {}

  /// Calls visit(witness) for each isomorphism until visit returns false.
  template <class Visit>
  void run(Visit&& visit) {
    if (a_.vertex_count() != b_.vertex_count() || a_.colour_count() != b_.colour_count()) return;
    if (!class_sizes_compatible()) return;
    deg_a_ = degree_table(a_);
    deg_b_ = degree_table(b_);
    if (permute_) {
      sig_a_ = sorted_rows(deg_a_);
      sig_b_ = sorted_rows(deg_b_);
    }
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    cmap_.assign(static_cast<std::size_t>(r_), -1);
    cinv_.assign(static_cast<std::size_t>(r_), -1);
    stopped_ = false;
    extend(0, visit);
  }

 private:
  static std::vector<std::vector<int>> sorted_rows(std::vector<std::vector<int>> rows) {
    for (auto& row : rows) std::sort(row.begin(), row.end());
    return rows;
  }

  bool class_sizes_compatible() const {
    std::vector<int> sa(static_cast<std::size_t>(r_), 0), sb(static_cast<std::size_t>(r_), 0);
    for (int c : a_.edge_colours()) ++sa[static_cast<std::size_t>(c)];
    for (int c : b_.edge_colours()) ++sb[static_cast<std::size_t>(c)];
    if (permute_) {
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
    }
    return sa == sb;
  }

  bool vertex_compatible(int v, int w) const {
    const auto sv = static_cast<std::size_t>(v);
    const auto sw = static_cast<std::size_t>(w);
    if (!permute_) return deg_a_[sv] == deg_b_[sw];
    if (sig_a_[sv] != sig_b_[sw]) return false;
    for (int c = 0; c < r_; ++c) {
      int d = cmap_[static_cast<std::size_t>(c)];
      if (d >= 0 && deg_a_[sv][static_cast<std::size_t>(c)] != deg_b_[sw][static_cast<std::size_t>(d)]) return false;
    }
    return true;
  }

  template <class Visit>
  void extend(int v, Visit& visit) {
    if (v == n_) {
      if (!visit(witness())) stopped_ = true;
      return;
    }
    for (int w = 0; w < n_ && !stopped_; ++w) {
      if (used_[static_cast<std::size_t>(w)] || !vertex_compatible(v, w)) continue;
      std::vector<int> assigned;  // colours first mapped at this level
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        int c = a_.colour(u, v);
        int d = b_.colour(map_[static_cast<std::size_t>(u)], w);
        if (!permute_) {
          ok = c == d;
        } else if (cmap_[static_cast<std::size_t>(c)] < 0 && cinv_[static_cast<std::size_t>(d)] < 0) {
          cmap_[static_cast<std::size_t>(c)] = d;
          cinv_[static_cast<std::size_t>(d)] = c;
          assigned.push_back(c);
        } else {
          ok = cmap_[static_cast<std::size_t>(c)] == d;
        }
      }
      if (ok) {
        map_[static_cast<std::size_t>(v)] = w;
        used_[static_cast<std::size_t>(w)] = true;
        extend(v + 1, visit);
        used_[static_cast<std::size_t>(w)] = false;
        map_[static_cast<std::size_t>(v)] = -1;
      }
      for (int c : assigned) {
        cinv_[static_cast<std::size_t>(cmap_[static_cast<std::size_t>(c)])] = -1;
        cmap_[static_cast<std::size_t>(c)] = -1;
      }
    }
  }

  IsoWitness witness() const {
    std::vector<int> relabel(static_cast<std::size_t>(r_));
    if (!permute_) {
      std::iota(relabel.begin(), relabel.end(), 0);
    } else {
      // Colours never seen on an edge (empty classes) pair up in increasing order.
      relabel = cmap_;
      std::vector<bool> taken(static_cast<std::size_t>(r_), false);
      for (int d : relabel) {
        if (d >= 0) taken[static_cast<std::size_t>(d)] = true;
      }
      int next = 0;
      for (int& d : relabel) {
        if (d >= 0) continue;
        while (taken[static_cast<std::size_t>(next)]) ++next;
        d = next;
        taken[static_cast<std::size_t>(next)] = true;
      }
    }
    return IsoWitness{Permutation(map_), std::move(relabel)};
  }

  const ColouredGraph& a_;
  const ColouredGraph& b_;
  bool permute_;
  int n_;
  int r_;
  std::vector<std::vector<int>> deg_a_, deg_b_, sig_a_, sig_b_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> cmap_, cinv_;
  bool stopped_ = false;
};

void check_bound(const ColouredGraph& g, int max_dimension) {
  if (g.dimension() > max_dimension) {
    throw BoundExceeded("dimension " + std::to_string(g.dimension()) + " exceeds search bound " +
                        std::to_string(max_dimension));
  }
}

}  // namespace

std::optional<IsoWitness> coloured_isomorphic(const ColouredGraph& g1, const ColouredGraph& g2,
                                              bool allow_colour_permutation) {
  if (g1.vertex_count() != g2.vertex_count()) throw InvalidArgument("graphs have different vertex counts");
  if (!allow_colour_permutation && g1.colour_count() != g2.colour_count()) {
    throw InvalidArgument("fixed-colour comparison needs the same colour alphabet");
  }
  std::optional<IsoWitness> found;
  IsoSearch(g1, g2, allow_colour_permutation).run([&](IsoWitness w) {
    found = std::move(w);
    return false;
  });
  return found;
}

bool satisfies_complementarity(const ColouredGraph& g) {
  if (g.dimension() < 2) return true;
  // Isomorphism is an equivalence relation, so comparing against one reference facet suffices.
  const ColouredGraph reference = delete_vertex(g, 0);
  for (int w = 1; w <= g.dimension(); ++w) {
    if (!coloured_isomorphic(reference, delete_vertex(g, w), false)) return false;
  }
  return true;
}

bool components_congruent(const ColouredGraph& g) {
  const int N = g.vertex_count();
  for (int c = 0; c < g.colour_count(); ++c) {
    std::vector<int> component(static_cast<std::size_t>(N), -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < N; ++s) {
      if (component[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<int> stack{s};
      std::vector<int> comp;
      component[static_cast<std::size_t>(s)] = static_cast<int>(members.size());
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int y = 0; y < N; ++y) {
          if (y != x && component[static_cast<std::size_t>(y)] < 0 && g.colour(x, y) == c) {
            component[static_cast<std::size_t>(y)] = component[static_cast<std::size_t>(s)];
            stack.push_back(y);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      members.push_back(std::move(comp));
    }

    // Each component as a 2-colouring of its own complete graph: 0 = edge, 1 = non-edge.
    auto as_graph = [&](const std::vector<int>& verts) {
      const int k = static_cast<int>(verts.size());
      std::vector<int> colours(pair_count(k));
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          colours[edge_index(i, j)] =
              g.colour(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]) == c ? 0 : 1;
        }
      }
      return ColouredGraph(k - 1, std::move(colours), 2);
    };

    const auto& first = members.front();
    for (std::size_t m = 1; m < members.size(); ++m) {
      if (members[m].size() != first.size()) return false;
      if (first.size() == 1) continue;
      if (!coloured_isomorphic(as_graph(first), as_graph(members[m]), false)) return false;
    }
  }
  return true;
}

PermGroup colour_automorphisms(const ColouredGraph& g, int max_dimension) {
  check_bound(g, max_dimension);
  std::vector<Permutation> elements;
  IsoSearch(g, g, false).run([&](IsoWitness w) {
    elements.push_back(std::move(w.mapping));
    return true;
  });
  return PermGroup::from_elements(g.vertex_count(), std::move(elements));
}

bool is_vertex_transitive(const ColouredGraph& g, int max_dimension) {
  return is_transitive(colour_automorphisms(g, max_dimension));
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

/// Branch and bound over vertex orders. Placing old vertex v at new position p fixes the
/// colex block of edges {i, p}, i < p, so prefixes can be compared against the best so far.
class CanonSearch {
 public:
  explicit CanonSearch(const ColouredGraph& g)
      : g_(g),
        N_(g.vertex_count()),
        order_(static_cast<std::size_t>(N_), -1),
        used_(static_cast<std::size_t>(N_), false),
        relabel_(static_cast<std::size_t>(g.colour_count()), -1) {
    current_.reserve(g.edge_count());
  }

  ColouredGraph run() {
    place(0, false);
    return ColouredGraph(g_.dimension(), best_, next_colour_best_);
  }

 private:
  void place(int pos, bool strictly_less) {
    if (pos == N_) {
      if (!have_best_ || strictly_less) {
        best_ = current_;
        next_colour_best_ = next_colour_;
        have_best_ = true;
        ++generation_;
      }
      return;
    }
    for (int v = 0; v < N_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      const std::size_t mark = current_.size();
      std::vector<int> fresh;
      bool less = strictly_less;
      bool prune = false;
      for (int i = 0; i < pos; ++i) {
        int old = g_.colour(order_[static_cast<std::size_t>(i)], v);
        int& label = relabel_[static_cast<std::size_t>(old)];
        if (label < 0) {
          label = next_colour_++;
          fresh.push_back(old);
        }
        current_.push_back(label);
        if (have_best_ && !less) {
          int b = best_[current_.size() - 1];
          if (label > b) {
            prune = true;
            break;
          }
          if (label < b) less = true;
        }
      }
      if (!prune) {
        order_[static_cast<std::size_t>(pos)] = v;
        used_[static_cast<std::size_t>(v)] = true;
        const std::size_t before = generation_;
        place(pos + 1, less);
        used_[static_cast<std::size_t>(v)] = false;
        // A new best found below shares this node's prefix, so the prefix is no longer smaller.
        if (generation_ != before) strictly_less = false;
      }
      current_.resize(mark);
      for (int old : fresh) relabel_[static_cast<std::size_t>(old)] = -1;
      next_colour_ -= static_cast<int>(fresh.size());
    }
  }

  const ColouredGraph& g_;
  int N_;
  std::vector<int> order_;
  std::vector<bool> used_;
  std::vector<int> relabel_;
  int next_colour_ = 0;
  std::vector<int> current_;
  std::vector<int> best_;
  int next_colour_best_ = 1;
  bool have_best_ = false;
  std::size_t generation_ = 0;
};

}  // namespace

ColouredGraph canonical_form(const ColouredGraph& g, int max_dimension) {
  check_bound(g, max_dimension);
  return CanonSearch(g).run();
}

}  // namespace equifacet
