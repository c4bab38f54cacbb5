#include "equifacet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "equifacet/errors.hpp"

namespace equifacet::io {

using nlohmann::json;

json colouring_to_json(const ColouredGraph& g) {
  auto classes = g.colour_classes();
  classes.erase(std::remove_if(classes.begin(), classes.end(), [](const auto& c) { return c.empty(); }),
                classes.end());
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  json colours = json::array();
  for (const auto& cls : classes) {
    json edges = json::array();
    for (const Edge& e : cls) edges.push_back({e.u, e.v});
    colours.push_back(std::move(edges));
  }
  return json{{"n", g.dimension()}, {"colors", std::move(colours)}};
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw DocumentError(field + ": " + message);
}

int read_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) fail(field, "expected an integer");
  return value.get<int>();
}

double read_double(const json& value, const std::string& field) {
  if (!value.is_number()) fail(field, "expected a number");
  return value.get<double>();
}

std::string index_field(const std::string& base, std::size_t k) { return base + "[" + std::to_string(k) + "]"; }

void write_number(std::ostream& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

}  // namespace

ColouredGraph colouring_from_json(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("n")) fail("n", "missing");
  const int n = read_int(doc.at("n"), "n");
  if (n < 1) fail("n", "dimension must be at least 1");
  if (!doc.contains("colors")) fail("colors", "missing");
  const json& colours = doc.at("colors");
  if (!colours.is_array() || colours.empty()) fail("colors", "expected a non-empty array of colour classes");

  std::vector<std::vector<Edge>> classes;
  std::vector<int> seen(pair_count(n + 1), -1);
  for (std::size_t c = 0; c < colours.size(); ++c) {
    const std::string cfield = index_field("colors", c);
    const json& cls = colours[c];
    if (!cls.is_array() || cls.empty()) fail(cfield, "expected a non-empty array of edges");
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const std::string efield = index_field(cfield, k);
      const json& edge = cls[k];
      if (!edge.is_array() || edge.size() != 2) fail(efield, "expected a pair [i, j]");
      const int i = read_int(edge[0], efield + "[0]");
      const int j = read_int(edge[1], efield + "[1]");
      if (i < 0 || j < 0 || i > n || j > n) {
        fail(efield, "vertex out of range 0.." + std::to_string(n));
      }
      if (i >= j) fail(efield, "edges must be written [i, j] with i < j");
      auto& owner = seen[edge_index(i, j)];
      if (owner >= 0) {
        fail(efield, "edge [" + std::to_string(i) + "," + std::to_string(j) + "] already listed in colors[" +
                         std::to_string(owner) + "]");
      }
      owner = static_cast<int>(c);
      edges.emplace_back(i, j);
    }
    classes.push_back(std::move(edges));
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] < 0) {
      Edge e = edge_at(k);
      fail("colors", "edge [" + std::to_string(e.u) + "," + std::to_string(e.v) + "] has no colour");
    }
  }
  return ColouredGraph::from_classes(n, classes);
}

std::string coordinates_to_string(const EmbeddedSimplex& s) {
  std::ostringstream out;
  out << "{\n  \"n\": " << s.dimension() << ",\n  \"points\": [\n";
  const auto& pts = s.points();
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    out << "    [";
    for (Eigen::Index k = 0; k < pts.cols(); ++k) {
      if (k) out << ", ";
      write_number(out, pts(i, k));
    }
    out << (i + 1 < pts.rows() ? "],\n" : "]\n");
  }
  out << "  ],\n  \"tolerance\": ";
  write_number(out, s.tolerance());
  out << "\n}\n";
  return out.str();
}

EmbeddedSimplex coordinates_from_json(const json& doc, std::optional<double> tolerance_override) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("points")) fail("points", "missing");
  const json& points = doc.at("points");
  if (!points.is_array() || points.size() < 2) fail("points", "expected at least two points");
  const std::size_t dim = points[0].is_array() ? points[0].size() : 0;
  if (dim == 0) fail("points[0]", "expected a non-empty coordinate array");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string pfield = index_field("points", i);
    if (!points[i].is_array() || points[i].size() != dim) {
      fail(pfield, "expected " + std::to_string(dim) + " coordinates");
    }
    for (std::size_t k = 0; k < dim; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = read_double(points[i][k], index_field(pfield, k));
    }
  }
  if (doc.contains("n")) {
    const int n = read_int(doc.at("n"), "n");
    if (static_cast<std::size_t>(n) + 1 != points.size()) {
      fail("n", "dimension " + std::to_string(n) + " does not match " + std::to_string(points.size()) + " points");
    }
  }
  double tolerance = kDefaultTolerance;
  if (doc.contains("tolerance")) tolerance = read_double(doc.at("tolerance"), "tolerance");
  if (tolerance_override) tolerance = *tolerance_override;
  if (tolerance < 0.0) fail("tolerance", "must be non-negative");
  return EmbeddedSimplex(std::move(m), tolerance);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw Error(path.string() + ": write failed");
}

json to_json(const Partition& p) { return p.entries(); }

json to_json(const GroupFingerprint& fp) {
  json orders = json::object();
  for (const auto& [ord, count] : fp.element_orders) orders[std::to_string(ord)] = count;
  return json{{"order", fp.order}, {"element_orders", std::move(orders)}, {"abelian", fp.abelian}};
}

json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const CatalogEntry& entry) {
  return json{{"dimension", entry.dimension},
              {"weak_type", to_json(entry.weak)},
              {"group_order", entry.group_order},
              {"group_fingerprint", to_json(entry.group_fingerprint)},
              {"edge_orbit_sizes", entry.edge_orbit_sizes},
              {"colouring", colouring_to_json(entry.canonical)}};
}

namespace {

json group_json(const PermGroup& group) {
  json gens = json::array();
  for (const auto& g : group.generators()) gens.push_back(g.to_cycle_string());
  json out{{"order", group.order()}, {"generators", std::move(gens)}, {"transitive", is_transitive(group)}};
  out["fingerprint"] = group.order() <= kFingerprintBound ? to_json(fingerprint(group)) : json(nullptr);

  // Orbits of the stabilizer of vertex 0 on the remaining vertices.
  std::vector<Permutation> stabilizer;
  for (const auto& g : group.elements()) {
    if (g(0) == 0) stabilizer.push_back(g);
  }
  out["vertex0_stabilizer_orbits"] =
      vertex_orbits(PermGroup::from_elements(group.degree(), std::move(stabilizer)));
  return out;
}

}  // namespace

json check_report(const ColouredGraph& g, int max_dimension) {
  json report;
  report["n"] = g.dimension();
  report["colour_count"] = g.colour_count();
  const bool uniform = is_vertex_uniform(g);
  report["vertex_uniform"] = uniform;
  report["weak_type"] = uniform ? to_json(weak_type(g)) : json(nullptr);
  report["components_congruent"] = components_congruent(g);
  report["complementarity"] = satisfies_complementarity(g);

  PermGroup group = colour_automorphisms(g, max_dimension);
  report["vertex_transitive"] = is_transitive(group);
  report["automorphisms"] = group_json(group);
  json orbits = json::array();
  for (int c = 0; c < g.colour_count(); ++c) {
    json sizes = json::array();
    auto cls = g.colour_class(c);
    for (const auto& orbit : edge_orbits(group, cls)) sizes.push_back(orbit.size());
    orbits.push_back(json{{"colour", c}, {"orbit_sizes", sizes}, {"single_orbit", sizes.size() == 1}});
  }
  report["edge_orbits"] = std::move(orbits);
  return report;
}

json simplex_report(const EmbeddedSimplex& s, int max_dimension) {
  json report;
  report["n"] = s.dimension();
  report["tolerance"] = s.tolerance();
  report["equifacetal"] = is_equifacetal(s);
  try {
    ColouredGraph type = edge_length_partition(s);
    report["strong_type"] = colouring_to_json(type);
    report["weak_type"] = is_vertex_uniform(type) ? to_json(weak_type(type)) : json(nullptr);
  } catch (const AmbiguousClustering& e) {
    report["strong_type"] = nullptr;
    report["weak_type"] = nullptr;
    report["clustering_error"] = e.what();
  }
  PermGroup group = isometry_group(s, max_dimension);
  report["vertex_transitive"] = is_transitive(group);
  report["isometries"] = group_json(group);
  report["centroid"] = to_json(centroid(s));
  report["circumcentre"] = to_json(circumcentre(s));
  report["incentre"] = to_json(incentre(s));
  report["centre_spread"] = centre_spread(s);
  report["centres_coincide"] = centres_coincide(s);
  return report;
}

}  // namespace equifacet::io
