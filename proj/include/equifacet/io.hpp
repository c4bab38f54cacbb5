#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "equifacet/catalog.hpp"
#include "equifacet/colored_graph.hpp"
#include "equifacet/errors.hpp"
#include "equifacet/geometry.hpp"

namespace equifacet::io {

/// Malformed input document; what() names the offending field or parse position.
class DocumentError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// {"n": 5, "colors": [[[0,1],[2,3]], ...]}. Edges are written i < j in lexicographic order
/// and colours are ordered by their first edge.
nlohmann::json colouring_to_json(const ColouredGraph& g);
ColouredGraph colouring_from_json(const nlohmann::json& doc);

/// {"n": 4, "points": [[...], ...], "tolerance": 1e-9}, numbers with 17 significant digits.
std::string coordinates_to_string(const EmbeddedSimplex& s);
/// `tolerance_override`, when set, wins over the file's tolerance.
EmbeddedSimplex coordinates_from_json(const nlohmann::json& doc,
                                      std::optional<double> tolerance_override = std::nullopt);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const GroupFingerprint& fp);
nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const CatalogEntry& entry);

/// Combinatorial verdicts for a colouring: uniformity, weak type, component congruence,
/// complementarity, automorphism group, transitivity and edge orbits.
nlohmann::json check_report(const ColouredGraph& g, int max_dimension = kDefaultSearchBound);

/// Metric verdicts for an embedded simplex: equifacetal, recovered strong type, isometry
/// group and the three centres.
nlohmann::json simplex_report(const EmbeddedSimplex& s, int max_dimension = kDefaultSearchBound);

}  // namespace equifacet::io
