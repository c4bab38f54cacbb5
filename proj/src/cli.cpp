#include "equifacet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include "equifacet/catalog.hpp"
#include "equifacet/construct.hpp"
#include "equifacet/errors.hpp"
#include "equifacet/geometry.hpp"
#include "equifacet/io.hpp"

namespace equifacet {

namespace {

using nlohmann::json;

struct GlobalFlags {
  bool json = false;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  std::optional<int> max_dimension;

  double tol() const { return tolerance.value_or(kDefaultTolerance); }
  int search_bound() const { return max_dimension.value_or(kDefaultSearchBound); }
};

void print_value(const json& value, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, item] : value.items()) {
    if (item.is_object()) {
      out << pad << key << ":\n";
      print_value(item, out, indent + 2);
    } else {
      out << pad << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
    }
  }
}

void emit(const json& report, const GlobalFlags& flags, std::ostream& out) {
  if (flags.json) {
    out << report.dump(2) << '\n';
  } else {
    print_value(report, out, 0);
  }
}

int input_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << '\n';
  return kExitInputError;
}

int cmd_check(const std::string& file, const GlobalFlags& flags, std::ostream& out) {
  ColouredGraph g = io::colouring_from_json(io::read_json_file(file));
  json report = io::check_report(g, flags.search_bound());
  emit(report, flags, out);
  return report["complementarity"].get<bool>() ? kExitOk : kExitNegative;
}

int cmd_construct(const std::string& partition_text, int n, const std::string& out_file, const GlobalFlags& flags,
                  std::ostream& out) {
  Partition p = parse_partition(partition_text);
  Realizability verdict = realize_partition(p, n);
  json report{{"partition", io::to_json(p)}, {"n", n}};

  if (auto* ok = std::get_if<Realizable>(&verdict)) {
    json doc = io::colouring_to_json(ok->witness);
    report["verdict"] = "realizable";
    report["weak_type"] = io::to_json(weak_type(ok->witness));
    report["witness"] = doc;
    if (!out_file.empty()) io::write_text_file(out_file, doc.dump(2) + "\n");
    if (flags.json) {
      out << report.dump(2) << '\n';
    } else if (out_file.empty()) {
      out << doc.dump(2) << '\n';
    } else {
      out << "realizable: witness written to " << out_file << '\n';
    }
    return kExitOk;
  }
  if (auto* no = std::get_if<NotRealizableVerdict>(&verdict)) {
    report["verdict"] = "not-realizable";
    report["obstruction"] = to_string(no->reason);
    if (flags.json) {
      out << report.dump(2) << '\n';
    } else {
      out << "not realizable: " << to_string(no->reason) << '\n';
    }
    return kExitNegative;
  }
  report["verdict"] = "unknown";
  if (flags.json) {
    out << report.dump(2) << '\n';
  } else {
    out << "unknown (open problem)\n";
  }
  return kExitUnknown;
}

int cmd_embed(const std::string& file, const std::vector<double>& lengths, double base, const std::string& out_file,
              const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  ColouredGraph g = io::colouring_from_json(io::read_json_file(file));
  json report = io::check_report(g, flags.search_bound());

  std::optional<EmbeddedSimplex> simplex;
  json length_json;
  try {
    if (!lengths.empty()) {
      if (lengths.size() != static_cast<std::size_t>(g.colour_count())) {
        return input_error(err, "--lengths has " + std::to_string(lengths.size()) + " entries but the colouring has " +
                                    std::to_string(g.colour_count()) + " colours");
      }
      LengthTable table = length_table(g, LengthAssignment{lengths});
      simplex = embed(table, flags.tol());
      length_json = lengths;
      report["epsilon"] = nullptr;
    } else {
      Realization r = realize_colouring(g, base, flags.seed, flags.tol());
      simplex = r.simplex;
      length_json = r.lengths.lengths;
      report["epsilon"] = r.epsilon;
    }
  } catch (const NotRealizable& e) {
    report["lengths"] = lengths.empty() ? json(nullptr) : json(lengths);
    report["realizable"] = false;
    if (flags.json) {
      out << report.dump(2) << '\n';
    } else {
      out << "not realizable: " << e.what() << '\n';
    }
    return kExitNegative;
  }

  report["realizable"] = true;
  report["lengths"] = length_json;
  report["geometry"] = io::simplex_report(*simplex, flags.search_bound());
  json points = json::array();
  for (int i = 0; i < simplex->vertex_count(); ++i) points.push_back(io::to_json(simplex->point(i)));
  report["points"] = std::move(points);
  if (!out_file.empty()) io::write_text_file(out_file, io::coordinates_to_string(*simplex));
  emit(report, flags, out);
  return kExitOk;
}

int cmd_verify(const std::string& file, const GlobalFlags& flags, std::ostream& out) {
  EmbeddedSimplex s = io::coordinates_from_json(io::read_json_file(file), flags.tolerance);
  json report = io::simplex_report(s, flags.search_bound());
  emit(report, flags, out);
  return report["equifacetal"].get<bool>() ? kExitOk : kExitNegative;
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string s;
  for (std::size_t k = 0; k < sizes.size(); ++k) s += (k ? "+" : "") + std::to_string(sizes[k]);
  return s;
}

int cmd_catalog(int n, const std::string& format, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  EnumerationOptions options;
  if (flags.max_dimension) {
    options.max_dimension = *flags.max_dimension;
    if (options.max_dimension > kDefaultCatalogBound && n > kDefaultCatalogBound) {
      err << "warning: enumeration beyond dimension " << kDefaultCatalogBound << " may take a very long time\n";
    }
  }
  std::vector<CatalogEntry> entries = enumerate_strong_types(n, options);

  if (flags.json || format == "json") {
    json list = json::array();
    for (const auto& e : entries) list.push_back(io::to_json(e));
    out << list.dump(2) << '\n';
    return kExitOk;
  }
  out << std::left << std::setw(4) << "#" << std::setw(16) << "weak type" << std::setw(8) << "|G|"
      << "edge orbits per colour\n";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    std::string orbits;
    for (std::size_t c = 0; c < e.edge_orbit_sizes.size(); ++c) {
      orbits += (c ? " | " : "") + join_sizes(e.edge_orbit_sizes[c]);
    }
    out << std::setw(4) << k + 1 << std::setw(16) << e.weak.to_string() << std::setw(8) << e.group_order << orbits
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equifacetal simplices: check, construct, embed, verify and catalogue strong types", "equifacet"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit machine-readable JSON reports");
  app.add_option("--tol", flags.tolerance, "Relative numerical tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", flags.seed, "Seed for the length assignment of embed");
  app.add_option("--max-dim", flags.max_dimension, "Dimension bound for exponential searches")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto* check = app.add_subcommand("check", "Analyse a colouring document");
  check->add_option("file", file, "Colouring document")->required();

  std::string partition_text;
  int n = 0;
  std::string out_file;
  auto* construct = app.add_subcommand("construct", "Build a witness colouring for a weak type");
  construct->add_option("--partition", partition_text, "Comma-separated entries, e.g. 2,2,2")->required();
  construct->add_option("--n", n, "Dimension")->required();
  construct->add_option("--out", out_file, "Write the witness document here");

  std::vector<double> lengths;
  double base = 1.0;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a colouring as a simplex");
  embed_cmd->add_option("file", file, "Colouring document")->required();
  embed_cmd->add_option("--lengths", lengths, "One edge length per colour")->delimiter(',');
  embed_cmd->add_option("--base", base, "Base length for the automatic assignment")->check(CLI::PositiveNumber);
  embed_cmd->add_option("--out", out_file, "Write the coordinates document here");

  auto* verify = app.add_subcommand("verify", "Analyse a coordinates document");
  verify->add_option("file", file, "Coordinates document")->required();

  int dim = 0;
  std::string format = "table";
  auto* catalog = app.add_subcommand("catalog", "List the strong types of a dimension");
  catalog->add_option("--dim", dim, "Dimension")->required();
  catalog->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  for (auto* sub : {check, construct, embed_cmd, verify, catalog}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(file, flags, out);
    if (construct->parsed()) return cmd_construct(partition_text, n, out_file, flags, out);
    if (embed_cmd->parsed()) return cmd_embed(file, lengths, base, out_file, flags, out, err);
    if (verify->parsed()) return cmd_verify(file, flags, out);
    if (catalog->parsed()) return cmd_catalog(dim, format, flags, out, err);
  } catch (const Error& e) {
    return input_error(err, e.what());
  }
  return kExitInputError;
}

}  // namespace equifacet
