#pragma once

// Text and JSON formats. Layouts are documented in docs/formats.md; the
// writers here are the reference for field order and whitespace.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "emptytri/empty_triangles.hpp"
#include "emptytri/experiments.hpp"
#include "emptytri/extremal.hpp"
#include "emptytri/generators.hpp"
#include "emptytri/geometry.hpp"
#include "emptytri/incidence_graph.hpp"
#include "emptytri/realizability.hpp"

namespace emptytri {

/// Point file: one "X Y" pair of signed decimal integers per line; blank
/// lines and lines starting with '#' are ignored. Throws InputError with the
/// 1-based line number. General position is not checked here.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> parse_points(std::string_view text);

/// "# " header comments then one "X Y" line per point.
void write_points(std::ostream& out, std::span<const Point> points,
                  const std::vector<std::string>& header = {});
std::string points_to_string(std::span<const Point> points,
                             const std::vector<std::string>& header = {});

/// Header lines recording family, parameters and apex indices.
std::vector<std::string> instance_header(const GeneratedInstance& instance);

/// Undirected DOT. With labels, vertex v is written as
/// `  v [label="i j k"];` in vertex order, then edges `  a -- b;` ascending.
void write_graph_dot(std::ostream& out, const IncidenceGraph& g);
void write_graph_dot(std::ostream& out, const Graph& g);

nlohmann::ordered_json graph_json(const IncidenceGraph& g);
nlohmann::ordered_json graph_json(const Graph& g);

/// Reads a graph in either format: JSON if the first non-blank character is
/// '{', otherwise the DOT subset written by write_graph_dot. Labels are
/// ignored. Throws InputError on malformed input.
Graph parse_graph(std::string_view text);

nlohmann::ordered_json counts_json(const CountsReport& r);
nlohmann::ordered_json extremal_json(const ExtremalRecord& r);
nlohmann::ordered_json verdict_json(const FeasibilityVerdict& v);
std::string_view feasibility_name(Feasibility f);

inline constexpr std::string_view kScalingCsvHeader =
    "L,n,v,i,u,delta,n_delta_p_minus_x,v_closed,i_closed,u_closed,n_minus_x_closed,ratio";
void write_scaling_csv(std::ostream& out, const ScalingReport& report);
nlohmann::ordered_json scaling_json(const ScalingReport& report);

inline constexpr std::string_view kDensityCsvHeader = "trial,n,ratio";
void write_density_csv(std::ostream& out, const DensityReport& report);
nlohmann::ordered_json density_json(const DensityReport& report);

nlohmann::ordered_json sweep_json(const SweepReport& report);

/// Fixed-point decimal with `digits` fractional digits, locale independent.
std::string fixed(double value, int digits = 6);

}  // namespace emptytri
