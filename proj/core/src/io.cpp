#include "emptytri/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "emptytri/errors.hpp"

namespace emptytri {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end && !token.empty();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto b = line.find_first_not_of(" \t\r", pos);
    if (b == std::string_view::npos) break;
    auto e = line.find_first_of(" \t\r", b);
    if (e == std::string_view::npos) e = line.size();
    tokens.push_back(line.substr(b, e - b));
    pos = e;
  }
  return tokens;
}

}  // namespace

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    if (tokens.size() != 2) {
      throw InputError("expected two integers \"X Y\", got \"" + std::string(body) + "\"", number);
    }
    Point p;
    if (!parse_int(tokens[0], p.x) || !parse_int(tokens[1], p.y)) {
      throw InputError("coordinates must be decimal integers: \"" + std::string(body) + "\"",
                       number);
    }
    points.push_back(p);
  }
  return points;
}

std::vector<Point> parse_points(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_points(in);
}

void write_points(std::ostream& out, std::span<const Point> points,
                  const std::vector<std::string>& header) {
  for (const auto& h : header) out << "# " << h << '\n';
  for (const auto& p : points) out << p.x << ' ' << p.y << '\n';
}

std::string points_to_string(std::span<const Point> points,
                             const std::vector<std::string>& header) {
  std::ostringstream out;
  write_points(out, points, header);
  return out.str();
}

std::vector<std::string> instance_header(const GeneratedInstance& instance) {
  std::string params = "family=" + std::string(family_name(instance.family));
  for (const auto& [key, value] : instance.parameters) {
    params += " " + key + "=" + std::to_string(value);
  }
  std::vector<std::string> header{params, "n=" + std::to_string(instance.points.size()),
                                  "apex=" + std::to_string(instance.apex)};
  if (instance.apex2) header.push_back("apex2=" + std::to_string(*instance.apex2));
  return header;
}

void write_graph_dot(std::ostream& out, const IncidenceGraph& g) {
  out << "graph G {\n";
  out << "  // apex " << g.apex << '\n';
  for (Vertex v = 0; v < g.labels.size(); ++v) {
    out << "  " << v << " [label=\"" << to_string(g.labels[v]) << "\"];\n";
  }
  for (const auto& [a, b] : g.graph.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
}

void write_graph_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
}

namespace {

nlohmann::ordered_json edges_json(const Graph& g) {
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return edges;
}

}  // namespace

nlohmann::ordered_json graph_json(const IncidenceGraph& g) {
  nlohmann::ordered_json j;
  j["apex"] = g.apex;
  j["vertex_count"] = g.graph.vertex_count();
  j["edge_count"] = g.graph.edge_count();
  auto vertices = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.labels.size(); ++v) {
    const auto& t = g.labels[v];
    nlohmann::ordered_json vj;
    vj["id"] = v;
    vj["triangle"] = {t.i, t.j, t.k};
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = edges_json(g.graph);
  return j;
}

nlohmann::ordered_json graph_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  j["edges"] = edges_json(g);
  return j;
}

namespace {

Graph graph_from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  try {
    return Graph(vertex_count, edges);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges") ||
      !j["vertex_count"].is_number_unsigned() || !j["edges"].is_array()) {
    throw InputError("graph JSON needs unsigned \"vertex_count\" and an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw InputError("graph JSON edges must be [a, b] pairs of vertex ids");
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return graph_from_edges(j["vertex_count"].get<std::size_t>(), edges);
}

Graph parse_graph_dot(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  bool opened = false, closed = false;
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  const auto vertex = [&](std::string_view token) {
    Vertex v = 0;
    if (!parse_int(token, v)) {
      throw InputError("vertex ids must be non-negative integers, got \"" + std::string(token) + "\"",
                       number);
    }
    vertex_count = std::max<std::size_t>(vertex_count, std::size_t{v} + 1);
    return v;
  };
  while (std::getline(in, raw)) {
    ++number;
    auto line = trim(raw);
    if (line.empty() || line.starts_with("//") || line.front() == '#') continue;
    if (closed) throw InputError("content after closing brace", number);
    if (!opened) {
      if (!line.starts_with("graph") || line.back() != '{') {
        throw InputError("expected \"graph NAME {\"", number);
      }
      opened = true;
      continue;
    }
    if (line == "}") {
      closed = true;
      continue;
    }
    if (line.back() != ';') throw InputError("statement must end with ';'", number);
    line = trim(line.substr(0, line.size() - 1));
    if (const auto bracket = line.find('['); bracket != std::string_view::npos) {
      if (line.back() != ']') throw InputError("unterminated attribute list", number);
      line = trim(line.substr(0, bracket));
    }
    if (const auto dash = line.find("--"); dash != std::string_view::npos) {
      const Vertex a = vertex(trim(line.substr(0, dash)));
      const Vertex b = vertex(trim(line.substr(dash + 2)));
      edges.emplace_back(a, b);
    } else if (line.find("->") != std::string_view::npos) {
      throw InputError("directed edges are not accepted", number);
    } else {
      vertex(line);
    }
  }
  if (!opened || !closed) throw InputError("graph body not closed");
  return graph_from_edges(vertex_count, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw InputError("empty graph file");
  return body.front() == '{' ? parse_graph_json(body) : parse_graph_dot(body);
}

nlohmann::ordered_json counts_json(const CountsReport& r) {
  nlohmann::ordered_json j;
  j["n_delta_p"] = r.n_delta_p;
  j["n_delta_p_minus_x"] = r.n_delta_p_minus_x;
  j["v"] = r.v;
  j["u"] = r.u;
  j["i"] = r.i;
  j["delta"] = r.delta;
  return j;
}

nlohmann::ordered_json extremal_json(const ExtremalRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["h"] = r.h;
  j["witness"] = graph_json(r.witness);
  return j;
}

std::string_view feasibility_name(Feasibility f) {
  return f == Feasibility::InfeasibleByCounting ? "InfeasibleByCounting" : "NotRefuted";
}

nlohmann::ordered_json verdict_json(const FeasibilityVerdict& v) {
  nlohmann::ordered_json j;
  j["status"] = feasibility_name(v.status);
  j["v"] = v.v;
  j["t"] = v.t;
  j["rule"] = v.rule;
  j["detail"] = v.detail;
  return j;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

void write_scaling_csv(std::ostream& out, const ScalingReport& report) {
  out << kScalingCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.L << ',' << r.n << ',' << r.v << ',' << r.i << ',' << r.u << ',' << r.delta << ','
        << r.n_delta_p_minus_x << ',' << r.closed.v << ',' << r.closed.i << ',' << r.closed.u
        << ',' << r.closed.n_minus_x << ',' << fixed(r.ratio) << '\n';
  }
}

nlohmann::ordered_json scaling_json(const ScalingReport& report) {
  nlohmann::ordered_json j;
  j["rows"] = report.rows.size();
  j["fit_from"] = report.fit_from;
  j["fit_to"] = report.fit_to;
  j["slope"] = report.slope;
  return j;
}

void write_density_csv(std::ostream& out, const DensityReport& report) {
  out << kDensityCsvHeader << '\n';
  for (std::size_t t = 0; t < report.ratios.size(); ++t) {
    out << t << ',' << report.n << ',' << fixed(report.ratios[t]) << '\n';
  }
}

nlohmann::ordered_json density_json(const DensityReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["trials"] = report.ratios.size();
  j["mean"] = report.mean;
  j["stddev"] = report.stddev;
  return j;
}

namespace {

nlohmann::ordered_json violation_json(const Violation& v) {
  nlohmann::ordered_json j;
  j["check"] = v.check;
  j["instance"] = v.instance;
  j["apex"] = v.apex;
  j["message"] = v.message;
  j["points"] = v.points;
  return j;
}

}  // namespace

nlohmann::ordered_json sweep_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["instances"] = report.instances;
  j["apex_checks"] = report.apex_checks;
  j["violations"] = report.violations.size();
  if (!report.violations.empty()) j["counterexample"] = violation_json(report.violations.front());
  nlohmann::ordered_json shared;
  shared["apexes_with_edge_in_three"] = report.shared_edges.apexes_with_edge_in_three;
  shared["apexes_with_all_edges_shared"] = report.shared_edges.apexes_with_all_edges_shared;
  shared["max_edge_multiplicity"] = report.shared_edges.max_edge_multiplicity;
  j["interior_shared_edges"] = std::move(shared);
  return j;
}

}  // namespace emptytri
