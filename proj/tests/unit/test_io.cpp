#include <gtest/gtest.h>

#include <sstream>

#include "emptytri/errors.hpp"
#include "emptytri/io.hpp"

using namespace emptytri;

TEST(PointFile, ParsesCommentsBlanksAndSigns) {
  const auto pts = parse_points("# header\n\n1 2\n  -3\t+4  \n# tail\n");
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], (Point{1, 2}));
  EXPECT_EQ(pts[1], (Point{-3, 4}));
}

TEST(PointFile, ErrorsCarryLineNumbers) {
  try {
    parse_points("0 0\n# c\n1.5 2\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_points("1 2 3\n"), InputError);
  EXPECT_THROW(parse_points("7\n"), InputError);
  EXPECT_THROW(parse_points("1 99999999999999999999\n"), InputError);
}

TEST(PointFile, RoundTrip) {
  const std::vector<Point> pts{{0, 0}, {-5, 7}, {268435456, -268435456}};
  const auto text = points_to_string(pts, {"family=test", "apex=1"});
  EXPECT_EQ(text, "# family=test\n# apex=1\n0 0\n-5 7\n268435456 -268435456\n");
  EXPECT_EQ(parse_points(text), pts);
}

TEST(InstanceHeader, RecordsParameters) {
  const auto h = instance_header(gen_random(5, 9, 100));
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0], "family=random n=5 seed=9 grid=100");
  EXPECT_EQ(h[1], "n=5");
  EXPECT_EQ(h[2], "apex=0");
  const auto hb = instance_header(gen_bipartite(1, 2));
  EXPECT_EQ(hb.back(), "apex2=1");
}

TEST(GraphText, DotLayout) {
  const auto inst = gen_figure2();
  const auto g = build_incidence_graph(inst.points, 0);
  std::ostringstream out;
  write_graph_dot(out, g);
  EXPECT_EQ(out.str(),
            "graph G {\n  // apex 0\n  0 [label=\"0 1 2\"];\n  1 [label=\"0 1 3\"];\n"
            "  2 [label=\"0 2 3\"];\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
  EXPECT_EQ(parse_graph(out.str()), g.graph);
}

TEST(GraphText, JsonRoundTrip) {
  const auto inst = gen_lower_bound(2);
  const auto g = build_incidence_graph(inst.points, 0);
  const auto j = graph_json(g);
  EXPECT_EQ(j["vertex_count"], g.graph.vertex_count());
  EXPECT_EQ(j["vertices"][0]["triangle"].size(), 3u);
  EXPECT_EQ(parse_graph(j.dump()), g.graph);
  EXPECT_EQ(parse_graph(graph_json(g.graph).dump(2)), g.graph);
}

TEST(GraphText, IsolatedVerticesSurvive) {
  const Graph g(4, std::vector<Edge>{{0, 1}});
  std::ostringstream out;
  write_graph_dot(out, g);
  EXPECT_EQ(parse_graph(out.str()), g);
}

TEST(GraphText, Malformed) {
  EXPECT_THROW(parse_graph(""), InputError);
  EXPECT_THROW(parse_graph("graph G {\n 0 -- 1;\n"), InputError);
  EXPECT_THROW(parse_graph("digraph G {\n 0 -> 1;\n}\n"), InputError);
  EXPECT_THROW(parse_graph("graph G {\n 0 -> 1;\n}\n"), InputError);
  EXPECT_THROW(parse_graph("graph G {\n 0 -- 0;\n}\n"), InputError);
  EXPECT_THROW(parse_graph("graph G {\n a -- 1;\n}\n"), InputError);
  EXPECT_THROW(parse_graph("{\"vertex_count\": 2}"), InputError);
  EXPECT_THROW(parse_graph("{\"vertex_count\": 2, \"edges\": [[0, 2]]}"), InputError);
  EXPECT_THROW(parse_graph("{not json"), InputError);
}

TEST(Serializers, FieldOrder) {
  CountsReport r{3, 1, 3, 0, 1, 2};
  EXPECT_EQ(counts_json(r).dump(),
            R"({"n_delta_p":3,"n_delta_p_minus_x":1,"v":3,"u":0,"i":1,"delta":2})");
  const auto v = verdict_json(counting_feasibility(paley9()));
  EXPECT_EQ(v["status"], "InfeasibleByCounting");
  EXPECT_EQ(v["rule"], "3t=2v");
}

TEST(Serializers, ScalingCsv) {
  const auto report = run_scaling(1, 2, 2);
  std::ostringstream out;
  write_scaling_csv(out, report);
  std::istringstream in(out.str());
  std::string header, row1, row2, extra;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  EXPECT_EQ(header, kScalingCsvHeader);
  EXPECT_EQ(row2.substr(0, row2.rfind(',')), "2,7,15,8,12,7,20,15,8,12,20");
  EXPECT_FALSE(std::getline(in, extra));
}

TEST(Serializers, FixedIsLocaleIndependent) {
  EXPECT_EQ(fixed(1.5), "1.500000");
  EXPECT_EQ(fixed(0.083712, 3), "0.084");
}
