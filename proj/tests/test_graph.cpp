#include <doctest.h>

#include "groupdepth/depth.hpp"
#include "groupdepth/groups.hpp"

using namespace groupdepth;

namespace {

InclusionMatrix matrix_for(const PermGroup &g, const PermGroup &h) {
  auto cdg = conjugacy_classes(g);
  auto cdh = conjugacy_classes(h);
  auto tabg = character_table(cdg);
  auto tabh = character_table(cdh, tabg.p);
  auto fus = class_fusion(cdh, cdg);
  return inclusion_matrix(tabh, tabg, fus, cdh, cdg);
}

} // namespace

TEST_CASE("H = G yields a totally disconnected graph") {
  auto g = symmetric_group(4);
  auto graph = build_character_graph(matrix_for(g, g));
  CHECK_FALSE(graph.connected);
  for (std::size_t a = 0; a < graph.n; ++a)
    for (std::size_t b = 0; b < graph.n; ++b)
      CHECK_FALSE(graph.adjacency[a][b]);
}

TEST_CASE("S3 inside S4: diameter 2 with exactly one far pair") {
  auto m = matrix_for(symmetric_group(4),
                      PermGroup(4, {Permutation::parse_cycles("(1,2)", 4),
                                    Permutation::parse_cycles("(1,2,3)", 4)}));
  auto graph = build_character_graph(m);
  REQUIRE(graph.connected);
  CHECK(graph.diameter == 2);
  unsigned far = 0;
  for (std::size_t a = 0; a < graph.n; ++a)
    for (std::size_t b = a + 1; b < graph.n; ++b)
      if (graph.distance[a][b] == 2)
        ++far;
  CHECK(far == 1);
}

TEST_CASE("A4 inside A5: depth 5 forces diameter 2") {
  auto a5 = alternating_group(5);
  auto m = matrix_for(a5, a5.point_stabilizer(0));
  auto graph = build_character_graph(m);
  REQUIRE(graph.connected);
  CHECK(graph.diameter == 2);
}

TEST_CASE("adjacency is the off-diagonal support of the integer Gram matrix") {
  auto m = matrix_for(alternating_group(5), alternating_group(5).point_stabilizer(0));
  auto graph = build_character_graph(m);
  for (std::size_t a = 0; a < graph.n; ++a) {
    CHECK(graph.gram[a][a] > 0);
    for (std::size_t b = 0; b < graph.n; ++b)
      CHECK(static_cast<bool>(graph.adjacency[a][b]) ==
            (a != b && graph.gram[a][b] != 0));
  }
}

TEST_CASE("graph windows for S5 over S4 pin the depth exactly") {
  auto s5 = symmetric_group(5);
  auto m = matrix_for(s5, s5.point_stabilizer(0));
  auto graph = build_character_graph(m);
  auto est = depth_interval(graph, m);
  CHECK(est.diameter == 3);
  CHECK(est.ell == 3);
  CHECK(est.candidates == std::vector<unsigned>{7});
}

TEST_CASE("a complete graph pins depth three") {
  // C5 is core-free in S5 with a base-2 action, so depth 3
  auto s5 = symmetric_group(5);
  PermGroup c5(5, {Permutation::parse_cycles("(1,2,3,4,5)", 5)});
  auto m = matrix_for(s5, c5);
  auto graph = build_character_graph(m);
  REQUIRE(graph.connected);
  CHECK(graph.diameter == 1);
  auto est = depth_interval(graph, m);
  CHECK(est.ell == 1);
  CHECK(est.candidates == std::vector<unsigned>{3});
  CHECK(compute_depth(s5, c5).depth == 3);
  CHECK_FALSE(depth5_witness(m).has_value());
}

TEST_CASE("single-constituent columns give vertex eccentricities") {
  auto s5 = symmetric_group(5);
  auto m = matrix_for(s5, s5.point_stabilizer(0));
  auto graph = build_character_graph(m);
  for (std::size_t chi = 0; chi < m.cols(); ++chi) {
    std::size_t nonzero = 0, row = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.m[i][chi] != 0) {
        ++nonzero;
        row = i;
      }
    if (nonzero != 1)
      continue;
    unsigned ecc = 0;
    for (std::size_t a = 0; a < graph.n; ++a)
      ecc = std::max(ecc, static_cast<unsigned>(graph.distance[a][row]));
    CHECK(max_distance_to_constituents(graph, m, chi) == ecc);
  }
}

TEST_CASE("depth-5 witness for the Sylow 2-normalizer of PGL(2,7)") {
  auto g = pgl2(7);
  // D16 = normalizer of a cyclic subgroup of order 8
  Permutation x8(8);
  g.for_each_element([&](const Permutation &e) {
    if (e.order() == 8) {
      x8 = e;
      return false;
    }
    return true;
  });
  auto d16 = g.normalizer_of(PermGroup(8, {x8}));
  REQUIRE(d16.order() == 16);
  auto m = matrix_for(g, d16);
  CHECK(depth5_witness(m).has_value());
  auto rep = compute_depth(g, d16);
  CHECK(rep.depth == 5);
}

TEST_CASE("depth-5 witness exists for S5 over S4 and re-verifies") {
  auto s5 = symmetric_group(5);
  auto m = matrix_for(s5, s5.point_stabilizer(0));
  auto w = depth5_witness(m);
  REQUIRE(w.has_value());
  auto [alpha, chi] = *w;
  // the column is a single 1 and the inner product vanishes
  std::size_t nonzero = 0, row = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.m[i][chi] != 0) {
      ++nonzero;
      row = i;
    }
  CHECK(nonzero == 1);
  CHECK(m.m[row][chi] == 1);
  std::uint64_t ip = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    ip += m.m[alpha][j] * m.m[row][j];
  CHECK(ip == 0);
}
