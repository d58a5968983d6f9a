#include <doctest.h>

#include <set>

#include "unmix/certify.hpp"
#include "unmix/generators.hpp"
#include "unmix/mixedvol.hpp"

using namespace unmix;

namespace {

std::set<std::vector<Rat>> point_set(const Support& s) {
  return {s.points.begin(), s.points.end()};
}

std::set<std::vector<Rat>> pts(const std::vector<std::vector<long>>& v) {
  std::set<std::vector<Rat>> out;
  for (const auto& p : v) out.insert(int_point(p));
  return out;
}

}  // namespace

TEST_CASE("oscillator cycle supports, n=2") {
  SupportSystem sys = kuramoto_cycle(2);
  REQUIRE(sys.size() == 2);
  CHECK(point_set(sys.supports[0]) ==
        pts({{0, 0}, {1, -1}, {-1, 1}, {1, 0}, {-1, 0}}));
  CHECK(point_set(sys.supports[1]) ==
        pts({{0, 0}, {-1, 1}, {1, -1}, {0, 1}, {0, -1}}));
  CHECK(normalized_volume(support_union(sys.supports).all) == Rat(6));
}

TEST_CASE("oscillator cycle supports have five points each") {
  for (int n = 2; n <= 6; ++n) {
    SupportSystem sys = kuramoto_cycle(n);
    REQUIRE(sys.size() == static_cast<size_t>(n));
    for (const Support& s : sys.supports) CHECK(s.size() == 5);
  }
  CHECK_THROWS_AS(kuramoto_cycle(1), std::invalid_argument);
}

TEST_CASE("neural-network supports, n=2") {
  SupportSystem sys = noonburg(2);
  REQUIRE(sys.size() == 2);
  CHECK(point_set(sys.supports[0]) == pts({{1, 0}, {0, 0}, {1, 2}}));
  CHECK(point_set(sys.supports[1]) == pts({{0, 1}, {0, 0}, {2, 1}}));
  CHECK(mixed_volume(sys, 0) == Rat(5));
  BkkResult res = unmixed_bkk(sys, 0);
  CHECK(res.report.certified);
  CHECK(res.value == Rat(5));
}

TEST_CASE("neural-network support sizes are n+1") {
  for (int n = 2; n <= 6; ++n)
    for (const Support& s : noonburg(n).supports) CHECK(s.size() == static_cast<size_t>(n) + 1);
}

TEST_CASE("load-flow supports for the 2-node path") {
  SupportSystem sys = loadflow_supports(path_graph(2));
  REQUIRE(sys.size() == 2);
  CHECK(point_set(sys.supports[0]) == pts({{0, 0}, {1, 0}, {1, 1}}));
  CHECK(point_set(sys.supports[1]) == pts({{0, 0}, {0, 1}, {1, 1}}));

  BkkResult res = unmixed_bkk(sys, 0);
  CHECK(res.report.certified);
  CHECK(res.value == Rat(2));
  CHECK(mixed_volume(sys, 0) == Rat(2));
}

TEST_CASE("load-flow system of the 3-cycle") {
  SupportSystem sys = loadflow_supports(cycle_graph(3));
  CHECK(sys.dim == 4);
  CHECK(sys.size() == 4);
  UnmixReport rep = certify_system(sys);
  CHECK(rep.certified);
}

TEST_CASE("adjacency polytope of the 2-node path is the unit square") {
  Support s = adjacency_polytope(path_graph(2));
  CHECK(point_set(s) == pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("adjacency polytope of the 3-cycle has 9 points in Z^4") {
  Support s = adjacency_polytope(cycle_graph(3));
  CHECK(s.dim == 4);
  CHECK(s.size() == 9);
}

TEST_CASE("adjacency polytope equals the deduped load-flow union") {
  for (const Graph& g : {path_graph(2), cycle_graph(3), cycle_graph(4), cycle_graph(5)}) {
    Support adj = adjacency_polytope(g);
    Support uni = support_union(loadflow_supports(g).supports).all;
    CHECK(point_set(adj) == point_set(uni));
    CHECK(normalized_volume(adj) == normalized_volume(uni));
  }
}

TEST_CASE("tensor supports for n=2, m=3, m'=2") {
  SupportSystem sys = tensor_eigen_supports(2, 3, 2, false);
  REQUIRE(sys.size() == 3);
  CHECK(point_set(sys.supports[0]) == pts({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}}));
  CHECK(point_set(sys.supports[1]) == pts({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 1, 1}}));
  CHECK(point_set(sys.supports[2]) == pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));

  SupportSystem gen = tensor_eigen_supports(2, 3, 2, true);
  CHECK(point_set(gen.supports[0]) ==
        pts({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(point_set(gen.supports[0]) == point_set(gen.supports[1]));
  CHECK(point_set(gen.supports[2]) == point_set(sys.supports[2]));
}

TEST_CASE("generalized tensor rows share the standard union hull") {
  for (auto [n, m, mp] : {std::tuple{2, 3, 2}, {2, 4, 3}, {3, 3, 3}}) {
    SupportSystem std_sys = tensor_eigen_supports(n, m, mp, false);
    SupportSystem gen_sys = tensor_eigen_supports(n, m, mp, true);
    std::vector<Support> rows(std_sys.supports.begin(), std_sys.supports.end() - 1);
    Support uni = support_union(rows).all;
    Polytope hu = convex_hull(uni);
    Polytope ht = convex_hull(gen_sys.supports[0]);
    std::set<std::vector<Rat>> vu, vt;
    for (int id : hu.vertex_ids) vu.insert(uni.points[id]);
    for (int id : ht.vertex_ids) vt.insert(gen_sys.supports[0].points[id]);
    CHECK(vu == vt);
    // generalized points all lie inside the standard union hull
    for (const auto& p : gen_sys.supports[0].points) {
      for (const Facet& f : hu.facets) CHECK(dot(p, f.normal) >= f.offset);
    }
  }
}

TEST_CASE("standard and generalized tensor systems have equal mixed volume") {
  for (auto [n, m, mp] : {std::tuple{2, 3, 2}, {2, 4, 3}}) {
    Rat a = mixed_volume(tensor_eigen_supports(n, m, mp, false), 0);
    Rat b = mixed_volume(tensor_eigen_supports(n, m, mp, true), 0);
    CHECK(a == b);
  }
}

TEST_CASE("family guarantees hold at desk scale") {
  for (int n = 2; n <= 4; ++n) CHECK(certify_system(kuramoto_cycle(n)).certified);
  for (int n = 2; n <= 4; ++n) CHECK(certify_system(noonburg(n)).certified);
  for (int N : {3, 4}) CHECK(certify_system(loadflow_supports(cycle_graph(N))).certified);
  for (auto [n, m, mp] : {std::tuple{2, 3, 2}, {2, 4, 3}}) {
    SupportSystem sys = tensor_eigen_supports(n, m, mp, false);
    std::string spec;
    for (int i = 0; i < n; ++i) spec += (i ? "," : "") + std::to_string(i);
    spec += ";" + std::to_string(n);
    CHECK(check_semimixed(sys, parse_grouping(spec, n + 1)).ok);
  }
}

TEST_CASE("oracle equality for small generated families") {
  for (int n = 2; n <= 3; ++n) {
    SupportSystem sys = kuramoto_cycle(n);
    BkkResult res = unmixed_bkk(sys, 0);
    CHECK(res.report.certified);
    CHECK(res.value == mixed_volume(sys, 0));
  }
  for (int n = 2; n <= 3; ++n) {
    SupportSystem sys = noonburg(n);
    BkkResult res = unmixed_bkk(sys, 0);
    CHECK(res.report.certified);
    CHECK(res.value == mixed_volume(sys, 0));
  }
  {
    SupportSystem sys = loadflow_supports(cycle_graph(3));
    BkkResult res = unmixed_bkk(sys, 0);
    CHECK(res.report.certified);
    CHECK(res.value == mixed_volume(sys, 0));
  }
}

TEST_CASE("graph constructors") {
  Graph c3 = cycle_graph(3);
  CHECK(c3.nodes == 3);
  CHECK(c3.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(c3.connected());
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

  Graph p4 = path_graph(4);
  CHECK(p4.edges.size() == 3);
  CHECK(p4.connected());

  Graph g14 = ieee14();
  CHECK(g14.nodes == 14);
  CHECK(g14.edges.size() == 20);
  CHECK(g14.connected());

  CHECK_THROWS_AS(Graph(3, {{1, 2}}), std::invalid_argument);  // node 0 isolated
}

TEST_CASE("noonburg n=3 matches the widely used benchmark value") {
  SupportSystem sys = noonburg(3);
  Rat oracle = mixed_volume(sys, 0);
  BkkResult res = unmixed_bkk(sys, 0);
  CHECK(res.report.certified);
  CHECK(res.value == oracle);
  CHECK(oracle == Rat(21));
}
