#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "unmix/certify.hpp"
#include "unmix/generators.hpp"
#include "unmix/mixedvol.hpp"

using namespace unmix;

namespace {

Support sup(int dim, const std::vector<std::vector<long>>& pts) {
  return support_from_ints(dim, pts);
}

SupportSystem example_polygons() {
  return SupportSystem(
      2,
      {sup(2, {{1, 1}, {3, 0}, {4, 0}, {4, 1}, {3, 3}, {1, 4}, {0, 4}, {0, 3}}),
       sup(2, {{0, 1}, {0, 0}, {3, 0}, {4, 1}, {4, 4}, {3, 4}})});
}

SupportSystem random_system(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<long> coord(0, 3);
  std::uniform_int_distribution<int> count(2, 5);
  std::vector<Support> sups;
  for (int i = 0; i < dim; ++i) {
    std::vector<std::vector<long>> pts;
    int k = count(rng);
    for (int j = 0; j < k; ++j) {
      std::vector<long> p(dim);
      for (auto& c : p) c = coord(rng);
      pts.push_back(std::move(p));
    }
    sups.push_back(support_from_ints(dim, pts));
  }
  return SupportSystem(dim, std::move(sups));
}

}  // namespace

TEST_CASE("the example polygons satisfy the strict face criterion") {
  UnmixReport rep = check_all_faces_meet_all(example_polygons());
  CHECK(rep.all_faces_meet_all);
  CHECK(rep.certified);
  CHECK(rep.status == CertifyStatus::Certified);
  CHECK(rep.face_count == 4);
}

TEST_CASE("triangle system {0,e1},{0,e2} certifies") {
  // All three hull edges meet both supports (the shared origin covers
  // the two axis edges), so even the strict criterion holds.
  SupportSystem sys(2, {sup(2, {{0, 0}, {1, 0}}), sup(2, {{0, 0}, {0, 1}})});
  UnmixReport rep = certify_system(sys);
  CHECK(rep.certified);
  CHECK(rep.all_faces_meet_all);
  BkkResult bkk = unmixed_bkk(sys, 0);
  CHECK(bkk.value == Rat(1));
  CHECK(bkk.value == mixed_volume(sys, 0));
}

TEST_CASE("lower-dimensional union takes the degenerate path") {
  SupportSystem sys(2, {sup(2, {{0, 0}, {1, 0}}), sup(2, {{3, 0}, {4, 0}})});
  BkkResult res = unmixed_bkk(sys, 0);
  CHECK(res.report.degenerate);
  CHECK(res.report.status == CertifyStatus::CertifiedDegenerate);
  CHECK(res.value == Rat(0));
  CHECK(mixed_volume(sys, 0) == Rat(0));
}

TEST_CASE("oscillator cycle system n=4 certifies via A/B") {
  UnmixReport rep = certify_system(kuramoto_cycle(4), {kDefaultFaceCap, true});
  CHECK(rep.certified);
  for (const FaceVerdict& v : rep.verdicts) {
    CHECK(v.satisfied_by != Condition::None);
    CHECK(v.satisfied_by != Condition::C);
  }
}

TEST_CASE("neural-network system n=3 certifies") {
  UnmixReport rep = certify_system(noonburg(3));
  CHECK(rep.certified);
}

TEST_CASE("load-flow 3-cycle certifies with faces classified A or C") {
  UnmixReport rep = certify_system(loadflow_supports(cycle_graph(3)),
                                   {kDefaultFaceCap, true});
  CHECK(rep.certified);
  bool used_c = false;
  for (const FaceVerdict& v : rep.verdicts) {
    CHECK(v.satisfied_by != Condition::None);
    if (v.satisfied_by == Condition::C) {
      used_c = true;
      CHECK(v.projected_dim >= 0);
      CHECK(v.projected_dim < static_cast<int>(v.meeting_supports.size()));
      CHECK(v.coord_set.size() <= v.meeting_supports.size());
    }
  }
  CHECK(used_c);
}

TEST_CASE("strict criterion implies the relaxed one") {
  std::mt19937_64 rng(51);
  int strict_hits = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> dims(2, 3);
    SupportSystem sys = random_system(rng, dims(rng));
    UnmixReport rep = certify_system(sys);
    if (rep.all_faces_meet_all) {
      CHECK(rep.certified);
      ++strict_hits;
    }
  }
  CHECK(strict_hits > 5);
}

TEST_CASE("condition-A verdicts survive support renumbering") {
  // Faces must be matched by their point coordinates: renumbering the
  // supports permutes the union ids.
  std::mt19937_64 rng(52);
  auto a_faces = [](const SupportSystem& sys) {
    CertifyOptions opts;
    opts.verbose = true;
    SupportUnion uni = support_union(sys.supports);
    std::map<std::set<std::vector<Rat>>, bool> out;
    for (const FaceVerdict& v : certify_system(sys, opts).verdicts) {
      std::set<std::vector<Rat>> key;
      for (int id : v.face.vertex_ids) key.insert(uni.all.points[id]);
      out[key] = (v.satisfied_by == Condition::A);
    }
    return out;
  };
  for (int trial = 0; trial < 20; ++trial) {
    SupportSystem sys = random_system(rng, 3);
    std::vector<Support> rev(sys.supports.rbegin(), sys.supports.rend());
    CHECK(a_faces(sys) == a_faces(SupportSystem(3, rev)));
  }
}

TEST_CASE("certified systems agree with the oracle") {
  std::mt19937_64 rng(53);
  int certified = 0, total = 0;
  while (certified < 40 && total < 400) {
    std::uniform_int_distribution<int> dims(2, 3);
    int d = dims(rng);
    SupportSystem sys = random_system(rng, d);
    ++total;
    BkkResult res = unmixed_bkk(sys, 0);
    if (!res.report.certified || res.report.degenerate) continue;
    ++certified;
    CHECK(res.value == mixed_volume(sys, 0));
  }
  CHECK(certified >= 40);
}

TEST_CASE("uncertified systems still respect the monotone bound") {
  std::mt19937_64 rng(54);
  int uncertified = 0, total = 0;
  while (uncertified < 20 && total < 400) {
    SupportSystem sys = random_system(rng, 3);
    ++total;
    BkkResult res = unmixed_bkk(sys, 0);
    if (res.report.certified) continue;
    ++uncertified;
    CHECK(res.bound_only);
    CHECK(!res.report.bkk.has_value());
    CHECK(mixed_volume(sys, 0) <= res.value);
  }
  CHECK(uncertified >= 20);
}

TEST_CASE("grouping parser validates partitions") {
  Grouping g = parse_grouping("0,2;1", 3);
  REQUIRE(g.groups.size() == 2);
  CHECK(g.groups[0] == std::vector<int>{0, 2});
  CHECK(g.groups[1] == std::vector<int>{1});
  CHECK_THROWS_AS(parse_grouping("0;0,1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_grouping("0,1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_grouping("0,1,5", 3), std::invalid_argument);
}

TEST_CASE("tensor example: grouped check passes for {S1,S2},{S3}") {
  SupportSystem sys = tensor_eigen_supports(2, 3, 2, false);
  SemiMixedReport rep = check_semimixed(sys, parse_grouping("0,1;2", 3));
  CHECK(rep.ok);
  CHECK(rep.failures.empty());
}

TEST_CASE("singleton groups pass vacuously") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    SupportSystem sys = random_system(rng, 3);
    SemiMixedReport rep = check_semimixed(sys, parse_grouping("0;1;2", 3));
    CHECK(rep.ok);
  }
}

TEST_CASE("tensor n=3 grouped check passes") {
  SupportSystem sys = tensor_eigen_supports(3, 3, 2, false);
  SemiMixedReport rep = check_semimixed(sys, parse_grouping("0,1,2;3", 4));
  CHECK(rep.ok);
}

TEST_CASE("all-in-one grouping follows from the strict criterion") {
  std::mt19937_64 rng(56);
  int hits = 0;
  for (int trial = 0; trial < 400 && hits < 10; ++trial) {
    std::uniform_int_distribution<int> dims(2, 3);
    int d = dims(rng);
    SupportSystem sys = random_system(rng, d);
    UnmixReport rep = certify_system(sys);
    if (!rep.all_faces_meet_all || rep.degenerate) continue;
    ++hits;
    std::string spec;
    for (int i = 0; i < d; ++i) spec += (i ? "," : "") + std::to_string(i);
    SemiMixedReport grouped = check_semimixed(sys, parse_grouping(spec, d));
    CHECK(grouped.ok);
  }
  CHECK(hits >= 10);
}

TEST_CASE("a grouped check can fail with diagnostics") {
  // Two far-apart segments in one group: the hull edge joining them
  // meets one member in two points and misses the other entirely.
  SupportSystem sys(2, {sup(2, {{0, 0}, {1, 0}}), sup(2, {{0, 3}, {1, 3}})});
  SemiMixedReport rep = check_semimixed(sys, parse_grouping("0,1", 2));
  CHECK(!rep.ok);
  CHECK(!rep.failures.empty());
  CHECK(rep.failures[0].group == 0);
}
