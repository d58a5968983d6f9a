#include <doctest.h>

#include <algorithm>
#include <random>

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

SupportSystem random_system(std::mt19937_64& rng, int dim, int max_pts = 5) {
  std::uniform_int_distribution<long> coord(0, 3);
  std::uniform_int_distribution<int> count(2, max_pts);
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

TEST_CASE("minkowski sum basics") {
  Support a = sup(2, {{0, 0}, {1, 0}});
  Support b = sup(2, {{0, 0}, {0, 1}});
  Support s = minkowski_sum(a, b);
  CHECK(s.size() == 4);
  CHECK(s.contains(int_point({0, 0})));
  CHECK(s.contains(int_point({1, 0})));
  CHECK(s.contains(int_point({0, 1})));
  CHECK(s.contains(int_point({1, 1})));

  Support zero = sup(2, {{0, 0}});
  Support back = minkowski_sum(a, zero);
  CHECK(back.size() == a.size());
  for (const auto& p : a.points) CHECK(back.contains(p));

  Support doubled = minkowski_sum(a, a);
  CHECK(doubled.size() == 3);  // {0, e1, 2e1}
  CHECK(doubled.contains(int_point({2, 0})));

  CHECK_THROWS_AS(minkowski_sum(a, sup(3, {{0, 0, 0}})), std::invalid_argument);
}

TEST_CASE("mixed volume: unit square factors") {
  SupportSystem sys(2, {sup(2, {{0, 0}, {1, 0}}), sup(2, {{0, 0}, {0, 1}})});
  CHECK(mixed_volume(sys, 0) == Rat(1));
}

TEST_CASE("mixed volume: unmixed square gives 2") {
  Support q = sup(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  SupportSystem sys(2, {q, q});
  CHECK(mixed_volume(sys, 0) == Rat(2));
}

TEST_CASE("mixed volume of the two example polygons is 32") {
  CHECK(mixed_volume(example_polygons(), 0) == Rat(32));
}

TEST_CASE("non-square systems are rejected") {
  SupportSystem sys(2, {sup(2, {{0, 0}, {1, 0}})});
  CHECK_THROWS_AS(mixed_volume(sys, 0), std::invalid_argument);
}

TEST_CASE("dimension cap is enforced") {
  SupportSystem sys(3, {sup(3, {{0, 0, 0}, {1, 0, 0}}), sup(3, {{0, 0, 0}, {0, 1, 0}}),
                        sup(3, {{0, 0, 0}, {0, 0, 1}})});
  MixedVolumeOptions opts;
  opts.dim_cap = 2;
  CHECK_THROWS_AS(mixed_volume(sys, 0, opts), resource_limit_error);
  opts.dim_cap = 3;
  CHECK(mixed_volume(sys, 0, opts) == Rat(1));
}

TEST_CASE("mixed volume is symmetric in the supports") {
  std::mt19937_64 rng(41);
  int tested = 0;
  while (tested < 30) {
    std::uniform_int_distribution<int> dims(2, 3);
    int d = dims(rng);
    SupportSystem sys = random_system(rng, d);
    Rat base = mixed_volume(sys, 0);
    std::vector<Support> perm = sys.supports;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(mixed_volume(SupportSystem(d, perm), 0) == base);
    ++tested;
  }
}

TEST_CASE("translating one support leaves the mixed volume unchanged") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> shift(-3, 3);
  int tested = 0;
  while (tested < 30) {
    std::uniform_int_distribution<int> dims(2, 3);
    int d = dims(rng);
    SupportSystem sys = random_system(rng, d);
    Rat base = mixed_volume(sys, 0);
    RatPoint t(d);
    for (auto& c : t) c = Rat(shift(rng));
    std::vector<Support> moved = sys.supports;
    std::vector<RatPoint> pts;
    for (const auto& p : moved[0].points) pts.push_back(add(p, t));
    moved[0] = Support(d, pts);
    CHECK(mixed_volume(SupportSystem(d, moved), 0) == base);
    ++tested;
  }
}

TEST_CASE("union hull volume is NOT translation invariant (witness)") {
  // Translating one factor changes the union hull while the mixed
  // volume stays put; this pins the asymmetry between the two sides.
  Support a = sup(2, {{0, 0}, {1, 0}});
  Support b = sup(2, {{0, 0}, {0, 1}});
  SupportSystem sys(2, {a, b});
  Rat mv0 = mixed_volume(sys, 0);

  std::vector<RatPoint> pts;
  for (const auto& p : a.points) pts.push_back(add(p, int_point({5, 0})));
  SupportSystem moved(2, {Support(2, pts), b});
  CHECK(mixed_volume(moved, 0) == mv0);

  auto union_vol = [](const SupportSystem& s) {
    return normalized_volume(support_union(s.supports).all);
  };
  CHECK(union_vol(sys) != union_vol(moved));
}

TEST_CASE("mixed volume is additive in Minkowski sums") {
  std::mt19937_64 rng(43);
  int tested = 0;
  while (tested < 25) {
    std::uniform_int_distribution<int> dims(2, 3);
    int d = dims(rng);
    SupportSystem sys = random_system(rng, d, 4);
    SupportSystem alt = random_system(rng, d, 4);
    std::vector<Support> with_sum = sys.supports;
    with_sum[0] = minkowski_sum(sys.supports[0], alt.supports[0]);
    std::vector<Support> swapped = sys.supports;
    swapped[0] = alt.supports[0];
    Rat lhs = mixed_volume(SupportSystem(d, with_sum), 0);
    Rat rhs = mixed_volume(sys, 0) + mixed_volume(SupportSystem(d, swapped), 0);
    CHECK(lhs == rhs);
    ++tested;
  }
}

TEST_CASE("mixed volume never exceeds the union hull volume") {
  std::mt19937_64 rng(44);
  int tested = 0;
  while (tested < 40) {
    std::uniform_int_distribution<int> dims(2, 4);
    int d = dims(rng);
    SupportSystem sys = random_system(rng, d);
    Rat mv = mixed_volume(sys, 0);
    Rat uv = normalized_volume(support_union(sys.supports).all);
    CHECK(mv <= uv);
    ++tested;
  }
}

TEST_CASE("unmixed identity: mvol(Q,...,Q) = normalized volume") {
  std::mt19937_64 rng(45);
  int tested = 0;
  while (tested < 20) {
    std::uniform_int_distribution<int> dims(2, 3), counts(3, 6);
    int d = dims(rng);
    std::uniform_int_distribution<long> coord(0, 3);
    std::vector<std::vector<long>> pts;
    int k = counts(rng);
    for (int j = 0; j < k; ++j) {
      std::vector<long> p(d);
      for (auto& c : p) c = coord(rng);
      pts.push_back(std::move(p));
    }
    Support q = support_from_ints(d, pts);
    SupportSystem sys(d, std::vector<Support>(d, q));
    CHECK(mixed_volume(sys, 0) == normalized_volume(q));
    ++tested;
  }
}
