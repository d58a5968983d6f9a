#pragma once

#include <cstdint>
#include <vector>

#include "unmix/errors.hpp"
#include "unmix/support.hpp"

namespace unmix {

enum class Exec { Serial, Parallel };

/// SplitMix64 stream. Same seed gives the same sequence on every
/// platform; this is the contract the lifting reproducibility relies on.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// Integer lift per point index, drawn from [0, 2^20) by SplitMix64.
struct Lifting {
  uint64_t seed = 0;
  std::vector<int64_t> values;
};

Lifting draw_lifting(uint64_t seed, size_t point_count);
uint64_t derive_next_seed(uint64_t seed);

struct Cell {
  std::vector<int> vertex_ids;  // n+1 point indices, sorted
  Rat normalized_vol;           // |det| of the edge vectors from vertex 0
};

struct Triangulation {
  int dim = 0;
  Lifting lifting;
  std::vector<Cell> cells;  // sorted by vertex id tuple
  Rat total;
  bool degenerate = false;  // lower-dimensional input: no cells, total 0
};

/// One facet-supporting hyperplane of conv(points), found as the
/// supporting hyperplane of a boundary wall of the triangulation.
/// The normal is primitive integer and points inward:
///   <p, normal> >= offset for all input points, with equality on the facet.
struct FacetPlane {
  std::vector<Int> normal;
  Rat offset;
};

struct TriangulateOptions {
  Exec exec = Exec::Parallel;
  bool collect_facets = false;
  int max_lift_attempts = 32;
};

struct TriangulateResult {
  Triangulation tri;
  std::vector<FacetPlane> facets;  // deduped, only when collect_facets
};

/// Regular triangulation of conv(s) from a generic integer lifting.
/// Lower-hull cells of the lifted points, projected back down. Retries
/// with derived seeds when the lifting is not generic.
/// Degenerate (non-full-dimensional) supports yield the degenerate signal.
TriangulateResult triangulate(const Support& s, uint64_t seed,
                              const TriangulateOptions& opts);

Triangulation regular_triangulation(const Support& s, uint64_t seed,
                                    Exec exec = Exec::Parallel);

/// n! vol_n(conv(s)); zero for lower-dimensional hulls; independent of
/// the seed (any generic lifting gives the same total).
Rat normalized_volume(const Support& s, uint64_t seed = 0,
                      Exec exec = Exec::Parallel);

}  // namespace unmix
