#include "unmix/mixedvol.hpp"

#include <omp.h>

#include <sstream>

#include "unmix/hull.hpp"

namespace unmix {

Support minkowski_sum(const Support& a, const Support& b) {
  if (a.dim != b.dim) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<RatPoint> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& p : a.points)
    for (const auto& q : b.points) sums.push_back(add(p, q));
  Support out(a.dim, std::move(sums));
  if (out.size() > kMinkowskiPruneThreshold) {
    Polytope hull = convex_hull(out);
    std::vector<RatPoint> verts;
    verts.reserve(hull.vertex_ids.size());
    for (int id : hull.vertex_ids) verts.push_back(out.points[id]);
    out = Support(out.dim, std::move(verts));
  }
  return out;
}

Rat mixed_volume(const SupportSystem& sys, uint64_t seed,
                 const MixedVolumeOptions& opts) {
  const int n = sys.dim;
  if (!sys.is_square())
    throw std::invalid_argument("mixed_volume: need exactly dim supports");
  if (n > opts.dim_cap) {
    std::ostringstream os;
    os << "mixed_volume: dimension " << n << " exceeds the inclusion-exclusion cap of "
       << opts.dim_cap;
    throw resource_limit_error(os.str());
  }

  const uint64_t nsubsets = (uint64_t(1) << n) - 1;
  std::vector<Rat> terms(nsubsets);
  std::exception_ptr err;
  bool failed = false;

#pragma omp parallel for schedule(dynamic, 1) if (opts.exec == Exec::Parallel) \
    shared(err, failed)
  for (uint64_t mask = 1; mask <= nsubsets; ++mask) {
    if (failed) continue;
    try {
      Support sum;
      bool first = true;
      int count = 0;
      for (int i = 0; i < n; ++i) {
        if (!(mask & (uint64_t(1) << i))) continue;
        ++count;
        sum = first ? sys.supports[i] : minkowski_sum(sum, sys.supports[i]);
        first = false;
      }
      Rat vol = normalized_volume(sum, seed, Exec::Serial);
      terms[mask - 1] = ((n - count) % 2 == 0) ? vol : -vol;
    } catch (...) {
#pragma omp critical
      {
        if (!failed) {
          failed = true;
          err = std::current_exception();
        }
      }
    }
  }
  if (failed) std::rethrow_exception(err);

  Rat acc;
  for (const Rat& t : terms) acc += t;
  Int fact = 1;
  mpz_fac_ui(fact.get_mpz_t(), n);
  return acc / Rat(fact);
}

}  // namespace unmix
