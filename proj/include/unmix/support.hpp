#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unmix/linalg.hpp"

namespace unmix {

/// A finite point set in Q^dim. Duplicates are removed on ingestion
/// (first occurrence wins) and the number removed is recorded.
struct Support {
  int dim = 0;
  std::vector<RatPoint> points;
  size_t duplicates_removed = 0;

  Support() = default;
  Support(int ambient_dim, std::vector<RatPoint> pts);

  size_t size() const { return points.size(); }
  bool contains(const RatPoint& p) const;
};

Support support_from_ints(int dim, const std::vector<std::vector<long>>& pts);

/// Union of several supports over the same ambient space. Keeps, for
/// each input support, the indices of its points inside the union.
struct SupportUnion {
  Support all;
  std::vector<std::vector<int>> member_ids;
};

SupportUnion support_union(const std::vector<Support>& supports);

struct SupportSystem {
  int dim = 0;
  std::vector<Support> supports;
  std::vector<std::string> labels;

  SupportSystem() = default;
  SupportSystem(int ambient_dim, std::vector<Support> s,
                std::vector<std::string> names = {});

  size_t size() const { return supports.size(); }
  bool is_square() const { return static_cast<int>(supports.size()) == dim; }
};

}  // namespace unmix
