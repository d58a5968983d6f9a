#include "unmix/support.hpp"

#include <map>

namespace unmix {

Support::Support(int ambient_dim, std::vector<RatPoint> pts) : dim(ambient_dim) {
  if (dim <= 0) throw std::invalid_argument("Support: ambient dimension must be positive");
  std::map<RatPoint, int, bool (*)(const RatPoint&, const RatPoint&)> seen(lex_less);
  points.reserve(pts.size());
  for (auto& p : pts) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("Support: point dimension mismatch");
    if (seen.emplace(p, 0).second)
      points.push_back(std::move(p));
    else
      ++duplicates_removed;
  }
}

bool Support::contains(const RatPoint& p) const {
  for (const auto& q : points)
    if (q == p) return true;
  return false;
}

Support support_from_ints(int dim, const std::vector<std::vector<long>>& pts) {
  std::vector<RatPoint> rp;
  rp.reserve(pts.size());
  for (const auto& p : pts) rp.push_back(int_point(p));
  return Support(dim, std::move(rp));
}

SupportUnion support_union(const std::vector<Support>& supports) {
  if (supports.empty()) throw std::invalid_argument("support_union: no supports");
  const int dim = supports[0].dim;
  SupportUnion u;
  std::map<RatPoint, int, bool (*)(const RatPoint&, const RatPoint&)> index(lex_less);
  std::vector<RatPoint> pts;
  u.member_ids.resize(supports.size());
  for (size_t s = 0; s < supports.size(); ++s) {
    if (supports[s].dim != dim)
      throw std::invalid_argument("support_union: mixed ambient dimensions");
    for (const auto& p : supports[s].points) {
      auto [it, fresh] = index.emplace(p, static_cast<int>(pts.size()));
      if (fresh) pts.push_back(p);
      u.member_ids[s].push_back(it->second);
    }
  }
  u.all = Support(dim, std::move(pts));
  return u;
}

SupportSystem::SupportSystem(int ambient_dim, std::vector<Support> s,
                             std::vector<std::string> names)
    : dim(ambient_dim), supports(std::move(s)), labels(std::move(names)) {
  for (const auto& sup : supports) {
    if (sup.dim != dim)
      throw std::invalid_argument("SupportSystem: support dimension mismatch");
    if (sup.points.empty())
      throw std::invalid_argument("SupportSystem: empty support");
  }
  if (!labels.empty() && labels.size() != supports.size())
    throw std::invalid_argument("SupportSystem: label count mismatch");
}

}  // namespace unmix
