#include "unmix/hull.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace unmix {

namespace {

void check_alpha(const Support& s, const RatPoint& alpha) {
  if (static_cast<int>(alpha.size()) != s.dim)
    throw std::invalid_argument("normal dimension mismatch");
  if (is_zero(alpha)) throw std::invalid_argument("zero vector is not a valid normal");
}

}  // namespace

Rat support_value(const Support& s, const RatPoint& alpha) {
  if (s.points.empty()) throw std::invalid_argument("support_value: empty support");
  check_alpha(s, alpha);
  Rat h = dot(s.points[0], alpha);
  for (size_t j = 1; j < s.size(); ++j) {
    Rat v = dot(s.points[j], alpha);
    if (v < h) h = v;
  }
  return h;
}

std::vector<int> face_of(const Support& s, const RatPoint& alpha) {
  Rat h = support_value(s, alpha);
  std::vector<int> ids;
  for (size_t j = 0; j < s.size(); ++j)
    if (dot(s.points[j], alpha) == h) ids.push_back(static_cast<int>(j));
  return ids;
}

Polytope convex_hull(const Support& s) {
  if (s.points.empty()) throw std::invalid_argument("convex_hull: empty support");
  Polytope p;
  p.ambient = s.dim;
  p.all_points = s;

  if (s.size() == 1) {
    p.dim = 0;
    p.vertex_ids = {0};
    return p;
  }

  const int adim = affine_dim(s.points);
  p.dim = adim;

  if (adim < s.dim) {
    // Work inside the affine hull via an exact coordinate projection,
    // then embed the facet normals back (zero on dropped coordinates).
    std::vector<int> cols = affine_pivot_columns(s.points);
    std::vector<RatPoint> proj(s.size());
    for (size_t j = 0; j < s.size(); ++j) {
      proj[j].reserve(cols.size());
      for (int c : cols) proj[j].push_back(s.points[j][c]);
    }
    Polytope q = convex_hull(Support(adim, std::move(proj)));
    p.vertex_ids = q.vertex_ids;
    p.coord_subset = cols;
    p.facets.reserve(q.facets.size());
    for (const Facet& f : q.facets) {
      Facet g;
      g.normal.assign(s.dim, Rat(0));
      for (size_t k = 0; k < cols.size(); ++k) g.normal[cols[k]] = f.normal[k];
      g.offset = f.offset;
      g.incident = f.incident;
      p.facets.push_back(std::move(g));
    }
    return p;
  }

  TriangulateOptions opts;
  opts.collect_facets = true;
  auto res = triangulate(s, 0, opts);
  p.facets.reserve(res.facets.size());
  for (const FacetPlane& plane : res.facets) {
    Facet f;
    f.normal.reserve(s.dim);
    for (const Int& c : plane.normal) f.normal.emplace_back(c);
    f.offset = plane.offset;
    for (size_t j = 0; j < s.size(); ++j)
      if (dot(s.points[j], f.normal) == f.offset) f.incident.push_back(static_cast<int>(j));
    p.facets.push_back(std::move(f));
  }

  // A point is a vertex exactly when its active facet normals span the
  // whole space.
  for (size_t j = 0; j < s.size(); ++j) {
    RatMatrix active;
    for (const Facet& f : p.facets)
      if (std::binary_search(f.incident.begin(), f.incident.end(), static_cast<int>(j)))
        active.rows.push_back(f.normal);
    if (static_cast<int>(active.rows.size()) >= adim && rank(active) == adim)
      p.vertex_ids.push_back(static_cast<int>(j));
  }
  return p;
}

namespace {

std::vector<Face> face_closure(const Polytope& p, size_t face_cap) {
  std::vector<std::vector<int>> facet_sets;
  facet_sets.reserve(p.facets.size());
  for (const Facet& f : p.facets) facet_sets.push_back(f.incident);

  std::set<std::vector<int>> found(facet_sets.begin(), facet_sets.end());
  std::vector<std::vector<int>> queue(found.begin(), found.end());
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : facet_sets) {
      std::vector<int> meet;
      std::set_intersection(cur.begin(), cur.end(), g.begin(), g.end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet.size() == cur.size()) continue;
      if (found.insert(meet).second) {
        if (found.size() > face_cap) {
          std::ostringstream os;
          os << "face cap of " << face_cap << " exceeded while enumerating faces";
          throw resource_limit_error(os.str());
        }
        queue.push_back(std::move(meet));
      }
    }
  }

  std::vector<Face> faces;
  for (const auto& ids : found) {
    if (ids.size() < 2) continue;
    std::vector<RatPoint> pts;
    pts.reserve(ids.size());
    for (int id : ids) pts.push_back(p.all_points.points[id]);
    int d = affine_dim(pts);
    if (d < 1) continue;
    Face face;
    face.vertex_ids = ids;
    face.dim = d;
    face.normal.assign(p.ambient, Rat(0));
    for (size_t fi = 0; fi < p.facets.size(); ++fi) {
      const auto& inc = p.facets[fi].incident;
      if (std::includes(inc.begin(), inc.end(), ids.begin(), ids.end())) {
        face.facet_set.push_back(static_cast<int>(fi));
        face.normal = add(face.normal, p.facets[fi].normal);
      }
    }
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(),
            [](const Face& a, const Face& b) { return a.vertex_ids < b.vertex_ids; });
  return faces;
}

}  // namespace

std::vector<Face> enumerate_faces(const Polytope& p, size_t face_cap) {
  if (p.dim < p.ambient)
    throw degenerate_error("enumerate_faces: polytope is not full-dimensional");
  return face_closure(p, face_cap);
}

std::vector<Face> enumerate_faces_intrinsic(const Polytope& p, size_t face_cap) {
  return face_closure(p, face_cap);
}

}  // namespace unmix
