#include "unmix/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace unmix {

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::A: return "A";
    case Condition::B: return "B";
    case Condition::C: return "C";
    default: return "none";
  }
}

namespace {

// Face/support intersections via the witness normal: the minimum of
// <., alpha> over S_i is attained on the face exactly when it equals
// the minimum over the whole union.
std::vector<std::vector<int>> face_intersections(const SupportUnion& uni,
                                                 const Face& face) {
  const size_t m = uni.all.size();
  std::vector<Rat> dots(m);
  for (size_t j = 0; j < m; ++j) dots[j] = dot(uni.all.points[j], face.normal);
  Rat h = dots[0];
  for (size_t j = 1; j < m; ++j)
    if (dots[j] < h) h = dots[j];

  std::vector<std::vector<int>> inter(uni.member_ids.size());
  for (size_t i = 0; i < uni.member_ids.size(); ++i) {
    Rat mn = dots[uni.member_ids[i][0]];
    for (int id : uni.member_ids[i])
      if (dots[id] < mn) mn = dots[id];
    if (mn == h) {
      for (int id : uni.member_ids[i])
        if (dots[id] == h) inter[i].push_back(id);
      std::sort(inter[i].begin(), inter[i].end());
      inter[i].erase(std::unique(inter[i].begin(), inter[i].end()), inter[i].end());
    }
  }
  return inter;
}

FaceVerdict judge_face(const SupportUnion& uni, const Face& face) {
  FaceVerdict v;
  v.face = face;
  v.intersections = face_intersections(uni, face);

  bool all = true;
  bool singleton = false;
  for (size_t i = 0; i < v.intersections.size(); ++i) {
    if (v.intersections[i].empty())
      all = false;
    else {
      v.meeting_supports.push_back(static_cast<int>(i));
      if (v.intersections[i].size() == 1) singleton = true;
    }
  }
  if (all) {
    v.satisfied_by = Condition::A;
    return v;
  }
  if (singleton) {
    v.satisfied_by = Condition::B;
    return v;
  }

  // Condition C with the single candidate subspace: the coordinates the
  // face's points actually use, implicitly padded to |I| with unused
  // coordinates (padding changes neither containment nor the projected
  // dimension).
  const size_t isz = v.meeting_supports.size();
  const int n = uni.all.dim;
  std::vector<bool> used(n, false);
  for (int id : face.vertex_ids)
    for (int d = 0; d < n; ++d)
      if (!uni.all.points[id][d].is_zero()) used[d] = true;
  for (int d = 0; d < n; ++d)
    if (used[d]) v.coord_set.push_back(d);
  if (v.coord_set.size() <= isz) {
    std::vector<RatPoint> proj;
    proj.reserve(face.vertex_ids.size());
    for (int id : face.vertex_ids) {
      RatPoint q;
      q.reserve(v.coord_set.size());
      for (int d : v.coord_set) q.push_back(uni.all.points[id][d]);
      proj.push_back(std::move(q));
    }
    v.projected_dim = affine_dim(proj);
    if (v.projected_dim < static_cast<int>(isz)) v.satisfied_by = Condition::C;
  }
  return v;
}

UnmixReport run_checks(const SupportSystem& sys, const CertifyOptions& opts) {
  if (!sys.is_square())
    throw std::invalid_argument("certify: system must have dim supports in dim variables");
  UnmixReport rep;
  SupportUnion uni = support_union(sys.supports);
  rep.union_size = uni.all.size();

  if (affine_dim(uni.all.points) < sys.dim) {
    // Lower-dimensional union: both sides of the equality vanish.
    rep.degenerate = true;
    rep.all_faces_meet_all = true;
    rep.certified = true;
    rep.status = CertifyStatus::CertifiedDegenerate;
    return rep;
  }

  Polytope hull = convex_hull(uni.all);
  std::vector<Face> faces = enumerate_faces(hull, opts.face_cap);
  rep.face_count = faces.size();
  rep.all_faces_meet_all = true;
  rep.certified = true;
  for (const Face& f : faces) {
    FaceVerdict v = judge_face(uni, f);
    if (v.satisfied_by != Condition::A) rep.all_faces_meet_all = false;
    if (v.satisfied_by == Condition::None) rep.certified = false;
    if (opts.verbose || v.satisfied_by == Condition::None)
      rep.verdicts.push_back(std::move(v));
  }
  rep.status = rep.certified ? CertifyStatus::Certified : CertifyStatus::NotCertified;
  return rep;
}

}  // namespace

UnmixReport certify_system(const SupportSystem& sys, const CertifyOptions& opts) {
  return run_checks(sys, opts);
}

UnmixReport check_all_faces_meet_all(const SupportSystem& sys,
                                     const CertifyOptions& opts) {
  return run_checks(sys, opts);
}

Grouping parse_grouping(const std::string& text, size_t support_count) {
  Grouping g;
  std::stringstream groups(text);
  std::string part;
  while (std::getline(groups, part, ';')) {
    std::vector<int> ids;
    std::stringstream items(part);
    std::string tok;
    while (std::getline(items, tok, ',')) {
      if (tok.empty()) continue;
      ids.push_back(std::stoi(tok));
    }
    if (!ids.empty()) g.groups.push_back(std::move(ids));
  }
  // validate: nonempty disjoint blocks covering 0..count-1
  std::vector<bool> seen(support_count, false);
  size_t total = 0;
  for (const auto& blk : g.groups) {
    for (int id : blk) {
      if (id < 0 || static_cast<size_t>(id) >= support_count || seen[id])
        throw std::invalid_argument("grouping: indices must partition the supports");
      seen[id] = true;
      ++total;
    }
  }
  if (total != support_count)
    throw std::invalid_argument("grouping: indices must partition the supports");
  return g;
}

SemiMixedReport check_semimixed(const SupportSystem& sys, const Grouping& g,
                                const CertifyOptions& opts) {
  std::vector<bool> seen(sys.size(), false);
  size_t total = 0;
  for (const auto& blk : g.groups) {
    if (blk.empty()) throw std::invalid_argument("grouping: empty block");
    for (int id : blk) {
      if (id < 0 || static_cast<size_t>(id) >= sys.size() || seen[id])
        throw std::invalid_argument("grouping: indices must partition the supports");
      seen[id] = true;
      ++total;
    }
  }
  if (total != sys.size())
    throw std::invalid_argument("grouping: indices must partition the supports");

  SemiMixedReport rep;
  rep.ok = true;
  for (size_t gi = 0; gi < g.groups.size(); ++gi) {
    std::vector<Support> members;
    for (int id : g.groups[gi]) members.push_back(sys.supports[id]);
    SupportUnion uni = support_union(members);
    Polytope hull = convex_hull(uni.all);
    // Faces of a possibly lower-dimensional group hull, inside its own
    // affine hull. (The whole polytope, when it arises as a face of a
    // lower-dimensional hull, meets every member and never fails.)
    std::vector<Face> faces = enumerate_faces_intrinsic(hull, opts.face_cap);
    rep.faces_per_group.push_back(faces.size());

    std::vector<std::vector<int>> member_sets(members.size());
    for (size_t mi = 0; mi < members.size(); ++mi) {
      member_sets[mi] = uni.member_ids[mi];
      std::sort(member_sets[mi].begin(), member_sets[mi].end());
      member_sets[mi].erase(std::unique(member_sets[mi].begin(), member_sets[mi].end()),
                            member_sets[mi].end());
    }
    for (const Face& f : faces) {
      int witness = -1;
      for (size_t mi = 0; mi < members.size(); ++mi) {
        std::vector<int> meet;
        std::set_intersection(f.vertex_ids.begin(), f.vertex_ids.end(),
                              member_sets[mi].begin(), member_sets[mi].end(),
                              std::back_inserter(meet));
        if (meet.size() >= 2) {
          witness = static_cast<int>(mi);
          break;
        }
      }
      if (witness < 0) continue;
      for (size_t mi = 0; mi < members.size(); ++mi) {
        std::vector<int> meet;
        std::set_intersection(f.vertex_ids.begin(), f.vertex_ids.end(),
                              member_sets[mi].begin(), member_sets[mi].end(),
                              std::back_inserter(meet));
        if (meet.empty()) {
          rep.ok = false;
          GroupDiagnostic d;
          d.group = static_cast<int>(gi);
          d.face_ids = f.vertex_ids;
          d.offending_member = static_cast<int>(mi);
          d.witness_member = witness;
          rep.failures.push_back(std::move(d));
        }
      }
    }
  }
  return rep;
}

BkkResult unmixed_bkk(const SupportSystem& sys, uint64_t seed,
                      const CertifyOptions& opts, Exec exec) {
  BkkResult res;
  res.report = certify_system(sys, opts);
  if (res.report.degenerate) {
    res.value = Rat(0);
    res.report.bkk = res.value;
    return res;
  }
  SupportUnion uni = support_union(sys.supports);
  res.value = normalized_volume(uni.all, seed, exec);
  if (res.report.certified) {
    res.report.bkk = res.value;
  } else {
    res.bound_only = true;
  }
  return res;
}

}  // namespace unmix
