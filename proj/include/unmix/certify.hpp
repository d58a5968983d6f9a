#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unmix/hull.hpp"
#include "unmix/support.hpp"
#include "unmix/triangulate.hpp"

namespace unmix {

/// Which sufficient condition a face satisfies, tested in the fixed
/// order A, B, C:
///   A - the face meets every support,
///   B - the face meets some support in exactly one point,
///   C - the supports it meets do so inside a common coordinate
///       subspace small enough that the face projects degenerately.
enum class Condition { A, B, C, None };

const char* condition_name(Condition c);

struct FaceVerdict {
  Face face;
  std::vector<std::vector<int>> intersections;  // per support, ids into the union
  Condition satisfied_by = Condition::None;
  // condition C details
  std::vector<int> meeting_supports;  // I
  std::vector<int> coord_set;         // C*
  int projected_dim = -1;
};

enum class CertifyStatus { Certified, CertifiedDegenerate, NotCertified };

struct UnmixReport {
  bool all_faces_meet_all = false;  // the strict per-face criterion
  bool certified = false;           // every face satisfies A, B or C
  bool degenerate = false;          // union hull not full-dimensional
  CertifyStatus status = CertifyStatus::NotCertified;
  size_t face_count = 0;
  size_t union_size = 0;
  std::vector<FaceVerdict> verdicts;  // failures always; everything in verbose
  std::optional<Rat> bkk;
};

struct CertifyOptions {
  size_t face_cap = kDefaultFaceCap;
  bool verbose = false;
};

/// Both sufficient criteria on the union hull's proper positive
/// dimensional faces, via the witness-normal semantics: the face meets
/// S_i iff the minimum of <.,alpha> over S_i equals the hull minimum,
/// in which case the intersection is the minimizer set of S_i.
UnmixReport certify_system(const SupportSystem& sys, const CertifyOptions& opts = {});

/// The strict criterion alone (every face meets every support).
UnmixReport check_all_faces_meet_all(const SupportSystem& sys,
                                     const CertifyOptions& opts = {});

struct Grouping {
  std::vector<std::vector<int>> groups;  // partition of support indices
};

Grouping parse_grouping(const std::string& text, size_t support_count);

struct GroupDiagnostic {
  int group = -1;
  std::vector<int> face_ids;     // ids into the group union
  int offending_member = -1;     // support (index within group) left unmet
  int witness_member = -1;       // member met in >= 2 points
};

struct SemiMixedReport {
  bool ok = false;
  std::vector<GroupDiagnostic> failures;
  std::vector<size_t> faces_per_group;
};

/// Grouped (semi-mixed) criterion: inside each group's union hull,
/// every positive dimensional face meeting some member in >= 2 points
/// must meet every member of that group.
SemiMixedReport check_semimixed(const SupportSystem& sys, const Grouping& g,
                                const CertifyOptions& opts = {});

struct BkkResult {
  UnmixReport report;
  Rat value;         // certified value, or the monotone upper bound
  bool bound_only = false;
};

/// Runs the certification and, on success, computes the BKK number as
/// the normalized volume of the union hull. On failure the value field
/// still carries that volume, flagged as an upper bound only.
BkkResult unmixed_bkk(const SupportSystem& sys, uint64_t seed,
                      const CertifyOptions& opts = {}, Exec exec = Exec::Parallel);

}  // namespace unmix
