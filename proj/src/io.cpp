#include "unmix/io.hpp"

#include <fstream>
#include <sstream>

namespace unmix {

json rat_to_json(const Rat& r) {
  if (r.is_integer() && r.num().fits_slong_p())
    return json(static_cast<int64_t>(r.num().get_si()));
  return json(r.str());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return Rat::from_string(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

namespace {

json point_to_json(const RatPoint& p) {
  json arr = json::array();
  for (const Rat& c : p) arr.push_back(rat_to_json(c));
  return arr;
}

RatPoint point_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw std::invalid_argument("point has wrong dimension");
  RatPoint p;
  p.reserve(dim);
  for (const auto& c : j) p.push_back(rat_from_json(c));
  return p;
}

}  // namespace

json system_to_json(const SupportSystem& sys) {
  json j;
  j["dim"] = sys.dim;
  json sup = json::array();
  for (const auto& s : sys.supports) {
    json pts = json::array();
    for (const auto& p : s.points) pts.push_back(point_to_json(p));
    sup.push_back(std::move(pts));
  }
  j["supports"] = std::move(sup);
  if (!sys.labels.empty()) j["labels"] = sys.labels;
  return j;
}

SupportSystem system_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("supports"))
    throw std::invalid_argument("system file needs \"dim\" and \"supports\"");
  int dim = j.at("dim").get<int>();
  std::vector<Support> sups;
  for (const auto& sj : j.at("supports")) {
    std::vector<RatPoint> pts;
    for (const auto& pj : sj) pts.push_back(point_from_json(pj, dim));
    sups.emplace_back(dim, std::move(pts));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return SupportSystem(dim, std::move(sups), std::move(labels));
}

json points_to_json(const Support& s) {
  json j;
  j["dim"] = s.dim;
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(point_to_json(p));
  j["points"] = std::move(pts);
  return j;
}

Support points_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("points"))
    throw std::invalid_argument("points file needs \"dim\" and \"points\"");
  int dim = j.at("dim").get<int>();
  std::vector<RatPoint> pts;
  for (const auto& pj : j.at("points")) pts.push_back(point_from_json(pj, dim));
  return Support(dim, std::move(pts));
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "# nodes: " << g.nodes << "\n";
  for (auto [a, b] : g.edges) os << a << " " << b << "\n";
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int max_node = 0;
  int declared_nodes = -1;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    std::string body = (hash == std::string::npos) ? line : line.substr(0, hash);
    if (hash != std::string::npos) {
      auto k = line.find("nodes:");
      if (k != std::string::npos) declared_nodes = std::stoi(line.substr(k + 6));
    }
    std::istringstream ls(body);
    int a, b;
    if (ls >> a >> b) {
      if (a < 0 || b < 0) throw std::invalid_argument("graph: negative node index");
      edges.emplace_back(a, b);
      max_node = std::max({max_node, a, b});
    }
  }
  if (edges.empty()) throw std::invalid_argument("graph: no edges found");
  int nodes = std::max(declared_nodes, max_node + 1);
  return Graph(nodes, std::move(edges));
}

json triangulation_to_json(const Triangulation& t) {
  json j;
  j["seed"] = t.lifting.seed;
  json cells = json::array();
  for (const Cell& c : t.cells) cells.push_back(c.vertex_ids);
  j["cells"] = std::move(cells);
  j["total"] = t.total.str();
  if (t.degenerate) j["degenerate"] = true;
  return j;
}

json report_to_json(const UnmixReport& rep) {
  json j;
  j["all_faces_meet_all_supports"] = rep.all_faces_meet_all;
  j["certified"] = rep.certified;
  j["degenerate"] = rep.degenerate;
  switch (rep.status) {
    case CertifyStatus::Certified: j["status"] = "certified"; break;
    case CertifyStatus::CertifiedDegenerate: j["status"] = "certified-degenerate"; break;
    case CertifyStatus::NotCertified: j["status"] = "not-certified"; break;
  }
  j["face_count"] = rep.face_count;
  j["union_size"] = rep.union_size;
  if (rep.bkk) j["bkk"] = rep.bkk->str();
  json verdicts = json::array();
  for (const FaceVerdict& v : rep.verdicts) {
    json vj;
    vj["face"] = v.face.vertex_ids;
    vj["dim"] = v.face.dim;
    json w = json::array();
    for (const Rat& c : v.face.normal) w.push_back(rat_to_json(c));
    vj["witness_normal"] = std::move(w);
    vj["condition"] = condition_name(v.satisfied_by);
    vj["intersections"] = v.intersections;
    if (v.satisfied_by == Condition::C) {
      vj["support_set"] = v.meeting_supports;
      vj["coord_set"] = v.coord_set;
      vj["projected_dim"] = v.projected_dim;
    }
    verdicts.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

json semimixed_to_json(const SemiMixedReport& rep) {
  json j;
  j["ok"] = rep.ok;
  j["faces_per_group"] = rep.faces_per_group;
  json fails = json::array();
  for (const GroupDiagnostic& d : rep.failures) {
    json f;
    f["group"] = d.group;
    f["face"] = d.face_ids;
    f["unmet_member"] = d.offending_member;
    f["witness_member"] = d.witness_member;
    fails.push_back(std::move(f));
  }
  j["failures"] = std::move(fails);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace unmix
