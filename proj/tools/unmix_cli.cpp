// unmix: decide when a mixed volume equals the normalized volume of the
// union hull, and compute it either way.
//
// Subcommands: gen | check | bkk | vol | mv | bench
// Exit codes:  0 success / certified, 3 not certified, 4 input or usage
//              error, 5 resource limit.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "unmix/io.hpp"
#include "unmix/mixedvol.hpp"

using namespace unmix;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 3;
constexpr int kExitInputError = 4;
constexpr int kExitResourceLimit = 5;

struct GlobalOpts {
  uint64_t seed = 0;
  int threads = 0;
  bool json_out = false;
  bool verbose = false;
  size_t face_cap = kDefaultFaceCap;
};

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

json run_envelope(const std::string& command, const std::string& input,
                  uint64_t seed) {
  json j;
  j["command"] = command;
  j["input_hash"] = fnv1a_hex(input);
  j["seed"] = seed;
  j["timings_ms"] = json::object();
  return j;
}

Graph graph_from_spec(const std::string& spec) {
  if (spec == "ieee14") return ieee14();
  if (spec.rfind("cycle:", 0) == 0) return cycle_graph(std::stoi(spec.substr(6)));
  if (spec.rfind("path:", 0) == 0) return path_graph(std::stoi(spec.substr(5)));
  return graph_from_text(read_file(spec));
}

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty() || out_path == "-")
    std::cout << contents << "\n";
  else
    write_file(out_path, contents);
}

int cmd_gen(const GlobalOpts& g, const std::string& family, int n, int m, int mprime,
            bool generalized, const std::string& graph_spec, bool no_loops,
            const std::string& out_path) {
  (void)g;
  if (family == "kuramoto-cycle") {
    emit(out_path, system_to_json(kuramoto_cycle(n)).dump(2));
  } else if (family == "noonburg") {
    emit(out_path, system_to_json(noonburg(n)).dump(2));
  } else if (family == "loadflow") {
    Graph gr = graph_from_spec(graph_spec);
    if (!gr.connected()) std::cerr << "warning: graph is not connected\n";
    emit(out_path, system_to_json(loadflow_supports(gr, !no_loops)).dump(2));
  } else if (family == "adjacency") {
    Graph gr = graph_from_spec(graph_spec);
    if (!gr.connected()) std::cerr << "warning: graph is not connected\n";
    emit(out_path, points_to_json(adjacency_polytope(gr, !no_loops)).dump(2));
  } else if (family == "tensor") {
    if (!tensor_params_in_proven_regime(n, m, mprime))
      std::cerr << "note: parameters outside the proven regime (all > 2)\n";
    emit(out_path, system_to_json(tensor_eigen_supports(n, m, mprime, generalized)).dump(2));
  } else if (family == "graph") {
    emit(out_path, graph_to_text(graph_from_spec(graph_spec)));
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

void print_report_summary(const UnmixReport& rep) {
  std::cout << "union points: " << rep.union_size << ", faces checked: " << rep.face_count
            << "\n";
  std::cout << "every face meets every support: "
            << (rep.all_faces_meet_all ? "yes" : "no") << "\n";
  std::cout << "certified: " << (rep.certified ? "yes" : "no")
            << (rep.degenerate ? " (degenerate: lower-dimensional union)" : "") << "\n";
  size_t failures = 0;
  for (const auto& v : rep.verdicts)
    if (v.satisfied_by == Condition::None) ++failures;
  if (failures) {
    std::cout << failures << " face(s) satisfy no condition; first offenders:\n";
    size_t shown = 0;
    for (const auto& v : rep.verdicts) {
      if (v.satisfied_by != Condition::None) continue;
      std::cout << "  face dim " << v.face.dim << " points {";
      for (size_t i = 0; i < v.face.vertex_ids.size(); ++i)
        std::cout << (i ? "," : "") << v.face.vertex_ids[i];
      std::cout << "} misses:";
      for (size_t i = 0; i < v.intersections.size(); ++i)
        if (v.intersections[i].empty()) std::cout << " S" << i + 1;
      std::cout << "\n";
      if (++shown == 5) break;
    }
  }
}

int cmd_check(const GlobalOpts& g, const std::string& sys_path,
              const std::string& groups) {
  auto t0 = std::chrono::steady_clock::now();
  std::string raw = read_file(sys_path);
  SupportSystem sys = system_from_json(json::parse(raw));
  CertifyOptions opts;
  opts.face_cap = g.face_cap;
  opts.verbose = g.verbose;

  json out = run_envelope("check", raw, g.seed);
  bool ok;
  if (!groups.empty()) {
    Grouping grouping = parse_grouping(groups, sys.size());
    SemiMixedReport rep = check_semimixed(sys, grouping, opts);
    ok = rep.ok;
    out["semimixed"] = semimixed_to_json(rep);
    if (!g.json_out)
      std::cout << "grouped check: " << (ok ? "passed" : "failed") << " ("
                << rep.failures.size() << " failing face/member pairs)\n";
  } else {
    UnmixReport rep = certify_system(sys, opts);
    ok = rep.certified;
    out["report"] = report_to_json(rep);
    if (!g.json_out) print_report_summary(rep);
  }
  out["timings_ms"]["total"] = ms_since(t0);
  if (g.json_out) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitNotCertified;
}

int cmd_bkk(const GlobalOpts& g, const std::string& sys_path, bool with_oracle) {
  auto t0 = std::chrono::steady_clock::now();
  std::string raw = read_file(sys_path);
  SupportSystem sys = system_from_json(json::parse(raw));
  CertifyOptions opts;
  opts.face_cap = g.face_cap;
  opts.verbose = g.verbose;

  json out = run_envelope("bkk", raw, g.seed);
  bool certified = false;
  bool bound_only = false;
  Rat value;
  std::string note;
  try {
    auto tc = std::chrono::steady_clock::now();
    BkkResult res = unmixed_bkk(sys, g.seed, opts);
    out["timings_ms"]["certify_and_volume"] = ms_since(tc);
    certified = res.report.certified;
    bound_only = res.bound_only;
    value = res.value;
    out["report"] = report_to_json(res.report);
  } catch (const resource_limit_error& e) {
    // Certification ran out of budget; the union-hull volume is still a
    // valid monotone upper bound, so report it as a bound.
    note = e.what();
    SupportUnion uni = support_union(sys.supports);
    value = normalized_volume(uni.all, g.seed);
    bound_only = true;
    out["certification_error"] = note;
  }
  out["value"] = value.str();
  out["certified"] = certified;
  out["bound_only"] = bound_only;

  if (with_oracle) {
    auto to = std::chrono::steady_clock::now();
    Rat oracle = mixed_volume(sys, g.seed);
    out["timings_ms"]["oracle"] = ms_since(to);
    out["oracle"] = oracle.str();
    if (!g.json_out)
      std::cout << "oracle mixed volume: " << oracle.str()
                << (oracle == value ? " (equal)" : " (DIFFERS)") << "\n";
  }
  if (!g.json_out) {
    if (certified)
      std::cout << "bkk: " << value.str() << " (certified)\n";
    else
      std::cout << "bkk upper bound: " << value.str() << " (bound only, not certified"
                << (note.empty() ? "" : std::string("; ") + note) << ")\n";
  }
  out["timings_ms"]["total"] = ms_since(t0);
  if (g.json_out) std::cout << out.dump(2) << "\n";
  return certified ? kExitOk : kExitNotCertified;
}

int cmd_vol(const GlobalOpts& g, const std::string& points_path, bool serial) {
  auto t0 = std::chrono::steady_clock::now();
  std::string raw = read_file(points_path);
  json j = json::parse(raw);
  Support s = j.contains("points") ? points_from_json(j)
                                   : support_union(system_from_json(j).supports).all;
  Rat v = normalized_volume(s, g.seed, serial ? Exec::Serial : Exec::Parallel);
  json out = run_envelope("vol", raw, g.seed);
  out["value"] = v.str();
  out["timings_ms"]["total"] = ms_since(t0);
  if (g.json_out)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << v.str() << "\n";
  return kExitOk;
}

int cmd_mv(const GlobalOpts& g, const std::string& sys_path) {
  auto t0 = std::chrono::steady_clock::now();
  std::string raw = read_file(sys_path);
  SupportSystem sys = system_from_json(json::parse(raw));
  Rat v = mixed_volume(sys, g.seed);
  json out = run_envelope("mv", raw, g.seed);
  out["value"] = v.str();
  out["timings_ms"]["total"] = ms_since(t0);
  if (g.json_out)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << v.str() << "\n";
  return kExitOk;
}

int cmd_bench(const GlobalOpts& g, const std::string& name, int n_min, int n_max) {
  auto row = [&](const std::string& label, const Support& s) {
    auto t0 = std::chrono::steady_clock::now();
    Rat serial = normalized_volume(s, g.seed, Exec::Serial);
    double t_serial = ms_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    Rat parallel = normalized_volume(s, g.seed, Exec::Parallel);
    double t_parallel = ms_since(t1);
    if (serial != parallel) throw std::logic_error("bench: serial/parallel mismatch");
    printf("%-12s %12s %10.1fms %10.1fms %8.2fx\n", label.c_str(), serial.str().c_str(),
           t_serial, t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0);
  };
  printf("%-12s %12s %12s %12s %9s\n", "case", "bkk", "serial", "parallel", "speedup");
  if (name == "cycle") {
    for (int N = n_min; N <= n_max; ++N)
      row("cycle-" + std::to_string(N), adjacency_polytope(cycle_graph(N)));
  } else if (name == "ieee14") {
    row("ieee14", adjacency_polytope(ieee14()));
  } else if (name == "kuramoto") {
    for (int N = n_min; N <= n_max; ++N)
      row("kuramoto-" + std::to_string(N),
          support_union(kuramoto_cycle(N).supports).all);
  } else {
    std::cerr << "unknown bench case: " << name << " (use cycle | ieee14 | kuramoto)\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified mixed-volume-to-volume transformations for polytope systems"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("UNMIX_FACE_CAP")) g.face_cap = std::strtoull(env, nullptr, 10);
  app.add_option("--seed", g.seed, "lifting seed (default 0)");
  app.add_option("--threads", g.threads, "worker threads (default: all cores)");
  app.add_flag("--json", g.json_out, "machine-readable JSON output");
  app.add_flag("--verbose", g.verbose, "include passing faces in reports");
  app.add_option("--face-cap", g.face_cap, "face enumeration cap (env UNMIX_FACE_CAP)");

  std::string family, graph_spec, out_path, sys_path, points_path, groups, bench_name;
  int n = 3, m = 3, mprime = 2, n_min = 6, n_max = 10;
  bool generalized = false, no_loops = false, with_oracle = false, serial = false;

  auto* gen = app.add_subcommand("gen", "generate a support system or graph file");
  gen->add_option("family", family,
                  "kuramoto-cycle | noonburg | loadflow | adjacency | tensor | graph")
      ->required();
  gen->add_option("--n", n, "family size parameter");
  gen->add_option("--m", m, "tensor order");
  gen->add_option("--mprime", mprime, "tensor eigenvalue order");
  gen->add_flag("--generalized", generalized, "generalized tensor variant");
  gen->add_option("--graph", graph_spec, "ieee14 | cycle:N | path:N | edge-list file");
  gen->add_flag("--no-loops", no_loops, "drop the implied loop points");
  gen->add_option("--out,-o", out_path, "output path (default stdout)");

  auto* check = app.add_subcommand("check", "run the face conditions on a system file");
  check->add_option("system", sys_path, "system JSON file")->required();
  check->add_option("--groups", groups, "semi-mixed grouping, e.g. \"0,1;2\"");

  auto* bkk = app.add_subcommand("bkk", "certified BKK number of a system file");
  bkk->add_option("system", sys_path, "system JSON file")->required();
  bkk->add_flag("--oracle", with_oracle, "also run the mixed-volume oracle");

  auto* vol = app.add_subcommand("vol", "normalized volume of a point set file");
  vol->add_option("points", points_path, "points JSON file (or system file: union)")
      ->required();
  vol->add_flag("--serial", serial, "use the serial reference engine");

  auto* mv = app.add_subcommand("mv", "mixed volume oracle on a system file");
  mv->add_option("system", sys_path, "system JSON file")->required();

  auto* bench = app.add_subcommand("bench", "volume engine timings, serial vs parallel");
  bench->add_option("case", bench_name, "cycle | ieee14 | kuramoto")->required();
  bench->add_option("--n-min", n_min, "first size");
  bench->add_option("--n-max", n_max, "last size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (g.threads > 0) omp_set_num_threads(g.threads);

  try {
    if (gen->parsed())
      return cmd_gen(g, family, n, m, mprime, generalized, graph_spec, no_loops, out_path);
    if (check->parsed()) return cmd_check(g, sys_path, groups);
    if (bkk->parsed()) return cmd_bkk(g, sys_path, with_oracle);
    if (vol->parsed()) return cmd_vol(g, points_path, serial);
    if (mv->parsed()) return cmd_mv(g, sys_path);
    if (bench->parsed()) return cmd_bench(g, bench_name, n_min, n_max);
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
