#include "unmix/generators.hpp"

#include <algorithm>
#include <set>

namespace unmix {

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edge_list)
    : nodes(node_count) {
  if (nodes < 2) throw std::invalid_argument("Graph: need at least 2 nodes");
  std::set<std::pair<int, int>> norm;
  for (auto [a, b] : edge_list) {
    if (a == b) continue;  // loops are implied on every node
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= nodes) throw std::invalid_argument("Graph: edge endpoint out of range");
    norm.emplace(a, b);
  }
  edges.assign(norm.begin(), norm.end());
  bool node0_used = false;
  for (auto [a, b] : edges)
    if (a == 0 || b == 0) node0_used = true;
  if (!node0_used)
    throw std::invalid_argument("Graph: reference node 0 must not be isolated");
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::connected() const {
  std::vector<bool> seen(nodes, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Graph cycle_graph(int nodes) {
  if (nodes < 3) throw std::invalid_argument("cycle_graph: need at least 3 nodes");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < nodes; ++i) e.emplace_back(i, (i + 1) % nodes);
  return Graph(nodes, std::move(e));
}

Graph path_graph(int nodes) {
  if (nodes < 2) throw std::invalid_argument("path_graph: need at least 2 nodes");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < nodes; ++i) e.emplace_back(i, i + 1);
  return Graph(nodes, std::move(e));
}

Graph ieee14() {
  // IEEE 14-bus test system: the standard published 20-branch topology,
  // 0-indexed. Cross-validated against the known volume of its
  // adjacency polytope in the acceptance suite.
  static const std::pair<int, int> branches[] = {
      {0, 1},  {0, 4},  {1, 2},  {1, 3},  {1, 4},   {2, 3},  {3, 4},
      {3, 6},  {3, 8},  {4, 5},  {5, 10}, {5, 11},  {5, 12}, {6, 7},
      {6, 8},  {8, 9},  {8, 13}, {9, 10}, {11, 12}, {12, 13}};
  return Graph(14, {std::begin(branches), std::end(branches)});
}

namespace {

std::vector<long> unit(int dim, int i) {  // e_i with e_0 = 0
  std::vector<long> v(dim, 0);
  if (i > 0) v[i - 1] = 1;
  return v;
}

std::vector<long> diff(int dim, int i, int j) {  // e_i - e_j
  auto v = unit(dim, i);
  if (j > 0) --v[j - 1];
  return v;
}

// (e_i, e_j) in Z^{2n} with e_0 = 0 in both halves.
std::vector<long> pair_point(int n, int i, int j) {
  std::vector<long> v(2 * n, 0);
  if (i > 0) v[i - 1] = 1;
  if (j > 0) v[n + j - 1] = 1;
  return v;
}

void compositions(int total, int parts, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int head = total; head >= 0; --head) {
    cur.push_back(head);
    compositions(total - head, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SupportSystem kuramoto_cycle(int n) {
  if (n < 2) throw std::invalid_argument("kuramoto_cycle: need n >= 2");
  const int N = n + 1;  // oscillators, node 0 eliminated
  std::vector<Support> supports;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    int up = (i + 1) % N;
    int down = (i - 1 + N) % N;
    std::vector<std::vector<long>> pts = {
        std::vector<long>(n, 0), diff(n, i, up),   diff(n, up, i),
        diff(n, i, down),        diff(n, down, i),
    };
    supports.push_back(support_from_ints(n, pts));
    labels.push_back("S" + std::to_string(i));
  }
  return SupportSystem(n, std::move(supports), std::move(labels));
}

SupportSystem noonburg(int n) {
  if (n < 2) throw std::invalid_argument("noonburg: need n >= 2");
  std::vector<Support> supports;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<long>> pts;
    pts.push_back(unit(n, i));
    pts.push_back(std::vector<long>(n, 0));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      auto p = unit(n, i);
      p[j - 1] += 2;
      pts.push_back(std::move(p));
    }
    supports.push_back(support_from_ints(n, pts));
    labels.push_back("S" + std::to_string(i));
  }
  return SupportSystem(n, std::move(supports), std::move(labels));
}

SupportSystem loadflow_supports(const Graph& g, bool include_loops) {
  if (g.nodes < 2) throw std::invalid_argument("loadflow_supports: need >= 2 nodes");
  const int n = g.nodes - 1;
  std::vector<Support> supports;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> nb = g.neighbors(i);
    if (include_loops) nb.push_back(i);
    std::sort(nb.begin(), nb.end());

    std::vector<std::vector<long>> row = {std::vector<long>(2 * n, 0)};
    for (int j : nb) row.push_back(pair_point(n, i, j));
    supports.push_back(support_from_ints(2 * n, row));
    labels.push_back("S" + std::to_string(i));

    std::vector<std::vector<long>> col = {std::vector<long>(2 * n, 0)};
    for (int j : nb) col.push_back(pair_point(n, j, i));
    supports.push_back(support_from_ints(2 * n, col));
    labels.push_back("S" + std::to_string(i) + "'");
  }
  return SupportSystem(2 * n, std::move(supports), std::move(labels));
}

Support adjacency_polytope(const Graph& g, bool include_loops) {
  const int n = g.nodes - 1;
  if (n < 1) throw std::invalid_argument("adjacency_polytope: need >= 2 nodes");
  std::vector<std::vector<long>> pts;
  pts.push_back(std::vector<long>(2 * n, 0));
  for (auto [a, b] : g.edges) {
    pts.push_back(pair_point(n, a, b));
    pts.push_back(pair_point(n, b, a));
  }
  if (include_loops)
    for (int i = 0; i <= n; ++i) pts.push_back(pair_point(n, i, i));
  return support_from_ints(2 * n, pts);
}

bool tensor_params_in_proven_regime(int n, int m, int mprime) {
  return n > 2 && m > 2 && mprime > 2;
}

SupportSystem tensor_eigen_supports(int n, int m, int mprime, bool generalized) {
  if (n < 2 || m < 2 || mprime < 2)
    throw std::invalid_argument("tensor_eigen_supports: parameters must be >= 2");
  const int dim = n + 1;
  const int mbar = mprime - 1;

  std::vector<std::vector<long>> degree_slice;  // {(a, 0) : |a| = m-1}
  {
    std::vector<long> cur;
    std::vector<std::vector<long>> comps;
    compositions(m - 1, n, cur, comps);
    for (auto& a : comps) {
      a.push_back(0);
      degree_slice.push_back(std::move(a));
    }
  }
  std::vector<std::vector<long>> lambda_slice;  // {(a, 1) : |a| = m'-1}
  {
    std::vector<long> cur;
    std::vector<std::vector<long>> comps;
    compositions(mbar, n, cur, comps);
    for (auto& a : comps) {
      a.push_back(1);
      lambda_slice.push_back(std::move(a));
    }
  }

  std::vector<Support> supports;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<long>> pts = degree_slice;
    if (generalized) {
      pts.insert(pts.end(), lambda_slice.begin(), lambda_slice.end());
    } else {
      std::vector<long> spike(dim, 0);
      spike[i - 1] = mbar;
      spike[n] = 1;
      pts.push_back(std::move(spike));
    }
    supports.push_back(support_from_ints(dim, pts));
    labels.push_back((generalized ? "T" : "S") + std::to_string(i));
  }
  std::vector<std::vector<long>> norm_pts;
  for (int i = 1; i <= n; ++i) {
    auto p = unit(n, i);
    p.push_back(0);
    norm_pts.push_back(std::move(p));
  }
  norm_pts.push_back(std::vector<long>(dim, 0));
  {
    std::vector<long> lam(dim, 0);
    lam[n] = 1;
    norm_pts.push_back(std::move(lam));
  }
  supports.push_back(support_from_ints(dim, norm_pts));
  labels.push_back((generalized ? "T" : "S") + std::to_string(n + 1));
  return SupportSystem(dim, std::move(supports), std::move(labels));
}

}  // namespace unmix
