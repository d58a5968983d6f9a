#pragma once

#include <string>

#include "unmix/support.hpp"

namespace unmix {

/// Undirected simple graph; every node additionally carries an implied
/// loop. Node 0 is the fixed reference node of the derived systems.
struct Graph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted

  Graph() = default;
  Graph(int node_count, std::vector<std::pair<int, int>> edge_list);

  std::vector<int> neighbors(int v) const;
  bool connected() const;
};

Graph cycle_graph(int nodes);  // nodes >= 3
Graph path_graph(int nodes);   // nodes >= 2
Graph ieee14();

/// Supports of the synchronization system on a cycle of n+1 oscillators
/// with node 0 eliminated: S_i = {0, e_i - e_i+, e_i+ - e_i, e_i - e_i-,
/// e_i- - e_i} with e_0 = 0 and indices mod n+1.
SupportSystem kuramoto_cycle(int n);

/// S_i = {e_i, 0} union {e_i + 2 e_j : j != i}.
SupportSystem noonburg(int n);

/// 2n supports in Z^2n (n = nodes-1), ordered S_1, S_1', ..., S_n, S_n':
/// S_i = {0} union {(e_i, e_j) : j in N(i)}, S_j' mirrored, with e_0 = 0
/// and N(.) including the implied loop unless disabled.
SupportSystem loadflow_supports(const Graph& g, bool include_loops = true);

/// conv({0} union {(e_i, e_j) : (i,j) edge, both directions, plus loops}).
Support adjacency_polytope(const Graph& g, bool include_loops = true);

/// Tensor eigenpair supports in Z^{n+1} (last coordinate is the lambda
/// degree). Standard: S_i = {((m'-1) e_i, 1)} union {(a,0) : |a| = m-1},
/// plus the normalization support. Generalized: the degree-(m'-1) slice
/// at lambda level 1 is filled in completely and shared by all rows.
SupportSystem tensor_eigen_supports(int n, int m, int mprime, bool generalized);

/// The proofs behind the family guarantees assume n, m, m' > 2; smaller
/// parameters are generated anyway and flagged.
bool tensor_params_in_proven_regime(int n, int m, int mprime);

}  // namespace unmix
