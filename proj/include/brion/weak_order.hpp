#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "brion/clans.hpp"
#include "brion/coxeter.hpp"

namespace brion {

using Block = std::vector<int>;  // sorted
using SetPartition = std::vector<Block>;

struct ThetaSets {
  SetPartition cbar;       // C̄(z)
  std::vector<int> sset;   // S(z)
};

// C̄(z) and S(z); not for AI/AII
ThetaSets theta_sets(const SymSpace& sp, const Elem& z);

// nontrivial cycles of the simple generator t_i
SetPartition gen_cycles(Kind kind, int rank, int i);

struct Edge {
  int src = 0;
  int gen = 0;
  int dst = 0;
  bool doubled = false;
};

struct OrbitGraph {
  SymSpace space;
  std::vector<Clan> vertices;
  std::vector<Elem> psi;  // ψ per vertex
  std::vector<Edge> edges;
  int dense = -1;
  std::vector<std::vector<int>> in_edges, out_edges;  // edge ids
  std::unordered_map<Clan, int, ClanHash> index;
  bool unique_in = true;  // at most one β →s γ per (γ,s)

  int find(const Clan& g) const;
};

OrbitGraph build_graph(const SymSpace& sp, bool big = false);

// whether β →s γ satisfies the edge conditions; doubled when it does
bool edge_test(const SymSpace& sp, const Clan& beta, int s, const Clan& gamma, bool* doubled = nullptr);

// s·γ as a vertex id
int monoid_act(const OrbitGraph& G, int s, int v);

struct AtomMap {
  std::vector<std::map<Elem, int>> atoms;  // per vertex: atom ↦ d_γ
  std::vector<int> level;                   // path length from dense
  bool d_consistent = true;                 // d_γ independent of path
  bool reduced = true;                      // every path word is reduced
};

AtomMap atoms_bfs(const OrbitGraph& G);

// z^0 = z_dense →s_1 ... →s_m z^m; throws if a step fixes z
std::vector<Elem> path_elements(const SymSpace& sp, const std::vector<int>& word);
SetPartition lambda_partition(const SymSpace& sp, const std::vector<int>& word);
bool lift_check(const SymSpace& sp, const std::vector<int>& word, const Clan& g);

std::string to_dot(const OrbitGraph& G);
std::string gen_name(int i);  // "t1", "t0", "t-1"

}  // namespace brion
