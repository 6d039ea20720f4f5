#include "brion/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "brion/parallel.hpp"

namespace brion {

namespace {

bool single_param(Space t) { return t == Space::AI || t == Space::AII; }

Elem y_of(const SymSpace& sp, const Elem& z) {
  if (sp.type == Space::DII || sp.type == Space::DIV) return t0_left(z);
  return z.kind() == Kind::D ? with_kind(z, Kind::BC) : z;
}

bool fixes(const Elem& z, int a) { return z(a) == a; }

std::pair<int, int> forbidden_pair(int i) {
  if (i == 0) return {0, 1};
  if (i == -1) return {-1, 2};
  return {i, i + 1};
}

bool is_sub(const SetPartition& small, const SetPartition& big) {
  for (auto& b : small)
    if (std::find(big.begin(), big.end(), b) == big.end()) return false;
  return true;
}

bool doubled_rule(const SymSpace& sp, const Elem& zb, int s) {
  const int a = std::abs(s), b = std::abs(s) + 1;
  switch (sp.type) {
    case Space::AI:
    case Space::BI:
    case Space::CI:
    case Space::DI:
      if (s != 0) return fixes(zb, a) && fixes(zb, b);
      return sp.type == Space::BI && fixes(zb, 1);
    case Space::DII: {
      Elem y = t0_left(zb);
      return fixes(y, a) && fixes(y, b);
    }
    default: return false;
  }
}

// conditions (b)/(c) given (a) already holds
bool clan_conditions(const SymSpace& sp, const Clan& beta, int s, const Clan& gamma) {
  const Kind kind = sp.kind();
  const Elem t = simple(kind, sp.n, s);
  auto Cs = gen_cycles(kind, sp.n, s);
  auto M = beta.matching();
  bool in_m = true;
  for (auto& c : Cs)
    if (std::find(M.begin(), M.end(), std::make_pair(c[0], c[1])) == M.end()) in_m = false;
  if (!in_m) {
    for (bool plus : {true, false}) {
      auto X = plus ? beta.plus() : beta.minus();
      auto Y = plus ? gamma.plus() : gamma.minus();
      std::vector<int> img;
      for (int x : X) img.push_back(t(x));
      // t_{-1} swaps the sign of the pair it moves
      if (s != -1)
        for (std::size_t j = 0; j + 1 < img.size(); ++j)
          if (img[j] > img[j + 1]) return false;
      std::sort(img.begin(), img.end());
      if (img != Y) return false;
    }
    return true;
  }
  std::vector<std::pair<int, int>> rest;
  for (auto& p : M) {
    bool drop = false;
    for (auto& c : Cs)
      if (p == std::make_pair(c[0], c[1])) drop = true;
    if (!drop) rest.push_back(p);
  }
  if (gamma.matching() != rest) return false;
  Clan b = (sp.type == Space::BI && s == 0) ? toggle(beta, {0}) : beta;
  if (!contains(b, gamma)) return false;
  auto [x, y] = forbidden_pair(s);
  if (gamma.is_plus(x) && gamma.is_plus(y)) return false;
  if (gamma.is_minus(x) && gamma.is_minus(y)) return false;
  return true;
}

}  // namespace

SetPartition gen_cycles(Kind kind, int rank, int i) { return cycles(simple(kind, rank, i)); }

ThetaSets theta_sets(const SymSpace& sp, const Elem& z) {
  if (single_param(sp.type)) throw std::invalid_argument("theta_sets: not defined for AI/AII");
  if (!in_rs_image(sp, z)) throw std::invalid_argument("theta_sets: z outside the image for " + sp.label());
  ThetaSets out;
  if (sp.type == Space::AIII) {
    out.cbar = cycles(compose(w0(Kind::A, sp.n), z));
    for (int i = 1; i <= sp.n + 1; ++i)
      if (z(i) == sp.n + 2 - i) out.sset.push_back(i);
    return out;
  }
  Elem y = y_of(sp, z);
  out.cbar = cycles(bar(y));
  for (int i = -sp.n; i <= sp.n; ++i)
    if (i != 0 && y(i) == -i) out.sset.push_back(i);
  if (sp.type == Space::BI) out.sset.push_back(0);
  std::sort(out.sset.begin(), out.sset.end());
  return out;
}

bool edge_test(const SymSpace& sp, const Clan& beta, int s, const Clan& gamma, bool* doubled) {
  Elem zb = rs_map(sp, beta), zg = rs_map(sp, gamma);
  Elem tau = demazure_conjugate(sp.theta(), zb, s);
  if (tau == zb || tau != zg) return false;
  if (!single_param(sp.type) && !clan_conditions(sp, beta, s, gamma)) return false;
  if (doubled) *doubled = doubled_rule(sp, zb, s);
  return true;
}

int OrbitGraph::find(const Clan& g) const {
  auto it = index.find(g);
  return it == index.end() ? -1 : it->second;
}

OrbitGraph build_graph(const SymSpace& sp, bool big) {
  OrbitGraph G;
  G.space = sp;
  G.vertices = enumerate_clans(sp, big);
  const int V = static_cast<int>(G.vertices.size());
  std::unordered_map<Elem, std::vector<int>, ElemHash> fiber;
  for (int v = 0; v < V; ++v) {
    G.index[G.vertices[v]] = v;
    G.psi.push_back(rs_map(sp, G.vertices[v]));
    fiber[G.psi[v]].push_back(v);
  }
  const auto gens = generators(sp.kind(), sp.n);
  std::vector<std::vector<Edge>> found(V);
  parallel_for(static_cast<std::size_t>(V), [&](std::size_t bi) {
    const int b = static_cast<int>(bi);
    for (int s : gens) {
      Elem tau = demazure_conjugate(sp.theta(), G.psi[b], s);
      if (tau == G.psi[b]) continue;
      auto it = fiber.find(tau);
      if (it == fiber.end()) continue;
      for (int g : it->second) {
        if (!single_param(sp.type) && !clan_conditions(sp, G.vertices[b], s, G.vertices[g])) continue;
        found[bi].push_back({b, s, g, doubled_rule(sp, G.psi[b], s)});
      }
    }
  });
  G.in_edges.assign(V, {});
  G.out_edges.assign(V, {});
  for (auto& list : found)
    for (auto& e : list) {
      int id = static_cast<int>(G.edges.size());
      G.edges.push_back(e);
      G.out_edges[e.src].push_back(id);
      G.in_edges[e.dst].push_back(id);
    }
  for (int v = 0; v < V; ++v) {
    std::set<int> seen;
    for (int id : G.in_edges[v])
      if (!seen.insert(G.edges[id].gen).second) G.unique_in = false;
  }
  G.dense = G.find(dense_clan(sp));
  return G;
}

int monoid_act(const OrbitGraph& G, int s, int v) {
  for (int id : G.in_edges.at(v))
    if (G.edges[id].gen == s) return G.edges[id].src;
  return v;
}

AtomMap atoms_bfs(const OrbitGraph& G) {
  const int V = static_cast<int>(G.vertices.size());
  AtomMap out;
  out.atoms.assign(V, {});
  out.level.assign(V, -1);
  if (G.dense < 0) throw std::logic_error("atoms_bfs: no dense vertex");
  std::vector<int> order{G.dense};
  out.level[G.dense] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int id : G.out_edges[order[h]]) {
      int d = G.edges[id].dst;
      if (out.level[d] < 0) {
        out.level[d] = out.level[order[h]] + 1;
        order.push_back(d);
      }
    }
  const Kind kind = G.space.kind();
  out.atoms[G.dense][Elem::identity(kind, G.space.n)] = 0;
  for (int v : order) {
    if (v == G.dense) continue;
    auto& here = out.atoms[v];
    for (int id : G.in_edges[v]) {
      const Edge& e = G.edges[id];
      if (out.level[e.src] != out.level[v] - 1) out.reduced = false;
      for (auto& [w, d] : out.atoms[e.src]) {
        Elem x = left_mul(e.gen, w);
        int dx = d + (e.doubled ? 1 : 0);
        if (length(x) != out.level[v]) out.reduced = false;
        auto [it, fresh] = here.emplace(x, dx);
        if (!fresh && it->second != dx) out.d_consistent = false;
      }
    }
  }
  return out;
}

std::vector<Elem> path_elements(const SymSpace& sp, const std::vector<int>& word) {
  std::vector<Elem> zs{dense_element(sp)};
  for (int s : word) {
    if (!valid_generator(sp.kind(), sp.n, s)) throw std::invalid_argument("path: bad generator");
    Elem t = demazure_conjugate(sp.theta(), zs.back(), s);
    if (t == zs.back()) throw std::invalid_argument("path: step " + gen_name(s) + " fixes " + t.str());
    zs.push_back(t);
  }
  return zs;
}

SetPartition lambda_partition(const SymSpace& sp, const std::vector<int>& word) {
  if (single_param(sp.type)) throw std::invalid_argument("lambda_partition: not defined for AI/AII");
  auto zs = path_elements(sp, word);
  const Kind kind = sp.kind();
  const int m = static_cast<int>(word.size());
  // suffix products v_i = s_m ... s_{i+1}
  std::vector<Elem> v(m + 1, Elem::identity(kind, sp.n));
  for (int i = m - 1; i >= 0; --i) v[i] = compose(v[i + 1], simple(kind, sp.n, word[i]));
  SetPartition out;
  for (int i = 1; i <= m; ++i) {
    auto Cs = gen_cycles(kind, sp.n, word[i - 1]);
    if (!is_sub(Cs, theta_sets(sp, zs[i - 1]).cbar)) continue;
    for (auto& c : Cs) {
      Block b;
      for (int a : c) b.push_back(v[i](a));
      std::sort(b.begin(), b.end());
      out.push_back(b);
    }
  }
  if (sp.type == Space::BI) {
    Block merged{0};
    SetPartition rest;
    for (auto& b : out) {
      if (b.size() == 2 && b[0] + b[1] == 0) merged.insert(merged.end(), b.begin(), b.end());
      else rest.push_back(b);
    }
    std::sort(merged.begin(), merged.end());
    if (merged.size() > 1) rest.push_back(merged);
    out = rest;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool lift_check(const SymSpace& sp, const std::vector<int>& word, const Clan& g) {
  auto zs = path_elements(sp, word);
  if (rs_map(sp, g) != zs.back()) throw std::invalid_argument("lift_check: endpoint mismatch");
  for (auto& b : lambda_partition(sp, word))
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      int a = b[j], c = b[j + 1];
      int plus = g.is_plus(a) + g.is_plus(c), minus = g.is_minus(a) + g.is_minus(c);
      if (plus != 1 || minus != 1) return false;
    }
  return true;
}

std::string gen_name(int i) { return "t" + std::to_string(i); }

std::string to_dot(const OrbitGraph& G) {
  std::ostringstream os;
  os << "digraph weak_order {\n  label=\"" << G.space.label() << "\";\n";
  for (std::size_t v = 0; v < G.vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << index_label(G.space, G.vertices[v]) << "\"];\n";
  for (auto& e : G.edges) {
    os << "  v" << e.src << " -> v" << e.dst;
    if (e.doubled) os << " [style=bold,label=2,xlabel=\"" << gen_name(e.gen) << "\"]";
    else os << " [label=\"" << gen_name(e.gen) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace brion
