#include "doctest.h"

#include <set>

#include "brion/weak_order.hpp"

using namespace brion;

namespace {
const std::vector<int> kFigureWord = {0, 1, 2, 1, 0, 1, 3, 2, 1, 0};

int doubled_along(const OrbitGraph& G, const std::vector<std::string>& lines) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    int a = G.find(clan_from_one_line(space_base(G.space), lines[i]));
    int b = G.find(clan_from_one_line(space_base(G.space), lines[i + 1]));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    bool hit = false;
    for (int id : G.out_edges[a]) {
      const auto& e = G.edges[id];
      if (e.dst == b && e.gen == kFigureWord[i]) {
        hit = true;
        d += e.doubled;
      }
    }
    CHECK_MESSAGE(hit, lines[i] << " -> " << lines[i + 1]);
  }
  return d;
}
}  // namespace

TEST_CASE("smallest graph") {
  auto sp = make_space(Space::AI, 1);
  auto G = build_graph(sp);
  REQUIRE(G.vertices.size() == 2);
  REQUIRE(G.edges.size() == 1);
  CHECK(G.edges[0].doubled);
  CHECK(G.psi[G.edges[0].src] == Elem::identity(Kind::A, 1));
  CHECK(G.psi[G.edges[0].dst] == Elem(Kind::A, {2, 1}));
  CHECK(monoid_act(G, 1, G.edges[0].dst) == G.edges[0].src);
  CHECK(monoid_act(G, 1, G.dense) == G.dense);
  auto A = atoms_bfs(G);
  CHECK(A.atoms[G.edges[0].dst] == std::map<Elem, int>{{Elem(Kind::A, {2, 1}), 1}});
  CHECK(A.atoms[G.dense] == std::map<Elem, int>{{Elem::identity(Kind::A, 1), 0}});
  auto dot = to_dot(G);
  CHECK(dot.find("style=bold,label=2") != std::string::npos);
}

TEST_CASE("figure paths") {
  auto bi = build_graph(make_space(Space::BI, 5, 4));
  CHECK(doubled_along(bi, {"(1,2,3,4,+,4,3,2,1)", "(1,2,3,+,-,+,3,2,1)", "(1,2,+,3,-,3,+,2,1)",
                           "(1,+,2,3,-,3,2,+,1)", "(1,+,2,3,-,2,3,+,1)", "(1,+,2,2,-,3,3,+,1)",
                           "(1,+,+,-,-,-,+,+,1)", "(+,1,+,-,-,-,+,1,+)", "(+,+,1,-,-,-,1,+,+)",
                           "(+,+,-,1,-,1,-,+,+)", "(+,+,-,-,+,-,-,+,+)"}) == 3);
  auto ci = build_graph(make_space(Space::CI, 4));
  CHECK(doubled_along(ci, {"(1,2,3,4,4,3,2,1)", "(1,2,3,+,-,3,2,1)", "(1,2,+,3,3,-,2,1)",
                           "(1,+,2,3,3,2,-,1)", "(1,+,2,3,2,3,-,1)", "(1,+,2,2,3,3,-,1)",
                           "(1,+,+,-,+,-,-,1)", "(+,1,+,-,+,-,1,-)", "(+,+,1,-,+,1,-,-)",
                           "(+,+,-,1,1,+,-,-)", "(+,+,-,-,+,+,-,-)"}) == 1);
}

TEST_CASE("lambda partitions of the figure word") {
  auto bi = make_space(Space::BI, 5, 4);
  auto ci = make_space(Space::CI, 4);
  auto zs = path_elements(ci, kFigureWord);
  CHECK(zs.back() == Elem(Kind::BC, {-1, -2, -3, -4}));
  CHECK(zs[5] == Elem(Kind::BC, {-2, -1, -3, 4}));
  CHECK(lambda_partition(bi, kFigureWord) == SetPartition{{-4, -1, 0, 1, 4}, {-3, -2}, {2, 3}});
  CHECK(lambda_partition(ci, kFigureWord) == SetPartition{{-4, 4}, {-3, -2}, {-1, 1}, {2, 3}});
  CHECK(lambda_partition(ci, {}).empty());
  CHECK(lift_check(bi, kFigureWord, clan_from_one_line(space_base(bi), "(+,+,-,-,+,-,-,+,+)")));
  CHECK(lift_check(ci, kFigureWord, clan_from_one_line(space_base(ci), "(+,+,-,-,+,+,-,-)")));
  CHECK(!lift_check(ci, kFigureWord, clan_from_one_line(space_base(ci), "(+,+,+,+,-,-,-,-)")));
  CHECK_THROWS(path_elements(ci, {0, 0}));
}

TEST_CASE("theta sets partition the base") {
  auto ci = make_space(Space::CI, 3);
  auto ts = theta_sets(ci, Elem::identity(Kind::BC, 3));
  CHECK(ts.cbar == SetPartition{{-3, 3}, {-2, 2}, {-1, 1}});
  CHECK(ts.sset.empty());
  for (auto& sp : all_spaces(4)) {
    if (sp.type == Space::AI || sp.type == Space::AII) continue;
    auto base = space_base(sp);
    if (sp.type == Space::BI) base.erase(std::find(base.begin(), base.end(), 0));
    for (auto& z : rs_image(sp)) {
      auto t = theta_sets(sp, z);
      if (sp.type == Space::BI) CHECK(std::count(t.sset.begin(), t.sset.end(), 0) == 1);
      std::vector<int> all = t.sset;
      for (auto& b : t.cbar) all.insert(all.end(), b.begin(), b.end());
      all.erase(std::remove(all.begin(), all.end(), 0), all.end());
      std::sort(all.begin(), all.end());
      CHECK_MESSAGE(all == base, sp.label() << " " << z.str());
    }
    // C̄ and S read off every clan in the fiber
    for (auto& g : enumerate_clans(sp)) {
      auto t = theta_sets(sp, rs_map(sp, g));
      SetPartition M;
      for (auto [a, b] : g.matching()) M.push_back({a, b});
      std::sort(M.begin(), M.end());
      CHECK(t.cbar == M);
      auto s = g.plus();
      auto m = g.minus();
      s.insert(s.end(), m.begin(), m.end());
      std::sort(s.begin(), s.end());
      CHECK(t.sset == s);
    }
  }
}

TEST_CASE("conjugation moves C̄ and S as expected") {
  for (auto& sp : all_spaces(4)) {
    if (sp.type == Space::AI || sp.type == Space::AII) continue;
    auto img = rs_image(sp);
    std::set<Elem> in(img.begin(), img.end());
    for (auto& z : img)
      for (int s : generators(sp.kind(), sp.n)) {
        Elem tau = demazure_conjugate(sp.theta(), z, s);
        if (tau == z || !in.count(tau)) continue;
        auto a = theta_sets(sp, z), b = theta_sets(sp, tau);
        auto Cs = gen_cycles(sp.kind(), sp.n, s);
        bool sub = true;
        for (auto& c : Cs)
          if (std::find(a.cbar.begin(), a.cbar.end(), c) == a.cbar.end()) sub = false;
        Elem t = simple(sp.kind(), sp.n, s);
        if (sub) {
          CHECK(tau == compose(z, t));
          CHECK(tau == compose(simple(sp.kind(), sp.n, theta_generator(sp.theta(), sp.kind(), sp.n, s)), z));
          auto S = a.sset;
          for (auto& c : Cs) S.insert(S.end(), c.begin(), c.end());
          std::sort(S.begin(), S.end());
          CHECK(S == b.sset);
          SetPartition rest;
          for (auto& c : a.cbar)
            if (std::find(Cs.begin(), Cs.end(), c) == Cs.end()) rest.push_back(c);
          CHECK(rest == b.cbar);
        } else {
          std::vector<int> img2;
          for (int x : a.sset) img2.push_back(t(x));
          std::sort(img2.begin(), img2.end());
          CHECK_MESSAGE(img2 == b.sset, sp.label() << " " << z.str() << " t" << s);
        }
      }
  }
}

TEST_CASE("graph invariants") {
  for (auto& sp : all_spaces(4)) {
    auto G = build_graph(sp);
    CHECK_MESSAGE(G.unique_in, sp.label());
    REQUIRE(G.dense >= 0);
    CHECK(G.psi[G.dense] == dense_element(sp));
    int sources = 0;
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
      if (G.in_edges[v].empty()) ++sources;
    CHECK_MESSAGE(sources == 1, sp.label());
    CHECK(G.in_edges[G.dense].empty());
    auto A = atoms_bfs(G);
    CHECK_MESSAGE(A.d_consistent, sp.label());
    CHECK_MESSAGE(A.reduced, sp.label());
    for (std::size_t v = 0; v < G.vertices.size(); ++v) CHECK(!A.atoms[v].empty());
    if (sp.n <= 3)
      for (std::size_t v = 0; v < G.vertices.size(); ++v)
        for (int s : generators(sp.kind(), sp.n)) {
          int once = monoid_act(G, s, static_cast<int>(v));
          CHECK(monoid_act(G, s, once) == once);
        }
    // edge_test agrees with the built edge list
    if (sp.n <= 2)
      for (std::size_t b = 0; b < G.vertices.size(); ++b)
        for (std::size_t g = 0; g < G.vertices.size(); ++g)
          for (int s : generators(sp.kind(), sp.n)) {
            bool d = false;
            bool e = edge_test(sp, G.vertices[b], s, G.vertices[g], &d);
            bool listed = false;
            for (int id : G.out_edges[b])
              if (G.edges[id].dst == static_cast<int>(g) && G.edges[id].gen == s) listed = G.edges[id].doubled == d;
            CHECK(e == listed);
          }
  }
}

TEST_CASE("lifting criterion agrees with the graph") {
  for (auto& sp : all_spaces(4)) {
    if (sp.type == Space::AI || sp.type == Space::AII) continue;
    auto G = build_graph(sp);
    auto A = atoms_bfs(G);
    std::unordered_map<Elem, std::set<Elem>, ElemHash> ext;
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
      for (auto& [w, d] : A.atoms[v]) ext[G.psi[v]].insert(w);
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
      for (auto& w : ext[G.psi[v]]) {
        auto word = reduced_word(w);
        bool lifted = A.atoms[v].count(w) > 0;
        CHECK_MESSAGE(lift_check(sp, word, G.vertices[v]) == lifted,
                      sp.label() << " " << G.vertices[v].one_line() << " " << w.str());
      }
  }
}
