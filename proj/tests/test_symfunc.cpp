#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "brion/symfunc.hpp"

using namespace brion;

namespace {

using Ex = IntPolynomial::Exponent;

IntPolynomial elem_e(int k, int m) {
  IntPolynomial p(m);
  if (k < 0) return p;
  Ex e(m, 0);
  std::function<void(int, int)> go = [&](int i, int left) {
    if (left == 0) return p.add_term(e, 1);
    if (i == m) return;
    e[i] = 1;
    go(i + 1, left - 1);
    e[i] = 0;
    go(i + 1, left);
  };
  go(0, k);
  return p;
}

IntPolynomial elem_h(int k, int m) {
  IntPolynomial p(m);
  if (k < 0) return p;
  Ex e(m, 0);
  std::function<void(int, int)> go = [&](int i, int left) {
    if (i == m - 1) {
      e[i] = left;
      p.add_term(e, 1);
      e[i] = 0;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      go(i + 1, left - a);
    }
    e[i] = 0;
  };
  if (m == 0) return k == 0 ? IntPolynomial::constant(0, 1) : p;
  go(0, k);
  return p;
}

IntPolynomial q_row(int r, int m) {
  IntPolynomial p(m);
  if (r < 0) return p;
  for (int a = 0; a <= r; ++a) p += elem_e(a, m) * elem_h(r - a, m);
  return p;
}

IntPolynomial q_two(int r, int s, int m) {
  IntPolynomial p = q_row(r, m) * q_row(s, m);
  for (int i = 1; i <= s; ++i) p += (q_row(r + i, m) * q_row(s - i, m)).scaled(i % 2 ? -2 : 2);
  return p;
}

// Pfaffian of the two-row functions
IntPolynomial q_pfaffian(std::vector<int> lam, int m) {
  if (lam.empty()) return IntPolynomial::constant(m, 1);
  if (lam.size() % 2) lam.push_back(0);
  if (lam.size() == 2) return q_two(lam[0], lam[1], m);
  IntPolynomial out(m);
  for (std::size_t j = 1; j < lam.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < lam.size(); ++k)
      if (k != j) rest.push_back(lam[k]);
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    auto term = q_two(lam[0], lam[j], m) * q_pfaffian(rest, m);
    out += term.scaled(j % 2 ? 1 : -1);
  }
  return out;
}

// marked shifted tableaux: labels 1'<1<2'<2<..., coded 2k-1 (primed) and 2k
IntPolynomial q_tableaux(const std::vector<int>& lam, const std::vector<int>& mu, int m, bool diag_unprimed) {
  if (mu.size() > lam.size()) return IntPolynomial(m);
  for (std::size_t r = 0; r < mu.size(); ++r)
    if (mu[r] > lam[r]) return IntPolynomial(m);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lam.size(); ++r) {
    int lo = r < mu.size() ? mu[r] : 0;
    for (int c = static_cast<int>(r) + lo; c < static_cast<int>(r) + lam[r]; ++c) cells.emplace_back(r, c);
  }
  std::map<std::pair<int, int>, int> label;
  IntPolynomial out(m);
  Ex e(m, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) return out.add_term(e, 1);
    auto [r, c] = cells[i];
    for (int L = 1; L <= 2 * m; ++L) {
      bool primed = L % 2 == 1;
      if (primed && diag_unprimed && r == c) continue;
      auto left = label.find({r, c - 1});
      auto up = label.find({r - 1, c});
      if (left != label.end() && (left->second > L || (primed && left->second == L))) continue;
      if (up != label.end() && (up->second > L || (!primed && up->second == L))) continue;
      label[{r, c}] = L;
      ++e[(L - 1) / 2];
      go(i + 1);
      --e[(L - 1) / 2];
      label.erase({r, c});
    }
  };
  go(0);
  return out;
}

std::vector<std::vector<int>> strict_partitions(int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int left, int maxp) {
    if (left == 0) return out.push_back(cur);
    for (int a = std::min(left, maxp); a >= 1; --a) {
      cur.push_back(a);
      go(left - a, a - 1);
      cur.pop_back();
    }
  };
  go(size, size);
  return out;
}

// sequence embeddings of a factor into a letter sequence
long long embeddings(const Word& f, const std::vector<int>& seq) {
  std::vector<long long> ways(f.size() + 1, 0);
  ways[0] = 1;
  for (int s : seq)
    for (std::size_t k = f.size(); k >= 1; --k)
      if (f[k - 1] == s) ways[k] += ways[k - 1];
  return ways[f.size()];
}

long long unimodal_weight(const Word& f) {
  if (f.empty()) return 1;
  std::size_t k = 0;
  while (k + 1 < f.size() && f[k + 1] < f[k]) ++k;
  for (std::size_t j = k; j + 1 < f.size(); ++j)
    if (f[j + 1] <= f[j]) return 0;
  return 2;
}

// Σ over reduced words (read left to right) and splits into m consecutive factors
IntPolynomial stanley_words(const Elem& w, int m, const std::function<long long(const Word&)>& weight) {
  IntPolynomial out(m);
  for (auto word : reduced_words(w)) {
    std::reverse(word.begin(), word.end());
    Ex e(m, 0);
    std::function<void(std::size_t, int, long long)> go = [&](std::size_t pos, int var, long long acc) {
      if (var == m - 1) {
        Word f(word.begin() + pos, word.end());
        long long wt = weight(f);
        if (wt) {
          e[var] = static_cast<int>(f.size());
          out.add_term(e, acc * wt);
          e[var] = 0;
        }
        return;
      }
      for (std::size_t end = pos; end <= word.size(); ++end) {
        Word f(word.begin() + pos, word.begin() + end);
        long long wt = weight(f);
        if (!wt) continue;
        e[var] = static_cast<int>(end - pos);
        go(end, var + 1, acc * wt);
        e[var] = 0;
      }
    };
    go(0, 0, 1);
  }
  return out;
}

std::vector<int> seq_a(int n) {
  std::vector<int> s;
  for (int i = n; i >= 1; --i) s.push_back(i);
  return s;
}

std::vector<int> seq_b(int n) {
  std::vector<int> s;
  for (int i = n - 1; i >= 1; --i) s.push_back(i);
  s.push_back(0);
  for (int i = 1; i < n; ++i) s.push_back(i);
  return s;
}

std::vector<int> seq_d(int n) {
  std::vector<int> s;
  for (int i = n - 1; i >= 2; --i) s.push_back(i);
  s.push_back(1);
  s.push_back(-1);
  for (int i = 2; i < n; ++i) s.push_back(i);
  return s;
}

}  // namespace

TEST_CASE("symfunc: polynomial basics") {
  auto x1 = IntPolynomial::variable(2, 1), x2 = IntPolynomial::variable(2, 2);
  auto p = (x1 + x2) * (x1 + x2);
  CHECK(p.coeff({1, 1}) == 2);
  CHECK(p.str() == "x2^2 + 2 * x1 x2 + x1^2");
  CHECK(p.is_symmetric());
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial(3).str() == "0");
  CHECK(p.divided_difference(1) == IntPolynomial(2));
  CHECK((x1 * x1).divided_difference(1) == x1 + x2);
  CHECK_THROWS_AS(p.divided_exact(4), std::domain_error);
  CHECK(p.scaled(2).divided_exact(2) == p);
  CHECK(p.with_vars(3).last_var_zero() == p);
  CHECK_THROWS(p.with_vars(1));
  auto big = IntPolynomial::constant(1, 1LL << 62);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("symfunc: strict partitions") {
  CHECK_THROWS(StrictPartition({2, 2}));
  CHECK_THROWS(StrictPartition({1, 0}));
  auto d = StrictPartition::staircase(4);
  CHECK(d.str() == "(4,3,2,1)");
  CHECK(d.ominus(2).str() == "(4,3,1)");
  CHECK_THROWS(d.ominus(5));
  CHECK(StrictPartition({3, 1}).plus_delta().str() == "(5,2)");
  CHECK(StrictPartition().str() == "()");
}

TEST_CASE("symfunc: Schur Q, P, S") {
  CHECK(schur_qps(SchurKind::Q, StrictPartition(), std::nullopt, 3) == IntPolynomial::constant(3, 1));
  auto q1 = schur_qps(SchurKind::Q, StrictPartition({1}), std::nullopt, 2);
  CHECK(q1.str() == "2 * x2 + 2 * x1");
  for (int size = 0; size <= 6; ++size)
    for (auto& lam : strict_partitions(size)) {
      CAPTURE(size);
      StrictPartition L(lam);
      for (int m = 1; m <= 4; ++m) {
        auto Q = schur_qps(SchurKind::Q, L, std::nullopt, m);
        CHECK(Q == q_pfaffian(lam, m));
        CHECK(schur_qps(SchurKind::P, L, std::nullopt, m).pow2_scaled(L.length()) == Q);
        CHECK(Q.is_symmetric());
        if (m > 1) CHECK(Q.last_var_zero() == schur_qps(SchurKind::Q, L, std::nullopt, m - 1));
      }
    }
}

TEST_CASE("symfunc: skew Q and P against marked tableaux") {
  for (int size = 1; size <= 5; ++size)
    for (auto& lam : strict_partitions(size))
      for (int msize = 0; msize < size; ++msize)
        for (auto& mu : strict_partitions(msize)) {
          for (int m = 1; m <= 3; ++m) {
            StrictPartition L(lam), M(mu);
            CAPTURE(L.str());
            CAPTURE(M.str());
            CHECK(schur_qps(SchurKind::Q, L, M, m) == q_tableaux(lam, mu, m, false));
          }
        }
  for (auto& lam : strict_partitions(5))
    CHECK(schur_qps(SchurKind::P, StrictPartition(lam), std::nullopt, 3) == q_tableaux(lam, {}, 3, true));
  // S_(1) = Q_{(2)/(1)}
  CHECK(schur_qps(SchurKind::S, StrictPartition({1}), std::nullopt, 2) ==
        schur_qps(SchurKind::Q, StrictPartition({2}), StrictPartition({1}), 2));
  CHECK(schur_qps(SchurKind::S, StrictPartition({2, 1}), std::nullopt, 3).is_symmetric());
  CHECK_THROWS(schur_qps(SchurKind::P, StrictPartition({2}), StrictPartition({1}), 2));
}

TEST_CASE("symfunc: Stanley type A") {
  for (int m = 1; m <= 4; ++m) {
    auto f = stanley(StanleyType::A, simple(Kind::A, 3, 1), m);
    IntPolynomial sum(m);
    for (int i = 1; i <= m; ++i) sum += IntPolynomial::variable(m, i);
    CHECK(f == sum);
  }
  for (int n = 1; n <= 3; ++n)
    for (auto& w : enumerate_group(Kind::A, n))
      for (int m = 1; m <= 3; ++m) {
        CAPTURE(w.str());
        auto seq = seq_a(n);
        auto f = stanley(StanleyType::A, w, m);
        CHECK(f == stanley_words(w, m, [&](const Word& fac) { return embeddings(fac, seq); }));
        CHECK(f.is_symmetric());
      }
}

TEST_CASE("symfunc: Stanley types B, C, D against factorizations") {
  for (int n = 1; n <= 3; ++n)
    for (auto& w : enumerate_group(Kind::BC, n))
      for (int m = 1; m <= 3; ++m) {
        CAPTURE(w.str());
        auto seq = seq_b(n);
        auto fb = stanley(StanleyType::B, w, m);
        auto fc = stanley(StanleyType::C, w, m);
        CHECK(fb == stanley_words(w, m, [&](const Word& fac) { return embeddings(fac, seq); }));
        CHECK(fc == stanley_words(w, m, unimodal_weight));
        CHECK(fc == fb.pow2_scaled(ell0(w)));
        CHECK(fc.is_symmetric());
      }
  for (int n = 2; n <= 4; ++n)
    for (auto& w : enumerate_group(Kind::D, n)) {
      if (length(w) > 6) continue;
      CAPTURE(w.str());
      auto seq = seq_d(n);
      auto fd = stanley(StanleyType::D, w, 3);
      CHECK(fd == stanley_words(w, 3, [&](const Word& fac) { return embeddings(fac, seq); }));
      CHECK(fd.is_symmetric());
      CHECK(fd.last_var_zero() == stanley(StanleyType::D, w, 2));
    }
}

TEST_CASE("symfunc: Stanley identity, bounds and sums") {
  for (auto t : {StanleyType::A, StanleyType::B, StanleyType::C, StanleyType::D}) {
    Kind k = t == StanleyType::A ? Kind::A : t == StanleyType::D ? Kind::D : Kind::BC;
    CHECK(stanley(t, Elem::identity(k, 3), 4) == IntPolynomial::constant(4, 1));
  }
  CHECK_THROWS(stanley(StanleyType::A, Elem::identity(Kind::BC, 2), 2));
  CHECK_THROWS(stanley(StanleyType::A, Elem::identity(Kind::A, 2), kMaxVars + 1));
  auto ws = enumerate_group(Kind::A, 2);
  IntPolynomial total(3);
  for (auto& w : ws) total += stanley(StanleyType::A, w, 3);
  CHECK(stanley_sum(StanleyType::A, ws, 3) == total);
}

TEST_CASE("symfunc: Schubert polynomials") {
  CHECK(schubert_A(Elem::identity(Kind::A, 2)) == IntPolynomial::constant(2, 1));
  CHECK(schubert_A(w0(Kind::A, 2)).str() == "x1^2 x2");
  CHECK(schubert_A(simple(Kind::A, 2, 1)).str() == "x1");
  CHECK(schubert_A(Elem(Kind::A, {1, 3, 2})).str() == "x2 + x1");
  CHECK(schubert_A(Elem(Kind::A, {3, 1, 2})).str() == "x1^2");
  CHECK_THROWS(schubert_A(Elem::identity(Kind::BC, 2)));
  for (auto& w : enumerate_group(Kind::A, 3)) {
    auto s = schubert_A(w);
    CAPTURE(w.str());
    CHECK(s.nonnegative());
    CHECK(s.degree() == (length(w) ? length(w) : 0));
    for (int i = 1; i <= 3; ++i) {
      auto d = s.with_vars(4).divided_difference(i);
      if (right_descent(w, i)) CHECK(d == schubert_A(right_mul(w, i)).with_vars(4));
      else CHECK(d.is_zero());
    }
  }
}

TEST_CASE("symfunc: statistics") {
  CHECK(kappa(Elem::identity(Kind::A, 3)) == 0);
  CHECK(kappa(Elem(Kind::A, {3, 2, 1})) == 1);
  CHECK(nu(Elem(Kind::BC, {-1, 3, 2})) == 1);
  CHECK(kappa(Elem(Kind::BC, {-1, 3, 2})) == 2);
  CHECK(delta_d(Elem(Kind::D, {-1, -2})) == 1);
  CHECK_THROWS(delta_d(Elem::identity(Kind::BC, 2)));
  for (int n = 2; n <= 4; ++n)
    for (auto& z : twisted_involutions(Theta::Diamond, Kind::D, n)) CHECK_NOTHROW(delta_diamond(z));
  auto st = inv_stats(Elem(Kind::D, {-1, -2}));
  REQUIRE(st.delta);
  CHECK(*st.delta == 1);
  CHECK_FALSE(inv_stats(Elem::identity(Kind::A, 2)).delta);
}

TEST_CASE("symfunc: involution functions") {
  for (auto name : {"AI", "AII", "AIII", "BI", "CI", "CII", "DI", "DII", "DIII"})
    CHECK(flavor_name(parse_flavor(name)) == std::string(name));
  CHECK_THROWS(parse_flavor("EI"));
  // one atom: the single fixed-point-free base
  auto base = fpf_base(Kind::A, 3, 1);
  CHECK(flavor_atoms(Flavor::AII, base).size() == 1);
  CHECK(inv_schubert_stanley(Flavor::AII, base, 3, Level::Stanley) == IntPolynomial::constant(3, 1));
  auto z = Elem(Kind::A, {2, 1, 3});
  CHECK(inv_schubert_stanley(Flavor::AI, z, 2, Level::Schubert).str() == "2 * x1");
  CHECK_THROWS_AS(flavor_atoms(Flavor::AII, z), std::domain_error);
  CHECK_THROWS(inv_schubert_stanley(Flavor::BI, Elem::identity(Kind::BC, 2), 2, Level::Schubert));
  CHECK_FALSE(in_flavor_domain(Flavor::DI, Elem::identity(Kind::BC, 2)));
  // Schubert level stabilizes to the Stanley level under 1^N x w
  for (auto fl : {Flavor::AI, Flavor::AIII})
    for (auto& v : twisted_involutions(fl == Flavor::AI ? Theta::Id : Theta::Star, Kind::A, 2)) {
      if (!in_flavor_domain(fl, v)) continue;
      auto f = inv_schubert_stanley(fl, v, 3, Level::Stanley);
      CHECK(f.is_symmetric());
      CHECK(f.last_var_zero() == inv_schubert_stanley(fl, v, 2, Level::Stanley));
    }
  for (auto fl : {Flavor::BI, Flavor::CI, Flavor::CII})
    for (auto& v : twisted_involutions(Theta::Id, Kind::BC, 3)) {
      if (!in_flavor_domain(fl, v)) continue;
      CAPTURE(v.str());
      auto f = inv_schubert_stanley(fl, v, 3, Level::Stanley);
      CHECK(f.is_symmetric());
      CHECK(f.nonnegative());
    }
  for (auto fl : {Flavor::DI, Flavor::DII, Flavor::DIII})
    for (auto th : {Theta::Id, Theta::Diamond})
      for (auto& v : twisted_involutions(th, Kind::D, 3)) {
        if (!in_flavor_domain(fl, v)) continue;
        CAPTURE(v.str());
        auto f = inv_schubert_stanley(fl, v, 3, Level::Stanley);
        CHECK(f.is_symmetric());
        CHECK(f.last_var_zero() == inv_schubert_stanley(fl, v, 2, Level::Stanley));
      }
}

TEST_CASE("symfunc: w0 theorem") {
  for (int n = 1; n <= 4; ++n)
    for (char part : {'a', 'b', 'c'}) {
      auto r = theorem_w0(part, n, 5);
      CAPTURE(r.statement);
      CAPTURE(n);
      if (part == 'b' && n % 2 == 0) {
        CHECK_FALSE(r.applicable);
        continue;
      }
      CHECK(r.applicable);
      CHECK(r.equal);
      CHECK(!r.lhs.is_zero());
    }
  for (int n = 1; n <= 3; ++n) {
    auto r = theorem_w0('d', n, 5);
    CAPTURE(r.statement);
    CHECK(r.equal);
  }
  CHECK(theorem_w0('a', 2, 4).rhs == schur_qps(SchurKind::Q, StrictPartition({2}), std::nullopt, 4));
  CHECK_THROWS(theorem_w0('e', 2, 3));
  CHECK_THROWS(theorem_w0('a', 0, 3));
}

TEST_CASE("symfunc: conjecture reports run") {
  CHECK(conjecture_ids().size() == 8);
  for (auto& id : conjecture_ids())
    for (int n = 1; n <= 3; ++n) {
      auto r = conjecture_report(id, n, 3);
      CHECK(r.id == id);
      if (!r.applicable) CHECK(!r.note.empty());
      else CHECK(!r.statement.empty());
    }
  CHECK_FALSE(conjecture_report("DI-w0", 1, 3).applicable);
  CHECK_FALSE(conjecture_report("BI-ups", 1, 3).applicable);
  auto bi = conjecture_report("BI-ups", 2, 3);
  CHECK(bi.applicable);
  CHECK(bi.companion.has_value());
  CHECK_THROWS(conjecture_report("nope", 2, 3));
  CHECK_THROWS(conjecture_report("CII-w0", 9, 3));
}
