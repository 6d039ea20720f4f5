#include "brion/matchings.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace brion {

SignedMatching::SignedMatching(std::vector<int> support, const std::vector<std::pair<int, int>>& blocks)
    : support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  for (int x : support_)
    if (x <= 0) throw std::invalid_argument("matching support must be positive");
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
    throw std::invalid_argument("repeated support point");
  std::set<std::pair<int, int>> canon;
  for (auto [a, b] : blocks) {
    if (a > b) std::swap(a, b);
    if (a + b == 0) {
      canon.emplace(-b, b);
    } else if (a < 0 && b < 0) {
      canon.emplace(-b, -a);
    } else if (a > 0 && b > 0) {
      canon.emplace(a, b);
    } else {
      throw std::invalid_argument("block mixes signs; the matching would cross its twin");
    }
  }
  blocks_.assign(canon.begin(), canon.end());
  std::vector<int> seen;
  for (auto [a, b] : blocks_) {
    if (a < 0) seen.push_back(b);
    else {
      seen.push_back(a);
      seen.push_back(b);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (seen != support_) throw std::invalid_argument("matching is not perfect on its support");
}

std::vector<std::pair<int, int>> SignedMatching::all_blocks() const {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : blocks_) {
    out.emplace_back(a, b);
    if (a > 0) out.emplace_back(-b, -a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SignedMatching::triv_set() const {
  std::vector<int> out;
  for (auto [a, b] : blocks_)
    if (a < 0) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

int SignedMatching::triv() const { return static_cast<int>(triv_set().size()); }

int SignedMatching::partner(int x) const {
  for (auto [a, b] : all_blocks()) {
    if (a == x) return b;
    if (b == x) return a;
  }
  throw std::invalid_argument("point not in matching");
}

bool SignedMatching::noncrossing() const {
  auto bl = all_blocks();
  for (auto [a, c] : bl)
    for (auto [b, d] : bl)
      if (a < b && b < c && c < d) return false;
  return true;
}

std::string SignedMatching::str() const {
  std::string s = "{";
  bool first = true;
  for (auto [a, b] : blocks_) {
    if (!first) s += ",";
    first = false;
    if (a < 0) s += "{±" + std::to_string(b) + "}";
    else s += "±{" + std::to_string(a) + "," + std::to_string(b) + "}";
  }
  return s + "}";
}

namespace {
bool triv_ok(int t, TrivRule rule, int k) {
  switch (rule) {
    case TrivRule::Any: return true;
    case TrivRule::Exactly: return t == k;
    case TrivRule::AtLeast: return t >= k;
  }
  return false;
}
}  // namespace

std::vector<SignedMatching> enumerate_ncsp(const std::vector<int>& Xin, TrivRule rule, int k) {
  std::vector<int> X = Xin;
  std::sort(X.begin(), X.end());
  const int m = static_cast<int>(X.size());
  std::vector<SignedMatching> out;
  // scan left to right; a stack of open arcs.  Trivial points only at depth 0.
  std::vector<std::pair<int, int>> blocks;
  std::vector<int> open;
  std::function<void(int, int)> rec = [&](int i, int t) {
    if (i == m) {
      if (open.empty() && triv_ok(t, rule, k)) out.emplace_back(X, blocks);
      return;
    }
    if (static_cast<int>(open.size()) > m - i) return;
    if (open.empty()) {
      blocks.emplace_back(-X[i], X[i]);
      rec(i + 1, t + 1);
      blocks.pop_back();
    }
    open.push_back(X[i]);
    rec(i + 1, t);
    open.pop_back();
    if (!open.empty()) {
      int a = open.back();
      open.pop_back();
      blocks.emplace_back(a, X[i]);
      rec(i + 1, t);
      blocks.pop_back();
      open.push_back(a);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedMatching> enumerate_ncsp_oracle(const std::vector<int>& Xin) {
  std::vector<int> X = Xin;
  std::sort(X.begin(), X.end());
  std::vector<int> pts;
  for (auto it = X.rbegin(); it != X.rend(); ++it) pts.push_back(-*it);
  for (int x : X) pts.push_back(x);
  const int m = static_cast<int>(pts.size());
  std::vector<int> mate(m, -1);
  std::set<SignedMatching> out;
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < m && mate[i] >= 0) ++i;
    if (i == m) {
      // symmetric?
      for (int j = 0; j < m; ++j)
        if (mate[m - 1 - j] != m - 1 - mate[j]) return;
      std::vector<std::pair<int, int>> bl;
      for (int j = 0; j < m; ++j)
        if (mate[j] > j) bl.emplace_back(pts[j], pts[mate[j]]);
      bool cross = false;
      for (auto [a, c] : bl)
        for (auto [b, d] : bl)
          if (a < b && b < c && c < d) cross = true;
      if (cross) return;
      out.insert(SignedMatching(X, bl));
      return;
    }
    for (int j = i + 1; j < m; ++j) {
      if (mate[j] >= 0) continue;
      mate[i] = j;
      mate[j] = i;
      rec();
      mate[i] = mate[j] = -1;
    }
  };
  rec();
  return std::vector<SignedMatching>(out.begin(), out.end());
}

SignedMatching m_min(const std::vector<int>& Xin, int k) {
  std::vector<int> X = Xin;
  std::sort(X.begin(), X.end());
  const int m = static_cast<int>(X.size());
  if (k < 0 || k > m || (m - k) % 2) throw std::invalid_argument("m_min: |X|-k must be even and 0<=k<=|X|");
  std::vector<std::pair<int, int>> bl;
  for (int i = 0; i + 1 < m - k; i += 2) bl.emplace_back(X[i], X[i + 1]);
  for (int i = m - k; i < m; ++i) bl.emplace_back(-X[i], X[i]);
  return SignedMatching(X, bl);
}

std::vector<SignedMatching> lessdot_covers(const SignedMatching& N) {
  const auto& X = N.support();
  const int m = static_cast<int>(X.size());
  auto pos = [&](int x) { return static_cast<int>(std::lower_bound(X.begin(), X.end(), x) - X.begin()); };
  // partner index among positives; -1 for trivial
  std::vector<int> mate(m, -1);
  for (auto [a, b] : N.blocks())
    if (a > 0) {
      mate[pos(a)] = pos(b);
      mate[pos(b)] = pos(a);
    }
  auto covered = [&](int i) {
    for (int a = 0; a < m; ++a)
      if (mate[a] > a && a < i && i < mate[a]) return true;
    return false;
  };
  auto build = [&](const std::vector<int>& mt) {
    std::vector<std::pair<int, int>> bl;
    for (int a = 0; a < m; ++a) {
      if (mt[a] < 0) bl.emplace_back(-X[a], X[a]);
      else if (mt[a] > a) bl.emplace_back(X[a], X[mt[a]]);
    }
    return SignedMatching(X, bl);
  };
  std::set<SignedMatching> out;
  for (int i = 0; i + 1 < m; ++i) {
    int p = mate[i + 1];
    if (p <= i + 1) continue;  // x_{i+1} must open an arc to x_p with p > i+1
    if (mate[i] < 0) {
      auto mt = mate;
      mt[i] = i + 1;
      mt[i + 1] = i;
      mt[p] = -1;
      out.insert(build(mt));
    } else if (mate[i] > p && !covered(i)) {
      int q = mate[i];
      auto mt = mate;
      mt[i] = i + 1;
      mt[i + 1] = i;
      mt[p] = q;
      mt[q] = p;
      out.insert(build(mt));
    }
  }
  return std::vector<SignedMatching>(out.begin(), out.end());
}

int nb_potential(const SignedMatching& M) {
  // nested positive arcs, plus trivial blocks lying left of a positive arc
  int c = 0;
  for (auto [a, d] : M.blocks())
    for (auto [b, e] : M.blocks()) {
      if (b < 0) continue;
      if (a > 0 && a < b && e < d) ++c;
      if (a < 0 && d < b) ++c;
    }
  return c;
}

bool is_gamma_aligned(const SignedMatching& M, const Clan& g) {
  for (int x : M.support())
    if (!g.contains_point(x)) throw std::invalid_argument("matching support outside the clan base");
  for (auto [a, b] : M.blocks()) {
    if (a < 0) continue;
    if ((g.is_plus(a) && g.is_plus(b)) || (g.is_minus(a) && g.is_minus(b))) return false;
  }
  return true;
}

}  // namespace brion
