#include "brion/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace brion {

void sort_pairs(PairSet& P) {
  std::sort(P.begin(), P.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  P.erase(std::unique(P.begin(), P.end()), P.end());
}

std::string word_str(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

Word dedup(const Word& w) {
  Word out;
  std::set<int> seen;
  for (int x : w)
    if (seen.insert(x).second) out.push_back(x);
  return out;
}

Word assemble(PairSet P, Assemble mode) {
  sort_pairs(P);
  Word w;
  for (auto [a, b] : P) {
    if (mode == Assemble::Des) {
      w.push_back(b);
      w.push_back(a);
    } else {
      w.push_back(a);
      w.push_back(b);
    }
  }
  return dedup(w);
}

PairSet cyc_set(const Elem& z) {
  if (!is_involution(z)) throw std::invalid_argument("cyc_set: not an involution");
  PairSet P;
  const int n = z.size();
  if (z.kind() == Kind::A) {
    for (int a = 1; a <= n; ++a)
      if (a <= z(a)) P.emplace_back(a, z(a));
  } else {
    for (int a = -n; a <= n; ++a) {
      if (a == 0) continue;
      if (std::abs(a) < z(a)) P.emplace_back(a, z(a));
      else if (a > 0 && z(a) == a) P.emplace_back(a, a);
    }
  }
  sort_pairs(P);
  return P;
}

PairSet cyc_set(const Elem& z, const SignedMatching& M) {
  PairSet P = cyc_set(z);
  for (auto [a, b] : M.blocks())
    if (a > 0) P.emplace_back(-b, a);
  sort_pairs(P);
  return P;
}

PairSet twisted_cyc(const Elem& z, const SignedMatching& M) {
  if (z.kind() != Kind::A) throw std::invalid_argument("twisted_cyc: type A only");
  const int N = z.size();
  PairSet P;
  for (auto [a, b] : M.blocks())
    if (a > 0) P.emplace_back(a, b);
  for (int a = 1; a <= N; ++a) {
    int b = N + 1 - z(a);
    if (a > b) P.emplace_back(a, b);
  }
  sort_pairs(P);
  return P;
}

bool is_partial_permutation(const Word& w) {
  std::set<int> s(w.begin(), w.end());
  return s.size() == w.size();
}

NestedDescents nested_descents_by(const Word& w0, const std::function<std::size_t(std::size_t)>& pick) {
  if (!is_partial_permutation(w0)) throw std::invalid_argument("nested descents need distinct letters");
  Word w = w0;
  NestedDescents out;
  while (true) {
    std::vector<std::size_t> des;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) des.push_back(i);
    if (des.empty()) break;
    std::size_t i = des[pick(des.size()) % des.size()];
    out.ndes.emplace_back(w[i], w[i + 1]);
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
  }
  out.nres = w;
  std::sort(out.nres.begin(), out.nres.end());
  sort_pairs(out.ndes);
  return out;
}

NestedDescents nested_descents(const Word& w) {
  return nested_descents_by(w, [](std::size_t) { return std::size_t{0}; });
}

PairSet ndes_pm(const Word& w) {
  auto nd = nested_descents(w);
  PairSet P = nd.ndes;
  std::vector<int> a, b;
  for (int x : nd.nres) (x < 0 ? a : b).push_back(x);
  const std::size_t p = a.size();
  for (std::size_t i = 0; i + 1 < p; i += 2) P.emplace_back(a[i], a[i + 1]);
  if (p % 2 == 1 && !b.empty() && -a[p - 1] > b[0]) P.emplace_back(a[p - 1], b[0]);
  sort_pairs(P);
  return P;
}

bool has_consecutive_321(const Word& w) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] > w[i + 1] && w[i + 1] > w[i + 2]) return true;
  return false;
}

int inv_word(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

int ell0_word(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
}

namespace {
int rank_d0(const Word& w) {
  std::set<int> right;
  for (auto [b, a] : ndes_pm(w)) right.insert(a);
  Word wr, wl;
  for (int x : w) (right.count(x) ? wr : wl).push_back(x);
  Word pm;
  for (auto it = wl.rbegin(); it != wl.rend(); ++it) pm.push_back(-*it);
  pm.insert(pm.end(), wl.begin(), wl.end());
  int twice = inv_word(pm) - ell0_word(w);
  // odd when w_R has an odd number of negative letters; round down
  int half = twice >= 0 ? twice / 2 : -((1 - twice) / 2);
  return half - inv_word(wr);
}
}  // namespace

int rank_d(const Word& w, int k) {
  if (!is_partial_permutation(w)) throw std::invalid_argument("rank_d: repeated letters");
  if (k < 0 || k > static_cast<int>(w.size())) throw std::invalid_argument("rank_d: bad k");
  if (k == 0) return rank_d0(w);
  Word s(w.begin() + k, w.end());
  return rank_d0(s) + ell0_word(s);
}

int rank_nested(const Word& w) {
  std::set<int> right;
  for (auto [b, a] : nested_descents(w).ndes) right.insert(a);
  Word wr, wl;
  for (int x : w) (right.count(x) ? wr : wl).push_back(x);
  return inv_word(wl) - inv_word(wr);
}

int rank_approx(const Word& w, int k) {
  Word sub;
  for (std::size_t i = static_cast<std::size_t>(k) + 1; i < w.size(); i += 2) sub.push_back(w[i]);
  return inv_word(sub);
}

Elem standardize(const Word& w) {
  if (!is_partial_permutation(w)) throw std::invalid_argument("standardize: repeated letters");
  Word s = w;
  std::sort(s.begin(), s.end());
  std::vector<int> v;
  for (int x : w) v.push_back(static_cast<int>(std::lower_bound(s.begin(), s.end(), x) - s.begin()) + 1);
  return Elem(Kind::A, v);
}

std::string WordOrder::name() const {
  switch (kind) {
    case OrderKind::Precsim: return "precsim^" + std::to_string(k);
    case OrderKind::Precapprox: return "precapprox^" + std::to_string(k);
    case OrderKind::PrecsimD: return "precsim_D";
    case OrderKind::LlD: return "ll_D";
    case OrderKind::AIII: return "prec_AIII(k=" + std::to_string(k) + ")";
    case OrderKind::DI: return "precsim_DI(k=" + std::to_string(k) + ")";
  }
  return "?";
}

namespace {

void precsim_up(const Word& w, int k, std::vector<Word>& out) {
  // BCA -> CAB with A<B<C, window start >= k
  for (std::size_t i = static_cast<std::size_t>(k); i + 2 < w.size(); ++i) {
    int B = w[i], C = w[i + 1], A = w[i + 2];
    if (A < B && B < C) {
      Word v = w;
      v[i] = C;
      v[i + 1] = A;
      v[i + 2] = B;
      out.push_back(std::move(v));
    }
  }
}

void precsim_d_up(const Word& w, std::vector<Word>& out) {
  precsim_up(w, 0, out);
  if (w.size() >= 3) {
    int B = -w[0], C = w[1], A = w[2];
    if (A < B && B < C) {
      Word v = w;
      v[0] = -C;
      v[1] = A;
      v[2] = B;
      out.push_back(std::move(v));
    }
  }
}

}  // namespace

std::vector<Word> up_moves(const WordOrder& order, const Word& w) {
  std::vector<Word> out;
  const std::size_t n = w.size();
  switch (order.kind) {
    case OrderKind::Precsim:
      precsim_up(w, order.k, out);
      break;
    case OrderKind::Precapprox:
      // BCAD -> ADBC, window start in k + 2N
      for (std::size_t i = static_cast<std::size_t>(order.k); i + 3 < n; i += 2) {
        int B = w[i], C = w[i + 1], A = w[i + 2], D = w[i + 3];
        if (A < B && B < C && C < D) {
          Word v = w;
          v[i] = A;
          v[i + 1] = D;
          v[i + 2] = B;
          v[i + 3] = C;
          out.push_back(std::move(v));
        }
      }
      break;
    case OrderKind::PrecsimD:
      precsim_d_up(w, out);
      break;
    case OrderKind::LlD:
      precsim_d_up(w, out);
      // u A -B v C -D w' -> u A -D v B -C w'
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 2; j + 1 < n; ++j) {
          int A = w[i], B = -w[i + 1], C = w[j], D = -w[j + 1];
          if (!(0 < std::abs(A) && std::abs(A) < B && B < C && C < D)) continue;
          bool small = true;
          for (std::size_t t = 0; t < j && small; ++t)
            if (t != i && t != i + 1 && std::abs(w[t]) >= B) small = false;
          if (!small) continue;
          Word v = w;
          v[i + 1] = -D;
          v[j] = B;
          v[j + 1] = -C;
          out.push_back(std::move(v));
        }
      break;
    case OrderKind::AIII:
      // u1 B1 B2 v A2 A1 u2 -> u1 B2 B1 v A1 A2 u2, |u1|=|u2|, |v| >= k
      for (std::size_t i = 0; 2 * i + 4 + static_cast<std::size_t>(order.k) <= n; ++i) {
        std::size_t j = n - 2 - i;
        if (w[i] < w[i + 1] && w[j] > w[j + 1]) {
          Word v = w;
          std::swap(v[i], v[i + 1]);
          std::swap(v[j], v[j + 1]);
          out.push_back(std::move(v));
        }
      }
      break;
    case OrderKind::DI: {
      precsim_up(w, order.k, out);
      std::size_t k = static_cast<std::size_t>(order.k);
      if (k < n && 0 < w[k] && w[k] < std::abs(w[0])) {
        Word v = w;
        v[0] = -v[0];
        v[k] = -v[k];
        out.push_back(std::move(v));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> down_moves_precsim(int k, const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = static_cast<std::size_t>(k); i + 2 < w.size(); ++i) {
    int C = w[i], A = w[i + 1], B = w[i + 2];
    if (A < B && B < C) {
      Word v = w;
      v[i] = B;
      v[i + 1] = C;
      v[i + 2] = A;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Word> up_set(const WordOrder& order, const Word& u, const std::function<bool(const Word&)>& keep) {
  std::set<Word> seen{u};
  std::deque<Word> q{u};
  while (!q.empty()) {
    Word w = std::move(q.front());
    q.pop_front();
    for (auto& v : up_moves(order, w)) {
      if (keep && !keep(v)) continue;
      if (seen.insert(v).second) q.push_back(v);
    }
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

bool order_leq(const WordOrder& order, const Word& u, const Word& v) {
  if (u.size() != v.size()) throw std::invalid_argument("order_leq: length mismatch");
  if (u == v) return true;
  std::set<Word> seen{u};
  std::deque<Word> q{u};
  while (!q.empty()) {
    Word w = std::move(q.front());
    q.pop_front();
    for (auto& x : up_moves(order, w)) {
      if (x == v) return true;
      if (seen.insert(x).second) q.push_back(x);
    }
  }
  return false;
}

bool well_nested_check(const std::vector<Word>& E) {
  std::set<Word> S(E.begin(), E.end());
  for (const auto& w : S) {
    if (!is_partial_permutation(w) || has_consecutive_321(w)) return false;
    for (auto& v : up_moves(precsim(0), w))
      if (!S.count(v)) return false;
    for (auto& v : down_moves_precsim(0, w))
      if (!S.count(v)) return false;
  }
  return true;
}

}  // namespace brion
