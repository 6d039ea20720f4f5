#include "brion/brion.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace brion {

namespace {

bool single_param(Space t) { return t == Space::AI || t == Space::AII; }

std::mutex cache_mu;

using AtomTable = std::unordered_map<Elem, std::vector<Elem>, ElemHash>;

const AtomTable& atom_table(const SymSpace& sp) {
  static std::map<std::string, AtomTable> cache;
  const std::string key = sp.label();
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  AtomTable t = e_theta_all(sp.theta(), atom_base(sp));
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(key, std::move(t)).first->second;
}

Word suffix(const Word& w, int k) { return Word(w.begin() + k, w.end()); }

int count_below(const Elem& y, int lo, int hi, bool positive_only) {
  int c = 0;
  for (int i = lo; i <= hi; ++i) {
    if (i == 0) continue;
    if (positive_only && y(i) <= 0) continue;
    if (y(i) < i) ++c;
  }
  return c;
}

bool even_negatives(const Word& w) {
  return std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }) % 2 == 0;
}

}  // namespace

std::unordered_map<Elem, int, ElemHash> twisted_lengths(Theta th, Kind kind, int rank) {
  static std::map<std::tuple<Theta, Kind, int>, std::unordered_map<Elem, int, ElemHash>> cache;
  const auto key = std::make_tuple(th, kind, rank);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::unordered_map<Elem, int, ElemHash> out;
  std::vector<Elem> layer{Elem::identity(kind, rank)};
  out[layer[0]] = 0;
  const auto gens = generators(kind, rank);
  for (int level = 1; !layer.empty(); ++level) {
    std::vector<Elem> next;
    for (auto& v : layer)
      for (int s : gens) {
        Elem u = demazure_conjugate(th, v, s);
        if (u != v && out.emplace(u, level).second) next.push_back(u);
      }
    layer.swap(next);
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  cache.emplace(key, out);
  return out;
}

std::unordered_map<Elem, std::vector<Elem>, ElemHash> e_theta_all(Theta th, const Elem& y) {
  if (!is_twisted_involution(th, y)) throw std::invalid_argument("e_theta: y is not twisted: " + y.str());
  const Kind kind = y.kind();
  const int rank = y.rank();
  const auto gens = generators(kind, rank);
  std::unordered_map<Elem, std::vector<Elem>, ElemHash> out;
  std::unordered_map<Elem, std::set<Elem>, ElemHash> layer{{y, {Elem::identity(kind, rank)}}};
  while (!layer.empty()) {
    std::unordered_map<Elem, std::set<Elem>, ElemHash> next;
    for (auto& [v, ws] : layer) {
      out[v].assign(ws.begin(), ws.end());
      for (int s : gens) {
        Elem u = demazure_conjugate(th, v, s);
        if (u == v) continue;
        for (auto& w : ws) {
          Elem x = left_mul(s, w);
          if (length(x) == length(w) + 1) next[u].insert(x);
        }
      }
    }
    layer.swap(next);
  }
  return out;
}

std::vector<Elem> e_theta(Theta th, const Elem& y, const Elem& z) {
  if (!is_twisted_involution(th, z)) throw std::invalid_argument("e_theta: z is not twisted: " + z.str());
  if (y.kind() != z.kind() || y.rank() != z.rank()) throw std::invalid_argument("e_theta: group mismatch");
  auto all = e_theta_all(th, y);
  auto it = all.find(z);
  return it == all.end() ? std::vector<Elem>{} : it->second;
}

Elem atom_base(const SymSpace& sp) {
  const int n = sp.n, k = sp.k();
  switch (sp.type) {
    case Space::AI: return Elem::identity(Kind::A, n);
    case Space::AII: return fpf_base(Kind::A, n, 1);
    case Space::AIII: return omega(n + 1, k);
    case Space::BI: return sigma(Kind::BC, n, k);
    case Space::CI: return Elem::identity(Kind::BC, n);
    case Space::CII: return sigma_fpf(n, k);
    case Space::DI:
    case Space::DII: return sigma_hat(n, k);
    case Space::DIII: return fpf_base(Kind::D, n, 1);
    case Space::DIV: return fpf_base(Kind::D, n, 2);
  }
  throw std::logic_error("atom_base");
}

std::vector<Elem> extended_atoms(const SymSpace& sp, const Elem& z) {
  if (!in_rs_image(sp, z)) throw std::invalid_argument("extended_atoms: " + z.str() + " outside the image for " + sp.label());
  const auto& t = atom_table(sp);
  auto it = t.find(z);
  return it == t.end() ? std::vector<Elem>{} : it->second;
}

bool is_extended_atom(const SymSpace& sp, const Elem& z, const Elem& w) {
  auto E = extended_atoms(sp, z);
  return std::binary_search(E.begin(), E.end(), w);
}

Elem matching_involution(const SymSpace& sp, const Elem& z) {
  if (sp.type == Space::DII || sp.type == Space::DIV) return t0_left(z);
  return z.kind() == Kind::D ? with_kind(z, Kind::BC) : z;
}

std::vector<int> matching_support(const SymSpace& sp, const Elem& z) {
  if (single_param(sp.type)) return {};
  auto st = perm_stats(matching_involution(sp, z));
  return sp.type == Space::AIII ? st.twist_set : st.negate_set;
}

SignedMatching shape(const SymSpace& sp, const Elem& w) {
  if (w.kind() != sp.kind() || w.rank() != sp.n)
    throw std::invalid_argument("shape: " + w.tagged() + " is not in the group of " + sp.label());
  if (single_param(sp.type)) return {};
  const Word v = w.oneline();
  const int m = static_cast<int>(v.size());
  const int k = sp.k();
  std::vector<std::pair<int, int>> blocks;
  auto triv = [&](int a) { blocks.emplace_back(-std::abs(a), std::abs(a)); };
  switch (sp.type) {
    case Space::AIII: {
      if ((m - k) % 2) throw std::invalid_argument("shape: bad AIII block structure");
      const int j = (m - k) / 2;
      for (int i = 0; i < j; ++i)
        if (v[m - 1 - i] < v[i]) blocks.emplace_back(v[m - 1 - i], v[i]);
      for (int i = j; i < j + k; ++i) triv(v[i]);
      break;
    }
    case Space::BI:
    case Space::CI: {
      const int kk = sp.type == Space::BI ? k : 0;
      for (int i = 0; i < kk; ++i) triv(v[i]);
      auto nd = nested_descents(suffix(v, kk));
      for (auto [a, b] : nd.ndes)
        if (0 < a && a < -b) blocks.emplace_back(a, -b);
      for (int a : nd.nres)
        if (a < 0) triv(a);
      break;
    }
    case Space::CII: {
      if ((m - k) % 2) throw std::invalid_argument("shape: bad CII block structure");
      for (int i = 0; i < k; ++i) triv(v[i]);
      for (int i = k; i < m; i += 2) {
        int b = v[i], c = v[i + 1];
        if (0 < c && c < -b) blocks.emplace_back(b, -c);
      }
      break;
    }
    case Space::DI:
    case Space::DII: {
      for (int i = 0; i < k; ++i) triv(v[i]);
      for (auto [a, b] : nested_descents(suffix(v, k)).ndes)
        if (std::abs(a) < -b) blocks.emplace_back(std::abs(a), -b);
      break;
    }
    case Space::DIII:
    case Space::DIV: {
      int i = 0;
      if (m % 2) triv(v[i++]);
      for (; i < m; i += 2) {
        int b = v[i], c = v[i + 1];
        if (b < 0 && 0 < c && c < -b) blocks.emplace_back(b, -c);
        else if (b < c && c < 0) {
          triv(b);
          triv(c);
        }
      }
      break;
    }
    default: break;
  }
  std::vector<int> support;
  for (auto [a, b] : blocks) {
    support.push_back(std::abs(a));
    if (a + b != 0) support.push_back(std::abs(b));
  }
  return SignedMatching(support, blocks);
}

std::vector<SignedMatching> matchings_for(const SymSpace& sp, const Elem& z) {
  if (single_param(sp.type)) return {SignedMatching()};
  const auto X = matching_support(sp, z);
  const int k = sp.k();
  switch (sp.type) {
    case Space::AIII:
    case Space::CII:
    case Space::DI:
    case Space::DII: return enumerate_ncsp(X, TrivRule::Exactly, k);
    case Space::BI: return enumerate_ncsp(X, TrivRule::AtLeast, k);
    case Space::CI: return enumerate_ncsp(X);
    case Space::DIII:
    case Space::DIV: {
      const int want = sp.type == Space::DIII ? ell0(z) % 4 : -1;
      std::vector<SignedMatching> out;
      for (auto& M : enumerate_ncsp(X)) {
        if (want >= 0 ? M.triv() % 4 == want : M.triv() % 2 == 1) out.push_back(M);
      }
      return out;
    }
    default: break;
  }
  throw std::logic_error("matchings_for");
}

Elem generator_bot(const SymSpace& sp, const Elem& z, const SignedMatching& M) {
  auto Ms = matchings_for(sp, z);
  if (!std::binary_search(Ms.begin(), Ms.end(), M))
    throw std::invalid_argument("generator_bot: " + M.str() + " is not admissible for " + z.str());
  const Elem y = matching_involution(sp, z);
  auto c = M.triv_set();  // ascending
  const int k = sp.k();
  Word u;
  switch (sp.type) {
    case Space::AI: return Elem(Kind::A, assemble(cyc_set(z), Assemble::Des));
    case Space::AII: return Elem(Kind::A, assemble(cyc_set(z), Assemble::Asc));
    case Space::AIII: {
      auto tc = twisted_cyc(z, M);
      Word w;
      for (auto& p : tc) w.push_back(p.second);
      w.insert(w.end(), c.begin(), c.end());
      for (auto it = tc.rbegin(); it != tc.rend(); ++it) w.push_back(it->first);
      return Elem(Kind::A, w);
    }
    case Space::BI: {
      std::vector<int> d(c.rbegin(), c.rend());
      for (int i = k - 1; i >= 0; --i) u.push_back(d[i]);
      for (std::size_t i = k; i < d.size(); ++i) u.push_back(-d[i]);
      break;
    }
    case Space::CI:
      for (auto it = c.rbegin(); it != c.rend(); ++it) u.push_back(-*it);
      break;
    case Space::CII:
    case Space::DI:
    case Space::DII: u = c; break;
    case Space::DIII:
    case Space::DIV:
      for (auto it = c.rbegin(); it != c.rend(); ++it) u.push_back(-*it);
      break;
  }
  const bool asc = sp.type == Space::CII || sp.type == Space::DIII || sp.type == Space::DIV;
  Word v = assemble(cyc_set(y, M), asc ? Assemble::Asc : Assemble::Des);
  u.insert(u.end(), v.begin(), v.end());
  if (sp.type == Space::DI || sp.type == Space::DII || sp.type == Space::DIV) u = es_normalize(u);
  return Elem(sp.kind(), u);
}

WordOrder space_order(const SymSpace& sp) {
  const int k = sp.k();
  switch (sp.type) {
    case Space::AI:
    case Space::CI: return precsim(0);
    case Space::AII:
    case Space::DIII: return precapprox(0);
    case Space::AIII: return prec_aiii(k);
    case Space::BI: return precsim(k);
    case Space::CII: return precapprox(k);
    case Space::DI:
    case Space::DII: return precsim_di(k);
    case Space::DIV: return precapprox(1);
  }
  throw std::logic_error("space_order");
}

int space_rank(const SymSpace& sp, const Word& w) {
  const int k = sp.k();
  switch (sp.type) {
    case Space::AI:
    case Space::CI: return rank_nested(w);
    case Space::BI: return rank_nested(suffix(w, k));
    case Space::AII:
    case Space::DIII: return rank_approx(w, 0);
    case Space::CII: return rank_approx(w, k);
    case Space::DIV: return rank_approx(w, 1);
    case Space::DI:
    case Space::DII: return rank_d(w, k);
    case Space::AIII: return inv_word(Word(w.begin(), w.begin() + std::min(sp.p, sp.q)));
  }
  throw std::logic_error("space_rank");
}

std::vector<Elem> cell(const SymSpace& sp, const Elem& z, const SignedMatching& M) {
  const Elem bot = generator_bot(sp, z, M);
  std::function<bool(const Word&)> keep;
  if (sp.kind() == Kind::D) keep = even_negatives;
  std::vector<Elem> out;
  for (auto& w : up_set(space_order(sp), bot.oneline(), keep)) out.emplace_back(sp.kind(), w);
  std::sort(out.begin(), out.end());
  return out;
}

int d_z(const SymSpace& sp, const Elem& z, const Elem& w) {
  if (!is_extended_atom(sp, z, w))
    throw std::invalid_argument("d_z: " + w.str() + " is not an extended atom of " + z.str());
  const int n = sp.n;
  switch (sp.type) {
    case Space::AI: return count_below(z, 1, n + 1, false);
    case Space::BI: return count_below(z, 1, n, true) + ell0(w);
    case Space::CI: return count_below(z, 1, n, false) - ell0(w);
    case Space::DI:
    case Space::DII: {
      const Elem y = matching_involution(sp, z);
      const int twice = count_below(y, -n, n, false) - sp.k();
      if (twice % 2 || twice < 0) throw std::logic_error("d_z: non-integral value for " + z.str());
      return twice / 2;
    }
    default: return 0;
  }
}

namespace {
AtomDecomposition decompose_over(const SymSpace& sp, const Elem& z, const std::vector<SignedMatching>& Ms) {
  AtomDecomposition out;
  out.z = z;
  for (auto& M : Ms) {
    auto c = cell(sp, z, M);
    out.cells[M] = std::set<Elem>(c.begin(), c.end());
    for (auto& w : c) out.dz[w] = d_z(sp, z, w);
  }
  return out;
}
}  // namespace

AtomDecomposition atoms_closed(const SymSpace& sp, const Clan& g) {
  return decompose_over(sp, rs_map(sp, g), aligned_matchings(sp, g));
}

AtomDecomposition decompose(const SymSpace& sp, const Elem& z) {
  return decompose_over(sp, z, matchings_for(sp, z));
}

std::vector<SignedMatching> aligned_matchings(const SymSpace& sp, const Clan& g) {
  if (single_param(sp.type)) return {SignedMatching()};
  const Elem z = rs_map(sp, g);
  std::vector<SignedMatching> out;
  const int k = sp.k();
  for (auto& M : matchings_for(sp, z)) {
    if (!is_gamma_aligned(M, g)) continue;
    auto t = M.triv_set();
    bool ok = true;
    if (sp.type == Space::BI) {
      std::vector<bool> signs{g.is_plus(0)};
      for (int i = 0; i + k < static_cast<int>(t.size()); ++i) signs.push_back(g.is_plus(t[i]));
      for (std::size_t i = 0; i + 1 < signs.size(); ++i)
        if (signs[i] == signs[i + 1]) ok = false;
    } else if (sp.type == Space::DIII || sp.type == Space::DIV) {
      for (std::size_t i = 0; i + 1 < t.size(); i += 2)
        if (g.is_plus(t[i]) != g.is_plus(t[i + 1])) ok = false;
    }
    if (ok) out.push_back(M);
  }
  return out;
}

Elem embed_di(int k, const Elem& w) {
  if (w.kind() != Kind::D) throw std::invalid_argument("embed_di: needs W⁺_n");
  const int n = w.rank();
  if (k < 0 || k > n) throw std::invalid_argument("embed_di: k out of range");
  Word v = w.oneline();
  for (int i = 1; i <= k; ++i) {
    bool neg = (k - i) % 2 == 0;
    if (i == 1) neg = k % 4 == 2 || k % 4 == 3;
    if (neg) v[i - 1] = -v[i - 1];
  }
  return Elem(Kind::D, v);
}

Elem embed_dii(int k, const Elem& w) {
  if (w.kind() != Kind::D) throw std::invalid_argument("embed_dii: needs W⁺_n");
  if (k % 2 == 0 || k > w.rank()) throw std::invalid_argument("embed_dii: k must be odd and at most n");
  Word v = w.oneline();
  v.insert(v.begin() + k, w.rank() + 1);
  return Elem(Kind::D, v);
}

Elem embed_diii(const Elem& w) {
  if (w.kind() != Kind::D || w.rank() % 2) throw std::invalid_argument("embed_diii: needs W⁺_n with n even");
  Word v = w.oneline();
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) std::swap(v[i], v[i + 1]);
  return Elem(Kind::D, v);
}

Elem embed_div(const Elem& w) {
  if (w.kind() != Kind::D || w.rank() % 2 == 0) throw std::invalid_argument("embed_div: needs W⁺_n with n odd");
  Word v = w.oneline();
  v[0] = -v[0];
  v.insert(v.begin(), -(w.rank() + 1));
  return Elem(Kind::D, v);
}

Elem vee(const Elem& y) {
  if (y.kind() != Kind::D) throw std::invalid_argument("vee: needs W⁺_n");
  Word v = y.oneline();
  for (int& x : v)
    if (std::abs(x) == 1) x = -x;
  v.push_back(-(y.rank() + 1));
  return Elem(Kind::D, v);
}

SymSpace space_vee(const SymSpace& sp) {
  if (sp.type == Space::DII) return sp.p >= sp.q ? make_space(Space::DI, sp.p + 2, sp.q) : make_space(Space::DI, sp.p, sp.q + 2);
  if (sp.type == Space::DIV) return make_space(Space::DIII, sp.n + 1);
  throw std::invalid_argument("space_vee: only DII and DIV");
}

Clan clan_vee(const SymSpace& sp, const Clan& g) {
  if (sp.type != Space::DII && sp.type != Space::DIV) throw std::invalid_argument("clan_vee: only DII and DIV");
  auto plus = g.plus(), minus = g.minus();
  auto match = g.matching();
  if (sp.type == Space::DII) {
    auto& grow = sp.p >= sp.q ? plus : minus;
    grow.push_back(-sp.n - 1);
    grow.push_back(sp.n + 1);
  } else {
    // skew-symmetric: n+1 joins S_-, its negative S_+
    plus.push_back(-sp.n - 1);
    minus.push_back(sp.n + 1);
  }
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  return Clan(base_signed(sp.n + 1, false), plus, minus, match);
}

bool dz_vanishes(const SymSpace& sp, const Elem& z) {
  const int n = sp.n;
  auto diagonal = [&] {
    for (int i = 1; i <= n; ++i)
      if (std::abs(z(i)) != i) return false;
    return true;
  };
  switch (sp.type) {
    case Space::AI: return z == Elem::identity(Kind::A, n);
    case Space::BI:
    case Space::DI: return neg_count(z) == sp.k() && diagonal();
    case Space::CI: return neg_count(z) <= 1 && diagonal();
    case Space::DII: return neg_count(t0_left(z)) == sp.k() && diagonal();
    default: return true;
  }
}

Classification classify(const SymSpace& sp, const Clan& g) {
  Classification c;
  const Elem z = rs_map(sp, g);
  auto plus = g.plus(), minus = g.minus();
  const int points = static_cast<int>(plus.size() + minus.size());
  if (sp.type == Space::CI) {
    auto positive = [](const std::vector<int>& s) {
      return std::all_of(s.begin(), s.end(), [](int x) { return x > 0; });
    };
    bool paired = true;
    for (auto [a, b] : g.matching())
      if (a + b != 0) paired = false;
    c.multiplicity_free = (positive(plus) || positive(minus)) && paired;
  } else {
    c.multiplicity_free = dz_vanishes(sp, z);
  }
  switch (sp.type) {
    case Space::AI:
    case Space::AII: c.uniform = true; break;
    case Space::CI: c.uniform = points == 0 || points == 2; break;
    case Space::DIII: c.uniform = points == 0 || points == 4; break;
    case Space::DIV: c.uniform = points == 2; break;
    default: {
      // one block left over also forces a single matching
      const int d = std::abs(sp.p - sp.q);
      const int pair = sp.type == Space::AIII ? 2 : 4;
      c.uniform = points == d || (sp.type == Space::BI ? points == d + 2 : d == 0 && points == pair);
    }
  }
  if (single_param(sp.type)) {
    c.alternating = true;
  } else if (sp.type == Space::DIII || sp.type == Space::DIV) {
    c.alternating = points <= 2;
  } else {
    std::vector<int> pts = plus;
    pts.insert(pts.end(), minus.begin(), minus.end());
    std::sort(pts.begin(), pts.end());
    c.alternating = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i] >= 0 && g.is_plus(pts[i]) == g.is_plus(pts[i + 1])) c.alternating = false;
  }
  return c;
}

}  // namespace brion
