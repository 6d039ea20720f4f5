#include "brion/clans.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brion {

const char* space_name(Space s) {
  static const char* names[] = {"AI", "AII", "AIII", "BI", "CI", "CII", "DI", "DII", "DIII", "DIV"};
  return names[static_cast<int>(s)];
}

Space parse_space_name(const std::string& s) {
  for (int i = 0; i < 10; ++i)
    if (s == space_name(static_cast<Space>(i))) return static_cast<Space>(i);
  throw std::invalid_argument("unknown space: " + s);
}

Kind SymSpace::kind() const {
  switch (type) {
    case Space::AI:
    case Space::AII:
    case Space::AIII: return Kind::A;
    case Space::BI:
    case Space::CI:
    case Space::CII: return Kind::BC;
    default: return Kind::D;
  }
}

Theta SymSpace::theta() const {
  if (type == Space::AIII) return Theta::Star;
  if (type == Space::DII || type == Space::DIV) return Theta::Diamond;
  return Theta::Id;
}

int SymSpace::k() const {
  switch (type) {
    case Space::AIII: return std::abs(p - q);
    case Space::BI: return (std::abs(p - q) - 1) / 2;
    case Space::CII:
    case Space::DI:
    case Space::DII: return std::abs(p - q) / 2;
    default: return 0;
  }
}

bool SymSpace::has_pq() const {
  return type == Space::AIII || type == Space::BI || type == Space::CII || type == Space::DI ||
         type == Space::DII;
}

std::string SymSpace::label() const {
  std::string s = space_name(type);
  if (has_pq()) return s + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return s + "(" + std::to_string(n) + ")";
}

SymSpace make_space(Space type, int n) {
  SymSpace sp;
  sp.type = type;
  sp.n = n;
  if (n < 1) throw std::invalid_argument("rank must be positive");
  switch (type) {
    case Space::AI: break;
    case Space::AII:
      if (n % 2 == 0) throw std::invalid_argument("AII needs n odd");
      break;
    case Space::CI: sp.p = sp.q = n; break;
    case Space::DIII:
      if (n % 2 || n < 2) throw std::invalid_argument("DIII needs n even");
      sp.p = sp.q = n;
      break;
    case Space::DIV:
      if (n % 2 == 0 || n < 3) throw std::invalid_argument("DIV needs n odd and at least 3");
      sp.p = sp.q = n;
      break;
    default: throw std::invalid_argument(std::string(space_name(type)) + " takes p and q");
  }
  return sp;
}

SymSpace make_space(Space type, int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("p and q must be nonnegative");
  SymSpace sp;
  sp.type = type;
  sp.p = p;
  sp.q = q;
  switch (type) {
    case Space::AIII: sp.n = p + q - 1; break;
    case Space::BI:
      if ((p + q) % 2 == 0) throw std::invalid_argument("BI needs p+q odd");
      sp.n = (p + q - 1) / 2;
      break;
    case Space::CII:
      if (p % 2 || q % 2) throw std::invalid_argument("CII needs p and q even");
      sp.n = (p + q) / 2;
      break;
    case Space::DI:
    case Space::DII: {
      if ((p + q) % 2) throw std::invalid_argument("D needs p+q even");
      sp.n = (p + q) / 2;
      bool even = (p + sp.n) % 2 == 0;
      if (type == Space::DI && !even) throw std::invalid_argument("DI needs p+n even");
      if (type == Space::DII && even) throw std::invalid_argument("DII needs p+n odd");
      if (sp.n < 2) throw std::invalid_argument("type D needs n >= 2");
      break;
    }
    default: throw std::invalid_argument(std::string(space_name(type)) + " takes n only");
  }
  if (sp.n < 1) throw std::invalid_argument("rank must be positive");
  return sp;
}

std::vector<SymSpace> all_spaces(int max_rank) {
  std::vector<SymSpace> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back(make_space(Space::AI, n));
    if (n % 2) out.push_back(make_space(Space::AII, n));
    for (int p = 0; p <= n + 1; ++p) out.push_back(make_space(Space::AIII, p, n + 1 - p));
    for (int p = 0; p <= 2 * n + 1; ++p) out.push_back(make_space(Space::BI, p, 2 * n + 1 - p));
    out.push_back(make_space(Space::CI, n));
    for (int p = 0; p <= 2 * n; p += 2) out.push_back(make_space(Space::CII, p, 2 * n - p));
    if (n >= 2) {
      for (int p = 0; p <= 2 * n; ++p)
        out.push_back(make_space((p + n) % 2 == 0 ? Space::DI : Space::DII, p, 2 * n - p));
      if (n % 2 == 0) out.push_back(make_space(Space::DIII, n));
      else out.push_back(make_space(Space::DIV, n));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Clan::Clan(std::vector<int> base, std::vector<int> plus, std::vector<int> minus,
           std::vector<std::pair<int, int>> matching)
    : base_(std::move(base)) {
  if (!std::is_sorted(base_.begin(), base_.end()) ||
      std::adjacent_find(base_.begin(), base_.end()) != base_.end())
    throw std::invalid_argument("clan base must be strictly increasing");
  mate_.assign(base_.size(), -3);
  auto put = [&](int x, int code) {
    int i = index_of(x);
    if (i < 0) throw std::invalid_argument("point outside base: " + std::to_string(x));
    if (mate_[i] != -3) throw std::invalid_argument("point used twice: " + std::to_string(x));
    mate_[i] = code;
  };
  for (int x : plus) put(x, kPlus);
  for (int x : minus) put(x, kMinus);
  for (auto [a, b] : matching) {
    if (a == b) throw std::invalid_argument("degenerate block");
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("block outside base");
    put(a, ib);
    put(b, ia);
  }
  if (std::find(mate_.begin(), mate_.end(), -3) != mate_.end())
    throw std::invalid_argument("clan does not cover its base");
}

Clan Clan::from_mates(std::vector<int> base, std::vector<int> mates) {
  Clan c;
  c.base_ = std::move(base);
  c.mate_ = std::move(mates);
  return c;
}

int Clan::index_of(int x) const {
  auto it = std::lower_bound(base_.begin(), base_.end(), x);
  if (it == base_.end() || *it != x) return -1;
  return static_cast<int>(it - base_.begin());
}

bool Clan::is_plus(int x) const {
  int i = index_of(x);
  return i >= 0 && mate_[i] == kPlus;
}

bool Clan::is_minus(int x) const {
  int i = index_of(x);
  return i >= 0 && mate_[i] == kMinus;
}

int Clan::partner(int x) const {
  int i = index_of(x);
  if (i < 0) throw std::invalid_argument("point outside base");
  if (mate_[i] < 0) throw std::invalid_argument("sign point has no partner");
  return base_[mate_[i]];
}

std::vector<int> Clan::plus() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (mate_[i] == kPlus) out.push_back(base_[i]);
  return out;
}

std::vector<int> Clan::minus() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (mate_[i] == kMinus) out.push_back(base_[i]);
  return out;
}

std::vector<std::pair<int, int>> Clan::matching() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (mate_[i] > static_cast<int>(i)) out.emplace_back(base_[i], base_[mate_[i]]);
  return out;
}

int Clan::type() const {
  int t = 0;
  for (int m : mate_) t += m == kPlus ? 1 : m == kMinus ? -1 : 0;
  return t;
}

std::string Clan::one_line() const {
  std::vector<int> label(base_.size(), 0);
  int next = 1;
  std::string s = "(";
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (i) s += ",";
    int m = mate_[i];
    if (m == kPlus) s += "+";
    else if (m == kMinus) s += "-";
    else {
      if (!label[i]) label[i] = label[m] = next++;
      s += std::to_string(label[i]);
    }
  }
  return s + ")";
}

bool Clan::operator<(const Clan& o) const {
  if (base_ != o.base_) return base_ < o.base_;
  return mate_ < o.mate_;
}

std::size_t Clan::hash() const {
  std::size_t h = base_.size();
  for (int m : mate_) h = h * 1000003u + static_cast<std::size_t>(m + 7);
  if (!base_.empty()) h ^= static_cast<std::size_t>(base_.front() + 1000) << 1;
  return h;
}

std::vector<int> base_plain(int m) {
  std::vector<int> b(m);
  for (int i = 0; i < m; ++i) b[i] = i + 1;
  return b;
}

std::vector<int> base_signed(int n, bool with_zero) {
  std::vector<int> b;
  for (int i = -n; i <= n; ++i)
    if (i || with_zero) b.push_back(i);
  return b;
}

Clan clan_from_one_line(const std::vector<int>& base, const std::vector<std::string>& symbols) {
  if (symbols.size() != base.size()) throw std::invalid_argument("one-line length does not match base");
  std::vector<int> plus, minus;
  std::map<long, std::vector<int>> seen;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& s = symbols[i];
    if (s == "+") plus.push_back(base[i]);
    else if (s == "-") minus.push_back(base[i]);
    else {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("bad clan symbol: " + s);
      seen[v].push_back(base[i]);
    }
  }
  std::vector<std::pair<int, int>> m;
  for (auto& [label, pts] : seen) {
    if (pts.size() != 2) throw std::invalid_argument("label " + std::to_string(label) + " must occur exactly twice");
    m.emplace_back(pts[0], pts[1]);
  }
  return Clan(base, plus, minus, m);
}

Clan clan_from_one_line(const std::vector<int>& base, const std::string& text) {
  std::vector<std::string> sym;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      sym.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) sym.push_back(cur);
  return clan_from_one_line(base, sym);
}

Clan reversal(const Clan& g) {
  const int m = g.size();
  std::vector<int> mates(m);
  for (int i = 0; i < m; ++i) {
    int c = g.mates()[m - 1 - i];
    mates[i] = c < 0 ? c : m - 1 - c;
  }
  return Clan::from_mates(g.base(), mates);
}

Clan conjugate(const Clan& g) {
  auto mates = g.mates();
  for (int& c : mates)
    if (c == Clan::kPlus) c = Clan::kMinus;
    else if (c == Clan::kMinus) c = Clan::kPlus;
  return Clan::from_mates(g.base(), mates);
}

Clan toggle(const Clan& g, const std::vector<int>& Y) {
  auto mates = g.mates();
  for (int y : Y) {
    int i = g.index_of(y);
    if (i < 0) throw std::invalid_argument("toggle point outside base");
    if (mates[i] == Clan::kPlus) mates[i] = Clan::kMinus;
    else if (mates[i] == Clan::kMinus) mates[i] = Clan::kPlus;
  }
  return Clan::from_mates(g.base(), mates);
}

bool contains(const Clan& d, const Clan& g) {
  if (d.base() != g.base()) return false;
  for (int i = 0; i < d.size(); ++i) {
    int c = d.mates()[i];
    if (c < 0 && g.mates()[i] != c) return false;
  }
  return true;
}

bool equivalent(const Clan& g, const Clan& d) {
  if (g.base() != d.base()) return false;
  std::vector<int> a, b;
  for (int c : g.mates())
    if (c < 0) a.push_back(c);
  for (int c : d.mates())
    if (c < 0) b.push_back(c);
  return a == b;
}

ClanPredicates clan_predicates(const Clan& g) {
  ClanPredicates p;
  p.type = g.type();
  p.symmetric = g == reversal(g);
  p.skew_symmetric = g == conjugate(reversal(g));
  bool strict = true;
  int pairs_in_n = 0;
  for (auto [a, b] : g.matching()) {
    if (a + b == 0) strict = false;
    if (a > 0 && b > 0) ++pairs_in_n;
  }
  int plus_pos = 0;
  for (int x : g.plus())
    if (x > 0) ++plus_pos;
  p.strict = strict;
  p.h = plus_pos + pairs_in_n;
  p.even_strict = strict && p.h % 2 == 0;
  return p;
}

std::vector<Clan> all_clans(const std::vector<int>& base) {
  const int m = static_cast<int>(base.size());
  std::vector<Clan> out;
  std::vector<int> mates(m, -3);
  std::function<void(int)> rec = [&](int i) {
    while (i < m && mates[i] != -3) ++i;
    if (i == m) {
      out.push_back(Clan::from_mates(base, mates));
      return;
    }
    for (int s : {Clan::kPlus, Clan::kMinus}) {
      mates[i] = s;
      rec(i + 1);
    }
    for (int j = i + 1; j < m; ++j) {
      if (mates[j] != -3) continue;
      mates[i] = j;
      mates[j] = i;
      rec(i + 1);
      mates[j] = -3;
    }
    mates[i] = -3;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clan> symmetric_clans(const std::vector<int>& base, bool skew) {
  const int m = static_cast<int>(base.size());
  std::vector<Clan> out;
  std::vector<int> mates(m, -3);
  auto rev = [m](int i) { return m - 1 - i; };
  auto flip = [skew](int s) { return skew ? (s == Clan::kPlus ? Clan::kMinus : Clan::kPlus) : s; };
  std::function<void(int)> rec = [&](int i) {
    while (i < m && mates[i] != -3) ++i;
    if (i == m) {
      out.push_back(Clan::from_mates(base, mates));
      return;
    }
    const int j = rev(i);
    if (i == j) {
      if (skew) return;  // the middle point cannot be a sign of a skew clan
      for (int s : {Clan::kPlus, Clan::kMinus}) {
        mates[i] = s;
        rec(i + 1);
      }
      mates[i] = -3;
      return;
    }
    for (int s : {Clan::kPlus, Clan::kMinus}) {
      mates[i] = s;
      mates[j] = flip(s);
      rec(i + 1);
    }
    mates[i] = j;
    mates[j] = i;
    rec(i + 1);
    for (int k = i + 1; k < m; ++k) {
      int rk = rev(k);
      if (k == j || rk == k || mates[k] != -3 || mates[rk] != -3) continue;
      mates[i] = k;
      mates[k] = i;
      mates[j] = rk;
      mates[rk] = j;
      rec(i + 1);
      mates[k] = mates[rk] = -3;
    }
    mates[i] = mates[j] = -3;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> space_base(const SymSpace& sp) {
  switch (sp.type) {
    case Space::AI:
    case Space::AII:
    case Space::AIII: return base_plain(sp.n + 1);
    case Space::BI: return base_signed(sp.n, true);
    default: return base_signed(sp.n, false);
  }
}

Clan clan_of_involution(const Elem& z) {
  std::vector<int> plus;
  std::vector<std::pair<int, int>> m;
  for (int i = 1; i <= z.size(); ++i) {
    if (z(i) == i) plus.push_back(i);
    else if (z(i) > i) m.emplace_back(i, z(i));
  }
  return Clan(base_plain(z.size()), plus, {}, m);
}

Elem involution_of_clan(const Clan& g) {
  std::vector<int> v(g.size());
  for (int i = 0; i < g.size(); ++i) {
    int c = g.mates()[i];
    v[i] = c < 0 ? g.base()[i] : g.base()[c];
  }
  return Elem(Kind::A, v);
}

namespace {
void check_rank(const SymSpace& sp, bool big) {
  if (sp.n > 6 && !big) throw std::out_of_range("rank over bound; pass big to allow");
  if (sp.n > 10) throw std::out_of_range("rank over hard bound");
}
}  // namespace

bool in_index_set(const SymSpace& sp, const Clan& g) {
  if (g.base() != space_base(sp)) return false;
  switch (sp.type) {
    case Space::AI:
    case Space::AII: {
      if (!g.minus().empty()) return false;
      if (sp.type == Space::AII && !g.plus().empty()) return false;
      return true;
    }
    case Space::AIII: return g.type() == sp.p - sp.q;
    default: break;
  }
  auto pr = clan_predicates(g);
  if (pr.type != sp.p - sp.q) return false;
  switch (sp.type) {
    case Space::BI:
    case Space::DI:
    case Space::DII: return pr.symmetric;
    case Space::CI: return pr.skew_symmetric;
    case Space::CII: return pr.symmetric && pr.strict;
    case Space::DIII:
    case Space::DIV: return pr.skew_symmetric && pr.even_strict;
    default: return false;
  }
}

std::vector<Clan> enumerate_clans(const SymSpace& sp, bool big) {
  check_rank(sp, big);
  std::vector<Clan> out;
  switch (sp.type) {
    case Space::AI:
    case Space::AII:
      for (auto& z : twisted_involutions(Theta::Id, Kind::A, sp.n, big))
        if (sp.type == Space::AI || is_fpf(z)) out.push_back(clan_of_involution(z));
      break;
    case Space::AIII:
      for (auto& g : all_clans(space_base(sp)))
        if (g.type() == sp.p - sp.q) out.push_back(g);
      break;
    default: {
      bool skew = sp.type == Space::CI || sp.type == Space::DIII || sp.type == Space::DIV;
      for (auto& g : symmetric_clans(space_base(sp), skew))
        if (in_index_set(sp, g)) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Clan dense_clan(const SymSpace& sp) {
  auto base = space_base(sp);
  const int size = static_cast<int>(base.size());
  std::vector<std::string> sym(size);
  switch (sp.type) {
    case Space::AI: return clan_of_involution(Elem::identity(Kind::A, sp.n));
    case Space::AII: return clan_of_involution(fpf_base(Kind::A, sp.n, 1));
    case Space::AIII:
    case Space::BI:
    case Space::CI:
    case Space::DI:
    case Space::DII: {
      const int m = std::min(sp.p, sp.q);
      const std::string sign = sp.p >= sp.q ? "+" : "-";
      for (int i = 0; i < size; ++i) {
        if (i < m) sym[i] = std::to_string(i + 1);
        else if (i >= size - m) sym[i] = std::to_string(size - i);
        else sym[i] = sign;
      }
      break;
    }
    case Space::CII:
    case Space::DIII: {
      const int m = std::min(sp.p, sp.q);
      const std::string sign = sp.p >= sp.q ? "+" : "-";
      for (int i = 0; i < size; ++i) {
        if (i < m) sym[i] = std::to_string(i + 1);
        else if (i >= size - m) {
          // tail is (m-1,m, m-3,m-2, ..., 1,2)
          int t = i - (size - m);
          int pair = t / 2;
          sym[i] = std::to_string(m - 1 - 2 * pair + (t % 2));
        } else sym[i] = sign;
      }
      break;
    }
    case Space::DIV: {
      const int m = sp.n - 1;
      for (int i = 0; i < size; ++i) {
        if (i < m) sym[i] = std::to_string(i + 1);
        else if (i == m) sym[i] = "+";
        else if (i == m + 1) sym[i] = "-";
        else {
          int t = i - (m + 2);
          int pair = t / 2;
          sym[i] = std::to_string(m - 1 - 2 * pair + (t % 2));
        }
      }
      break;
    }
  }
  return clan_from_one_line(base, sym);
}

Elem rs_map(const SymSpace& sp, const Clan& g) {
  if (!in_index_set(sp, g)) throw std::invalid_argument("clan not in the index set of " + sp.label());
  switch (sp.type) {
    case Space::AI:
    case Space::AII: return involution_of_clan(g);
    case Space::AIII: return compose(w0(Kind::A, sp.n), involution_of_clan(g));
    default: break;
  }
  // bar(sigma_gamma) on [n]; sign points are fixed by sigma
  std::vector<int> v(sp.n);
  for (int i = 1; i <= sp.n; ++i) {
    int s = g.is_sign(i) ? i : g.partner(i);
    v[i - 1] = -s;
  }
  Elem z(Kind::BC, v);
  if (sp.type == Space::DII || sp.type == Space::DIV) z = t0_left(z);
  return with_kind(z, sp.kind());
}

bool in_rs_image(const SymSpace& sp, const Elem& z) {
  if (z.kind() != sp.kind() || z.rank() != sp.n) return false;
  const int k = sp.k();
  switch (sp.type) {
    case Space::AI: return is_involution(z);
    case Space::AII: return is_involution(z) && is_fpf(z);
    case Space::AIII:
      return is_twisted_involution(Theta::Star, z) && perm_stats(z).twist >= k;
    case Space::BI: return is_involution(z) && neg_count(z) >= k;
    case Space::CI: return is_involution(z);
    case Space::CII: return is_involution(z) && is_fpf(z) && neg_count(z) >= k;
    case Space::DI: return is_involution(z) && neg_count(z) >= k;
    case Space::DII:
      return is_twisted_involution(Theta::Diamond, z) && neg_count(t0_left(z)) >= k;
    case Space::DIII:
      return is_involution(z) && is_fpf(z) && (neg_count(z) > 0 || ell0(z) % 4 == 0);
    case Space::DIV: {
      auto y = t0_left(z);
      return is_involution(y) && is_fpf(y);
    }
  }
  return false;
}

std::vector<Elem> rs_image(const SymSpace& sp, bool big) {
  check_rank(sp, big);
  std::vector<Elem> out;
  for_each_element(
      sp.kind(), sp.n,
      [&](const Elem& z) {
        if (in_rs_image(sp, z)) out.push_back(z);
      },
      true);
  std::sort(out.begin(), out.end());
  return out;
}

Elem dense_element(const SymSpace& sp) {
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
  return Elem::identity(sp.kind(), n);
}

std::string index_label(const SymSpace& sp, const Clan& g) {
  if (sp.type == Space::AI || sp.type == Space::AII) return involution_of_clan(g).str();
  return g.one_line();
}

}  // namespace brion
