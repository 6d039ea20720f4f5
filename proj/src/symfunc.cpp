#include "brion/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <functional>

#include "brion/brion.hpp"

namespace brion {

namespace {

long long add_checked(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial: coefficient overflow");
  return r;
}

long long mul_checked(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial: coefficient overflow");
  return r;
}

void check_vars(int m) {
  if (m < 0 || m > kMaxVars) throw std::out_of_range("variable count must lie in [0," + std::to_string(kMaxVars) + "]");
}

}  // namespace

IntPolynomial::IntPolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("IntPolynomial: negative variable count");
}

IntPolynomial IntPolynomial::constant(int nvars, long long c) {
  IntPolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

IntPolynomial IntPolynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("IntPolynomial::variable: index");
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  return monomial(nvars, e);
}

IntPolynomial IntPolynomial::monomial(int nvars, const Exponent& e, long long c) {
  IntPolynomial p(nvars);
  p.add_term(e, c);
  return p;
}

long long IntPolynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void IntPolynomial::add_term(const Exponent& e, long long c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("IntPolynomial: exponent length");
  for (int a : e)
    if (a < 0) throw std::invalid_argument("IntPolynomial: negative exponent");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second = add_checked(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("IntPolynomial: variable count mismatch");
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r += o;
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + o.scaled(-1); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("IntPolynomial: variable count mismatch");
  IntPolynomial r(nvars_);
  Exponent e(nvars_);
  for (auto& [a, c] : terms_)
    for (auto& [b, d] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, mul_checked(c, d));
    }
  return r;
}

IntPolynomial IntPolynomial::scaled(long long c) const {
  IntPolynomial r(nvars_);
  if (c == 0) return r;
  for (auto& [e, d] : terms_) r.terms_.emplace(e, mul_checked(c, d));
  return r;
}

IntPolynomial IntPolynomial::divided_exact(long long d) const {
  if (d == 0) throw std::invalid_argument("IntPolynomial: division by zero");
  IntPolynomial r(nvars_);
  for (auto& [e, c] : terms_) {
    if (c % d) throw std::domain_error("IntPolynomial: inexact division by " + std::to_string(d));
    r.terms_.emplace(e, c / d);
  }
  return r;
}

IntPolynomial IntPolynomial::pow2_scaled(int k) const {
  if (k > 62 || k < -62) throw std::out_of_range("IntPolynomial: power of two out of range");
  if (k >= 0) return scaled(1LL << k);
  return divided_exact(1LL << -k);
}

int IntPolynomial::degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool IntPolynomial::is_homogeneous() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && t != d) return false;
    d = t;
  }
  return true;
}

bool IntPolynomial::is_symmetric() const {
  for (int i = 1; i < nvars_; ++i)
    if (swapped(i) != *this) return false;
  return true;
}

bool IntPolynomial::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return t.second > 0; });
}

long long IntPolynomial::coeff_sum() const {
  long long s = 0;
  for (auto& [e, c] : terms_) s = add_checked(s, c);
  return s;
}

IntPolynomial IntPolynomial::with_vars(int m) const {
  IntPolynomial r(m);
  for (auto& [e, c] : terms_) {
    Exponent f(m, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (i >= m) {
        if (e[i]) throw std::invalid_argument("IntPolynomial::with_vars: dropped variable occurs");
      } else {
        f[i] = e[i];
      }
    }
    r.terms_.emplace(f, c);
  }
  return r;
}

IntPolynomial IntPolynomial::last_var_zero() const {
  if (nvars_ == 0) throw std::invalid_argument("IntPolynomial: no variables");
  IntPolynomial r(nvars_ - 1);
  for (auto& [e, c] : terms_)
    if (e.back() == 0) r.terms_.emplace(Exponent(e.begin(), e.end() - 1), c);
  return r;
}

IntPolynomial IntPolynomial::swapped(int i) const {
  if (i < 1 || i >= nvars_) throw std::out_of_range("IntPolynomial::swapped: index");
  IntPolynomial r(nvars_);
  for (auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[i]);
    r.terms_.emplace(f, c);
  }
  return r;
}

IntPolynomial IntPolynomial::divided_difference(int i) const {
  if (i < 1 || i >= nvars_) throw std::out_of_range("IntPolynomial::divided_difference: index");
  IntPolynomial r(nvars_);
  for (auto& [e, c] : terms_) {
    const int a = e[i - 1], b = e[i];
    if (a == b) continue;
    const int lo = std::min(a, b), span = std::abs(a - b);
    const long long sign = a > b ? 1 : -1;
    Exponent f = e;
    for (int k = 0; k < span; ++k) {
      f[i - 1] = lo + span - 1 - k;
      f[i] = lo + k;
      r.add_term(f, sign * c);
    }
  }
  return r;
}

std::string IntPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    long long a = c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      a = c < 0 ? -c : c;
    } else if (c < 0) {
      os << "-";
      a = -c;
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (constant) {
      os << a;
      continue;
    }
    if (a != 1) os << a << " * ";
    bool sep = false;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (sep) os << " ";
      os << "x" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
      sep = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- partitions

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("StrictPartition: parts must be positive");
    if (i && parts[i] >= parts[i - 1]) throw std::invalid_argument("StrictPartition: parts must strictly decrease");
  }
}

int StrictPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string StrictPartition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

StrictPartition StrictPartition::staircase(int n) {
  std::vector<int> p;
  for (int i = n; i >= 1; --i) p.push_back(i);
  return StrictPartition(p);
}

StrictPartition StrictPartition::ominus(int a) const {
  auto p = parts;
  auto it = std::find(p.begin(), p.end(), a);
  if (it == p.end()) throw std::invalid_argument("StrictPartition::ominus: " + std::to_string(a) + " is not a part");
  p.erase(it);
  return StrictPartition(p);
}

StrictPartition StrictPartition::plus_delta() const {
  auto p = parts;
  const int l = length();
  for (int i = 0; i < l; ++i) p[i] += l - i;
  return StrictPartition(p);
}

// ---------------------------------------------------------------- Schur Q/P/S

namespace {

using Shape = std::vector<int>;

int part(const Shape& s, std::size_t r) { return r < s.size() ? s[r] : 0; }

// 2^{components} if nu/kappa meets each diagonal at most once, else 0
long long strip_weight(const Shape& kappa, const Shape& nu) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < nu.size(); ++r)
    for (int c = static_cast<int>(r) + part(kappa, r); c < static_cast<int>(r) + nu[r]; ++c)
      cells.emplace_back(static_cast<int>(r), c);
  auto in = [&](int r, int c) {
    if (r < 0 || r >= static_cast<int>(nu.size())) return false;
    return c >= r + part(kappa, r) && c < r + nu[r];
  };
  std::vector<bool> diag(64, false);
  for (auto [r, c] : cells) {
    if (diag[c - r]) return 0;
    diag[c - r] = true;
  }
  std::vector<int> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  auto index = [&](int r, int c) {
    return static_cast<int>(std::find(cells.begin(), cells.end(), std::make_pair(r, c)) - cells.begin());
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [r, c] = cells[i];
    if (in(r, c + 1)) parent[root(static_cast<int>(i))] = root(index(r, c + 1));
    if (in(r + 1, c)) parent[root(static_cast<int>(i))] = root(index(r + 1, c));
  }
  long long w = 1;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (root(static_cast<int>(i)) == static_cast<int>(i)) w *= 2;
  return w;
}

void strict_between(const Shape& lo, const Shape& hi, std::size_t r, Shape& cur, std::vector<Shape>& out) {
  if (r == hi.size()) {
    Shape s = cur;
    while (!s.empty() && s.back() == 0) s.pop_back();
    out.push_back(s);
    return;
  }
  int top = hi[r];
  if (r > 0) top = std::min(top, cur[r - 1] == 0 ? 0 : cur[r - 1] - 1);
  for (int v = part(lo, r); v <= top; ++v) {
    if (r > 0 && cur[r - 1] == 0 && v > 0) break;
    cur.push_back(v);
    strict_between(lo, hi, r + 1, cur, out);
    cur.pop_back();
  }
}

bool contains(const Shape& big, const Shape& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t r = 0; r < small.size(); ++r)
    if (small[r] > big[r]) return false;
  return true;
}

IntPolynomial skew_q(const Shape& lambda, const Shape& mu, int m) {
  if (!contains(lambda, mu)) return IntPolynomial(m);
  std::vector<Shape> mids;
  Shape cur;
  strict_between(mu, lambda, 0, cur, mids);
  std::map<Shape, IntPolynomial> states;
  states.emplace(mu, IntPolynomial::constant(m, 1));
  for (int k = 1; k <= m; ++k) {
    std::map<Shape, IntPolynomial> next;
    for (auto& [kappa, poly] : states)
      for (auto& nu : mids) {
        if (!contains(nu, kappa)) continue;
        long long w = strip_weight(kappa, nu);
        if (!w) continue;
        int add = 0;
        for (std::size_t r = 0; r < nu.size(); ++r) add += nu[r] - part(kappa, r);
        IntPolynomial mono(m);
        IntPolynomial::Exponent e(m, 0);
        e[k - 1] = add;
        mono.add_term(e, w);
        auto it = next.find(nu);
        if (it == next.end()) next.emplace(nu, poly * mono);
        else it->second += poly * mono;
      }
    states = std::move(next);
  }
  auto it = states.find(lambda);
  return it == states.end() ? IntPolynomial(m) : it->second;
}

}  // namespace

IntPolynomial schur_qps(SchurKind kind, const StrictPartition& lambda, const std::optional<StrictPartition>& mu,
                        int m) {
  check_vars(m);
  switch (kind) {
    case SchurKind::Q: return skew_q(lambda.parts, mu ? mu->parts : Shape{}, m);
    case SchurKind::P:
      if (mu) throw std::invalid_argument("schur_qps: P is defined for straight shapes only");
      return skew_q(lambda.parts, {}, m).pow2_scaled(-lambda.length());
    case SchurKind::S: {
      if (mu) throw std::invalid_argument("schur_qps: S takes no inner shape");
      auto delta = StrictPartition::staircase(lambda.length());
      return skew_q(lambda.plus_delta().parts, delta.parts, m);
    }
  }
  throw std::logic_error("schur_qps: kind");
}

// ---------------------------------------------------------------- Stanley

const char* stanley_name(StanleyType t) {
  switch (t) {
    case StanleyType::A: return "A";
    case StanleyType::B: return "B";
    case StanleyType::C: return "C";
    case StanleyType::D: return "D";
  }
  return "?";
}

namespace {

using ElemSet = std::unordered_set<Elem, ElemHash>;
using States = std::unordered_map<Elem, IntPolynomial, ElemHash>;

// every prefix v of a reduced word of some target (v below it in right weak order)
ElemSet prefixes(const std::vector<Elem>& targets) {
  ElemSet seen;
  std::vector<Elem> todo;
  for (auto& t : targets)
    if (seen.insert(t).second) todo.push_back(t);
  while (!todo.empty()) {
    Elem v = todo.back();
    todo.pop_back();
    for (int s : generators(v.kind(), v.rank()))
      if (right_descent(v, s)) {
        Elem u = right_mul(v, s);
        if (seen.insert(u).second) todo.push_back(u);
      }
  }
  return seen;
}

std::vector<int> factor_letters(StanleyType t, int rank) {
  std::vector<int> seq;
  switch (t) {
    case StanleyType::A:
      for (int i = rank; i >= 1; --i) seq.push_back(i);
      break;
    case StanleyType::B:
      for (int i = rank - 1; i >= 1; --i) seq.push_back(i);
      seq.push_back(0);
      for (int i = 1; i < rank; ++i) seq.push_back(i);
      break;
    case StanleyType::D:
      for (int i = rank - 1; i >= 2; --i) seq.push_back(i);
      if (rank >= 2) {
        seq.push_back(1);
        seq.push_back(-1);
      }
      for (int i = 2; i < rank; ++i) seq.push_back(i);
      break;
    case StanleyType::C: break;
  }
  return seq;
}

IntPolynomial times_var(const IntPolynomial& p, int i, int e, long long c) {
  IntPolynomial mono(p.nvars());
  IntPolynomial::Exponent ex(p.nvars(), 0);
  ex[i - 1] = e;
  mono.add_term(ex, c);
  return p * mono;
}

void accumulate(States& s, const Elem& v, const IntPolynomial& p) {
  auto it = s.find(v);
  if (it == s.end()) s.emplace(v, p);
  else it->second += p;
}

bool step_ok(const ElemSet& pre, const Elem& v, int s, Elem& out) {
  if (right_descent(v, s)) return false;
  out = right_mul(v, s);
  return pre.count(out) > 0;
}

// unimodal words a_1 > ... > a_k < ... < a_r, each nonempty one weighted 2 x_i^r
void unimodal_walk(const ElemSet& pre, const std::vector<int>& gens, const Elem& v, int last, bool rising, int len,
                   int var, const IntPolynomial& base, States& next) {
  for (int s : gens) {
    if (len > 0) {
      if (rising && s <= last) continue;
      if (s == last) continue;
    }
    Elem u;
    if (!step_ok(pre, v, s, u)) continue;
    bool now_rising = len > 0 && (rising || s > last);
    accumulate(next, u, times_var(base, var, len + 1, 2));
    unimodal_walk(pre, gens, u, s, now_rising, len + 1, var, base, next);
  }
}

}  // namespace

IntPolynomial stanley_sum(StanleyType t, const std::vector<Elem>& ws, int m) {
  check_vars(m);
  if (ws.empty()) return IntPolynomial(m);
  const Kind kind = ws.front().kind();
  const int rank = ws.front().rank();
  for (auto& w : ws) {
    if (w.kind() != kind || w.rank() != rank) throw std::invalid_argument("stanley: mixed groups");
    if (length(w) > kMaxStanleyLength) throw std::out_of_range("stanley: length bound exceeded");
  }
  const bool ok = (t == StanleyType::A && kind == Kind::A) || (t == StanleyType::D && kind == Kind::D) ||
                  ((t == StanleyType::B || t == StanleyType::C) && kind == Kind::BC);
  if (!ok) throw std::invalid_argument(std::string("stanley: type ") + stanley_name(t) + " needs a matching group");
  const ElemSet pre = prefixes(ws);
  States states;
  states.emplace(Elem::identity(kind, rank), IntPolynomial::constant(m, 1));
  const auto seq = factor_letters(t, rank);
  const auto gens = generators(kind, rank);
  for (int var = 1; var <= m; ++var) {
    if (t == StanleyType::C) {
      States next = states;
      for (auto& [v, p] : states) unimodal_walk(pre, gens, v, 0, false, 0, var, p, next);
      states = std::move(next);
      continue;
    }
    for (int s : seq) {
      States next = states;
      for (auto& [v, p] : states) {
        Elem u;
        if (step_ok(pre, v, s, u)) accumulate(next, u, times_var(p, var, 1, 1));
      }
      states = std::move(next);
    }
  }
  IntPolynomial out(m);
  for (auto& w : ws) {
    auto it = states.find(w);
    if (it != states.end()) out += it->second;
  }
  return out;
}

IntPolynomial stanley(StanleyType t, const Elem& w, int m) { return stanley_sum(t, {w}, m); }

IntPolynomial schubert_A(const Elem& w) {
  if (w.kind() != Kind::A) throw std::invalid_argument("schubert_A: needs S_{n+1}");
  const int n = w.rank();
  IntPolynomial::Exponent e(n + 1);
  for (int i = 0; i <= n; ++i) e[i] = n - i;
  IntPolynomial p = IntPolynomial::monomial(n + 1, e);
  Elem cur = w0(Kind::A, n);
  Elem winv = inverse(w);
  while (cur != w) {
    Elem v = compose(winv, cur);
    int step = 0;
    for (int s : generators(Kind::A, n))
      if (right_descent(v, s)) {
        step = s;
        break;
      }
    p = p.divided_difference(step);
    cur = right_mul(cur, step);
  }
  return p.with_vars(n);
}

// ---------------------------------------------------------------- statistics

int kappa(const Elem& z) {
  int c = 0;
  for (int i = 1; i <= z.size(); ++i)
    if (z(i) < i) ++c;
  return c;
}

int nu(const Elem& z) {
  int c = 0;
  for (int i = 1; i <= z.size(); ++i)
    if (0 < z(i) && z(i) < i) ++c;
  return c;
}

namespace {
int half_below(const Elem& y, int shift) {
  int c = 0;
  for (int i = -y.size(); i <= y.size(); ++i)
    if (i != 0 && y(i) < i) ++c;
  c -= shift;
  if (c % 2) throw std::domain_error("delta: odd count for " + y.str());
  return c / 2;
}
}  // namespace

int delta_d(const Elem& z) {
  if (z.kind() != Kind::D) throw std::invalid_argument("delta: needs W+_n");
  return half_below(z, 0);
}

int delta_diamond(const Elem& z) {
  if (z.kind() != Kind::D) throw std::invalid_argument("delta_diamond: needs W+_n");
  return half_below(t0_left(z), 1);
}

InvStats inv_stats(const Elem& z) {
  InvStats s;
  s.kappa = kappa(z);
  s.nu = nu(z);
  if (z.kind() == Kind::D) {
    s.delta = delta_d(z);
    s.delta_diamond = delta_diamond(z);
  }
  return s;
}

// ---------------------------------------------------------------- involution Schubert / Stanley

const char* flavor_name(Flavor f) {
  static const char* names[] = {"AI", "AII", "AIII", "BI", "CI", "CII", "DI", "DII", "DIII"};
  return names[static_cast<int>(f)];
}

Flavor parse_flavor(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Flavor::DIII); ++i)
    if (s == flavor_name(static_cast<Flavor>(i))) return static_cast<Flavor>(i);
  throw std::invalid_argument("unknown flavor " + s);
}

namespace {

Kind flavor_kind(Flavor f) {
  switch (f) {
    case Flavor::AI:
    case Flavor::AII:
    case Flavor::AIII: return Kind::A;
    case Flavor::BI:
    case Flavor::CI:
    case Flavor::CII: return Kind::BC;
    default: return Kind::D;
  }
}

struct Source {
  Theta theta;
  Elem base;
};

Source flavor_source(Flavor f, const Elem& z) {
  const int n = z.rank();
  const Kind k = z.kind();
  switch (f) {
    case Flavor::AIII: return {Theta::Star, omega(n + 1, (n + 1) % 2)};
    case Flavor::AII: return {Theta::Id, fpf_base(k, n, 1)};
    case Flavor::CII: return {Theta::Id, sigma_fpf(n, n % 2)};
    case Flavor::DII: return {Theta::Diamond, Elem::identity(k, n)};
    case Flavor::DIII:
      if (n % 2 == 0) return {Theta::Id, fpf_base(k, n, 1)};
      return {Theta::Diamond, fpf_base(k, n, 2)};
    default: return {Theta::Id, Elem::identity(k, n)};
  }
}

}  // namespace

bool in_flavor_domain(Flavor f, const Elem& z) {
  if (z.kind() != flavor_kind(f)) return false;
  const int n = z.rank();
  switch (f) {
    case Flavor::AI:
    case Flavor::BI:
    case Flavor::CI:
    case Flavor::DI: return is_involution(z);
    case Flavor::AII: return n % 2 == 1 && is_involution(z) && is_fpf(z);
    case Flavor::AIII: return is_twisted_involution(Theta::Star, z);
    case Flavor::CII: return is_involution(z) && is_fpf(z);
    case Flavor::DII: return n >= 2 && is_twisted_involution(Theta::Diamond, z);
    case Flavor::DIII:
      if (n < 2) return false;
      if (n % 2 == 0) return is_involution(z) && is_fpf(z) && neg_count(z) == 0 && ell0(z) % 4 == 0;
      {
        Elem y = t0_left(z);
        return is_involution(y) && is_fpf(y) && neg_count(y) == 1;
      }
  }
  return false;
}

std::vector<Elem> flavor_atoms(Flavor f, const Elem& z) {
  if (!in_flavor_domain(f, z)) throw std::domain_error(z.str() + " is outside the " + flavor_name(f) + " domain");
  auto src = flavor_source(f, z);
  auto atoms = e_theta(src.theta, src.base, z);
  if (atoms.empty()) throw std::domain_error(z.str() + " has no " + flavor_name(f) + " atoms");
  return atoms;
}

IntPolynomial inv_schubert_stanley(Flavor f, const Elem& z, int m, Level level) {
  auto atoms = flavor_atoms(f, z);
  std::vector<Elem> ws;
  for (auto& a : atoms) ws.push_back(inverse(a));
  int power = 0;
  StanleyType t = StanleyType::A;
  switch (f) {
    case Flavor::AI: power = kappa(z); break;
    case Flavor::AII:
    case Flavor::AIII: break;
    case Flavor::BI: power = nu(z), t = StanleyType::C; break;
    case Flavor::CI: power = kappa(z), t = StanleyType::B; break;
    case Flavor::CII: t = StanleyType::C; break;
    case Flavor::DI: power = delta_d(z), t = StanleyType::D; break;
    case Flavor::DII: power = delta_diamond(z), t = StanleyType::D; break;
    case Flavor::DIII: t = StanleyType::D; break;
  }
  if (level == Level::Schubert) {
    if (t != StanleyType::A) throw std::invalid_argument("inv_schubert_stanley: Schubert level is type A only");
    IntPolynomial s(z.rank());
    for (auto& w : ws) s += schubert_A(w);
    return s.pow2_scaled(power);
  }
  return stanley_sum(t, ws, m).pow2_scaled(power);
}

// ---------------------------------------------------------------- identities

namespace {

constexpr int kMaxIdentityRank = 6;

StrictPartition step_two(int top) {
  std::vector<int> p;
  for (int a = top; a > 0; a -= 2) p.push_back(a);
  return StrictPartition(p);
}

IdentityReport skip(IdentityReport r, const std::string& why) {
  r.applicable = false;
  r.note = why;
  r.lhs = r.rhs = IntPolynomial(r.m);
  return r;
}

void bounds(int n, int m) {
  if (n < 1 || n > kMaxIdentityRank) throw std::out_of_range("n must lie in [1," + std::to_string(kMaxIdentityRank) + "]");
  check_vars(m);
}

IdentityReport finish(IdentityReport r, const IntPolynomial& lhs, const IntPolynomial& rhs) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.equal = lhs == rhs;
  return r;
}

}  // namespace

IdentityReport theorem_w0(char part, int n, int m) {
  bounds(n, m);
  IdentityReport r;
  r.id = std::string("w0-") + part;
  r.n = n;
  r.m = m;
  const Elem a0 = w0(Kind::A, n);
  switch (part) {
    case 'a': {
      auto lam = step_two(n);
      r.statement = "F^AI_w0 = Q" + lam.str();
      return finish(r, inv_schubert_stanley(Flavor::AI, a0, m, Level::Stanley),
                    schur_qps(SchurKind::Q, lam, std::nullopt, m));
    }
    case 'b': {
      if (n % 2 == 0) return skip(r, "n must be odd");
      auto lam = step_two(n - 1);
      r.statement = "F^AII_w0 = P" + lam.str();
      return finish(r, inv_schubert_stanley(Flavor::AII, a0, m, Level::Stanley),
                    schur_qps(SchurKind::P, lam, std::nullopt, m));
    }
    case 'c': {
      auto lam = step_two(n);
      r.statement = "F^AIII_w0 = P" + lam.str();
      return finish(r, inv_schubert_stanley(Flavor::AIII, a0, m, Level::Stanley),
                    schur_qps(SchurKind::P, lam, std::nullopt, m));
    }
    case 'd': {
      auto lam = StrictPartition::staircase(n);
      r.statement = "F^BI_w0 = S" + lam.str();
      return finish(r, inv_schubert_stanley(Flavor::BI, w0(Kind::BC, n), m, Level::Stanley),
                    schur_qps(SchurKind::S, lam, std::nullopt, m));
    }
  }
  throw std::invalid_argument("theorem_w0: part must be a, b, c or d");
}

const std::vector<std::string>& conjecture_ids() {
  static const std::vector<std::string> ids = {"CII-w0", "DI-w0",   "DII-w0", "DI-ups",
                                               "DII-ups", "DIII-ups", "BI-ups", "CII-ups"};
  return ids;
}

IdentityReport conjecture_report(const std::string& id, int n, int m) {
  if (std::find(conjecture_ids().begin(), conjecture_ids().end(), id) == conjecture_ids().end())
    throw std::invalid_argument("unknown conjecture " + id);
  bounds(n, m);
  IdentityReport r;
  r.id = id;
  r.n = n;
  r.m = m;
  const auto delta = StrictPartition::staircase(n);
  auto S = [&](const StrictPartition& l) { return schur_qps(SchurKind::S, l, std::nullopt, m); };
  auto F = [&](Flavor f, const Elem& z) { return inv_schubert_stanley(f, z, m, Level::Stanley); };
  const int up = (n + 1) / 2;
  if (id == "CII-w0") {
    auto lam = delta.ominus(up);
    r.statement = "F^CII_w0 = S" + lam.str();
    return finish(r, F(Flavor::CII, w0(Kind::BC, n)), S(lam));
  }
  if (id == "DI-w0" || id == "DII-w0") {
    if (n < 2) return skip(r, "needs n >= 2");
    const Elem z = w0(Kind::D, n);
    const bool one = id == "DI-w0";
    const Flavor f = one ? Flavor::DI : Flavor::DII;
    if (!in_flavor_domain(f, z)) return skip(r, "w0 is not a " + std::string(flavor_name(f)) + " involution");
    const int a = one ? up : (n + 2) / 2;
    auto lam = delta.ominus(a);
    r.statement = std::string("F^") + flavor_name(f) + "_w0 = S" + lam.str();
    return finish(r, F(f, z), S(lam));
  }
  if (id == "DI-ups" || id == "DII-ups") {
    const bool one = id == "DI-ups";
    if (n < 2) return skip(r, "needs n >= 2");
    if (one && n % 2) return skip(r, "needs n even");
    if (!one && n % 2 == 0) return skip(r, "needs n odd");
    const Flavor f = one ? Flavor::DI : Flavor::DII;
    const Elem z = upsilon0_plus(n);
    if (!in_flavor_domain(f, z)) return skip(r, "upsilon0+ is outside the domain");
    // literal δ = (n,...,1) is off by one in degree; compare against (n-1,...,1)
    auto lower = StrictPartition::staircase(n - 1);
    r.statement = std::string("F^") + flavor_name(f) + "_ups0+ = S" + lower.str();
    r.note = "staircase of length n-1";
    return finish(r, F(f, z), S(lower));
  }
  if (id == "DIII-ups") {
    const Elem z = upsilon0_plus(n + 1);
    if (!in_flavor_domain(Flavor::DIII, z)) return skip(r, "upsilon0+ is outside the DIII domain");
    auto lam = delta.ominus(up);
    const int c = n / 2;
    r.statement = "F^DIII_ups0+ (rank n+1) = 2^-" + std::to_string(c) + " S" + lam.str();
    IntPolynomial s = S(lam);
    IntPolynomial lhs = F(Flavor::DIII, z);
    try {
      return finish(r, lhs, s.pow2_scaled(-c));
    } catch (const std::domain_error&) {
      r.note = "2^-c S is not integral";
      r.lhs = lhs;
      r.rhs = s;
      r.equal = false;
      return r;
    }
  }
  if (id == "BI-ups") {
    const int c = n / 2;
    if (c == 0) return skip(r, "needs n >= 2");
    auto lam = delta.ominus(c);
    const Elem z = upsilon0(n);
    r.statement = "F^BI_ups0 = S" + lam.str();
    auto bi = F(Flavor::BI, z);
    r = finish(r, bi, S(lam));
    r.companion = bi.pow2_scaled(c) == F(Flavor::CI, z);
    return r;
  }
  // CII-ups, in W_{n+1}
  r.statement = "F^CII_ups0 (rank n+1) = S" + delta.str();
  return finish(r, F(Flavor::CII, upsilon0(n + 1)), S(delta));
}

}  // namespace brion
