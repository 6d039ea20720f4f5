#include "brion/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace brion {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::BC: return "BC";
    case Kind::D: return "D";
  }
  return "?";
}

const char* theta_name(Theta t) {
  switch (t) {
    case Theta::Id: return "id";
    case Theta::Star: return "star";
    case Theta::Diamond: return "diamond";
  }
  return "?";
}

Elem::Elem(Kind kind, const std::vector<int>& oneline) : kind_(kind) {
  const int m = static_cast<int>(oneline.size());
  if (m < 1 || m > kMaxSize) throw std::invalid_argument("element size out of range");
  std::vector<bool> seen(m + 1, false);
  int negs = 0;
  for (int i = 0; i < m; ++i) {
    int a = std::abs(oneline[i]);
    if (a < 1 || a > m || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
    if (oneline[i] < 0) ++negs;
    v_[i] = static_cast<std::int8_t>(oneline[i]);
  }
  if (kind == Kind::A && negs > 0) throw std::invalid_argument("negative entry in type A");
  if (kind == Kind::D && negs % 2) throw std::invalid_argument("odd number of negatives in type D");
  size_ = static_cast<std::int8_t>(m);
}

Elem Elem::raw(Kind kind, int size, const std::array<std::int8_t, kMaxSize>& v) {
  Elem e;
  e.kind_ = kind;
  e.size_ = static_cast<std::int8_t>(size);
  e.v_ = v;
  return e;
}

Elem Elem::identity(Kind kind, int rank) {
  int m = kind == Kind::A ? rank + 1 : rank;
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  return Elem(kind, v);
}

std::vector<int> Elem::oneline() const { return std::vector<int>(v_.begin(), v_.begin() + size_); }

std::string Elem::str() const {
  std::string s = "[";
  for (int i = 0; i < size_; ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + "]";
}

std::string Elem::tagged() const { return std::string(kind_name(kind_)) + ":" + str(); }

bool Elem::operator<(const Elem& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (size_ != o.size_) return size_ < o.size_;
  return v_ < o.v_;
}

std::size_t Elem::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 1000003u + static_cast<std::size_t>(size_);
  for (int i = 0; i < size_; ++i) h = h * 131u + static_cast<std::size_t>(v_[i] + 64);
  return h;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ' && c != '(' && c != ')') t += c;
  std::vector<int> out;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer: " + tok);
    out.push_back(v);
  }
  return out;
}

Elem parse_elem(const std::string& text, Kind fallback) {
  Kind k = fallback;
  std::string body = text;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string tag = text.substr(0, colon);
    if (tag == "A") k = Kind::A;
    else if (tag == "BC") k = Kind::BC;
    else if (tag == "D") k = Kind::D;
    else throw std::invalid_argument("unknown kind prefix: " + tag);
    body = text.substr(colon + 1);
  }
  return Elem(k, parse_int_list(body));
}

std::vector<int> generators(Kind kind, int rank) {
  std::vector<int> g;
  switch (kind) {
    case Kind::A:
      for (int i = 1; i <= rank; ++i) g.push_back(i);
      break;
    case Kind::BC:
      for (int i = 0; i < rank; ++i) g.push_back(i);
      break;
    case Kind::D:
      if (rank >= 2) g.push_back(-1);
      for (int i = 1; i < rank; ++i) g.push_back(i);
      break;
  }
  return g;
}

bool valid_generator(Kind kind, int rank, int i) {
  switch (kind) {
    case Kind::A: return i >= 1 && i <= rank;
    case Kind::BC: return i >= 0 && i < rank;
    case Kind::D: return (i == -1 && rank >= 2) || (i >= 1 && i < rank);
  }
  return false;
}

Elem simple(Kind kind, int rank, int i) {
  if (!valid_generator(kind, rank, i)) throw std::out_of_range("generator index out of range");
  return right_mul(Elem::identity(kind, rank), i);
}

Elem compose(const Elem& u, const Elem& v) {
  if (u.kind() != v.kind() || u.size() != v.size()) throw std::invalid_argument("kind mismatch");
  auto d = v.data();
  for (int i = 0; i < v.size(); ++i) d[i] = static_cast<std::int8_t>(u(v[i]));
  return Elem::raw(u.kind(), u.size(), d);
}

Elem inverse(const Elem& u) {
  std::array<std::int8_t, kMaxSize> d{};
  for (int i = 0; i < u.size(); ++i) {
    int x = u[i];
    if (x > 0) d[x - 1] = static_cast<std::int8_t>(i + 1);
    else d[-x - 1] = static_cast<std::int8_t>(-(i + 1));
  }
  return Elem::raw(u.kind(), u.size(), d);
}

Elem right_mul(const Elem& w, int i) {
  auto d = w.data();
  if (i >= 1) {
    std::swap(d[i - 1], d[i]);
  } else if (i == 0) {
    d[0] = static_cast<std::int8_t>(-d[0]);
  } else {
    std::int8_t a = d[0], b = d[1];
    d[0] = static_cast<std::int8_t>(-b);
    d[1] = static_cast<std::int8_t>(-a);
  }
  return Elem::raw(w.kind(), w.size(), d);
}

namespace {
int gen_act(int i, int x) {
  int ax = std::abs(x), sg = x < 0 ? -1 : 1;
  if (i >= 1) {
    if (ax == i) return sg * (i + 1);
    if (ax == i + 1) return sg * i;
    return x;
  }
  if (i == 0) return ax == 1 ? -x : x;
  // t_{-1}: 1 -> -2, 2 -> -1
  if (ax == 1) return -sg * 2;
  if (ax == 2) return -sg * 1;
  return x;
}
}  // namespace

Elem left_mul(int i, const Elem& w) {
  auto d = w.data();
  for (int j = 0; j < w.size(); ++j) d[j] = static_cast<std::int8_t>(gen_act(i, d[j]));
  return Elem::raw(w.kind(), w.size(), d);
}

int inv_count(const Elem& w) {
  int c = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

int inv_pm(const Elem& w) {
  // word w(-n)..w(-1) w(1)..w(n)
  const int n = w.size();
  std::vector<int> s;
  s.reserve(2 * n);
  for (int i = n; i >= 1; --i) s.push_back(w(-i));
  for (int i = 1; i <= n; ++i) s.push_back(w(i));
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++c;
  return c;
}

int ell0(const Elem& w) {
  int c = 0;
  for (int i = 0; i < w.size(); ++i)
    if (w[i] < 0) ++c;
  return c;
}

int length(const Elem& w) {
  switch (w.kind()) {
    case Kind::A: return inv_count(w);
    case Kind::BC: return (inv_pm(w) + ell0(w)) / 2;
    case Kind::D: return (inv_pm(w) - ell0(w)) / 2;
  }
  return 0;
}

bool right_descent(const Elem& w, int i) {
  if (i >= 1) return w[i - 1] > w[i];
  if (i == 0) return w[0] < 0;
  return w[0] + w[1] < 0;
}

bool left_descent(const Elem& w, int i) { return right_descent(inverse(w), i); }

Word reduced_word(const Elem& w) {
  Word out;
  Elem cur = w;
  auto gens = generators(w.kind(), w.rank());
  for (;;) {
    bool found = false;
    for (int i : gens) {
      if (right_descent(cur, i)) {
        out.push_back(i);
        cur = right_mul(cur, i);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return out;
}

namespace {
void collect_words(const Elem& w, const std::vector<int>& gens, Word& prefix, std::vector<Word>& out,
                   std::size_t limit) {
  if (limit && out.size() >= limit) return;
  bool any = false;
  for (int i : gens) {
    if (!right_descent(w, i)) continue;
    any = true;
    prefix.push_back(i);
    collect_words(right_mul(w, i), gens, prefix, out, limit);
    prefix.pop_back();
    if (limit && out.size() >= limit) return;
  }
  if (!any) out.push_back(prefix);
}
}  // namespace

std::vector<Word> reduced_words(const Elem& w, std::size_t limit) {
  std::vector<Word> out;
  Word prefix;
  collect_words(w, generators(w.kind(), w.rank()), prefix, out, limit);
  return out;
}

Elem from_word(Kind kind, int rank, const Word& word) {
  Elem w = Elem::identity(kind, rank);
  for (int i : word) {
    if (!valid_generator(kind, rank, i)) throw std::out_of_range("generator index out of range");
    w = left_mul(i, w);
  }
  return w;
}

Elem demazure_right(const Elem& w, int i) { return right_descent(w, i) ? w : right_mul(w, i); }

Elem demazure_left(int i, const Elem& w) { return left_descent(w, i) ? w : left_mul(i, w); }

Elem demazure(const Elem& u, const Elem& v) {
  if (u.kind() != v.kind() || u.size() != v.size()) throw std::invalid_argument("kind mismatch");
  Word word = reduced_word(v);
  Elem out = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_right(out, *it);
  return out;
}

Elem apply_theta(Theta th, const Elem& w) {
  switch (th) {
    case Theta::Id: return w;
    case Theta::Star: {
      if (w.kind() != Kind::A) throw std::invalid_argument("star needs type A");
      const int m = w.size();
      auto d = w.data();
      for (int i = 1; i <= m; ++i) d[i - 1] = static_cast<std::int8_t>(m + 1 - w(m + 1 - i));
      return Elem::raw(w.kind(), m, d);
    }
    case Theta::Diamond: {
      if (w.kind() != Kind::D) throw std::invalid_argument("diamond needs type D");
      auto d = w.data();
      for (int i = 1; i <= w.size(); ++i) {
        int j = i == 1 ? -1 : i;
        d[i - 1] = static_cast<std::int8_t>(gen_act(0, w(j)));
      }
      return Elem::raw(w.kind(), w.size(), d);
    }
  }
  return w;
}

int theta_generator(Theta th, Kind kind, int rank, int i) {
  switch (th) {
    case Theta::Id: return i;
    case Theta::Star:
      if (kind != Kind::A) throw std::invalid_argument("star needs type A");
      return rank + 1 - i;
    case Theta::Diamond:
      if (kind != Kind::D) throw std::invalid_argument("diamond needs type D");
      return i == 1 ? -1 : (i == -1 ? 1 : i);
  }
  return i;
}

bool is_twisted_involution(Theta th, const Elem& z) { return apply_theta(th, z) == inverse(z); }

Elem demazure_conjugate_generic(Theta th, const Elem& z, int i) {
  int j = theta_generator(th, z.kind(), z.rank(), i);
  return demazure_right(demazure_left(j, z), i);
}

Elem demazure_conjugate(Theta th, const Elem& z, int i) {
  if (!valid_generator(z.kind(), z.rank(), i)) throw std::out_of_range("generator index out of range");
  if (!is_twisted_involution(th, z)) throw std::invalid_argument("not a twisted involution");
  const int n = z.rank();
  if (z.kind() == Kind::A) {
    if (th == Theta::Id) {
      if (z(i) == i && z(i + 1) == i + 1) return right_mul(z, i);
      if (z(i) > z(i + 1)) return z;
      return left_mul(i, right_mul(z, i));
    }
    if (z(i) == n + 1 - i && z(i + 1) == n + 2 - i) return right_mul(z, i);
    if (z(i) > z(i + 1)) return z;
    return left_mul(n + 1 - i, right_mul(z, i));
  }
  if (i >= 1 && !(th == Theta::Diamond && i == 1)) {
    if ((z(i) == i && z(i + 1) == i + 1) || (z(i) == -i - 1 && z(i + 1) == -i)) return right_mul(z, i);
    if (z(i) > z(i + 1)) return z;
    return left_mul(i, right_mul(z, i));
  }
  if (i == 0) {
    if (z(1) == 1) return right_mul(z, 0);
    if (z(1) < 0) return z;
    return left_mul(0, right_mul(z, 0));
  }
  const int z1 = z(1), z2 = z(2);
  if (th == Theta::Id) {  // i = -1
    if ((z1 == 1 && z2 == 2) || (z1 == 2 && z2 == 1)) return right_mul(z, -1);
    if (z1 == -1 && z2 == 2) return right_mul(right_mul(z, -1), 1);
    if (z1 + z2 < 0) return z;
    return left_mul(-1, right_mul(z, -1));
  }
  if (i == 1) {
    if ((z1 == -1 && z2 == 2) || (z1 == -2 && z2 == 1)) return right_mul(z, 1);
    if (z1 == 1 && z2 == 2) return right_mul(right_mul(z, -1), 1);
    if (z1 > z2) return z;
    return left_mul(-1, right_mul(z, 1));
  }
  // diamond, i = -1
  if ((z1 == -1 && z2 == 2) || (z1 == 2 && z2 == -1)) return right_mul(z, -1);
  if (z1 == 1 && z2 == 2) return right_mul(right_mul(z, -1), 1);
  if (z1 + z2 < 0) return z;
  return left_mul(1, right_mul(z, -1));
}

Elem w0(Kind kind, int rank) {
  if (kind == Kind::A) {
    std::vector<int> v(rank + 1);
    for (int i = 0; i <= rank; ++i) v[i] = rank + 1 - i;
    return Elem(kind, v);
  }
  std::vector<int> v(rank);
  for (int i = 0; i < rank; ++i) v[i] = -(i + 1);
  if (kind == Kind::D && rank % 2) v[0] = 1;
  return Elem(kind, v);
}

Elem omega(int n, int k) {
  if (k < 0 || k > n || (n - k) % 2) throw std::invalid_argument("omega: n-k must be even");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  const int lo = (n - k) / 2, hi = (n + k) / 2;  // reverse positions lo+1..hi
  std::reverse(v.begin() + lo, v.begin() + hi);
  return Elem(Kind::A, v);
}

Elem sigma(Kind kind, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sigma: k out of range");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i < k ? -(i + 1) : i + 1;
  return Elem(kind, v);
}

Elem sigma_hat(int n, int k) {
  auto s = sigma(Kind::BC, n, k);
  if (k % 2) s = t0_left(s);
  return with_kind(s, Kind::D);
}

Elem sigma_fpf(int n, int k) {
  if (k < 0 || k > n || (n - k) % 2) throw std::invalid_argument("sigma_fpf: n-k must be even");
  std::vector<int> v(n);
  for (int i = 0; i < k; ++i) v[i] = -(i + 1);
  for (int i = k; i < n; i += 2) {
    v[i] = i + 2;
    v[i + 1] = i + 1;
  }
  return Elem(Kind::BC, v);
}

Elem upsilon0(int n) {
  std::vector<int> v(n);
  for (int i = 0; i + 1 < n; i += 2) {
    v[i] = -(i + 2);
    v[i + 1] = -(i + 1);
  }
  if (n % 2) v[n - 1] = -n;
  return Elem(Kind::BC, v);
}

Elem upsilon0_plus(int n) {
  auto v = upsilon0(n).oneline();
  if (n % 2 == 0 && n % 4 == 2) {
    v[0] = 2;
    v[1] = 1;
  } else if (n % 2) {
    v[1] = 1;
  }
  return Elem(Kind::D, v);
}

Elem fpf_base(Kind kind, int rank, int first) {
  Elem e = Elem::identity(kind, rank);
  const int top = kind == Kind::A ? rank : rank - 1;
  for (int i = first; i <= top; i += 2) e = right_mul(e, i);
  return e;
}

Elem bar(const Elem& w) {
  auto d = w.data();
  for (int i = 0; i < w.size(); ++i) d[i] = static_cast<std::int8_t>(-d[i]);
  return Elem::raw(Kind::BC, w.size(), d);
}

Elem with_kind(const Elem& w, Kind kind) { return Elem(kind, w.oneline()); }

Elem t0_left(const Elem& w) {
  auto d = w.data();
  for (int i = 0; i < w.size(); ++i) d[i] = static_cast<std::int8_t>(gen_act(0, d[i]));
  return Elem::raw(Kind::BC, w.size(), d);
}

std::vector<int> es_normalize(const std::vector<int>& word) {
  if (word.empty()) return word;
  int negs = static_cast<int>(std::count_if(word.begin(), word.end(), [](int x) { return x < 0; }));
  auto out = word;
  if (negs % 2) out[0] = -out[0];
  return out;
}

PermStats perm_stats(const Elem& w) {
  PermStats s;
  const int m = w.size();
  for (int i = 1; i <= m; ++i) {
    if (w(i) == i) s.fix_set.push_back(i);
    if (w(i) == -i) s.negate_set.push_back(i);
    if (w.kind() == Kind::A && w(i) + i == m + 1) s.twist_set.push_back(i);
  }
  s.twist = static_cast<int>(s.twist_set.size());
  s.neg = static_cast<int>(s.negate_set.size());
  s.ell0 = ell0(w);
  s.inv = inv_count(w);
  s.inv_pm = w.kind() == Kind::A ? s.inv : inv_pm(w);
  return s;
}

bool is_involution(const Elem& w) { return compose(w, w) == Elem::identity(w.kind(), w.rank()); }

bool is_fpf(const Elem& w) {
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) == i) return false;
  return true;
}

int neg_count(const Elem& w) {
  int c = 0;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) == -i) ++c;
  return c;
}

void for_each_element(Kind kind, int rank, const std::function<void(const Elem&)>& f, bool big) {
  if (rank > 6 && !big) throw std::out_of_range("group enumeration is limited to rank <= 6");
  const int m = kind == Kind::A ? rank + 1 : rank;
  std::array<std::int8_t, kMaxSize> p{};
  for (int i = 0; i < m; ++i) p[i] = static_cast<std::int8_t>(i + 1);
  do {
    if (kind == Kind::A) {
      f(Elem::raw(kind, m, p));
      continue;
    }
    for (int mask = 0; mask < (1 << m); ++mask) {
      if (kind == Kind::D && __builtin_popcount(mask) % 2) continue;
      auto d = p;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) d[i] = static_cast<std::int8_t>(-d[i]);
      f(Elem::raw(kind, m, d));
    }
  } while (std::next_permutation(p.begin(), p.begin() + m));
}

std::vector<Elem> enumerate_group(Kind kind, int rank, bool big) {
  std::vector<Elem> out;
  for_each_element(kind, rank, [&](const Elem& e) { out.push_back(e); }, big);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> twisted_involutions(Theta th, Kind kind, int rank, bool big) {
  std::vector<Elem> out;
  for_each_element(
      kind, rank,
      [&](const Elem& e) {
        if (is_twisted_involution(th, e)) out.push_back(e);
      },
      big);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> cycles(const Elem& w) {
  std::vector<int> pts;
  if (w.kind() == Kind::A) {
    for (int i = 1; i <= w.size(); ++i) pts.push_back(i);
  } else {
    for (int i = -w.size(); i <= w.size(); ++i)
      if (i) pts.push_back(i);
  }
  std::map<int, bool> seen;
  std::vector<std::vector<int>> out;
  for (int a : pts) {
    if (seen[a]) continue;
    std::vector<int> c;
    int x = a;
    while (!seen[x]) {
      seen[x] = true;
      c.push_back(x);
      x = w(x);
    }
    if (c.size() >= 2) {
      std::sort(c.begin(), c.end());
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace brion
