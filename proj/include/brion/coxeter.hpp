#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace brion {

// A: S_{n+1} on [n+1].  BC: W_n on [±n].  D: even-signed W_n.
enum class Kind : std::uint8_t { A, BC, D };

const char* kind_name(Kind k);

inline constexpr int kMaxSize = 12;

class Elem {
 public:
  Elem() = default;
  // Validates the one-line word against the kind.
  Elem(Kind kind, const std::vector<int>& oneline);

  static Elem identity(Kind kind, int rank);

  Kind kind() const { return kind_; }
  int size() const { return size_; }
  // Coxeter rank: size-1 for A, size otherwise.
  int rank() const { return kind_ == Kind::A ? size_ - 1 : size_; }

  // w(i) for i in [size], extended by w(-i) = -w(i) and w(0) = 0.
  int operator()(int i) const {
    if (i > 0) return v_[i - 1];
    if (i < 0) return -v_[-i - 1];
    return 0;
  }
  int operator[](int idx) const { return v_[idx]; }

  std::vector<int> oneline() const;
  std::string str() const;   // "[-2,1,3]"
  std::string tagged() const;  // "BC:[-2,1,3]"

  bool operator==(const Elem& o) const {
    return kind_ == o.kind_ && size_ == o.size_ && v_ == o.v_;
  }
  bool operator!=(const Elem& o) const { return !(*this == o); }
  bool operator<(const Elem& o) const;

  std::size_t hash() const;

  // unchecked raw construction for hot loops
  static Elem raw(Kind kind, int size, const std::array<std::int8_t, kMaxSize>& v);
  std::array<std::int8_t, kMaxSize>& data() { return v_; }
  const std::array<std::int8_t, kMaxSize>& data() const { return v_; }

 private:
  Kind kind_ = Kind::A;
  std::int8_t size_ = 0;
  std::array<std::int8_t, kMaxSize> v_{};
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const { return e.hash(); }
};

// "[1,-2]" or "D:[1,-2]"; the kind prefix wins over the fallback.
Elem parse_elem(const std::string& text, Kind fallback);
std::vector<int> parse_int_list(const std::string& text);

// generator indices: A 1..n, BC 0..n-1, D -1,1..n-1
std::vector<int> generators(Kind kind, int rank);
bool valid_generator(Kind kind, int rank, int i);

Elem simple(Kind kind, int rank, int i);
Elem compose(const Elem& u, const Elem& v);
Elem inverse(const Elem& u);
Elem right_mul(const Elem& w, int i);  // w * t_i
Elem left_mul(int i, const Elem& w);   // t_i * w

int inv_count(const Elem& w);
int inv_pm(const Elem& w);
int ell0(const Elem& w);
int length(const Elem& w);

bool right_descent(const Elem& w, int i);  // l(w t_i) < l(w)
bool left_descent(const Elem& w, int i);

// right-to-left: (i_1..i_m) means t_{i_m} ... t_{i_1}
using Word = std::vector<int>;
Word reduced_word(const Elem& w);
std::vector<Word> reduced_words(const Elem& w, std::size_t limit = 0);
Elem from_word(Kind kind, int rank, const Word& word);

Elem demazure(const Elem& u, const Elem& v);
Elem demazure_right(const Elem& w, int i);  // w∘t_i
Elem demazure_left(int i, const Elem& w);   // t_i∘w

enum class Theta : std::uint8_t { Id, Star, Diamond };
const char* theta_name(Theta t);

Elem apply_theta(Theta th, const Elem& w);
int theta_generator(Theta th, Kind kind, int rank, int i);
bool is_twisted_involution(Theta th, const Elem& z);
// Θ(t_i)∘z∘t_i by the case tables; throws if z is not Θ-twisted
Elem demazure_conjugate(Theta th, const Elem& z, int i);
// same value from the generic triple product
Elem demazure_conjugate_generic(Theta th, const Elem& z, int i);

Elem w0(Kind kind, int rank);
Elem omega(int n, int k);          // ω_k^n in S_n
Elem sigma(Kind kind, int n, int k);   // σ_k^n
Elem sigma_hat(int n, int k);      // σ̂_k^n in W⁺_n
Elem sigma_fpf(int n, int k);      // σ^n_{k×fpf} in W_n
Elem upsilon0(int n);              // in W_n
Elem upsilon0_plus(int n);         // in W⁺_n
Elem fpf_base(Kind kind, int rank, int first);  // t_first t_{first+2} ...

Elem bar(const Elem& w);  // i ↦ -w(i); kind BC
Elem with_kind(const Elem& w, Kind kind);
Elem t0_left(const Elem& w);  // t_0·w as an element of W_n
std::vector<int> es_normalize(const std::vector<int>& word);

struct PermStats {
  std::vector<int> twist_set, fix_set, negate_set;
  int twist = 0, neg = 0, ell0 = 0, inv = 0, inv_pm = 0;
};
PermStats perm_stats(const Elem& w);

bool is_involution(const Elem& w);
bool is_fpf(const Elem& w);  // no fixed points in [size]
int neg_count(const Elem& w);

// enumeration, gated at rank <= 6 unless big
std::vector<Elem> enumerate_group(Kind kind, int rank, bool big = false);
void for_each_element(Kind kind, int rank, const std::function<void(const Elem&)>& f,
                      bool big = false);
std::vector<Elem> twisted_involutions(Theta th, Kind kind, int rank, bool big = false);

// cycles of w acting on [±n] (or [n+1] for A) with at least two elements
std::vector<std::vector<int>> cycles(const Elem& w);

}  // namespace brion

template <>
struct std::hash<brion::Elem> {
  std::size_t operator()(const brion::Elem& e) const { return e.hash(); }
};
