#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brion/coxeter.hpp"

namespace brion {

enum class Space : std::uint8_t { AI, AII, AIII, BI, CI, CII, DI, DII, DIII, DIV };

const char* space_name(Space s);
Space parse_space_name(const std::string& s);

struct SymSpace {
  Space type = Space::AI;
  int n = 1;  // rank
  int p = 0, q = 0;

  Kind kind() const;
  Theta theta() const;
  int k() const;  // 0 where unused
  bool has_pq() const;  // AIII, BI, CII, DI, DII
  std::string label() const;  // "BI(5,4)", "CI(4)"
};

// n for AI/AII/CI/DIII/DIV, (p,q) for the others.  Throws on bad parameters.
SymSpace make_space(Space type, int n);
SymSpace make_space(Space type, int p, int q);

// every admissible space with rank in [1, max_rank]
std::vector<SymSpace> all_spaces(int max_rank);

class Clan {
 public:
  static constexpr int kPlus = -1;
  static constexpr int kMinus = -2;

  Clan() = default;
  Clan(std::vector<int> base, std::vector<int> plus, std::vector<int> minus,
       std::vector<std::pair<int, int>> matching);

  const std::vector<int>& base() const { return base_; }
  int size() const { return static_cast<int>(base_.size()); }
  int index_of(int x) const;  // -1 when x is not in the base
  bool contains_point(int x) const { return index_of(x) >= 0; }

  bool is_plus(int x) const;
  bool is_minus(int x) const;
  bool is_sign(int x) const { return is_plus(x) || is_minus(x); }
  int partner(int x) const;  // throws if x is a sign point

  std::vector<int> plus() const;
  std::vector<int> minus() const;
  std::vector<std::pair<int, int>> matching() const;  // sorted pairs a<b
  int type() const;  // |S+| - |S-|

  // canonical one-line: "(1,+,1)", labels by first occurrence
  std::string one_line() const;

  bool operator==(const Clan& o) const { return base_ == o.base_ && mate_ == o.mate_; }
  bool operator!=(const Clan& o) const { return !(*this == o); }
  bool operator<(const Clan& o) const;
  std::size_t hash() const;

  // raw mate vector over base positions: partner index, or kPlus / kMinus
  const std::vector<int>& mates() const { return mate_; }
  static Clan from_mates(std::vector<int> base, std::vector<int> mates);

 private:
  std::vector<int> base_;
  std::vector<int> mate_;
};

struct ClanHash {
  std::size_t operator()(const Clan& c) const { return c.hash(); }
};

std::vector<int> base_plain(int m);                   // [m]
std::vector<int> base_signed(int n, bool with_zero);  // [±n] (⊔ {0})

// symbols: "+", "-" or integer labels
Clan clan_from_one_line(const std::vector<int>& base, const std::vector<std::string>& symbols);
Clan clan_from_one_line(const std::vector<int>& base, const std::string& text);

Clan reversal(const Clan& g);
Clan conjugate(const Clan& g);
Clan toggle(const Clan& g, const std::vector<int>& Y);
// sign sets of d inside those of g, and the matchings agree where d is matched
bool contains(const Clan& d, const Clan& g);
bool equivalent(const Clan& g, const Clan& d);  // same sign word after forgetting labels

struct ClanPredicates {
  int type = 0;
  bool symmetric = false;
  bool skew_symmetric = false;
  bool strict = false;
  bool even_strict = false;
  int h = 0;
};
ClanPredicates clan_predicates(const Clan& g);

// every clan on the base
std::vector<Clan> all_clans(const std::vector<int>& base);
// clans fixed by reversal (skew = false) or by conjugate-of-reversal (skew = true)
std::vector<Clan> symmetric_clans(const std::vector<int>& base, bool skew);

std::vector<int> space_base(const SymSpace& sp);
std::vector<Clan> enumerate_clans(const SymSpace& sp, bool big = false);
bool in_index_set(const SymSpace& sp, const Clan& g);
Clan dense_clan(const SymSpace& sp);

// AI/AII indices are involutions; they are carried as clans on [n+1]
// with S+ = fixed points and M = the 2-cycles.
Clan clan_of_involution(const Elem& z);
Elem involution_of_clan(const Clan& g);

Elem rs_map(const SymSpace& sp, const Clan& g);
std::vector<Elem> rs_image(const SymSpace& sp, bool big = false);
bool in_rs_image(const SymSpace& sp, const Elem& z);
Elem dense_element(const SymSpace& sp);  // the closed form for ψ(dense)

// printable index: one-line involution for AI/AII, clan one-line otherwise
std::string index_label(const SymSpace& sp, const Clan& g);

}  // namespace brion

template <>
struct std::hash<brion::Clan> {
  std::size_t operator()(const brion::Clan& c) const { return c.hash(); }
};
