#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "brion/coxeter.hpp"
#include "brion/matchings.hpp"

namespace brion {

using PairSet = std::vector<std::pair<int, int>>;  // kept sorted by (second, first)

void sort_pairs(PairSet& P);
std::string word_str(const Word& w);  // "[2,-1,3]"

Word dedup(const Word& w);

enum class Assemble : std::uint8_t { Des, Asc };
Word assemble(PairSet P, Assemble mode);

// Cyc(z) in type A, Cyc^±(z) otherwise
PairSet cyc_set(const Elem& z);
// Cyc^±(z,M)
PairSet cyc_set(const Elem& z, const SignedMatching& M);
// AIII: {a<b} in M, or a > b = N+1-z(a)
PairSet twisted_cyc(const Elem& z, const SignedMatching& M);

struct NestedDescents {
  PairSet ndes;           // (w_i, w_{i+1}) descents, first-descent recursion
  std::vector<int> nres;  // sorted
};
NestedDescents nested_descents(const Word& w);
// same, but removing the descent chosen by pick(descent positions) at each step
NestedDescents nested_descents_by(const Word& w, const std::function<std::size_t(std::size_t)>& pick);
PairSet ndes_pm(const Word& w);

bool is_partial_permutation(const Word& w);
bool has_consecutive_321(const Word& w);
int inv_word(const Word& w);
int ell0_word(const Word& w);

// ½(inv(w_L^±) - ℓ0(w)) - inv(w_R); for k>0 the suffix rule
int rank_d(const Word& w, int k = 0);
// inv(w_L) - inv(w_R) with w_R the small letters of NDes
int rank_nested(const Word& w);
// inversions of w_{k+2} w_{k+4} ...
int rank_approx(const Word& w, int k);

Elem standardize(const Word& w);

enum class OrderKind : std::uint8_t { Precsim, Precapprox, PrecsimD, LlD, AIII, DI };

struct WordOrder {
  OrderKind kind = OrderKind::Precsim;
  int k = 0;
  std::string name() const;
};

inline WordOrder precsim(int k) { return {OrderKind::Precsim, k}; }
inline WordOrder precapprox(int k) { return {OrderKind::Precapprox, k}; }
inline WordOrder precsim_d() { return {OrderKind::PrecsimD, 0}; }
inline WordOrder ll_d() { return {OrderKind::LlD, 0}; }
inline WordOrder prec_aiii(int k) { return {OrderKind::AIII, k}; }
inline WordOrder precsim_di(int k) { return k == 0 ? precsim_d() : WordOrder{OrderKind::DI, k}; }

// words reachable by one upward move
std::vector<Word> up_moves(const WordOrder& order, const Word& w);
// words reachable by one downward move (Precsim only)
std::vector<Word> down_moves_precsim(int k, const Word& w);

bool order_leq(const WordOrder& order, const Word& u, const Word& v);
// closure of {u} under upward moves, restricted by keep when given; sorted
std::vector<Word> up_set(const WordOrder& order, const Word& u,
                         const std::function<bool(const Word&)>& keep = {});

// closed under ≾ in both directions and free of consecutive 321
bool well_nested_check(const std::vector<Word>& E);

}  // namespace brion
