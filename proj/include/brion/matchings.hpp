#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brion/clans.hpp"

namespace brion {

// A symmetric perfect matching on X ⊔ -X.  Each twin pair is stored once:
// (a,b) with 0<a<b stands for {a,b} and {-b,-a}; (-c,c) is a trivial block.
class SignedMatching {
 public:
  SignedMatching() = default;
  // accepts blocks in any sign/order; twins are canonicalized
  SignedMatching(std::vector<int> support, const std::vector<std::pair<int, int>>& blocks);

  const std::vector<int>& support() const { return support_; }
  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
  std::vector<std::pair<int, int>> all_blocks() const;  // both twins, sorted

  std::vector<int> triv_set() const;
  int triv() const;
  int partner(int x) const;  // signed partner of x in X ⊔ -X

  bool noncrossing() const;
  bool empty() const { return support_.empty(); }

  std::string str() const;  // "{±{1,2},{±3}}"

  bool operator==(const SignedMatching& o) const {
    return support_ == o.support_ && blocks_ == o.blocks_;
  }
  bool operator!=(const SignedMatching& o) const { return !(*this == o); }
  bool operator<(const SignedMatching& o) const {
    return support_ != o.support_ ? support_ < o.support_ : blocks_ < o.blocks_;
  }

 private:
  std::vector<int> support_;
  std::vector<std::pair<int, int>> blocks_;
};

enum class TrivRule : std::uint8_t { Any, Exactly, AtLeast };

// NCSP(X), NCSP(X:k) or NCSP⁺(X:k), sorted
std::vector<SignedMatching> enumerate_ncsp(const std::vector<int>& X, TrivRule rule = TrivRule::Any,
                                           int k = 0);
// oracle: all symmetric perfect matchings of X ⊔ -X that are noncrossing
std::vector<SignedMatching> enumerate_ncsp_oracle(const std::vector<int>& X);

SignedMatching m_min(const std::vector<int>& X, int k);
std::vector<SignedMatching> lessdot_covers(const SignedMatching& N);
int nb_potential(const SignedMatching& M);

bool is_gamma_aligned(const SignedMatching& M, const Clan& g);

}  // namespace brion
