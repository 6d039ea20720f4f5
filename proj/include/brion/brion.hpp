#pragma once

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "brion/clans.hpp"
#include "brion/coxeter.hpp"
#include "brion/matchings.hpp"
#include "brion/words.hpp"

namespace brion {

// ℓ̂_Θ over every Θ-twisted involution of the group
std::unordered_map<Elem, int, ElemHash> twisted_lengths(Theta th, Kind kind, int rank);

// E_Θ(y,z); sorted, possibly empty
std::vector<Elem> e_theta(Theta th, const Elem& y, const Elem& z);
// E_Θ(y,z) for every reachable z at once
std::unordered_map<Elem, std::vector<Elem>, ElemHash> e_theta_all(Theta th, const Elem& y);

// the base element y with E^G_K(z) = E_Θ(y,z)
Elem atom_base(const SymSpace& sp);
std::vector<Elem> extended_atoms(const SymSpace& sp, const Elem& z);
bool is_extended_atom(const SymSpace& sp, const Elem& z, const Elem& w);

// the W_n (or S_{n+1}) involution the matchings are built from: z, or t_0 z for DII/DIV
Elem matching_involution(const SymSpace& sp, const Elem& z);
// Twist(z) for AIII, Negate(z) or Negate(t_0 z) otherwise; empty for AI/AII
std::vector<int> matching_support(const SymSpace& sp, const Elem& z);

SignedMatching shape(const SymSpace& sp, const Elem& w);
std::vector<SignedMatching> matchings_for(const SymSpace& sp, const Elem& z);
Elem generator_bot(const SymSpace& sp, const Elem& z, const SignedMatching& M);
WordOrder space_order(const SymSpace& sp);
std::vector<SignedMatching> aligned_matchings(const SymSpace& sp, const Clan& g);

// rank function the order is graded by
int space_rank(const SymSpace& sp, const Word& w);

// {w : ⊥(z,M) ≾ w} inside the group
std::vector<Elem> cell(const SymSpace& sp, const Elem& z, const SignedMatching& M);

int d_z(const SymSpace& sp, const Elem& z, const Elem& w);

struct AtomDecomposition {
  Elem z;
  std::map<SignedMatching, std::set<Elem>> cells;
  std::map<Elem, int> dz;
};

// W(γ) over the aligned matchings
AtomDecomposition atoms_closed(const SymSpace& sp, const Clan& g);
// E(z) over every matching
AtomDecomposition decompose(const SymSpace& sp, const Elem& z);

Elem embed_di(int k, const Elem& w);
Elem embed_dii(int k, const Elem& w);  // into W⁺_{n+1}
Elem embed_diii(const Elem& w);
Elem embed_div(const Elem& w);          // into W⁺_{n+1}
Elem vee(const Elem& y);                // W⁺_n -> W⁺_{n+1}
Clan clan_vee(const SymSpace& sp, const Clan& g);  // DII or DIV clans
SymSpace space_vee(const SymSpace& sp);             // DII(p,q) -> DI(p∨,q∨), DIV(n) -> DIII(n+1)

struct Classification {
  bool multiplicity_free = false;
  bool uniform = false;
  bool alternating = false;
};
bool dz_vanishes(const SymSpace& sp, const Elem& z);
Classification classify(const SymSpace& sp, const Clan& g);

}  // namespace brion
