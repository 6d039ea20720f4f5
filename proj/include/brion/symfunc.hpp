#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brion/coxeter.hpp"

namespace brion {

// sparse polynomial in x_1..x_m with int64 coefficients; arithmetic overflow throws
class IntPolynomial {
 public:
  using Exponent = std::vector<int>;

  explicit IntPolynomial(int nvars = 0);
  static IntPolynomial constant(int nvars, long long c);
  static IntPolynomial variable(int nvars, int i);  // x_i, 1-based
  static IntPolynomial monomial(int nvars, const Exponent& e, long long c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Exponent& e) const;
  void add_term(const Exponent& e, long long c);

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial scaled(long long c) const;
  IntPolynomial pow2_scaled(int k) const;  // 2^k, k may be negative; throws unless exact
  IntPolynomial divided_exact(long long d) const;
  bool operator==(const IntPolynomial& o) const = default;

  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  bool is_symmetric() const;
  bool nonnegative() const;
  long long coeff_sum() const;

  IntPolynomial with_vars(int m) const;    // pad with unused variables or drop those that occur nowhere
  IntPolynomial last_var_zero() const;     // x_m = 0, one fewer variable
  IntPolynomial swapped(int i) const;      // x_i <-> x_{i+1}
  IntPolynomial divided_difference(int i) const;

  // "3 * x1^2 x2 + x3", sorted by exponent vector; "0" when empty
  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<Exponent, long long> terms_;
};

struct StrictPartition {
  std::vector<int> parts;

  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> p);  // validates strictly decreasing positive parts

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string str() const;  // "(3,1)"
  bool operator==(const StrictPartition&) const = default;
  bool operator<(const StrictPartition& o) const { return parts < o.parts; }

  static StrictPartition staircase(int n);  // (n,...,2,1)
  StrictPartition ominus(int a) const;      // drop the part a; throws if absent
  StrictPartition plus_delta() const;       // λ + (ℓ,...,1)
};

enum class SchurKind { Q, P, S };

IntPolynomial schur_qps(SchurKind kind, const StrictPartition& lambda, const std::optional<StrictPartition>& mu,
                        int m);

enum class StanleyType { A, B, C, D };
const char* stanley_name(StanleyType t);

inline constexpr int kMaxStanleyLength = 40;
inline constexpr int kMaxVars = 8;

// F_w, F^B_w, FC_w or F^D_w truncated to x_1..x_m
IntPolynomial stanley(StanleyType t, const Elem& w, int m);
// Σ over ws, one shared pass; every w must share a kind and rank
IntPolynomial stanley_sum(StanleyType t, const std::vector<Elem>& ws, int m);

// 𝔖_w in x_1..x_n for w in S_{n+1}
IntPolynomial schubert_A(const Elem& w);

struct InvStats {
  int kappa = 0;
  int nu = 0;
  std::optional<int> delta;          // kind D only
  std::optional<int> delta_diamond;  // kind D only
};
InvStats inv_stats(const Elem& z);
int kappa(const Elem& z);
int nu(const Elem& z);
int delta_d(const Elem& z);        // throws unless kind D
int delta_diamond(const Elem& z);  // throws unless kind D

enum class Flavor { AI, AII, AIII, BI, CI, CII, DI, DII, DIII };
const char* flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

// atoms the flavor sums over (the w with w^{-1} in this set); throws on domain violation
std::vector<Elem> flavor_atoms(Flavor f, const Elem& z);
bool in_flavor_domain(Flavor f, const Elem& z);

enum class Level { Schubert, Stanley };
IntPolynomial inv_schubert_stanley(Flavor f, const Elem& z, int m, Level level);

struct IdentityReport {
  std::string id;
  int n = 0, m = 0;
  bool applicable = true;
  std::string note;  // reason when not applicable, or the scaling used
  std::string statement;
  IntPolynomial lhs, rhs;
  bool equal = false;
  std::optional<bool> companion;  // BI-ups: 2^{⌊n/2⌋} F̂^BI = F̂^CI at υ_0
};

// the w0 theorem, parts 'a'..'d'
IdentityReport theorem_w0(char part, int n, int m);

const std::vector<std::string>& conjecture_ids();
IdentityReport conjecture_report(const std::string& id, int n, int m);

}  // namespace brion
