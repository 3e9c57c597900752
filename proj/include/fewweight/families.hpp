#pragma once
// The three function families the library knows closed forms for, plus the
// exponential sums attached to the Gold-type family.
//
//   monomial24: f(x) = Tr(lambda * x^((q-1)/4)) over F_{3^m}, m = 2k
//   quadprod:   f(x) = Tr(lambda * x^2) + Tr(ux) * Tr(vx) over F_{3^m}
//   gold:       f(x) = Tr(lambda * x^(p^h + 1)), p odd
//
// Each family has a spec struct holding validated parameters and derived
// quantities, a tabulator, and exact predicted Walsh data where available.

#include <optional>
#include <string>
#include <vector>

#include "fewweight/cyclotomic.hpp"
#include "fewweight/modp_linalg.hpp"
#include "fewweight/walsh.hpp"

namespace fewweight {

// ---- quarter-power monomial over F_{3^m}, m = 2k, gcd(k,3) = 1 ----

struct MonomialQuarterSpec {
  const Field* field = nullptr;
  u64 lambda = 0;
  u64 exponent = 0;  // (3^m - 1) / 4
  u32 k = 0;
  bool k_even = false;
  // true when t = Tr^m_2(lambda) is a nonzero square in F_9; only then is
  // the four-value spectrum below valid
  bool admissible = false;
};

MonomialQuarterSpec monomial_quarter_spec(const Field& field, u64 lambda);
PFunction monomial_quarter_function(const MonomialQuarterSpec& spec);

// value -> multiplicity over all q transform points
std::map<CycInt, u64> monomial_quarter_predicted_distribution(const MonomialQuarterSpec& spec);

// ---- Tr(lambda x^2) + Tr(ux)Tr(vx) over F_{3^m}, m > 3 ----

enum class QuadCase {
  case_i,   // trace triple (2,1,1): spectrum has norms {0, 3^(m+1)}
  case_ii,  // trace triple (1,0,0): spectrum has norms {0, 3^(m+2)}
  other,
};

struct QuadProductSpec {
  const Field* field = nullptr;
  u64 lambda = 0, u = 0, v = 0;
  QuadCase kind = QuadCase::other;
  int eta = 0;  // quadratic character of lambda
};

QuadProductSpec quad_product_spec(const Field& field, u64 lambda, u64 u, u64 v);
PFunction quad_product_function(const QuadProductSpec& spec);

// exact W_f(a) for case I / case II specs; errc::case_other otherwise
CycInt quad_product_predicted_walsh(const QuadProductSpec& spec, u64 a);

// ---- Tr(lambda x^(p^h + 1)) and its exponential sums ----

struct GoldSpec {
  const Field* field = nullptr;
  u64 lambda = 0;
  u32 h = 0;
  u32 d = 0;  // gcd(h, m)
  u32 k = 0;  // m / 2
  // true when m/d is even and lambda^((q-1)/(p^d+1)) = (-1)^(k/d); the
  // closed sums below require this
  bool admissible = false;
  int sign = 0;  // +1 if k/d odd, -1 if even; S(lambda, 0) = sign * p^(k+d)
};

GoldSpec gold_spec(const Field& field, u64 lambda, u32 h);
PFunction gold_function(const GoldSpec& spec);

// S(lambda, a) = sum_x w^Tr(lambda x^(p^h+1) + ax), by enumeration
CycInt weil_sum_direct(const Field& field, u64 lambda, u32 h, u64 a);

// Same sum from the closed form: S(lambda, 0) = sign * p^(k+d), and for
// a != 0 either 0 (when lambda^(p^h) x^(p^(2h)) + lambda x = -a^(p^h) has no
// root) or -(-1)^(k/d) p^(k+d) w^(-Tr(lambda x0^(p^h+1))) at any root x0.
// All roots are tried and must give the same value.
CycInt weil_sum_closed(const GoldSpec& spec, u64 a);
CycInt weil_sum_closed(const Field& field, u64 lambda, u32 h, u64 a);

// roots of lambda^(p^h) x^(p^(2h)) + lambda x = rhs, sorted by rank
std::vector<u64> solve_linearized(const Field& field, u64 lambda, u32 h, u64 rhs);

// sum over y, z in F_p^* of S(y*lambda, z*a) for a != 0; always rational
CycInt weil_triple_sum(const Field& field, u64 lambda, u32 h, u64 a);

// direct check that S(c*lambda, 0) is independent of c in F_p^*
bool weil_scaling_check(const Field& field, u64 lambda, u32 h);

// Solves the F_p-linear equation lambda^(p^h) x^(p^(2h)) + lambda x = rhs.
class LinearizedSolver {
 public:
  LinearizedSolver(const Field& field, u64 lambda, u32 h);
  std::optional<u64> solve_one(u64 rhs) const;  // some root, or nullopt
  std::vector<u64> all_solutions(u64 rhs) const;  // sorted by rank
  u64 kernel_size() const;

 private:
  const Field* field_;
  AffineSolverFp solver_;
  std::vector<u64> kernel_ranks_;
};

// Per-(lambda, h) state for weight computations: one solver for each
// scaled parameter y*lambda, y in F_p^*.
class GoldWeilContext {
 public:
  GoldWeilContext(const Field& field, u64 lambda, u32 h);  // requires admissible

  const GoldSpec& spec() const { return spec_; }
  i64 zero_sum() const;  // S(lambda, 0)

  // sum over y, z in F_p^* of S(y*lambda, z*a); rational, one of
  // {0, -sign (p-1)^2 p^(k+d), sign (p-1) p^(k+d)}  (sign as in GoldSpec)
  i64 triple_sum(u64 a) const;

 private:
  GoldSpec spec_;
  std::vector<LinearizedSolver> solvers_;  // index y-1 for parameter y*lambda
  std::vector<u64> scaled_lambda_;
};

// ---- textual function descriptions ----
//
//   zero
//   monomial24 lambda=<elt>
//   quadprod lambda=<elt> u=<elt> v=<elt>
//   gold lambda=<elt> h=<int>
//   table file=<path>         (one value per line, rank order)
//
// element literals as understood by Field::parse_element
PFunction parse_function(const Field& field, const std::string& text);

}  // namespace fewweight
