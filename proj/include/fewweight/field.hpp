#pragma once
// Arithmetic in F_{p^m} for odd primes p, represented as F_p[x] modulo a monic
// irreducible polynomial.  Elements are handled through their rank in the
// canonical enumeration: coefficient vectors [c0, c1, ..., c_{m-1}] (c0 the
// constant term) ordered lexicographically with c0 compared first.  Rank 0 is
// the zero element and rank r has coefficients c_i = digit_{m-1-i}(r) in base
// p.  All tables, spectra and defining sets downstream are indexed by rank.
//
// For p^m up to the table limit (2^20 by default) the constructor builds
// discrete log/antilog tables against a designated generator plus a full
// trace table, making mul/inv/pow/trace O(1).  Beyond the limit (hard cap
// 2^26 elements) operations fall back to polynomial arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "fewweight/common.hpp"

namespace fewweight {

// Parses either "c0 + c1*x + ... + cm*x^m" style text (signs, implicit
// coefficients and arbitrary term order allowed, e.g. "x^4-x^3-1") or a
// bracketed ascending coefficient list "[c0,c1,...,cm]".  Coefficients are
// reduced mod p.
std::vector<u32> parse_polynomial(const std::string& text, u32 p);
std::string polynomial_to_string(const std::vector<u32>& coeffs);

class Field;

// Value handle tying a rank to its field, for code where convenience beats
// raw speed.  Mixing handles from two Field instances throws, even if the
// instances were built with identical parameters.
class Elt {
 public:
  Elt() : f_(nullptr), r_(0) {}
  Elt(const Field* f, u64 r) : f_(f), r_(r) {}

  u64 rank() const { return r_; }
  const Field& field() const;
  bool is_zero() const { return r_ == 0; }
  std::vector<u32> coeffs() const;
  std::string str() const;  // "[c0,...,c_{m-1}]"

  Elt operator+(const Elt& o) const;
  Elt operator-(const Elt& o) const;
  Elt operator*(const Elt& o) const;
  Elt operator/(const Elt& o) const;
  Elt operator-() const;
  Elt pow(u64 e) const;
  Elt inv() const;
  u32 trace() const;
  bool operator==(const Elt& o) const;
  bool operator!=(const Elt& o) const { return !(*this == o); }

 private:
  const Field* f_;
  u64 r_;
};

struct FieldOptions {
  u64 size_cap = u64(1) << 26;    // hard limit on p^m
  u64 table_limit = u64(1) << 20; // log/trace tables built when p^m <= this
};

class Field {
 public:
  using Options = FieldOptions;

  // Default modulus: the lexicographically smallest monic irreducible of
  // degree m, coefficient vectors compared constant term first.
  Field(u32 p, u32 m, Options opt = {});
  Field(u32 p, u32 m, std::vector<u32> modulus, Options opt = {});

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  u32 characteristic() const { return p_; }
  u32 degree() const { return m_; }
  u64 order() const { return q_; }
  const std::vector<u32>& modulus() const { return modulus_; }
  bool has_tables() const { return tables_; }

  // ---- element handles ----
  Elt zero() const { return {this, 0}; }
  Elt one() const { return {this, one_}; }
  Elt elt(u64 rank) const;
  Elt from_coeffs(const std::vector<u32>& c) const;  // length <= m, reduced mod p
  Elt from_int(i64 v) const { return {this, scalar(static_cast<u32>(((v % p_) + p_) % p_))}; }
  // Designated generator: the modulus root when it is primitive (so that
  // "a^k" literals agree with a stated primitive modulus), otherwise the
  // lexicographically smallest generator.
  Elt generator() const { return {this, gen_}; }
  bool root_is_generator() const { return root_primitive_; }
  // Lexicographically smallest element of multiplicative order p^m - 1.
  Elt find_generator() const;
  // "a^k", an integer (negative allowed, reduced into the prime subfield), or
  // a coefficient list "[c0,...]".
  Elt parse_element(const std::string& text) const;

  // ---- rank-level arithmetic (the fast path) ----
  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;        // errc::division_by_zero on 0
  u64 pow(u64 a, u64 e) const; // a^0 = 1 for every a
  u64 frobenius(u64 a, u32 times = 1) const;  // a^(p^times)
  u64 scalar(u32 c) const;     // embeds c in [0,p) as a constant
  u32 scalar_value(u64 a) const;  // inverse of scalar(); errc::not_in_subfield if a is not constant

  // absolute trace down to F_p, as a value in [0, p)
  u32 trace(u64 a) const;
  // relative trace to the subfield F_{p^k}; k must divide m
  u64 rel_trace(u64 a, u32 k) const;
  // quadratic character: 0 for zero, otherwise +-1
  int quadratic_character(u64 a) const;
  // x nonzero and lying in F_{p^k}; true iff x is a square there
  bool is_square_in_subfield(u64 a, u32 k) const;
  u64 elt_order(u64 a) const;  // errc::zero_input on 0
  std::optional<u64> dlog(u64 a) const;  // exponent of the designated generator, if tables exist

  void coeffs_of(u64 rank, u32* out) const;           // out has length m
  u64 rank_from_coeffs(const u32* c) const;

  // Basis used by rank digits: digit i of a rank addresses basis_rank(i).
  u64 basis_rank(u32 i) const { return pow_p_[i]; }
  // Trace-dual basis gamma_j of the digit basis beta_i (trace(beta_i*gamma_j)
  // = delta_ij), found by inverting the trace Gram matrix over F_p.
  const std::vector<u64>& dual_basis() const { return dual_basis_; }

  u64 pow_p(u32 i) const { return pow_p_[i]; }  // p^i, i <= m
  const std::vector<std::pair<u64, u32>>& order_factors() const { return qm1_factors_; }

 private:
  void init(std::optional<std::vector<u32>> modulus, Options opt);
  u64 mul_generic(u64 a, u64 b) const;
  u64 pow_generic(u64 a, u64 e) const;
  u64 order_generic(u64 a) const;
  void build_tables();
  void build_dual_basis();

  u32 p_ = 0, m_ = 0;
  u64 q_ = 0;
  u64 one_ = 0;  // rank of 1
  std::vector<u32> modulus_;
  std::vector<u64> pow_p_;
  std::vector<std::pair<u64, u32>> qm1_factors_;  // prime factorization of q-1

  bool tables_ = false;
  bool root_primitive_ = false;
  u64 gen_ = 0;                    // designated generator rank
  mutable u64 lex_gen_ = 0;        // cached result of find_generator (0 = not yet known)
  std::vector<u32> exp_;           // exp_[i] = rank of gen^i, size q-1
  std::vector<u32> log_;           // inverse of exp_, log_[0] unused
  std::vector<u16> trace_;         // trace by rank (table mode)
  std::vector<u16> tr_basis_;      // trace of x^i (power basis), generic mode
  std::vector<u64> dual_basis_;
};

// Returns the n-th monic irreducible of degree m over F_p in the canonical
// order (n = 0 is the default modulus).  Used for cross-modulus checks.
std::vector<u32> nth_irreducible(u32 p, u32 m, u32 n);

bool is_prime_u64(u64 n);
std::vector<std::pair<u64, u32>> factorize_u64(u64 n);

// ---- Elt inline definitions ----

inline const Field& Elt::field() const {
  if (!f_) fail(errc::internal_error, "default-constructed element");
  return *f_;
}

namespace detail {
inline const Field* same_field(const Field* fa, const Field* fb) {
  if (fa == nullptr || fb == nullptr) fail(errc::internal_error, "default-constructed element");
  if (fa != fb) fail(errc::mixed_contexts, "elements from different fields");
  return fa;
}
}  // namespace detail

inline Elt Elt::operator+(const Elt& o) const {
  const Field* f = detail::same_field(f_, o.f_);
  return {f, f->add(r_, o.r_)};
}
inline Elt Elt::operator-(const Elt& o) const {
  const Field* f = detail::same_field(f_, o.f_);
  return {f, f->sub(r_, o.r_)};
}
inline Elt Elt::operator*(const Elt& o) const {
  const Field* f = detail::same_field(f_, o.f_);
  return {f, f->mul(r_, o.r_)};
}
inline Elt Elt::operator/(const Elt& o) const {
  const Field* f = detail::same_field(f_, o.f_);
  return {f, f->mul(r_, f->inv(o.r_))};
}
inline Elt Elt::operator-() const { return {&field(), field().neg(r_)}; }
inline Elt Elt::pow(u64 e) const { return {&field(), field().pow(r_, e)}; }
inline Elt Elt::inv() const { return {&field(), field().inv(r_)}; }
inline u32 Elt::trace() const { return field().trace(r_); }
inline bool Elt::operator==(const Elt& o) const {
  detail::same_field(f_, o.f_);
  return r_ == o.r_;
}
inline std::vector<u32> Elt::coeffs() const {
  std::vector<u32> c(field().degree());
  field().coeffs_of(r_, c.data());
  return c;
}

}  // namespace fewweight
