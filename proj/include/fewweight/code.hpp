#pragma once
// Trace codes from defining sets.  For D = {d_1, ..., d_n} in F_q^* the code
// is { (Tr(x d_1), ..., Tr(x d_n)) : x in F_q }, a linear code of length n
// over F_p.  Three builders produce the same weight data:
//
//   build_code_direct      counts nonzero coordinates per codeword
//   build_code_via_walsh   p = 3 only, rewrites counts through the Walsh
//                          spectrum of an even f with f(0) = 0
//   build_gold_code_via_weil   defining set {f = 0} for the gold family,
//                          weights from closed exponential sums
//
// Every division in the transform routes is checked for exactness, so a
// wrong spectrum cannot silently round into a plausible weight.

#include <map>
#include <string>
#include <vector>

#include "fewweight/families.hpp"
#include "fewweight/walsh.hpp"

namespace fewweight {

enum class SetOrigin { preimage, gold_zeros, half, other };

struct DefiningSet {
  const Field* field = nullptr;
  std::vector<u64> elements;  // distinct nonzero ranks, ascending
  SetOrigin origin = SetOrigin::other;
  u32 b = 0;  // preimage value when origin == preimage
};

// D_b = {x in F_q^* : f(x) = b}
DefiningSet defining_set_preimage(const PFunction& f, u32 b);

// zero set of Tr(lambda x^(p^h+1)) on F_q^*
DefiningSet defining_set_gold(const Field& field, u64 lambda, u32 h);

// One element per {x, -x} pair (the smaller rank); errc::not_negation_closed
// unless D = -D.
DefiningSet half_set(const DefiningSet& d);

struct CodeSummary {
  u64 n = 0;
  u32 p = 0;
  u32 m = 0;          // degree of the source field
  u32 dimension = 0;  // log_p of the code size
  std::map<u64, u64> dist;  // weight -> number of codewords, weight >= 1
  bool injective = false;   // x -> c_x one-to-one, i.e. dimension == m

  u64 min_weight() const;  // 0 when the code is {0}
};

CodeSummary build_code_direct(const DefiningSet& d, unsigned jobs = 1);

CodeSummary build_code_via_walsh(const PFunction& f, u32 b);
CodeSummary build_code_via_walsh(const PFunction& f, u32 b, const WalshSpectrum& spectrum);

CodeSummary build_gold_code_via_weil(const Field& field, u64 lambda, u32 h);

// weight data of the code on a half set, given the code on the full
// negation-closed set: lengths and weights halve, multiplicities stay
CodeSummary halve_weights(const CodeSummary& cs);

// number of weight-2 words in the dual, from scalar collisions in D
u64 dual_a2(const DefiningSet& d);

struct PlessDiag {
  int failed_power = 0;  // 0 ok, else 1..3: first violated power identity
  std::string detail;
};

// first three power-moment identities for a dimension-m code whose dual has
// minimum weight >= 2 (guaranteed here since 0 is never in D)
bool pless_check(const CodeSummary& cs, u64 a2_dual, PlessDiag* diag = nullptr);

// largest d such that sum_{i<k} ceil(d / p^i) <= n
u64 griesmer_max_d(u64 n, u32 k, u32 p);

std::string weight_enumerator_string(const CodeSummary& cs);

}  // namespace fewweight
