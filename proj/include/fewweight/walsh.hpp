#pragma once
// Tabulated p-ary functions f : F_{p^m} -> F_p and their exact Walsh
// transforms W_f(a) = sum_x w^(f(x) - Tr(ax)) as cyclotomic integers.
//
// walsh_naive evaluates the defining sum for one a.  walsh_full computes the
// whole spectrum at once: writing x in the rank-digit basis and a in its
// trace-dual basis turns Tr(ax) into a coordinate dot product, so the
// transform factors into m length-p passes (lowest digit first) over a
// q x p table of root-of-unity exponent counts.

#include <functional>
#include <map>
#include <vector>

#include "fewweight/cyclotomic.hpp"
#include "fewweight/field.hpp"

namespace fewweight {

struct FamilyTag {
  enum Kind { none, zero_fn, monomial_quarter, quad_product, gold, from_table };
  Kind kind = none;
  u64 lambda = 0, u = 0, v = 0;  // ranks, meaning depends on kind
  u32 h = 0;
};

struct PFunction {
  const Field* field = nullptr;
  std::vector<u16> table;  // value at every rank, in [0, p)
  bool even = false;       // cached exhaustive f(-x) == f(x) check
  FamilyTag family;

  u32 operator()(u64 rank) const { return table[rank]; }
};

// Evaluates fn over the whole field and runs the evenness check.
PFunction tabulate(const Field& field, const std::function<u32(u64)>& fn, FamilyTag tag = {});

struct WalshSpectrum {
  const Field* field = nullptr;
  std::vector<CycInt> values;  // indexed by the rank of a

  const CycInt& at(u64 a) const { return values[a]; }
};

CycInt walsh_naive(const PFunction& f, u64 a);
WalshSpectrum walsh_full(const PFunction& f);

std::map<CycInt, u64> spectrum_distribution(const WalshSpectrum& s);

struct Classification {
  bool recognized = false;  // false: spectrum fits no plateau pattern
  u32 level = 0;            // l with norms in {0, p^(m+l)}; 0 means bent
  bool bent = false;
  bool degenerate = false;  // single nonzero value (l = m), e.g. constants
  std::string str() const;
};

Classification classify(const WalshSpectrum& s);

// sum of |W_f(a)|^2 over all a equals p^(2m); the sum is formed exactly in
// Z[w] and must come out rational
bool parseval_check(const WalshSpectrum& s);

}  // namespace fewweight
