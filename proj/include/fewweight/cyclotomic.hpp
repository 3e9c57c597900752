#pragma once
// Exact arithmetic in Z[w] where w is a primitive p-th root of unity, p an
// odd prime.  Values are stored as integer coordinates in the basis
// 1, w, ..., w^{p-2}; the relation 1 + w + ... + w^{p-1} = 0 eliminates the
// top power, so the stored vector has length p with the last entry pinned to
// zero (kept for cheap cyclic operations).  Two values are equal iff their
// normal forms are equal.  All coefficient arithmetic is overflow-checked.

#include <optional>
#include <string>
#include <vector>

#include "fewweight/common.hpp"

namespace fewweight {

class CycInt {
 public:
  explicit CycInt(u32 p);  // zero
  static CycInt integer(u32 p, i64 value);
  static CycInt root_power(u32 p, i64 j);  // w^j, j taken mod p
  // Collapses a length-p multiplicity vector (exponent histogram) to normal
  // form; this is how character sums enter the ring.
  static CycInt from_group_ring(u32 p, const std::vector<i64>& coeffs);

  u32 prime() const { return p_; }
  const std::vector<i64>& coeffs() const { return c_; }  // length p, c_[p-1] == 0
  bool is_zero() const;

  std::optional<i64> as_integer() const;   // value if rational
  std::optional<i64> norm_squared() const; // z * conj(z) if that is rational
  CycInt conj() const;                     // w^j -> w^{p-j}
  CycInt times_root(i64 j) const;          // multiply by w^j

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator-() const;
  CycInt scaled(i64 s) const;
  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }

  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }
  bool operator<(const CycInt& o) const;  // lexicographic; for ordered containers

  std::string str() const;  // e.g. "-9w + 3"

 private:
  void normalize();  // subtract c_[p-1] from everything
  u32 p_;
  std::vector<i64> c_;
};

}  // namespace fewweight
