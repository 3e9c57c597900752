#pragma once
// Small dense linear algebra over the prime field F_p.  Dimensions here are
// the extension degree m (at most ~26), so everything is plain Gaussian
// elimination with no attention to cache behaviour.

#include <vector>

#include "fewweight/common.hpp"

namespace fewweight {

inline u32 modp_inv(u32 a, u32 p) {
  // extended Euclid; a != 0 mod p
  i64 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail(errc::division_by_zero, "modp_inv of non-unit");
  return static_cast<u32>((t % p + p) % p);
}

// Solver for M x = rhs with a fixed square matrix M over F_p.  The row
// reduction is done once; each solve is a matrix-vector product with the
// stored transform plus back-substitution, O(n^2).
class AffineSolverFp {
 public:
  // mat is row-major n x n
  AffineSolverFp(u32 p, u32 n, std::vector<u32> mat) : p_(p), n_(n), e_(std::move(mat)) {
    r_.assign(static_cast<size_t>(n_) * n_, 0);
    for (u32 i = 0; i < n_; ++i) r_[idx(i, i)] = 1;
    reduce();
  }

  u32 rank() const { return rank_; }
  u32 nullity() const { return n_ - rank_; }

  // kernel basis vectors (each length n)
  const std::vector<std::vector<u32>>& kernel_basis() const { return kernel_; }

  // If M x = rhs is solvable, writes the particular solution with all free
  // coordinates zero and returns true.
  bool solve(const u32* rhs, u32* out) const {
    thread_local std::vector<u32> t;
    t.assign(n_, 0);
    for (u32 i = 0; i < n_; ++i) {
      u64 acc = 0;
      const u32* row = &r_[idx(i, 0)];
      for (u32 j = 0; j < n_; ++j) acc += static_cast<u64>(row[j]) * rhs[j];
      t[i] = static_cast<u32>(acc % p_);
    }
    for (u32 i = rank_; i < n_; ++i)
      if (t[i] != 0) return false;
    for (u32 j = 0; j < n_; ++j) out[j] = 0;
    for (u32 i = 0; i < rank_; ++i) out[pivot_col_[i]] = t[i];
    return true;
  }

 private:
  size_t idx(u32 i, u32 j) const { return static_cast<size_t>(i) * n_ + j; }

  void reduce() {
    // RREF of e_ while applying the same row operations to r_
    u32 row = 0;
    pivot_col_.clear();
    for (u32 col = 0; col < n_ && row < n_; ++col) {
      u32 piv = row;
      while (piv < n_ && e_[idx(piv, col)] == 0) ++piv;
      if (piv == n_) continue;
      if (piv != row) {
        for (u32 j = 0; j < n_; ++j) {
          std::swap(e_[idx(piv, j)], e_[idx(row, j)]);
          std::swap(r_[idx(piv, j)], r_[idx(row, j)]);
        }
      }
      const u32 inv = modp_inv(e_[idx(row, col)], p_);
      for (u32 j = 0; j < n_; ++j) {
        e_[idx(row, j)] = static_cast<u32>(static_cast<u64>(e_[idx(row, j)]) * inv % p_);
        r_[idx(row, j)] = static_cast<u32>(static_cast<u64>(r_[idx(row, j)]) * inv % p_);
      }
      for (u32 i = 0; i < n_; ++i) {
        if (i == row) continue;
        const u32 c = e_[idx(i, col)];
        if (c == 0) continue;
        for (u32 j = 0; j < n_; ++j) {
          e_[idx(i, j)] = static_cast<u32>((e_[idx(i, j)] + static_cast<u64>(p_ - c) * e_[idx(row, j)]) % p_);
          r_[idx(i, j)] = static_cast<u32>((r_[idx(i, j)] + static_cast<u64>(p_ - c) * r_[idx(row, j)]) % p_);
        }
      }
      pivot_col_.push_back(col);
      ++row;
    }
    rank_ = row;
    // kernel: one basis vector per free column
    std::vector<bool> is_pivot(n_, false);
    for (u32 c : pivot_col_) is_pivot[c] = true;
    for (u32 col = 0; col < n_; ++col) {
      if (is_pivot[col]) continue;
      std::vector<u32> v(n_, 0);
      v[col] = 1;
      for (u32 i = 0; i < rank_; ++i) {
        const u32 c = e_[idx(i, col)];
        if (c != 0) v[pivot_col_[i]] = (p_ - c) % p_;
      }
      kernel_.push_back(std::move(v));
    }
  }

  u32 p_, n_;
  std::vector<u32> e_;  // reduced copy of the matrix
  std::vector<u32> r_;  // accumulated row transform, r_ * M_original = e_
  std::vector<u32> pivot_col_;
  std::vector<std::vector<u32>> kernel_;
  u32 rank_ = 0;
};

}  // namespace fewweight
