#include "fewweight/walsh.hpp"

#include <algorithm>
#include <sstream>

namespace fewweight {

PFunction tabulate(const Field& field, const std::function<u32(u64)>& fn, FamilyTag tag) {
  const u32 p = field.characteristic();
  PFunction f;
  f.field = &field;
  f.family = tag;
  f.table.resize(field.order());
  for (u64 x = 0; x < field.order(); ++x) {
    const u32 v = fn(x);
    if (v >= p) fail(errc::internal_error, "function value out of range");
    f.table[x] = static_cast<u16>(v);
  }
  f.even = true;
  for (u64 x = 0; x < field.order(); ++x) {
    if (f.table[field.neg(x)] != f.table[x]) {
      f.even = false;
      break;
    }
  }
  return f;
}

CycInt walsh_naive(const PFunction& f, u64 a) {
  const Field& F = *f.field;
  const u32 p = F.characteristic();
  std::vector<i64> count(p, 0);
  for (u64 x = 0; x < F.order(); ++x) {
    const u32 e = (f.table[x] + p - F.trace(F.mul(a, x))) % p;
    ++count[e];
  }
  return CycInt::from_group_ring(p, count);
}

WalshSpectrum walsh_full(const PFunction& f) {
  const Field& F = *f.field;
  const u64 q = F.order();
  const u32 p = F.characteristic();
  const u32 m = F.degree();

  // W[x][c] counts contributions with exponent c; starts as one spike per x
  std::vector<i64> W(q * p, 0);
  for (u64 x = 0; x < q; ++x) W[x * p + f.table[x]] = 1;

  std::vector<i64> line(static_cast<size_t>(p) * p);
  std::vector<i64> out(static_cast<size_t>(p) * p);
  for (u32 t = 0; t < m; ++t) {
    const u64 stride = F.pow_p(t);
    const u64 block = stride * p;
    for (u64 base = 0; base < q; base += block) {
      for (u64 off = 0; off < stride; ++off) {
        const u64 start = base + off;
        for (u32 s = 0; s < p; ++s)
          for (u32 c = 0; c < p; ++c) line[s * p + c] = W[(start + s * stride) * p + c];
        // out_j[c] = sum_s in_s[(c + j*s) mod p], the length-p pass that
        // replaces digit value s by dual coordinate j
        for (u32 j = 0; j < p; ++j)
          for (u32 c = 0; c < p; ++c) {
            i64 acc = 0;
            for (u32 s = 0; s < p; ++s) acc += line[s * p + (c + j * s) % p];
            out[j * p + c] = acc;
          }
        for (u32 j = 0; j < p; ++j)
          for (u32 c = 0; c < p; ++c) W[(start + j * stride) * p + c] = out[j * p + c];
      }
    }
  }

  WalshSpectrum spec;
  spec.field = &F;
  spec.values.reserve(q);
  std::vector<i64> row(p);
  for (u64 a = 0; a < q; ++a) {
    // coordinates of a against the digit basis are Tr(a * beta_t)
    u64 flat = 0;
    for (u32 t = 0; t < m; ++t)
      flat += static_cast<u64>(F.trace(F.mul(a, F.basis_rank(t)))) * F.pow_p(t);
    for (u32 c = 0; c < p; ++c) row[c] = W[flat * p + c];
    spec.values.push_back(CycInt::from_group_ring(p, row));
  }
  return spec;
}

std::map<CycInt, u64> spectrum_distribution(const WalshSpectrum& s) {
  std::map<CycInt, u64> dist;
  for (const CycInt& v : s.values) ++dist[v];
  return dist;
}

Classification classify(const WalshSpectrum& s) {
  const Field& F = *s.field;
  const u32 m = F.degree();
  const i64 p = F.characteristic();

  bool has_zero = false;
  i64 nonzero_norm = -1;
  for (const auto& [value, count] : spectrum_distribution(s)) {
    (void)count;
    const auto n2 = value.norm_squared();
    if (!n2) return {};  // irrational magnitude, not a plateau pattern
    if (*n2 == 0) {
      has_zero = true;
    } else if (nonzero_norm < 0) {
      nonzero_norm = *n2;
    } else if (nonzero_norm != *n2) {
      return {};
    }
  }
  if (nonzero_norm < 0) return {};

  i64 n = nonzero_norm;
  u32 e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1 || e < m || e > 2 * m) return {};
  const u32 level = e - m;
  if (level == 0 && has_zero) return {};  // zeros forbid the bent pattern

  Classification c;
  c.recognized = true;
  c.level = level;
  c.bent = (level == 0);
  c.degenerate = (level == m);
  return c;
}

std::string Classification::str() const {
  if (!recognized) return "unclassified";
  std::ostringstream os;
  if (bent) {
    os << "bent";
  } else {
    os << "plateaued(" << level << ")";
    if (degenerate) os << " [degenerate]";
  }
  return os.str();
}

bool parseval_check(const WalshSpectrum& s) {
  const Field& F = *s.field;
  CycInt total(F.characteristic());
  for (const CycInt& v : s.values) total += v * v.conj();
  const auto r = total.as_integer();
  if (!r) return false;
  u64 expect = 1;
  for (u32 i = 0; i < 2 * F.degree(); ++i) expect = checked_mul(expect, F.characteristic());
  return *r >= 0 && static_cast<u64>(*r) == expect;
}

}  // namespace fewweight
