#include "fewweight/code.hpp"

#include <algorithm>
#include <sstream>

namespace fewweight {

namespace {

// shared tail of every builder: histogram of wt(c_x) over x != 0 ->
// dimension, injectivity, codeword multiplicities
CodeSummary summarize(const Field& F, u64 n, const std::vector<u64>& weight_hist) {
  CodeSummary cs;
  cs.n = n;
  cs.p = F.characteristic();
  cs.m = F.degree();

  const u64 kernel = weight_hist.empty() ? F.order() : weight_hist[0] + 1;
  u64 kc = kernel;
  u32 deficit = 0;
  while (kc % F.characteristic() == 0) {
    kc /= F.characteristic();
    ++deficit;
  }
  if (kc != 1) fail(errc::internal_error, "zero-weight codeword count not a power of p");
  cs.dimension = F.degree() - deficit;
  cs.injective = (kernel == 1);
  for (u64 w = 1; w < weight_hist.size(); ++w) {
    if (weight_hist[w] == 0) continue;
    if (weight_hist[w] % kernel) fail(errc::internal_error, "weight count not divisible by fibre size");
    cs.dist[w] = weight_hist[w] / kernel;
  }
  return cs;
}

i64 ipow(i64 b, u32 e) {
  i64 r = 1;
  for (u32 i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

}  // namespace

u64 CodeSummary::min_weight() const { return dist.empty() ? 0 : dist.begin()->first; }

DefiningSet defining_set_preimage(const PFunction& f, u32 b) {
  const Field& F = *f.field;
  if (b >= F.characteristic()) fail(errc::config_error, "b must lie in [0, p)");
  DefiningSet d;
  d.field = &F;
  d.origin = SetOrigin::preimage;
  d.b = b;
  for (u64 x = 1; x < F.order(); ++x)
    if (f.table[x] == b) d.elements.push_back(x);
  return d;
}

DefiningSet defining_set_gold(const Field& field, u64 lambda, u32 h) {
  const GoldSpec spec = gold_spec(field, lambda, h);
  DefiningSet d = defining_set_preimage(gold_function(spec), 0);
  d.origin = SetOrigin::gold_zeros;
  return d;
}

DefiningSet half_set(const DefiningSet& d) {
  const Field& F = *d.field;
  DefiningSet h;
  h.field = &F;
  h.origin = SetOrigin::half;
  for (const u64 x : d.elements) {
    const u64 nx = F.neg(x);
    if (!std::binary_search(d.elements.begin(), d.elements.end(), nx))
      fail(errc::not_negation_closed, "defining set is not closed under negation");
    if (x < nx) h.elements.push_back(x);
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

CodeSummary build_code_direct(const DefiningSet& d, unsigned jobs) {
  const Field& F = *d.field;
  const u64 q = F.order();
  const u64 n = d.elements.size();
  if (n == 0) fail(errc::empty_defining_set, "no elements to evaluate on");

  if (jobs == 0) jobs = 1;
  std::vector<std::vector<u64>> hists(jobs, std::vector<u64>(n + 1, 0));
  parallel_chunks(1, q, jobs, [&](u64 begin, u64 end, unsigned worker) {
    auto& hist = hists[worker];
    for (u64 a = begin; a < end; ++a) {
      u64 zeros = 0;
      for (const u64 x : d.elements)
        if (F.trace(F.mul(a, x)) == 0) ++zeros;
      ++hist[n - zeros];
    }
  });

  std::vector<u64> hist(n + 1, 0);
  for (const auto& h : hists)
    for (u64 w = 0; w <= n; ++w) hist[w] += h[w];
  return summarize(F, n, hist);
}

namespace {

// rational part of w^(-b) z + w^(b) conj(z) for z = c0 + c1 w in Z[w_3]
i64 rotated_real_pair(i64 c0, i64 c1, u32 b) {
  switch (b) {
    case 0: return 2 * c0 - c1;
    case 1: return 2 * c1 - c0;
    default: return -(c0 + c1);
  }
}

}  // namespace

CodeSummary build_code_via_walsh(const PFunction& f, u32 b, const WalshSpectrum& spectrum) {
  const Field& F = *f.field;
  if (F.characteristic() != 3) fail(errc::wrong_characteristic, "transform route needs p = 3");
  if (b >= 3) fail(errc::config_error, "b must lie in [0, 3)");
  if (!f.even) fail(errc::not_even, "transform route needs an even function");
  if (f.table[0] != 0) fail(errc::nonzero_at_origin, "transform route needs f(0) = 0");

  const i64 q = static_cast<i64>(F.order());
  const i64 A0 = spectrum.values[0].coeffs()[0];
  const i64 A1 = spectrum.values[0].coeffs()[1];

  const i64 n3 = (q - 1) + rotated_real_pair(A0 - 1, A1, b);
  if (n3 % 3) fail(errc::internal_error, "length formula not divisible by 3");
  const i64 n = n3 / 3;
  if (n <= 0) fail(errc::empty_defining_set, "the chosen preimage has no elements");

  // constant bracket shared by every a: q - 3 - 3(w^-b + w^b) + rotated chi(0)
  const i64 cpart = q - 3 - 3 * (b == 0 ? 2 : -1) + rotated_real_pair(A0, A1, b);

  std::vector<u64> hist(static_cast<u64>(n) + 1, 0);
  for (i64 a = 1; a < q; ++a) {
    const auto& c = spectrum.values[a].coeffs();
    const i64 n9 = cpart + 2 * rotated_real_pair(c[0], c[1], b);
    if (n9 % 9) fail(errc::internal_error, "zero-coordinate formula not divisible by 9");
    const i64 wt = n - n9 / 9;
    if (wt < 0 || wt > n) fail(errc::internal_error, "weight outside [0, n]");
    ++hist[wt];
  }
  return summarize(F, n, hist);
}

CodeSummary build_code_via_walsh(const PFunction& f, u32 b) {
  return build_code_via_walsh(f, b, walsh_full(f));
}

CodeSummary build_gold_code_via_weil(const Field& field, u64 lambda, u32 h) {
  GoldWeilContext ctx(field, lambda, h);
  const GoldSpec& gs = ctx.spec();
  const i64 p = field.characteristic();
  const u32 m = field.degree();

  // #{x in F_q : f(x) = 0} and, per a, #{x : f(x) = 0, Tr(ax) = 0}
  const i64 zeros_total = ipow(p, m - 1) + (p - 1) * gs.sign * ipow(p, gs.k + gs.d - 1);
  const i64 n = zeros_total - 1;
  if (n <= 0) fail(errc::internal_error, "empty gold defining set");

  std::vector<u64> hist(static_cast<u64>(n) + 1, 0);
  const i64 base = ipow(p, m - 2) + (p - 1) * gs.sign * ipow(p, gs.k + gs.d - 2);
  for (u64 a = 1; a < field.order(); ++a) {
    const i64 t = ctx.triple_sum(a);
    if (t % (p * p)) fail(errc::internal_error, "triple sum not divisible by p^2");
    const i64 wt = zeros_total - (base + t / (p * p));
    if (wt < 0 || wt > n) fail(errc::internal_error, "weight outside [0, n]");
    ++hist[wt];
  }
  return summarize(field, static_cast<u64>(n), hist);
}

CodeSummary halve_weights(const CodeSummary& cs) {
  if (cs.n % 2) fail(errc::not_a_divisor, "length is odd");
  CodeSummary h = cs;
  h.n = cs.n / 2;
  h.dist.clear();
  for (const auto& [w, count] : cs.dist) {
    if (w % 2) fail(errc::not_a_divisor, "odd weight cannot be halved");
    h.dist[w / 2] = count;
  }
  return h;
}

u64 dual_a2(const DefiningSet& d) {
  const Field& F = *d.field;
  const u32 p = F.characteristic();
  std::map<u64, u64> class_size;  // projective representative -> elements of D in it
  for (const u64 x : d.elements) {
    u64 rep = x;
    for (u32 c = 2; c < p; ++c) rep = std::min(rep, F.mul(F.scalar(c), x));
    ++class_size[rep];
  }
  u64 a2 = 0;
  for (const auto& [rep, s] : class_size) {
    (void)rep;
    a2 = checked_add(a2, checked_mul(static_cast<u64>(p - 1), s * (s - 1) / 2));
  }
  return a2;
}

bool pless_check(const CodeSummary& cs, u64 a2_dual, PlessDiag* diag) {
  const auto report = [&](int power, const std::string& msg) {
    if (diag) {
      diag->failed_power = power;
      diag->detail = msg;
    }
    return power == 0;
  };
  if (cs.m < 2 || cs.dimension != cs.m)
    return report(-1, "identities need a full-rank code with m >= 2");

  using w128 = __int128;
  w128 s0 = 0, s1 = 0, s2 = 0;
  for (const auto& [w, count] : cs.dist) {
    s0 += count;
    s1 += static_cast<w128>(w) * count;
    s2 += static_cast<w128>(w) * w * count;
  }
  w128 qm = 1;
  for (u32 i = 0; i < cs.m; ++i) qm *= cs.p;
  const w128 pn = static_cast<w128>(cs.p - 1) * cs.n;
  if (s0 != qm - 1) return report(1, "codeword count off");
  if (s1 * cs.p != pn * qm) return report(2, "first power sum off");
  if (s2 * cs.p * cs.p != (pn * (pn + 1) + 2 * static_cast<w128>(a2_dual)) * qm)
    return report(3, "second power sum off");
  return report(0, "");
}

u64 griesmer_max_d(u64 n, u32 k, u32 p) {
  if (k == 0) fail(errc::config_error, "dimension must be positive");
  u64 best = 0;
  for (u64 d = 1; d <= n; ++d) {
    u64 sum = 0;
    u64 pi = 1;
    bool over = false;
    for (u32 i = 0; i < k; ++i) {
      sum += (d + pi - 1) / pi;
      if (sum > n) {
        over = true;
        break;
      }
      pi = (pi > d) ? d + 1 : pi * p;  // once pi > d every term is 1
    }
    if (over) break;
    best = d;
  }
  return best;
}

std::string weight_enumerator_string(const CodeSummary& cs) {
  std::ostringstream os;
  os << "1";
  for (const auto& [w, count] : cs.dist) os << " + " << count << "z^" << w;
  return os.str();
}

}  // namespace fewweight
