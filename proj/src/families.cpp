#include "fewweight/families.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace fewweight {

namespace {

i64 ipow(i64 b, u32 e) {
  i64 r = 1;
  for (u32 i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

// sign * i^e * sqrt(3)^half * w^t folded into Z[w_3] via i*sqrt(3) = 1 + 2w.
// e and half must have the same parity or the value would be irrational.
CycInt i_sqrt3_reduce(int sign, u32 e, u32 half, i64 t) {
  e %= 4;
  CycInt unit = CycInt::integer(3, 1);
  if (half % 2 == 1) {
    if (e % 2 == 0) fail(errc::internal_error, "irrational predicted value");
    unit = CycInt::integer(3, 1) + CycInt::root_power(3, 1).scaled(2);  // i*sqrt(3)
    --e;
    --half;
  } else if (e % 2 == 1) {
    fail(errc::internal_error, "irrational predicted value");
  }
  const int s = sign * (((e / 2) % 2) ? -1 : 1);  // leftover i^e, e even
  return unit.scaled(s * ipow(3, half / 2)).times_root(t);
}

}  // namespace

// ---- quarter-power monomial ----

MonomialQuarterSpec monomial_quarter_spec(const Field& field, u64 lambda) {
  if (field.characteristic() != 3)
    fail(errc::wrong_characteristic, "quarter-power family needs characteristic 3");
  const u32 m = field.degree();
  if (m % 2) fail(errc::odd_degree, "quarter-power family needs even degree");
  MonomialQuarterSpec s;
  s.field = &field;
  s.lambda = lambda;
  s.k = m / 2;
  if (s.k % 3 == 0) fail(errc::k_divisible_by_3, "m/2 must be coprime to 3");
  if (lambda == 0) fail(errc::zero_input, "lambda must be nonzero");
  s.exponent = (field.order() - 1) / 4;
  s.k_even = (s.k % 2 == 0);
  const u64 t = field.rel_trace(lambda, 2);
  s.admissible = (t != 0) && field.is_square_in_subfield(t, 2);
  return s;
}

PFunction monomial_quarter_function(const MonomialQuarterSpec& spec) {
  const Field& F = *spec.field;
  FamilyTag tag;
  tag.kind = FamilyTag::monomial_quarter;
  tag.lambda = spec.lambda;
  return tabulate(
      F, [&](u64 x) { return F.trace(F.mul(spec.lambda, F.pow(x, spec.exponent))); }, tag);
}

std::map<CycInt, u64> monomial_quarter_predicted_distribution(const MonomialQuarterSpec& spec) {
  if (!spec.admissible)
    fail(errc::not_admissible, "subfield trace of lambda is not a nonzero square");
  const Field& F = *spec.field;
  const i64 q = static_cast<i64>(F.order());
  const i64 pk = ipow(3, spec.k);
  const auto I = [](i64 v) { return CycInt::integer(3, v); };
  const CycInt W1 = CycInt::root_power(3, 1);
  const CycInt W2 = CycInt::root_power(3, 2);

  std::map<CycInt, u64> dist;
  dist[I((q + 3) / 4)] = 1;
  if (spec.k_even) {
    const i64 A = (pk + 3) / 4;
    dist[I(A - pk)] = static_cast<u64>(q - 1) / 2;
    dist[I(A) - W1.scaled(pk)] = static_cast<u64>(q - 1) / 4;
    dist[I(A) - W2.scaled(pk)] = static_cast<u64>(q - 1) / 4;
  } else {
    const i64 B = (pk - 3) / 4;
    dist[I(pk - B)] = static_cast<u64>(q - 1) / 2;
    dist[W1.scaled(pk) - I(B)] = static_cast<u64>(q - 1) / 4;
    dist[W2.scaled(pk) - I(B)] = static_cast<u64>(q - 1) / 4;
  }
  return dist;
}

// ---- quadratic plus product of traces ----

QuadProductSpec quad_product_spec(const Field& field, u64 lambda, u64 u, u64 v) {
  if (field.characteristic() != 3)
    fail(errc::wrong_characteristic, "quadprod family needs characteristic 3");
  if (field.degree() <= 3) fail(errc::degree_too_small, "quadprod family needs degree > 3");
  if (lambda == 0 || u == 0 || v == 0) fail(errc::zero_input, "lambda, u, v must be nonzero");
  QuadProductSpec s;
  s.field = &field;
  s.lambda = lambda;
  s.u = u;
  s.v = v;
  const u64 li = field.inv(lambda);
  const u32 t1 = field.trace(field.mul(field.mul(u, v), li));
  const u32 t2 = field.trace(field.mul(field.mul(u, u), li));
  const u32 t3 = field.trace(field.mul(field.mul(v, v), li));
  if (t1 == 2 && t2 == 1 && t3 == 1)
    s.kind = QuadCase::case_i;
  else if (t1 == 1 && t2 == 0 && t3 == 0)
    s.kind = QuadCase::case_ii;
  else
    s.kind = QuadCase::other;
  s.eta = field.quadratic_character(lambda);
  return s;
}

PFunction quad_product_function(const QuadProductSpec& spec) {
  const Field& F = *spec.field;
  FamilyTag tag;
  tag.kind = FamilyTag::quad_product;
  tag.lambda = spec.lambda;
  tag.u = spec.u;
  tag.v = spec.v;
  return tabulate(
      F,
      [&](u64 x) {
        const u32 a = F.trace(F.mul(spec.lambda, F.mul(x, x)));
        const u32 b = F.trace(F.mul(spec.u, x)) * F.trace(F.mul(spec.v, x));
        return (a + b) % 3;
      },
      tag);
}

CycInt quad_product_predicted_walsh(const QuadProductSpec& spec, u64 a) {
  if (spec.kind == QuadCase::other)
    fail(errc::case_other, "no closed spectrum for this parameter triple");
  const Field& F = *spec.field;
  const u32 m = F.degree();
  const u64 li = F.inv(spec.lambda);
  const u32 tu = F.trace(F.mul(F.mul(a, spec.u), li));
  const u32 tv = F.trace(F.mul(F.mul(a, spec.v), li));
  const i64 ta2 = F.trace(F.mul(F.mul(a, a), li));

  if (spec.kind == QuadCase::case_i) {
    i64 extra = 0;
    if (tu == 0 && tv == 0)
      extra = 0;
    else if (tu == tv)
      extra = 1;
    else
      return CycInt(3);
    const int sign = spec.eta * ((m % 2) ? -1 : 1);
    return i_sqrt3_reduce(sign, (m + 1) % 4, m + 1, -ta2 + extra);
  }
  if (tu != 0 || tv != 0) return CycInt(3);
  const int sign = spec.eta * ((m % 2) ? 1 : -1);
  return i_sqrt3_reduce(sign, m % 4, m + 2, -ta2);
}

// ---- Gold-type monomial and its sums ----

GoldSpec gold_spec(const Field& field, u64 lambda, u32 h) {
  if (lambda == 0) fail(errc::zero_input, "lambda must be nonzero");
  if (h == 0) fail(errc::config_error, "h must be at least 1");
  const u32 m = field.degree();
  if (m % 2) fail(errc::odd_degree, "gold family needs even degree");
  GoldSpec s;
  s.field = &field;
  s.lambda = lambda;
  s.h = h;
  s.d = static_cast<u32>(std::gcd<u64>(h, m));
  s.k = m / 2;
  if ((m / s.d) % 2 == 0) {
    const u64 divisor = field.pow_p(s.d) + 1;
    const u64 e = (field.order() - 1) / divisor;
    if (e * divisor != field.order() - 1) fail(errc::internal_error, "divisor mismatch");
    const bool kd_odd = ((s.k / s.d) % 2 == 1);
    const u64 target = kd_odd ? field.neg(field.scalar(1)) : field.scalar(1);
    s.admissible = (field.pow(lambda, e) == target);
    s.sign = kd_odd ? 1 : -1;
  }
  return s;
}

PFunction gold_function(const GoldSpec& spec) {
  const Field& F = *spec.field;
  const u64 e = F.pow_p(spec.h % F.degree()) + 1;
  FamilyTag tag;
  tag.kind = FamilyTag::gold;
  tag.lambda = spec.lambda;
  tag.h = spec.h;
  return tabulate(F, [&](u64 x) { return F.trace(F.mul(spec.lambda, F.pow(x, e))); }, tag);
}

CycInt weil_sum_direct(const Field& field, u64 lambda, u32 h, u64 a) {
  if (lambda == 0) fail(errc::zero_input, "lambda must be nonzero");
  if (h == 0) fail(errc::config_error, "h must be at least 1");
  const u32 p = field.characteristic();
  const u64 e = field.pow_p(h % field.degree()) + 1;
  std::vector<i64> count(p, 0);
  for (u64 x = 0; x < field.order(); ++x) {
    const u32 t = (field.trace(field.mul(lambda, field.pow(x, e))) + field.trace(field.mul(a, x))) % p;
    ++count[t];
  }
  return CycInt::from_group_ring(p, count);
}

LinearizedSolver::LinearizedSolver(const Field& field, u64 lambda, u32 h)
    : field_(&field),
      solver_(
          field.characteristic(), field.degree(),
          [&] {
            // column j holds the digit coordinates of L(beta_j) where
            // L(x) = lambda^(p^h) x^(p^(2h)) + lambda x
            const u32 m = field.degree();
            const u32 p = field.characteristic();
            const u32 hh = h % m;
            const u64 lph = field.frobenius(lambda, hh);
            std::vector<u32> mat(static_cast<size_t>(m) * m);
            for (u32 j = 0; j < m; ++j) {
              const u64 bj = field.basis_rank(j);
              const u64 y = field.add(field.mul(lph, field.frobenius(bj, (2 * hh) % m)),
                                      field.mul(lambda, bj));
              u64 r = y;
              for (u32 i = 0; i < m; ++i) {
                mat[static_cast<size_t>(i) * m + j] = static_cast<u32>(r % p);
                r /= p;
              }
            }
            return mat;
          }()) {
  for (const auto& v : solver_.kernel_basis()) {
    u64 r = 0;
    for (u32 i = field.degree(); i-- > 0;) r = r * field.characteristic() + v[i];
    kernel_ranks_.push_back(r);
  }
}

std::optional<u64> LinearizedSolver::solve_one(u64 rhs) const {
  const u32 m = field_->degree();
  const u32 p = field_->characteristic();
  u32 in[64], out[64];
  u64 r = rhs;
  for (u32 i = 0; i < m; ++i) {
    in[i] = static_cast<u32>(r % p);
    r /= p;
  }
  if (!solver_.solve(in, out)) return std::nullopt;
  u64 rank = 0;
  for (u32 i = m; i-- > 0;) rank = rank * p + out[i];
  return rank;
}

std::vector<u64> LinearizedSolver::all_solutions(u64 rhs) const {
  const auto part = solve_one(rhs);
  if (!part) return {};
  const Field& F = *field_;
  std::vector<u64> sols{*part};
  for (const u64 kr : kernel_ranks_) {
    std::vector<u64> next;
    next.reserve(sols.size() * F.characteristic());
    for (const u64 s : sols)
      for (u32 c = 0; c < F.characteristic(); ++c) next.push_back(F.add(s, F.mul(F.scalar(c), kr)));
    sols = std::move(next);
  }
  std::sort(sols.begin(), sols.end());
  return sols;
}

u64 LinearizedSolver::kernel_size() const {
  u64 n = 1;
  for (size_t i = 0; i < kernel_ranks_.size(); ++i) n *= field_->characteristic();
  return n;
}

std::vector<u64> solve_linearized(const Field& field, u64 lambda, u32 h, u64 rhs) {
  if (lambda == 0) fail(errc::zero_input, "lambda must be nonzero");
  return LinearizedSolver(field, lambda, h).all_solutions(rhs);
}

CycInt weil_sum_closed(const GoldSpec& spec, u64 a) {
  if (!spec.admissible) fail(errc::not_admissible, "lambda fails the power condition");
  const Field& F = *spec.field;
  const u32 p = F.characteristic();
  const i64 pkd = ipow(p, spec.k + spec.d);
  if (a == 0) return CycInt::integer(p, spec.sign * pkd);

  const u32 hh = spec.h % F.degree();
  const auto sols = solve_linearized(F, spec.lambda, spec.h, F.neg(F.frobenius(a, hh)));
  if (sols.empty()) return CycInt(p);
  const u64 e = F.pow_p(hh) + 1;
  const u32 tau = F.trace(F.mul(spec.lambda, F.pow(sols.front(), e)));
  for (const u64 x : sols)
    if (F.trace(F.mul(spec.lambda, F.pow(x, e))) != tau)
      fail(errc::internal_error, "trace varies across roots");
  // -(-1)^(k/d) equals the stored sign in both parities
  return CycInt::integer(p, spec.sign * pkd).times_root(-static_cast<i64>(tau));
}

CycInt weil_sum_closed(const Field& field, u64 lambda, u32 h, u64 a) {
  return weil_sum_closed(gold_spec(field, lambda, h), a);
}

bool weil_scaling_check(const Field& field, u64 lambda, u32 h) {
  const CycInt base = weil_sum_direct(field, lambda, h, 0);
  for (u32 c = 2; c < field.characteristic(); ++c)
    if (weil_sum_direct(field, field.mul(field.scalar(c), lambda), h, 0) != base) return false;
  return true;
}

GoldWeilContext::GoldWeilContext(const Field& field, u64 lambda, u32 h)
    : spec_(gold_spec(field, lambda, h)) {
  if (!spec_.admissible) fail(errc::not_admissible, "lambda fails the power condition");
  for (u32 y = 1; y < field.characteristic(); ++y) {
    const u64 ly = field.mul(field.scalar(y), lambda);
    if (!gold_spec(field, ly, h).admissible)
      fail(errc::internal_error, "admissibility not preserved under F_p^* scaling");
    scaled_lambda_.push_back(ly);
    solvers_.emplace_back(field, ly, h);
  }
}

i64 GoldWeilContext::zero_sum() const {
  return spec_.sign * ipow(spec_.field->characteristic(), spec_.k + spec_.d);
}

i64 GoldWeilContext::triple_sum(u64 a) const {
  if (a == 0) fail(errc::zero_input, "triple sum needs a != 0");
  const Field& F = *spec_.field;
  const u32 p = F.characteristic();
  const u32 hh = spec_.h % F.degree();
  const u64 e = F.pow_p(hh) + 1;

  std::vector<i64> hist(p, 0);  // histogram of -tau exponents
  u32 solvable = 0;
  for (u32 y = 1; y < p; ++y) {
    for (u32 z = 1; z < p; ++z) {
      const u64 za = F.mul(F.scalar(z), a);
      const auto x0 = solvers_[y - 1].solve_one(F.neg(F.frobenius(za, hh)));
      if (!x0) continue;
      ++solvable;
      const u32 tau = F.trace(F.mul(scaled_lambda_[y - 1], F.pow(*x0, e)));
      ++hist[(p - tau) % p];
    }
  }
  if (solvable != 0 && solvable != (p - 1) * (p - 1))
    fail(errc::internal_error, "mixed solvability across scaled parameters");

  const i64 pkd = ipow(p, spec_.k + spec_.d);
  const CycInt value = CycInt::from_group_ring(p, hist).scaled(spec_.sign * pkd);
  const auto r = value.as_integer();
  if (!r) fail(errc::internal_error, "triple sum not rational");
  const i64 pm1 = p - 1;
  if (*r != 0 && *r != spec_.sign * pm1 * pm1 * pkd && *r != -spec_.sign * pm1 * pkd)
    fail(errc::internal_error, "triple sum outside its three-value set");
  return *r;
}

CycInt weil_triple_sum(const Field& field, u64 lambda, u32 h, u64 a) {
  GoldWeilContext ctx(field, lambda, h);
  return CycInt::integer(field.characteristic(), ctx.triple_sum(a));
}

// ---- parser ----

namespace {

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& tokens, size_t from) {
  std::map<std::string, std::string> kv;
  for (size_t i = from; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0)
      fail(errc::parse_error, "expected key=value, got '" + tokens[i] + "'");
    kv[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) fail(errc::parse_error, "missing argument '" + key + "'");
  return it->second;
}

}  // namespace

PFunction parse_function(const Field& field, const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream is(text);
  for (std::string t; is >> t;) tokens.push_back(t);
  if (tokens.empty()) fail(errc::parse_error, "empty function description");
  const std::string& name = tokens[0];

  if (name == "zero") {
    FamilyTag tag;
    tag.kind = FamilyTag::zero_fn;
    return tabulate(field, [](u64) { return 0u; }, tag);
  }
  const auto kv = parse_kv(tokens, 1);
  if (name == "monomial24") {
    const u64 lambda = field.parse_element(need(kv, "lambda")).rank();
    return monomial_quarter_function(monomial_quarter_spec(field, lambda));
  }
  if (name == "quadprod") {
    const u64 lambda = field.parse_element(need(kv, "lambda")).rank();
    const u64 u = field.parse_element(need(kv, "u")).rank();
    const u64 v = field.parse_element(need(kv, "v")).rank();
    return quad_product_function(quad_product_spec(field, lambda, u, v));
  }
  if (name == "gold") {
    const u64 lambda = field.parse_element(need(kv, "lambda")).rank();
    u32 h = 0;
    try {
      h = static_cast<u32>(std::stoul(need(kv, "h")));
    } catch (const std::exception&) {
      fail(errc::parse_error, "h must be a nonnegative integer");
    }
    return gold_function(gold_spec(field, lambda, h));
  }
  if (name == "table") {
    std::ifstream in(need(kv, "file"));
    if (!in) fail(errc::parse_error, "cannot open table file");
    std::vector<u16> values;
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      i64 v = 0;
      try {
        v = std::stoll(line);
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad table entry '" + line + "'");
      }
      if (v < 0 || v >= static_cast<i64>(field.characteristic()))
        fail(errc::parse_error, "table entry out of range");
      values.push_back(static_cast<u16>(v));
    }
    if (values.size() != field.order())
      fail(errc::parse_error, "table must list one value per field element");
    FamilyTag tag;
    tag.kind = FamilyTag::from_table;
    return tabulate(field, [&](u64 x) { return static_cast<u32>(values[x]); }, tag);
  }
  fail(errc::parse_error, "unknown function family '" + name + "'");
}

}  // namespace fewweight
