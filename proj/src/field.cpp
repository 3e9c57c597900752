#include "fewweight/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fewweight/modp_linalg.hpp"

namespace fewweight {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, u32>> factorize_u64(u64 n) {
  std::vector<std::pair<u64, u32>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    u32 e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

// ---- dense polynomials over F_p, ascending coefficients ----

using Poly = std::vector<u32>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// remainder of a modulo monic f, in place
void poly_mod(Poly& a, const Poly& f, u32 p) {
  const int df = poly_deg(f);
  for (int d = poly_deg(a); d >= df; --d) {
    const u64 c = a[d];
    if (c == 0) continue;
    a[d] = 0;
    for (int i = 0; i < df; ++i) {
      a[d - df + i] = static_cast<u32>((a[d - df + i] + (p - f[i]) * c) % p);
    }
  }
  poly_trim(a);
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, u32 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<u32>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
  }
  poly_mod(r, f, p);
  return r;
}

Poly poly_pow_mod(Poly base, u64 e, const Poly& f, u32 p) {
  Poly r = {1};
  poly_mod(base, f, p);
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u32 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic, then reduce a
    const u32 lead_inv = modp_inv(b.back(), p);
    for (auto& c : b) c = static_cast<u32>(static_cast<u64>(c) * lead_inv % p);
    poly_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

// monic f of degree >= 1: standard test via x^(p^d) iterates
bool poly_is_irreducible(const Poly& f, u32 p) {
  const int m = poly_deg(f);
  if (m < 1) return false;
  const Poly x = {0, 1};
  // x^(p^m) == x (mod f)
  if (poly_pow_mod(x, checked_pow_u64(p, static_cast<u32>(m)), f, p) != Poly{0, 1}) return false;
  for (auto [r, e] : factorize_u64(static_cast<u64>(m))) {
    (void)e;
    Poly g = poly_pow_mod(x, checked_pow_u64(p, static_cast<u32>(m / r)), f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = static_cast<u32>((g[1] + p - 1) % p);
    poly_trim(g);
    Poly d = poly_gcd(f, g, p);
    if (poly_deg(d) != 0) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

bool parse_u64(const std::string& s, size_t& i, u64& out) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  u64 v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<u64>(s[i] - '0');
    if (v > (u64(1) << 62)) fail(errc::parse_error, "number too large");
    ++i;
  }
  out = v;
  return true;
}

}  // namespace

std::vector<u32> parse_polynomial(const std::string& text, u32 p) {
  size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '[') {
    ++i;
    std::vector<u32> out;
    for (;;) {
      skip_ws(text, i);
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = (text[i++] == '-');
      u64 v;
      if (!parse_u64(text, i, v)) fail(errc::parse_error, "expected coefficient in list: " + text);
      u64 r = v % p;
      out.push_back(static_cast<u32>(negative && r ? p - r : r));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= text.size() || text[i] != ']') fail(errc::parse_error, "unterminated list: " + text);
    ++i;
    skip_ws(text, i);
    if (i != text.size()) fail(errc::parse_error, "trailing input: " + text);
    return out;
  }

  std::vector<u32> coeffs;
  auto put = [&](u64 e, u64 c, bool negative) {
    if (e > 64) fail(errc::parse_error, "exponent too large: " + text);
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    u64 r = c % p;
    if (negative && r) r = p - r;
    coeffs[e] = static_cast<u32>((coeffs[e] + r) % p);
  };
  bool any = false;
  for (;;) {
    skip_ws(text, i);
    if (i >= text.size()) break;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = (text[i] == '-');
      ++i;
      skip_ws(text, i);
    } else if (any) {
      fail(errc::parse_error, "expected '+' or '-': " + text);
    }
    u64 coef = 1;
    bool saw_coef = parse_u64(text, i, coef);
    skip_ws(text, i);
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws(text, i);
    }
    if (i < text.size() && text[i] == 'x') {
      ++i;
      u64 e = 1;
      skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (!parse_u64(text, i, e)) fail(errc::parse_error, "expected exponent: " + text);
      }
      put(e, coef, negative);
    } else {
      if (!saw_coef) fail(errc::parse_error, "expected term: " + text);
      put(0, coef, negative);
    }
    any = true;
  }
  if (!any) fail(errc::parse_error, "empty polynomial");
  return coeffs;
}

std::string polynomial_to_string(const std::vector<u32>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << coeffs[e];
    } else {
      if (coeffs[e] != 1) os << coeffs[e] << "*";
      os << "x";
      if (e > 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::vector<u32> nth_irreducible(u32 p, u32 m, u32 n) {
  const u64 hi = checked_pow_u64(p, m);
  std::vector<u32> cand(m + 1, 0);
  cand[m] = 1;
  for (u64 t = checked_pow_u64(p, m - 1); t < hi; ++t) {
    // digits of t give the coefficient vector, constant term first
    u64 tmp = t;
    for (u32 j = 0; j < m; ++j) {
      cand[m - 1 - j] = static_cast<u32>(tmp % p);
      tmp /= p;
    }
    if (cand[0] == 0) continue;  // divisible by x
    if (poly_is_irreducible(cand, p)) {
      if (n == 0) return cand;
      --n;
    }
  }
  fail(errc::internal_error, "ran out of irreducible polynomials");
}

// ---- Field ----

Field::Field(u32 p, u32 m, Options opt) : p_(p), m_(m) { init(std::nullopt, opt); }

Field::Field(u32 p, u32 m, std::vector<u32> modulus, Options opt) : p_(p), m_(m) {
  init(std::move(modulus), opt);
}

void Field::init(std::optional<std::vector<u32>> modulus, Options opt) {
  if (!is_prime_u64(p_)) fail(errc::not_prime, "characteristic " + std::to_string(p_));
  if (p_ == 2) fail(errc::even_characteristic, "p must be odd");
  if (m_ < 2) fail(errc::degree_too_small, "extension degree must be at least 2");

  q_ = 1;
  for (u32 i = 0; i < m_; ++i) {
    if (__builtin_mul_overflow(q_, static_cast<u64>(p_), &q_) || q_ > opt.size_cap)
      fail(errc::size_cap_exceeded,
           std::to_string(p_) + "^" + std::to_string(m_) + " exceeds cap " + std::to_string(opt.size_cap));
  }

  pow_p_.resize(m_ + 1);
  pow_p_[0] = 1;
  for (u32 i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  if (modulus) {
    auto f = *modulus;
    for (auto& c : f) c %= p_;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() != m_ + 1) fail(errc::config_error, "modulus degree must equal " + std::to_string(m_));
    if (f.back() != 1) fail(errc::config_error, "modulus must be monic");
    if (!poly_is_irreducible(f, p_))
      fail(errc::reducible_modulus, polynomial_to_string(f) + " over F_" + std::to_string(p_));
    modulus_ = std::move(f);
  } else {
    modulus_ = nth_irreducible(p_, m_, 0);
  }

  one_ = pow_p_[m_ - 1];  // rank of the constant 1
  qm1_factors_ = factorize_u64(q_ - 1);

  // designated generator: the modulus root if primitive, else lex-smallest
  const u64 root = m_ >= 2 ? pow_p_[m_ - 2] : one_;  // coefficient vector (0,1,0,...)
  root_primitive_ = (order_generic(root) == q_ - 1);
  if (root_primitive_) {
    gen_ = root;
  } else {
    gen_ = 0;
    for (u64 r = 1; r < q_; ++r) {
      if (order_generic(r) == q_ - 1) {
        gen_ = r;
        break;
      }
    }
    if (gen_ == 0) fail(errc::internal_error, "no generator found");
  }

  // absolute traces of the power basis 1, x, x^2, ...
  tr_basis_.resize(m_);
  for (u32 i = 0; i < m_; ++i) {
    const u64 xi = pow_p_[m_ - 1 - i];  // rank of x^i
    u64 acc = xi, cur = xi;
    for (u32 j = 1; j < m_; ++j) {
      cur = pow_generic(cur, p_);
      acc = add(acc, cur);
    }
    tr_basis_[i] = static_cast<u16>(scalar_value(acc));
  }

  tables_ = (q_ <= opt.table_limit);
  if (tables_) build_tables();
  build_dual_basis();
}

void Field::build_tables() {
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  u64 cur = one_;
  for (u64 i = 0; i + 1 < q_; ++i) {
    exp_[i] = static_cast<u32>(cur);
    log_[cur] = static_cast<u32>(i);
    cur = mul_generic(cur, gen_);
  }
  if (cur != one_) fail(errc::internal_error, "generator order mismatch");

  trace_.resize(q_);
  for (u64 r = 0; r < q_; ++r) {
    u64 tmp = r;
    u32 t = 0;
    for (u32 j = 0; j < m_; ++j) {
      t += static_cast<u32>(tmp % p_) * tr_basis_[m_ - 1 - j];
      tmp /= p_;
    }
    trace_[r] = static_cast<u16>(t % p_);
  }

  // lex-smallest generator, cheap via discrete logs
  for (u64 r = 1; r < q_; ++r) {
    if (gcd_u64(log_[r], q_ - 1) == 1) {
      lex_gen_ = r;
      break;
    }
  }
}

void Field::build_dual_basis() {
  // Gram matrix of the digit basis under the trace form
  std::vector<u32> g(static_cast<size_t>(m_) * m_);
  for (u32 i = 0; i < m_; ++i)
    for (u32 l = 0; l < m_; ++l) g[static_cast<size_t>(i) * m_ + l] = trace(mul(pow_p_[i], pow_p_[l]));
  AffineSolverFp solver(p_, m_, std::move(g));
  if (solver.nullity() != 0) fail(errc::internal_error, "degenerate trace form");
  dual_basis_.resize(m_);
  std::vector<u32> rhs(m_), sol(m_);
  for (u32 j = 0; j < m_; ++j) {
    std::fill(rhs.begin(), rhs.end(), 0);
    rhs[j] = 1;
    solver.solve(rhs.data(), sol.data());
    u64 rank = 0;
    for (u32 l = 0; l < m_; ++l) rank += static_cast<u64>(sol[l]) * pow_p_[l];
    dual_basis_[j] = rank;
  }
}

Elt Field::elt(u64 rank) const {
  if (rank >= q_) fail(errc::parameter_outside_field, "rank " + std::to_string(rank));
  return {this, rank};
}

Elt Field::from_coeffs(const std::vector<u32>& c) const {
  if (c.size() > m_) fail(errc::parse_error, "coefficient list longer than degree");
  std::vector<u32> full(m_, 0);
  for (size_t i = 0; i < c.size(); ++i) full[i] = c[i] % p_;
  return {this, rank_from_coeffs(full.data())};
}

void Field::coeffs_of(u64 rank, u32* out) const {
  for (u32 j = 0; j < m_; ++j) {
    out[m_ - 1 - j] = static_cast<u32>(rank % p_);
    rank /= p_;
  }
}

u64 Field::rank_from_coeffs(const u32* c) const {
  u64 r = 0;
  for (u32 i = 0; i < m_; ++i) r = r * p_ + c[i] % p_;
  return r;
}

u64 Field::add(u64 a, u64 b) const {
  u64 r = 0, mult = 1;
  for (u32 j = 0; j < m_; ++j) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::neg(u64 a) const {
  u64 r = 0, mult = 1;
  for (u32 j = 0; j < m_; ++j) {
    const u64 d = a % p_;
    r += (d ? p_ - d : 0) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

u64 Field::scalar(u32 c) const { return static_cast<u64>(c % p_) * pow_p_[m_ - 1]; }

u32 Field::scalar_value(u64 a) const {
  if (a % pow_p_[m_ - 1] != 0) fail(errc::not_in_subfield, "element is not a prime-field constant");
  return static_cast<u32>(a / pow_p_[m_ - 1]);
}

u64 Field::mul_generic(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  std::array<u32, 64> ca{}, cb{};
  coeffs_of(a, ca.data());
  coeffs_of(b, cb.data());
  std::array<u64, 128> prod{};
  for (u32 i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (u32 j = 0; j < m_; ++j) prod[i + j] += static_cast<u64>(ca[i]) * cb[j];
  }
  // reduce by the monic modulus
  for (int d = 2 * static_cast<int>(m_) - 2; d >= static_cast<int>(m_); --d) {
    const u64 c = prod[d] % p_;
    if (c == 0) continue;
    prod[d] = 0;
    for (u32 i = 0; i < m_; ++i) {
      prod[d - m_ + i] += c * (p_ - modulus_[i]);
    }
  }
  std::array<u32, 64> cr{};
  for (u32 i = 0; i < m_; ++i) cr[i] = static_cast<u32>(prod[i] % p_);
  return rank_from_coeffs(cr.data());
}

u64 Field::mul(u64 a, u64 b) const {
  if (tables_) {
    if (a == 0 || b == 0) return 0;
    u64 s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_generic(a, b);
}

u64 Field::inv(u64 a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of zero");
  if (tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow_generic(a, q_ - 2);
}

u64 Field::pow_generic(u64 a, u64 e) const {
  u64 r = one_;
  while (e) {
    if (e & 1) r = mul_generic(r, a);
    a = mul_generic(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::pow(u64 a, u64 e) const {
  if (e == 0) return one_;
  if (a == 0) return 0;
  const u64 er = e % (q_ - 1);
  if (er == 0) return one_;
  if (tables_) return exp_[(log_[a] * er) % (q_ - 1)];
  return pow_generic(a, er);
}

u64 Field::frobenius(u64 a, u32 times) const {
  times %= m_;  // Frobenius has order m
  if (times == 0 || a == 0) return a;
  return pow(a, pow_p_[times]);
}

u32 Field::trace(u64 a) const {
  if (tables_) return trace_[a];
  u64 tmp = a;
  u32 t = 0;
  for (u32 j = 0; j < m_; ++j) {
    t += static_cast<u32>(tmp % p_) * tr_basis_[m_ - 1 - j];
    tmp /= p_;
  }
  return t % p_;
}

u64 Field::rel_trace(u64 a, u32 k) const {
  if (k == 0 || m_ % k != 0) fail(errc::not_a_divisor, std::to_string(k) + " does not divide " + std::to_string(m_));
  u64 acc = a, cur = a;
  for (u32 j = 1; j < m_ / k; ++j) {
    cur = frobenius(cur, k);
    acc = add(acc, cur);
  }
  return acc;
}

int Field::quadratic_character(u64 a) const {
  if (a == 0) return 0;
  if (tables_) return (log_[a] % 2 == 0) ? 1 : -1;
  const u64 s = pow(a, (q_ - 1) / 2);
  if (s == one_) return 1;
  if (s == neg(one_)) return -1;
  fail(errc::internal_error, "quadratic character out of range");
}

bool Field::is_square_in_subfield(u64 a, u32 k) const {
  if (a == 0) fail(errc::zero_input, "square test on zero");
  if (k == 0 || m_ % k != 0) fail(errc::not_a_divisor, std::to_string(k) + " does not divide " + std::to_string(m_));
  if (frobenius(a, k) != a) fail(errc::not_in_subfield, "element not fixed by Frobenius^" + std::to_string(k));
  return pow(a, (pow_p_[k] - 1) / 2) == one_;
}

u64 Field::order_generic(u64 a) const {
  if (a == 0) fail(errc::zero_input, "order of zero");
  u64 o = q_ - 1;
  for (auto [r, e] : qm1_factors_) {
    (void)e;
    while (o % r == 0 && pow_generic(a, o / r) == one_) o /= r;
  }
  return o;
}

u64 Field::elt_order(u64 a) const {
  if (a == 0) fail(errc::zero_input, "order of zero");
  if (tables_) return (q_ - 1) / gcd_u64(log_[a], q_ - 1);
  return order_generic(a);
}

std::optional<u64> Field::dlog(u64 a) const {
  if (!tables_ || a == 0) return std::nullopt;
  return static_cast<u64>(log_[a]);
}

Elt Field::find_generator() const {
  if (tables_) return {this, lex_gen_};
  for (u64 r = 1; r < q_; ++r)
    if (order_generic(r) == q_ - 1) return {this, r};
  fail(errc::internal_error, "no generator found");
}

Elt Field::parse_element(const std::string& text) const {
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) fail(errc::parse_error, "empty element literal");
  if (text[i] == '[') {
    auto coeffs = parse_polynomial(text, p_);
    return from_coeffs(coeffs);
  }
  if (text[i] == 'a') {
    ++i;
    u64 e = 1;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!parse_u64(text, i, e)) fail(errc::parse_error, "expected exponent: " + text);
    }
    skip_ws(text, i);
    if (i != text.size()) fail(errc::parse_error, "trailing input: " + text);
    return {this, pow(gen_, e)};
  }
  bool negative = false;
  if (text[i] == '-' || text[i] == '+') negative = (text[i++] == '-');
  u64 v;
  if (!parse_u64(text, i, v)) fail(errc::parse_error, "bad element literal: " + text);
  skip_ws(text, i);
  if (i != text.size()) fail(errc::parse_error, "trailing input: " + text);
  const u64 r = v % p_;
  return from_int(negative ? -static_cast<i64>(r) : static_cast<i64>(r));
}

std::string Elt::str() const {
  const auto c = coeffs();
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "]";
  return os.str();
}

}  // namespace fewweight
