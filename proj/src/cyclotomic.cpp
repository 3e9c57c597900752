#include "fewweight/cyclotomic.hpp"

#include <sstream>

namespace fewweight {

namespace {
void check_same_prime(const CycInt& a, const CycInt& b) {
  if (a.prime() != b.prime())
    fail(errc::mixed_prime, std::to_string(a.prime()) + " vs " + std::to_string(b.prime()));
}
}  // namespace

CycInt::CycInt(u32 p) : p_(p) {
  if (p < 2) fail(errc::config_error, "root order must be at least 2");
  c_.assign(p_, 0);
}

CycInt CycInt::integer(u32 p, i64 value) {
  CycInt z(p);
  z.c_[0] = value;
  return z;
}

CycInt CycInt::root_power(u32 p, i64 j) {
  CycInt z(p);
  const u32 jm = static_cast<u32>(((j % p) + p) % p);
  z.c_[jm] = 1;
  z.normalize();
  return z;
}

CycInt CycInt::from_group_ring(u32 p, const std::vector<i64>& coeffs) {
  if (coeffs.size() != p) fail(errc::internal_error, "group ring vector has wrong length");
  CycInt z(p);
  z.c_ = coeffs;
  z.normalize();
  return z;
}

void CycInt::normalize() {
  const i64 top = c_[p_ - 1];
  if (top == 0) return;
  for (auto& x : c_) x = checked_sub(x, top);
}

bool CycInt::is_zero() const {
  for (i64 x : c_)
    if (x != 0) return false;
  return true;
}

std::optional<i64> CycInt::as_integer() const {
  for (u32 j = 1; j < p_; ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

CycInt CycInt::conj() const {
  CycInt z(p_);
  for (u32 j = 0; j < p_; ++j) z.c_[(p_ - j) % p_] = c_[j];
  z.normalize();
  return z;
}

CycInt CycInt::times_root(i64 j) const {
  CycInt z(p_);
  const u32 jm = static_cast<u32>(((j % p_) + p_) % p_);
  for (u32 i = 0; i < p_; ++i) z.c_[(i + jm) % p_] = c_[i];
  z.normalize();
  return z;
}

CycInt CycInt::operator+(const CycInt& o) const {
  check_same_prime(*this, o);
  CycInt z(p_);
  for (u32 j = 0; j < p_; ++j) z.c_[j] = checked_add(c_[j], o.c_[j]);
  return z;  // sum of normal forms still has top coefficient zero
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same_prime(*this, o);
  CycInt z(p_);
  for (u32 j = 0; j < p_; ++j) z.c_[j] = checked_sub(c_[j], o.c_[j]);
  return z;
}

CycInt CycInt::operator-() const {
  CycInt z(p_);
  for (u32 j = 0; j < p_; ++j) z.c_[j] = checked_sub(0, c_[j]);
  return z;
}

CycInt CycInt::scaled(i64 s) const {
  CycInt z(p_);
  for (u32 j = 0; j < p_; ++j) z.c_[j] = checked_mul(c_[j], s);
  return z;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_same_prime(*this, o);
  CycInt z(p_);
  for (u32 i = 0; i < p_; ++i) {
    if (c_[i] == 0) continue;
    for (u32 j = 0; j < p_; ++j) {
      if (o.c_[j] == 0) continue;
      i64& slot = z.c_[(i + j) % p_];
      slot = checked_add(slot, checked_mul(c_[i], o.c_[j]));
    }
  }
  z.normalize();
  return z;
}

std::optional<i64> CycInt::norm_squared() const {
  const CycInt n = *this * conj();
  auto v = n.as_integer();
  if (v && *v < 0) fail(errc::internal_error, "negative norm");
  return v;
}

bool CycInt::operator==(const CycInt& o) const {
  check_same_prime(*this, o);
  return c_ == o.c_;
}

bool CycInt::operator<(const CycInt& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  return c_ < o.c_;
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (u32 j = p_ - 1; j != static_cast<u32>(-1); --j) {
    const i64 v = c_[j];
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    const u64 a = v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v);
    if (a != 1 || j == 0) os << a;
    if (j >= 1) {
      os << "w";
      if (j >= 2) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fewweight
