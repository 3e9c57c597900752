#pragma once
// Shared basics: fixed-width integer aliases, the library error type, and
// overflow-checked 64-bit arithmetic.  Everything downstream computes in exact
// integers; any overflow is a bug, so the checked helpers throw instead of
// wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fewweight {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;

enum class errc {
  // field construction / arithmetic
  not_prime,
  even_characteristic,
  degree_too_small,
  reducible_modulus,
  size_cap_exceeded,
  division_by_zero,
  mixed_contexts,
  not_a_divisor,
  not_in_subfield,
  zero_input,
  // cyclotomic integers
  mixed_prime,
  overflow,
  // function families
  parameter_outside_field,
  wrong_characteristic,
  odd_degree,
  k_divisible_by_3,
  case_other,
  not_admissible,
  // code construction
  not_negation_closed,
  empty_defining_set,
  not_even,
  nonzero_at_origin,
  moment_violation,
  // verification
  hypothesis_unmet,
  // plumbing
  parse_error,
  config_error,
  internal_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "i64 add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "i64 sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "i64 mul");
  return r;
}

// base^e, throwing on 64-bit overflow
inline u64 checked_pow_u64(u64 base, u32 e) {
  u64 r = 1;
  for (u32 i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) fail(errc::overflow, "u64 pow");
  }
  return r;
}

// Runs body(begin, end, worker) over consecutive chunks of [begin, end).
// Chunk boundaries depend only on (range, jobs), so any reduction that merges
// per-worker results in worker order is deterministic.
template <class F>
void parallel_chunks(u64 begin, u64 end, unsigned jobs, F&& body) {
  const u64 total = end > begin ? end - begin : 0;
  if (total == 0) return;
  if (jobs <= 1 || total < 2 * jobs) {
    body(begin, end, 0u);
    return;
  }
  const u64 chunk = (total + jobs - 1) / jobs;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    const u64 b = begin + w * chunk;
    if (b >= end) break;
    const u64 e = std::min(end, b + chunk);
    pool.emplace_back([&body, b, e, w] { body(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace fewweight
