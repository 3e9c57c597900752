#pragma once
// Closed-form weight distributions for the catalogued constructions and
// machinery to test computed codes against them.
//
// Catalog ids T1..T13:
//   T1       quarter-power monomial, defining set {f = 0}, two weights
//   T2, T3   same family, {f = b} with b != 0, k = m/2 even / odd
//   T4, T5   quadprod case I, m even / odd, three weights
//   T6, T7   quadprod case II, m even / odd
//   T8..T11  half-set versions of T4..T7
//   T12, T13 gold zero set, k/d odd / even
//
// predict() evaluates the printed formulas, checks its own output against
// the power-moment identities, and for T12/T13 additionally solves the
// moments independently so a transcription slip cannot pass silently.

#include <optional>
#include <string>
#include <vector>

#include "fewweight/code.hpp"

namespace fewweight {

enum class TableId { t1, t2, t3, t4, t5, t6, t7, t8, t9, t10, t11, t12, t13 };

std::optional<TableId> parse_table_id(const std::string& text);  // "T1".."T13"
const char* table_id_name(TableId id);

struct PredictParams {
  u32 p = 3;
  u32 m = 0;
  u32 b = 0;    // preimage value, T2/T3 only (must be nonzero there)
  int eta = 0;  // quadratic character of lambda, T4..T11
  u32 h = 0;    // exponent parameter, T12/T13
};

struct Prediction {
  TableId source;
  PredictParams params;
  u64 n = 0;
  u32 dimension = 0;
  std::map<u64, u64> dist;
  u64 a2_dual = 0;  // weight-2 count of the dual, for moment checks
  bool printed_ok = true;  // printed formulas satisfied the moment identities
  // filled when the printed cells disagree with the moment-solved counts
  std::optional<std::map<u64, u64>> moment_solved;
};

Prediction predict(TableId id, const PredictParams& params);

enum class Verdict { match, length_mismatch, dimension_mismatch, distribution_mismatch };

struct VerificationReport {
  std::string source;
  std::string params_desc;
  Verdict verdict = Verdict::match;
  std::string expected, got;
  bool ok() const { return verdict == Verdict::match; }
};

VerificationReport verify_code(const Prediction& pred, const CodeSummary& cs,
                               const std::string& params_desc = "");

struct SweepConfig {
  bool exhaustive = false;
  u64 samples = 100;  // verifications to attempt when not exhaustive
  unsigned jobs = 1;
};

struct SweepOutcome {
  u64 attempted = 0;
  u64 matched = 0;
  std::vector<VerificationReport> failures;
  std::vector<std::string> notes;
  bool all_matched() const { return attempted > 0 && failures.empty(); }
};

// Walks admissible parameters in a fixed deterministic order (powers of the
// designated generator; lexicographic (u, v) scans) and verifies each built
// code against predict().
SweepOutcome sweep(TableId id, const Field& field, const SweepConfig& config);

}  // namespace fewweight
