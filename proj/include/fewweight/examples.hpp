#pragma once
// Reference catalog: fourteen worked parameter sets with known [n, k] and
// weight enumerators, used as an end-to-end regression suite.  Each entry
// records the field, the function, which defining set to use, and the
// expected weight data.

#include "fewweight/verify.hpp"

namespace fewweight {

struct ExampleCase {
  std::string id;  // catalog key, e.g. "2.4(i)"
  u32 p = 3;
  u32 m = 0;
  std::string modulus;  // empty = lexicographically first irreducible
  std::string fn;       // function description, see parse_function
  std::string set;      // "Db b=<0|1|2>", "halfset" (of D_0), or "gold"
  u64 n = 0;
  u32 dimension = 0;
  std::map<u64, u64> dist;
  // recorded in the catalog as meeting the Griesmer bound; the runner
  // recomputes the bound and reports any disagreement
  bool catalog_optimal = false;
};

const std::vector<ExampleCase>& example_catalog();

struct DescribedCode {
  CodeSummary summary;
  DefiningSet set;
};

// Builds the code named by a function description plus a defining-set
// description.  "Db b=.." and "halfset" use the transform route when the
// function qualifies (p = 3, even, vanishing at 0) and fall back to plain
// enumeration otherwise; "gold" uses the closed-sum route.
DescribedCode build_described(const Field& field, const std::string& fn_text,
                              const std::string& set_text, unsigned jobs = 1);

struct ExampleRunOptions {
  std::string only;            // keep entries whose id starts with this
  bool check_direct = false;   // also build by plain enumeration and compare
  bool cross_modulus = false;  // rerun under a different modulus where params allow
  unsigned jobs = 1;
};

struct ExampleOutcome {
  std::string id;
  bool matched = false;
  std::string detail;  // why it failed, empty on success
  CodeSummary computed;
  u64 griesmer_bound = 0;
  bool griesmer_optimal = false;  // min weight attains the bound
  bool catalog_optimal = false;
  bool cross_checked = false;
  double seconds = 0.0;
};

std::vector<ExampleOutcome> run_examples(const ExampleRunOptions& options);

}  // namespace fewweight
