#include "fewweight/examples.hpp"

#include <chrono>
#include <sstream>

namespace fewweight {

const std::vector<ExampleCase>& example_catalog() {
  static const std::vector<ExampleCase> catalog = {
      {"2.4(i)", 3, 4, "", "monomial24 lambda=1", "Db b=0", 40, 4, {{24, 40}, {30, 40}}, false},
      {"2.4(ii)", 3, 4, "", "monomial24 lambda=1", "Db b=1", 20, 4, {{12, 60}, {18, 20}}, true},
      {"2.5(i)", 3, 10, "", "monomial24 lambda=1", "Db b=0", 29524, 10,
       {{19602, 29524}, {19764, 29524}}, false},
      {"2.5(ii)", 3, 10, "", "monomial24 lambda=1", "Db b=1", 14762, 10,
       {{9720, 14762}, {9882, 44286}}, false},
      {"2.8", 3, 4, "", "quadprod lambda=1 u=-1 v=1", "Db b=0", 26, 4,
       {{12, 12}, {18, 62}, {24, 6}}, false},
      {"2.9", 3, 5, "", "quadprod lambda=-1 u=-1 v=1", "Db b=0", 62, 5,
       {{36, 60}, {42, 162}, {54, 20}}, false},
      {"2.12", 3, 4, "x^4-x^3-1", "quadprod lambda=a u=a^16 v=a^8", "Db b=0", 44, 4,
       {{18, 4}, {30, 72}, {36, 4}}, false},
      {"2.13", 3, 7, "x^7+2x^2+1", "quadprod lambda=a u=a v=a^17", "Db b=0", 728, 7,
       {{432, 90}, {486, 2024}, {540, 72}}, false},
      {"2.15", 3, 4, "", "quadprod lambda=1 u=-1 v=1", "halfset", 13, 4,
       {{6, 12}, {9, 62}, {12, 6}}, false},
      {"2.16", 3, 5, "", "quadprod lambda=-1 u=-1 v=1", "halfset", 31, 5,
       {{18, 60}, {21, 162}, {27, 20}}, true},
      {"2.18", 3, 4, "x^4-x^3-1", "quadprod lambda=a u=a^16 v=a^8", "halfset", 22, 4,
       {{9, 4}, {15, 72}, {18, 4}}, false},
      {"2.19", 3, 5, "x^5-x+1", "quadprod lambda=a u=a v=a^4", "halfset", 40, 5,
       {{18, 12}, {27, 224}, {36, 6}}, false},
      {"3.7", 3, 8, "", "gold lambda=1 h=2", "gold", 1700, 8,
       {{972, 60}, {1134, 6480}, {1458, 20}}, false},
      {"3.8", 5, 6, "x^6+x^4-x^3+x^2+2", "gold lambda=a^3 h=1", "gold", 3624, 6,
       {{2500, 144}, {2900, 15000}, {3000, 480}}, false},
  };
  return catalog;
}

DescribedCode build_described(const Field& field, const std::string& fn_text,
                              const std::string& set_text, unsigned jobs) {
  const PFunction f = parse_function(field, fn_text);
  const bool transform_ok =
      field.characteristic() == 3 && f.even && f.table[0] == 0;
  DescribedCode out;
  if (set_text == "gold") {
    if (f.family.kind != FamilyTag::gold)
      fail(errc::config_error, "set 'gold' needs a gold function");
    out.summary = build_gold_code_via_weil(field, f.family.lambda, f.family.h);
    out.set = defining_set_gold(field, f.family.lambda, f.family.h);
  } else if (set_text == "halfset") {
    out.set = half_set(defining_set_preimage(f, 0));
    out.summary = transform_ok ? halve_weights(build_code_via_walsh(f, 0))
                               : build_code_direct(out.set, jobs);
  } else if (set_text.rfind("Db b=", 0) == 0 && set_text.size() == 6 &&
             set_text[5] >= '0' && set_text[5] <= '9') {
    const u32 b = static_cast<u32>(set_text[5] - '0');
    out.set = defining_set_preimage(f, b);
    out.summary = transform_ok ? build_code_via_walsh(f, b) : build_code_direct(out.set, jobs);
  } else {
    fail(errc::config_error, "unknown defining-set description '" + set_text + "'");
  }
  if (out.summary.n != out.set.elements.size())
    fail(errc::internal_error, "builder length disagrees with the defining set");
  return out;
}

namespace {

std::string summary_diff(const ExampleCase& ex, const CodeSummary& cs) {
  std::ostringstream os;
  if (cs.n != ex.n) os << "length " << cs.n << " != " << ex.n << "; ";
  if (cs.dimension != ex.dimension) os << "dimension " << cs.dimension << " != " << ex.dimension << "; ";
  if (cs.dist != ex.dist) os << "enumerator " << weight_enumerator_string(cs) << " differs; ";
  return os.str();
}

bool params_are_portable(const ExampleCase& ex) {
  // generator powers mean different elements under another modulus
  return ex.modulus.empty() && ex.fn.find("=a") == std::string::npos;
}

Field make_field(u32 p, u32 m, const std::string& modulus) {
  if (modulus.empty()) return Field(p, m);
  return Field(p, m, parse_polynomial(modulus, p));
}

}  // namespace

std::vector<ExampleOutcome> run_examples(const ExampleRunOptions& options) {
  std::vector<ExampleOutcome> results;
  for (const ExampleCase& ex : example_catalog()) {
    if (!options.only.empty() && ex.id.rfind(options.only, 0) != 0) continue;
    ExampleOutcome out;
    out.id = ex.id;
    out.catalog_optimal = ex.catalog_optimal;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Field F = make_field(ex.p, ex.m, ex.modulus);
      DescribedCode built = build_described(F, ex.fn, ex.set, options.jobs);
      out.computed = built.summary;
      std::string detail = summary_diff(ex, built.summary);

      PlessDiag diag;
      if (!pless_check(built.summary, dual_a2(built.set), &diag))
        detail += "moment identity " + std::to_string(diag.failed_power) + " failed; ";

      if (options.check_direct) {
        const CodeSummary direct = build_code_direct(built.set, options.jobs);
        if (direct.n != built.summary.n || direct.dimension != built.summary.dimension ||
            direct.dist != built.summary.dist)
          detail += "enumeration route disagrees: " + weight_enumerator_string(direct) + "; ";
      }

      if (options.cross_modulus && params_are_portable(ex)) {
        const Field F2(ex.p, ex.m, nth_irreducible(ex.p, ex.m, 1));
        const DescribedCode other = build_described(F2, ex.fn, ex.set, options.jobs);
        out.cross_checked = true;
        if (other.summary.dist != ex.dist || other.summary.n != ex.n)
          detail += "second modulus gave " + weight_enumerator_string(other.summary) + "; ";
      }

      out.griesmer_bound = griesmer_max_d(built.summary.n, built.summary.dimension, ex.p);
      out.griesmer_optimal = built.summary.min_weight() == out.griesmer_bound;
      out.matched = detail.empty();
      out.detail = std::move(detail);
    } catch (const Error& e) {
      out.matched = false;
      out.detail = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(out));
  }
  return results;
}

}  // namespace fewweight
