// Command line front end: field inspection, Walsh spectra, code
// construction, closed-form sweeps, and the reference catalog.
// Exit status: 0 success, 1 a requested check mismatched, 2 bad config.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fewweight/examples.hpp"

namespace fw = fewweight;
using nlohmann::json;

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("FEWWEIGHT_JOBS")) {
    const long v = std::atol(env);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

struct FieldOpts {
  fw::u32 p = 3;
  fw::u32 m = 0;
  std::string modulus;
  fw::u64 size_cap = 0;
};

void add_field_opts(CLI::App* cmd, FieldOpts& fo) {
  cmd->add_option("-p,--characteristic", fo.p, "field characteristic, an odd prime")
      ->capture_default_str();
  cmd->add_option("-m,--degree", fo.m, "extension degree")->required();
  cmd->add_option("--modulus", fo.modulus,
                  "monic irreducible over F_p, e.g. \"x^4-x^3-1\" or \"[2,0,0,2,1]\"");
  cmd->add_option("--size-cap", fo.size_cap, "override the hard p^m limit");
}

fw::Field open_field(const FieldOpts& fo) {
  fw::Field::Options opt;
  if (fo.size_cap) opt.size_cap = fo.size_cap;
  if (fo.modulus.empty()) return fw::Field(fo.p, fo.m, opt);
  return fw::Field(fo.p, fo.m, fw::parse_polynomial(fo.modulus, fo.p), opt);
}

json cyc_json(const fw::CycInt& v) {
  json coeffs = json::array();
  for (fw::u32 i = 0; i + 1 < v.prime(); ++i) coeffs.push_back(v.coeffs()[i]);
  return json{{"p", v.prime()}, {"coeffs", coeffs}};
}

json summary_json(const fw::CodeSummary& cs) {
  json dist = json::array();
  for (const auto& [w, c] : cs.dist) dist.push_back(json::array({w, c}));
  return json{{"n", cs.n},
              {"p", cs.p},
              {"dim", cs.dimension},
              {"dist", dist},
              {"injective", cs.injective}};
}

const char* verdict_name(fw::Verdict v) {
  switch (v) {
    case fw::Verdict::match: return "match";
    case fw::Verdict::length_mismatch: return "length_mismatch";
    case fw::Verdict::dimension_mismatch: return "dimension_mismatch";
    default: return "distribution_mismatch";
  }
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) fw::fail(fw::errc::config_error, "cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_field_info(const FieldOpts& fo, const std::string& json_path) {
  const fw::Field F = open_field(fo);
  std::cout << "field F_" << F.characteristic() << "^" << F.degree() << " of order " << F.order()
            << "\n";
  std::cout << "modulus " << fw::polynomial_to_string(F.modulus()) << "\n";
  std::cout << "arithmetic " << (F.has_tables() ? "log/antilog tables" : "generic polynomial")
            << "\n";
  std::cout << "generator " << F.generator().str()
            << (F.root_is_generator() ? " (the modulus root)" : "") << "\n";
  std::cout << "least generator " << F.find_generator().str() << "\n";
  std::cout << "subfield orders";
  for (fw::u32 d = 1; d <= F.degree(); ++d) {
    if (F.degree() % d) continue;
    fw::u64 s = 1;
    for (fw::u32 i = 0; i < d; ++i) s *= F.characteristic();
    std::cout << " " << s;
  }
  std::cout << "\n";

  json j{{"p", F.characteristic()},  {"m", F.degree()},
         {"q", F.order()},           {"modulus", F.modulus()},
         {"tables", F.has_tables()}, {"root_primitive", F.root_is_generator()},
         {"generator", F.generator().coeffs()}, {"least_generator", F.find_generator().coeffs()}};
  write_json(json_path, j);
  return 0;
}

int cmd_spectrum(const FieldOpts& fo, const std::string& fn_text, const std::string& json_path) {
  const fw::Field F = open_field(fo);
  const fw::PFunction f = fw::parse_function(F, fn_text);
  const fw::WalshSpectrum S = fw::walsh_full(f);
  const auto dist = fw::spectrum_distribution(S);

  std::cout << "distribution over " << F.order() << " points, " << dist.size()
            << " distinct values:\n";
  for (const auto& [v, c] : dist) std::cout << "  " << v.str() << " : " << c << "\n";
  const fw::Classification cls = fw::classify(S);
  std::cout << "classification: " << cls.str() << "\n";
  const bool parseval = fw::parseval_check(S);
  std::cout << "norm-sum identity: " << (parseval ? "ok" : "VIOLATED") << "\n";

  bool checked = false, matches = true;
  std::string note;
  switch (f.family.kind) {
    case fw::FamilyTag::monomial_quarter: {
      const auto spec = fw::monomial_quarter_spec(F, f.family.lambda);
      if (spec.admissible) {
        checked = true;
        matches = (dist == fw::monomial_quarter_predicted_distribution(spec));
      } else {
        note = "lambda not admissible, no closed form";
      }
      break;
    }
    case fw::FamilyTag::quad_product: {
      const auto spec = fw::quad_product_spec(F, f.family.lambda, f.family.u, f.family.v);
      if (spec.kind != fw::QuadCase::other) {
        checked = true;
        for (fw::u64 a = 0; a < F.order() && matches; ++a)
          matches = (S.values[a] == fw::quad_product_predicted_walsh(spec, a));
      } else {
        note = "trace triple outside both closed-form cases";
      }
      break;
    }
    case fw::FamilyTag::gold: {
      const auto spec = fw::gold_spec(F, f.family.lambda, f.family.h);
      if (spec.admissible) {
        checked = true;
        for (fw::u64 a = 0; a < F.order() && matches; ++a)
          matches = (S.values[a] == fw::weil_sum_closed(spec, F.neg(a)));
      } else {
        note = "lambda fails the power condition, no closed form";
      }
      break;
    }
    default:
      break;
  }
  if (checked)
    std::cout << "closed-form prediction: " << (matches ? "match" : "MISMATCH") << "\n";
  else if (!note.empty())
    std::cout << "closed-form prediction: " << note << "\n";

  json jd = json::array();
  for (const auto& [v, c] : dist) jd.push_back(json{{"value", cyc_json(v)}, {"count", c}});
  write_json(json_path, json{{"p", F.characteristic()},
                             {"m", F.degree()},
                             {"fn", fn_text},
                             {"distribution", jd},
                             {"classification", cls.str()},
                             {"parseval", parseval},
                             {"prediction_checked", checked},
                             {"prediction_matches", checked ? matches : true}});
  return (parseval && matches) ? 0 : 1;
}

int cmd_construct(const FieldOpts& fo, const std::string& fn_text, std::string set_text,
                  bool check_direct, unsigned jobs, const std::string& json_path) {
  const fw::Field F = open_field(fo);
  if (set_text.empty()) {
    const fw::PFunction probe = fw::parse_function(F, fn_text);
    set_text = (probe.family.kind == fw::FamilyTag::gold) ? "gold" : "Db b=0";
  }
  const fw::DescribedCode built = fw::build_described(F, fn_text, set_text, jobs);
  const fw::CodeSummary& cs = built.summary;

  std::cout << "[" << cs.n << ", " << cs.dimension << ", " << cs.min_weight() << "] code over F_"
            << cs.p << "  (defining set: " << set_text << ")\n";
  std::cout << "weight enumerator: " << fw::weight_enumerator_string(cs) << "\n";
  std::cout << "injective: " << (cs.injective ? "yes" : "no") << "\n";

  bool moments_ok = true;
  if (cs.injective) {
    fw::PlessDiag diag;
    moments_ok = fw::pless_check(cs, fw::dual_a2(built.set), &diag);
    std::cout << "power-moment identities: " << (moments_ok ? "ok" : "VIOLATED: " + diag.detail)
              << "\n";
  } else {
    std::cout << "power-moment identities: skipped (kernel nontrivial)\n";
  }

  const fw::u64 bound = fw::griesmer_max_d(cs.n, cs.dimension, cs.p);
  std::cout << "largest minimum weight the length bound allows: " << bound
            << (cs.min_weight() == bound ? " (attained)" : " (not attained)") << "\n";

  bool direct_ok = true;
  if (check_direct) {
    const fw::CodeSummary direct = fw::build_code_direct(built.set, jobs);
    direct_ok = direct.n == cs.n && direct.dimension == cs.dimension && direct.dist == cs.dist;
    std::cout << "enumeration cross-check: " << (direct_ok ? "match" : "MISMATCH") << "\n";
  }

  json j{{"summary", summary_json(cs)},
         {"set", set_text},
         {"enumerator", fw::weight_enumerator_string(cs)},
         {"griesmer_bound", bound},
         {"griesmer_attained", cs.min_weight() == bound},
         {"moments_ok", moments_ok}};
  if (check_direct) j["direct_match"] = direct_ok;
  write_json(json_path, j);
  return (moments_ok && direct_ok) ? 0 : 1;
}

int cmd_verify(const FieldOpts& fo, const std::string& table, fw::u64 samples, bool exhaustive,
               unsigned jobs, const std::string& json_path) {
  const auto id = fw::parse_table_id(table);
  if (!id) fw::fail(fw::errc::config_error, "unknown table id '" + table + "'");
  const fw::Field F = open_field(fo);
  fw::SweepConfig cfg;
  cfg.exhaustive = exhaustive;
  cfg.samples = samples;
  cfg.jobs = jobs;
  const fw::SweepOutcome out = fw::sweep(*id, F, cfg);

  std::cout << fw::table_id_name(*id) << " sweep over F_" << F.characteristic() << "^"
            << F.degree() << (exhaustive ? " (exhaustive)" : "") << ": " << out.matched << "/"
            << out.attempted << " matched\n";
  for (const auto& n : out.notes) std::cout << "note: " << n << "\n";
  fw::u64 shown = 0;
  for (const auto& r : out.failures) {
    std::cout << "FAIL " << r.source << " " << r.params_desc << " [" << verdict_name(r.verdict)
              << "]\n  expected " << r.expected << "\n  got      " << r.got << "\n";
    if (++shown == 20 && out.failures.size() > 20) {
      std::cout << "  ... " << (out.failures.size() - 20) << " more\n";
      break;
    }
  }

  json jf = json::array();
  for (const auto& r : out.failures)
    jf.push_back(json{{"source", r.source},
                      {"params", r.params_desc},
                      {"verdict", verdict_name(r.verdict)},
                      {"expected", r.expected},
                      {"got", r.got}});
  write_json(json_path, json{{"table", fw::table_id_name(*id)},
                             {"attempted", out.attempted},
                             {"matched", out.matched},
                             {"notes", out.notes},
                             {"failures", jf}});
  return out.all_matched() ? 0 : 1;
}

int cmd_examples(const std::string& only, bool check_direct, bool cross, unsigned jobs,
                 const std::string& json_path) {
  fw::ExampleRunOptions opt;
  opt.only = only;
  opt.check_direct = check_direct;
  opt.cross_modulus = cross;
  opt.jobs = jobs;
  const auto results = fw::run_examples(opt);
  if (results.empty()) fw::fail(fw::errc::config_error, "no catalog entry matches '" + only + "'");

  bool all = true;
  json ja = json::array();
  for (const auto& r : results) {
    std::cout << r.id << "  [" << r.computed.n << ", " << r.computed.dimension << ", "
              << r.computed.min_weight() << "]  " << fw::weight_enumerator_string(r.computed)
              << "\n      " << (r.matched ? "ok" : "FAIL: " + r.detail);
    if (r.cross_checked) std::cout << "  (second modulus agreed)";
    std::cout << "  (" << r.seconds << "s)\n";
    if (r.griesmer_optimal)
      std::cout << "      minimum weight attains the length bound (" << r.griesmer_bound << ")\n";
    else if (r.catalog_optimal)
      std::cout << "      FLAG: catalog records this as bound-attaining, but the bound allows "
                << r.griesmer_bound << " (got " << r.computed.min_weight() << ")\n";
    all = all && r.matched;
    ja.push_back(json{{"id", r.id},
                      {"matched", r.matched},
                      {"detail", r.detail},
                      {"summary", summary_json(r.computed)},
                      {"griesmer_bound", r.griesmer_bound},
                      {"griesmer_attained", r.griesmer_optimal},
                      {"catalog_optimal", r.catalog_optimal},
                      {"cross_checked", r.cross_checked}});
  }
  std::cout << (all ? "all entries matched" : "MISMATCHES PRESENT") << " (" << results.size()
            << " entries)\n";
  write_json(json_path, ja);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact few-weight trace codes over odd-characteristic fields"};
  app.require_subcommand(1);
  unsigned jobs = default_jobs();

  std::function<int()> run;
  const auto add_jobs = [&jobs](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads for enumeration routes")
        ->capture_default_str();
  };

  {
    auto* c = app.add_subcommand("field-info", "print field parameters and generators");
    auto fo = std::make_shared<FieldOpts>();
    auto jp = std::make_shared<std::string>();
    add_field_opts(c, *fo);
    c->add_option("--json", *jp, "write a JSON report to this path");
    c->callback([&run, fo, jp] { run = [fo, jp] { return cmd_field_info(*fo, *jp); }; });
  }
  {
    auto* c = app.add_subcommand("spectrum", "exact Walsh spectrum of a function");
    auto fo = std::make_shared<FieldOpts>();
    auto fn = std::make_shared<std::string>();
    auto jp = std::make_shared<std::string>();
    add_field_opts(c, *fo);
    c->add_option("--fn", *fn, "function description, e.g. \"monomial24 lambda=1\"")->required();
    c->add_option("--json", *jp, "write a JSON report to this path");
    c->callback([&run, fo, fn, jp] { run = [fo, fn, jp] { return cmd_spectrum(*fo, *fn, *jp); }; });
  }
  {
    auto* c = app.add_subcommand("construct", "build a code and report its weight data");
    auto fo = std::make_shared<FieldOpts>();
    auto fn = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    auto jp = std::make_shared<std::string>();
    auto direct = std::make_shared<bool>(false);
    add_field_opts(c, *fo);
    c->add_option("--fn", *fn, "function description")->required();
    c->add_option("--set", *set,
                  "defining set: \"Db b=<0|1|2>\", \"halfset\", or \"gold\" (default by family)");
    c->add_flag("--check-direct", *direct, "also build by plain enumeration and compare");
    c->add_option("--json", *jp, "write a JSON report to this path");
    add_jobs(c);
    c->callback([&run, &jobs, fo, fn, set, direct, jp] {
      run = [&jobs, fo, fn, set, direct, jp] {
        return cmd_construct(*fo, *fn, *set, *direct, jobs, *jp);
      };
    });
  }
  {
    auto* c = app.add_subcommand("verify", "sweep a closed-form table against built codes");
    auto fo = std::make_shared<FieldOpts>();
    auto table = std::make_shared<std::string>();
    auto jp = std::make_shared<std::string>();
    auto samples = std::make_shared<fw::u64>(100);
    auto exhaustive = std::make_shared<bool>(false);
    add_field_opts(c, *fo);
    c->add_option("--table", *table, "table id, T1 through T13")->required();
    c->add_option("--samples", *samples, "verifications to attempt")->capture_default_str();
    c->add_flag("--exhaustive", *exhaustive, "walk every admissible parameter");
    c->add_option("--json", *jp, "write a JSON report to this path");
    add_jobs(c);
    c->callback([&run, &jobs, fo, table, samples, exhaustive, jp] {
      run = [&jobs, fo, table, samples, exhaustive, jp] {
        return cmd_verify(*fo, *table, *samples, *exhaustive, jobs, *jp);
      };
    });
  }
  {
    auto* c = app.add_subcommand("examples", "run the reference catalog");
    auto only = std::make_shared<std::string>();
    auto jp = std::make_shared<std::string>();
    auto direct = std::make_shared<bool>(false);
    auto cross = std::make_shared<bool>(false);
    c->add_option("--only", *only, "keep entries whose id starts with this prefix");
    c->add_flag("--check-direct", *direct, "also build each code by plain enumeration");
    c->add_flag("--cross-modulus", *cross, "rerun portable entries under a second modulus");
    c->add_option("--json", *jp, "write a JSON report to this path");
    add_jobs(c);
    c->callback([&run, &jobs, only, direct, cross, jp] {
      run = [&jobs, only, direct, cross, jp] {
        return cmd_examples(*only, *direct, *cross, jobs, *jp);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run ? run() : 2;
  } catch (const fw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
