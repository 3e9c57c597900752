#include "doctest.h"
#include "fewweight/examples.hpp"
#include "fewweight/verify.hpp"

namespace fw = fewweight;

namespace {

fw::PredictParams params(fw::u32 p, fw::u32 m, fw::u32 b = 0, int eta = 0, fw::u32 h = 0) {
  fw::PredictParams pp;
  pp.p = p;
  pp.m = m;
  pp.b = b;
  pp.eta = eta;
  pp.h = h;
  return pp;
}

const fw::ExampleCase& catalog(const std::string& id) {
  for (const auto& e : fw::example_catalog())
    if (e.id == id) return e;
  REQUIRE(false);
  static fw::ExampleCase dummy;
  return dummy;
}

void check_against(const fw::Prediction& pred, const std::string& id) {
  const auto& ex = catalog(id);
  CHECK(pred.n == ex.n);
  CHECK(pred.dimension == ex.dimension);
  CHECK(pred.dist == ex.dist);
  CHECK(pred.printed_ok);
}

}  // namespace

TEST_CASE("table ids parse and print") {
  CHECK(fw::parse_table_id("T1") == fw::TableId::t1);
  CHECK(fw::parse_table_id("t13") == fw::TableId::t13);
  CHECK(std::string(fw::table_id_name(fw::TableId::t7)) == "T7");
  CHECK_FALSE(fw::parse_table_id("T0").has_value());
  CHECK_FALSE(fw::parse_table_id("T14").has_value());
  CHECK_FALSE(fw::parse_table_id("").has_value());
  CHECK_FALSE(fw::parse_table_id("Q3").has_value());
}

TEST_CASE("two-weight predictions reproduce the reference codes") {
  check_against(fw::predict(fw::TableId::t1, params(3, 4)), "2.4(i)");
  check_against(fw::predict(fw::TableId::t2, params(3, 4, 1)), "2.4(ii)");
  check_against(fw::predict(fw::TableId::t1, params(3, 10)), "2.5(i)");
  check_against(fw::predict(fw::TableId::t3, params(3, 10, 1)), "2.5(ii)");
}

TEST_CASE("three-weight predictions reproduce the reference codes") {
  check_against(fw::predict(fw::TableId::t4, params(3, 4, 0, 1)), "2.8");
  check_against(fw::predict(fw::TableId::t5, params(3, 5, 0, -1)), "2.9");
  check_against(fw::predict(fw::TableId::t6, params(3, 4, 0, -1)), "2.12");
  check_against(fw::predict(fw::TableId::t7, params(3, 7, 0, 1)), "2.13");
  check_against(fw::predict(fw::TableId::t8, params(3, 4, 0, 1)), "2.15");
  check_against(fw::predict(fw::TableId::t9, params(3, 5, 0, -1)), "2.16");
  check_against(fw::predict(fw::TableId::t10, params(3, 4, 0, -1)), "2.18");
  check_against(fw::predict(fw::TableId::t11, params(3, 5, 0, 1)), "2.19");
  check_against(fw::predict(fw::TableId::t13, params(3, 8, 0, 0, 2)), "3.7");
  check_against(fw::predict(fw::TableId::t12, params(5, 6, 0, 0, 1)), "3.8");
}

TEST_CASE("half-set tables halve the weights of the full tables") {
  const std::pair<fw::TableId, fw::TableId> pairs[] = {
      {fw::TableId::t4, fw::TableId::t8},
      {fw::TableId::t5, fw::TableId::t9},
      {fw::TableId::t6, fw::TableId::t10},
      {fw::TableId::t7, fw::TableId::t11},
  };
  for (const auto& [full_id, half_id] : pairs) {
    for (fw::u32 m = 4; m <= 9; ++m) {
      for (int eta : {1, -1}) {
        fw::Prediction full, half;
        try {
          full = fw::predict(full_id, params(3, m, 0, eta));
          half = fw::predict(half_id, params(3, m, 0, eta));
        } catch (const fw::Error& e) {
          CHECK(e.code() == fw::errc::hypothesis_unmet);
          continue;
        }
        CHECK(half.n * 2 == full.n);
        CHECK(half.dimension == full.dimension);
        CHECK(half.a2_dual == 0);
        std::map<fw::u64, fw::u64> halved;
        for (const auto& [w, c] : full.dist) {
          REQUIRE(w % 2 == 0);
          halved[w / 2] = c;
        }
        CHECK(half.dist == halved);
      }
    }
  }
}

TEST_CASE("predictions reject out-of-scope parameters") {
  CHECK_THROWS_AS(fw::predict(fw::TableId::t1, params(3, 5)), fw::Error);      // odd degree
  CHECK_THROWS_AS(fw::predict(fw::TableId::t1, params(3, 6)), fw::Error);      // m/2 divisible by 3
  CHECK_THROWS_AS(fw::predict(fw::TableId::t2, params(3, 4, 0)), fw::Error);   // b must be 1 or 2
  CHECK_THROWS_AS(fw::predict(fw::TableId::t2, params(3, 10, 1)), fw::Error);  // k parity wrong
  CHECK_THROWS_AS(fw::predict(fw::TableId::t3, params(3, 4, 1)), fw::Error);
  CHECK_THROWS_AS(fw::predict(fw::TableId::t4, params(3, 3, 0, 1)), fw::Error);  // degree too low
  CHECK_THROWS_AS(fw::predict(fw::TableId::t4, params(3, 5, 0, 1)), fw::Error);  // parity
  CHECK_THROWS_AS(fw::predict(fw::TableId::t4, params(3, 4, 0, 0)), fw::Error);  // eta unset
  CHECK_THROWS_AS(fw::predict(fw::TableId::t5, params(3, 4, 0, 1)), fw::Error);
  CHECK_THROWS_AS(fw::predict(fw::TableId::t6, params(3, 4, 0, 1)), fw::Error);  // square lambda at m=4 degenerates
  CHECK_THROWS_AS(fw::predict(fw::TableId::t10, params(3, 4, 0, 1)), fw::Error);
  CHECK_THROWS_AS(fw::predict(fw::TableId::t7, params(3, 3, 0, 1)), fw::Error);  // needs m > 4
  CHECK_THROWS_AS(fw::predict(fw::TableId::t12, params(3, 8, 0, 0, 2)), fw::Error);  // k/d even is the other table
  CHECK_THROWS_AS(fw::predict(fw::TableId::t13, params(5, 6, 0, 0, 1)), fw::Error);  // k/d odd is the other table
  CHECK_THROWS_AS(fw::predict(fw::TableId::t12, params(3, 6, 0, 0, 2)), fw::Error);  // m/d odd
}

TEST_CASE("gold predictions carry the scaling-pair dual count") {
  const auto p12 = fw::predict(fw::TableId::t12, params(5, 6, 0, 0, 1));
  CHECK(p12.a2_dual == p12.n * 4 * 3 / 2);
  const auto p13 = fw::predict(fw::TableId::t13, params(3, 8, 0, 0, 2));
  CHECK(p13.a2_dual == p13.n);  // (p-1)(p-2)/2 = 1 at p = 3
  CHECK_FALSE(p12.moment_solved.has_value());
  CHECK_FALSE(p13.moment_solved.has_value());
}

TEST_CASE("verdicts pinpoint what differs") {
  const auto pred = fw::predict(fw::TableId::t4, params(3, 4, 0, 1));
  fw::CodeSummary cs;
  cs.n = pred.n;
  cs.p = 3;
  cs.m = 4;
  cs.dimension = pred.dimension;
  cs.dist = pred.dist;
  cs.injective = true;
  CHECK(fw::verify_code(pred, cs).verdict == fw::Verdict::match);
  auto wrong_n = cs;
  wrong_n.n += 1;
  CHECK(fw::verify_code(pred, wrong_n).verdict == fw::Verdict::length_mismatch);
  auto wrong_k = cs;
  wrong_k.dimension = 3;
  CHECK(fw::verify_code(pred, wrong_k).verdict == fw::Verdict::dimension_mismatch);
  auto wrong_dist = cs;
  wrong_dist.dist[12] -= 1;
  wrong_dist.dist[18] += 1;
  const auto rep = fw::verify_code(pred, wrong_dist, "probe");
  CHECK(rep.verdict == fw::Verdict::distribution_mismatch);
  CHECK(rep.params_desc == "probe");
  CHECK_FALSE(rep.ok());
  CHECK(rep.expected != rep.got);
}

TEST_CASE("sweeps run their samplers to completion") {
  fw::Field F(3, 4);
  fw::SweepConfig cfg;
  cfg.exhaustive = true;
  auto out = fw::sweep(fw::TableId::t1, F, cfg);
  CHECK(out.attempted == 36);
  CHECK(out.all_matched());
  out = fw::sweep(fw::TableId::t2, F, cfg);
  CHECK(out.attempted == 72);  // both nonzero preimages per lambda
  CHECK(out.all_matched());

  fw::SweepConfig sampled;
  sampled.samples = 6;
  const auto t4 = fw::sweep(fw::TableId::t4, F, sampled);
  CHECK(t4.attempted >= 6);
  CHECK(t4.all_matched());
  const auto t10 = fw::sweep(fw::TableId::t10, F, sampled);
  CHECK(t10.all_matched());

  fw::Field F6(3, 6);
  const auto t12 = fw::sweep(fw::TableId::t12, F6, sampled);
  CHECK(t12.attempted >= 6);
  CHECK(t12.all_matched());
}

TEST_CASE("sweep refuses a field with no admissible parameters") {
  fw::Field F(3, 5);
  fw::SweepConfig cfg;
  CHECK_THROWS_AS(fw::sweep(fw::TableId::t1, F, cfg), fw::Error);   // odd degree family
  CHECK_THROWS_AS(fw::sweep(fw::TableId::t12, F, cfg), fw::Error);  // no valid h
}
