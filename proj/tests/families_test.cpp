#include <set>

#include "doctest.h"
#include "fewweight/families.hpp"

namespace fw = fewweight;

TEST_CASE("quarter-power family hypotheses") {
  fw::Field F5(5, 4), F33(3, 3), F36(3, 6);
  CHECK_THROWS_AS(fw::monomial_quarter_spec(F5, 1), fw::Error);   // needs p = 3
  CHECK_THROWS_AS(fw::monomial_quarter_spec(F33, 1), fw::Error);  // needs even degree
  CHECK_THROWS_AS(fw::monomial_quarter_spec(F36, 1), fw::Error);  // m/2 = 3 not coprime to 3
  fw::Field F(3, 4);
  CHECK_THROWS_AS(fw::monomial_quarter_spec(F, 0), fw::Error);
}

TEST_CASE("quarter-power spec fields and admissibility census") {
  fw::Field F(3, 4);
  const auto s = fw::monomial_quarter_spec(F, F.one().rank());
  CHECK(s.exponent == 20);
  CHECK(s.k == 2);
  CHECK(s.k_even);
  CHECK(s.admissible);

  // admissibility only depends on the subfield trace of lambda: it must be a
  // nonzero square in the order-9 subfield, and each of the four such traces
  // is hit by 81/9 = 9 values of lambda
  fw::u64 admissible = 0;
  for (fw::u64 lam = 1; lam < F.order(); ++lam)
    if (fw::monomial_quarter_spec(F, lam).admissible) ++admissible;
  CHECK(admissible == 36);
}

TEST_CASE("quarter-power admissibility census at degree ten") {
  fw::Field F(3, 10);
  fw::u64 admissible = 0;
  for (fw::u64 lam = 1; lam < F.order(); ++lam)
    if (fw::monomial_quarter_spec(F, lam).admissible) ++admissible;
  CHECK(admissible == 4 * (F.order() / 9));
  const auto s = fw::monomial_quarter_spec(F, F.one().rank());
  CHECK(s.admissible);
  CHECK_FALSE(s.k_even);  // k = 5
}

TEST_CASE("quarter-power predicted distribution matches the transform") {
  fw::Field F(3, 4);
  fw::u64 checked = 0;
  for (fw::u64 lam = 1; lam < F.order() && checked < 5; ++lam) {
    const auto s = fw::monomial_quarter_spec(F, lam);
    if (!s.admissible) continue;
    ++checked;
    const auto computed = fw::spectrum_distribution(fw::walsh_full(fw::monomial_quarter_function(s)));
    CHECK(computed == fw::monomial_quarter_predicted_distribution(s));
  }
  CHECK(checked == 5);
}

TEST_CASE("quarter-power odd-k distribution at degree ten") {
  fw::Field F(3, 10);
  const auto s = fw::monomial_quarter_spec(F, F.one().rank());
  const auto computed = fw::spectrum_distribution(fw::walsh_full(fw::monomial_quarter_function(s)));
  const auto predicted = fw::monomial_quarter_predicted_distribution(s);
  CHECK(computed == predicted);
  // four values, one of them the isolated origin value (q + 3)/4
  CHECK(predicted.size() == 4);
  CHECK(predicted.at(fw::CycInt::integer(3, 14763)) == 1);
}

TEST_CASE("inadmissible lambda still gives a lawful spectrum") {
  fw::Field F(3, 4);
  fw::u64 lam = 1;
  while (fw::monomial_quarter_spec(F, lam).admissible) ++lam;
  const auto s = fw::monomial_quarter_spec(F, lam);
  CHECK_THROWS_AS(fw::monomial_quarter_predicted_distribution(s), fw::Error);
  const auto S = fw::walsh_full(fw::monomial_quarter_function(s));
  CHECK(fw::parseval_check(S));
  CHECK(fw::spectrum_distribution(S).size() == 3);  // the nonsquare-trace shape
}

TEST_CASE("quadratic-plus-product case detection") {
  fw::Field F(3, 4);
  const fw::u64 one = F.one().rank(), neg = F.neg(one);
  CHECK(fw::quad_product_spec(F, one, neg, one).kind == fw::QuadCase::case_i);
  CHECK(fw::quad_product_spec(F, one, one, one).kind == fw::QuadCase::other);

  fw::Field G(3, 4, fw::parse_polynomial("x^4-x^3-1", 3));
  const fw::u64 g = G.generator().rank();
  const auto s = fw::quad_product_spec(G, g, G.pow(g, 16), G.pow(g, 8));
  CHECK(s.kind == fw::QuadCase::case_ii);
  CHECK(s.eta == G.quadratic_character(g));

  CHECK_THROWS_AS(fw::quad_product_spec(F, 0, one, one), fw::Error);
  fw::Field small(3, 3);
  CHECK_THROWS_AS(fw::quad_product_spec(small, 1, 1, 1), fw::Error);  // degree must exceed 3
  fw::Field F5(5, 4);
  CHECK_THROWS_AS(fw::quad_product_spec(F5, 1, 1, 1), fw::Error);
}

TEST_CASE("predicted quadratic-product transform matches the sum pointwise") {
  struct Probe {
    fw::u32 m;
    const char* modulus;
    const char* lambda;
    const char* u;
    const char* v;
    fw::QuadCase want;
  };
  const Probe probes[] = {
      {4, "", "1", "-1", "1", fw::QuadCase::case_i},
      {5, "", "-1", "-1", "1", fw::QuadCase::case_i},
      {4, "x^4-x^3-1", "a", "a^16", "a^8", fw::QuadCase::case_ii},
      {5, "x^5-x+1", "a", "a", "a^4", fw::QuadCase::case_ii},
  };
  for (const auto& pr : probes) {
    const fw::Field F = pr.modulus[0] ? fw::Field(3, pr.m, fw::parse_polynomial(pr.modulus, 3))
                                      : fw::Field(3, pr.m);
    const auto s = fw::quad_product_spec(F, F.parse_element(pr.lambda).rank(),
                                         F.parse_element(pr.u).rank(), F.parse_element(pr.v).rank());
    REQUIRE(s.kind == pr.want);
    const fw::PFunction f = fw::quad_product_function(s);
    for (fw::u64 a = 0; a < F.order(); ++a)
      CHECK(fw::quad_product_predicted_walsh(s, a) == fw::walsh_naive(f, a));
  }
}

TEST_CASE("predicted quadratic-product transform at degrees six and seven") {
  // scalar parameters cannot reach the closed-form trace triples when the
  // degree is a multiple of 3, so hunt for the first triple of each kind
  for (fw::u32 m : {6u, 7u}) {
    fw::Field F(3, m);
    for (const fw::QuadCase want : {fw::QuadCase::case_i, fw::QuadCase::case_ii}) {
      bool done = false;
      for (fw::u64 u = 1; u < F.order() && !done; ++u) {
        for (fw::u64 v = 1; v < F.order() && !done; ++v) {
          const auto s = fw::quad_product_spec(F, F.one().rank(), u, v);
          if (s.kind != want) continue;
          done = true;
          const fw::PFunction f = fw::quad_product_function(s);
          const fw::WalshSpectrum S = fw::walsh_full(f);
          for (fw::u64 a = 0; a < F.order(); ++a)
            CHECK(fw::quad_product_predicted_walsh(s, a) == S.at(a));
          // tie the fast transform back to the defining sum at a few points
          for (fw::u64 a : {fw::u64(0), fw::u64(1), F.order() / 2, F.order() - 1})
            CHECK(S.at(a) == fw::walsh_naive(f, a));
        }
      }
      CHECK(done);
    }
  }
}

TEST_CASE("predicted walsh refuses the unclassified case") {
  fw::Field F(3, 4);
  const auto s = fw::quad_product_spec(F, 1, 1, 1);
  REQUIRE(s.kind == fw::QuadCase::other);
  CHECK_THROWS_AS(fw::quad_product_predicted_walsh(s, 0), fw::Error);
}

TEST_CASE("gold spec admissibility and sign") {
  fw::Field F34(3, 4);
  const auto s1 = fw::gold_spec(F34, F34.one().rank(), 1);
  CHECK(s1.d == 1);
  CHECK(s1.k == 2);
  CHECK(s1.admissible);  // k/d even wants lambda^20 = 1
  CHECK(s1.sign == -1);

  fw::Field F36(3, 6);
  // h = 2 gives m/d = 3 odd: no closed form at all
  CHECK_FALSE(fw::gold_spec(F36, 1, 2).admissible);
  // h = 1, k/d = 3 odd: admissible lambdas are exactly those with
  // lambda^182 = -1, which picks out generator exponents 2 mod 4
  const fw::u64 g = F36.generator().rank();
  CHECK(fw::gold_spec(F36, F36.pow(g, 2), 1).admissible);
  CHECK_FALSE(fw::gold_spec(F36, F36.pow(g, 1), 1).admissible);
  CHECK_FALSE(fw::gold_spec(F36, F36.pow(g, 4), 1).admissible);
  CHECK(fw::gold_spec(F36, F36.pow(g, 2), 1).sign == 1);

  fw::Field F35(3, 5);
  CHECK_THROWS_AS(fw::gold_spec(F35, 1, 1), fw::Error);  // odd degree
  CHECK_THROWS_AS(fw::gold_spec(F34, 0, 1), fw::Error);
  CHECK_THROWS_AS(fw::gold_spec(F34, 1, 0), fw::Error);
}

TEST_CASE("weil sum closed form equals the direct sum") {
  struct Probe {
    fw::u32 p, m, h;
  };
  for (const auto& pr : {Probe{3, 4, 1}, Probe{3, 6, 1}, Probe{3, 6, 3}, Probe{5, 4, 1}}) {
    fw::Field F(pr.p, pr.m);
    fw::u64 found = 0;
    const fw::u64 g = F.generator().rank();
    fw::u64 lam = F.one().rank();
    for (fw::u64 i = 0; i < F.order() - 1 && found < 3; ++i, lam = F.mul(lam, g)) {
      const auto s = fw::gold_spec(F, lam, pr.h);
      if (!s.admissible) continue;
      ++found;
      for (fw::u64 a = 0; a < F.order(); ++a)
        CHECK(fw::weil_sum_closed(s, a) == fw::weil_sum_direct(F, lam, pr.h, a));
    }
    CHECK(found == 3);
  }
}

TEST_CASE("weil sum frozen anchor values at zero") {
  fw::Field F38(3, 8);
  CHECK(fw::weil_sum_direct(F38, F38.one().rank(), 2, 0) == fw::CycInt::integer(3, -729));
  CHECK(fw::gold_spec(F38, F38.one().rank(), 2).sign == -1);

  fw::Field F56(5, 6, fw::parse_polynomial("x^6+x^4-x^3+x^2+2", 5));
  const fw::u64 lam = F56.parse_element("a^3").rank();
  const auto s = fw::gold_spec(F56, lam, 1);
  CHECK(s.admissible);
  CHECK(s.sign == 1);
  CHECK(fw::weil_sum_closed(s, 0) == fw::CycInt::integer(5, 625));
  CHECK(fw::weil_sum_direct(F56, lam, 1, 0) == fw::CycInt::integer(5, 625));
}

TEST_CASE("weil sums are invariant under prime-field scalings") {
  fw::Field F(3, 4);
  CHECK(fw::weil_scaling_check(F, 1, 1));
  fw::Field G(5, 4);
  fw::u64 lam = 1;
  while (!fw::gold_spec(G, lam, 1).admissible) ++lam;
  CHECK(fw::weil_scaling_check(G, lam, 1));
}

TEST_CASE("summed weil sums take only the three allowed values") {
  fw::Field F(3, 4);
  fw::u64 lam = 1;
  while (!fw::gold_spec(F, lam, 1).admissible) ++lam;
  const auto s = fw::gold_spec(F, lam, 1);
  const fw::i64 base = 27;  // p^(k+d)
  const std::set<fw::i64> allowed{0, s.sign * 4 * base, -s.sign * 2 * base};
  for (fw::u64 a = 1; a < F.order(); ++a) {
    const auto t = fw::weil_triple_sum(F, lam, 1, a).as_integer();
    REQUIRE(t.has_value());
    CHECK(allowed.count(*t) == 1);
  }
}

TEST_CASE("linearized solver matches brute force") {
  fw::Field F(3, 4);
  const fw::u64 lam = F.one().rank();
  const fw::u32 h = 1;
  fw::LinearizedSolver solver(F, lam, h);
  const auto L = [&](fw::u64 x) {
    return F.add(F.mul(F.frobenius(lam, h), F.frobenius(x, 2 * h)), F.mul(lam, x));
  };
  // image census: kernel size 9 means 1/9 of the field is reachable
  CHECK(solver.kernel_size() == 9);
  std::set<fw::u64> image;
  for (fw::u64 x = 0; x < F.order(); ++x) image.insert(L(x));
  CHECK(image.size() == F.order() / 9);
  for (fw::u64 rhs = 0; rhs < F.order(); ++rhs) {
    const auto sols = solver.all_solutions(rhs);
    if (image.count(rhs)) {
      REQUIRE(sols.size() == 9);
      for (const fw::u64 s : sols) CHECK(L(s) == rhs);
    } else {
      CHECK(sols.empty());
      CHECK_FALSE(solver.solve_one(rhs).has_value());
    }
  }
  // the free-function wrapper agrees
  CHECK(fw::solve_linearized(F, lam, h, 0) == solver.all_solutions(0));
}

TEST_CASE("function descriptions parse into the right families") {
  fw::Field F(3, 4);
  const fw::PFunction mono = fw::parse_function(F, "monomial24 lambda=1");
  CHECK(mono.family.kind == fw::FamilyTag::monomial_quarter);
  CHECK(mono.family.lambda == F.one().rank());

  const fw::PFunction qp = fw::parse_function(F, "quadprod lambda=1 u=-1 v=1");
  CHECK(qp.family.kind == fw::FamilyTag::quad_product);
  CHECK(qp.family.u == F.neg(F.one().rank()));
  for (fw::u64 x = 0; x < F.order(); ++x) {
    const fw::u32 want =
        (F.trace(F.mul(x, x)) + F.trace(F.mul(F.neg(F.one().rank()), x)) * F.trace(x)) % 3;
    CHECK(qp.table[x] == want);
  }

  const fw::PFunction gold = fw::parse_function(F, "gold lambda=1 h=1");
  CHECK(gold.family.kind == fw::FamilyTag::gold);
  CHECK(gold.family.h == 1);
  for (fw::u64 x = 0; x < F.order(); ++x) CHECK(gold.table[x] == F.trace(F.pow(x, 4)));

  CHECK(fw::parse_function(F, "zero").family.kind == fw::FamilyTag::zero_fn);

  CHECK_THROWS_AS(fw::parse_function(F, "monomial24"), fw::Error);          // missing lambda
  CHECK_THROWS_AS(fw::parse_function(F, "quadprod lambda=1 u=1"), fw::Error);
  CHECK_THROWS_AS(fw::parse_function(F, "gold lambda=1 h=x"), fw::Error);
  CHECK_THROWS_AS(fw::parse_function(F, "nonsense"), fw::Error);
}
