#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "schur/exact.hpp"
#include "schur/tensor.hpp"
#include "schur/weights.hpp"

using namespace schur;
using namespace schur::weights;
using exact::Int;

namespace {

// brute-force membership straight from the t-decomposition
bool brute_in_lambda_rs(const Weight& w, const RSParams& p) {
  for (long t = 0; t <= std::min(p.r, p.s); ++t) {
    long pos = 0, neg = 0;
    for (long x : w) (x > 0 ? pos : neg) += x;
    if (pos == p.r - t && neg == t - p.s) return true;
  }
  return false;
}

std::vector<Weight> box_vectors(long n, long lo, long hi) {
  std::vector<Weight> out;
  Weight w(n, lo);
  while (true) {
    out.push_back(w);
    long i = n - 1;
    while (i >= 0 && w[i] == hi) w[i--] = lo;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_lambda") {
  WeightSet ws = enumerate_lambda(2, 2);
  CHECK(ws.members == std::vector<Weight>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(enumerate_lambda(1, 5).members == std::vector<Weight>{{5}});
  CHECK(enumerate_lambda(3, 2).size() == 6);  // binom(4,2)

  SUBCASE("cardinality is binom(n+d-1, d)") {
    for (long n = 1; n <= 4; ++n)
      for (long d = 0; d <= 6; ++d)
        CHECK(Int(static_cast<long>(enumerate_lambda(n, d).size())) ==
              exact::binomial(n + d - 1, d));
  }

  SUBCASE("descending lexicographic order, no duplicates") {
    WeightSet s = enumerate_lambda(3, 4);
    for (size_t i = 1; i < s.members.size(); ++i) CHECK(s.members[i - 1] > s.members[i]);
  }
}

TEST_CASE("enumerate_lambda_rs") {
  RSParams p211(2, 1, 1);
  CHECK(enumerate_lambda_rs(p211).members ==
        std::vector<Weight>{{1, -1}, {0, 0}, {-1, 1}});

  SUBCASE("s = 0 degenerates to the polynomial case") {
    for (long n = 2; n <= 4; ++n)
      for (long r = 0; r <= 3; ++r)
        CHECK(enumerate_lambda_rs(RSParams(n, r, 0)).members ==
              enumerate_lambda(n, r).members);
  }

  SUBCASE("(4,1,1) contains the expected members") {
    WeightSet ws = enumerate_lambda_rs(RSParams(4, 1, 1));
    CHECK(ws.contains({1, 0, 0, -1}));
    CHECK(ws.contains({0, 0, 0, 0}));
    CHECK_FALSE(ws.contains({1, 1, -1, -1}));
  }

  SUBCASE("n = 1 is rejected") { CHECK_THROWS_AS(RSParams(1, 2, 1), std::invalid_argument); }
}

TEST_CASE("subset-sum conditions agree with the definition") {
  CHECK(lambda_rs_condition({1, -1}, RSParams(2, 1, 1), RSCondition::b));
  CHECK_FALSE(lambda_rs_condition({2, -2}, RSParams(2, 1, 1), RSCondition::b3));
  CHECK(lambda_rs_condition({0, 0}, RSParams(2, 1, 1), RSCondition::b4));

  for (long n = 2; n <= 4; ++n)
    for (long r = 0; r <= 3; ++r)
      for (long s = 0; s <= 3; ++s) {
        RSParams p(n, r, s);
        WeightSet enumerated = enumerate_lambda_rs(p);
        for (const Weight& w : box_vectors(n, -(s + 2), r + 2)) {
          bool expected = brute_in_lambda_rs(w, p);
          bool in_box = *std::min_element(w.begin(), w.end()) >= -s &&
                        *std::max_element(w.begin(), w.end()) <= r;
          CHECK(enumerated.contains(w) == (expected && in_box));
          for (RSCondition v : {RSCondition::b, RSCondition::b1, RSCondition::b2, RSCondition::b3,
                                RSCondition::b4})
            CHECK(lambda_rs_condition(w, p, v) == expected);
        }
      }
}

TEST_CASE("dominant weights and prefix conditions") {
  RSParams p211(2, 1, 1);
  CHECK(enumerate_lambda_plus_rs(p211).members == std::vector<Weight>{{1, -1}, {0, 0}});
  CHECK(enumerate_lambda_plus_rs(RSParams(4, 1, 1)).members ==
        std::vector<Weight>{{1, 0, 0, -1}, {0, 0, 0, 0}});
  CHECK(enumerate_lambda_plus_rs(RSParams(3, 0, 0)).members ==
        std::vector<Weight>{{0, 0, 0}});

  SUBCASE("variants agree with filtering the full set by dominance") {
    for (long n = 2; n <= 4; ++n)
      for (long r = 0; r <= 3; ++r)
        for (long s = 0; s <= 3; ++s) {
          RSParams p(n, r, s);
          WeightSet full = enumerate_lambda_rs(p);
          std::vector<Weight> dominant;
          for (const Weight& w : full.members)
            if (is_dominant(w)) dominant.push_back(w);
          CHECK(enumerate_lambda_plus_rs(p).members == dominant);
          for (const Weight& w : box_vectors(n, -(s + 2), r + 2)) {
            if (!is_dominant(w)) continue;
            bool expected = brute_in_lambda_rs(w, p);
            for (DominantRSCondition v :
                 {DominantRSCondition::B, DominantRSCondition::B1, DominantRSCondition::B2,
                  DominantRSCondition::B3, DominantRSCondition::B4})
              CHECK(lambda_plus_rs_condition(w, p, v) == expected);
          }
        }
  }
}

TEST_CASE("pi' and pi'' membership") {
  RSParams p(4, 1, 1);
  CHECK(pi_prime_membership({2, 2, 0, 0}, p));
  CHECK(pi_prime_membership({1, 1, 1, 1}, p));
  CHECK_FALSE(pi_prime_membership({3, 1, 0, 0}, p));
  CHECK_THROWS_AS(pi_prime_membership({0, 1, 2, 1}, p), std::invalid_argument);
  CHECK_THROWS_AS(pi_prime_membership({2, 2, 0}, p), std::invalid_argument);

  CHECK_FALSE(pi_double_prime_membership({2, 2, 0, 0}, p));  // 4 > 3
  CHECK(pi_double_prime_membership({2, 1, 1, 0}, p));        // 2 <= 1 + 1
  CHECK(pi_double_prime_membership({1, 1, 1, 1}, p));        // R+ empty
  CHECK_THROWS_AS(pi_double_prime_membership({2, -1, 2, 1}, p), std::invalid_argument);

  SUBCASE("pi'' is contained in pi', strictly for (4,1,1)") {
    for (long n = 2; n <= 4; ++n)
      for (long r = 0; r <= 3; ++r)
        for (long s = 0; s <= 3; ++s) {
          RSParams prm(n, r, s);
          for (const Weight& w : enumerate_lambda_plus(n, prm.degree()).members)
            if (pi_double_prime_membership(w, prm)) CHECK(pi_prime_membership(w, prm));
        }
    // the separating weight
    CHECK(pi_prime_membership({2, 2, 0, 0}, p));
    CHECK_FALSE(pi_double_prime_membership({2, 2, 0, 0}, p));
  }
}

TEST_CASE("shift bijection") {
  RSParams p(4, 1, 1);
  CHECK(shift_bijection({1, 0, 0, -1}, p, ShiftDirection::to_pi_double_prime) ==
        Weight{2, 1, 1, 0});
  CHECK(shift_bijection({0, 0, 0, 0}, p, ShiftDirection::to_pi_double_prime) ==
        Weight{1, 1, 1, 1});
  CHECK_THROWS_AS(shift_bijection({2, 2, 0, 0}, p, ShiftDirection::to_lambda_plus_rs),
                  std::invalid_argument);

  SUBCASE("mutually inverse bijections for n <= 4, r,s <= 3") {
    for (long n = 2; n <= 4; ++n)
      for (long r = 0; r <= 3; ++r)
        for (long s = 0; s <= 3; ++s) {
          RSParams prm(n, r, s);
          WeightSet dom = enumerate_lambda_plus_rs(prm);
          std::set<Weight> images;
          for (const Weight& mu : dom.members) {
            Weight lam = shift_bijection(mu, prm, ShiftDirection::to_pi_double_prime);
            CHECK(pi_double_prime_membership(lam, prm));
            CHECK(shift_bijection(lam, prm, ShiftDirection::to_lambda_plus_rs) == mu);
            images.insert(lam);
          }
          CHECK(images.size() == dom.size());  // injective
          // surjective onto pi''
          long pi2 = 0;
          for (const Weight& w : enumerate_lambda_plus(n, prm.degree()).members)
            if (pi_double_prime_membership(w, prm)) ++pi2;
          CHECK(pi2 == static_cast<long>(images.size()));
        }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_geq({2, 0}, {1, 1}));
  CHECK_FALSE(dominance_geq({1, 1}, {2, 0}));
  CHECK(dominance_geq({2, 1, 1, 0}, {1, 1, 1, 1}));
  CHECK_THROWS_AS(dominance_geq({2, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dominance_geq({2, 0}, {1, 1, 0}), std::invalid_argument);
}

TEST_CASE("nu' = complement of pi'' is saturated") {
  WeightSet nu = nu_prime_set(RSParams(4, 1, 1));
  CHECK(nu.members == std::vector<Weight>{{4, 0, 0, 0}, {3, 1, 0, 0}, {2, 2, 0, 0}});
  CHECK(nu_prime_set(RSParams(2, 1, 0)).members.empty());

  SUBCASE("saturation holds across the desk grid") {
    for (long n = 2; n <= 4; ++n)
      for (long r = 0; r <= 2; ++r)
        for (long s = 0; s <= 2; ++s) {
          RSParams prm(n, r, s);
          WeightSet nup = nu_prime_set(prm);  // construction asserts saturation
          WeightSet all = enumerate_lambda_plus(n, prm.degree());
          for (const Weight& mu : nup.members)
            for (const Weight& kappa : all.members)
              if (dominance_geq(kappa, mu)) CHECK(nup.contains(kappa));
        }
  }
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dimension({0, 0, 0}) == 1);
  CHECK(weyl_dimension({1, -1}) == 3);
  CHECK(weyl_dimension({2, 0}) == 3);
  CHECK(weyl_dimension({1, 1}) == 1);
  CHECK(weyl_dimension({2, 0, 0}) == 6);
  CHECK(weyl_dimension({1, 1, 0}) == 3);
  CHECK_THROWS_AS(weyl_dimension({0, 1}), std::invalid_argument);

  SUBCASE("n = 2 values match module-closure oracles") {
    using tensor::Space;
    exact::Field Q = exact::Field::rationals();
    {
      // highest-weight (1,-1) module generated inside E (x) E*: v_1 (x) v*_2
      Space sp(2, 1, 1, Q);
      std::vector<tensor::SparseMat> gens = tensor::char0_generator_matrices(sp);
      tensor::BasisIndex idx{{0}, {1}};
      CHECK(tensor::vector_closure_dimension(gens, sp.linear(idx)) == 3);
      CHECK(weyl_dimension({1, -1}) == 3);
    }
    {
      // symmetric square: orbit of v_1 (x) v_1 inside E^(x)2
      Space sp(2, 2, 0, Q);
      std::vector<tensor::SparseMat> gens = tensor::char0_generator_matrices(sp);
      tensor::BasisIndex idx{{0, 0}, {}};
      CHECK(tensor::vector_closure_dimension(gens, sp.linear(idx)) == 3);
      CHECK(weyl_dimension({2, 0}) == 3);
    }
  }

  SUBCASE("dimension identity: pi'' and Lambda+(n,r,s) carry equal square sums") {
    for (long n = 2; n <= 4; ++n)
      for (long r = 0; r <= 2; ++r)
        for (long s = 0; s <= 2; ++s) {
          RSParams prm(n, r, s);
          WeightSet pi2;
          for (const Weight& w : enumerate_lambda_plus(n, prm.degree()).members)
            if (pi_double_prime_membership(w, prm)) pi2.members.push_back(w);
          CHECK(weyl_square_sum(pi2) == weyl_square_sum(enumerate_lambda_plus_rs(prm)));
        }
  }
}

TEST_CASE("sign support") {
  SignSupport supp = sign_support({2, 2, 0, 0}, 1);
  CHECK(supp.positive_positions == std::vector<long>{0, 1});
  CHECK(supp.negative_positions.empty());
  CHECK(supp.above_s_positions == std::vector<long>{0, 1});
  SignSupport mixed = sign_support({1, 0, -2}, 0);
  CHECK(mixed.positive_positions == std::vector<long>{0});
  CHECK(mixed.negative_positions == std::vector<long>{2});
  CHECK(mixed.above_s_positions == std::vector<long>{0});
}
