// Acceptance suite: runs every top-level criterion exactly and prints one
// pass/fail line per criterion. Exit code 0 iff all pass within their
// budgets. An optional argument selects a single criterion by number.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "schur/cli.hpp"
#include "schur/exact.hpp"
#include "schur/presentation.hpp"
#include "schur/rewrite.hpp"
#include "schur/tensor.hpp"
#include "schur/torus.hpp"
#include "schur/weights.hpp"

using namespace schur;
using exact::Field;
using exact::Int;
using exact::Scalar;
using weights::RSParams;
using weights::Weight;
using weights::WeightSet;

namespace {

struct Checker {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;

  void check(bool ok, const std::string& msg) {
    ++checks;
    if (!ok) {
      ++failures;
      if (messages.size() < 5) messages.push_back(msg);
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  long limit_ms;
  std::function<void(Checker&)> fn;
};

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

bool brute_in_lambda_rs(const Weight& w, const RSParams& p) {
  long pos = 0, neg = 0;
  for (long x : w) (x > 0 ? pos : neg) += x;
  long t = p.r - pos;
  return t >= 0 && t <= std::min(p.r, p.s) && neg == t - p.s;
}

long pow_long(long b, long e) {
  long v = 1;
  while (e-- > 0) v *= b;
  return v;
}

// ---- criterion bodies -----------------------------------------------------

void criterion_counterexample(Checker& c) {
  present::CounterexampleReport rep = present::counterexample_report();
  c.check(rep.lambda_in_pi_prime, "lambda must lie in the entry box");
  c.check(!rep.lambda_in_pi_double_prime, "lambda must fail the corrected cut");
  c.check(rep.above_s_count == 2, "|R+| = 2");
  c.check(rep.above_s_sum == 4 && rep.cut_bound == 3, "4 > 3 inequality");
  c.check(rep.separation_holds(), "separation report inconsistent");
}

void criterion_membership_equivalences(Checker& c) {
  for (long n = 2; n <= 4; ++n)
    for (long r = 0; r <= 3; ++r)
      for (long s = 0; s <= 3; ++s) {
        RSParams p(n, r, s);
        for (const Weight& w : box_vectors(n, -(s + 2), r + 2)) {
          bool expected = brute_in_lambda_rs(w, p);
          using weights::RSCondition;
          for (RSCondition v : {RSCondition::b, RSCondition::b1, RSCondition::b2,
                                RSCondition::b3, RSCondition::b4})
            c.check(weights::lambda_rs_condition(w, p, v) == expected,
                    "subset-sum variant disagrees with the definition");
          if (weights::is_dominant(w)) {
            using weights::DominantRSCondition;
            for (DominantRSCondition v :
                 {DominantRSCondition::B, DominantRSCondition::B1, DominantRSCondition::B2,
                  DominantRSCondition::B3, DominantRSCondition::B4})
              c.check(weights::lambda_plus_rs_condition(w, p, v) == expected,
                      "prefix-sum variant disagrees with the definition");
          }
        }
      }
}

void criterion_shift_bijection(Checker& c) {
  for (long n = 2; n <= 4; ++n)
    for (long r = 0; r <= 3; ++r)
      for (long s = 0; s <= 3; ++s) {
        RSParams p(n, r, s);
        WeightSet dom = weights::enumerate_lambda_plus_rs(p);
        std::vector<Weight> images;
        for (const Weight& mu : dom.members) {
          Weight lam = weights::shift_bijection(mu, p, weights::ShiftDirection::to_pi_double_prime);
          c.check(weights::pi_double_prime_membership(lam, p), "image escaped pi''");
          c.check(weights::shift_bijection(lam, p, weights::ShiftDirection::to_lambda_plus_rs) ==
                      mu,
                  "round trip is not the identity");
          images.push_back(lam);
        }
        std::sort(images.begin(), images.end());
        c.check(std::adjacent_find(images.begin(), images.end()) == images.end(),
                "shift map is not injective");
        long pi2 = 0;
        for (const Weight& w : weights::enumerate_lambda_plus(n, p.degree()).members)
          if (weights::pi_double_prime_membership(w, p)) ++pi2;
        c.check(pi2 == static_cast<long>(images.size()), "shift map is not onto pi''");
      }
}

void criterion_binomial_suite(Checker& c) {
  const long N = 2000;
  for (long p : {2L, 3L, 5L, 7L}) {
    // Pascal triangle mod p: an independent oracle for the Lucas values
    std::vector<long> row(N + 1, 0);
    row[0] = 1;
    for (long a = 0; a <= N; ++a) {
      for (long b = a; b >= 1; --b) row[b] = (row[b] + row[b - 1]) % p;
      bool row_ok = true, val_ok = true;
      for (long b = 0; b <= a; ++b) {
        if (exact::binomial_mod_p_lucas(a, b, p) != row[b]) row_ok = false;
        long carries = exact::kummer_carry_count(a, b, p);
        // Legendre valuation of the factorials
        long v = 0;
        for (long q = p; q <= N; q *= p) v += a / q - b / q - (a - b) / q;
        if (carries != v) val_ok = false;
      }
      c.check(row_ok, "Lucas value differs from the Pascal oracle in row " + std::to_string(a));
      c.check(val_ok, "carry count differs from the Legendre valuation in row " +
                          std::to_string(a));
    }
    // literal divisibility: exhaustive on a small range, sampled beyond
    for (long a = 0; a <= 150; ++a)
      for (long b = 0; b <= a; ++b) {
        long carries = exact::kummer_carry_count(a, b, p);
        Int bin = exact::binomial(a, b);
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, carries);
        c.check(bin % pk == 0 && bin % (pk * p) != 0, "p^carries does not divide exactly");
      }
    std::mt19937_64 rng(97);
    for (int t = 0; t < 500; ++t) {
      long a = static_cast<long>(rng() % (N + 1));
      long b = a == 0 ? 0 : static_cast<long>(rng() % (a + 1));
      long carries = exact::kummer_carry_count(a, b, p);
      Int bin = exact::binomial(a, b);
      Int pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, carries);
      c.check(bin % pk == 0 && bin % (pk * p) != 0, "sampled exact divisibility failed");
    }
  }
  // Pascal's identity on the stated window
  for (long a = -50; a <= 50; ++a)
    for (long b = 1; b <= 50; ++b)
      c.check(exact::binomial(a, b) ==
                  exact::binomial(a - 1, b) + exact::binomial(a - 1, b - 1),
              "Pascal identity failed");
  // shift expansions against the direct binomial
  torus::Context ctx = torus::Context::char0(1, 4, 4);
  for (long cc = -3; cc <= 3; ++cc)
    for (long j = 0; j <= 4; ++j) {
      torus::Element e = torus::shifted_binomial(ctx, 0, cc, j);
      for (long x = -3; x <= 3; ++x)
        c.check(torus::evaluate(e, {x}).rat() == exact::Rat(exact::binomial(x + cc, j)),
                "shift expansion disagrees with the direct binomial");
    }
}

void criterion_vanishing_window(Checker& c) {
  for (long p : {2L, 3L})
    for (long m = 1; m <= 2; ++m) {
      long q = pow_long(p, m);
      long window = 0;
      while (pow_long(p, window) < q * q) ++window;
      for (long l = 0; l <= 2 * m; ++l) {
        long pl = pow_long(p, l);
        for (long a = -q; a <= q * q; ++a) {
          bool all_vanish = true;
          for (long j = l; j <= l + window && all_vanish; ++j)
            if (exact::binomial_mod_p(a, pow_long(p, j), p) != 0) all_vanish = false;
          c.check(all_vanish == (a >= 0 && a < pl), "vanishing window boundary failed");
        }
      }
      for (long a = -q; a < 0; ++a) {
        long pk = 1;
        while (pk <= -a - 1) pk *= p;
        c.check(exact::binomial_mod_p(-a - 1 + pk, pk, p) == 1,
                "reflected binomial is not 1");
        c.check(exact::binomial_mod_p(a, pk, p) == (p == 2 ? 1 : p - 1),
                "negative argument does not fail with a unit value");
      }
    }
}

void criterion_idempotents(Checker& c) {
  auto run = [&c](long p, long m, long n) {
    torus::Context ctx = torus::Context::frobenius(n, p, m);
    long q = ctx.basis_bound();
    std::vector<torus::Monomial> all;
    torus::Monomial cur(n, 0);
    while (true) {
      all.push_back(cur);
      long i = n - 1;
      while (i >= 0 && ++cur[i] == q) cur[i--] = 0;
      if (i < 0) break;
    }
    c.check(static_cast<long>(all.size()) == ctx.grid_size(), "primitivity count != q^n");
    torus::Element sum(ctx);
    for (const torus::Monomial& b : all) sum += torus::idempotent_h(ctx, b);
    c.check(sum == torus::unit(ctx), "idempotents do not sum to the unit");
    for (const torus::Monomial& a : all)
      for (const torus::Monomial& b : all) {
        torus::Element prod =
            torus::multiply(torus::idempotent_h(ctx, a), torus::idempotent_h(ctx, b));
        bool ok = (a == b) ? (prod == torus::idempotent_h(ctx, a)) : prod.is_zero();
        c.check(ok, "orthogonality failed");
      }
  };
  run(2, 1, 1);
  run(2, 1, 2);
  run(3, 1, 1);
  run(3, 1, 2);
  run(2, 2, 2);
}

void criterion_dimension_theorems(Checker& c) {
  const long grid_cap = 1'000'000;
  // characteristic 0, rational
  for (long n = 2; n <= 3; ++n)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s) {
        torus::IdealParams ip;
        ip.n = n;
        ip.r = r;
        ip.s = s;
        long locus = torus::quotient_dimension(torus::build_ideal(torus::IdealKind::char0_rs, ip));
        long lam = static_cast<long>(weights::enumerate_lambda_rs(RSParams(n, r, s)).size());
        long s0 = tensor::s0_dimension(tensor::Space(n, r, s, Field::rationals()));
        c.check(locus == lam && lam == s0, "char-0 rational dimension mismatch");
      }
  // characteristic p, polynomial
  for (long n = 1; n <= 3; ++n)
    for (long d = 0; d <= 4; ++d)
      for (long p : {2L, 3L, 5L}) {
        long s0 = tensor::s0_dimension(tensor::Space(n, d, 0, Field::prime(p)));
        long lam = static_cast<long>(weights::enumerate_lambda(n, d).size());
        for (long m = 1;; ++m) {
          long q = pow_long(p, m);
          double qn = 1;
          for (long i = 0; i < n; ++i) qn *= static_cast<double>(q);
          if (qn > static_cast<double>(grid_cap)) break;
          if (q <= d) continue;
          torus::IdealParams ip;
          ip.n = n;
          ip.d = d;
          ip.p = p;
          ip.m = m;
          long locus = torus::quotient_dimension(torus::build_ideal(torus::IdealKind::charp_d, ip));
          c.check(locus == lam && lam == s0,
                  "polynomial dimension mismatch at n=" + std::to_string(n) +
                      " d=" + std::to_string(d) + " p=" + std::to_string(p) +
                      " m=" + std::to_string(m));
        }
      }
  // characteristic p, rational
  for (long n = 2; n <= 3; ++n)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long p : {2L, 3L, 5L}) {
          long d = r + (n - 1) * s;
          long lam = static_cast<long>(weights::enumerate_lambda_rs(RSParams(n, r, s)).size());
          long s0 = tensor::s0_dimension(tensor::Space(n, r, s, Field::prime(p)));
          for (long m = 1;; ++m) {
            long q = pow_long(p, m);
            double qn = 1;
            for (long i = 0; i < n; ++i) qn *= static_cast<double>(q);
            if (qn > static_cast<double>(grid_cap)) break;
            if (q <= d) continue;
            torus::IdealParams ip;
            ip.n = n;
            ip.r = r;
            ip.s = s;
            ip.p = p;
            ip.m = m;
            long locus =
                torus::quotient_dimension(torus::build_ideal(torus::IdealKind::charp_rs, ip));
            c.check(locus == lam && lam == s0,
                    "rational dimension mismatch at n=" + std::to_string(n) +
                        " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                        " p=" + std::to_string(p) + " m=" + std::to_string(m));
          }
        }
}

void criterion_relation_sweep(Checker& c) {
  auto verify = [&c](present::Label label, present::Params prm, const std::string& tag) {
    present::Presentation pres = present::build_presentation(label, prm);
    present::VerificationReport rep = present::verify_presentation(pres);
    c.check(rep.overall_pass(),
            tag + ": " + std::to_string(rep.failures()) + " failing checks");
  };
  // characteristic 0 (n <= 3, r,s <= 1), Serre relations included as derived
  for (long n = 2; n <= 3; ++n)
    for (long r = 0; r <= 1; ++r)
      for (long s = 0; s <= 1; ++s) {
        present::Params prm;
        prm.n = n;
        prm.r = r;
        prm.s = s;
        verify(present::Label::char0_rational, prm,
               "char0(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(s) +
                   ")");
      }
  // characteristic p with p^m <= 9
  for (long n = 2; n <= 3; ++n)
    for (long d = 1; d <= 3; ++d)
      for (long p : {2L, 3L})
        for (long m = 1; pow_long(p, m) <= 9; ++m) {
          if (pow_long(p, m) <= d) continue;
          present::Params prm;
          prm.n = n;
          prm.d = d;
          prm.p = p;
          prm.m = m;
          verify(present::Label::charp_schur, prm,
                 "schur(" + std::to_string(n) + "," + std::to_string(d) + "," +
                     std::to_string(p) + "," + std::to_string(m) + ")");
        }
  for (long n = 2; n <= 3; ++n)
    for (long r = 0; r <= 1; ++r)
      for (long s = 0; s <= 1; ++s)
        for (long p : {2L, 3L})
          for (long m = 1; pow_long(p, m) <= 9; ++m) {
            long d = r + (n - 1) * s;
            if (pow_long(p, m) <= d) continue;
            present::Params prm;
            prm.n = n;
            prm.r = r;
            prm.s = s;
            prm.p = p;
            prm.m = m;
            verify(present::Label::charp_rational, prm,
                   "rational(" + std::to_string(n) + "," + std::to_string(r) + "," +
                       std::to_string(s) + "," + std::to_string(p) + "," + std::to_string(m) +
                       ")");
          }
}

void criterion_closure_dimensions(Checker& c) {
  auto run = [&c](long n, long r, long s, long expected) {
    tensor::Space sp(n, r, s, Field::rationals());
    long closure = tensor::algebra_closure_dimension(tensor::char0_generator_matrices(sp));
    WeightSet dom = s == 0 ? weights::enumerate_lambda_plus(n, r)
                           : weights::enumerate_lambda_plus_rs(RSParams(n, r, s));
    Int weyl = weights::weyl_square_sum(dom);
    c.check(closure == expected, "closure dimension != " + std::to_string(expected));
    c.check(weyl == expected, "Weyl square sum != " + std::to_string(expected));
  };
  run(2, 2, 0, 10);
  run(2, 3, 0, 20);
  run(3, 2, 0, 45);
  run(2, 1, 1, 10);
}

void criterion_pbw_certification(Checker& c) {
  for (long n = 2; n <= 3; ++n)
    for (long p : {2L, 3L})
      for (long m = 1; pow_long(p, m) <= 9; ++m) {
        rewrite::Context ctx(n, p, m);
        std::vector<tensor::Root> roots = ctx.positive_roots();
        roots.insert(roots.end(), ctx.negative_roots().begin(), ctx.negative_roots().end());
        std::vector<tensor::Space> spaces;
        for (long d : {2L, 3L})
          if (d < ctx.q()) spaces.emplace_back(n, d, 0, Field::prime(p));
        if (spaces.empty()) spaces.emplace_back(n, 1, 0, Field::prime(p));
        std::mt19937_64 rng(1000 * n + 10 * p + m);
        for (int t = 0; t < 200; ++t) {
          rewrite::GeneratorWord word;
          long len = 1 + static_cast<long>(rng() % 6);
          for (long u = 0; u < len; ++u) {
            long exp = 1 + static_cast<long>(rng() % static_cast<unsigned long>(ctx.q() - 1));
            if (rng() % 3 == 0)
              word.push_back(
                  tensor::GeneratorSymbol::binomial(static_cast<long>(rng() % n), exp));
            else
              word.push_back(tensor::GeneratorSymbol::divided(roots[rng() % roots.size()], exp));
          }
          // pbw_rewrite asserts the strict decrease of its termination
          // measure at every step and throws on any violation
          rewrite::NormalFormElement nf = rewrite::pbw_rewrite(word, ctx);
          for (const tensor::Space& sp : spaces)
            c.check(rewrite::certify_rewrite(word, nf, sp, ctx),
                    "certification failed for " + rewrite::word_str(word));
        }
      }
}

void criterion_cellular_bookkeeping(Checker& c) {
  for (long n = 2; n <= 4; ++n)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s) {
        RSParams prm(n, r, s);
        WeightSet nup = weights::nu_prime_set(prm);  // throws if not saturated
        WeightSet all = weights::enumerate_lambda_plus(n, prm.degree());
        for (const Weight& mu : nup.members)
          for (const Weight& kappa : all.members)
            if (weights::dominance_geq(kappa, mu))
              c.check(nup.contains(kappa), "saturation violated");
        WeightSet pi2;
        for (const Weight& w : all.members)
          if (weights::pi_double_prime_membership(w, prm)) pi2.members.push_back(w);
        c.check(weights::weyl_square_sum(pi2) ==
                    weights::weyl_square_sum(weights::enumerate_lambda_plus_rs(prm)),
                "dimension identity failed");
      }
}

void criterion_subset_restriction(Checker& c) {
  for (long n = 2; n <= 4; ++n)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s) {
        torus::IdealParams full;
        full.n = n;
        full.r = r;
        full.s = s;
        torus::IdealParams half = full;
        half.half_subsets_only = true;
        c.check(torus::build_ideal(torus::IdealKind::char0_rs, full).vanishing_locus ==
                    torus::build_ideal(torus::IdealKind::char0_rs, half).vanishing_locus,
                "restricted generators changed the locus");
      }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "separating weight at (4,1,1)", 1000, criterion_counterexample},
      {2, "membership condition equivalences on the extended box", 10000,
       criterion_membership_equivalences},
      {3, "shift bijection between Lambda+(n,r,s) and pi''", 5000, criterion_shift_bijection},
      {4, "binomial suite: Lucas, Kummer, Pascal, shift expansions", 30000,
       criterion_binomial_suite},
      {5, "vanishing window boundary of binom(a, p^j)", 5000, criterion_vanishing_window},
      {6, "primitive orthogonal idempotent system", 10000, criterion_idempotents},
      {7, "dimension theorems: locus = |Lambda| = torus image", 60000,
       criterion_dimension_theorems},
      {8, "relation sweep and kernel vanishing", 120000, criterion_relation_sweep},
      {9, "characteristic-0 closure dimensions", 60000, criterion_closure_dimensions},
      {10, "PBW straightening certified against matrix images", 120000,
       criterion_pbw_certification},
      {11, "cellular bookkeeping: saturation and dimension identity", 10000,
       criterion_cellular_bookkeeping},
      {12, "half-subset generator restriction keeps the locus", 5000,
       criterion_subset_restriction},
  };

  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int exit_code = 0;
  for (const Criterion& cr : criteria) {
    if (only != 0 && cr.id != only) continue;
    Checker checker;
    std::string error;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(checker);
    } catch (const std::exception& e) {
      error = e.what();
    }
    long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count());
    bool pass = error.empty() && checker.failures == 0 && ms < cr.limit_ms;
    if (!pass) exit_code = 1;
    std::printf("criterion %2d: %s %7ld checks %6ld ms (limit %6ld ms)  %s\n", cr.id,
                pass ? "PASS" : "FAIL", checker.checks, ms, cr.limit_ms, cr.title);
    if (!error.empty()) std::printf("              exception: %s\n", error.c_str());
    for (const std::string& msg : checker.messages)
      std::printf("              %s\n", msg.c_str());
    std::fflush(stdout);
  }
  return exit_code;
}
