#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schur/rewrite.hpp"

using namespace schur;
using namespace schur::rewrite;
using exact::Field;
using exact::Scalar;
using tensor::GeneratorSymbol;
using tensor::Root;
using tensor::Space;

namespace {

GeneratorWord random_word(std::mt19937_64& rng, const Context& ctx, long len) {
  GeneratorWord word;
  std::vector<Root> roots = ctx.positive_roots();
  roots.insert(roots.end(), ctx.negative_roots().begin(), ctx.negative_roots().end());
  for (long t = 0; t < len; ++t) {
    long exp = 1 + static_cast<long>(rng() % static_cast<unsigned long>(ctx.q() - 1));
    if (rng() % 3 == 0)
      word.push_back(GeneratorSymbol::binomial(static_cast<long>(rng() % ctx.n()), exp));
    else
      word.push_back(GeneratorSymbol::divided(roots[rng() % roots.size()], exp));
  }
  return word;
}

PBWMonomial monomial(const Context& ctx, std::vector<long> pos, std::vector<long> tor,
                     std::vector<long> neg) {
  (void)ctx;
  PBWMonomial m;
  m.positive_exps = std::move(pos);
  m.torus_exps = std::move(tor);
  m.negative_exps = std::move(neg);
  return m;
}

}  // namespace

TEST_CASE("root orders") {
  auto [pos2, neg2] = root_order(2);
  CHECK(pos2 == std::vector<Root>{Root{0, 1}});
  CHECK(neg2 == std::vector<Root>{Root{1, 0}});

  auto [pos3, neg3] = root_order(3);
  CHECK(pos3 == std::vector<Root>{Root{0, 1}, Root{0, 2}, Root{1, 2}});
  CHECK(neg3 == std::vector<Root>{Root{1, 0}, Root{2, 1}, Root{2, 0}});

  auto [pos4, neg4] = root_order(4);
  CHECK(pos4.size() == 6);
  CHECK(neg4 == std::vector<Root>{Root{1, 0}, Root{2, 1}, Root{2, 0}, Root{3, 2}, Root{3, 1},
                                  Root{3, 0}});
  CHECK_THROWS_AS(root_order(1), std::invalid_argument);
}

TEST_CASE("straightening") {
  SUBCASE("ordered words stay put") {
    Context ctx(2, 2, 2);
    GeneratorWord w{GeneratorSymbol::divided(Root{0, 1}, 1),
                    GeneratorSymbol::divided(Root{1, 0}, 1)};
    NormalFormElement nf = pbw_rewrite(w, ctx);
    REQUIRE(nf.terms.size() == 1);
    CHECK(nf.terms.begin()->first == monomial(ctx, {1}, {0, 0}, {1}));
    CHECK(nf.terms.begin()->second.is_one());
  }
  SUBCASE("opposite roots produce torus corrections") {
    Context ctx(2, 2, 2);
    GeneratorWord w{GeneratorSymbol::divided(Root{1, 0}, 1),
                    GeneratorSymbol::divided(Root{0, 1}, 1)};
    NormalFormElement nf = pbw_rewrite(w, ctx);
    NormalFormElement expect;
    Scalar one = Scalar::residue(1, 2);
    expect.terms.emplace(monomial(ctx, {1}, {0, 0}, {1}), one);
    expect.terms.emplace(monomial(ctx, {0}, {1, 0}, {0}), one);
    expect.terms.emplace(monomial(ctx, {0}, {0, 1}, {0}), one);
    CHECK(nf == expect);
    CHECK(certify_rewrite(w, nf, Space(2, 2, 0, Field::prime(2)), ctx));
    CHECK(certify_rewrite(w, nf, Space(2, 3, 0, Field::prime(2)), ctx));
  }
  SUBCASE("binomial slides past a divided power with a shift") {
    Context ctx(2, 2, 2);
    GeneratorWord w{GeneratorSymbol::binomial(0, 1), GeneratorSymbol::divided(Root{0, 1}, 1)};
    NormalFormElement nf = pbw_rewrite(w, ctx);
    // x^{(1)} binom(H1 - 1, 1) = x^{(1)} binom(H1,1) - x^{(1)}; mod 2 both
    // coefficients are 1
    NormalFormElement expect;
    Scalar one = Scalar::residue(1, 2);
    expect.terms.emplace(monomial(ctx, {1}, {1, 0}, {0}), one);
    expect.terms.emplace(monomial(ctx, {1}, {0, 0}, {0}), one);
    CHECK(nf == expect);
    CHECK(certify_rewrite(w, nf, Space(2, 2, 0, Field::prime(2)), ctx));
    CHECK(certify_rewrite(w, nf, Space(2, 3, 0, Field::prime(2)), ctx));
  }
  SUBCASE("same-root powers merge with the binomial coefficient") {
    Context ctx(2, 3, 2);  // q = 9
    GeneratorWord w{GeneratorSymbol::divided(Root{0, 1}, 1),
                    GeneratorSymbol::divided(Root{0, 1}, 1)};
    NormalFormElement nf = pbw_rewrite(w, ctx);
    REQUIRE(nf.terms.size() == 1);
    CHECK(nf.terms.begin()->first == monomial(ctx, {2}, {0, 0}, {0}));
    CHECK(nf.terms.begin()->second.res() == 2);
  }
  SUBCASE("merges past the exponent bound vanish") {
    Context ctx(2, 2, 1);  // q = 2
    GeneratorWord w{GeneratorSymbol::divided(Root{0, 1}, 1),
                    GeneratorSymbol::divided(Root{0, 1}, 1)};
    // binom(2,1) = 2 = 0 mod 2
    CHECK(pbw_rewrite(w, ctx).is_zero());
  }
  SUBCASE("exponent validation") {
    Context ctx(2, 2, 1);
    GeneratorWord w{GeneratorSymbol::divided(Root{0, 1}, 2)};
    CHECK_THROWS_AS(pbw_rewrite(w, ctx), std::invalid_argument);
  }
  SUBCASE("step cap aborts loudly") {
    Context tiny(2, 2, 2, /*step_cap=*/1);
    GeneratorWord w{GeneratorSymbol::divided(Root{1, 0}, 1),
                    GeneratorSymbol::divided(Root{0, 1}, 1),
                    GeneratorSymbol::binomial(0, 1)};
    CHECK_THROWS_AS(pbw_rewrite(w, tiny), exact::cap_exceeded);
  }
}

TEST_CASE("idempotence on straightened monomials") {
  for (auto [p, m] : {std::pair<long, long>{2, 2}, {3, 1}}) {
    for (long n = 2; n <= 3; ++n) {
      Context ctx(n, p, m);
      std::mt19937_64 rng(41);
      long npos = static_cast<long>(ctx.positive_roots().size());
      for (int t = 0; t < 25; ++t) {
        PBWMonomial mono;
        for (long i = 0; i < npos; ++i)
          mono.positive_exps.push_back(static_cast<long>(rng() % ctx.q()));
        for (long i = 0; i < n; ++i)
          mono.torus_exps.push_back(static_cast<long>(rng() % ctx.q()));
        for (long i = 0; i < npos; ++i)
          mono.negative_exps.push_back(static_cast<long>(rng() % ctx.q()));
        NormalFormElement nf = pbw_rewrite(to_word(mono, ctx), ctx);
        REQUIRE(nf.terms.size() == 1);
        CHECK(nf.terms.begin()->first == mono);
        CHECK(nf.terms.begin()->second.is_one());
      }
    }
  }
}

TEST_CASE("linearity under concatenation") {
  Context ctx(2, 2, 2);
  std::mt19937_64 rng(43);
  Space sp(2, 3, 0, Field::prime(2));
  for (int t = 0; t < 20; ++t) {
    GeneratorWord w1 = random_word(rng, ctx, 3);
    GeneratorWord w2 = random_word(rng, ctx, 3);
    NormalFormElement nf1 = pbw_rewrite(w1, ctx);
    NormalFormElement nf2 = pbw_rewrite(w2, ctx);
    GeneratorWord concat = w1;
    concat.insert(concat.end(), w2.begin(), w2.end());
    NormalFormElement nf = pbw_rewrite(concat, ctx);
    CHECK(nf == nf_multiply(nf1, nf2, ctx));
    CHECK(certify_rewrite(concat, nf, sp, ctx));
  }
}

TEST_CASE("randomized certification suite") {
  struct Config {
    long n, p, m;
  };
  for (Config cfg : {Config{2, 2, 2}, Config{2, 3, 1}, Config{3, 2, 2}, Config{3, 3, 1}}) {
    Context ctx(cfg.n, cfg.p, cfg.m);
    std::mt19937_64 rng(47);
    std::vector<Space> spaces;
    for (long d : {2L, 3L})
      if (d < ctx.q()) spaces.emplace_back(cfg.n, d, 0, Field::prime(cfg.p));
    if (spaces.empty()) spaces.emplace_back(cfg.n, 1, 0, Field::prime(cfg.p));
    for (int t = 0; t < 50; ++t) {
      GeneratorWord w = random_word(rng, ctx, 1 + t % 6);
      NormalFormElement nf = pbw_rewrite(w, ctx);
      for (const Space& sp : spaces) CHECK(certify_rewrite(w, nf, sp, ctx));
      // every exponent of the straightened element is within [0, q)
      for (const auto& [mono, coeff] : nf.terms) {
        (void)coeff;
        for (long e : mono.positive_exps) CHECK((e >= 0 && e < ctx.q()));
        for (long e : mono.torus_exps) CHECK((e >= 0 && e < ctx.q()));
        for (long e : mono.negative_exps) CHECK((e >= 0 && e < ctx.q()));
      }
    }
  }
}

TEST_CASE("mixed-space certification") {
  Context ctx(2, 2, 2);
  std::mt19937_64 rng(53);
  Space sp(2, 1, 1, Field::prime(2));
  for (int t = 0; t < 30; ++t) {
    GeneratorWord w = random_word(rng, ctx, 4);
    NormalFormElement nf = pbw_rewrite(w, ctx);
    CHECK(certify_rewrite(w, nf, sp, ctx));
  }
}
