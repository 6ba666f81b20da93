#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schur/tensor.hpp"
#include "schur/torus.hpp"

namespace schur::rewrite {

using exact::Scalar;
using tensor::GeneratorSymbol;
using tensor::Root;

/// Free word in the generator alphabet (divided powers and torus binomials).
using GeneratorWord = std::vector<GeneratorSymbol>;

/// Root orders fixed for the two outer blocks of the normal form: positive
/// roots row-major ((1,2),(1,3),...,(2,3),...); negative roots in blocks of
/// fixed first index with descending second index ((2,1),(3,2),(3,1),...).
std::pair<std::vector<Root>, std::vector<Root>> root_order(long n);

/// Exponent data of one straightened basis monomial
///   prod x_pos^{(a)} . prod binom(H_i, b_i) . prod x_neg^{(c)},
/// the outer products taken in the fixed root orders.
struct PBWMonomial {
  std::vector<long> positive_exps;  // indexed by positive root order
  std::vector<long> torus_exps;     // indexed by axis
  std::vector<long> negative_exps;  // indexed by negative root order

  bool operator==(const PBWMonomial& o) const;
  bool operator<(const PBWMonomial& o) const;
  bool is_unit() const;
};

struct NormalFormElement {
  std::map<PBWMonomial, Scalar> terms;

  bool operator==(const NormalFormElement& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

/// Straightening context for Dist(G_m): fixes (n, p, m), the torus grid
/// model used to reduce torus blocks, and memoized expansions.
class Context {
 public:
  Context(long n, long p, long m, long step_cap = 1'000'000);

  long n() const { return n_; }
  long p() const { return p_; }
  long m() const { return m_; }
  long q() const { return q_; }
  long step_cap() const { return step_cap_; }
  const torus::Context& torus_context() const { return tctx_; }
  const std::vector<Root>& positive_roots() const { return pos_; }
  const std::vector<Root>& negative_roots() const { return neg_; }

  long positive_index(Root r) const;
  long negative_index(Root r) const;

 private:
  long n_, p_, m_, q_, step_cap_;
  torus::Context tctx_;
  std::vector<Root> pos_, neg_;
  std::map<Root, long> pos_index_, neg_index_;
};

/// Rewrites the word into its straightened normal form by repeatedly
/// resolving the leftmost adjacent violation of the target order. Every
/// step is checked against a strictly decreasing well-founded measure
/// (total divided-power degree, then ordering inversions, then length);
/// a violation or the step cap raises instead of looping.
NormalFormElement pbw_rewrite(const GeneratorWord& word, Context& ctx);

/// Spells a straightened monomial back out as a word in canonical order.
GeneratorWord to_word(const PBWMonomial& m, const Context& ctx);

/// Product of two normal forms, computed by concatenating monomial
/// spellings and re-straightening.
NormalFormElement nf_multiply(const NormalFormElement& a, const NormalFormElement& b,
                              Context& ctx);

/// Matrix image of a word under the representation on the space.
tensor::SparseMat word_matrix(const tensor::Space& sp, const GeneratorWord& word);

/// Matrix image of a normal form.
tensor::SparseMat normal_form_matrix(const tensor::Space& sp, const NormalFormElement& nf,
                                     const Context& ctx);

/// Compares the matrix images of the word and its claimed normal form on
/// the given module; evidence for, not proof of, equality in Dist(G_m).
bool certify_rewrite(const GeneratorWord& word, const NormalFormElement& nf,
                     const tensor::Space& sp, const Context& ctx);

std::string word_str(const GeneratorWord& word);
std::string normal_form_str(const NormalFormElement& nf, const Context& ctx);

}  // namespace schur::rewrite
