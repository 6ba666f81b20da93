#pragma once

#include <vector>

#include "schur/exact.hpp"

namespace schur::weights {

using exact::Int;

/// Integer weight vector; the eigenvalue tuple of the torus generators
/// H_1..H_n. Length is the ambient n fixed by context.
using Weight = std::vector<long>;

/// Parameters of the mixed tensor space E^{r} x (E^*)^{s} for GL(n).
/// The rational case requires n >= 2 (proper subsets of {1..n} must exist);
/// the polynomial case S(n,d) accepts n >= 1 and is handled by (n, d) pairs.
struct RSParams {
  long n = 2;
  long r = 0;
  long s = 0;

  RSParams(long n_, long r_, long s_);
  /// Degree of the enveloping polynomial algebra: d = r + (n-1)s.
  long degree() const { return r + (n - 1) * s; }
};

/// Deduplicated weight list in descending lexicographic order.
struct WeightSet {
  std::vector<Weight> members;

  bool contains(const Weight& w) const;
  size_t size() const { return members.size(); }
};

/// Index sets P+ = {i : w_i > 0}, P- = {i : w_i < 0}, R+ = {i : w_i > s}.
/// Positions are 0-based.
struct SignSupport {
  std::vector<long> positive_positions;
  std::vector<long> negative_positions;
  std::vector<long> above_s_positions;
};

SignSupport sign_support(const Weight& w, long s);

long sum(const Weight& w);
bool is_dominant(const Weight& w);  // weakly decreasing entries

/// All weights with nonnegative entries summing to d (the weights of
/// E^{(x)d}); cardinality binom(n+d-1, d).
WeightSet enumerate_lambda(long n, long d);

/// Dominant members of enumerate_lambda(n, d), i.e. partitions of d into
/// at most n parts.
WeightSet enumerate_lambda_plus(long n, long d);

/// The weights of the mixed tensor space: all w with
/// sum{w_i | w_i>0} = r-t and sum{w_i | w_i<0} = t-s for some
/// 0 <= t <= min(r,s). Enumerated over the box [-s, r]^n.
WeightSet enumerate_lambda_rs(const RSParams& p);

enum class RSCondition { b, b1, b2, b3, b4 };

/// Membership test: condition (a) [sum = r-s] together with the chosen
/// subset-sum variant. Variants b..b4 bound, respectively: all proper
/// subset sums two-sidedly, from above, from below, the positive part,
/// the negative part.
bool lambda_rs_condition(const Weight& w, const RSParams& p, RSCondition variant);

enum class DominantRSCondition { B, B1, B2, B3, B4 };

/// Prefix-sum membership test for dominant weights: condition (A)
/// [sum = r-s] together with the chosen prefix-sum variant. Requires w
/// dominant.
bool lambda_plus_rs_condition(const Weight& w, const RSParams& p, DominantRSCondition variant);

/// Dominant members of enumerate_lambda_rs(p), enumerated directly via the
/// prefix-sum conditions (A)+(B).
WeightSet enumerate_lambda_plus_rs(const RSParams& p);

/// Entry-box test on dominant weights of degree r+(n-1)s: all entries in
/// [0, r+s]. Rejects non-dominant or wrong-degree input.
bool pi_prime_membership(const Weight& w, const RSParams& p);

/// The corrected cut: sum of the entries above s is at most r + |R+| s.
/// Requires w in Lambda+(n, r+(n-1)s).
bool pi_double_prime_membership(const Weight& w, const RSParams& p);

enum class ShiftDirection { to_pi_double_prime, to_lambda_plus_rs };

/// The mutually inverse bijection Lambda+(n,r,s) <-> pi'' given by adding
/// or subtracting s in every entry. Rejects source weights outside the
/// stated domain; the image is verified to land in the target set.
Weight shift_bijection(const Weight& w, const RSParams& p, ShiftDirection dir);

/// Dominance order: all prefix sums of a are >= those of b. Requires equal
/// lengths and equal entry sums (throws otherwise).
bool dominance_geq(const Weight& a, const Weight& b);

/// Complement of pi'' inside Lambda+(n, r+(n-1)s). Verified upward-closed
/// under dominance before returning (throws std::logic_error otherwise).
WeightSet nu_prime_set(const RSParams& p);

/// Weyl dimension product for GL(n):
///   prod_{1<=i<j<=n} (w_i - w_j + j - i) / (j - i).
/// Requires w dominant; exact positive integer.
Int weyl_dimension(const Weight& w);

/// Sum of squared Weyl dimensions over a weight set of dominant weights.
Int weyl_square_sum(const WeightSet& ws);

}  // namespace schur::weights
