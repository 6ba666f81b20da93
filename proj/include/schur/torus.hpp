#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schur/exact.hpp"
#include "schur/weights.hpp"

namespace schur::torus {

using exact::Field;
using exact::Int;
using exact::Scalar;
using weights::Weight;

/// Ambient algebra of binomial monomials prod_i binom(H_i, b_i) realized as
/// exact functions on a finite integer grid [lo, hi]^n. In characteristic p
/// the grid has side q = p^m (possibly shifted by -s); in characteristic 0
/// the side is r+s+1 on [-s, r]. Contexts are immutable values.
class Context {
 public:
  /// Characteristic-0 model on the grid [-s, r]^n.
  static Context char0(long n, long r, long s);
  /// Frobenius-kernel model on [0, p^m)^n.
  static Context frobenius(long n, long p, long m);
  /// Shift-aligned model on [-s, p^m - s)^n.
  static Context frobenius_shifted(long n, long p, long m, long s);

  long n() const { return n_; }
  long characteristic() const { return field_.characteristic(); }
  long frobenius_exponent() const { return m_; }  // m; 0 in characteristic 0
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  /// Monomial exponents run over [0, basis_bound); equals the grid side.
  long basis_bound() const { return hi_ - lo_ + 1; }
  const Field& field() const { return field_; }

  long grid_size() const;                 // (hi-lo+1)^n
  Weight grid_point(long index) const;    // descending-lex enumeration
  long grid_index(const Weight& pt) const;

  bool operator==(const Context& o) const;
  bool operator!=(const Context& o) const { return !(*this == o); }

 private:
  Context(long n, Field f, long m, long lo, long hi);
  long n_;
  Field field_;
  long m_;
  long lo_, hi_;
};

/// Exponent vector of a basis monomial prod_i binom(H_i, b_i).
using Monomial = std::vector<long>;

/// Sparse element of the grid-model torus algebra: a linear combination of
/// basis monomials with nonzero coefficients in the ambient field.
class Element {
 public:
  explicit Element(const Context& ctx) : ctx_(ctx) {}

  const Context& context() const { return ctx_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Scalar& c);
  Element& operator+=(const Element& o);
  Element operator+(const Element& o) const;
  Element operator*(const Scalar& c) const;
  bool operator==(const Element& o) const;

  std::string str() const;

 private:
  Context ctx_;
  std::map<Monomial, Scalar> terms_;
};

Element unit(const Context& ctx);
/// The single monomial binom(H_axis, e); e = 0 yields the unit.
Element binomial_monomial(const Context& ctx, long axis, long e);
Element monomial_element(const Context& ctx, const Monomial& mono);

/// Exact values on the context grid, indexed by Context::grid_point order.
struct GridFunction {
  Context ctx;
  std::vector<Scalar> values;

  bool operator==(const GridFunction& o) const;
};

/// Substitutes the integer point for H and evaluates every binomial exactly
/// in the ambient field. The point need not lie on the grid.
Scalar evaluate(const Element& x, const Weight& point);

/// Evaluation at every grid point; an algebra isomorphism onto pointwise
/// functions. Guarded against grids larger than 10^6 points.
GridFunction to_grid(const Element& x);

/// The unique element with per-axis exponents < basis_bound attaining the
/// given grid values (Newton forward differences along each axis, then
/// shift expansion when the grid does not start at 0).
Element interpolate(const GridFunction& f);

/// Product expanded componentwise by the binomial multiplication formula
///   binom(H,b) binom(H,a) = sum_j binom(a+b-j, a-j) binom(b,j) binom(H,a+b-j),
/// followed by evaluate/interpolate reduction of any exponent that left the
/// basis range.
Element multiply(const Element& x, const Element& y);

/// The idempotent h_b = prod_i sum_{k=b_i}^{q-1} (-1)^{k-b_i} binom(k,b_i) binom(H_i,k).
/// Characteristic p only; the indicator function of grid point b + lo.
Element idempotent_h(const Context& ctx, const Monomial& b);

/// binom(H_axis + c, j) = sum_t binom(H_axis, t) binom(c, j-t); negative c
/// uses the reflection rule.
Element shifted_binomial(const Context& ctx, long axis, long c, long j);

/// Applies the algebra automorphism binom(H_i, b) -> binom(H_i + s, b)
/// monomial-wise and re-expands in the basis.
Element sigma_shift(const Element& x, long s);

/// Symbolic generator of an ideal: a function of the linear form
/// arg = <coeffs, point> + c.
struct GeneratorSpec {
  enum class Kind {
    linear,         // arg
    product_range,  // prod_{k=klo..khi} (arg + k)
    binomial,       // binom(arg, lower)
  };
  Kind kind = Kind::linear;
  std::vector<long> coeffs;
  long c = 0;
  long lower = 0;  // binomial lower index
  long klo = 0, khi = 0;

  std::string str() const;
};

/// Exact value of a generator at an integer point, in the given field.
Scalar evaluate_generator(const GeneratorSpec& g, const Weight& point, const Field& field);

/// The grid function point -> binom(<coeffs, point> + c, lower) in the
/// ambient field of the context.
GridFunction linear_form_binomial(const Context& ctx, const std::vector<long>& coeffs, long c,
                                  long lower);

enum class IdealKind { char0_rs, charp_d, charp_rs };

/// Ideal of the grid model given by generators; the quotient is the algebra
/// of functions on the common vanishing locus.
struct IdealDescriptor {
  IdealKind kind;
  Context ctx;
  std::vector<GeneratorSpec> generators;
  std::vector<Weight> vanishing_locus;  // descending lexicographic
};

struct IdealParams {
  long n = 0;
  long r = 0, s = 0;  // rational kinds
  long d = 0;         // polynomial kind
  long p = 0, m = 0;  // characteristic-p kinds
  /// Restrict proper-subset generators to |S| <= n/2 (characteristic 0).
  bool half_subsets_only = false;
};

/// Materializes the generator list over the context grid and computes the
/// vanishing locus exactly. Infinite j-families are truncated at
/// j <= m + floor(log_p n); the truncation is asserted by also testing the
/// next generator against the computed locus.
IdealDescriptor build_ideal(IdealKind kind, const IdealParams& prm);

/// dim F_0 = number of common zeros of the generators.
long quotient_dimension(const IdealDescriptor& ideal);

/// Materializes one generator as a grid function (small grids).
GridFunction generator_grid(const IdealDescriptor& ideal, size_t gen_index);

}  // namespace schur::torus
