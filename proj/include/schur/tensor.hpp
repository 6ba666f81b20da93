#pragma once

#include <map>
#include <string>
#include <vector>

#include "schur/exact.hpp"
#include "schur/torus.hpp"
#include "schur/weights.hpp"

namespace schur::tensor {

using exact::Field;
using exact::Int;
using exact::Scalar;
using weights::Weight;

/// Root of gl_n as an ordered pair of distinct 0-based axes (i, j),
/// representing eps_i - eps_j. Positive iff i < j.
struct Root {
  long i = 0;
  long j = 1;
  bool operator==(const Root& o) const { return i == o.i && j == o.j; }
  bool operator<(const Root& o) const { return i != o.i ? i < o.i : j < o.j; }
  Root operator-() const { return {j, i}; }
  bool positive() const { return i < j; }
};

/// Basis index of E^{(x)r} (x) (E*)^{(x)s}: covariant then contravariant
/// factor indices, each in [0, n).
struct BasisIndex {
  std::vector<long> covariant;
  std::vector<long> contravariant;
};

/// The mixed tensor space E^{(x)r} (x) (E*)^{(x)s} over an exact field,
/// with its basis enumerated lexicographically (covariant block first).
class Space {
 public:
  Space(long n, long r, long s, Field field);

  long n() const { return n_; }
  long r() const { return r_; }
  long s() const { return s_; }
  const Field& field() const { return field_; }
  long dim() const { return dim_; }

  BasisIndex index(long linear) const;
  long linear(const BasisIndex& idx) const;
  /// weight_i = (#occurrences of i among covariant) - (#contravariant).
  Weight weight_of(long linear) const;

 private:
  long n_, r_, s_;
  Field field_;
  long dim_;
};

/// Exact sparse square matrix over the space's field, row-major.
class SparseMat {
 public:
  SparseMat(long dim, Field field);

  long dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::map<long, Scalar>& row(long i) const { return rows_[i]; }

  void add(long i, long j, const Scalar& v);
  static SparseMat identity(long dim, Field field);
  static SparseMat zero(long dim, Field field);

  bool is_zero() const;
  long nonzeros() const;
  SparseMat operator+(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator*(const Scalar& c) const;
  bool operator==(const SparseMat& o) const;

 private:
  long dim_;
  Field field_;
  std::vector<std::map<long, Scalar>> rows_;
};

/// Divided power x_alpha^{(k)}: the sum over k-subsets of tensor positions
/// of the single-factor action (on E: v_l -> delta_{jl} v_i; on E*:
/// v*_l -> -delta_{il} v*_j). Integral, hence valid in any characteristic.
SparseMat matrix_divided_power(const Space& sp, Root alpha, long k);

/// Diagonal matrix with entries binom(weight_axis, a).
SparseMat matrix_binomial_H(const Space& sp, long axis, long a);

/// Diagonal matrix with entries binom(<coeffs, weight> + c, lower).
SparseMat matrix_linear_form_binomial(const Space& sp, const std::vector<long>& coeffs, long c,
                                      long lower);

/// Diagonal matrix with entries prod_{k=klo..khi} (<coeffs, weight> + k).
SparseMat matrix_linear_form_product(const Space& sp, const std::vector<long>& coeffs, long klo,
                                     long khi);

/// Formal generator symbol; the shared alphabet of words, presentations and
/// matrix images.
struct GeneratorSymbol {
  enum class Kind { divided_power, binomial_h, binomial_linear_form };
  Kind kind = Kind::binomial_h;
  Root root;                 // divided_power
  long axis = 0;             // binomial_h
  long exp = 0;              // k for divided powers, lower index otherwise
  std::vector<long> coeffs;  // binomial_linear_form
  long c = 0;

  static GeneratorSymbol divided(Root root, long k);
  static GeneratorSymbol binomial(long axis, long a);
  static GeneratorSymbol linear_form(std::vector<long> coeffs, long c, long lower);
  std::string str() const;
};

SparseMat matrix_of(const Space& sp, const GeneratorSymbol& g);

/// One concrete instance of a defining or commuting relation family.
/// Unused fields are ignored by the verifier. `shift` moves every torus
/// binomial to binom(H + shift, .) (the primed presentations).
struct RelationInstance {
  enum class Family {
    a,        // binomial merge on one axis
    b,        // divided-power merge on one root
    c,        // distinct-axis binomials commute
    d,        // root pair with alpha+beta a root
    e,        // opposite roots, torus correction terms
    f,        // root pair with alpha+beta not a root
    g,        // binomial past divided power (binomial on the left)
    h,        // divided power past binomial (binomial on the right)
    serre_e,  // char-0 Serre relation among e_i
    serre_f,  // char-0 Serre relation among f_i
    c0_cartan_commute,  // H_i H_j = H_j H_i
    c0_ef,              // [e_i, f_j] = delta_ij (H_j - H_{j+1})
    c0_he,              // [H_i, e_j] = (eps_i, alpha_j) e_j
    c0_hf,              // [H_i, f_j] = -(eps_i, alpha_j) f_j
    c0_degree,          // H_1 + ... + H_n = r - s
    c0_product,         // prod_{k=-r..s} (H_S + k) = 0
    kernel_i,           // binom(sum H - d, p^j) = 0
    kernel_j,           // binom(H_S - |S|s + s, p^j) = 0 (primed: arg H'_S)
    kernel_axis,        // binom(H_i [+ s], p^j) = 0
  };
  Family family{};
  long i = 0, j = 0;          // axis indices
  Root alpha, beta;           // roots
  long a = 0, b = 0;          // exponents (also k, l)
  long lower = 0;             // kernel family lower index p^j
  long c = 0;                 // resolved linear-form constant (kernel/degree)
  unsigned long smask = 0;    // subset bitmask
  long shift = 0;             // primed-generator shift s
  std::string label;          // rendering tag, e.g. "e_(1,2),2,2"
};

/// Builds both sides of the relation as exact matrices and compares.
bool verify_relation_instance(const Space& sp, const RelationInstance& rel);

/// Number of distinct weights among the basis indices; the dimension of
/// the image of the torus distribution algebra.
long s0_dimension(const Space& sp);

/// Dimension of the unital subalgebra generated by the given matrices,
/// computed by iterated span closure with exact echelon reduction
/// (deterministic lowest-index pivoting). Throws cap_exceeded beyond cap.
long algebra_closure_dimension(const std::vector<SparseMat>& generators, long cap = 5000);

/// Span dimension of the orbit of a single basis vector under the given
/// matrices; the module-closure oracle used for desk-scale dimension checks.
long vector_closure_dimension(const std::vector<SparseMat>& generators, long start_index,
                              long cap = 5000);

/// Images of the standard char-0 generator set {e_i, f_i, H_i} under the
/// representation on the space.
std::vector<SparseMat> char0_generator_matrices(const Space& sp);

/// Per-generator vanishing check of an ideal's image on the space.
struct KernelReport {
  struct Item {
    std::string generator;
    bool vanishes = false;
  };
  std::vector<Item> items;
  bool all_pass() const;
};

KernelReport kernel_vanishing_report(const torus::IdealDescriptor& ideal, const Space& sp);

}  // namespace schur::tensor
