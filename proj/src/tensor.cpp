#include "schur/tensor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schur::tensor {

namespace {

long checked_pow(long base, long e) {
  long v = 1;
  for (long i = 0; i < e; ++i) {
    if (base != 0 && v > 2'000'000 / base)
      throw exact::cap_exceeded("tensor space dimension exceeds guard");
    v *= base;
  }
  return v;
}

}  // namespace

Space::Space(long n, long r, long s, Field field)
    : n_(n), r_(r), s_(s), field_(field), dim_(0) {
  if (n < 1 || r < 0 || s < 0) throw std::invalid_argument("Space: need n >= 1, r, s >= 0");
  dim_ = checked_pow(n_, r_ + s_);
}

BasisIndex Space::index(long linear) const {
  if (linear < 0 || linear >= dim_) throw std::invalid_argument("Space::index: out of range");
  BasisIndex idx;
  idx.covariant.resize(r_);
  idx.contravariant.resize(s_);
  for (long t = s_ - 1; t >= 0; --t) {
    idx.contravariant[t] = linear % n_;
    linear /= n_;
  }
  for (long t = r_ - 1; t >= 0; --t) {
    idx.covariant[t] = linear % n_;
    linear /= n_;
  }
  return idx;
}

long Space::linear(const BasisIndex& idx) const {
  if (static_cast<long>(idx.covariant.size()) != r_ ||
      static_cast<long>(idx.contravariant.size()) != s_)
    throw std::invalid_argument("Space::linear: wrong index shape");
  long lin = 0;
  for (long v : idx.covariant) {
    if (v < 0 || v >= n_) throw std::invalid_argument("Space::linear: factor index out of range");
    lin = lin * n_ + v;
  }
  for (long v : idx.contravariant) {
    if (v < 0 || v >= n_) throw std::invalid_argument("Space::linear: factor index out of range");
    lin = lin * n_ + v;
  }
  return lin;
}

Weight Space::weight_of(long linear) const {
  BasisIndex idx = index(linear);
  Weight w(n_, 0);
  for (long v : idx.covariant) ++w[v];
  for (long v : idx.contravariant) --w[v];
  return w;
}

SparseMat::SparseMat(long dim, Field field) : dim_(dim), field_(field), rows_(dim) {
  if (dim < 1) throw std::invalid_argument("SparseMat: need dim >= 1");
}

void SparseMat::add(long i, long j, const Scalar& v) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw std::invalid_argument("SparseMat::add: out of range");
  if (v.is_zero()) return;
  auto [it, inserted] = rows_[i].emplace(j, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) rows_[i].erase(it);
  }
}

SparseMat SparseMat::identity(long dim, Field field) {
  SparseMat m(dim, field);
  for (long i = 0; i < dim; ++i) m.add(i, i, field.one());
  return m;
}

SparseMat SparseMat::zero(long dim, Field field) { return SparseMat(dim, field); }

bool SparseMat::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

long SparseMat::nonzeros() const {
  long c = 0;
  for (const auto& r : rows_) c += static_cast<long>(r.size());
  return c;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
  if (dim_ != o.dim_ || field_ != o.field_) throw std::invalid_argument("SparseMat: mismatch");
  SparseMat out = *this;
  for (long i = 0; i < dim_; ++i)
    for (const auto& [j, v] : o.rows_[i]) out.add(i, j, v);
  return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  if (dim_ != o.dim_ || field_ != o.field_) throw std::invalid_argument("SparseMat: mismatch");
  SparseMat out = *this;
  for (long i = 0; i < dim_; ++i)
    for (const auto& [j, v] : o.rows_[i]) out.add(i, j, -v);
  return out;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (dim_ != o.dim_ || field_ != o.field_) throw std::invalid_argument("SparseMat: mismatch");
  SparseMat out(dim_, field_);
  for (long i = 0; i < dim_; ++i)
    for (const auto& [k, a] : rows_[i])
      for (const auto& [j, b] : o.rows_[k]) out.add(i, j, a * b);
  return out;
}

SparseMat SparseMat::operator*(const Scalar& c) const {
  SparseMat out(dim_, field_);
  if (c.is_zero()) return out;
  for (long i = 0; i < dim_; ++i)
    for (const auto& [j, v] : rows_[i]) out.add(i, j, v * c);
  return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return dim_ == o.dim_ && field_ == o.field_ && rows_ == o.rows_;
}

SparseMat matrix_divided_power(const Space& sp, Root alpha, long k) {
  if (alpha.i == alpha.j)
    throw std::invalid_argument("matrix_divided_power: need a root, i != j");
  if (alpha.i < 0 || alpha.i >= sp.n() || alpha.j < 0 || alpha.j >= sp.n())
    throw std::invalid_argument("matrix_divided_power: root out of range");
  if (k < 0) throw std::invalid_argument("matrix_divided_power: need k >= 0");
  SparseMat out(sp.dim(), sp.field());
  if (k == 0) return SparseMat::identity(sp.dim(), sp.field());
  const Scalar one = sp.field().one();
  for (long src = 0; src < sp.dim(); ++src) {
    BasisIndex idx = sp.index(src);
    // positions where the single-factor action is nonzero
    std::vector<std::pair<bool, long>> pos;  // (is_contravariant, slot)
    for (long t = 0; t < sp.r(); ++t)
      if (idx.covariant[t] == alpha.j) pos.emplace_back(false, t);
    for (long t = 0; t < sp.s(); ++t)
      if (idx.contravariant[t] == alpha.i) pos.emplace_back(true, t);
    long count = static_cast<long>(pos.size());
    if (count < k) continue;
    // iterate k-subsets of pos
    std::vector<long> pick(k);
    for (long t = 0; t < k; ++t) pick[t] = t;
    while (true) {
      BasisIndex tgt = idx;
      long sign_flips = 0;
      for (long t = 0; t < k; ++t) {
        auto [contra, slot] = pos[pick[t]];
        if (contra) {
          tgt.contravariant[slot] = alpha.j;
          ++sign_flips;
        } else {
          tgt.covariant[slot] = alpha.i;
        }
      }
      Scalar v = (sign_flips % 2 == 0) ? one : -one;
      out.add(sp.linear(tgt), src, v);
      long t = k - 1;
      while (t >= 0 && pick[t] == count - k + t) --t;
      if (t < 0) break;
      ++pick[t];
      for (long u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  return out;
}

SparseMat matrix_binomial_H(const Space& sp, long axis, long a) {
  std::vector<long> coeffs(sp.n(), 0);
  if (axis < 0 || axis >= sp.n()) throw std::invalid_argument("matrix_binomial_H: bad axis");
  coeffs[axis] = 1;
  return matrix_linear_form_binomial(sp, coeffs, 0, a);
}

SparseMat matrix_linear_form_binomial(const Space& sp, const std::vector<long>& coeffs, long c,
                                      long lower) {
  if (static_cast<long>(coeffs.size()) != sp.n())
    throw std::invalid_argument("matrix_linear_form_binomial: wrong coefficient count");
  if (lower < 0) throw std::invalid_argument("matrix_linear_form_binomial: need lower >= 0");
  SparseMat out(sp.dim(), sp.field());
  for (long idx = 0; idx < sp.dim(); ++idx) {
    Weight w = sp.weight_of(idx);
    long arg = c;
    for (long i = 0; i < sp.n(); ++i) arg += coeffs[i] * w[i];
    out.add(idx, idx, sp.field().binomial(arg, lower));
  }
  return out;
}

SparseMat matrix_linear_form_product(const Space& sp, const std::vector<long>& coeffs, long klo,
                                     long khi) {
  if (static_cast<long>(coeffs.size()) != sp.n())
    throw std::invalid_argument("matrix_linear_form_product: wrong coefficient count");
  SparseMat out(sp.dim(), sp.field());
  for (long idx = 0; idx < sp.dim(); ++idx) {
    Weight w = sp.weight_of(idx);
    long arg = 0;
    for (long i = 0; i < sp.n(); ++i) arg += coeffs[i] * w[i];
    Int v = 1;
    for (long k = klo; k <= khi && v != 0; ++k) v *= arg + k;
    out.add(idx, idx, sp.field().from_int(v));
  }
  return out;
}

GeneratorSymbol GeneratorSymbol::divided(Root root, long k) {
  GeneratorSymbol g;
  g.kind = Kind::divided_power;
  g.root = root;
  g.exp = k;
  return g;
}

GeneratorSymbol GeneratorSymbol::binomial(long axis, long a) {
  GeneratorSymbol g;
  g.kind = Kind::binomial_h;
  g.axis = axis;
  g.exp = a;
  return g;
}

GeneratorSymbol GeneratorSymbol::linear_form(std::vector<long> coeffs, long c, long lower) {
  GeneratorSymbol g;
  g.kind = Kind::binomial_linear_form;
  g.coeffs = std::move(coeffs);
  g.c = c;
  g.exp = lower;
  return g;
}

std::string GeneratorSymbol::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::divided_power:
      os << "x(" << root.i + 1 << "," << root.j + 1 << ")^(" << exp << ")";
      break;
    case Kind::binomial_h:
      os << "binom(H" << axis + 1 << "," << exp << ")";
      break;
    case Kind::binomial_linear_form: {
      os << "binom(";
      bool first = true;
      for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first)
          os << (coeffs[i] > 0 ? "+" : "-");
        else if (coeffs[i] < 0)
          os << "-";
        first = false;
        if (std::abs(coeffs[i]) != 1) os << std::abs(coeffs[i]) << "*";
        os << "H" << i + 1;
      }
      if (first) os << "0";
      if (c > 0) os << "+" << c;
      if (c < 0) os << c;
      os << "," << exp << ")";
      break;
    }
  }
  return os.str();
}

SparseMat matrix_of(const Space& sp, const GeneratorSymbol& g) {
  switch (g.kind) {
    case GeneratorSymbol::Kind::divided_power:
      return matrix_divided_power(sp, g.root, g.exp);
    case GeneratorSymbol::Kind::binomial_h:
      return matrix_binomial_H(sp, g.axis, g.exp);
    case GeneratorSymbol::Kind::binomial_linear_form:
      return matrix_linear_form_binomial(sp, g.coeffs, g.c, g.exp);
  }
  throw std::logic_error("matrix_of: unreachable");
}

namespace {

std::vector<long> axis_vec(long n, long axis, long value = 1) {
  std::vector<long> v(n, 0);
  v[axis] = value;
  return v;
}

// binom(H_axis + shift, a) as a matrix
SparseMat bmat(const Space& sp, long axis, long a, long shift) {
  return matrix_linear_form_binomial(sp, axis_vec(sp.n(), axis), shift, a);
}

SparseMat xmat(const Space& sp, Root alpha, long k) { return matrix_divided_power(sp, alpha, k); }

long cartan_pairing(long i, long j) {
  // (eps_i, alpha_j) with alpha_j = eps_j - eps_{j+1}; 0-based indices
  return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
}

std::vector<long> mask_coeffs(long n, unsigned long mask) {
  std::vector<long> c(n, 0);
  for (long i = 0; i < n; ++i)
    if (mask & (1UL << i)) c[i] = 1;
  return c;
}

}  // namespace

bool verify_relation_instance(const Space& sp, const RelationInstance& rel) {
  using Family = RelationInstance::Family;
  const Field& F = sp.field();
  const long q_unused = 0;
  (void)q_unused;
  switch (rel.family) {
    case Family::a: {
      SparseMat lhs = bmat(sp, rel.i, rel.a, rel.shift) * bmat(sp, rel.i, rel.b, rel.shift);
      SparseMat rhs = SparseMat::zero(sp.dim(), F);
      for (long j = 0; j <= std::min(rel.a, rel.b); ++j) {
        Scalar coeff = F.binomial(rel.a + rel.b - j, rel.a - j) * F.binomial(rel.b, j);
        if (coeff.is_zero()) continue;
        rhs = rhs + bmat(sp, rel.i, rel.a + rel.b - j, rel.shift) * coeff;
      }
      return lhs == rhs;
    }
    case Family::b: {
      SparseMat lhs = xmat(sp, rel.alpha, rel.a) * xmat(sp, rel.alpha, rel.b);
      SparseMat rhs = xmat(sp, rel.alpha, rel.a + rel.b) * F.binomial(rel.a + rel.b, rel.a);
      return lhs == rhs;
    }
    case Family::c: {
      SparseMat x = bmat(sp, rel.i, rel.a, rel.shift), y = bmat(sp, rel.j, rel.b, rel.shift);
      return x * y == y * x;
    }
    case Family::d: {
      Root sum;
      long sign;
      if (rel.alpha.j == rel.beta.i && rel.alpha.i != rel.beta.j) {
        sum = Root{rel.alpha.i, rel.beta.j};
        sign = 1;
      } else if (rel.alpha.i == rel.beta.j && rel.alpha.j != rel.beta.i) {
        sum = Root{rel.beta.i, rel.alpha.j};
        sign = -1;
      } else {
        throw std::invalid_argument("relation (d): alpha+beta is not a root");
      }
      SparseMat lhs = xmat(sp, rel.alpha, rel.a) * xmat(sp, rel.beta, rel.b);
      SparseMat rhs = SparseMat::zero(sp.dim(), F);
      for (long t = 0; t <= std::min(rel.a, rel.b); ++t) {
        Scalar coeff = (sign < 0 && t % 2 != 0) ? -F.one() : F.one();
        rhs = rhs + xmat(sp, rel.beta, rel.b - t) * xmat(sp, sum, t) *
                        xmat(sp, rel.alpha, rel.a - t) * coeff;
      }
      return lhs == rhs;
    }
    case Family::e: {
      Root alpha = rel.alpha;
      SparseMat lhs = xmat(sp, alpha, rel.a) * xmat(sp, -alpha, rel.b);
      SparseMat rhs = SparseMat::zero(sp.dim(), F);
      std::vector<long> coeffs(sp.n(), 0);
      coeffs[alpha.i] = 1;
      coeffs[alpha.j] = -1;
      for (long t = 0; t <= std::min(rel.a, rel.b); ++t) {
        SparseMat mid = matrix_linear_form_binomial(sp, coeffs, -rel.a - rel.b + 2 * t, t);
        rhs = rhs + xmat(sp, -alpha, rel.b - t) * mid * xmat(sp, alpha, rel.a - t);
      }
      return lhs == rhs;
    }
    case Family::f: {
      SparseMat x = xmat(sp, rel.alpha, rel.a), y = xmat(sp, rel.beta, rel.b);
      return x * y == y * x;
    }
    case Family::g: {
      // binom(H_i,a) x_alpha^{(k)} = x_alpha^{(k)} binom(H_i + k, a) and
      // binom(H_j,a) x_alpha^{(k)} = x_alpha^{(k)} binom(H_j - k, a); the
      // divided power raises the i-weight and lowers the j-weight
      long k = rel.b;
      long delta = rel.i == rel.alpha.i ? k : rel.i == rel.alpha.j ? -k : 0;
      SparseMat lhs = bmat(sp, rel.i, rel.a, rel.shift) * xmat(sp, rel.alpha, k);
      SparseMat rhs = xmat(sp, rel.alpha, k) * bmat(sp, rel.i, rel.a, rel.shift + delta);
      return lhs == rhs;
    }
    case Family::h: {
      long k = rel.b;
      long delta = rel.i == rel.alpha.i ? -k : rel.i == rel.alpha.j ? k : 0;
      SparseMat lhs = xmat(sp, rel.alpha, k) * bmat(sp, rel.i, rel.a, rel.shift);
      SparseMat rhs = bmat(sp, rel.i, rel.a, rel.shift + delta) * xmat(sp, rel.alpha, k);
      return lhs == rhs;
    }
    case Family::serre_e:
    case Family::serre_f: {
      bool fside = rel.family == Family::serre_f;
      auto simple = [&](long t) {
        Root r{t, t + 1};
        return fside ? -r : r;
      };
      SparseMat ei = xmat(sp, simple(rel.i), 1), ej = xmat(sp, simple(rel.j), 1);
      if (std::labs(rel.i - rel.j) == 1) {
        SparseMat lhs = ei * ei * ej - ei * ej * ei * F.from_long(2) + ej * ei * ei;
        return lhs.is_zero();
      }
      return ei * ej == ej * ei;
    }
    case Family::c0_cartan_commute: {
      SparseMat x = bmat(sp, rel.i, 1, 0), y = bmat(sp, rel.j, 1, 0);
      return x * y == y * x;
    }
    case Family::c0_ef: {
      SparseMat ei = xmat(sp, Root{rel.i, rel.i + 1}, 1);
      SparseMat fj = xmat(sp, Root{rel.j + 1, rel.j}, 1);
      SparseMat lhs = ei * fj - fj * ei;
      SparseMat rhs = SparseMat::zero(sp.dim(), F);
      if (rel.i == rel.j) rhs = bmat(sp, rel.j, 1, 0) - bmat(sp, rel.j + 1, 1, 0);
      return lhs == rhs;
    }
    case Family::c0_he:
    case Family::c0_hf: {
      bool fside = rel.family == Family::c0_hf;
      Root root = fside ? Root{rel.j + 1, rel.j} : Root{rel.j, rel.j + 1};
      SparseMat h = bmat(sp, rel.i, 1, 0);
      SparseMat x = xmat(sp, root, 1);
      long pairing = cartan_pairing(rel.i, rel.j) * (fside ? -1 : 1);
      SparseMat lhs = h * x - x * h;
      return lhs == x * F.from_long(pairing);
    }
    case Family::c0_degree: {
      std::vector<long> all(sp.n(), 1);
      SparseMat lhs = matrix_linear_form_binomial(sp, all, rel.c, 1);
      return lhs.is_zero();  // sum H_i - (r-s) vanishes
    }
    case Family::c0_product: {
      SparseMat lhs =
          matrix_linear_form_product(sp, mask_coeffs(sp.n(), rel.smask), rel.a, rel.b);
      return lhs.is_zero();
    }
    case Family::kernel_i: {
      std::vector<long> all(sp.n(), 1);
      return matrix_linear_form_binomial(sp, all, rel.c, rel.lower).is_zero();
    }
    case Family::kernel_j: {
      return matrix_linear_form_binomial(sp, mask_coeffs(sp.n(), rel.smask), rel.c, rel.lower)
          .is_zero();
    }
    case Family::kernel_axis: {
      return matrix_linear_form_binomial(sp, axis_vec(sp.n(), rel.i), rel.c, rel.lower)
          .is_zero();
    }
  }
  throw std::logic_error("verify_relation_instance: unreachable");
}

long s0_dimension(const Space& sp) {
  std::set<Weight> distinct;
  for (long idx = 0; idx < sp.dim(); ++idx) distinct.insert(sp.weight_of(idx));
  return static_cast<long>(distinct.size());
}

namespace {

using SparseVec = std::map<long, Scalar>;

SparseVec flatten(const SparseMat& m) {
  SparseVec v;
  for (long i = 0; i < m.dim(); ++i)
    for (const auto& [j, val] : m.row(i)) v.emplace(i * m.dim() + j, val);
  return v;
}

void axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
  for (const auto& [k, val] : w) {
    auto [it, inserted] = v.emplace(k, c * val);
    if (!inserted) {
      it->second += c * val;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

// Echelon basis keyed by pivot index; vectors normalized to pivot 1.
struct Echelon {
  std::map<long, SparseVec> pivots;

  // Reduces v against the basis; if independent, inserts and returns true.
  bool insert(SparseVec v) {
    while (!v.empty()) {
      long lead = v.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Scalar inv = v.begin()->second.inverse();
        SparseVec norm;
        for (const auto& [k, val] : v) norm.emplace(k, val * inv);
        pivots.emplace(lead, std::move(norm));
        return true;
      }
      axpy(v, -v.begin()->second, it->second);
    }
    return false;
  }
};

}  // namespace

long algebra_closure_dimension(const std::vector<SparseMat>& generators, long cap) {
  if (generators.empty()) throw std::invalid_argument("algebra_closure_dimension: no generators");
  long dim = generators.front().dim();
  Field F = generators.front().field();
  for (const auto& g : generators)
    if (g.dim() != dim || g.field() != F)
      throw std::invalid_argument("algebra_closure_dimension: mismatched generators");
  Echelon ech;
  std::vector<SparseMat> basis;
  basis.push_back(SparseMat::identity(dim, F));
  ech.insert(flatten(basis.front()));
  // right-multiplication closure from the identity reaches every word
  for (size_t head = 0; head < basis.size(); ++head) {
    for (const auto& g : generators) {
      SparseMat prod = basis[head] * g;
      if (ech.insert(flatten(prod))) {
        basis.push_back(std::move(prod));
        if (static_cast<long>(basis.size()) > cap)
          throw exact::cap_exceeded("algebra_closure_dimension: cap exceeded");
      }
    }
  }
  return static_cast<long>(basis.size());
}

long vector_closure_dimension(const std::vector<SparseMat>& generators, long start_index,
                              long cap) {
  if (generators.empty()) throw std::invalid_argument("vector_closure_dimension: no generators");
  long dim = generators.front().dim();
  if (start_index < 0 || start_index >= dim)
    throw std::invalid_argument("vector_closure_dimension: bad start index");
  Echelon ech;
  std::vector<SparseVec> basis;
  SparseVec start;
  start.emplace(start_index, generators.front().field().one());
  ech.insert(start);
  basis.push_back(std::move(start));
  for (size_t head = 0; head < basis.size(); ++head) {
    for (const auto& g : generators) {
      // w = g * v
      SparseVec w;
      SparseVec v = basis[head];
      for (long i = 0; i < dim; ++i)
        for (const auto& [j, gv] : g.row(i)) {
          auto it = v.find(j);
          if (it == v.end()) continue;
          auto [wit, inserted] = w.emplace(i, gv * it->second);
          if (!inserted) {
            wit->second += gv * it->second;
            if (wit->second.is_zero()) w.erase(wit);
          }
        }
      if (ech.insert(w)) {
        basis.push_back(std::move(w));
        if (static_cast<long>(basis.size()) > cap)
          throw exact::cap_exceeded("vector_closure_dimension: cap exceeded");
      }
    }
  }
  return static_cast<long>(basis.size());
}

std::vector<SparseMat> char0_generator_matrices(const Space& sp) {
  if (!sp.field().is_rational())
    throw std::invalid_argument("char0_generator_matrices: rational field required");
  std::vector<SparseMat> gens;
  for (long i = 0; i + 1 < sp.n(); ++i) {
    gens.push_back(xmat(sp, Root{i, i + 1}, 1));
    gens.push_back(xmat(sp, Root{i + 1, i}, 1));
  }
  for (long i = 0; i < sp.n(); ++i) gens.push_back(bmat(sp, i, 1, 0));
  return gens;
}

bool KernelReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.vanishes; });
}

KernelReport kernel_vanishing_report(const torus::IdealDescriptor& ideal, const Space& sp) {
  if (ideal.ctx.characteristic() != sp.field().characteristic())
    throw std::invalid_argument("kernel_vanishing_report: field does not match ideal");
  if (ideal.ctx.n() != sp.n())
    throw std::invalid_argument("kernel_vanishing_report: rank mismatch");
  KernelReport report;
  for (const auto& g : ideal.generators) {
    bool ok = true;
    for (long idx = 0; idx < sp.dim() && ok; ++idx)
      ok = torus::evaluate_generator(g, sp.weight_of(idx), sp.field()).is_zero();
    report.items.push_back({g.str(), ok});
  }
  return report;
}

}  // namespace schur::tensor
