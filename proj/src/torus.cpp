#include "schur/torus.hpp"

#include <algorithm>
#include <sstream>

namespace schur::torus {

namespace {

constexpr long kGridGuard = 10'000'000;     // context construction cap
constexpr long kMaterializeGuard = 1'000'000;  // to_grid / interpolate cap

long checked_pow(long base, long e, long guard) {
  long v = 1;
  for (long i = 0; i < e; ++i) {
    if (v > guard / base) throw exact::cap_exceeded("grid size exceeds guard");
    v *= base;
  }
  return v;
}

long floor_log(long p, long n) {
  long t = 0, v = p;
  while (v <= n) {
    ++t;
    v *= p;
  }
  return t;
}

}  // namespace

Context::Context(long n, Field f, long m, long lo, long hi)
    : n_(n), field_(f), m_(m), lo_(lo), hi_(hi) {
  if (n < 1) throw std::invalid_argument("Context: need n >= 1");
  if (hi < lo) throw std::invalid_argument("Context: empty grid");
  checked_pow(hi - lo + 1, n, kGridGuard);
}

Context Context::char0(long n, long r, long s) {
  if (r < 0 || s < 0) throw std::invalid_argument("Context::char0: need r, s >= 0");
  return Context(n, Field::rationals(), 0, -s, r);
}

Context Context::frobenius(long n, long p, long m) {
  if (m < 1) throw std::invalid_argument("Context::frobenius: need m >= 1");
  Field f = Field::prime(p);
  long q = checked_pow(p, m, kGridGuard);
  return Context(n, f, m, 0, q - 1);
}

Context Context::frobenius_shifted(long n, long p, long m, long s) {
  if (m < 1) throw std::invalid_argument("Context::frobenius_shifted: need m >= 1");
  if (s < 0) throw std::invalid_argument("Context::frobenius_shifted: need s >= 0");
  Field f = Field::prime(p);
  long q = checked_pow(p, m, kGridGuard);
  return Context(n, f, m, -s, q - 1 - s);
}

long Context::grid_size() const { return checked_pow(basis_bound(), n_, kGridGuard); }

Weight Context::grid_point(long index) const {
  long L = basis_bound();
  Weight pt(n_);
  for (long i = n_ - 1; i >= 0; --i) {
    pt[i] = hi_ - index % L;
    index /= L;
  }
  return pt;
}

long Context::grid_index(const Weight& pt) const {
  if (static_cast<long>(pt.size()) != n_)
    throw std::invalid_argument("grid_index: wrong point length");
  long L = basis_bound(), idx = 0;
  for (long i = 0; i < n_; ++i) {
    if (pt[i] < lo_ || pt[i] > hi_) throw std::invalid_argument("grid_index: point off grid");
    idx = idx * L + (hi_ - pt[i]);
  }
  return idx;
}

bool Context::operator==(const Context& o) const {
  return n_ == o.n_ && field_ == o.field_ && m_ == o.m_ && lo_ == o.lo_ && hi_ == o.hi_;
}

void Element::add_term(const Monomial& mono, const Scalar& c) {
  if (c.characteristic() != ctx_.characteristic())
    throw std::invalid_argument("Element: coefficient field does not match the context");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (ctx_ != o.ctx_) throw std::invalid_argument("Element: mismatched contexts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator*(const Scalar& c) const {
  Element r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

bool Element::operator==(const Element& o) const {
  return ctx_ == o.ctx_ && terms_ == o.terms_;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (long i = 0; i < ctx_.n(); ++i)
      if (m[i] != 0) os << "*binom(H" << i + 1 << "," << m[i] << ")";
  }
  return os.str();
}

Element unit(const Context& ctx) {
  Element e(ctx);
  e.add_term(Monomial(ctx.n(), 0), ctx.field().one());
  return e;
}

Element binomial_monomial(const Context& ctx, long axis, long e) {
  if (axis < 0 || axis >= ctx.n()) throw std::invalid_argument("binomial_monomial: bad axis");
  if (e < 0 || e >= ctx.basis_bound())
    throw std::invalid_argument("binomial_monomial: exponent out of basis range");
  Monomial m(ctx.n(), 0);
  m[axis] = e;
  Element x(ctx);
  x.add_term(m, ctx.field().one());
  return x;
}

Element monomial_element(const Context& ctx, const Monomial& mono) {
  if (static_cast<long>(mono.size()) != ctx.n())
    throw std::invalid_argument("monomial_element: wrong length");
  for (long e : mono)
    if (e < 0 || e >= ctx.basis_bound())
      throw std::invalid_argument("monomial_element: exponent out of basis range");
  Element x(ctx);
  x.add_term(mono, ctx.field().one());
  return x;
}

bool GridFunction::operator==(const GridFunction& o) const {
  return ctx == o.ctx && values == o.values;
}

Scalar evaluate(const Element& x, const Weight& point) {
  const Context& ctx = x.context();
  if (static_cast<long>(point.size()) != ctx.n())
    throw std::invalid_argument("evaluate: wrong point length");
  Scalar acc = ctx.field().zero();
  for (const auto& [m, c] : x.terms()) {
    Scalar v = c;
    for (long i = 0; i < ctx.n(); ++i) {
      if (m[i] == 0) continue;
      v *= ctx.field().binomial(point[i], m[i]);
      if (v.is_zero()) break;
    }
    acc += v;
  }
  return acc;
}

GridFunction to_grid(const Element& x) {
  const Context& ctx = x.context();
  long size = ctx.grid_size();
  if (size > kMaterializeGuard) throw exact::cap_exceeded("to_grid: grid too large");
  GridFunction f{ctx, {}};
  f.values.reserve(size);
  for (long idx = 0; idx < size; ++idx) f.values.push_back(evaluate(x, ctx.grid_point(idx)));
  return f;
}

Element interpolate(const GridFunction& f) {
  const Context& ctx = f.ctx;
  long size = ctx.grid_size();
  if (size > kMaterializeGuard) throw exact::cap_exceeded("interpolate: grid too large");
  if (static_cast<long>(f.values.size()) != size)
    throw std::invalid_argument("interpolate: value count does not match grid");
  long n = ctx.n(), L = ctx.basis_bound();

  // coeff[idx] indexed with coordinate offset t_i = digit along axis i;
  // the grid enumeration stores coordinate hi - digit, so offset from lo is
  // (L-1) - digit. Reorder into offset-major layout first.
  std::vector<Scalar> coeff(size, ctx.field().zero());
  {
    std::vector<long> strides(n);
    long acc = 1;
    for (long i = n - 1; i >= 0; --i) {
      strides[i] = acc;
      acc *= L;
    }
    for (long idx = 0; idx < size; ++idx) {
      long rest = idx, off_idx = 0;
      for (long i = 0; i < n; ++i) {
        long digit = rest / strides[i];
        rest %= strides[i];
        off_idx += (L - 1 - digit) * strides[i];
      }
      coeff[off_idx] = f.values[idx];
    }
    // forward differences along each axis: coeff[t] becomes the mixed
    // difference Delta^t g(lo, ..., lo)
    for (long axis = 0; axis < n; ++axis) {
      long stride = strides[axis];
      for (long base = 0; base < size; ++base) {
        long digit = (base / stride) % L;
        if (digit != 0) continue;
        for (long k = 1; k < L; ++k)
          for (long j = L - 1; j >= k; --j) {
            long a = base + j * stride;
            coeff[a] = coeff[a] - coeff[a - stride];
          }
      }
    }
  }

  // g(H) = sum_t Delta^t g(lo) * prod_i binom(H_i - lo, t_i); when lo != 0
  // each factor expands as binom(H-lo, t) = sum_u binom(H,u) binom(-lo, t-u).
  Element out(ctx);
  long lo = ctx.lo();
  Monomial t(n, 0);
  for (long idx = 0; idx < size; ++idx) {
    long rest = idx;
    for (long i = n - 1; i >= 0; --i) {
      t[i] = rest % L;
      rest /= L;
    }
    const Scalar& c = coeff[idx];
    if (c.is_zero()) continue;
    if (lo == 0) {
      out.add_term(t, c);
      continue;
    }
    Monomial u(n, 0);
    // cartesian expansion over u_i <= t_i
    std::vector<long> cur(n, 0);
    while (true) {
      Scalar v = c;
      for (long i = 0; i < n && !v.is_zero(); ++i)
        if (cur[i] != t[i]) v *= ctx.field().binomial(-lo, t[i] - cur[i]);
      if (!v.is_zero()) out.add_term(cur, v);
      long i = n - 1;
      while (i >= 0 && cur[i] == t[i]) cur[i--] = 0;
      if (i < 0) break;
      ++cur[i];
    }
  }
  return out;
}

namespace {

// Componentwise binomial product expansion: pairs (exponent, coefficient)
// of binom(H,b) * binom(H,a) before any basis reduction.
std::vector<std::pair<long, Scalar>> axis_product(const Field& field, long b, long a) {
  std::vector<std::pair<long, Scalar>> out;
  long mn = std::min(a, b);
  for (long j = 0; j <= mn; ++j) {
    Scalar c = field.binomial(a + b - j, a - j) * field.binomial(b, j);
    if (!c.is_zero()) out.emplace_back(a + b - j, c);
  }
  return out;
}

Element reduce_to_basis(Element e) {
  const long bound = e.context().basis_bound();
  bool ok = true;
  for (const auto& [m, c] : e.terms()) {
    (void)c;
    for (long x : m)
      if (x >= bound) {
        ok = false;
        break;
      }
    if (!ok) break;
  }
  if (ok) return e;
  return interpolate(to_grid(e));
}

}  // namespace

Element multiply(const Element& x, const Element& y) {
  const Context& ctx = x.context();
  if (ctx != y.context()) throw std::invalid_argument("multiply: mismatched contexts");
  Element acc(ctx);
  long n = ctx.n();
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      // expand per axis, then take the cartesian product of the expansions
      std::vector<std::vector<std::pair<long, Scalar>>> per_axis(n);
      for (long i = 0; i < n; ++i) per_axis[i] = axis_product(ctx.field(), mx[i], my[i]);
      std::vector<size_t> pick(n, 0);
      bool empty = std::any_of(per_axis.begin(), per_axis.end(),
                               [](const auto& v) { return v.empty(); });
      if (empty) continue;
      while (true) {
        Monomial m(n);
        Scalar c = cx * cy;
        for (long i = 0; i < n && !c.is_zero(); ++i) {
          m[i] = per_axis[i][pick[i]].first;
          c *= per_axis[i][pick[i]].second;
        }
        acc.add_term(m, c);
        long i = n - 1;
        while (i >= 0 && ++pick[i] == per_axis[i].size()) pick[i--] = 0;
        if (i < 0) break;
      }
    }
  return reduce_to_basis(std::move(acc));
}

Element idempotent_h(const Context& ctx, const Monomial& b) {
  if (ctx.characteristic() == 0)
    throw std::invalid_argument("idempotent_h: requires characteristic p");
  if (static_cast<long>(b.size()) != ctx.n()) throw std::invalid_argument("idempotent_h: bad b");
  long q = ctx.basis_bound();
  for (long x : b)
    if (x < 0 || x >= q) throw std::invalid_argument("idempotent_h: exponent out of range");
  const Field& F = ctx.field();
  Element out(ctx);
  long n = ctx.n();
  Monomial k = b;
  while (true) {
    Scalar c = F.one();
    for (long i = 0; i < n && !c.is_zero(); ++i) {
      Scalar f = F.binomial(k[i], b[i]);
      if ((k[i] - b[i]) % 2 != 0) f = -f;
      c *= f;
    }
    out.add_term(k, c);
    long i = n - 1;
    while (i >= 0) {
      if (++k[i] < q) break;
      k[i] = b[i];
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

Element shifted_binomial(const Context& ctx, long axis, long c, long j) {
  if (j < 0) throw std::invalid_argument("shifted_binomial: need j >= 0");
  if (axis < 0 || axis >= ctx.n()) throw std::invalid_argument("shifted_binomial: bad axis");
  Element out(ctx);
  for (long t = 0; t <= j; ++t) {
    Scalar coeff = ctx.field().binomial(c, j - t);
    if (coeff.is_zero()) continue;
    Monomial m(ctx.n(), 0);
    m[axis] = t;
    out.add_term(m, coeff);
  }
  return reduce_to_basis(std::move(out));
}

Element sigma_shift(const Element& x, long s) {
  const Context& ctx = x.context();
  if (ctx.characteristic() == 0)
    throw std::invalid_argument("sigma_shift: requires characteristic p");
  if (s < 0) throw std::invalid_argument("sigma_shift: need s >= 0");
  long n = ctx.n();
  Element out(ctx);
  for (const auto& [m, c] : x.terms()) {
    // prod_i binom(H_i + s, m_i) -> cartesian product of shift expansions
    Monomial u(n, 0);
    while (true) {
      Scalar v = c;
      for (long i = 0; i < n && !v.is_zero(); ++i)
        if (u[i] != m[i]) v *= ctx.field().binomial(s, m[i] - u[i]);
      out.add_term(u, v);
      long i = n - 1;
      while (i >= 0 && u[i] == m[i]) u[i--] = 0;
      if (i < 0) break;
      ++u[i];
    }
  }
  return out;
}

std::string GeneratorSpec::str() const {
  std::ostringstream arg;
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) arg << (coeffs[i] > 0 ? "+" : "-");
    else if (coeffs[i] < 0) arg << "-";
    first = false;
    if (std::abs(coeffs[i]) != 1) arg << std::abs(coeffs[i]) << "*";
    arg << "H" << i + 1;
  }
  if (first) arg << "0";
  std::ostringstream os;
  switch (kind) {
    case Kind::linear:
      os << arg.str();
      if (c > 0) os << "+" << c;
      if (c < 0) os << c;
      break;
    case Kind::product_range: {
      long terms = 0;
      for (long x : coeffs)
        if (x != 0) ++terms;
      for (long k = klo; k <= khi; ++k) {
        long off = c + k;
        if (off == 0 && terms <= 1)
          os << arg.str();
        else if (off == 0)
          os << "(" << arg.str() << ")";
        else
          os << "(" << arg.str() << (off > 0 ? "+" : "") << off << ")";
        if (k < khi) os << "*";
      }
      break;
    }
    case Kind::binomial:
      os << "binom(" << arg.str();
      if (c > 0) os << "+" << c;
      if (c < 0) os << c;
      os << ", " << lower << ")";
      break;
  }
  return os.str();
}

Scalar evaluate_generator(const GeneratorSpec& g, const Weight& point, const Field& field) {
  if (g.coeffs.size() != point.size())
    throw std::invalid_argument("evaluate_generator: length mismatch");
  long arg = g.c;
  for (size_t i = 0; i < point.size(); ++i) arg += g.coeffs[i] * point[i];
  switch (g.kind) {
    case GeneratorSpec::Kind::linear:
      return field.from_long(arg);
    case GeneratorSpec::Kind::product_range: {
      Int v = 1;
      for (long k = g.klo; k <= g.khi && v != 0; ++k) v *= arg + k;
      return field.from_int(v);
    }
    case GeneratorSpec::Kind::binomial:
      return field.binomial(arg, g.lower);
  }
  throw std::logic_error("evaluate_generator: unreachable");
}

GridFunction linear_form_binomial(const Context& ctx, const std::vector<long>& coeffs, long c,
                                  long lower) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::binomial;
  g.coeffs = coeffs;
  g.c = c;
  g.lower = lower;
  long size = ctx.grid_size();
  if (size > kMaterializeGuard) throw exact::cap_exceeded("linear_form_binomial: grid too large");
  GridFunction f{ctx, {}};
  f.values.reserve(size);
  for (long idx = 0; idx < size; ++idx)
    f.values.push_back(evaluate_generator(g, ctx.grid_point(idx), ctx.field()));
  return f;
}

namespace {

std::vector<long> subset_coeffs(long n, unsigned long mask) {
  std::vector<long> c(n, 0);
  for (long i = 0; i < n; ++i)
    if (mask & (1UL << i)) c[i] = 1;
  return c;
}

GeneratorSpec binomial_gen(std::vector<long> coeffs, long c, long lower) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::binomial;
  g.coeffs = std::move(coeffs);
  g.c = c;
  g.lower = lower;
  return g;
}

long pow_long(long b, long e) {
  long v = 1;
  while (e-- > 0) v *= b;
  return v;
}

}  // namespace

IdealDescriptor build_ideal(IdealKind kind, const IdealParams& prm) {
  long n = prm.n;
  if (n < 1) throw std::invalid_argument("build_ideal: need n >= 1");
  std::vector<GeneratorSpec> gens;
  std::optional<Context> ctx;
  // next_j holds the j = m+t+1 instances used to assert the truncation
  std::vector<GeneratorSpec> next_j;

  auto subsets_of = [&](bool half_only) {
    std::vector<unsigned long> masks;
    for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
      if (half_only && 2 * static_cast<long>(__builtin_popcountl(mask)) > n) continue;
      masks.push_back(mask);
    }
    return masks;
  };

  switch (kind) {
    case IdealKind::char0_rs: {
      if (n < 2) throw std::invalid_argument("build_ideal: rational kinds require n >= 2");
      if (prm.r < 0 || prm.s < 0) throw std::invalid_argument("build_ideal: need r, s >= 0");
      ctx = Context::char0(n, prm.r, prm.s);
      GeneratorSpec deg;
      deg.kind = GeneratorSpec::Kind::linear;
      deg.coeffs.assign(n, 1);
      deg.c = -(prm.r - prm.s);
      gens.push_back(deg);
      for (unsigned long mask : subsets_of(prm.half_subsets_only)) {
        GeneratorSpec g;
        g.kind = GeneratorSpec::Kind::product_range;
        g.coeffs = subset_coeffs(n, mask);
        g.c = 0;
        g.klo = -prm.r;
        g.khi = prm.s;
        gens.push_back(g);
      }
      break;
    }
    case IdealKind::charp_d: {
      if (prm.d < 0) throw std::invalid_argument("build_ideal: need d >= 0");
      ctx = Context::frobenius(n, prm.p, prm.m);
      long q = pow_long(prm.p, prm.m);
      if (prm.d >= q) throw std::invalid_argument("build_ideal: requires d < q = p^m");
      long t = floor_log(prm.p, n);
      for (long i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        for (long j = prm.m; j <= prm.m + t; ++j)
          gens.push_back(binomial_gen(e, 0, pow_long(prm.p, j)));
        next_j.push_back(binomial_gen(e, 0, pow_long(prm.p, prm.m + t + 1)));
      }
      std::vector<long> all(n, 1);
      for (long j = 0; j <= prm.m + t; ++j)
        gens.push_back(binomial_gen(all, -prm.d, pow_long(prm.p, j)));
      next_j.push_back(binomial_gen(all, -prm.d, pow_long(prm.p, prm.m + t + 1)));
      break;
    }
    case IdealKind::charp_rs: {
      if (n < 2) throw std::invalid_argument("build_ideal: rational kinds require n >= 2");
      if (prm.r < 0 || prm.s < 0) throw std::invalid_argument("build_ideal: need r, s >= 0");
      long d = prm.r + (n - 1) * prm.s;
      ctx = Context::frobenius_shifted(n, prm.p, prm.m, prm.s);
      long q = pow_long(prm.p, prm.m);
      if (d >= q) throw std::invalid_argument("build_ideal: requires d < q = p^m");
      long t = floor_log(prm.p, n);
      std::vector<long> all(n, 1);
      for (long j = 0; j <= prm.m + t; ++j)
        gens.push_back(binomial_gen(all, -(prm.r - prm.s), pow_long(prm.p, j)));
      next_j.push_back(binomial_gen(all, -(prm.r - prm.s), pow_long(prm.p, prm.m + t + 1)));
      for (unsigned long mask : subsets_of(false)) {
        auto coeffs = subset_coeffs(n, mask);
        for (long j = prm.m; j <= prm.m + t; ++j)
          gens.push_back(binomial_gen(coeffs, prm.s, pow_long(prm.p, j)));
        next_j.push_back(binomial_gen(coeffs, prm.s, pow_long(prm.p, prm.m + t + 1)));
      }
      break;
    }
  }

  IdealDescriptor ideal{kind, *ctx, std::move(gens), {}};
  const Field& F = ideal.ctx.field();
  long size = ideal.ctx.grid_size();
  for (long idx = 0; idx < size; ++idx) {
    Weight pt = ideal.ctx.grid_point(idx);
    bool zero = true;
    for (const GeneratorSpec& g : ideal.generators)
      if (!evaluate_generator(g, pt, F).is_zero()) {
        zero = false;
        break;
      }
    if (zero) ideal.vanishing_locus.push_back(std::move(pt));
  }

  // the truncated j-families impose all constraints: the next instance in
  // each family must already vanish on the computed locus
  for (const GeneratorSpec& g : next_j)
    for (const Weight& pt : ideal.vanishing_locus)
      if (!evaluate_generator(g, pt, F).is_zero())
        throw std::logic_error("build_ideal: truncated generator family is not saturated at " +
                               g.str());
  return ideal;
}

long quotient_dimension(const IdealDescriptor& ideal) {
  return static_cast<long>(ideal.vanishing_locus.size());
}

GridFunction generator_grid(const IdealDescriptor& ideal, size_t gen_index) {
  if (gen_index >= ideal.generators.size())
    throw std::invalid_argument("generator_grid: index out of range");
  const Context& ctx = ideal.ctx;
  long size = ctx.grid_size();
  if (size > kMaterializeGuard) throw exact::cap_exceeded("generator_grid: grid too large");
  GridFunction f{ctx, {}};
  f.values.reserve(size);
  for (long idx = 0; idx < size; ++idx)
    f.values.push_back(evaluate_generator(ideal.generators[gen_index], ctx.grid_point(idx),
                                          ctx.field()));
  return f;
}

}  // namespace schur::torus
