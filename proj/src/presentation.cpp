#include "schur/presentation.hpp"

#include <chrono>
#include <sstream>

#include "schur/serialize.hpp"

namespace schur::present {

using exact::Field;
using tensor::Root;
using tensor::Space;
using Family = RelationInstance::Family;

const char* label_name(Label label) {
  switch (label) {
    case Label::char0_rational: return "char0_rational";
    case Label::charp_schur: return "charp_schur";
    case Label::charp_rational: return "charp_rational";
  }
  return "?";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::c: return "c";
    case Family::d: return "d";
    case Family::e: return "e";
    case Family::f: return "f";
    case Family::g: return "g";
    case Family::h: return "h";
    case Family::serre_e: return "serre_e";
    case Family::serre_f: return "serre_f";
    case Family::c0_cartan_commute: return "cartan_commute";
    case Family::c0_ef: return "ef_commutator";
    case Family::c0_he: return "he_commutator";
    case Family::c0_hf: return "hf_commutator";
    case Family::c0_degree: return "degree";
    case Family::c0_product: return "subset_product";
    case Family::kernel_i: return "i";
    case Family::kernel_j: return "j";
    case Family::kernel_axis: return "axis";
  }
  return "?";
}

namespace {

long pow_long(long b, long e) {
  long v = 1;
  while (e-- > 0) v *= b;
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

std::string mask_str(unsigned long mask, long n) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long i = 0; i < n; ++i)
    if (mask & (1UL << i)) {
      if (!first) os << ",";
      first = false;
      os << i + 1;
    }
  os << "}";
  return os.str();
}

std::string root_str(Root r) {
  return "(" + std::to_string(r.i + 1) + "," + std::to_string(r.j + 1) + ")";
}

void check_charp_params(const Params& prm, long d) {
  if (prm.m < 1) throw std::invalid_argument("build_presentation: need m >= 1");
  Field::prime(prm.p);  // validates primality
  if (d >= pow_long(prm.p, prm.m))
    throw std::invalid_argument("build_presentation: requires d < q = p^m");
}

std::vector<Root> all_roots(long n) {
  auto [pos, neg] = rewrite::root_order(n);
  pos.insert(pos.end(), neg.begin(), neg.end());
  return pos;
}

bool is_root_sum(Root a, Root b) {
  if (a.i == b.j && a.j == b.i) return false;  // opposite
  return (a.j == b.i && a.i != b.j) || (a.i == b.j && a.j != b.i);
}

// Common machinery for the two characteristic-p presentations; shift = 0
// gives the plain generators, shift = s the primed ones.
void build_charp_families(Presentation& out, long n, long q, long m, long shift) {
  std::vector<Root> roots = all_roots(n);
  std::vector<long> ppow(m);
  for (long u = 0; u < m; ++u) ppow[u] = pow_long(out.params.p, u);

  auto rel = [&](Family f) {
    RelationInstance r;
    r.family = f;
    r.shift = shift;
    return r;
  };
  const char* prime_mark = shift != 0 ? "'" : "";

  // generators: binomials on every axis, divided powers on every root
  for (long i = 0; i < n; ++i)
    for (long a = 0; a < q; ++a) {
      if (shift == 0)
        out.generators.push_back(GeneratorSymbol::binomial(i, a));
      else {
        std::vector<long> e(n, 0);
        e[i] = 1;
        out.generators.push_back(GeneratorSymbol::linear_form(e, shift, a));
      }
    }
  for (Root alpha : roots)
    for (long k = 0; k < q; ++k)
      out.generators.push_back(GeneratorSymbol::divided(alpha, k));

  // (a): all exponent pairs on one axis
  for (long i = 0; i < n; ++i)
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) {
        RelationInstance r = rel(Family::a);
        r.i = i;
        r.a = a;
        r.b = b;
        r.label = std::string("a") + prime_mark + "[i=" + std::to_string(i + 1) +
                  ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + "]";
        out.relations.push_back(r);
      }
  // (b): all exponent pairs on one root
  for (Root alpha : roots)
    for (long k = 0; k < q; ++k)
      for (long l = 0; l < q; ++l) {
        RelationInstance r = rel(Family::b);
        r.shift = 0;
        r.alpha = alpha;
        r.a = k;
        r.b = l;
        r.label = "b[" + root_str(alpha) + ",k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                  "]";
        out.relations.push_back(r);
      }
  // (c): distinct axes, p-power exponents
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v) {
          RelationInstance r = rel(Family::c);
          r.i = i;
          r.j = j;
          r.a = ppow[u];
          r.b = ppow[v];
          r.label = std::string("c") + prime_mark + "[i=" + std::to_string(i + 1) +
                    ",j=" + std::to_string(j + 1) + ",a=" + std::to_string(r.a) +
                    ",b=" + std::to_string(r.b) + "]";
          out.relations.push_back(r);
        }
  // (d): ordered composable root pairs, p-power exponents
  for (Root alpha : roots)
    for (Root beta : roots) {
      if (!is_root_sum(alpha, beta)) continue;
      for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v) {
          RelationInstance r = rel(Family::d);
          r.shift = 0;
          r.alpha = alpha;
          r.beta = beta;
          r.a = ppow[u];
          r.b = ppow[v];
          r.label = "d[" + root_str(alpha) + "," + root_str(beta) + ",k=" + std::to_string(r.a) +
                    ",l=" + std::to_string(r.b) + "]";
          out.relations.push_back(r);
        }
    }
  // (e): opposite roots
  for (Root alpha : roots)
    for (long u = 0; u < m; ++u)
      for (long v = 0; v < m; ++v) {
        RelationInstance r = rel(Family::e);
        r.alpha = alpha;
        r.a = ppow[u];
        r.b = ppow[v];
        r.label = std::string("e") + prime_mark + "[" + root_str(alpha) +
                  ",k=" + std::to_string(r.a) + ",l=" + std::to_string(r.b) + "]";
        out.relations.push_back(r);
      }
  // (f): unordered non-composable pairs (alpha <= beta, alpha+beta not a
  // root, alpha+beta != 0); the exponent square covers both orders
  for (size_t x = 0; x < roots.size(); ++x)
    for (size_t y = x; y < roots.size(); ++y) {
      Root alpha = roots[x], beta = roots[y];
      if (alpha.i == beta.j && alpha.j == beta.i) continue;
      if (is_root_sum(alpha, beta)) continue;
      for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v) {
          RelationInstance r = rel(Family::f);
          r.shift = 0;
          r.alpha = alpha;
          r.beta = beta;
          r.a = ppow[u];
          r.b = ppow[v];
          r.label = "f[" + root_str(alpha) + "," + root_str(beta) + ",k=" + std::to_string(r.a) +
                    ",l=" + std::to_string(r.b) + "]";
          out.relations.push_back(r);
        }
    }
  // (g): binomial moved right past a divided power, every axis
  for (Root alpha : roots)
    for (long i = 0; i < n; ++i)
      for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v) {
          RelationInstance r = rel(Family::g);
          r.alpha = alpha;
          r.i = i;
          r.a = ppow[u];
          r.b = ppow[v];
          r.label = std::string("g") + prime_mark + "[" + root_str(alpha) +
                    ",i=" + std::to_string(i + 1) + ",a=" + std::to_string(r.a) +
                    ",k=" + std::to_string(r.b) + "]";
          out.relations.push_back(r);
        }
  // (h): divided power moved right past a binomial, the two root axes
  for (Root alpha : roots)
    for (long i : {alpha.i, alpha.j})
      for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v) {
          RelationInstance r = rel(Family::h);
          r.alpha = alpha;
          r.i = i;
          r.a = ppow[u];
          r.b = ppow[v];
          r.label = std::string("h") + prime_mark + "[" + root_str(alpha) +
                    ",i=" + std::to_string(i + 1) + ",a=" + std::to_string(r.a) +
                    ",k=" + std::to_string(r.b) + "]";
          out.relations.push_back(r);
        }
}

}  // namespace

Presentation build_presentation(Label label, const Params& prm) {
  Presentation out;
  out.label = label;
  out.params = prm;
  long n = prm.n;
  if (n < 1) throw std::invalid_argument("build_presentation: need n >= 1");

  switch (label) {
    case Label::char0_rational: {
      if (n < 2) throw std::invalid_argument("build_presentation: rational labels require n >= 2");
      if (prm.r < 0 || prm.s < 0) throw std::invalid_argument("build_presentation: need r,s >= 0");
      for (long i = 0; i + 1 < n; ++i)
        out.generators.push_back(GeneratorSymbol::divided(Root{i, i + 1}, 1));
      for (long i = 0; i + 1 < n; ++i)
        out.generators.push_back(GeneratorSymbol::divided(Root{i + 1, i}, 1));
      for (long i = 0; i < n; ++i) out.generators.push_back(GeneratorSymbol::binomial(i, 1));

      for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
          RelationInstance r;
          r.family = Family::c0_cartan_commute;
          r.i = i;
          r.j = j;
          r.label = "a[H" + std::to_string(i + 1) + ",H" + std::to_string(j + 1) + "]";
          out.relations.push_back(r);
        }
      for (long i = 0; i + 1 < n; ++i)
        for (long j = 0; j + 1 < n; ++j) {
          RelationInstance r;
          r.family = Family::c0_ef;
          r.i = i;
          r.j = j;
          r.label = "b[e" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) + "]";
          out.relations.push_back(r);
        }
      for (long i = 0; i < n; ++i)
        for (long j = 0; j + 1 < n; ++j) {
          RelationInstance re;
          re.family = Family::c0_he;
          re.i = i;
          re.j = j;
          re.label = "c[H" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "]";
          out.relations.push_back(re);
          RelationInstance rf;
          rf.family = Family::c0_hf;
          rf.i = i;
          rf.j = j;
          rf.label = "c[H" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) + "]";
          out.relations.push_back(rf);
        }
      {
        RelationInstance r;
        r.family = Family::c0_degree;
        r.c = -(prm.r - prm.s);
        r.label = "d[degree]";
        out.relations.push_back(r);
      }
      for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
        if (prm.half_subsets_only &&
            2 * static_cast<long>(__builtin_popcountl(mask)) > n)
          continue;
        RelationInstance r;
        r.family = Family::c0_product;
        r.smask = mask;
        r.a = -prm.r;  // factor offsets run over [-r, s]
        r.b = prm.s;
        r.label = "e[S=" + mask_str(mask, n) + "]";
        out.relations.push_back(r);
      }
      break;
    }
    case Label::charp_schur: {
      check_charp_params(prm, prm.d);
      long q = pow_long(prm.p, prm.m);
      long t = floor_log(prm.p, n);
      build_charp_families(out, n, q, prm.m, 0);
      std::vector<long> all(n, 1);
      for (long j = 0; j < prm.m + t; ++j) {
        RelationInstance r;
        r.family = Family::kernel_i;
        r.c = -prm.d;
        r.lower = pow_long(prm.p, j);
        r.label = "i[j=" + std::to_string(j) + "]";
        out.relations.push_back(r);
      }
      break;
    }
    case Label::charp_rational: {
      if (n < 2) throw std::invalid_argument("build_presentation: rational labels require n >= 2");
      if (prm.r < 0 || prm.s < 0) throw std::invalid_argument("build_presentation: need r,s >= 0");
      long d = prm.r + (n - 1) * prm.s;
      check_charp_params(prm, d);
      long q = pow_long(prm.p, prm.m);
      long t = floor_log(prm.p, n);
      build_charp_families(out, n, q, prm.m, prm.s);
      // (i'_j): binom(H'_1+...+H'_n - d, p^j) for 0 <= j <= m+t; at weight
      // level the argument is sum(lambda) - (r-s)
      for (long j = 0; j <= prm.m + t; ++j) {
        RelationInstance r;
        r.family = Family::kernel_i;
        r.shift = prm.s;
        r.c = -(prm.r - prm.s);
        r.lower = pow_long(prm.p, j);
        r.label = "i'[j=" + std::to_string(j) + "]";
        out.relations.push_back(r);
      }
      // (j_j): binom(H'_S - |S|s + s, p^j) for proper subsets; instantiated
      // for m <= j <= m+t, the range on which the images vanish
      for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask)
        for (long j = prm.m; j <= prm.m + t; ++j) {
          RelationInstance r;
          r.family = Family::kernel_j;
          r.shift = prm.s;
          r.smask = mask;
          r.c = prm.s;  // lambda_S + s
          r.lower = pow_long(prm.p, j);
          r.label = "j[S=" + mask_str(mask, n) + ",j=" + std::to_string(j) + "]";
          out.relations.push_back(r);
        }
      break;
    }
  }
  return out;
}

bool VerificationReport::overall_pass() const { return failures() == 0; }

long VerificationReport::failures() const {
  long f = 0;
  for (const auto& item : items)
    if (!item.pass) ++f;
  return f;
}

namespace {

torus::IdealDescriptor matching_ideal(const Presentation& pres) {
  torus::IdealParams ip;
  ip.n = pres.params.n;
  ip.r = pres.params.r;
  ip.s = pres.params.s;
  ip.d = pres.params.d;
  ip.p = pres.params.p;
  ip.m = pres.params.m;
  ip.half_subsets_only = pres.params.half_subsets_only;
  switch (pres.label) {
    case Label::char0_rational: return torus::build_ideal(torus::IdealKind::char0_rs, ip);
    case Label::charp_schur: return torus::build_ideal(torus::IdealKind::charp_d, ip);
    case Label::charp_rational: return torus::build_ideal(torus::IdealKind::charp_rs, ip);
  }
  throw std::logic_error("matching_ideal: unreachable");
}

}  // namespace

VerificationReport verify_presentation(const Presentation& pres) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  const Params& prm = pres.params;
  bool char0 = pres.label == Label::char0_rational;
  Field F = char0 ? Field::rationals() : Field::prime(prm.p);
  long r = pres.label == Label::charp_schur ? prm.d : prm.r;
  long s = pres.label == Label::charp_schur ? 0 : prm.s;
  Space sp(prm.n, r, s, F);

  for (const RelationInstance& rel : pres.relations) {
    bool kernel = rel.family == Family::kernel_i || rel.family == Family::kernel_j ||
                  rel.family == Family::kernel_axis;
    bool ok = tensor::verify_relation_instance(sp, rel);
    rep.items.push_back({kernel ? "kernel" : "relation", rel.label, ok, ""});
  }

  // ideal generators vanish under the representation
  torus::IdealDescriptor ideal = matching_ideal(pres);
  tensor::KernelReport kr = tensor::kernel_vanishing_report(ideal, sp);
  for (const auto& item : kr.items)
    rep.items.push_back({"kernel", item.generator, item.vanishes, ""});

  // three-way dimension agreement
  {
    long locus = torus::quotient_dimension(ideal);
    long lam;
    if (pres.label == Label::charp_schur)
      lam = static_cast<long>(weights::enumerate_lambda(prm.n, prm.d).size());
    else
      lam = static_cast<long>(
          weights::enumerate_lambda_rs(weights::RSParams(prm.n, prm.r, prm.s)).size());
    long s0 = tensor::s0_dimension(sp);
    std::ostringstream detail;
    detail << "locus=" << locus << " |Lambda|=" << lam << " s0=" << s0;
    rep.items.push_back(
        {"dimension", "quotient = |Lambda| = s0", locus == lam && lam == s0, detail.str()});
  }

  if (char0) {
    // closure dimension against the squared Weyl dimension sum (desk scale)
    if (sp.dim() <= 32) {
      weights::WeightSet dom = weights::enumerate_lambda_plus_rs(
          weights::RSParams(prm.n, prm.r, prm.s));
      exact::Int expected = weights::weyl_square_sum(dom);
      long closure = tensor::algebra_closure_dimension(tensor::char0_generator_matrices(sp));
      std::ostringstream detail;
      detail << "closure=" << closure << " sum(dim^2)=" << expected;
      rep.items.push_back(
          {"closure", "closure = sum of squared Weyl dimensions",
           exact::Int(closure) == expected, detail.str()});
    }
    // Serre relations certified as derived identities
    for (long i = 0; i + 1 < prm.n; ++i)
      for (long j = 0; j + 1 < prm.n; ++j) {
        if (i == j) continue;
        RelationInstance re;
        re.family = Family::serre_e;
        re.i = i;
        re.j = j;
        rep.items.push_back({"derived",
                             "serre_e[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 "]",
                             tensor::verify_relation_instance(sp, re), ""});
        RelationInstance rf;
        rf.family = Family::serre_f;
        rf.i = i;
        rf.j = j;
        rep.items.push_back({"derived",
                             "serre_f[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 "]",
                             tensor::verify_relation_instance(sp, rf), ""});
      }
  }

  if (pres.label == Label::charp_rational) {
    LocusComparison cmp = compare_kernel_j_ranges(prm);
    std::ostringstream detail;
    detail << "implemented range [m, m+t] reproduces the ideal locus";
    if (!cmp.shrinking_j.empty()) {
      detail << "; printed instances with j in {";
      for (size_t i = 0; i < cmp.shrinking_j.size(); ++i)
        detail << (i ? "," : "") << cmp.shrinking_j[i];
      detail << "} < m cut the locus and are excluded (their images do not vanish)";
    }
    rep.items.push_back(
        {"locus", "subset kernel family range", cmp.truncated_matches_ideal, detail.str()});
  }

  rep.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count());
  return rep;
}

LocusComparison compare_kernel_j_ranges(const Params& prm) {
  LocusComparison out;
  torus::IdealParams ip;
  ip.n = prm.n;
  ip.r = prm.r;
  ip.s = prm.s;
  ip.p = prm.p;
  ip.m = prm.m;
  torus::IdealDescriptor ideal = torus::build_ideal(torus::IdealKind::charp_rs, ip);

  // the [m, m+t] subset family together with the degree family defines the
  // ideal; recompute its locus directly from the generator list
  const Field& F = ideal.ctx.field();
  std::vector<Weight> locus;
  for (long idx = 0; idx < ideal.ctx.grid_size(); ++idx) {
    Weight pt = ideal.ctx.grid_point(idx);
    bool zero = true;
    for (const auto& g : ideal.generators)
      if (!torus::evaluate_generator(g, pt, F).is_zero()) {
        zero = false;
        break;
      }
    if (zero) locus.push_back(pt);
  }
  out.truncated_matches_ideal = locus == ideal.vanishing_locus;

  // lowering the range start below m: does any j < m instance cut the locus?
  for (long j = 0; j < prm.m; ++j) {
    long lower = pow_long(prm.p, j);
    bool shrinks = false;
    for (const Weight& pt : ideal.vanishing_locus) {
      for (unsigned long mask = 1; mask + 1 < (1UL << prm.n) && !shrinks; ++mask) {
        long arg = prm.s;
        for (long i = 0; i < prm.n; ++i)
          if (mask & (1UL << i)) arg += pt[i];
        if (exact::binomial_mod_p(arg, lower, prm.p) != 0) shrinks = true;
      }
      if (shrinks) break;
    }
    if (shrinks) out.shrinking_j.push_back(j);
  }
  return out;
}

namespace {

std::string scalar_term(long coeff, const std::string& sym) {
  if (coeff == 0) return "0";
  if (coeff == 1) return sym;
  if (coeff == -1) return "-" + sym;
  return std::to_string(coeff) + "*" + sym;
}

std::string h_sym(long axis, long shift, long exp = 1) {
  std::string base = "H" + std::string(shift != 0 ? "'" : "") + std::to_string(axis + 1);
  if (exp == 1) return base;
  return "binom(" + base + "," + std::to_string(exp) + ")";
}

std::string binom_sym(long axis, long shift, long a, long offset = 0) {
  std::ostringstream os;
  os << "binom(H" << (shift != 0 ? "'" : "") << axis + 1;
  if (offset > 0) os << "+" << offset;
  if (offset < 0) os << offset;
  os << "," << a << ")";
  return os.str();
}

std::string x_sym(Root r, long k) {
  return "x(" + std::to_string(r.i + 1) + "," + std::to_string(r.j + 1) + ")^(" +
         std::to_string(k) + ")";
}

std::string subset_arg(unsigned long mask, long n, long shift, long constant) {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < n; ++i)
    if (mask & (1UL << i)) {
      if (!first) os << "+";
      first = false;
      os << "H" << (shift != 0 ? "'" : "") << i + 1;
    }
  if (constant > 0) os << "+" << constant;
  if (constant < 0) os << constant;
  return os.str();
}

std::string render_relation(const RelationInstance& rel, const Params& prm, long n) {
  std::ostringstream os;
  switch (rel.family) {
    case Family::a:
      os << binom_sym(rel.i, rel.shift, rel.a) << "*" << binom_sym(rel.i, rel.shift, rel.b)
         << " = sum_{j=0.." << std::min(rel.a, rel.b) << "} binom(" << rel.a + rel.b
         << "-j," << rel.a << "-j)*binom(" << rel.b << ",j)*binom(H" << (rel.shift ? "'" : "")
         << rel.i + 1 << "," << rel.a + rel.b << "-j)";
      break;
    case Family::b:
      os << x_sym(rel.alpha, rel.a) << "*" << x_sym(rel.alpha, rel.b) << " = binom("
         << rel.a + rel.b << "," << rel.a << ")*" << x_sym(rel.alpha, rel.a + rel.b);
      break;
    case Family::c:
      os << binom_sym(rel.i, rel.shift, rel.a) << "*" << binom_sym(rel.j, rel.shift, rel.b)
         << " = " << binom_sym(rel.j, rel.shift, rel.b) << "*"
         << binom_sym(rel.i, rel.shift, rel.a);
      break;
    case Family::d: {
      bool minus = rel.alpha.i == rel.beta.j;
      Root sum = minus ? Root{rel.beta.i, rel.alpha.j} : Root{rel.alpha.i, rel.beta.j};
      os << x_sym(rel.alpha, rel.a) << "*" << x_sym(rel.beta, rel.b) << " = sum_{a=0.."
         << std::min(rel.a, rel.b) << "} (" << (minus ? -1 : 1) << ")^a * x("
         << rel.beta.i + 1 << "," << rel.beta.j + 1 << ")^(" << rel.b << "-a)*x(" << sum.i + 1
         << "," << sum.j + 1 << ")^(a)*x(" << rel.alpha.i + 1 << "," << rel.alpha.j + 1 << ")^("
         << rel.a << "-a)";
      break;
    }
    case Family::e:
      os << x_sym(rel.alpha, rel.a) << "*" << x_sym(-rel.alpha, rel.b) << " = sum_{a=0.."
         << std::min(rel.a, rel.b) << "} x(" << rel.alpha.j + 1 << "," << rel.alpha.i + 1
         << ")^(" << rel.b << "-a)*binom(H" << (rel.shift ? "'" : "") << rel.alpha.i + 1 << "-H"
         << (rel.shift ? "'" : "") << rel.alpha.j + 1 << -rel.a - rel.b << "+2a,a)*x("
         << rel.alpha.i + 1 << "," << rel.alpha.j + 1 << ")^(" << rel.a << "-a)";
      break;
    case Family::f:
      os << x_sym(rel.alpha, rel.a) << "*" << x_sym(rel.beta, rel.b) << " = "
         << x_sym(rel.beta, rel.b) << "*" << x_sym(rel.alpha, rel.a);
      break;
    case Family::g: {
      long delta = rel.i == rel.alpha.i ? rel.b : rel.i == rel.alpha.j ? -rel.b : 0;
      os << binom_sym(rel.i, rel.shift, rel.a) << "*" << x_sym(rel.alpha, rel.b) << " = "
         << x_sym(rel.alpha, rel.b) << "*" << binom_sym(rel.i, rel.shift, rel.a, delta);
      break;
    }
    case Family::h: {
      long delta = rel.i == rel.alpha.i ? -rel.b : rel.i == rel.alpha.j ? rel.b : 0;
      os << x_sym(rel.alpha, rel.b) << "*" << binom_sym(rel.i, rel.shift, rel.a) << " = "
         << binom_sym(rel.i, rel.shift, rel.a, delta) << "*" << x_sym(rel.alpha, rel.b);
      break;
    }
    case Family::serre_e:
    case Family::serre_f: {
      const char* sym = rel.family == Family::serre_e ? "e" : "f";
      if (std::labs(rel.i - rel.j) == 1)
        os << sym << rel.i + 1 << "^2*" << sym << rel.j + 1 << " - 2*" << sym << rel.i + 1 << "*"
           << sym << rel.j + 1 << "*" << sym << rel.i + 1 << " + " << sym << rel.j + 1 << "*"
           << sym << rel.i + 1 << "^2 = 0";
      else
        os << sym << rel.i + 1 << "*" << sym << rel.j + 1 << " = " << sym << rel.j + 1 << "*"
           << sym << rel.i + 1;
      break;
    }
    case Family::c0_cartan_commute:
      os << h_sym(rel.i, 0) << "*" << h_sym(rel.j, 0) << " = " << h_sym(rel.j, 0) << "*"
         << h_sym(rel.i, 0);
      break;
    case Family::c0_ef:
      os << "e" << rel.i + 1 << "*f" << rel.j + 1 << " - f" << rel.j + 1 << "*e" << rel.i + 1
         << " = ";
      if (rel.i == rel.j)
        os << h_sym(rel.j, 0) << " - " << h_sym(rel.j + 1, 0);
      else
        os << "0";
      break;
    case Family::c0_he: {
      long pairing = (rel.i == rel.j ? 1 : 0) - (rel.i == rel.j + 1 ? 1 : 0);
      os << h_sym(rel.i, 0) << "*e" << rel.j + 1 << " - e" << rel.j + 1 << "*" << h_sym(rel.i, 0)
         << " = " << scalar_term(pairing, "e" + std::to_string(rel.j + 1));
      break;
    }
    case Family::c0_hf: {
      long pairing = (rel.i == rel.j ? 1 : 0) - (rel.i == rel.j + 1 ? 1 : 0);
      os << h_sym(rel.i, 0) << "*f" << rel.j + 1 << " - f" << rel.j + 1 << "*" << h_sym(rel.i, 0)
         << " = " << scalar_term(-pairing, "f" + std::to_string(rel.j + 1));
      break;
    }
    case Family::c0_degree: {
      for (long i = 0; i < n; ++i) os << (i ? "+" : "") << "H" << i + 1;
      os << " = " << -rel.c;
      break;
    }
    case Family::c0_product: {
      bool first = true;
      for (long k = rel.a; k <= rel.b; ++k) {
        if (!first) os << "*";
        first = false;
        std::string arg = subset_arg(rel.smask, n, 0, k);
        if (k == 0 && __builtin_popcountl(rel.smask) == 1)
          os << arg;
        else
          os << "(" << arg << ")";
      }
      os << " = 0";
      break;
    }
    case Family::kernel_i: {
      long display_c = -(rel.shift != 0 ? prm.r + (n - 1) * prm.s : prm.d);
      os << "binom(" << subset_arg((1UL << n) - 1, n, rel.shift, display_c) << ", " << rel.lower
         << ") = 0";
      break;
    }
    case Family::kernel_j: {
      long size = __builtin_popcountl(rel.smask);
      long display_c = -size * prm.s + prm.s;
      os << "binom(" << subset_arg(rel.smask, n, rel.shift, display_c) << ", " << rel.lower
         << ") = 0";
      break;
    }
    case Family::kernel_axis: {
      os << "binom(" << subset_arg(1UL << rel.i, n, rel.shift, 0) << ", " << rel.lower
         << ") = 0";
      break;
    }
  }
  return os.str();
}

io::Json relation_json(const RelationInstance& rel, const Params& prm, long n) {
  io::Json j;
  j["family"] = family_name(rel.family);
  j["label"] = rel.label;
  switch (rel.family) {
    case Family::a:
      j["indices"] = io::Json{{"i", rel.i + 1}};
      j["exponents"] = io::Json{{"a", rel.a}, {"b", rel.b}};
      break;
    case Family::b:
    case Family::e:
      j["indices"] = io::Json{{"alpha", {rel.alpha.i + 1, rel.alpha.j + 1}}};
      j["exponents"] = io::Json{{"k", rel.a}, {"l", rel.b}};
      break;
    case Family::c:
      j["indices"] = io::Json{{"i", rel.i + 1}, {"j", rel.j + 1}};
      j["exponents"] = io::Json{{"a", rel.a}, {"b", rel.b}};
      break;
    case Family::d:
    case Family::f:
      j["indices"] = io::Json{{"alpha", {rel.alpha.i + 1, rel.alpha.j + 1}},
                              {"beta", {rel.beta.i + 1, rel.beta.j + 1}}};
      j["exponents"] = io::Json{{"k", rel.a}, {"l", rel.b}};
      break;
    case Family::g:
    case Family::h:
      j["indices"] = io::Json{{"alpha", {rel.alpha.i + 1, rel.alpha.j + 1}}, {"i", rel.i + 1}};
      j["exponents"] = io::Json{{"a", rel.a}, {"k", rel.b}};
      break;
    case Family::serre_e:
    case Family::serre_f:
    case Family::c0_ef:
    case Family::c0_he:
    case Family::c0_hf:
      j["indices"] = io::Json{{"i", rel.i + 1}, {"j", rel.j + 1}};
      break;
    case Family::c0_cartan_commute:
      j["indices"] = io::Json{{"i", rel.i + 1}, {"j", rel.j + 1}};
      break;
    case Family::c0_degree:
      j["constant"] = -rel.c;
      break;
    case Family::c0_product: {
      io::Json subset = io::Json::array();
      for (long i = 0; i < n; ++i)
        if (rel.smask & (1UL << i)) subset.push_back(i + 1);
      j["indices"] = io::Json{{"S", subset}};
      j["range"] = io::Json{{"klo", rel.a}, {"khi", rel.b}};
      break;
    }
    case Family::kernel_i:
      j["exponents"] = io::Json{{"lower", rel.lower}};
      break;
    case Family::kernel_j: {
      io::Json subset = io::Json::array();
      for (long i = 0; i < n; ++i)
        if (rel.smask & (1UL << i)) subset.push_back(i + 1);
      j["indices"] = io::Json{{"S", subset}};
      j["exponents"] = io::Json{{"lower", rel.lower}};
      break;
    }
    case Family::kernel_axis:
      j["indices"] = io::Json{{"i", rel.i + 1}};
      j["exponents"] = io::Json{{"lower", rel.lower}};
      break;
  }
  j["text"] = render_relation(rel, prm, n);
  return j;
}

}  // namespace

std::string export_presentation_json(const Presentation& pres) {
  io::Json j;
  j["label"] = label_name(pres.label);
  io::Json params;
  params["n"] = pres.params.n;
  switch (pres.label) {
    case Label::char0_rational:
      params["r"] = pres.params.r;
      params["s"] = pres.params.s;
      if (pres.params.half_subsets_only) params["half_subsets_only"] = true;
      break;
    case Label::charp_schur:
      params["d"] = pres.params.d;
      params["p"] = pres.params.p;
      params["m"] = pres.params.m;
      break;
    case Label::charp_rational:
      params["r"] = pres.params.r;
      params["s"] = pres.params.s;
      params["p"] = pres.params.p;
      params["m"] = pres.params.m;
      break;
  }
  j["params"] = params;
  io::Json gens = io::Json::array();
  for (const auto& g : pres.generators) gens.push_back(g.str());
  j["generators"] = gens;
  io::Json rels = io::Json::array();
  for (const auto& rel : pres.relations) rels.push_back(relation_json(rel, pres.params, pres.params.n));
  j["relations"] = rels;
  return j.dump(2) + "\n";
}

std::string export_presentation_text(const Presentation& pres) {
  std::ostringstream os;
  os << "presentation " << label_name(pres.label) << " (n=" << pres.params.n;
  if (pres.label == Label::charp_schur)
    os << ", d=" << pres.params.d;
  else
    os << ", r=" << pres.params.r << ", s=" << pres.params.s;
  if (pres.label != Label::char0_rational)
    os << ", p=" << pres.params.p << ", m=" << pres.params.m;
  os << ")\n\ngenerators:\n";
  for (const auto& g : pres.generators) os << "  " << g.str() << "\n";
  os << "\nrelations:\n";
  for (const auto& rel : pres.relations)
    os << "  (" << rel.label << ") " << render_relation(rel, pres.params, pres.params.n) << "\n";
  return os.str();
}

bool CounterexampleReport::separation_holds() const {
  return lambda_in_pi_prime && !lambda_in_pi_double_prime && above_s_sum > cut_bound &&
         !mu_in_lambda_rs && !mu_in_ideal_locus;
}

CounterexampleReport counterexample_report() {
  CounterexampleReport rep;
  weights::RSParams prm(4, 1, 1);
  rep.lambda_in_pi_prime = weights::pi_prime_membership(rep.lambda, prm);
  rep.lambda_in_pi_double_prime = weights::pi_double_prime_membership(rep.lambda, prm);
  weights::SignSupport supp = weights::sign_support(rep.lambda, prm.s);
  rep.above_s_count = static_cast<long>(supp.above_s_positions.size());
  rep.above_s_sum = 0;
  for (long i : supp.above_s_positions) rep.above_s_sum += rep.lambda[i];
  rep.cut_bound = prm.r + rep.above_s_count * prm.s;

  rep.violating_mask = 0b0011;  // S = {1,2}
  rep.mu_subset_sum = rep.mu[0] + rep.mu[1];
  rep.mu_in_lambda_rs = weights::enumerate_lambda_rs(prm).contains(rep.mu);

  torus::IdealParams ip;
  ip.n = 4;
  ip.r = 1;
  ip.s = 1;
  torus::IdealDescriptor ideal = torus::build_ideal(torus::IdealKind::char0_rs, ip);
  rep.mu_in_ideal_locus =
      std::find(ideal.vanishing_locus.begin(), ideal.vanishing_locus.end(), rep.mu) !=
      ideal.vanishing_locus.end();
  for (const auto& g : ideal.generators)
    if (g.kind == torus::GeneratorSpec::Kind::product_range && g.coeffs == std::vector<long>{1, 1, 0, 0}) {
      rep.generator_text = g.str();
      rep.generator_value_at_mu = torus::evaluate_generator(g, rep.mu, ideal.ctx.field()).str();
    }
  return rep;
}

}  // namespace schur::present
