#include "schur/rewrite.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace schur::rewrite {

namespace {

// Internal letter: cls 0 = positive divided power, 1 = torus binomial,
// 2 = negative divided power. idx is the root-order position (cls 0/2) or
// the axis (cls 1). exp >= 1 always; exponent-0 letters are the unit and
// are dropped at construction.
struct Letter {
  int cls;
  long idx;
  long exp;

  auto key() const { return std::pair<int, long>(cls, idx); }
  auto tie() const { return std::tuple<int, long, long>(cls, idx, exp); }
  bool operator<(const Letter& o) const { return tie() < o.tie(); }
  bool operator==(const Letter& o) const { return tie() == o.tie(); }
};

using Word = std::vector<Letter>;

// (divided-power degree, ordering inversions, length): the well-founded
// measure that every rewrite step strictly decreases.
struct Measure {
  long degree = 0;
  long inversions = 0;
  long length = 0;

  auto tie() const { return std::tie(degree, inversions, length); }
  bool operator<(const Measure& o) const { return tie() < o.tie(); }
};

Measure measure_of(const Word& w) {
  Measure m;
  m.length = static_cast<long>(w.size());
  for (const Letter& l : w)
    if (l.cls != 1) m.degree += l.exp;
  for (size_t u = 0; u < w.size(); ++u)
    for (size_t v = u + 1; v < w.size(); ++v)
      if (w[u].key() > w[v].key()) ++m.inversions;
  return m;
}

}  // namespace

std::pair<std::vector<Root>, std::vector<Root>> root_order(long n) {
  if (n < 2) throw std::invalid_argument("root_order: need n >= 2");
  std::vector<Root> pos, neg;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) pos.push_back(Root{i, j});
  for (long i = 1; i < n; ++i)
    for (long j = i - 1; j >= 0; --j) neg.push_back(Root{i, j});
  return {pos, neg};
}

bool PBWMonomial::operator==(const PBWMonomial& o) const {
  return positive_exps == o.positive_exps && torus_exps == o.torus_exps &&
         negative_exps == o.negative_exps;
}

bool PBWMonomial::operator<(const PBWMonomial& o) const {
  return std::tie(positive_exps, torus_exps, negative_exps) <
         std::tie(o.positive_exps, o.torus_exps, o.negative_exps);
}

bool PBWMonomial::is_unit() const {
  auto all0 = [](const std::vector<long>& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  };
  return all0(positive_exps) && all0(torus_exps) && all0(negative_exps);
}

Context::Context(long n, long p, long m, long step_cap)
    : n_(n),
      p_(p),
      m_(m),
      q_(1),
      step_cap_(step_cap),
      tctx_(torus::Context::frobenius(n, p, m)) {
  auto [pos, neg] = root_order(n);
  pos_ = std::move(pos);
  neg_ = std::move(neg);
  for (long i = 0; i < static_cast<long>(pos_.size()); ++i) pos_index_[pos_[i]] = i;
  for (long i = 0; i < static_cast<long>(neg_.size()); ++i) neg_index_[neg_[i]] = i;
  for (long i = 0; i < m_; ++i) q_ *= p_;
}

long Context::positive_index(Root r) const {
  auto it = pos_index_.find(r);
  if (it == pos_index_.end()) throw std::invalid_argument("positive_index: not a positive root");
  return it->second;
}

long Context::negative_index(Root r) const {
  auto it = neg_index_.find(r);
  if (it == neg_index_.end()) throw std::invalid_argument("negative_index: not a negative root");
  return it->second;
}

namespace {

struct Engine {
  Context& ctx;
  exact::Field field;
  // memoized torus expansions of binom(H_i - H_j + c, t), keyed (i,j,c,t)
  std::map<std::tuple<long, long, long, long>, std::vector<std::pair<std::vector<Letter>, Scalar>>>
      opposite_cache;

  explicit Engine(Context& c) : ctx(c), field(exact::Field::prime(c.p())) {}

  Root root_of(const Letter& l) const {
    return l.cls == 0 ? ctx.positive_roots()[l.idx] : ctx.negative_roots()[l.idx];
  }

  Letter divided_letter(Root r, long exp) const {
    if (r.positive()) return Letter{0, ctx.positive_index(r), exp};
    return Letter{2, ctx.negative_index(r), exp};
  }

  // torus letters of binom(H_i - H_j + c, t) expanded in the basis
  const std::vector<std::pair<std::vector<Letter>, Scalar>>& opposite_torus(long i, long j, long c,
                                                                            long t) {
    auto key = std::make_tuple(i, j, c, t);
    auto it = opposite_cache.find(key);
    if (it != opposite_cache.end()) return it->second;
    std::vector<long> coeffs(ctx.n(), 0);
    coeffs[i] = 1;
    coeffs[j] = -1;
    torus::Element e =
        torus::interpolate(torus::linear_form_binomial(ctx.torus_context(), coeffs, c, t));
    std::vector<std::pair<std::vector<Letter>, Scalar>> out;
    for (const auto& [mono, coeff] : e.terms()) {
      std::vector<Letter> letters;
      for (long axis = 0; axis < ctx.n(); ++axis)
        if (mono[axis] > 0) letters.push_back(Letter{1, axis, mono[axis]});
      out.emplace_back(std::move(letters), coeff);
    }
    return opposite_cache.emplace(key, std::move(out)).first->second;
  }

  // Replacements for the violating adjacent pair (L, R); each entry is the
  // replacement letter sequence with its scalar factor.
  std::vector<std::pair<std::vector<Letter>, Scalar>> resolve(const Letter& L, const Letter& R) {
    std::vector<std::pair<std::vector<Letter>, Scalar>> out;
    const long q = ctx.q();
    auto push = [&out](std::vector<Letter> ls, Scalar c) {
      if (!c.is_zero()) out.emplace_back(std::move(ls), c);
    };

    if (L.cls == 1 && R.cls == 1) {
      if (L.idx == R.idx) {
        // binomial merge on one axis; exponents >= q vanish on [0, q)
        long a = L.exp, b = R.exp;
        for (long j = 0; j <= std::min(a, b); ++j) {
          long e = a + b - j;
          if (e >= q) continue;
          Scalar coeff = field.binomial(a + b - j, a - j) * field.binomial(b, j);
          push({Letter{1, L.idx, e}}, coeff);
        }
        return out;
      }
      push({R, L}, field.one());  // distinct axes commute
      return out;
    }

    if (L.cls == R.cls && L.cls != 1 && L.idx == R.idx) {
      // equal-root divided powers merge; binom(k+l,k) = 0 mod p when k+l >= q
      long k = L.exp, l = R.exp;
      Scalar coeff = field.binomial(k + l, k);
      if (k + l >= q) {
        if (!coeff.is_zero())
          throw std::logic_error("pbw_rewrite: nonzero merge past the exponent bound");
        return out;
      }
      push({Letter{L.cls, L.idx, k + l}}, coeff);
      return out;
    }

    if (L.cls != 1 && R.cls != 1) {
      Root alpha = root_of(L), beta = root_of(R);
      long k = L.exp, l = R.exp;
      if (alpha.i == beta.j && alpha.j == beta.i) {
        // opposite roots: x_a^{(k)} x_{-a}^{(l)} =
        //   sum_t x_{-a}^{(l-t)} binom(H_alpha - k - l + 2t, t) x_a^{(k-t)}
        for (long t = 0; t <= std::min(k, l); ++t) {
          if (t == 0) {
            push({R, L}, field.one());
            continue;
          }
          for (const auto& [torus_letters, coeff] :
               opposite_torus(alpha.i, alpha.j, -k - l + 2 * t, t)) {
            std::vector<Letter> ls;
            if (l - t > 0) ls.push_back(divided_letter(-alpha, l - t));
            ls.insert(ls.end(), torus_letters.begin(), torus_letters.end());
            if (k - t > 0) ls.push_back(divided_letter(alpha, k - t));
            push(std::move(ls), coeff);
          }
        }
        return out;
      }
      Root sum;
      long sign = 0;
      if (alpha.j == beta.i && alpha.i != beta.j) {
        sum = Root{alpha.i, beta.j};
        sign = 1;
      } else if (alpha.i == beta.j && alpha.j != beta.i) {
        sum = Root{beta.i, alpha.j};
        sign = -1;
      }
      if (sign == 0) {
        push({R, L}, field.one());  // alpha+beta not a root: commute
        return out;
      }
      for (long t = 0; t <= std::min(k, l); ++t) {
        Scalar coeff = (sign < 0 && t % 2 != 0) ? -field.one() : field.one();
        std::vector<Letter> ls;
        if (l - t > 0) ls.push_back(divided_letter(beta, l - t));
        if (t > 0) ls.push_back(divided_letter(sum, t));
        if (k - t > 0) ls.push_back(divided_letter(alpha, k - t));
        push(std::move(ls), coeff);
      }
      return out;
    }

    if (L.cls == 1 && R.cls == 0) {
      // binom(H_x, a) x_alpha^{(k)} = x_alpha^{(k)} binom(H_x + delta, a);
      // delta = +k on the raised axis, -k on the lowered one
      Root alpha = root_of(R);
      long a = L.exp, k = R.exp;
      long delta = L.idx == alpha.i ? k : L.idx == alpha.j ? -k : 0;
      if (delta == 0) {
        push({R, L}, field.one());
        return out;
      }
      for (long t = 0; t <= a; ++t) {
        Scalar coeff = field.binomial(delta, a - t);
        if (coeff.is_zero()) continue;
        std::vector<Letter> ls{R};
        if (t > 0) ls.push_back(Letter{1, L.idx, t});
        push(std::move(ls), coeff);
      }
      return out;
    }

    if (L.cls == 2 && R.cls == 1) {
      // x_alpha^{(k)} binom(H_x, a) = binom(H_x + delta, a) x_alpha^{(k)};
      // delta = -k on the raised axis, +k on the lowered one
      Root alpha = root_of(L);
      long k = L.exp, a = R.exp;
      long delta = R.idx == alpha.i ? -k : R.idx == alpha.j ? k : 0;
      if (delta == 0) {
        push({R, L}, field.one());
        return out;
      }
      for (long t = 0; t <= a; ++t) {
        Scalar coeff = field.binomial(delta, a - t);
        if (coeff.is_zero()) continue;
        std::vector<Letter> ls;
        if (t > 0) ls.push_back(Letter{1, R.idx, t});
        ls.push_back(L);
        push(std::move(ls), coeff);
      }
      return out;
    }

    throw std::logic_error("pbw_rewrite: pair is not a violation");
  }
};

Word word_from_symbols(const GeneratorWord& word, const Context& ctx) {
  Word w;
  for (const GeneratorSymbol& g : word) {
    switch (g.kind) {
      case GeneratorSymbol::Kind::divided_power: {
        if (g.exp < 0 || g.exp >= ctx.q())
          throw std::invalid_argument("pbw_rewrite: exponent out of [0, q)");
        if (g.exp == 0) break;
        if (g.root.positive())
          w.push_back(Letter{0, ctx.positive_index(g.root), g.exp});
        else
          w.push_back(Letter{2, ctx.negative_index(g.root), g.exp});
        break;
      }
      case GeneratorSymbol::Kind::binomial_h: {
        if (g.axis < 0 || g.axis >= ctx.n()) throw std::invalid_argument("pbw_rewrite: bad axis");
        if (g.exp < 0 || g.exp >= ctx.q())
          throw std::invalid_argument("pbw_rewrite: exponent out of [0, q)");
        if (g.exp == 0) break;
        w.push_back(Letter{1, g.axis, g.exp});
        break;
      }
      case GeneratorSymbol::Kind::binomial_linear_form:
        throw std::invalid_argument("pbw_rewrite: linear-form letters are not word symbols");
    }
  }
  return w;
}

// leftmost adjacent pair violating the target order (strict key inversion
// or equal keys, which must merge); npos when the word is straightened
size_t find_violation(const Word& w) {
  for (size_t t = 0; t + 1 < w.size(); ++t)
    if (w[t].key() >= w[t + 1].key()) return t;
  return static_cast<size_t>(-1);
}

std::string render_word(const Word& w, const Context& ctx) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w) {
    if (!first) os << "*";
    first = false;
    if (l.cls == 1) {
      os << "binom(H" << l.idx + 1 << "," << l.exp << ")";
    } else {
      Root r = l.cls == 0 ? ctx.positive_roots()[l.idx] : ctx.negative_roots()[l.idx];
      os << "x(" << r.i + 1 << "," << r.j + 1 << ")^(" << l.exp << ")";
    }
  }
  return os.str();
}

}  // namespace

namespace {

// Straightens one word, accumulating the resulting normal words into `out`.
// `steps` is the per-call budget shared across the whole element.
void straighten(Engine& engine, Context& ctx, Word start, const Scalar& coeff0,
                std::map<Word, Scalar>& out, long& steps) {
  std::map<Word, Scalar> active;
  active.emplace(std::move(start), coeff0);
  while (!active.empty()) {
    auto node = active.extract(active.begin());
    const Word& w = node.key();
    const Scalar coeff = node.mapped();
    size_t t = find_violation(w);
    if (t == static_cast<size_t>(-1)) {
      auto [it, inserted] = out.emplace(w, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
      }
      continue;
    }
    if (++steps > ctx.step_cap())
      throw exact::cap_exceeded("pbw_rewrite: step cap exceeded at " + render_word(w, ctx));
    Measure before = measure_of(w);
    for (auto& [replacement, factor] : engine.resolve(w[t], w[t + 1])) {
      Word next;
      next.reserve(w.size() + replacement.size());
      next.insert(next.end(), w.begin(), w.begin() + t);
      next.insert(next.end(), replacement.begin(), replacement.end());
      next.insert(next.end(), w.begin() + t + 2, w.end());
      if (!(measure_of(next) < before))
        throw std::logic_error("pbw_rewrite: termination measure failed to decrease at " +
                               render_word(w, ctx));
      Scalar c = coeff * factor;
      auto [it, inserted] = active.emplace(std::move(next), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) active.erase(it);
      }
    }
  }
}

}  // namespace

NormalFormElement pbw_rewrite(const GeneratorWord& word, Context& ctx) {
  Engine engine(ctx);
  Word input = word_from_symbols(word, ctx);
  long steps = 0;

  // fold letter by letter: keeping the accumulated prefix straightened lets
  // like terms collapse before the next letter multiplies the state
  std::map<Word, Scalar> normal;
  normal.emplace(Word{}, engine.field.one());
  for (const Letter& letter : input) {
    std::map<Word, Scalar> next;
    for (const auto& [w, c] : normal) {
      Word extended = w;
      extended.push_back(letter);
      straighten(engine, ctx, std::move(extended), c, next, steps);
    }
    normal = std::move(next);
  }

  NormalFormElement nf;
  long npos = static_cast<long>(ctx.positive_roots().size());
  for (const auto& [w, c] : normal) {
    PBWMonomial m;
    m.positive_exps.assign(npos, 0);
    m.torus_exps.assign(ctx.n(), 0);
    m.negative_exps.assign(npos, 0);
    for (const Letter& l : w) {
      if (l.cls == 0) m.positive_exps[l.idx] = l.exp;
      if (l.cls == 1) m.torus_exps[l.idx] = l.exp;
      if (l.cls == 2) m.negative_exps[l.idx] = l.exp;
    }
    nf.terms.emplace(std::move(m), c);
  }
  return nf;
}

GeneratorWord to_word(const PBWMonomial& m, const Context& ctx) {
  GeneratorWord w;
  for (size_t i = 0; i < m.positive_exps.size(); ++i)
    if (m.positive_exps[i] > 0)
      w.push_back(GeneratorSymbol::divided(ctx.positive_roots()[i], m.positive_exps[i]));
  for (size_t i = 0; i < m.torus_exps.size(); ++i)
    if (m.torus_exps[i] > 0)
      w.push_back(GeneratorSymbol::binomial(static_cast<long>(i), m.torus_exps[i]));
  for (size_t i = 0; i < m.negative_exps.size(); ++i)
    if (m.negative_exps[i] > 0)
      w.push_back(GeneratorSymbol::divided(ctx.negative_roots()[i], m.negative_exps[i]));
  return w;
}

NormalFormElement nf_multiply(const NormalFormElement& a, const NormalFormElement& b,
                              Context& ctx) {
  NormalFormElement out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      GeneratorWord w = to_word(ma, ctx);
      GeneratorWord wb = to_word(mb, ctx);
      w.insert(w.end(), wb.begin(), wb.end());
      NormalFormElement prod = pbw_rewrite(w, ctx);
      Scalar c = ca * cb;
      for (const auto& [m, coeff] : prod.terms) {
        auto [it, inserted] = out.terms.emplace(m, coeff * c);
        if (!inserted) {
          it->second += coeff * c;
          if (it->second.is_zero()) out.terms.erase(it);
        }
      }
    }
  return out;
}

tensor::SparseMat word_matrix(const tensor::Space& sp, const GeneratorWord& word) {
  tensor::SparseMat m = tensor::SparseMat::identity(sp.dim(), sp.field());
  for (const GeneratorSymbol& g : word) m = m * tensor::matrix_of(sp, g);
  return m;
}

tensor::SparseMat normal_form_matrix(const tensor::Space& sp, const NormalFormElement& nf,
                                     const Context& ctx) {
  tensor::SparseMat acc = tensor::SparseMat::zero(sp.dim(), sp.field());
  for (const auto& [m, c] : nf.terms) acc = acc + word_matrix(sp, to_word(m, ctx)) * c;
  return acc;
}

bool certify_rewrite(const GeneratorWord& word, const NormalFormElement& nf,
                     const tensor::Space& sp, const Context& ctx) {
  if (sp.field().characteristic() != ctx.p())
    throw std::invalid_argument("certify_rewrite: field characteristic must match context");
  return word_matrix(sp, word) == normal_form_matrix(sp, nf, ctx);
}

std::string word_str(const GeneratorWord& word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << "*";
    os << word[i].str();
  }
  return os.str();
}

std::string normal_form_str(const NormalFormElement& nf, const Context& ctx) {
  if (nf.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : nf.terms) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    GeneratorWord w = to_word(m, ctx);
    for (const GeneratorSymbol& g : w) os << "*" << g.str();
  }
  return os.str();
}

}  // namespace schur::rewrite
