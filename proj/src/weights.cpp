#include "schur/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schur::weights {

RSParams::RSParams(long n_, long r_, long s_) : n(n_), r(r_), s(s_) {
  if (n < 2) throw std::invalid_argument("RSParams: rational case requires n >= 2");
  if (r < 0 || s < 0) throw std::invalid_argument("RSParams: r, s must be nonnegative");
}

bool WeightSet::contains(const Weight& w) const {
  // members are sorted descending lexicographically
  auto it = std::lower_bound(members.begin(), members.end(), w, std::greater<Weight>());
  return it != members.end() && *it == w;
}

SignSupport sign_support(const Weight& w, long s) {
  SignSupport out;
  for (long i = 0; i < static_cast<long>(w.size()); ++i) {
    if (w[i] > 0) out.positive_positions.push_back(i);
    if (w[i] < 0) out.negative_positions.push_back(i);
    if (w[i] > s) out.above_s_positions.push_back(i);
  }
  return out;
}

long sum(const Weight& w) { return std::accumulate(w.begin(), w.end(), 0L); }

bool is_dominant(const Weight& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

static void check_length(const Weight& w, long n, const char* where) {
  if (static_cast<long>(w.size()) != n)
    throw std::invalid_argument(std::string(where) + ": weight length does not match n");
}

// Enumerates the box [lo,hi]^n in descending lexicographic order, keeping
// vectors accepted by the filter.
template <typename F>
static WeightSet enumerate_box(long n, long lo, long hi, F&& keep) {
  WeightSet out;
  Weight w(n, hi);
  if (lo > hi) return out;
  while (true) {
    if (keep(w)) out.members.push_back(w);
    long i = n - 1;
    while (i >= 0 && w[i] == lo) {
      w[i] = hi;
      --i;
    }
    if (i < 0) break;
    --w[i];
  }
  return out;
}

WeightSet enumerate_lambda(long n, long d) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_lambda: need n >= 1, d >= 0");
  return enumerate_box(n, 0, d, [d](const Weight& w) { return sum(w) == d; });
}

WeightSet enumerate_lambda_plus(long n, long d) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_lambda_plus: need n >= 1, d >= 0");
  return enumerate_box(n, 0, d,
                       [d](const Weight& w) { return sum(w) == d && is_dominant(w); });
}

// Definition-level membership: the t-decomposition of the positive and
// negative parts.
static bool in_lambda_rs(const Weight& w, const RSParams& p) {
  long pos = 0, neg = 0;
  for (long x : w) (x > 0 ? pos : neg) += x;
  long t = p.r - pos;
  return t >= 0 && t <= std::min(p.r, p.s) && neg == t - p.s;
}

WeightSet enumerate_lambda_rs(const RSParams& p) {
  return enumerate_box(p.n, -p.s, p.r, [&p](const Weight& w) { return in_lambda_rs(w, p); });
}

bool lambda_rs_condition(const Weight& w, const RSParams& p, RSCondition variant) {
  check_length(w, p.n, "lambda_rs_condition");
  if (p.n > 20) throw exact::cap_exceeded("lambda_rs_condition: subset enumeration cap");
  if (sum(w) != p.r - p.s) return false;  // condition (a)
  switch (variant) {
    case RSCondition::b:
    case RSCondition::b1:
    case RSCondition::b2: {
      // nonempty proper subsets as bitmasks, in increasing order
      for (unsigned long mask = 1; mask + 1 < (1UL << p.n); ++mask) {
        long subset_sum = 0;
        for (long i = 0; i < p.n; ++i)
          if (mask & (1UL << i)) subset_sum += w[i];
        if (variant != RSCondition::b2 && subset_sum > p.r) return false;
        if (variant != RSCondition::b1 && subset_sum < -p.s) return false;
      }
      return true;
    }
    case RSCondition::b3: {
      long pos = 0;
      for (long x : w)
        if (x > 0) pos += x;
      return pos <= p.r;
    }
    case RSCondition::b4: {
      long neg = 0;
      for (long x : w)
        if (x < 0) neg += x;
      return neg >= -p.s;
    }
  }
  throw std::logic_error("lambda_rs_condition: unreachable");
}

bool lambda_plus_rs_condition(const Weight& w, const RSParams& p, DominantRSCondition variant) {
  check_length(w, p.n, "lambda_plus_rs_condition");
  if (!is_dominant(w)) throw std::invalid_argument("lambda_plus_rs_condition: weight not dominant");
  if (sum(w) != p.r - p.s) return false;  // condition (A)
  auto prefix = [&w](long k) {
    long acc = 0;
    for (long i = 0; i < k; ++i) acc += w[i];
    return acc;
  };
  switch (variant) {
    case DominantRSCondition::B:
      for (long k = 1; k <= p.n; ++k) {
        long v = prefix(k);
        if (v < -p.s || v > p.r) return false;
      }
      return true;
    case DominantRSCondition::B1:
      for (long k = 1; k < p.n; ++k)
        if (prefix(k) > p.r) return false;
      return true;
    case DominantRSCondition::B2:
      // lower bounds on the suffix sums (the smallest subset sums of a
      // dominant weight); prefix lower bounds would hold vacuously and do
      // not cut anything
      for (long k = 1; k < p.n; ++k) {
        long suffix = (p.r - p.s) - prefix(k);
        if (suffix < -p.s) return false;
      }
      return true;
    case DominantRSCondition::B3: {
      long pos = 0;
      for (long x : w)
        if (x > 0) pos += x;  // positives form a prefix of a dominant weight
      return pos <= p.r;
    }
    case DominantRSCondition::B4: {
      long neg = 0;
      for (long x : w)
        if (x < 0) neg += x;  // negatives form a suffix
      return neg >= -p.s;
    }
  }
  throw std::logic_error("lambda_plus_rs_condition: unreachable");
}

WeightSet enumerate_lambda_plus_rs(const RSParams& p) {
  return enumerate_box(p.n, -p.s, p.r, [&p](const Weight& w) {
    return is_dominant(w) && lambda_plus_rs_condition(w, p, DominantRSCondition::B);
  });
}

bool pi_prime_membership(const Weight& w, const RSParams& p) {
  check_length(w, p.n, "pi_prime_membership");
  if (!is_dominant(w) || sum(w) != p.degree())
    throw std::invalid_argument("pi_prime_membership: weight not in Lambda+(n, r+(n-1)s)");
  for (long x : w)
    if (x < 0 || x > p.r + p.s) return false;
  return true;
}

bool pi_double_prime_membership(const Weight& w, const RSParams& p) {
  check_length(w, p.n, "pi_double_prime_membership");
  bool nonneg = std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
  if (!is_dominant(w) || !nonneg || sum(w) != p.degree())
    throw std::invalid_argument("pi_double_prime_membership: weight not in Lambda+(n, r+(n-1)s)");
  long above = 0, count = 0;
  for (long x : w)
    if (x > p.s) {
      above += x;
      ++count;
    }
  return above <= p.r + count * p.s;
}

Weight shift_bijection(const Weight& w, const RSParams& p, ShiftDirection dir) {
  check_length(w, p.n, "shift_bijection");
  Weight out = w;
  if (dir == ShiftDirection::to_pi_double_prime) {
    if (!is_dominant(w) || !lambda_plus_rs_condition(w, p, DominantRSCondition::B))
      throw std::invalid_argument("shift_bijection: source not in Lambda+(n,r,s)");
    for (long& x : out) x += p.s;
    if (!pi_double_prime_membership(out, p))
      throw std::logic_error("shift_bijection: image escaped pi''");
  } else {
    if (!pi_double_prime_membership(w, p))
      throw std::invalid_argument("shift_bijection: source not in pi''");
    for (long& x : out) x -= p.s;
    if (!lambda_plus_rs_condition(out, p, DominantRSCondition::B))
      throw std::logic_error("shift_bijection: image escaped Lambda+(n,r,s)");
  }
  return out;
}

bool dominance_geq(const Weight& a, const Weight& b) {
  if (a.size() != b.size() || sum(a) != sum(b))
    throw std::invalid_argument("dominance_geq: weights must have equal length and degree");
  long pa = 0, pb = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return true;
}

WeightSet nu_prime_set(const RSParams& p) {
  WeightSet all = enumerate_lambda_plus(p.n, p.degree());
  WeightSet out;
  for (const Weight& w : all.members)
    if (!pi_double_prime_membership(w, p)) out.members.push_back(w);
  // saturation: upward-closed under dominance within Lambda+(n, d)
  for (const Weight& mu : out.members)
    for (const Weight& kappa : all.members)
      if (dominance_geq(kappa, mu) && !out.contains(kappa))
        throw std::logic_error("nu_prime_set: saturation violated");
  return out;
}

Int weyl_dimension(const Weight& w) {
  if (!is_dominant(w)) throw std::invalid_argument("weyl_dimension: weight not dominant");
  long n = static_cast<long>(w.size());
  Int num = 1, den = 1;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int weyl_square_sum(const WeightSet& ws) {
  Int acc = 0;
  for (const Weight& w : ws.members) {
    Int d = weyl_dimension(w);
    acc += d * d;
  }
  return acc;
}

}  // namespace schur::weights
