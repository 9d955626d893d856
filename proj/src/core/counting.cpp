#include "core/counting.hpp"

#include <cassert>

namespace esq::counting {

using num::factorial_nonneg;
using num::FactPow;
using num::formula_term;
using num::indicator_even;

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int neg2_pow(long k) {  // (-2)^k
  Int r = pow_int(Int(2), static_cast<unsigned long>(k));
  return (k % 2 != 0) ? Int(-r) : r;
}

Rat weight(long n) {  // n!^n / n^2!
  Rat w(pow_int(factorial_nonneg(n), static_cast<unsigned long>(n)),
        factorial_nonneg(static_cast<unsigned long>(n) * n));
  w.canonicalize();
  return w;
}

// sum_{k=0}^{n-x} (-2)^k C(n-x,k) (n^2-nx-nk)! / (n-x-k)!^n
Int straight_sum(long n, long x) {
  Int s(0);
  for (long k = 0; k <= n - x; ++k) {
    s += formula_term(neg2_pow(k) * num::binomial(n - x, k),
                      {n * n - n * x - n * k}, {{n - x - k, n}});
  }
  return s;
}

}  // namespace

Int count_all(long n) {
  if (n < 1) throw std::invalid_argument("count_all: n must be >= 1");
  return formula_term(Int(1), {n * n}, {{n, n}});
}

Int count_row_consecutive(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  Int s(0);
  for (long i = 1; i <= n; ++i) {
    Int coeff = pow_int(Int(2), static_cast<unsigned long>(i));
    if (i % 2 == 0) coeff = -coeff;
    s += formula_term(coeff, {n, n * n - i * n}, {{n - i, n + 1}, {i, 1}});
  }
  return s;
}

Int count_middle_row_and_column(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return formula_term(Int(4 * indicator_even(n + 1)), {n * n - 2 * n + 1},
                      {{n - 1, 1}, {n - 2, n - 1}});
}

Int count_rc(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return formula_term(Int(2), {n * n - 2 * n + 1}, {{n - 1, 1}, {n - 2, n - 1}});
}

Int count_rcc(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return formula_term(Int(2), {n * n - 3 * n + 2}, {{n - 2, 2}, {n - 3, n - 2}});
}

Int count_rrcc(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return formula_term(Int(2), {n * n - 4 * n + 4}, {{n - 2, 2}, {n - 4, n - 2}});
}

Int count_consecutive(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  Int s(0);
  for (long i = 1; i <= n; ++i) {
    // (-2)^(i+1) C(n,i) (n^2-in)! / (n-i)!^n
    s += formula_term(neg2_pow(i + 1) * num::binomial(n, i), {n * n - i * n},
                      {{n - i, n}});
  }
  s -= formula_term(Int(4 * n), {n * n - 2 * n + 1}, {{n - 1, 1}, {n - 2, n - 1}});
  s += formula_term(Int(8 * (n / 2)), {n * n - 3 * n + 2},
                    {{n - 2, 2}, {n - 3, n - 2}});
  s -= formula_term(Int(2 * (n / 2)), {n * n - 4 * n + 4},
                    {{n - 2, 2}, {n - 4, n - 2}});
  return s;
}

Int asymptotic_sigma(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return formula_term(Int(4 * n), {n * n - n}, {{n - 1, n}});
}

Rat prob_consecutive(long n) {
  Rat p(count_consecutive(n), count_all(n));
  p.canonicalize();
  return p;
}

Rat prob_consecutive_asymptotic(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  Rat p(4 * pow_int(Int(n), static_cast<unsigned long>(n + 1)) *
            factorial_nonneg(static_cast<unsigned long>(n) * n - n),
        factorial_nonneg(static_cast<unsigned long>(n) * n));
  p.canonicalize();
  return p;
}

Rat pmf(long n, long x) {
  if (n < 2 || x < 0) throw std::invalid_argument("pmf: need n >= 2, x >= 0");
  const long even = indicator_even(n);
  const long half = n / 2;
  switch (x) {
    case 0:
      return Rat(1) - prob_consecutive(n);
    case 1: {
      Int s(0);
      for (long i = 1; i <= n; ++i) {
        s += formula_term(neg2_pow(i + 1) * n * num::binomial(n - 1, i - 1),
                          {n * n - i * n}, {{n - i, n}});
      }
      s -= formula_term(Int(8 * n), {n * n - 2 * n + 1},
                        {{n - 1, 1}, {n - 2, n - 1}});
      s += formula_term(Int(8 * (even + n + half - 1)), {n * n - 3 * n + 2},
                        {{n - 2, 2}, {n - 3, n - 2}});
      s -= formula_term(Int(9 * even + 9 * n + 2 * half - 9), {n * n - 4 * n + 4},
                        {{n - 2, 2}, {n - 4, n - 2}});
      Rat p = weight(n) * s;
      p.canonicalize();
      return p;
    }
    case 2: {
      Int s = formula_term(Int(4 * n), {n * n - 2 * n + 1},
                           {{n - 1, 1}, {n - 2, n - 1}});
      s += 8 * num::binomial(n, 2) * straight_sum(n, 2);
      Int cross = formula_term(Int(4 * (n + even - 1)), {n * n - 3 * n + 2},
                               {{n - 2, 2}, {n - 3, n - 2}}) -
                  formula_term(Int(4 * (n + even - 1)), {n * n - 4 * n + 4},
                               {{n - 2, 2}, {n - 4, n - 2}});
      s -= 3 * cross;
      Rat p = weight(n) * s;
      p.canonicalize();
      return p;
    }
    case 3: {
      Int s = 16 * num::binomial(n, 3) * straight_sum(n, 3);
      s += formula_term(Int(4 * (n + even - 1)), {n * n - 3 * n + 2},
                        {{n - 2, 2}, {n - 3, n - 2}});
      s -= formula_term(Int(4 * (n + even - 1)), {n * n - 4 * n + 4},
                        {{n - 2, 2}, {n - 4, n - 2}});
      Rat p = weight(n) * s;
      p.canonicalize();
      return p;
    }
    case 4: {
      Int s = 32 * num::binomial(n, 4) * straight_sum(n, 4);
      s += formula_term(Int(n + even - 1), {n * n - 4 * n + 4},
                        {{n - 2, 2}, {n - 4, n - 2}});
      Rat p = weight(n) * s;
      p.canonicalize();
      return p;
    }
    default: {
      if (x > n) return Rat(0);
      Int s = pow_int(Int(2), static_cast<unsigned long>(x + 1)) *
              num::binomial(n, x) * straight_sum(n, x);
      Rat p = weight(n) * s;
      p.canonicalize();
      return p;
    }
  }
}

Rat PmfTable::tail_sum(long from_x) const {
  Rat s(0);
  for (long x = from_x; x < static_cast<long>(entries.size()); ++x) {
    s += entries[x];
  }
  s.canonicalize();
  return s;
}

PmfTable pmf_table(long n) {
  PmfTable t;
  t.n = n;
  long support = std::max(n, 4L);
  Rat total(0);
  for (long x = 0; x <= support; ++x) {
    t.entries.push_back(pmf(n, x));
    total += t.entries.back();
  }
  if (total != 1) {
    throw FormulaInconsistency("pmf_table: entries do not sum to 1 at n=" +
                               std::to_string(n));
  }
  t.tail_zero_from = support + 1;
  while (t.tail_zero_from > 0 && t.entries[t.tail_zero_from - 1] == 0) {
    --t.tail_zero_from;
  }
  return t;
}

CountBreakdown breakdown(long n) {
  CountBreakdown b;
  b.n = n;
  b.omega = count_all(n);
  b.sigma = count_consecutive(n);
  b.r = count_row_consecutive(n);
  b.m_term = count_middle_row_and_column(n);
  b.rc = count_rc(n);
  b.rcc = count_rcc(n);
  b.rrcc = count_rrcc(n);
  b.s_asymptotic = LogApprox::of(asymptotic_sigma(n));
  b.prob_consecutive = prob_consecutive(n);
  return b;
}

LatinBounds latin_bounds(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  LatinBounds lb;
  lb.n = n;
  const Int pl = formula_term(Int(1), {n, n * n - n}, {{n - 1, n}});
  lb.expected_y = Rat(2 * n * pl, count_all(n));
  lb.expected_y.canonicalize();
  lb.markov_prob_bound = lb.expected_y / (2 * n);
  lb.markov_prob_bound.canonicalize();
  lb.ln_trivial_bound = LogApprox::of(pl);
  double ln_vlw = 0.0;
  for (long k = 1; k <= n; ++k) {
    ln_vlw += static_cast<double>(n) / static_cast<double>(k) *
              LogApprox::of(Int(factorial_nonneg(k))).log_value;
  }
  lb.ln_vlw_bound = {ln_vlw, 1};
  return lb;
}

std::pair<Rat, Rat> expected_consecutive_latin(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  Rat e(2 * n, factorial_nonneg(n));
  e.canonicalize();
  Rat bound(n, factorial_nonneg(n));
  bound.canonicalize();
  return {e, bound};
}

}  // namespace esq::counting
