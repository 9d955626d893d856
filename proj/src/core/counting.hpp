#ifndef ESQ_COUNTING_HPP
#define ESQ_COUNTING_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "core/numerics.hpp"

namespace esq::counting {

using num::Int;
using num::LogApprox;
using num::Rat;

/// |Omega_n| = n^2! / n!^n
Int count_all(long n);

/// Squares with at least one consecutive (or reverse) row, by the
/// alternating inclusion-exclusion sum.
Int count_row_consecutive(long n);

/// Squares with a consecutive middle row and some consecutive column;
/// zero for even n.
Int count_middle_row_and_column(long n);

/// |R_i ∩ C_i|, |R_i ∩ C_i ∩ C_i'|, |R_i ∩ R_i' ∩ C_i ∩ C_i'|
/// (independent of i by symmetry).
Int count_rc(long n);
Int count_rcc(long n);
Int count_rrcc(long n);

/// Exact number of consecutive equi-n-squares (four-part formula).
Int count_consecutive(long n);

/// Leading-term approximation S(n) = 4n(n^2-n)!/(n-1)!^n (an integer).
Int asymptotic_sigma(long n);

/// Exact probability that a uniform square is consecutive.
Rat prob_consecutive(long n);

/// The asymptotic rational 4 n^(n+1) (n^2-n)! / n^2!  (may exceed 1 at
/// small n; reported as-is).
Rat prob_consecutive_asymptotic(long n);

/// PMF of the consecutive-line statistic X_n; six-case formula, negative
/// factorials vanishing. Zero for x beyond the support.
Rat pmf(long n, long x);

struct PmfTable {
  long n = 0;
  std::vector<Rat> entries;  // index x = 0 .. max(n, 4)
  long tail_zero_from = 0;   // smallest x with pmf identically 0 beyond

  Rat tail_sum(long from_x) const;  // sum of entries[x] for x >= from_x
};

struct FormulaInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Assembled table over x in {0 .. max(n,4)}. Throws FormulaInconsistency
/// if the entries fail to sum to exactly 1.
PmfTable pmf_table(long n);

struct CountBreakdown {
  long n = 0;
  Int omega, sigma, r, m_term, rc, rcc, rrcc;
  LogApprox s_asymptotic;
  Rat prob_consecutive;
};
CountBreakdown breakdown(long n);

struct LatinBounds {
  long n = 0;
  Rat expected_y;          // E(Y_n); an expectation, may exceed 1
  Rat markov_prob_bound;   // E(Y_n) / 2n
  LogApprox ln_trivial_bound;  // ln( n! (n^2-n)! / (n-1)!^n )
  LogApprox ln_vlw_bound;      // ln( prod_{k=1..n} (k!)^(n/k) )
};
LatinBounds latin_bounds(long n);

/// Expected number of consecutive lines in a random Latin square, and the
/// Markov bound on having two or more: (2n/n!, n/n!).
std::pair<Rat, Rat> expected_consecutive_latin(long n);

}  // namespace esq::counting

#endif
