#include <doctest.h>

#include "core/counting.hpp"
#include "core/report.hpp"

using namespace esq::counting;
using esq::num::Rat;
using esq::num::to_decimal;
using esq::num::to_scientific;

TEST_CASE("count_all") {
  CHECK(count_all(1) == 1);
  CHECK(count_all(2) == 6);
  CHECK(count_all(3) == 1680);
}

TEST_CASE("count_row_consecutive against the census oracle values") {
  // census values: 4 of the 6 E2S and 476 of the 1680 E3S have a
  // consecutive row (see test_oracle for the enumeration itself)
  CHECK(count_row_consecutive(2) == 4);
  CHECK(count_row_consecutive(3) == 476);
}

TEST_CASE("doubled leading term of |R| converges to the full count") {
  // 2|R| and |Sigma_9| agree with S(9) to the printed eight digits
  Rat ratio(count_consecutive(9), asymptotic_sigma(9));
  ratio.canonicalize();
  CHECK(to_decimal(ratio, 8) == "0.99999993");
}

TEST_CASE("middle row and column count") {
  CHECK(count_middle_row_and_column(2) == 0);
  CHECK(count_middle_row_and_column(3) == 48);
  CHECK(count_middle_row_and_column(4) == 0);
}

TEST_CASE("pairwise intersection counts") {
  CHECK(count_rc(3) == 24);
  CHECK(count_rcc(3) == 4);
  CHECK(count_rrcc(3) == 0);  // (-1)! in the denominator at power 1
  // at n=2 the (n-3)!/(n-4)! factors carry exponent n-2 = 0 and drop out
  CHECK(count_rc(2) == 2);
  CHECK(count_rcc(2) == 2);
  CHECK(count_rrcc(2) == 2);
}

TEST_CASE("consecutive square counts, small-n guard values") {
  CHECK(count_consecutive(2) == 6);
  CHECK(count_consecutive(3) == 824);
  CHECK(to_scientific(Rat(count_consecutive(5)), 3) == "6.08e+12");
}

TEST_CASE("asymptotic count S(n)") {
  CHECK(asymptotic_sigma(2) == 16);
  CHECK(asymptotic_sigma(3) == 1080);
}

TEST_CASE("exact consecutiveness probabilities") {
  CHECK(prob_consecutive(2) == 1);
  CHECK(to_decimal(prob_consecutive(4), 9) == "0.090005867");
  CHECK(to_scientific(prob_consecutive(7), 7) == "5.326071e-05");
}

TEST_CASE("asymptotic probability") {
  CHECK(prob_consecutive_asymptotic(2) == Rat(8, 3));  // above 1; reported as-is
  CHECK(prob_consecutive_asymptotic(3) == Rat(9, 14));
  for (long n = 2; n <= 50; ++n) {
    Rat cap(4 * n);
    esq::num::Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n - 1),
                  static_cast<unsigned long>(n));
    cap /= Rat(d);
    CHECK(prob_consecutive_asymptotic(n) <= cap);
  }
}

TEST_CASE("pmf reproduces the reference simulation constants") {
  // dimension 3 row, 12 printed significant digits
  CHECK(to_scientific(pmf(3, 0), 12) == "5.09523809524e-01");
  CHECK(to_scientific(pmf(3, 1), 12) == "3.57142857143e-01");
  CHECK(to_scientific(pmf(3, 2), 12) == "1.14285714286e-01");
  CHECK(to_scientific(pmf_table(3).tail_sum(3), 12) == "1.90476190476e-02");
  // dimension 4
  CHECK(to_scientific(pmf(4, 0), 12) == "9.09994132851e-01");
  CHECK(to_scientific(pmf(4, 1), 12) == "8.63048063048e-02");
  CHECK(to_scientific(pmf(4, 2), 11) == "3.6336996337e-03");
  CHECK(to_scientific(pmf_table(4).tail_sum(3), 12) == "6.73612102184e-05");
  // dimension 5
  CHECK(to_scientific(pmf(5, 0), 12) == "9.90240093585e-01");
  CHECK(to_scientific(pmf(5, 1), 12) == "9.71688511463e-03");
  CHECK(to_scientific(pmf(5, 2), 12) == "4.29497896608e-05");
  CHECK(to_scientific(pmf_table(5).tail_sum(3), 11) == "7.1510797707e-08");
}

TEST_CASE("pmf at the all-lines-consecutive point") {
  // x=n arrangements are 2^n row sign patterns plus 2^n column patterns
  Rat expected(64 * *esq::num::factorial(5) * *esq::num::factorial(5) *
                   *esq::num::factorial(5) * *esq::num::factorial(5) *
                   *esq::num::factorial(5),
               *esq::num::factorial(25));
  expected.canonicalize();
  CHECK(pmf(5, 5) == expected);
}

TEST_CASE("pmf table counts at n=3 match the enumeration") {
  const auto t = pmf_table(3);
  const esq::num::Int omega = count_all(3);
  CHECK(Rat(t.entries[0] * omega) == 856);
  CHECK(Rat(t.entries[1] * omega) == 600);
  CHECK(Rat(t.entries[2] * omega) == 192);
  CHECK(Rat(t.entries[3] * omega) == 32);
  CHECK(Rat(t.entries[4] * omega) == 0);
  CHECK(t.tail_zero_from == 4);
}

TEST_CASE("pmf normalization and consistency for n = 2..10") {
  for (long n = 2; n <= 10; ++n) {
    const auto t = pmf_table(n);  // throws FormulaInconsistency on failure
    Rat total(0);
    for (const auto& e : t.entries) total += e;
    CHECK(total == 1);
    CHECK(Rat(1) - pmf(n, 0) == prob_consecutive(n));
  }
}

TEST_CASE("pmf vanishes beyond the support") {
  for (long n = 2; n <= 9; ++n) {
    for (long x = std::max(n, 4L) + 1; x <= 2 * n + 2; ++x) {
      CHECK(pmf(n, x) == 0);
    }
  }
  // the x>4 case formula itself yields 0 as soon as x exceeds n
  CHECK(pmf(6, 5) != 0);
  CHECK(pmf(7, 6) != 0);
}

TEST_CASE("n=2 degeneracy of the distribution formula, documented") {
  // The case formulas assume n is large enough for rows i and i' to be
  // distinct. At n=2 they still sum to 1 but disagree with the true
  // distribution (census: x=2 in 4 of 6 squares, x=4 in 2 of 6).
  CHECK(pmf(2, 0) == 0);
  CHECK(pmf(2, 1) == -2);
  CHECK(pmf(2, 2) == Rat(8, 3));
  CHECK(pmf(2, 3) == 0);
  CHECK(pmf(2, 4) == Rat(1, 3));
}

TEST_CASE("consecutiveness probability decreases in n") {
  for (long n = 2; n <= 9; ++n) {
    CHECK(prob_consecutive(n + 1) < prob_consecutive(n));
  }
}

TEST_CASE("|Sigma_n|/S(n) increases toward 1") {
  Rat prev(0);
  for (long n = 2; n <= 9; ++n) {
    Rat ratio(count_consecutive(n), asymptotic_sigma(n));
    ratio.canonicalize();
    CHECK(ratio > prev);
    CHECK(ratio < 1);
    prev = ratio;
  }
}

TEST_CASE("reference table renderings") {
  using esq::report::table1_probability;
  using esq::report::table2_ratio;
  using esq::report::table2_s;
  using esq::report::table2_sigma;
  const char* t1[] = {"1", "0.49047619", "0.090005867", "0.0097599064",
                      "7.981508e-04", "5.326071e-05", "3.0083e-06"};
  for (long n = 2; n <= 8; ++n) CHECK(table1_probability(n) == t1[n - 2]);

  const char* sig[] = {"6", "824", "5.68e+06", "6.08e+12", "2.131e+21",
                       "3.9219e+32", "5.46479e+46", "7.82733e+63"};
  const char* s[] = {"16", "1080", "5.91e+06", "6.11e+12", "2.132e+21",
                     "3.9220e+32", "5.46480e+46", "7.82733e+63"};
  const char* ratio[] = {"0.375", "0.762", "0.959", "0.995",
                         "0.9996", "0.99997", "0.999998", "0.99999993"};
  for (long n = 2; n <= 9; ++n) {
    CHECK(table2_sigma(n) == sig[n - 2]);
    CHECK(table2_s(n) == s[n - 2]);
    CHECK(table2_ratio(n) == ratio[n - 2]);
  }
}

TEST_CASE("breakdown fields match the individual operations") {
  for (long n : {2L, 3L, 5L}) {
    const auto b = breakdown(n);
    CHECK(b.omega == count_all(n));
    CHECK(b.sigma == count_consecutive(n));
    CHECK(b.r == count_row_consecutive(n));
    CHECK(b.m_term == count_middle_row_and_column(n));
    CHECK(b.rc == count_rc(n));
    CHECK(b.rcc == count_rcc(n));
    CHECK(b.rrcc == count_rrcc(n));
    CHECK(b.sigma <= b.omega);
    CHECK(b.prob_consecutive == Rat(b.sigma) / Rat(b.omega));
  }
}

TEST_CASE("latin square bounds") {
  const auto lb = latin_bounds(2);
  CHECK(lb.expected_y == Rat(8, 3));
  CHECK(lb.markov_prob_bound == Rat(2, 3));
  // van Lint-Wilson bound is exactly L_2 = 2 at n=2
  CHECK(lb.ln_vlw_bound.to_double() == doctest::Approx(2.0).epsilon(1e-12));
  // the census distribution of Y_2 is {2:4, 4:2}; P(Y=4) = 1/3 <= bound
  CHECK(lb.markov_prob_bound >= Rat(1, 3));

  for (long n = 5; n <= 40; ++n) {
    const auto b = latin_bounds(n);
    CHECK(b.ln_vlw_bound.log_value <= b.ln_trivial_bound.log_value);
    CHECK(b.markov_prob_bound == b.expected_y / (2 * n));
  }
}

TEST_CASE("expected consecutive lines of a random Latin square") {
  CHECK(expected_consecutive_latin(3) == std::pair{Rat(1), Rat(1, 2)});
  CHECK(expected_consecutive_latin(2) == std::pair{Rat(2), Rat(1)});
  CHECK(expected_consecutive_latin(5) == std::pair{Rat(1, 12), Rat(1, 24)});
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(count_all(0), std::invalid_argument);
  CHECK_THROWS_AS(count_consecutive(1), std::invalid_argument);
  CHECK_THROWS_AS(pmf(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(pmf(3, -1), std::invalid_argument);
}
