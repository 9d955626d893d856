#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/counting.hpp"
#include "core/montecarlo.hpp"
#include "core/rng.hpp"
#include "core/squares.hpp"
#include "doctest.h"

using esq::counting::PmfTable;
using esq::mc::BandCheck;
using esq::mc::SampleStats;
using esq::num::Rat;

namespace {

PmfTable order2_reference() {
  // Exact distribution of X_2 over the six arrangements: 4/6 at x=2,
  // 2/6 at x=4.
  PmfTable t;
  t.n = 2;
  t.entries = {Rat(0), Rat(0), Rat(2, 3), Rat(0), Rat(1, 3)};
  t.tail_zero_from = 5;
  return t;
}

}  // namespace

TEST_CASE("tallies are identical for every worker count") {
  const SampleStats base = esq::mc::run_simulation(3, 50000, 99, 1);
  CHECK(base.n == 3);
  CHECK(base.iterations == 50000);
  std::uint64_t total = 0;
  for (const auto& [x, c] : base.counts) {
    CHECK(x >= 0);
    CHECK(x <= 6);
    total += c;
  }
  CHECK(total == 50000);

  for (int workers : {2, 3, 8}) {
    SampleStats s = esq::mc::run_simulation(3, 50000, 99, workers);
    CHECK(s.counts == base.counts);
    CHECK(s.workers == workers);
  }
  // Iteration counts that are not a multiple of the chunk size still agree.
  SampleStats odd1 = esq::mc::run_simulation(3, 34567, 99, 1);
  SampleStats odd8 = esq::mc::run_simulation(3, 34567, 99, 8);
  CHECK(odd1.counts == odd8.counts);

  SampleStats other = esq::mc::run_simulation(3, 50000, 100, 1);
  CHECK(other.counts != base.counts);
}

TEST_CASE("report JSON is byte-identical across runs and worker counts") {
  const PmfTable pmf = esq::counting::pmf_table(3);
  SampleStats a = esq::mc::run_simulation(3, 20000, 7, 1);
  SampleStats b = esq::mc::run_simulation(3, 20000, 7, 1);
  CHECK(esq::mc::to_json(a, esq::mc::band_check(a, pmf)) ==
        esq::mc::to_json(b, esq::mc::band_check(b, pmf)));
}

TEST_CASE("order-2 runs land on the exact two-point distribution") {
  SampleStats s = esq::mc::run_simulation(2, 10000, 5, 1);
  for (const auto& [x, c] : s.counts) {
    CHECK((x == 2 || x == 4));
  }
  std::vector<BandCheck> checks = esq::mc::band_check(s, order2_reference());
  REQUIRE(checks.size() == 5);  // no tail pooling below order 3
  for (const BandCheck& bc : checks) {
    INFO("x=" << bc.x);
    CHECK(bc.within);
    CHECK_FALSE(bc.is_tail);
  }
  CHECK(checks[2].exact == Rat(2, 3));
  CHECK(checks[4].exact == Rat(1, 3));
  CHECK(std::fabs(checks[2].empirical.get_d() - 2.0 / 3.0) <
        checks[2].band_halfwidth);
}

TEST_CASE("bands hold against the closed-form distribution at order 3") {
  const PmfTable pmf = esq::counting::pmf_table(3);
  SampleStats s = esq::mc::run_simulation(3, 200000, 20240613, 4);
  std::vector<BandCheck> checks = esq::mc::band_check(s, pmf);
  REQUIRE(checks.size() == 4);  // 0, 1, 2, pooled tail
  CHECK(checks[3].is_tail);
  CHECK(checks[3].x == 3);
  CHECK(checks[3].exact == pmf.tail_sum(3));
  for (const BandCheck& bc : checks) {
    INFO("x=" << bc.x << " emp=" << bc.empirical.get_d()
              << " exact=" << bc.exact.get_d());
    CHECK(bc.within);
    CHECK(bc.band_halfwidth > 0.0);
    CHECK(bc.band_halfwidth >= 0.01 * bc.exact.get_d());
  }
}

TEST_CASE("band edge cases: zero mass and non-probability entries") {
  SampleStats s;
  s.n = 2;
  s.iterations = 100;
  s.counts = {{2, 70}, {4, 30}};

  // A zero-probability point gets a zero band; it holds only when the
  // empirical mass there is zero too.
  PmfTable ref = order2_reference();
  std::vector<BandCheck> ok = esq::mc::band_check(s, ref);
  CHECK(ok[0].band_halfwidth == 0.0);
  CHECK(ok[0].within);
  s.counts[0] = 1;
  s.counts[2] = 69;
  std::vector<BandCheck> bad = esq::mc::band_check(s, ref);
  CHECK_FALSE(bad[0].within);

  // The order-2 closed form is not a probability vector; checks against it
  // must fail finitely rather than produce NaN bands.
  std::vector<BandCheck> degenerate =
      esq::mc::band_check(s, esq::counting::pmf_table(2));
  CHECK(degenerate[1].exact == Rat(-2));
  CHECK_FALSE(degenerate[1].within);
  CHECK(degenerate[1].band_halfwidth == 0.0);
  CHECK(std::isfinite(degenerate[2].band_halfwidth));
  CHECK_FALSE(degenerate[2].within);  // exact 8/3 is unreachable
}

TEST_CASE("upper regularized gamma matches chi-square references") {
  // Survival values for (stat, dof): (3,1), (2,2), (10,5).
  CHECK(esq::mc::gamma_q(0.5, 1.5) == doctest::Approx(0.08326451666355)
                                          .epsilon(1e-12));
  CHECK(esq::mc::gamma_q(1.0, 1.0) == doctest::Approx(std::exp(-1.0))
                                          .epsilon(1e-12));
  CHECK(esq::mc::gamma_q(2.5, 5.0) == doctest::Approx(0.07523524614651)
                                          .epsilon(1e-12));
  CHECK(esq::mc::gamma_q(0.5, 0.0) == doctest::Approx(1.0));
  CHECK(esq::mc::gamma_q(3.0, 1e6) == doctest::Approx(0.0));
}

TEST_CASE("goodness of fit on hand-checked tallies") {
  // Two cells, expected (400, 200), observed (380, 220):
  // stat = 20^2/400 + 20^2/200 = 3, dof 1.
  PmfTable two;
  two.n = 1;
  two.entries = {Rat(2, 3), Rat(1, 3)};
  two.tail_zero_from = 2;
  SampleStats s;
  s.n = 1;
  s.iterations = 600;
  s.counts = {{0, 380}, {1, 220}};
  esq::mc::GofResult r = esq::mc::chi_square_gof(s, two);
  CHECK(r.cells == 2);
  CHECK(r.degrees_of_freedom == 1);
  CHECK(r.statistic == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(0.08326451666355).epsilon(1e-10));

  // Pooling: expected (5000, 3000, 1500, 500) with min_expected 600 pools
  // the last cell into the tail; observed (5100, 2900, 1500, 500) gives
  // stat = 2 + 10/3, dof 3.
  PmfTable four;
  four.n = 3;
  four.entries = {Rat(1, 2), Rat(3, 10), Rat(3, 20), Rat(1, 20)};
  four.tail_zero_from = 4;
  SampleStats t;
  t.n = 3;
  t.iterations = 10000;
  t.counts = {{0, 5100}, {1, 2900}, {2, 1500}, {3, 500}};
  esq::mc::GofResult g = esq::mc::chi_square_gof(t, four, 600.0);
  CHECK(g.cells == 4);
  CHECK(g.degrees_of_freedom == 3);
  CHECK(g.statistic == doctest::Approx(2.0 + 10.0 / 3.0).epsilon(1e-12));
  CHECK(g.p_value == doctest::Approx(0.14895400671142).epsilon(1e-10));

  // A single cell after pooling is not a test.
  PmfTable point;
  point.n = 1;
  point.entries = {Rat(1)};
  point.tail_zero_from = 1;
  SampleStats u;
  u.n = 1;
  u.iterations = 100;
  u.counts = {{0, 100}};
  CHECK_THROWS_AS(esq::mc::chi_square_gof(u, point),
                  esq::mc::InsufficientCells);
}

TEST_CASE("a biased shuffle is rejected, the fair one accepted") {
  // Mutant: Fisher-Yates drawing j from {0..i-1} instead of {0..i}, i.e.
  // never leaving position i in place. At a million samples the fit
  // against the exact distribution collapses.
  const long n = 3;
  const std::uint64_t N = 1000000;
  const PmfTable pmf = esq::counting::pmf_table(n);

  auto tally = [&](bool mutant) {
    SampleStats s;
    s.n = n;
    s.iterations = N;
    esq::rng::Xoshiro256 stream = esq::rng::make_stream(314159, 0);
    std::vector<esq::squares::Symbol> base;
    for (long v = 1; v <= n; ++v)
      for (long k = 0; k < n; ++k)
        base.push_back(static_cast<esq::squares::Symbol>(v));
    std::vector<esq::squares::Symbol> buf;
    for (std::uint64_t it = 0; it < N; ++it) {
      buf = base;
      for (std::size_t i = buf.size() - 1; i >= 1; --i) {
        const std::uint64_t j =
            mutant ? stream.bounded(static_cast<std::uint64_t>(i))
                   : stream.bounded(static_cast<std::uint64_t>(i) + 1);
        std::swap(buf[i], buf[j]);
      }
      ++s.counts[esq::squares::line_count(buf.data(), n)];
    }
    return s;
  };

  esq::mc::GofResult fair = esq::mc::chi_square_gof(tally(false), pmf);
  esq::mc::GofResult biased = esq::mc::chi_square_gof(tally(true), pmf);
  INFO("fair p=" << fair.p_value << " biased p=" << biased.p_value);
  CHECK(fair.p_value > 1e-4);
  CHECK(biased.p_value < 1e-6);
}

TEST_CASE("trace rows appear once per distribution point per chunk") {
  std::vector<esq::mc::TraceRow> trace;
  SampleStats s = esq::mc::run_simulation(3, 25000, 11, 2, &trace);
  // Chunks complete at 10000, 20000 and 25000 samples; each emits one row
  // for every x in 0..4.
  REQUIRE(trace.size() == 15);
  CHECK(trace[0].iteration == 10000);
  CHECK(trace[5].iteration == 20000);
  CHECK(trace[10].iteration == 25000);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK(trace[i].x == static_cast<long>(i % 5));
  }
  // The last block reproduces the final empirical distribution.
  for (long x = 0; x <= 4; ++x) {
    const auto it = s.counts.find(x);
    const double want =
        it == s.counts.end() ? 0.0 : static_cast<double>(it->second) / 25000.0;
    CHECK(trace[10 + x].empirical == doctest::Approx(want).epsilon(1e-15));
  }

  std::string csv = esq::mc::trace_csv(trace);
  CHECK(csv.rfind("iteration,x,empirical\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);  // header + rows
}
