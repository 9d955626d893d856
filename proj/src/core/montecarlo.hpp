#ifndef ESQ_MONTECARLO_HPP
#define ESQ_MONTECARLO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/counting.hpp"

namespace esq::mc {

using counting::PmfTable;
using num::Rat;

struct SampleStats {
  long n = 0;
  std::uint64_t iterations = 0;
  std::uint64_t master_seed = 0;
  int workers = 1;
  std::map<long, std::uint64_t> counts;  // x -> tally
  double elapsed_seconds = 0.0;
};

struct TraceRow {
  std::uint64_t iteration;  // samples seen so far
  long x;
  double empirical;
};

/// Streams `iterations` uniform samples and tallies X_n. Samples are drawn
/// in fixed chunks of `chunk` with one RNG stream per chunk index, so the
/// tallies are identical for any worker count (workers only decide which
/// thread owns which chunks). If trace is non-null, one row per statistic
/// value per completed chunk is appended, in global sample order.
SampleStats run_simulation(long n, std::uint64_t iterations,
                           std::uint64_t master_seed, int workers,
                           std::vector<TraceRow>* trace = nullptr,
                           std::uint64_t chunk = 10000);

struct BandCheck {
  long x = 0;            // statistic value; the tail bucket uses its lower bound
  bool is_tail = false;  // true when this row pools all x >= this->x
  Rat empirical;
  Rat exact;
  double band_halfwidth = 0.0;
  bool within = false;
};

/// One check per PMF support point, with x >= 3 pooled into one tail
/// bucket for n in {3,4,5} (the reference display grouping). Band rule:
/// max(5*sqrt(p(1-p)/N), 0.01*p).
std::vector<BandCheck> band_check(const SampleStats& stats,
                                  const PmfTable& pmf);

struct InsufficientCells : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GofResult {
  double statistic = 0.0;
  long degrees_of_freedom = 0;
  double p_value = 1.0;
  long cells = 0;  // after pooling
};

/// Pearson goodness of fit of the tallies against the exact PMF. Support
/// points with expected count below min_expected are pooled into the tail.
GofResult chi_square_gof(const SampleStats& stats, const PmfTable& pmf,
                         double min_expected = 5.0);

/// Upper regularized incomplete gamma Q(a, x); the chi-square survival
/// function is Q(dof/2, stat/2).
double gamma_q(double a, double x);

std::string to_json(const SampleStats& stats,
                    const std::vector<BandCheck>& checks, int digits = 12);
std::string trace_csv(const std::vector<TraceRow>& trace);

}  // namespace esq::mc

#endif
