#include "core/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "core/squares.hpp"

namespace esq::mc {

namespace {

std::vector<squares::Symbol> fresh_multiset(long n) {
  std::vector<squares::Symbol> cells;
  cells.reserve(n * n);
  for (squares::Symbol v = 1; v <= n; ++v) cells.insert(cells.end(), n, v);
  return cells;
}

}  // namespace

SampleStats run_simulation(long n, std::uint64_t iterations,
                           std::uint64_t master_seed, int workers,
                           std::vector<TraceRow>* trace, std::uint64_t chunk) {
  if (n < 2) throw std::invalid_argument("run_simulation: n must be >= 2");
  if (iterations < 1 || workers < 1 || chunk < 1) {
    throw std::invalid_argument("run_simulation: bad iteration/worker/chunk");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t num_chunks = (iterations + chunk - 1) / chunk;
  const long max_x = 2 * n;
  // one tally vector per chunk; chunk c always uses stream c, so the
  // result is independent of the worker count
  std::vector<std::vector<std::uint64_t>> chunk_tallies(
      num_chunks, std::vector<std::uint64_t>(max_x + 1, 0));

  auto run_chunk = [&](std::uint64_t c) {
    rng::Xoshiro256 stream = rng::make_stream(master_seed, c);
    std::vector<squares::Symbol> buf = fresh_multiset(n);
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min(begin + chunk, iterations);
    auto& tally = chunk_tallies[c];
    for (std::uint64_t s = begin; s < end; ++s) {
      squares::shuffle_square(buf, stream);
      ++tally[squares::line_count(buf.data(), n)];
    }
  };

  if (workers == 1) {
    for (std::uint64_t c = 0; c < num_chunks; ++c) run_chunk(c);
  } else {
    // fixed quotas: worker k owns a contiguous block of chunks
    const std::uint64_t per =
        (num_chunks + static_cast<std::uint64_t>(workers) - 1) / workers;
    std::vector<std::thread> pool;
    for (int k = 0; k < workers; ++k) {
      const std::uint64_t lo = k * per;
      const std::uint64_t hi = std::min(lo + per, num_chunks);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::uint64_t c = lo; c < hi; ++c) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  SampleStats stats;
  stats.n = n;
  stats.iterations = iterations;
  stats.master_seed = master_seed;
  stats.workers = workers;
  std::vector<std::uint64_t> running(max_x + 1, 0);
  for (std::uint64_t c = 0; c < num_chunks; ++c) {
    for (long x = 0; x <= max_x; ++x) running[x] += chunk_tallies[c][x];
    if (trace) {
      const std::uint64_t seen = std::min((c + 1) * chunk, iterations);
      for (long x = 0; x <= std::max(n, 4L); ++x) {
        trace->push_back({seen, x,
                          static_cast<double>(running[x]) /
                              static_cast<double>(seen)});
      }
    }
  }
  for (long x = 0; x <= max_x; ++x) {
    if (running[x] > 0) stats.counts[x] = running[x];
  }
  stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return stats;
}

namespace {

std::uint64_t count_at(const SampleStats& s, long x) {
  auto it = s.counts.find(x);
  return it == s.counts.end() ? 0 : it->second;
}

std::uint64_t count_from(const SampleStats& s, long x) {
  std::uint64_t c = 0;
  for (const auto& [k, v] : s.counts) {
    if (k >= x) c += v;
  }
  return c;
}

BandCheck make_check(long x, bool tail, std::uint64_t observed,
                     const Rat& exact, std::uint64_t n_samples) {
  BandCheck bc;
  bc.x = x;
  bc.is_tail = tail;
  bc.empirical = Rat(observed, n_samples);
  bc.empirical.canonicalize();
  bc.exact = exact;
  const double p = bc.exact.get_d();
  if (bc.exact == 0) {
    bc.band_halfwidth = 0.0;
    bc.within = bc.empirical == 0;
    return bc;
  }
  if (bc.exact < 0 || bc.exact > 1) {
    // Not a probability (the order-2 closed form degenerates); no band
    // can contain an empirical frequency.
    bc.band_halfwidth = 0.0;
    bc.within = false;
    return bc;
  }
  const double s =
      5.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples));
  bc.band_halfwidth = std::max(s, 0.01 * p);
  bc.within = std::fabs(bc.empirical.get_d() - p) <= bc.band_halfwidth;
  return bc;
}

}  // namespace

std::vector<BandCheck> band_check(const SampleStats& stats,
                                  const PmfTable& pmf) {
  if (stats.n != pmf.n) throw std::invalid_argument("band_check: order mismatch");
  std::vector<BandCheck> checks;
  const long support = static_cast<long>(pmf.entries.size()) - 1;
  const bool pool_tail = stats.n >= 3 && stats.n <= 5;
  const long upto = pool_tail ? 2 : support;
  for (long x = 0; x <= upto; ++x) {
    checks.push_back(make_check(x, false, count_at(stats, x), pmf.entries[x],
                                stats.iterations));
  }
  if (pool_tail) {
    checks.push_back(make_check(3, true, count_from(stats, 3),
                                pmf.tail_sum(3), stats.iterations));
  }
  return checks;
}

GofResult chi_square_gof(const SampleStats& stats, const PmfTable& pmf,
                         double min_expected) {
  const double N = static_cast<double>(stats.iterations);
  const long support = static_cast<long>(pmf.entries.size()) - 1;
  std::vector<std::pair<double, double>> cells;  // expected, observed
  double tail_exp = 0.0, tail_obs = 0.0;
  for (long x = 0; x <= support; ++x) {
    const double e = pmf.entries[x].get_d() * N;
    const double o = static_cast<double>(count_at(stats, x));
    if (e < min_expected) {
      tail_exp += e;
      tail_obs += o;
    } else {
      cells.emplace_back(e, o);
    }
  }
  // observed values beyond the table support belong to the tail as well
  tail_obs += static_cast<double>(count_from(stats, support + 1));
  if (tail_exp > 0.0 || tail_obs > 0.0) cells.emplace_back(tail_exp, tail_obs);
  if (cells.size() < 2) {
    throw InsufficientCells("chi_square_gof: fewer than 2 cells after pooling");
  }
  GofResult r;
  r.cells = static_cast<long>(cells.size());
  for (const auto& [e, o] : cells) {
    const double d = o - e;
    r.statistic += d * d / e;
  }
  r.degrees_of_freedom = r.cells - 1;
  r.p_value = gamma_q(0.5 * static_cast<double>(r.degrees_of_freedom),
                      0.5 * r.statistic);
  return r;
}

// Regularized incomplete gamma, series + continued fraction split at a+1.
double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q domain");
  if (x == 0.0) return 1.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    // P by series, Q = 1 - P
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Q by Lentz continued fraction
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

std::string to_json(const SampleStats& stats,
                    const std::vector<BandCheck>& checks, int digits) {
  nlohmann::json j;
  j["n"] = std::to_string(stats.n);
  j["iterations"] = std::to_string(stats.iterations);
  j["seed"] = std::to_string(stats.master_seed);
  j["workers"] = std::to_string(stats.workers);
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [x, c] : stats.counts) {
    counts[std::to_string(x)] = std::to_string(c);
  }
  j["counts"] = counts;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& bc : checks) {
    nlohmann::json c;
    c["x"] = (bc.is_tail ? ">=" : "") + std::to_string(bc.x);
    c["empirical"] = bc.empirical.get_str();
    c["empirical_decimal"] = num::to_decimal(bc.empirical, digits);
    c["exact"] = bc.exact.get_str();
    c["exact_decimal"] = num::to_decimal(bc.exact, digits);
    c["band"] = bc.band_halfwidth;
    c["within"] = bc.within;
    arr.push_back(c);
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

std::string trace_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream out;
  out << "iteration,x,empirical\n";
  out.precision(17);
  for (const auto& row : trace) {
    out << row.iteration << ',' << row.x << ',' << row.empirical << '\n';
  }
  return out.str();
}

}  // namespace esq::mc
