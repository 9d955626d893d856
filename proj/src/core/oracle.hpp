#ifndef ESQ_ORACLE_HPP
#define ESQ_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/squares.hpp"

namespace esq::oracle {

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Effective enumeration guard: default 3, overridable via the
/// EQUISQUARE_GUARD_N environment variable.
long guard_limit();

/// Visits every multiset arrangement of the flat n^2 cell sequence exactly
/// once, in lexicographic order. The buffer is only valid for the duration
/// of the call; visitors that retain must copy. Returns the visit count.
/// force bypasses the guard (n=4 is ~6.3e10 visits).
std::uint64_t enumerate_all(
    long n, const std::function<void(const squares::Symbol*, long)>& visitor,
    bool force = false);

struct CensusReport {
  long n = 0;
  std::uint64_t total = 0;
  std::map<long, std::uint64_t> by_x;
  std::map<long, std::uint64_t> by_y;
  std::uint64_t row_consecutive = 0;  // |R|
  std::uint64_t row_and_col = 0;      // |R ∩ C|
  std::uint64_t latin = 0;

  std::uint64_t consecutive_total() const;  // census |Sigma_n|
};

CensusReport census(long n, bool force = false);

/// Census restricted to arrangements whose first cell is `first_cell`.
/// The n partitions merge to census(n) by field-wise addition.
CensusReport census_partition(long n, squares::Symbol first_cell,
                              bool force = false);
CensusReport merge(const CensusReport& a, const CensusReport& b);

struct SubsetCounts {
  std::uint64_t r_i = 0;        // |R_i|
  std::uint64_t rc = 0;         // |R_i ∩ C_i|
  std::uint64_t rcc = 0;        // |R_i ∩ C_i ∩ C_i'|
  std::uint64_t rrcc = 0;       // |R_i ∩ R_i' ∩ C_i ∩ C_i'|
};

/// Exact subset counts for 1-based row index i, by enumeration filter.
SubsetCounts census_subsets(long n, long i, bool force = false);

/// Canonical sorted-key JSON with counts as decimal strings.
std::string to_json(const CensusReport& r);
CensusReport census_from_json(const std::string& text);

}  // namespace esq::oracle

#endif
