#include "core/oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include <json.hpp>

namespace esq::oracle {

using squares::Symbol;

long guard_limit() {
  if (const char* env = std::getenv("EQUISQUARE_GUARD_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return v;
  }
  return 3;
}

namespace {

void check_guard(long n, bool force) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  if (!force && n > guard_limit()) {
    throw GuardExceeded("census guard: n=" + std::to_string(n) +
                        " exceeds limit " + std::to_string(guard_limit()) +
                        " (n=4 means ~6.3e10 squares; pass force to proceed)");
  }
}

std::vector<Symbol> sorted_multiset(long n) {
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (Symbol v = 1; v <= n; ++v) cells.insert(cells.end(), n, v);
  return cells;
}

void row_col_counts(const Symbol* cells, long n, long& rows, long& cols) {
  rows = cols = 0;
  for (long i = 0; i < n; ++i) {
    bool fwd = true, rev = true;
    for (long j = 0; j < n && (fwd || rev); ++j) {
      fwd &= cells[i * n + j] == j + 1;
      rev &= cells[i * n + j] == n - j;
    }
    if (fwd || rev) ++rows;
  }
  for (long j = 0; j < n; ++j) {
    bool fwd = true, rev = true;
    for (long i = 0; i < n && (fwd || rev); ++i) {
      fwd &= cells[i * n + j] == i + 1;
      rev &= cells[i * n + j] == n - i;
    }
    if (fwd || rev) ++cols;
  }
}

long perm_lines(const Symbol* cells, long n) {
  long y = 0;
  std::vector<bool> seen(n + 1);
  for (long i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    bool perm = true;
    for (long j = 0; j < n; ++j) {
      Symbol v = cells[i * n + j];
      if (seen[v]) { perm = false; break; }
      seen[v] = true;
    }
    if (perm) ++y;
  }
  for (long j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    bool perm = true;
    for (long i = 0; i < n; ++i) {
      Symbol v = cells[i * n + j];
      if (seen[v]) { perm = false; break; }
      seen[v] = true;
    }
    if (perm) ++y;
  }
  return y;
}

bool line_is(const Symbol* cells, long n, long stride, long start) {
  // forward or reverse consecutive along the given stride
  bool fwd = true, rev = true;
  for (long k = 0; k < n; ++k) {
    Symbol v = cells[start + k * stride];
    fwd &= v == k + 1;
    rev &= v == n - k;
  }
  return fwd || rev;
}

void accumulate(CensusReport& rep, const Symbol* cells, long n) {
  ++rep.total;
  long rows = 0, cols = 0;
  row_col_counts(cells, n, rows, cols);
  ++rep.by_x[rows + cols];
  long y = perm_lines(cells, n);
  ++rep.by_y[y];
  if (y == 2 * n) ++rep.latin;
  if (rows > 0) ++rep.row_consecutive;
  if (rows > 0 && cols > 0) ++rep.row_and_col;
}

}  // namespace

std::uint64_t enumerate_all(
    long n, const std::function<void(const Symbol*, long)>& visitor,
    bool force) {
  check_guard(n, force);
  std::vector<Symbol> cells = sorted_multiset(n);
  std::uint64_t count = 0;
  do {
    visitor(cells.data(), n);
    ++count;
  } while (std::next_permutation(cells.begin(), cells.end()));
  return count;
}

CensusReport census(long n, bool force) {
  CensusReport rep;
  rep.n = n;
  enumerate_all(n, [&rep](const Symbol* c, long order) {
    accumulate(rep, c, order);
  }, force);
  return rep;
}

CensusReport census_partition(long n, Symbol first_cell, bool force) {
  check_guard(n, force);
  if (first_cell < 1 || first_cell > n) {
    throw std::invalid_argument("first_cell out of range");
  }
  CensusReport rep;
  rep.n = n;
  // fix cells[0], run next_permutation over the remaining n^2-1 positions
  std::vector<Symbol> cells = sorted_multiset(n);
  auto it = std::find(cells.begin(), cells.end(), first_cell);
  std::rotate(cells.begin(), it, it + 1);
  std::sort(cells.begin() + 1, cells.end());
  do {
    accumulate(rep, cells.data(), n);
  } while (std::next_permutation(cells.begin() + 1, cells.end()));
  return rep;
}

CensusReport merge(const CensusReport& a, const CensusReport& b) {
  if (a.n != b.n) throw std::invalid_argument("merge: order mismatch");
  CensusReport r = a;
  r.total += b.total;
  for (const auto& [k, v] : b.by_x) r.by_x[k] += v;
  for (const auto& [k, v] : b.by_y) r.by_y[k] += v;
  r.row_consecutive += b.row_consecutive;
  r.row_and_col += b.row_and_col;
  r.latin += b.latin;
  return r;
}

std::uint64_t CensusReport::consecutive_total() const {
  std::uint64_t s = 0;
  for (const auto& [x, c] : by_x) {
    if (x >= 1) s += c;
  }
  return s;
}

SubsetCounts census_subsets(long n, long i, bool force) {
  if (i < 1 || i > n) throw std::invalid_argument("row index out of range");
  SubsetCounts sc;
  const long ip = n - i + 1;  // opposite index
  enumerate_all(n, [&](const Symbol* c, long) {
    bool ri = line_is(c, n, 1, (i - 1) * n);
    if (!ri) return;
    ++sc.r_i;
    bool ci = line_is(c, n, n, i - 1);
    bool cip = line_is(c, n, n, ip - 1);
    bool rip = line_is(c, n, 1, (ip - 1) * n);
    if (ci) ++sc.rc;
    if (ci && cip) ++sc.rcc;
    if (ri && rip && ci && cip) ++sc.rrcc;
  }, force);
  return sc;
}

namespace {

nlohmann::json counts_to_json(const std::map<long, std::uint64_t>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = std::to_string(v);
  return j;
}

std::map<long, std::uint64_t> counts_from_json(const nlohmann::json& j) {
  std::map<long, std::uint64_t> m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    m[std::stol(it.key())] = std::stoull(it.value().get<std::string>());
  }
  return m;
}

}  // namespace

std::string to_json(const CensusReport& r) {
  nlohmann::json j;
  j["n"] = std::to_string(r.n);
  j["total"] = std::to_string(r.total);
  j["by_x"] = counts_to_json(r.by_x);
  j["by_y"] = counts_to_json(r.by_y);
  j["row_consecutive"] = std::to_string(r.row_consecutive);
  j["row_and_col"] = std::to_string(r.row_and_col);
  j["latin"] = std::to_string(r.latin);
  return j.dump(2) + "\n";
}

CensusReport census_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CensusReport r;
  r.n = std::stol(j.at("n").get<std::string>());
  r.total = std::stoull(j.at("total").get<std::string>());
  r.by_x = counts_from_json(j.at("by_x"));
  r.by_y = counts_from_json(j.at("by_y"));
  r.row_consecutive = std::stoull(j.at("row_consecutive").get<std::string>());
  r.row_and_col = std::stoull(j.at("row_and_col").get<std::string>());
  r.latin = std::stoull(j.at("latin").get<std::string>());
  return r;
}

}  // namespace esq::oracle
