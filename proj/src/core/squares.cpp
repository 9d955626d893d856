#include "core/squares.hpp"

#include <algorithm>
#include <sstream>

namespace esq::squares {

EnSquare::EnSquare(long n, std::vector<Symbol> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n_ < 1) throw std::invalid_argument("order must be >= 1");
  if (static_cast<long>(cells_.size()) != n_ * n_) {
    throw std::invalid_argument("expected n^2 cells");
  }
  std::vector<long> counts(n_ + 1, 0);
  for (Symbol v : cells_) {
    if (v < 1 || v > n_) {
      throw SymbolRange("cell value " + std::to_string(v) +
                        " outside 1.." + std::to_string(n_));
    }
    ++counts[v];
  }
  for (Symbol v = 1; v <= n_; ++v) {
    if (counts[v] != n_) throw MultisetViolation(v, counts[v]);
  }
}

EnSquare make_square(long n, std::vector<Symbol> cells) {
  return EnSquare(n, std::move(cells));
}

long line_count(const Symbol* cells, long n) {
  long x = 0;
  for (long i = 0; i < n; ++i) {
    const Symbol* row = cells + i * n;
    bool fwd = true, rev = true;
    for (long j = 0; j < n; ++j) {
      fwd &= row[j] == j + 1;
      rev &= row[j] == n - j;
      if (!fwd && !rev) break;
    }
    if (fwd || rev) ++x;
  }
  for (long j = 0; j < n; ++j) {
    bool fwd = true, rev = true;
    for (long i = 0; i < n; ++i) {
      Symbol v = cells[i * n + j];
      fwd &= v == i + 1;
      rev &= v == n - i;
      if (!fwd && !rev) break;
    }
    if (fwd || rev) ++x;
  }
  return x;
}

LineStatistic line_statistic(const EnSquare& s) {
  const long n = s.order();
  LineStatistic stat;
  for (long i = 0; i < n; ++i) {
    bool fwd = true, rev = true;
    for (long j = 0; j < n; ++j) {
      fwd &= s.at(i, j) == j + 1;
      rev &= s.at(i, j) == n - j;
    }
    if (fwd) {
      stat.consecutive_rows.emplace_back(i + 1, Orientation::forward);
    } else if (rev) {
      stat.consecutive_rows.emplace_back(i + 1, Orientation::reverse);
    }
  }
  for (long j = 0; j < n; ++j) {
    bool fwd = true, rev = true;
    for (long i = 0; i < n; ++i) {
      fwd &= s.at(i, j) == i + 1;
      rev &= s.at(i, j) == n - i;
    }
    if (fwd) {
      stat.consecutive_cols.emplace_back(j + 1, Orientation::forward);
    } else if (rev) {
      stat.consecutive_cols.emplace_back(j + 1, Orientation::reverse);
    }
  }
  stat.x = static_cast<long>(stat.consecutive_rows.size() +
                             stat.consecutive_cols.size());
  return stat;
}

bool is_latin(const EnSquare& s) {
  return permutation_line_count(s) == 2 * s.order();
}

long permutation_line_count(const EnSquare& s) {
  const long n = s.order();
  long y = 0;
  std::vector<bool> seen(n + 1);
  for (long i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    bool perm = true;
    for (long j = 0; j < n; ++j) {
      Symbol v = s.at(i, j);
      if (seen[v]) { perm = false; break; }
      seen[v] = true;
    }
    if (perm) ++y;
  }
  for (long j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    bool perm = true;
    for (long i = 0; i < n; ++i) {
      Symbol v = s.at(i, j);
      if (seen[v]) { perm = false; break; }
      seen[v] = true;
    }
    if (perm) ++y;
  }
  return y;
}

void shuffle_square(std::vector<Symbol>& buf, rng::Xoshiro256& stream) {
  for (std::size_t i = buf.size() - 1; i > 0; --i) {
    std::size_t j = stream.bounded(i + 1);
    std::swap(buf[i], buf[j]);
  }
}

EnSquare sample_uniform(long n, rng::Xoshiro256& stream) {
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (Symbol v = 1; v <= n; ++v) {
    cells.insert(cells.end(), n, v);
  }
  if (n > 1) shuffle_square(cells, stream);
  return EnSquare(n, std::move(cells));
}

std::string format_square(const EnSquare& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  for (long i = 0; i < s.order(); ++i) {
    for (long j = 0; j < s.order(); ++j) {
      if (j) out << ' ';
      out << s.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

EnSquare parse_square(const std::string& text) {
  std::istringstream in(text);
  long n = 0;
  if (!(in >> n) || n < 1) {
    throw std::invalid_argument("square text: bad order line");
  }
  std::vector<Symbol> cells(n * n);
  for (auto& c : cells) {
    if (!(in >> c)) throw std::invalid_argument("square text: too few cells");
  }
  return EnSquare(n, std::move(cells));
}

}  // namespace esq::squares
