#ifndef ESQ_SQUARES_HPP
#define ESQ_SQUARES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/rng.hpp"

namespace esq::squares {

using Symbol = std::int32_t;

struct MultisetViolation : std::invalid_argument {
  Symbol symbol;
  long count;
  MultisetViolation(Symbol s, long c)
      : std::invalid_argument("symbol " + std::to_string(s) + " occurs " +
                              std::to_string(c) + " times"),
        symbol(s),
        count(c) {}
};

struct SymbolRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An n-by-n array over the multiset {1..n, each n times}, row-major.
/// Immutable after construction.
class EnSquare {
 public:
  EnSquare(long n, std::vector<Symbol> cells);

  long order() const { return n_; }
  Symbol at(long row, long col) const { return cells_[row * n_ + col]; }
  const std::vector<Symbol>& cells() const { return cells_; }

 private:
  long n_;
  std::vector<Symbol> cells_;
};

EnSquare make_square(long n, std::vector<Symbol> cells);

enum class Orientation { forward, reverse };

struct LineStatistic {
  long x = 0;
  std::vector<std::pair<long, Orientation>> consecutive_rows;  // 1-based index
  std::vector<std::pair<long, Orientation>> consecutive_cols;
};

/// Counts rows/columns equal to (1..n) or (n..1). For n=1 the single cell
/// counts as one forward row and one forward column (x = 2).
LineStatistic line_statistic(const EnSquare& s);

/// Plain X_n on a raw row-major buffer; the Monte Carlo hot path.
long line_count(const Symbol* cells, long n);

bool is_latin(const EnSquare& s);

/// Y_n: rows plus columns that are permutations of {1..n}.
long permutation_line_count(const EnSquare& s);

/// Uniform sample from Omega_n: Fisher-Yates shuffle of the fixed multiset.
EnSquare sample_uniform(long n, rng::Xoshiro256& stream);

/// In-place variant for tight loops; buf must hold n^2 cells and contain
/// the multiset (any arrangement).
void shuffle_square(std::vector<Symbol>& buf, rng::Xoshiro256& stream);

/// Text format: first line n, then n rows of n space-separated symbols.
std::string format_square(const EnSquare& s);
EnSquare parse_square(const std::string& text);

}  // namespace esq::squares

#endif
