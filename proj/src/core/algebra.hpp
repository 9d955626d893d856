#ifndef ESQ_ALGEBRA_HPP
#define ESQ_ALGEBRA_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/squares.hpp"

namespace esq::algebra {

/// Multiplication table of a finite magma; entry (a,b) = a∘b, 1-based
/// element indices stored row-major.
class CayleyTable {
 public:
  CayleyTable(long order, std::vector<long> table,
              std::vector<std::string> labels = {});

  long order() const { return n_; }
  long apply(long a, long b) const { return table_[(a - 1) * n_ + (b - 1)]; }
  const std::vector<long>& raw() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  long n_;
  std::vector<long> table_;
  std::vector<std::string> labels_;
};

/// Cyclic group of the given order (entry (a,b) = a+b-1 mod n, identity 1).
CayleyTable cyclic_group(long order);

struct AlgebraReport {
  bool is_equi_n_square = false;
  bool is_latin = false;
  bool is_associative = false;
  std::vector<long> left_identity_like;     // rows that read 1..n
  std::vector<long> right_identity_like;    // columns that read 1..n
  std::vector<long> reverse_identity_like;  // rows or columns reading n..1
  std::map<long, long> fiber_sizes;         // element -> |mu^{-1}(element)|
};

AlgebraReport analyze(const CayleyTable& t);

/// True iff the reversing map composed with multiplication by `element`
/// is the identity: for rows (left multiplication) the row reads n..1;
/// column_side checks right multiplication / the column instead.
bool reverse_identity_check(const CayleyTable& t, long element,
                            bool column_side = false);

struct GroupValidation {
  bool associative = false;
  std::optional<long> identity;  // two-sided identity, if any
  bool all_invertible = false;
  bool ok() const { return associative && identity && all_invertible; }
};
GroupValidation validate_group(const CayleyTable& t);

struct InvalidGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Rees matrix semigroup M(G; I, Lambda; P). sandwich is the Lambda x I
/// matrix P, row-major, entries 1-based elements of G.
struct ReesSpec {
  CayleyTable group;
  long i_size = 1;
  long lambda_size = 1;
  std::vector<long> sandwich;
};

/// Cayley table over I x G x Lambda in lexicographic (i, g, lambda) order;
/// product (i,g,l)(j,t,m) = (i, g * p_{l,j} * t, m). Throws InvalidGroup
/// if the group table fails validation.
CayleyTable build_rees(const ReesSpec& spec);

struct SimplicityCheck {
  bool all_fibers_uniform = false;
  bool is_latin = false;
  std::map<long, long> fiber_sizes;
};

/// Builds the Rees table and verifies that every multiplication fiber has
/// size |I||G||Lambda| (the completely-simple witness property).
SimplicityCheck verify_completely_simple(const ReesSpec& spec);

std::string to_json(const AlgebraReport& r);

/// Same text format as squares: order line, then rows.
std::string format_table(const CayleyTable& t);
CayleyTable parse_table(const std::string& text);

}  // namespace esq::algebra

#endif
