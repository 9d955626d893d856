#ifndef ESQ_REPORT_HPP
#define ESQ_REPORT_HPP

#include <string>

#include "core/counting.hpp"

namespace esq::report {

enum class Format { table, csv, json };

Format parse_format(const std::string& name);

/// Probability of consecutiveness rendered at the precision the reference
/// probability table prints for that n (n in 2..8).
std::string table1_probability(long n);

/// Count renderings at the reference count table's precision (n in 2..9).
std::string table2_sigma(long n);
std::string table2_s(long n);
std::string table2_ratio(long n);  // that table truncates, it does not round

std::string count_report(long n, bool breakdown, int digits, Format fmt);
std::string pmf_report(long n, int digits, Format fmt);

/// Both reference tables as CSV sections.
std::string tables_csv();

}  // namespace esq::report

#endif
