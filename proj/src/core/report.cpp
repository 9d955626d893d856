#include "core/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace esq::report {

using counting::Int;
using counting::Rat;
using num::to_decimal;
using num::to_decimal_truncated;
using num::to_scientific;

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string table1_probability(long n) {
  const Rat p = counting::prob_consecutive(n);
  switch (n) {
    case 2: return p == 1 ? "1" : to_decimal(p, 8);
    case 3: return to_decimal(p, 8);
    case 4: return to_decimal(p, 9);
    case 5: return to_decimal(p, 10);
    case 6: return to_scientific(p, 7);
    case 7: return to_scientific(p, 7);
    case 8: return to_scientific(p, 5);
    default: return to_scientific(p, 7);
  }
}

namespace {

std::string table2_count(const Int& v, long n) {
  switch (n) {
    case 2:
    case 3: return v.get_str();
    case 4:
    case 5: return to_scientific(Rat(v), 3);
    case 6: return to_scientific(Rat(v), 4);
    case 7: return to_scientific(Rat(v), 5);
    default: return to_scientific(Rat(v), 6);
  }
}

int table2_ratio_places(long n) {
  switch (n) {
    case 2:
    case 3:
    case 4:
    case 5: return 3;
    case 6: return 4;
    case 7: return 5;
    case 8: return 6;
    default: return 8;
  }
}

/// Exact integer plus a 6-significant-digit scientific rendering.
std::string count_pair(const Int& v) {
  return v.get_str() + " (" + to_scientific(Rat(v), 6) + ")";
}

std::string prob_pair(const Rat& p, int digits) {
  return p.get_str() + " (" + to_decimal(p, digits) + ")";
}

}  // namespace

std::string table2_sigma(long n) { return table2_count(counting::count_consecutive(n), n); }
std::string table2_s(long n) { return table2_count(counting::asymptotic_sigma(n), n); }

std::string table2_ratio(long n) {
  Rat ratio(counting::count_consecutive(n), counting::asymptotic_sigma(n));
  ratio.canonicalize();
  return to_decimal_truncated(ratio, table2_ratio_places(n));
}

std::string count_report(long n, bool breakdown, int digits, Format fmt) {
  const auto b = counting::breakdown(n);
  Rat ratio(b.sigma, counting::asymptotic_sigma(n));
  ratio.canonicalize();
  const Int s_n = counting::asymptotic_sigma(n);

  std::vector<std::pair<std::string, std::string>> rows = {
      {"omega", count_pair(b.omega)},
      {"sigma", count_pair(b.sigma)},
      {"s_asymptotic", count_pair(s_n)},
      {"sigma_over_s", to_decimal(ratio, digits)},
      {"prob_consecutive", prob_pair(b.prob_consecutive, digits)},
  };
  if (breakdown) {
    rows.push_back({"row_consecutive", count_pair(b.r)});
    rows.push_back({"middle_row_and_column", count_pair(b.m_term)});
    rows.push_back({"rc", count_pair(b.rc)});
    rows.push_back({"rcc", count_pair(b.rcc)});
    rows.push_back({"rrcc", count_pair(b.rrcc)});
  }

  std::ostringstream out;
  switch (fmt) {
    case Format::table: {
      out << "n = " << n << "\n";
      for (const auto& [k, v] : rows) out << "  " << k << " = " << v << "\n";
      break;
    }
    case Format::csv: {
      out << "quantity,value\n";
      out << "n," << n << "\n";
      for (const auto& [k, v] : rows) out << k << ",\"" << v << "\"\n";
      break;
    }
    case Format::json: {
      nlohmann::json j;
      j["n"] = std::to_string(n);
      j["omega"] = b.omega.get_str();
      j["sigma"] = b.sigma.get_str();
      j["s_asymptotic"] = s_n.get_str();
      j["sigma_over_s"] = to_decimal(ratio, digits);
      j["prob_consecutive"] = b.prob_consecutive.get_str();
      j["prob_consecutive_decimal"] = to_decimal(b.prob_consecutive, digits);
      if (breakdown) {
        j["row_consecutive"] = b.r.get_str();
        j["middle_row_and_column"] = b.m_term.get_str();
        j["rc"] = b.rc.get_str();
        j["rcc"] = b.rcc.get_str();
        j["rrcc"] = b.rrcc.get_str();
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string pmf_report(long n, int digits, Format fmt) {
  const auto table = counting::pmf_table(n);
  std::ostringstream out;
  switch (fmt) {
    case Format::table: {
      out << "pmf of X_" << n << "\n";
      for (std::size_t x = 0; x < table.entries.size(); ++x) {
        out << "  x=" << x << "  " << prob_pair(table.entries[x], digits) << "\n";
      }
      break;
    }
    case Format::csv: {
      out << "x,fraction,decimal\n";
      for (std::size_t x = 0; x < table.entries.size(); ++x) {
        out << x << ',' << table.entries[x].get_str() << ','
            << to_decimal(table.entries[x], digits) << "\n";
      }
      break;
    }
    case Format::json: {
      nlohmann::json j;
      j["n"] = std::to_string(n);
      j["tail_zero_from"] = std::to_string(table.tail_zero_from);
      nlohmann::json entries = nlohmann::json::object();
      for (std::size_t x = 0; x < table.entries.size(); ++x) {
        nlohmann::json e;
        e["fraction"] = table.entries[x].get_str();
        e["decimal"] = to_decimal(table.entries[x], digits);
        entries[std::to_string(x)] = e;
      }
      j["entries"] = entries;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string tables_csv() {
  std::ostringstream out;
  out << "# Table 1\n";
  out << "n,prob_consecutive\n";
  for (long n = 2; n <= 8; ++n) {
    out << n << ',' << table1_probability(n) << "\n";
  }
  out << "\n# Table 2\n";
  out << "n,sigma,s,ratio\n";
  for (long n = 2; n <= 9; ++n) {
    out << n << ',' << table2_sigma(n) << ',' << table2_s(n) << ','
        << table2_ratio(n) << "\n";
  }
  return out.str();
}

}  // namespace esq::report
