#include "equisquare/equisquare.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "core/algebra.hpp"
#include "core/counting.hpp"
#include "core/montecarlo.hpp"
#include "core/oracle.hpp"
#include "core/report.hpp"
#include "core/squares.hpp"

using esq::algebra::CayleyTable;
using esq::squares::EnSquare;

struct esq_square {
  EnSquare value;
};

struct esq_table {
  CayleyTable value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

esq_status fail(esq_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
esq_status guarded(Fn&& fn) {
  try {
    fn();
    return ESQ_OK;
  } catch (const esq::oracle::GuardExceeded& e) {
    return fail(ESQ_ERR_GUARD, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ESQ_ERR_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(ESQ_ERR_COMPUTE, e.what());
  }
}

}  // namespace

extern "C" {

const char* esq_version(void) { return "1.0.0"; }

const char* esq_last_error(void) { return g_last_error.c_str(); }

void esq_free_string(char* s) { std::free(s); }

/* ---- squares ---------------------------------------------------- */

esq_status esq_square_parse(const char* text, esq_square** out) {
  if (!text || !out) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] { *out = new esq_square{esq::squares::parse_square(text)}; });
}

esq_status esq_square_sample(int n, uint64_t seed, uint64_t index,
                             esq_square** out) {
  if (!out) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] {
    auto stream = esq::rng::make_stream(seed, index);
    *out = new esq_square{esq::squares::sample_uniform(n, stream)};
  });
}

void esq_square_free(esq_square* s) { delete s; }

int esq_square_order(const esq_square* s) {
  return s ? static_cast<int>(s->value.order()) : 0;
}

esq_status esq_square_format(const esq_square* s, char** out_text) {
  if (!s || !out_text) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] { *out_text = dup_string(esq::squares::format_square(s->value)); });
}

esq_status esq_square_statistic_json(const esq_square* s, char** out_json) {
  if (!s || !out_json) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto stat = esq::squares::line_statistic(s->value);
    nlohmann::json j;
    j["x"] = std::to_string(stat.x);
    auto lines = [](const auto& v) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [idx, orient] : v) {
        nlohmann::json e;
        e["index"] = std::to_string(idx);
        e["orientation"] =
            orient == esq::squares::Orientation::forward ? "forward" : "reverse";
        arr.push_back(e);
      }
      return arr;
    };
    j["consecutive_rows"] = lines(stat.consecutive_rows);
    j["consecutive_cols"] = lines(stat.consecutive_cols);
    j["is_latin"] = esq::squares::is_latin(s->value);
    j["permutation_lines"] =
        std::to_string(esq::squares::permutation_line_count(s->value));
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

/* ---- counting reports ------------------------------------------- */

esq_status esq_count_report(int n, int breakdown, int digits,
                            const char* format, char** out) {
  if (!format || !out) return fail(ESQ_ERR_USAGE, "null argument");
  if (n < 2) return fail(ESQ_ERR_USAGE, "count: n must be >= 2");
  if (digits < 1) return fail(ESQ_ERR_USAGE, "digits must be >= 1");
  return guarded([&] {
    *out = dup_string(esq::report::count_report(
        n, breakdown != 0, digits, esq::report::parse_format(format)));
  });
}

esq_status esq_pmf_report(int n, int digits, const char* format, char** out) {
  if (!format || !out) return fail(ESQ_ERR_USAGE, "null argument");
  if (n < 2) return fail(ESQ_ERR_USAGE, "pmf: n must be >= 2");
  if (digits < 1) return fail(ESQ_ERR_USAGE, "digits must be >= 1");
  return guarded([&] {
    *out = dup_string(
        esq::report::pmf_report(n, digits, esq::report::parse_format(format)));
  });
}

esq_status esq_tables_csv(char** out) {
  if (!out) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] { *out = dup_string(esq::report::tables_csv()); });
}

/* ---- census ------------------------------------------------------ */

esq_status esq_census_json(int n, int force, char** out_json) {
  if (!out_json) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] {
    *out_json = dup_string(esq::oracle::to_json(esq::oracle::census(n, force != 0)));
  });
}

/* ---- Monte Carlo ------------------------------------------------- */

esq_status esq_simulate_json(int n, uint64_t iterations, uint64_t seed,
                             int workers, int digits, const char* trace_path,
                             uint64_t trace_resolution, char** out_json) {
  if (!out_json) return fail(ESQ_ERR_USAGE, "null argument");
  if (digits < 1) return fail(ESQ_ERR_USAGE, "digits must be >= 1");
  return guarded([&] {
    std::vector<esq::mc::TraceRow> trace;
    const bool want_trace = trace_path != nullptr && trace_resolution > 0;
    const auto stats = esq::mc::run_simulation(
        n, iterations, seed, workers, want_trace ? &trace : nullptr,
        trace_resolution > 0 ? trace_resolution : 10000);
    // The order-2 closed form degenerates (entries outside [0,1]); use the
    // exact enumeration distribution as the reference there instead.
    esq::counting::PmfTable pmf;
    if (n == 2) {
      const auto c = esq::oracle::census(2);
      pmf.n = 2;
      pmf.entries.assign(5, esq::num::Rat(0));
      for (const auto& [x, count] : c.by_x) {
        pmf.entries[x] = esq::num::Rat(count, c.total);
        pmf.entries[x].canonicalize();
      }
      pmf.tail_zero_from = 5;
    } else {
      pmf = esq::counting::pmf_table(n);
    }
    const auto checks = esq::mc::band_check(stats, pmf);
    if (want_trace) {
      std::ofstream f(trace_path);
      if (!f) throw std::runtime_error(std::string("cannot open trace file: ") +
                                       trace_path);
      f << esq::mc::trace_csv(trace);
    }
    *out_json = dup_string(esq::mc::to_json(stats, checks, digits));
  });
}

/* ---- algebra ------------------------------------------------------ */

esq_status esq_table_parse(const char* text, esq_table** out) {
  if (!text || !out) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] { *out = new esq_table{esq::algebra::parse_table(text)}; });
}

esq_status esq_table_cyclic(int order, esq_table** out) {
  if (!out) return fail(ESQ_ERR_USAGE, "null argument");
  if (order < 1) return fail(ESQ_ERR_USAGE, "cyclic order must be >= 1");
  return guarded([&] { *out = new esq_table{esq::algebra::cyclic_group(order)}; });
}

esq_status esq_table_rees(const esq_table* group, int i_size, int lambda_size,
                          const int* sandwich, esq_table** out) {
  if (!group || !out) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] {
    esq::algebra::ReesSpec spec{group->value, i_size, lambda_size, {}};
    if (sandwich) {
      spec.sandwich.assign(sandwich,
                           sandwich + static_cast<long>(i_size) * lambda_size);
    } else {
      const auto gv = esq::algebra::validate_group(group->value);
      if (!gv.ok()) throw esq::algebra::InvalidGroup("not a group");
      spec.sandwich.assign(static_cast<long>(i_size) * lambda_size, *gv.identity);
    }
    *out = new esq_table{esq::algebra::build_rees(spec)};
  });
}

void esq_table_free(esq_table* t) { delete t; }

int esq_table_order(const esq_table* t) {
  return t ? static_cast<int>(t->value.order()) : 0;
}

esq_status esq_table_format(const esq_table* t, char** out_text) {
  if (!t || !out_text) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] { *out_text = dup_string(esq::algebra::format_table(t->value)); });
}

esq_status esq_table_analyze_json(const esq_table* t, char** out_json) {
  if (!t || !out_json) return fail(ESQ_ERR_USAGE, "null argument");
  return guarded([&] {
    *out_json = dup_string(esq::algebra::to_json(esq::algebra::analyze(t->value)));
  });
}

int esq_table_reverse_identity(const esq_table* t, int element,
                               int column_side) {
  if (!t) return -1;
  try {
    return esq::algebra::reverse_identity_check(t->value, element,
                                                column_side != 0)
               ? 1
               : 0;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return -1;
  }
}

}  // extern "C"
