// Command-line front end; talks to the core exclusively through the
// public C API in equisquare/equisquare.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equisquare/equisquare.h"

namespace {

constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

int status_to_exit(esq_status st) {
  switch (st) {
    case ESQ_OK: return 0;
    case ESQ_ERR_USAGE: return kExitUsage;
    case ESQ_ERR_GUARD: return kExitGuard;
    default: return kExitCompute;
  }
}

// Prints the string result of a C API call, or the error to stderr.
int emit(esq_status st, char* text) {
  if (st != ESQ_OK) {
    std::cerr << "error: " << esq_last_error() << "\n";
    return status_to_exit(st);
  }
  std::cout << text;
  esq_free_string(text);
  return 0;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equisquare: exact counts, simulation and algebra of equi-n-squares"};
  app.require_subcommand(1);
  app.set_version_flag("--version", esq_version());

  int n = 2;
  int digits = 12;
  bool breakdown = false;
  bool force = false;
  bool deterministic = false;
  std::string format = "table";
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000000;
  std::uint64_t count_samples = 1;
  std::uint64_t trace_resolution = 10000;
  int workers = 1;
  std::string trace_path;
  std::string input_path = "-";

  auto* c_count = app.add_subcommand("count", "exact counts and probability for one order");
  c_count->add_option("n", n, "square order")->required()->check(CLI::Range(2, 1000));
  c_count->add_flag("--breakdown", breakdown, "include every intermediate count");
  c_count->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));
  c_count->add_option("--digits", digits)->check(CLI::PositiveNumber);

  auto* c_pmf = app.add_subcommand("pmf", "exact distribution of the consecutive-line statistic");
  c_pmf->add_option("n", n, "square order")->required()->check(CLI::Range(2, 1000));
  c_pmf->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));
  c_pmf->add_option("--digits", digits)->check(CLI::PositiveNumber);

  auto* c_sample = app.add_subcommand("sample", "draw uniform random squares");
  c_sample->add_option("n", n, "square order")->required()->check(CLI::Range(1, 10000));
  c_sample->add_option("--seed", seed);
  c_sample->add_option("--count", count_samples)->check(CLI::PositiveNumber);

  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo verification of the distribution");
  c_sim->add_option("n", n, "square order")->required()->check(CLI::Range(2, 10000));
  c_sim->add_option("--iterations", iterations)->check(CLI::PositiveNumber);
  c_sim->add_option("--seed", seed);
  c_sim->add_option("--workers", workers)->check(CLI::Range(1, 4096));
  c_sim->add_option("--digits", digits)->check(CLI::PositiveNumber);
  c_sim->add_option("--trace", trace_path, "write a running-probability CSV here");
  c_sim->add_option("--trace-resolution", trace_resolution)->check(CLI::PositiveNumber);
  c_sim->add_flag("--deterministic", deterministic, "omit timing metadata");

  auto* c_census = app.add_subcommand("census", "exhaustive enumeration ground truth");
  c_census->add_option("n", n, "square order")->required()->check(CLI::Range(1, 6));
  c_census->add_flag("--force", force, "bypass the n>3 guard (n=4 is ~6.3e10 squares)");

  auto* c_algebra = app.add_subcommand("algebra", "Cayley-table analysis and Rees construction");
  auto* c_analyze = c_algebra->add_subcommand("analyze", "analyze a Cayley table (file or - for stdin)");
  c_analyze->add_option("input", input_path, "table file, or -");
  auto* c_rees = c_algebra->add_subcommand("rees", "build and analyze a Rees matrix semigroup");
  std::string group_spec = "cyclic:2";
  int i_size = 1, lambda_size = 1;
  std::string sandwich_spec;
  bool print_table = false;
  c_rees->add_option("--group", group_spec, "group: cyclic:N or a table file");
  c_rees->add_option("--i", i_size, "|I|")->check(CLI::PositiveNumber);
  c_rees->add_option("--lambda", lambda_size, "|Lambda|")->check(CLI::PositiveNumber);
  c_rees->add_option("--sandwich", sandwich_spec,
                     "Lambda x I entries, space separated (default: all identity)");
  c_rees->add_flag("--print-table", print_table, "also print the Cayley table");
  c_algebra->require_subcommand(1);

  auto* c_report = app.add_subcommand("report", "reproductions of the reference tables");
  std::string which = "tables";
  c_report->add_option("what", which)->check(CLI::IsMember({"tables"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  char* out = nullptr;

  if (c_count->parsed()) {
    esq_status st = esq_count_report(n, breakdown, digits, format.c_str(), &out);
    return emit(st, out);
  }

  if (c_pmf->parsed()) {
    esq_status st = esq_pmf_report(n, digits, format.c_str(), &out);
    return emit(st, out);
  }

  if (c_sample->parsed()) {
    for (std::uint64_t k = 0; k < count_samples; ++k) {
      esq_square* sq = nullptr;
      esq_status st = esq_square_sample(n, seed, k, &sq);
      if (st != ESQ_OK) {
        std::cerr << "error: " << esq_last_error() << "\n";
        return status_to_exit(st);
      }
      char* text = nullptr;
      st = esq_square_format(sq, &text);
      esq_square_free(sq);
      if (int rc = emit(st, text)) return rc;
    }
    return 0;
  }

  if (c_sim->parsed()) {
    esq_status st = esq_simulate_json(
        n, iterations, seed, workers, digits,
        trace_path.empty() ? nullptr : trace_path.c_str(), trace_resolution,
        &out);
    if (st != ESQ_OK) {
      std::cerr << "error: " << esq_last_error() << "\n";
      return status_to_exit(st);
    }
    if (!deterministic) {
      std::cout << "# equisquare " << esq_version() << "\n";
    }
    std::cout << out;
    esq_free_string(out);
    return 0;
  }

  if (c_census->parsed()) {
    esq_status st = esq_census_json(n, force, &out);
    return emit(st, out);
  }

  if (c_analyze->parsed()) {
    std::string text;
    try {
      text = read_input(input_path);
    } catch (const CLI::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    esq_table* t = nullptr;
    esq_status st = esq_table_parse(text.c_str(), &t);
    if (st != ESQ_OK) {
      std::cerr << "error: " << esq_last_error() << "\n";
      return status_to_exit(st);
    }
    st = esq_table_analyze_json(t, &out);
    esq_table_free(t);
    return emit(st, out);
  }

  if (c_rees->parsed()) {
    esq_table* group = nullptr;
    esq_status st;
    if (group_spec.rfind("cyclic:", 0) == 0) {
      int order = std::atoi(group_spec.c_str() + 7);
      st = esq_table_cyclic(order, &group);
    } else {
      std::string text;
      try {
        text = read_input(group_spec);
      } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      st = esq_table_parse(text.c_str(), &group);
    }
    if (st != ESQ_OK) {
      std::cerr << "error: " << esq_last_error() << "\n";
      return status_to_exit(st);
    }
    std::vector<int> sandwich;
    if (!sandwich_spec.empty()) {
      std::istringstream in(sandwich_spec);
      int v;
      while (in >> v) sandwich.push_back(v);
      if (static_cast<long>(sandwich.size()) !=
          static_cast<long>(i_size) * lambda_size) {
        std::cerr << "error: sandwich needs " << i_size * lambda_size
                  << " entries\n";
        esq_table_free(group);
        return kExitUsage;
      }
    }
    esq_table* rees = nullptr;
    st = esq_table_rees(group, i_size, lambda_size,
                        sandwich.empty() ? nullptr : sandwich.data(), &rees);
    esq_table_free(group);
    if (st != ESQ_OK) {
      std::cerr << "error: " << esq_last_error() << "\n";
      return status_to_exit(st);
    }
    if (print_table) {
      char* text = nullptr;
      st = esq_table_format(rees, &text);
      if (st == ESQ_OK) {
        std::cout << text;
        esq_free_string(text);
      }
    }
    st = esq_table_analyze_json(rees, &out);
    esq_table_free(rees);
    return emit(st, out);
  }

  if (c_report->parsed()) {
    esq_status st = esq_tables_csv(&out);
    return emit(st, out);
  }

  return kExitUsage;
}
