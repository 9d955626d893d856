#include "core/algebra.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace esq::algebra {

CayleyTable::CayleyTable(long order, std::vector<long> table,
                         std::vector<std::string> labels)
    : n_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (n_ < 1) throw std::invalid_argument("table order must be >= 1");
  if (static_cast<long>(table_.size()) != n_ * n_) {
    throw std::invalid_argument("expected n^2 table entries");
  }
  for (long v : table_) {
    if (v < 1 || v > n_) {
      throw std::invalid_argument("table entry " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n_));
    }
  }
  if (!labels_.empty() && static_cast<long>(labels_.size()) != n_) {
    throw std::invalid_argument("expected one label per element");
  }
}

CayleyTable cyclic_group(long order) {
  std::vector<long> t(order * order);
  for (long a = 1; a <= order; ++a) {
    for (long b = 1; b <= order; ++b) {
      t[(a - 1) * order + (b - 1)] = (a - 1 + b - 1) % order + 1;
    }
  }
  return CayleyTable(order, std::move(t));
}

namespace {

bool line_forward(const CayleyTable& t, long i, bool column) {
  for (long k = 1; k <= t.order(); ++k) {
    long v = column ? t.apply(k, i) : t.apply(i, k);
    if (v != k) return false;
  }
  return true;
}

bool line_reverse(const CayleyTable& t, long i, bool column) {
  const long n = t.order();
  for (long k = 1; k <= n; ++k) {
    long v = column ? t.apply(k, i) : t.apply(i, k);
    if (v != n - k + 1) return false;
  }
  return true;
}

bool associative(const CayleyTable& t) {
  const long n = t.order();
  for (long a = 1; a <= n; ++a) {
    for (long b = 1; b <= n; ++b) {
      const long ab = t.apply(a, b);
      for (long c = 1; c <= n; ++c) {
        if (t.apply(ab, c) != t.apply(a, t.apply(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

AlgebraReport analyze(const CayleyTable& t) {
  const long n = t.order();
  AlgebraReport rep;
  rep.is_associative = associative(t);

  for (long c = 1; c <= n; ++c) rep.fiber_sizes[c] = 0;
  for (long v : t.raw()) ++rep.fiber_sizes[v];
  rep.is_equi_n_square =
      std::all_of(rep.fiber_sizes.begin(), rep.fiber_sizes.end(),
                  [n](const auto& kv) { return kv.second == n; });

  rep.is_latin = true;
  std::vector<bool> seen(n + 1);
  for (long i = 1; i <= n && rep.is_latin; ++i) {
    for (bool column : {false, true}) {
      std::fill(seen.begin(), seen.end(), false);
      for (long k = 1; k <= n; ++k) {
        long v = column ? t.apply(k, i) : t.apply(i, k);
        if (seen[v]) { rep.is_latin = false; break; }
        seen[v] = true;
      }
    }
  }

  for (long i = 1; i <= n; ++i) {
    if (line_forward(t, i, false)) rep.left_identity_like.push_back(i);
    if (line_forward(t, i, true)) rep.right_identity_like.push_back(i);
    if (line_reverse(t, i, false) || line_reverse(t, i, true)) {
      rep.reverse_identity_like.push_back(i);
    }
  }
  return rep;
}

bool reverse_identity_check(const CayleyTable& t, long element,
                            bool column_side) {
  if (element < 1 || element > t.order()) {
    throw std::invalid_argument("element out of range");
  }
  return line_reverse(t, element, column_side);
}

GroupValidation validate_group(const CayleyTable& t) {
  const long n = t.order();
  GroupValidation v;
  v.associative = associative(t);
  for (long e = 1; e <= n && !v.identity; ++e) {
    bool two_sided = true;
    for (long a = 1; a <= n; ++a) {
      if (t.apply(e, a) != a || t.apply(a, e) != a) { two_sided = false; break; }
    }
    if (two_sided) v.identity = e;
  }
  if (v.identity) {
    v.all_invertible = true;
    for (long a = 1; a <= n; ++a) {
      bool found = false;
      for (long b = 1; b <= n; ++b) {
        if (t.apply(a, b) == *v.identity && t.apply(b, a) == *v.identity) {
          found = true;
          break;
        }
      }
      if (!found) { v.all_invertible = false; break; }
    }
  }
  return v;
}

CayleyTable build_rees(const ReesSpec& spec) {
  const auto gv = validate_group(spec.group);
  if (!gv.ok()) {
    throw InvalidGroup("Rees construction: the supplied table is not a group");
  }
  const long gi = spec.i_size, gl = spec.lambda_size, go = spec.group.order();
  if (gi < 1 || gl < 1) throw std::invalid_argument("index sets must be nonempty");
  if (static_cast<long>(spec.sandwich.size()) != gi * gl) {
    throw std::invalid_argument("sandwich matrix must be Lambda x I");
  }
  for (long p : spec.sandwich) {
    if (p < 1 || p > go) throw std::invalid_argument("sandwich entry outside G");
  }
  const long n = gi * go * gl;
  // element index of (i, g, l), everything 1-based, lexicographic (i, g, l)
  auto flat = [&](long i, long g, long l) {
    return (i - 1) * go * gl + (g - 1) * gl + l;
  };
  auto sandwich = [&](long l, long j) { return spec.sandwich[(l - 1) * gi + (j - 1)]; };
  std::vector<long> table(n * n);
  for (long i = 1; i <= gi; ++i) {
    for (long g = 1; g <= go; ++g) {
      for (long l = 1; l <= gl; ++l) {
        const long a = flat(i, g, l);
        for (long j = 1; j <= gi; ++j) {
          for (long t = 1; t <= go; ++t) {
            for (long m = 1; m <= gl; ++m) {
              const long b = flat(j, t, m);
              const long prod =
                  spec.group.apply(spec.group.apply(g, sandwich(l, j)), t);
              table[(a - 1) * n + (b - 1)] = flat(i, prod, m);
            }
          }
        }
      }
    }
  }
  return CayleyTable(n, std::move(table));
}

SimplicityCheck verify_completely_simple(const ReesSpec& spec) {
  const CayleyTable t = build_rees(spec);
  const AlgebraReport rep = analyze(t);
  SimplicityCheck sc;
  sc.fiber_sizes = rep.fiber_sizes;
  sc.all_fibers_uniform = rep.is_equi_n_square;
  sc.is_latin = rep.is_latin;
  return sc;
}

std::string to_json(const AlgebraReport& r) {
  nlohmann::json j;
  j["is_equi_n_square"] = r.is_equi_n_square;
  j["is_latin"] = r.is_latin;
  j["is_associative"] = r.is_associative;
  j["left_identity_like"] = r.left_identity_like;
  j["right_identity_like"] = r.right_identity_like;
  j["reverse_identity_like"] = r.reverse_identity_like;
  nlohmann::json fibers = nlohmann::json::object();
  for (const auto& [elem, size] : r.fiber_sizes) {
    fibers[std::to_string(elem)] = std::to_string(size);
  }
  j["fiber_sizes"] = fibers;
  return j.dump(2) + "\n";
}

std::string format_table(const CayleyTable& t) {
  std::ostringstream out;
  out << t.order() << "\n";
  for (long a = 1; a <= t.order(); ++a) {
    for (long b = 1; b <= t.order(); ++b) {
      if (b > 1) out << ' ';
      out << t.apply(a, b);
    }
    out << "\n";
  }
  return out.str();
}

CayleyTable parse_table(const std::string& text) {
  std::istringstream in(text);
  long n = 0;
  if (!(in >> n) || n < 1) {
    throw std::invalid_argument("table text: bad order line");
  }
  std::vector<long> entries(n * n);
  for (auto& e : entries) {
    if (!(in >> e)) throw std::invalid_argument("table text: too few entries");
  }
  return CayleyTable(n, std::move(entries));
}

}  // namespace esq::algebra
