#include "core/numerics.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace esq::num {

namespace {

std::mutex g_fact_mutex;
std::vector<Int>& fact_table() {
  static std::vector<Int> table = {Int(1)};  // 0! = 1
  return table;
}

}  // namespace

const Int& factorial_nonneg(unsigned long k) {
  std::lock_guard<std::mutex> lock(g_fact_mutex);
  auto& table = fact_table();
  while (table.size() <= k) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[k];
}

std::optional<Int> factorial(long k) {
  if (k < 0) return std::nullopt;
  return factorial_nonneg(static_cast<unsigned long>(k));
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

int indicator_even(long n) { return n % 2 == 0 ? 1 : 0; }

Int formula_term(const Int& coeff, const std::vector<long>& num_factorials,
                 const std::vector<FactPow>& den_factorials) {
  if (coeff == 0) return Int(0);
  Int num = coeff;
  for (long a : num_factorials) {
    auto f = factorial(a);
    if (!f) {
      throw std::logic_error(
          "formula_term: negative factorial in a numerator position");
    }
    num *= *f;
  }
  Int den(1);
  for (const auto& [arg, power] : den_factorials) {
    if (power == 0) continue;
    auto f = factorial(arg);
    if (!f) return Int(0);  // reciprocal of a negative factorial
    Int fp;
    mpz_pow_ui(fp.get_mpz_t(), f->get_mpz_t(), static_cast<unsigned long>(power));
    den *= fp;
  }
  Int q = num / den;
  if (q * den != num) {
    throw std::logic_error("formula_term: non-integer result");
  }
  return q;
}

namespace {

Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// round(num/den) half to even, both positive.
Int div_half_even(const Int& num, const Int& den) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int twice = 2 * r;
  if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

std::string render_fixed(const Int& scaled, int digits, bool negative) {
  std::string s = scaled.get_str();
  std::string out;
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, std::string(digits + 1 - s.size(), '0'));
    }
    out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
  } else {
    out = s;
  }
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

}  // namespace

std::string to_decimal(const Rat& p, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  Rat a = abs(p);
  Int scaled =
      div_half_even(a.get_num() * pow10(static_cast<unsigned long>(digits)),
                    a.get_den());
  return render_fixed(scaled, digits, sgn(p) < 0);
}

std::string to_decimal_truncated(const Rat& p, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal_truncated: digits must be >= 1");
  Rat a = abs(p);
  Int scaled = a.get_num() * pow10(static_cast<unsigned long>(digits)) / a.get_den();
  return render_fixed(scaled, digits, sgn(p) < 0);
}

std::string to_scientific(const Rat& p, int sig) {
  if (sig < 1) throw std::invalid_argument("to_scientific: sig must be >= 1");
  if (p == 0) return "0";
  Rat a = abs(p);
  // decimal exponent: largest e with 10^e <= a
  long e = 0;
  Rat t = a;
  while (t >= 10) { t /= 10; ++e; }
  while (t < 1) { t *= 10; --e; }
  // mantissa digits: round(a / 10^(e - sig + 1)) half-even
  long shift = e - (sig - 1);
  Int num = a.get_num(), den = a.get_den();
  if (shift > 0) {
    den *= pow10(static_cast<unsigned long>(shift));
  } else if (shift < 0) {
    num *= pow10(static_cast<unsigned long>(-shift));
  }
  Int m = div_half_even(num, den);
  std::string ds = m.get_str();
  if (static_cast<int>(ds.size()) > sig) {  // rounded up to the next decade
    ds.pop_back();
    ++e;
  }
  std::string out;
  if (sgn(p) < 0) out += "-";
  out += ds.substr(0, 1);
  if (sig > 1) out += "." + ds.substr(1);
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%+03ld", e);
  return out + buf;
}

LogApprox LogApprox::of(const Int& v) {
  if (v == 0) return {0.0, 0};
  signed long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return {std::log(std::fabs(d)) + static_cast<double>(exp2) * M_LN2,
          sgn(v) > 0 ? 1 : -1};
}

LogApprox LogApprox::of(const Rat& v) {
  if (v == 0) return {0.0, 0};
  LogApprox n = of(Int(v.get_num()));
  LogApprox d = of(Int(v.get_den()));
  return {n.log_value - d.log_value, sgn(v) > 0 ? 1 : -1};
}

double LogApprox::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_value);
}

}  // namespace esq::num
