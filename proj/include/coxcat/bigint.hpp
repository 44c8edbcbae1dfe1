#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coxcat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(const Int& n, long k) {
  if (k < 0 || n < k) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - (k - i);
    r /= i;  // exact at every step
  }
  return r;
}

// Quotient that insists on exact divisibility.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::domain_error("exact_div: " + a.str() + " not divisible by " + b.str());
  return q;
}

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("expected integer, got " + r.str());
  return numerator(r);
}

// Error type for configured size limits (group order, point counts, degrees).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coxcat
