#pragma once

#include <numeric>
#include <stdexcept>

#include "coxcat/bigint.hpp"
#include "coxcat/root_system.hpp"

namespace coxcat {

/// prod_i (m + e_i) / |W| as an exact rational, for any integer m.
inline Rat catalan_product(const RootSystem& rs, long m) {
  Int num = 1;
  for (int e : rs.exponents) num *= m + e;
  return Rat(num, rs.weyl_order);
}

/// The rational Coxeter-Catalan number Cat_W(m, h), an exact integer whenever
/// gcd(m, h) = 1. Throws if m <= 0 or the value is not integral.
inline Int coxeter_catalan(const RootSystem& rs, long m) {
  if (m <= 0) throw std::domain_error("coxeter_catalan requires m >= 1");
  Rat v = catalan_product(rs, m);
  if (!is_integer(v))
    throw std::domain_error("Cat_" + rs.type.str() + "(" + std::to_string(m) +
                            ") is not integral (gcd(m, h) != 1): " + v.str());
  return numerator(v);
}

inline bool catalan_coprime_hypothesis(const RootSystem& rs, long m) {
  return std::gcd(m, static_cast<long>(rs.coxeter_number)) == 1;
}

}  // namespace coxcat
