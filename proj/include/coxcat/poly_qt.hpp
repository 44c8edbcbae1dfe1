#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxcat/bigint.hpp"

namespace coxcat {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z, used as the coefficient ring of the
// bivariate layer. Coefficient index = exponent; no trailing zeros.

namespace upoly {

using UPoly = std::vector<Int>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const UPoly& p) { return p.empty(); }
inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline UPoly neg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline UPoly sub(const UPoly& a, const UPoly& b) { return add(a, neg(b)); }

inline UPoly mul(const UPoly& a, const UPoly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  UPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline UPoly scale(UPoly a, const Int& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

inline Int content(const UPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd_int(g, c);
  return g;  // nonnegative
}

inline UPoly divexact_int(UPoly p, const Int& c) {
  for (auto& x : p) x = exact_div(x, c);
  return p;
}

inline UPoly primitive_part(const UPoly& p) {
  if (is_zero(p)) return p;
  return divexact_int(p, content(p));
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a = q b + r, with the
// full power of lc(b) even when cancellations skip degrees.
inline UPoly prem(UPoly a, const UPoly& b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("pseudo-division by zero");
  const Int& lb = b.back();
  const int total = degree(a) - db + 1;
  int done = 0;
  while (degree(a) >= db && !is_zero(a)) {
    const int da = degree(a);
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    trim(a);
    if (degree(a) == da) throw std::logic_error("pseudo-division failed to reduce degree");
    ++done;
  }
  for (; done < total; ++done)
    for (auto& c : a) c *= lb;
  return a;
}

// Subresultant-PRS gcd (Brown), result with positive leading coefficient and
// the integer content of the inputs preserved.
inline UPoly gcd(UPoly a, UPoly b) {
  if (is_zero(a)) std::swap(a, b);
  if (is_zero(b)) {
    if (is_zero(a)) return a;
    UPoly r = a;
    if (r.back() < 0) r = neg(r);
    return r;
  }
  Int ca = content(a), cb = content(b);
  Int cg = gcd_int(ca, cb);
  a = divexact_int(a, ca);
  b = divexact_int(b, cb);
  if (degree(a) < degree(b)) std::swap(a, b);
  Int g = 1, h = 1;
  while (true) {
    int delta = degree(a) - degree(b);
    UPoly r = prem(a, b);
    if (is_zero(r)) break;
    a = std::move(b);
    Int divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    b = divexact_int(r, divisor);
    g = a.back();
    if (delta >= 1) {
      Int hn = g;
      for (int i = 1; i < delta; ++i) hn *= g;
      for (int i = 1; i < delta; ++i) hn = exact_div(hn, h);
      h = hn;
    }
    if (degree(b) == 0) {
      UPoly one{Int(1)};
      return scale(one, cg);
    }
  }
  b = primitive_part(b);
  b = scale(b, cg);
  if (b.back() < 0) b = neg(b);
  return b;
}

// Exact division (throws if not divisible).
inline UPoly divexact(UPoly a, const UPoly& b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("division by zero polynomial");
  if (is_zero(a)) return {};
  int da = degree(a);
  if (da < db) throw std::domain_error("univariate division not exact");
  UPoly q(da - db + 1, Int(0));
  while (!is_zero(a)) {
    da = degree(a);
    if (da < db) throw std::domain_error("univariate division not exact");
    Int c = exact_div(a.back(), b.back());
    q[da - db] = c;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    trim(a);
  }
  return q;
}

}  // namespace upoly

// ---------------------------------------------------------------------------
// Sparse bivariate integer polynomials in q and t, kept in graded-lex order
// (total degree first, then q-degree), leading term first.

struct Mono {
  int q = 0, t = 0;
  bool operator==(const Mono& o) const { return q == o.q && t == o.t; }
};

// grlex with q > t
inline bool mono_less(const Mono& a, const Mono& b) {
  if (a.q + a.t != b.q + b.t) return a.q + a.t < b.q + b.t;
  return a.q < b.q;
}

class PolyQT {
 public:
  // terms sorted descending in grlex, no zero coefficients
  std::vector<std::pair<Mono, Int>> terms;

  PolyQT() = default;
  PolyQT(long c) { if (c != 0) terms.push_back({{0, 0}, Int(c)}); }
  PolyQT(Int c) { if (c != 0) terms.push_back({{0, 0}, std::move(c)}); }

  static PolyQT monomial(Int c, int dq, int dt) {
    PolyQT p;
    if (c != 0) p.terms.push_back({{dq, dt}, std::move(c)});
    return p;
  }
  static PolyQT q(int e = 1) { return monomial(1, e, 0); }
  static PolyQT t(int e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first == Mono{0, 0}); }
  bool is_one() const { return terms.size() == 1 && terms[0].first == Mono{0, 0} && terms[0].second == 1; }

  int degree_q() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.q);
    return d;
  }
  int degree_t() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.t);
    return d;
  }

  const Int& leading_coeff() const {
    static const Int zero = 0;
    return terms.empty() ? zero : terms[0].second;
  }

  bool operator==(const PolyQT& o) const { return terms == o.terms; }
  bool operator!=(const PolyQT& o) const { return !(*this == o); }

  PolyQT operator-() const {
    PolyQT r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }

  friend PolyQT operator+(const PolyQT& a, const PolyQT& b) {
    PolyQT r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size() ||
          (i < a.terms.size() && mono_less(b.terms[j].first, a.terms[i].first))) {
        r.terms.push_back(a.terms[i++]);
      } else if (i == a.terms.size() || mono_less(a.terms[i].first, b.terms[j].first)) {
        r.terms.push_back(b.terms[j++]);
      } else {
        Int c = a.terms[i].second + b.terms[j].second;
        if (c != 0) r.terms.push_back({a.terms[i].first, std::move(c)});
        ++i, ++j;
      }
    }
    return r;
  }

  friend PolyQT operator-(const PolyQT& a, const PolyQT& b) { return a + (-b); }

  friend PolyQT operator*(const PolyQT& a, const PolyQT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<std::pair<int, int>, Int> acc;  // keyed to sort ascending by grlex
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        Mono m{ma.q + mb.q, ma.t + mb.t};
        acc[{m.q + m.t, m.q}] += ca * cb;
      }
    PolyQT r;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (it->second != 0) r.terms.push_back({{it->first.second, it->first.first - it->first.second}, it->second});
    return r;
  }

  PolyQT pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of a polynomial");
    PolyQT r = PolyQT(1), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  Int content() const {
    Int g = 0;
    for (const auto& [m, c] : terms) g = gcd_int(g, c);
    return g;
  }

  Rat evaluate(const Rat& q0, const Rat& t0) const {
    Rat out = 0;
    for (const auto& [m, c] : terms) {
      Rat term = Rat(c);
      for (int i = 0; i < m.q; ++i) term *= q0;
      for (int i = 0; i < m.t; ++i) term *= t0;
      out += term;
    }
    return out;
  }

  // t^degree_t * p(q, 1/t); pairs with itself to undo.
  PolyQT reverse_t() const {
    const int d = degree_t();
    PolyQT r;
    r.terms.reserve(terms.size());
    for (const auto& [m, c] : terms) r.terms.push_back({{m.q, d - m.t}, c});
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return mono_less(y.first, x.first); });
    return r;
  }

  PolyQT swap_qt() const {
    PolyQT r;
    r.terms.reserve(terms.size());
    for (const auto& [m, c] : terms) r.terms.push_back({{m.t, m.q}, c});
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return mono_less(y.first, x.first); });
    return r;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
      Int a = c;
      if (first) {
        if (a < 0) { out << '-'; a = -a; }
      } else {
        out << (a < 0 ? '-' : '+');
        if (a < 0) a = -a;
      }
      first = false;
      bool coeff_shown = (a != 1) || (m.q == 0 && m.t == 0);
      if (coeff_shown) out << a.str();
      if (m.q > 0) {
        if (coeff_shown) out << '*';
        out << 'q';
        if (m.q > 1) out << '^' << m.q;
        coeff_shown = true;
      }
      if (m.t > 0) {
        if (coeff_shown) out << '*';
        out << 't';
        if (m.t > 1) out << '^' << m.t;
      }
    }
    return out.str();
  }
};

namespace detail {

// Recursive form: coefficients of q^0, q^1, ... as polynomials in t.
inline std::vector<upoly::UPoly> to_recursive(const PolyQT& p) {
  std::vector<upoly::UPoly> coeffs(static_cast<std::size_t>(p.degree_q()) + 1);
  for (const auto& [m, c] : p.terms) {
    auto& u = coeffs[m.q];
    if (static_cast<int>(u.size()) <= m.t) u.resize(m.t + 1, Int(0));
    u[m.t] = c;
  }
  while (!coeffs.empty() && upoly::is_zero(coeffs.back())) coeffs.pop_back();
  return coeffs;
}

inline PolyQT from_recursive(const std::vector<upoly::UPoly>& coeffs) {
  PolyQT p;
  std::vector<std::pair<Mono, Int>> terms;
  for (std::size_t dq = 0; dq < coeffs.size(); ++dq)
    for (std::size_t dt = 0; dt < coeffs[dq].size(); ++dt)
      if (coeffs[dq][dt] != 0) terms.push_back({{static_cast<int>(dq), static_cast<int>(dt)}, coeffs[dq][dt]});
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return mono_less(y.first, x.first); });
  p.terms = std::move(terms);
  return p;
}

// Content of p seen in (Z[t])[q].
inline upoly::UPoly content_q(const std::vector<upoly::UPoly>& coeffs) {
  upoly::UPoly g;
  for (const auto& c : coeffs) g = upoly::gcd(g, c);
  return g;
}

inline std::vector<upoly::UPoly> divexact_upoly(const std::vector<upoly::UPoly>& coeffs, const upoly::UPoly& d) {
  std::vector<upoly::UPoly> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out[i] = upoly::is_zero(coeffs[i]) ? upoly::UPoly{} : upoly::divexact(coeffs[i], d);
  return out;
}

// Pseudo-remainder in (Z[t])[q], carrying the full lc(b)^(delta+1) factor.
inline std::vector<upoly::UPoly> prem_q(std::vector<upoly::UPoly> a, const std::vector<upoly::UPoly>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const upoly::UPoly& lb = b.back();
  auto degq = [](const std::vector<upoly::UPoly>& p) { return static_cast<int>(p.size()) - 1; };
  const int total = degq(a) - db + 1;
  int done = 0;
  while (degq(a) >= db && !a.empty()) {
    const int da = degq(a);
    upoly::UPoly la = a.back();
    for (auto& c : a) c = upoly::mul(c, lb);
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = upoly::sub(a[da - db + j], upoly::mul(la, b[j]));
    while (!a.empty() && upoly::is_zero(a.back())) a.pop_back();
    if (degq(a) == da) throw std::logic_error("bivariate pseudo-division failed");
    ++done;
  }
  for (; done < total; ++done)
    for (auto& c : a) c = upoly::mul(c, lb);
  return a;
}

}  // namespace detail

/// GCD over Z[q,t] (primitive PRS in q over Z[t]), normalized so the
/// graded-lex leading coefficient is positive.
inline PolyQT gcd(const PolyQT& a, const PolyQT& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto normalize = [](PolyQT p) {
    if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);

  auto ra = detail::to_recursive(a);
  auto rb = detail::to_recursive(b);
  upoly::UPoly ca = detail::content_q(ra), cb = detail::content_q(rb);
  upoly::UPoly cg = upoly::gcd(ca, cb);
  ra = detail::divexact_upoly(ra, ca);
  rb = detail::divexact_upoly(rb, cb);

  if (ra.size() < rb.size()) std::swap(ra, rb);
  if (rb.size() == 1) {
    // gcd of a q-free polynomial with the primitive part is 1 in (Z[t])[q]
    std::vector<upoly::UPoly> g{cg};
    return normalize(detail::from_recursive(g));
  }
  upoly::UPoly g{Int(1)}, h{Int(1)};
  while (true) {
    int delta = static_cast<int>(ra.size()) - static_cast<int>(rb.size());
    auto r = detail::prem_q(ra, rb);
    if (r.empty()) break;
    ra = std::move(rb);
    upoly::UPoly divisor = g;
    for (int i = 0; i < delta; ++i) divisor = upoly::mul(divisor, h);
    rb = detail::divexact_upoly(r, divisor);
    g = ra.back();
    if (delta >= 1) {
      upoly::UPoly hn = g;
      for (int i = 1; i < delta; ++i) hn = upoly::mul(hn, g);
      for (int i = 1; i < delta; ++i) hn = upoly::divexact(hn, h);
      h = hn;
    }
    if (rb.size() == 1) {
      std::vector<upoly::UPoly> gg{cg};
      return normalize(detail::from_recursive(gg));
    }
  }
  upoly::UPoly cr = detail::content_q(rb);
  rb = detail::divexact_upoly(rb, cr);
  for (auto& c : rb) c = upoly::mul(c, cg);
  return normalize(detail::from_recursive(rb));
}

/// Exact division over Z[q,t]; throws std::domain_error when not divisible.
inline PolyQT divexact(const PolyQT& a, const PolyQT& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  auto ra = detail::to_recursive(a);
  auto rb = detail::to_recursive(b);
  const int db = static_cast<int>(rb.size()) - 1;
  std::vector<upoly::UPoly> quo(ra.size() >= rb.size() ? ra.size() - rb.size() + 1 : 0);
  while (!ra.empty()) {
    const int da = static_cast<int>(ra.size()) - 1;
    if (da < db) throw std::domain_error("bivariate division not exact");
    upoly::UPoly c = upoly::divexact(ra.back(), rb.back());
    quo[da - db] = c;
    for (int j = 0; j <= db; ++j)
      ra[da - db + j] = upoly::sub(ra[da - db + j], upoly::mul(c, rb[j]));
    while (!ra.empty() && upoly::is_zero(ra.back())) ra.pop_back();
    if (!ra.empty() && static_cast<int>(ra.size()) - 1 == da)
      throw std::logic_error("bivariate division failed to reduce degree");
  }
  return detail::from_recursive(quo);
}

}  // namespace coxcat
