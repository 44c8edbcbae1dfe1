#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "coxcat/bigint.hpp"
#include "coxcat/poly_qt.hpp"

namespace coxcat {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Element of Q(q,t) as a canonical fraction of integer polynomials:
/// gcd(num, den) = 1, den has positive leading coefficient in graded-lex
/// order, and zero is 0/1. Equality is plain structural equality.
class QT {
 public:
  PolyQT num, den;

  QT() : num(), den(1) {}
  QT(long c) : num(c), den(1) {}
  QT(Int c) : num(std::move(c)), den(1) {}
  QT(Rat r) : num(numerator(r)), den(denominator(r)) {}
  QT(PolyQT p) : num(std::move(p)), den(1) {}
  QT(PolyQT n, PolyQT d) : num(std::move(n)), den(std::move(d)) { canonicalize(); }

  static QT q() { return QT(PolyQT::q()); }
  static QT t() { return QT(PolyQT::t()); }
  /// q^a t^b with possibly negative exponents.
  static QT monomial(Int c, int a, int b) {
    return QT(PolyQT::monomial(std::move(c), std::max(a, 0), std::max(b, 0)),
              PolyQT::monomial(1, std::max(-a, 0), std::max(-b, 0)));
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }
  bool is_polynomial() const { return den.is_one(); }

  bool operator==(const QT& o) const { return num == o.num && den == o.den; }
  bool operator!=(const QT& o) const { return !(*this == o); }

  QT operator-() const {
    QT r = *this;
    r.num = -r.num;
    return r;
  }

  friend QT operator+(const QT& a, const QT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QT r;
    if (a.den == b.den) {
      r.num = a.num + b.num;
      r.den = a.den;
    } else if (a.den.is_one()) {
      r.num = a.num * b.den + b.num;
      r.den = b.den;
    } else if (b.den.is_one()) {
      r.num = a.num + b.num * a.den;
      r.den = a.den;
    } else {
      PolyQT g = gcd(a.den, b.den);
      PolyQT da = divexact(a.den, g), db = divexact(b.den, g);
      r.num = a.num * db + b.num * da;
      r.den = a.den * db;
    }
    r.canonicalize();
    return r;
  }

  friend QT operator-(const QT& a, const QT& b) { return a + (-b); }

  friend QT operator*(const QT& a, const QT& b) {
    if (a.is_zero() || b.is_zero()) return QT();
    PolyQT g1 = gcd(a.num, b.den), g2 = gcd(b.num, a.den);
    QT r;
    r.num = divexact(a.num, g1) * divexact(b.num, g2);
    r.den = divexact(a.den, g2) * divexact(b.den, g1);
    r.canonicalize();
    return r;
  }

  friend QT operator/(const QT& a, const QT& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    QT inv;
    inv.num = b.den;
    inv.den = b.num;
    inv.canonicalize();
    return a * inv;
  }

  QT& operator+=(const QT& o) { return *this = *this + o; }
  QT& operator-=(const QT& o) { return *this = *this - o; }
  QT& operator*=(const QT& o) { return *this = *this * o; }
  QT& operator/=(const QT& o) { return *this = *this / o; }

  Rat evaluate(const Rat& q0, const Rat& t0) const {
    Rat d = den.evaluate(q0, t0);
    if (d == 0)
      throw PoleError("pole at q = " + q0.str() + ", t = " + t0.str() + " in " + str());
    return num.evaluate(q0, t0) / d;
  }

  /// Substitute t -> 1/t (used by the modified Macdonald normalization).
  QT subst_t_inv() const {
    if (is_zero()) return *this;
    const int dn = num.degree_t(), dd = den.degree_t();
    QT r;
    r.num = num.reverse_t();
    r.den = den.reverse_t();
    if (dd > dn)
      r.num = r.num * PolyQT::t(dd - dn);
    else if (dn > dd)
      r.den = r.den * PolyQT::t(dn - dd);
    r.canonicalize();
    return r;
  }

  QT swap_qt() const {
    QT r;
    r.num = num.swap_qt();
    r.den = den.swap_qt();
    r.canonicalize();
    return r;
  }

  std::string str() const {
    if (is_polynomial()) return num.str();
    // A term like 2*q*t must be parenthesized after '/': a/2*q parses as (a/2)*q.
    auto single_factor = [](const PolyQT& p) {
      if (p.terms.size() != 1) return false;
      const auto& [m, c] = p.terms[0];
      int printed = (c != 1 || (m.q == 0 && m.t == 0)) + (m.q > 0) + (m.t > 0);
      return c > 0 && printed <= 1;
    };
    std::string n = num.str(), d = den.str();
    if (num.terms.size() > 1) n = "(" + n + ")";
    if (!single_factor(den)) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void canonicalize() {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
      den = PolyQT(1);
      return;
    }
    if (den.is_one()) return;
    if (num.is_constant() || den.is_constant()) {
      // only an integer content can cancel
      Int g = gcd_int(num.content(), den.content());
      if (g > 1) {
        for (auto& [m, c] : num.terms) c = exact_div(c, g);
        for (auto& [m, c] : den.terms) c = exact_div(c, g);
      }
    } else {
      PolyQT g = gcd(num, den);
      if (!g.is_one()) {
        num = divexact(num, g);
        den = divexact(den, g);
      }
    }
    if (den.leading_coeff() < 0) {
      num = -num;
      den = -den;
    }
  }
};

}  // namespace coxcat
