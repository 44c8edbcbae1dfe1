#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "coxcat/linalg.hpp"
#include "coxcat/symfunc.hpp"

namespace coxcat {

/// The (q,t)-deformed Hall pairing on power sums:
/// <p_la, p_mu>_{q,t} = delta_{la,mu} z_la prod_i (1 - q^{la_i}) / (1 - t^{la_i}).
inline QT qt_pairing_weight(const Partition& la) {
  QT w(Rat(la.z()));
  for (int part : la.parts)
    w *= (QT(1) - QT(PolyQT::q(part))) / (QT(1) - QT(PolyQT::t(part)));
  return w;
}

inline QT hall_inner_qt(const SymFunc& f, const SymFunc& g) {
  if (f.degree != g.degree) return QT();
  auto a = detail::to_p_coords(f);
  auto b = detail::to_p_coords(g);
  const auto& tab = symtab::degree_tables(f.degree);
  QT out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    out += a[i] * b[i] * qt_pairing_weight(tab.parts[i]);
  }
  return out;
}

namespace macdetail {

// ---------------------------------------------------------------------------
// Gram-Schmidt for the monic Macdonald family, generic over the scalar field
// (exact rational functions for small degrees and symbolic tests; plain
// rationals for the evaluation grid that the cached tables are built from).

template <class F>
struct GramSchmidtResult {
  std::vector<std::vector<F>> monic_m;  // P_mu in monomial coordinates, indexed like the tables
  std::vector<F> norms;                 // <P_mu, P_mu>_{q,t}
};

/// Orthogonalize the monomial basis against the Gram matrix `gram` (pairings
/// of m_la with m_mu), processing partitions along `order`. Any linear
/// extension of dominance order yields the same result.
template <class F>
GramSchmidtResult<F> gram_schmidt_monomial(const std::vector<std::vector<F>>& gram,
                                           const std::vector<int>& order) {
  const std::size_t np = gram.size();
  GramSchmidtResult<F> out;
  out.monic_m.assign(np, {});
  out.norms.assign(np, F(0));
  auto pair_with = [&](const std::vector<F>& a, const std::vector<F>& b) {
    F acc(0);
    for (std::size_t i = 0; i < np; ++i) {
      if (linalg::entry_is_zero(a[i])) continue;
      F row(0);
      for (std::size_t j = 0; j < np; ++j) {
        if (linalg::entry_is_zero(b[j])) continue;
        row = row + gram[i][j] * b[j];
      }
      acc = acc + a[i] * row;
    }
    return acc;
  };
  std::vector<int> done;
  for (int idx : order) {
    std::vector<F> v(np, F(0));
    v[idx] = F(1);
    for (int prev : done) {
      F c = pair_with(v, out.monic_m[prev]) / out.norms[prev];
      if (linalg::entry_is_zero(c)) continue;
      for (std::size_t j = 0; j < np; ++j)
        if (!linalg::entry_is_zero(out.monic_m[prev][j]))
          v[j] = v[j] - c * out.monic_m[prev][j];
    }
    out.norms[idx] = pair_with(v, v);
    if (linalg::entry_is_zero(out.norms[idx]))
      throw std::domain_error("degenerate (q,t) pairing in Gram-Schmidt");
    out.monic_m[idx] = std::move(v);
    done.push_back(idx);
  }
  return out;
}

inline std::vector<int> ascending_lex_order(int n) {
  const auto& tab = symtab::degree_tables(n);
  std::vector<int> order(tab.parts.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<int>(order.size() - 1 - i);  // table order is descending lex
  return order;
}

/// Symbolic Gram matrix of the monomial basis under <,>_{q,t}.
inline std::vector<std::vector<QT>> monomial_gram_qt(int n) {
  const auto& tab = symtab::degree_tables(n);
  const std::size_t np = tab.parts.size();
  const auto& m2p = tab.to_p.at(Basis::M);
  std::vector<QT> w(np);
  for (std::size_t k = 0; k < np; ++k) w[k] = qt_pairing_weight(tab.parts[k]);
  std::vector<std::vector<QT>> gram(np, std::vector<QT>(np));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i; j < np; ++j) {
      QT acc;
      for (std::size_t k = 0; k < np; ++k) {
        if (m2p[i][k] == 0 || m2p[j][k] == 0) continue;
        acc += QT(m2p[i][k] * m2p[j][k]) * w[k];
      }
      gram[i][j] = acc;
      gram[j][i] = std::move(acc);
    }
  return gram;
}

/// Symbolic monic Macdonald polynomials in p coordinates (small degrees and
/// property tests; the production path interpolates instead).
inline std::vector<std::vector<QT>> gram_schmidt_macdonald(int n, const std::vector<int>& order) {
  const auto& tab = symtab::degree_tables(n);
  const std::size_t np = tab.parts.size();
  auto gs = gram_schmidt_monomial<QT>(monomial_gram_qt(n), order);
  const auto& m2p = tab.to_p.at(Basis::M);
  std::vector<std::vector<QT>> out(np, std::vector<QT>(np));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      QT acc;
      for (std::size_t k = 0; k < np; ++k)
        if (!gs.monic_m[i][k].is_zero() && m2p[k][j] != 0) acc += gs.monic_m[i][k] * QT(m2p[k][j]);
      out[i][j] = std::move(acc);
    }
  return out;
}

inline QT pair_p(const std::vector<QT>& a, const std::vector<QT>& b, const std::vector<Partition>& parts) {
  QT out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    out += a[i] * b[i] * qt_pairing_weight(parts[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise pipeline: values of the Schur coefficients of Htilde_mu at one
// rational point (q0, t0), by running Gram-Schmidt at (q0, 1/t0), passing to
// the integral form and applying the modified plethystic normalization.

inline Rat rat_pow(const Rat& x, long e) {
  Rat r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

/// arm/leg product for the integral form: c_mu = prod_s (1 - q^{arm} t^{leg+1}).
inline QT integral_form_factor(const Partition& mu) {
  QT c(1);
  Partition conj = mu.conjugate();
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.parts[i]; ++j) {
      int arm = mu.parts[i] - j - 1;
      int leg = conj.parts[j] - i - 1;
      c *= QT(1) - QT(PolyQT::monomial(1, arm, leg + 1));
    }
  return c;
}

inline Rat integral_form_factor_at(const Partition& mu, const Rat& q0, const Rat& t0) {
  Rat c = 1;
  Partition conj = mu.conjugate();
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.parts[i]; ++j) {
      int arm = mu.parts[i] - j - 1;
      int leg = conj.parts[j] - i - 1;
      c *= Rat(1) - rat_pow(q0, arm) * rat_pow(t0, leg + 1);
    }
  return c;
}

/// htilde_values[i][l] = coefficient of s_{parts[l]} in Htilde_{parts[i]},
/// evaluated at (q0, t0). Throws std::domain_error on a degenerate grid point.
inline std::vector<std::vector<Rat>> htilde_at_point(int n, const Rat& q0, const Rat& t0) {
  const auto& tab = symtab::degree_tables(n);
  const std::size_t np = tab.parts.size();
  const Rat tau = Rat(1) / t0;  // Gram-Schmidt runs at (q0, 1/t0)

  std::vector<Rat> w(np);
  for (std::size_t k = 0; k < np; ++k) {
    Rat v(tab.parts[k].z());
    for (int part : tab.parts[k].parts) {
      Rat den = Rat(1) - rat_pow(tau, part);
      if (den == 0) throw std::domain_error("degenerate grid point");
      v *= (Rat(1) - rat_pow(q0, part)) / den;
    }
    w[k] = v;
  }
  const auto& m2p = tab.to_p.at(Basis::M);
  std::vector<std::vector<Rat>> gram(np, std::vector<Rat>(np, Rat(0)));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i; j < np; ++j) {
      Rat acc = 0;
      for (std::size_t k = 0; k < np; ++k) acc += m2p[i][k] * m2p[j][k] * w[k];
      gram[i][j] = gram[j][i] = acc;
    }
  auto gs = gram_schmidt_monomial<Rat>(gram, ascending_lex_order(n));

  const auto& p2s = tab.from_p.at(Basis::S);
  std::vector<std::vector<Rat>> out(np, std::vector<Rat>(np, Rat(0)));
  for (std::size_t i = 0; i < np; ++i) {
    const Partition& mu = tab.parts[i];
    Rat c = integral_form_factor_at(mu, q0, tau) * rat_pow(t0, mu.n_stat());
    // J_mu in p coordinates at (q0, tau), then the modified normalization
    std::vector<Rat> hp(np, Rat(0));
    for (std::size_t j = 0; j < np; ++j) {
      Rat acc = 0;
      for (std::size_t k = 0; k < np; ++k)
        if (gs.monic_m[i][k] != 0 && m2p[k][j] != 0) acc += gs.monic_m[i][k] * m2p[k][j];
      if (acc == 0) continue;
      Rat pleth = 1;  // prod 1/(1 - t^{-part}) = prod 1/(1 - tau^part)
      for (int part : tab.parts[j].parts) {
        Rat den = Rat(1) - rat_pow(tau, part);
        if (den == 0) throw std::domain_error("degenerate grid point");
        pleth /= den;
      }
      hp[j] = c * acc * pleth;
    }
    for (std::size_t l = 0; l < np; ++l) {
      Rat acc = 0;
      for (std::size_t j = 0; j < np; ++j)
        if (hp[j] != 0 && p2s[j][l] != 0) acc += hp[j] * p2s[j][l];
      out[i][l] = acc;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact interpolation of the (polynomial) Schur coefficients from the grid.

inline std::vector<Rat> newton_interpolate(const std::vector<Rat>& xs, std::vector<Rat> ys) {
  const std::size_t m = xs.size();
  // divided differences in place
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  // expand the Newton form into monomial coefficients
  std::vector<Rat> coeff(m, Rat(0));
  std::vector<Rat> basis(m, Rat(0));  // prod (x - xs[j]), j < level
  basis[0] = 1;
  std::size_t basis_deg = 0;
  for (std::size_t level = 0; level < m; ++level) {
    for (std::size_t k = 0; k <= basis_deg; ++k) coeff[k] += ys[level] * basis[k];
    if (level + 1 < m) {
      // basis *= (x - xs[level])
      ++basis_deg;
      for (std::size_t k = basis_deg; k > 0; --k) basis[k] = basis[k - 1] - xs[level] * basis[k];
      basis[0] = -xs[level] * basis[0];
    }
  }
  return coeff;
}

struct Tables {
  std::vector<Partition> parts;            // descending lex, same as symtab
  std::vector<std::vector<QT>> htilde_s;   // [i][l]: coeff of s_{parts[l]} in Htilde_{parts[i]}
  std::vector<QT> eigenvalue;              // q^{n(mu')} t^{n(mu)} per partition
};

inline const Tables& tables(int n, const Budgets& budgets) {
  if (n > budgets.max_macdonald)
    throw BudgetError("Macdonald degree " + std::to_string(n) + " exceeds the configured maximum " +
                      std::to_string(budgets.max_macdonald));
  static std::mutex guard;
  static std::map<int, Tables> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const auto& tab = symtab::degree_tables(n);
  const std::size_t np = tab.parts.size();
  Tables t;
  t.parts = tab.parts;
  for (std::size_t i = 0; i < np; ++i)
    t.eigenvalue.push_back(QT(PolyQT::monomial(1, static_cast<int>(tab.parts[i].conjugate().n_stat()),
                                               static_cast<int>(tab.parts[i].n_stat()))));

  // Coefficients are polynomials with deg_q <= n(mu') and deg_t <= n(mu),
  // both at most n(n-1)/2; evaluate on a grid one larger in each direction
  // and interpolate. Grid values that degenerate the pairing are skipped.
  const int dmax = n * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>(dmax) + 1;
  std::vector<Rat> ts;
  for (std::size_t j = 0; j < want; ++j) ts.push_back(Rat(2 + static_cast<long>(j)));
  std::vector<Rat> qs;
  std::vector<std::vector<std::vector<std::vector<Rat>>>> values;  // [qi][tj][i][l]
  for (long cand = 2; qs.size() < want && cand < 2 + 8 * static_cast<long>(want); ++cand) {
    std::vector<std::vector<std::vector<Rat>>> column;
    bool ok = true;
    for (const Rat& t0 : ts) {
      try {
        column.push_back(htilde_at_point(n, Rat(cand), t0));
      } catch (const std::domain_error&) {
        ok = false;
        break;
      }
    }
    if (ok) {
      qs.push_back(Rat(cand));
      values.push_back(std::move(column));
    }
  }
  if (qs.size() < want) throw std::logic_error("could not assemble a Macdonald evaluation grid");

  t.htilde_s.assign(np, std::vector<QT>(np));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t l = 0; l < np; ++l) {
      // interpolate in q along each t line, then in t
      std::vector<std::vector<Rat>> qcoef(want);
      for (std::size_t tj = 0; tj < want; ++tj) {
        std::vector<Rat> line(want);
        for (std::size_t qi = 0; qi < want; ++qi) line[qi] = values[qi][tj][i][l];
        qcoef[tj] = newton_interpolate(qs, std::move(line));
      }
      QT entry;
      for (std::size_t k = 0; k < want; ++k) {
        std::vector<Rat> tline(want);
        for (std::size_t tj = 0; tj < want; ++tj) tline[tj] = qcoef[tj][k];
        auto tc = newton_interpolate(ts, std::move(tline));
        for (std::size_t l2 = 0; l2 < want; ++l2)
          if (tc[l2] != 0)
            entry += QT(tc[l2]) * QT(PolyQT::monomial(1, static_cast<int>(k), static_cast<int>(l2)));
      }
      t.htilde_s[i][l] = std::move(entry);
    }

  // Holdout validation: the interpolated family must reproduce a fresh
  // off-grid evaluation exactly.
  {
    Rat q0(2 * dmax + 5), t0(Rat(1, 3));
    auto fresh = htilde_at_point(n, q0, t0);
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t l = 0; l < np; ++l)
        if (t.htilde_s[i][l].evaluate(q0, t0) != fresh[i][l])
          throw std::logic_error("Macdonald interpolation failed its holdout check");
  }

  return cache.emplace(n, std::move(t)).first->second;
}

// Fraction-free Gaussian elimination (Bareiss) solving A y = rhs over Z[q,t].
// Returns (x, d) with y_i = x_i / d; d is the determinant up to a sign shared
// with the x_i, so the ratios are exact.
inline std::pair<std::vector<PolyQT>, PolyQT> bareiss_solve(std::vector<std::vector<PolyQT>> a,
                                                            const std::vector<PolyQT>& rhs) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
  PolyQT prev(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular system in fraction-free solve");
    if (piv != col) std::swap(a[piv], a[col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j <= n; ++j)
        a[i][j] = divexact(a[i][j] * a[col][col] - a[i][col] * a[col][j], prev);
      a[i][col] = PolyQT();
    }
    prev = a[col][col];
  }
  const PolyQT& d = a[n - 1][n - 1];
  std::vector<PolyQT> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    PolyQT acc = a[ii][n] * d;
    for (std::size_t j = ii + 1; j < n; ++j) acc = acc - a[ii][j] * x[j];
    x[ii] = divexact(acc, a[ii][ii]);
  }
  return {std::move(x), d};
}

}  // namespace macdetail

/// The modified Macdonald polynomial in the Schur basis.
inline SymFunc macdonald_modified(const Partition& mu, const Budgets& budgets = default_budgets()) {
  const auto& t = macdetail::tables(mu.size(), budgets);
  const auto& tab = symtab::degree_tables(mu.size());
  std::map<Partition, QT> terms;
  const auto& row = t.htilde_s[tab.index.at(mu)];
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) terms[t.parts[j]] = row[j];
  return make_symfunc(Basis::S, mu.size(), std::move(terms));
}

/// Expand f in the modified Macdonald basis.
inline SymFunc to_macdonald_basis(const SymFunc& f, const Budgets& budgets = default_budgets()) {
  if (f.basis == Basis::Ht) return f;
  const auto& t = macdetail::tables(f.degree, budgets);
  const auto& tab = symtab::degree_tables(f.degree);
  const std::size_t np = tab.parts.size();
  Budgets conv = budgets;
  conv.max_degree = std::max(conv.max_degree, f.degree);
  SymFunc fs = convert(f, Basis::S, conv);

  // Clear denominators of the right-hand side.
  PolyQT common(1);
  for (const auto& [la, c] : fs.terms)
    if (!c.is_polynomial()) common = divexact(common * c.den, gcd(common, c.den));
  std::vector<PolyQT> rhs(np);
  for (const auto& [la, c] : fs.terms) {
    QT scaled = c * QT(common);
    if (!scaled.is_polynomial()) throw std::logic_error("denominator clearing failed");
    rhs[tab.index.at(la)] = scaled.num;
  }
  std::vector<std::vector<PolyQT>> a(np, std::vector<PolyQT>(np));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      const QT& e = t.htilde_s[j][i];  // transpose: unknowns indexed by mu = j
      if (!e.is_polynomial()) throw std::logic_error("Macdonald table entry is not polynomial");
      a[i][j] = e.num;
    }
  auto [nums, det] = macdetail::bareiss_solve(std::move(a), std::move(rhs));
  std::map<Partition, QT> terms;
  for (std::size_t j = 0; j < np; ++j) {
    QT y = QT(nums[j], det) / QT(common);
    if (!y.is_zero()) terms[tab.parts[j]] = std::move(y);
  }
  return make_symfunc(Basis::Ht, f.degree, std::move(terms));
}

/// Expand a Macdonald-basis function in a classical basis.
inline SymFunc from_macdonald_basis(const SymFunc& f, Basis target, const Budgets& budgets = default_budgets()) {
  if (f.basis != Basis::Ht) throw std::invalid_argument("input is not in the Macdonald basis");
  const auto& t = macdetail::tables(f.degree, budgets);
  const auto& tab = symtab::degree_tables(f.degree);
  std::map<Partition, QT> terms;
  for (const auto& [mu, c] : f.terms) {
    const auto& row = t.htilde_s[tab.index.at(mu)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) terms[t.parts[j]] += c * row[j];
  }
  SymFunc in_s = make_symfunc(Basis::S, f.degree, std::move(terms));
  if (target == Basis::S) return in_s;
  Budgets conv = budgets;
  conv.max_degree = std::max(conv.max_degree, f.degree);
  return convert(in_s, target, conv);
}

namespace macdetail {

inline SymFunc scale_eigen(const SymFunc& f, bool inverse, const Budgets& budgets) {
  const Basis original = f.basis;
  const auto& t = tables(f.degree, budgets);
  const auto& tab = symtab::degree_tables(f.degree);
  SymFunc ht = to_macdonald_basis(f, budgets);
  std::map<Partition, QT> terms;
  for (const auto& [mu, c] : ht.terms) {
    const QT& ev = t.eigenvalue[tab.index.at(mu)];
    terms[mu] = inverse ? c / ev : c * ev;
  }
  SymFunc scaled = make_symfunc(Basis::Ht, f.degree, std::move(terms));
  return original == Basis::Ht ? scaled : from_macdonald_basis(scaled, original, budgets);
}

}  // namespace macdetail

/// The nabla operator: diagonal on the modified Macdonald basis with
/// eigenvalue q^{n(mu')} t^{n(mu)}; the result stays in f's basis.
inline SymFunc nabla(const SymFunc& f, const Budgets& budgets = default_budgets()) {
  return macdetail::scale_eigen(f, false, budgets);
}

inline SymFunc nabla_inverse(const SymFunc& f, const Budgets& budgets = default_budgets()) {
  return macdetail::scale_eigen(f, true, budgets);
}

/// nabla e_n in the Schur basis, cached.
inline const SymFunc& nabla_e(int n, const Budgets& budgets = default_budgets()) {
  if (n > budgets.max_macdonald)
    throw BudgetError("Macdonald degree " + std::to_string(n) + " exceeds the configured maximum " +
                      std::to_string(budgets.max_macdonald));
  static std::mutex guard;
  static std::map<int, SymFunc> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Budgets conv = budgets;
  conv.max_degree = std::max(conv.max_degree, n);
  SymFunc v = nabla(convert(sf_e(n), Basis::S, conv), budgets);
  return cache.emplace(n, std::move(v)).first->second;
}

}  // namespace coxcat
