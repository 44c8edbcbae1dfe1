#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcat/bigint.hpp"
#include "coxcat/partition.hpp"
#include "coxcat/qt_parse.hpp"
#include "coxcat/qt_rational.hpp"
#include "coxcat/weyl.hpp"  // Budgets

namespace coxcat {

enum class Basis { E, H, M, P, S, Ht };

inline std::string basis_tag(Basis b) {
  switch (b) {
    case Basis::E: return "e";
    case Basis::H: return "h";
    case Basis::M: return "m";
    case Basis::P: return "p";
    case Basis::S: return "s";
    case Basis::Ht: return "Ht";
  }
  return "?";
}

inline Basis parse_basis(const std::string& s) {
  if (s == "e") return Basis::E;
  if (s == "h") return Basis::H;
  if (s == "m") return Basis::M;
  if (s == "p") return Basis::P;
  if (s == "s") return Basis::S;
  if (s == "Ht" || s == "ht") return Basis::Ht;
  throw std::invalid_argument("unknown basis tag '" + s + "'");
}

/// Homogeneous symmetric function: coefficients over Q(q,t) on partitions of
/// one fixed size, in one named basis. Zero coefficients are never stored.
struct SymFunc {
  Basis basis = Basis::P;
  int degree = 0;
  std::map<Partition, QT> terms;

  bool is_zero() const { return terms.empty(); }

  QT coeff(const Partition& la) const {
    auto it = terms.find(la);
    return it == terms.end() ? QT() : it->second;
  }
};

inline SymFunc make_symfunc(Basis b, int degree, std::map<Partition, QT> terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != degree)
      throw std::invalid_argument("inhomogeneous term " + it->first.str() + " in degree " +
                                  std::to_string(degree));
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  return SymFunc{b, degree, std::move(terms)};
}

inline SymFunc operator+(const SymFunc& f, const SymFunc& g) {
  if (f.basis != g.basis || f.degree != g.degree)
    throw std::invalid_argument("cannot add symmetric functions in different bases or degrees");
  auto terms = f.terms;
  for (const auto& [la, c] : g.terms) {
    auto [it, fresh] = terms.emplace(la, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return SymFunc{f.basis, f.degree, std::move(terms)};
}

inline SymFunc operator*(const QT& c, const SymFunc& f) {
  SymFunc r{f.basis, f.degree, {}};
  if (c.is_zero()) return r;
  for (const auto& [la, v] : f.terms) r.terms.emplace(la, c * v);
  return r;
}

inline SymFunc operator-(const SymFunc& f, const SymFunc& g) { return f + (QT(-1) * g); }

inline bool operator==(const SymFunc& f, const SymFunc& g) {
  return f.basis == g.basis && f.degree == g.degree && f.terms == g.terms;
}

// ---------------------------------------------------------------------------
// Per-degree transition tables between {e,h,m,p,s} and the power-sum basis.
// All entries are plain rationals (no q,t), computed once and cached.

namespace symtab {

using RVec = std::map<Partition, Rat>;  // sparse vector over partitions (p-basis)

inline RVec multiply_by_power_sum(const RVec& v, int r) {
  RVec out;
  for (const auto& [la, c] : v) {
    std::vector<int> parts = la.parts;
    parts.insert(std::upper_bound(parts.begin(), parts.end(), r, std::greater<int>()), r);
    out[Partition(std::move(parts))] += c;
  }
  return out;
}

// Newton recurrences for e_k and h_k in the p basis.
inline std::vector<RVec> one_row_generators(int n, bool elementary) {
  std::vector<RVec> gen(n + 1);
  gen[0] = {{Partition{}, Rat(1)}};
  for (int k = 1; k <= n; ++k) {
    RVec acc;
    for (int j = 1; j <= k; ++j) {
      Rat sign = (elementary && j % 2 == 0) ? Rat(-1) : Rat(1);
      for (const auto& [la, c] : multiply_by_power_sum(gen[k - j], j)) acc[la] += sign * c;
    }
    for (auto& [la, c] : acc) c /= k;
    gen[k] = std::move(acc);
  }
  return gen;
}

// Coefficient of m_nu in p_r * m_mu, summed symbolically over nu.
inline std::map<Partition, Int> power_times_monomial(const Partition& mu, int r) {
  std::map<Partition, Int> out;
  {  // new part r
    std::vector<int> parts = mu.parts;
    parts.insert(std::upper_bound(parts.begin(), parts.end(), r, std::greater<int>()), r);
    Partition nu(std::move(parts));
    out[nu] += nu.multiplicity(r);
  }
  std::vector<int> distinct;
  for (int w : mu.parts)
    if (distinct.empty() || distinct.back() != w) distinct.push_back(w);
  for (int w : distinct) {  // grow one part w to w + r
    std::vector<int> parts = mu.parts;
    parts.erase(std::find(parts.begin(), parts.end(), w));
    parts.insert(std::upper_bound(parts.begin(), parts.end(), w + r, std::greater<int>()), w + r);
    Partition nu(std::move(parts));
    out[nu] += nu.multiplicity(w + r);
  }
  return out;
}

// Murnaghan-Nakayama character chi^lambda(mu) via beta-numbers.
inline Int mn_character(const Partition& la, const Partition& mu) {
  static std::mutex mu_guard;
  static std::map<std::pair<Partition, Partition>, Int> memo;

  std::function<Int(std::vector<int>, const Partition&, std::size_t)> rec =
      [&](std::vector<int> beta, const Partition& m, std::size_t mi) -> Int {
    // beta: strictly increasing beta-numbers of the remaining shape
    if (mi == m.parts.size()) return 1;
    const int r = m.parts[mi];
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int target = beta[i] - r;
      if (target < 0) continue;
      if (std::binary_search(beta.begin(), beta.end(), target)) continue;
      auto nb = beta;
      nb.erase(nb.begin() + i);
      auto pos = std::lower_bound(nb.begin(), nb.end(), target);
      std::size_t height = (nb.begin() + i) - pos;  // entries jumped over
      nb.insert(pos, target);
      Int sub = rec(std::move(nb), m, mi + 1);
      total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
  };

  {
    std::lock_guard<std::mutex> lock(mu_guard);
    auto it = memo.find({la, mu});
    if (it != memo.end()) return it->second;
  }
  const int len = la.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = la.parts[len - 1 - i] + i;  // increasing
  Int value = rec(std::move(beta), mu, 0);
  std::lock_guard<std::mutex> lock(mu_guard);
  memo.emplace(std::make_pair(la, mu), value);
  return value;
}

struct Tables {
  std::vector<Partition> parts;       // descending lex
  std::map<Partition, int> index;
  // to_p[b][i][j]: coefficient of p_{parts[j]} in b_{parts[i]}
  std::map<Basis, std::vector<std::vector<Rat>>> to_p, from_p;
};

inline std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("transition matrix is singular; this is a bug");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline const Tables& degree_tables(int n) {
  static std::mutex guard;
  static std::map<int, Tables> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Tables t;
  t.parts = partitions_of(n);
  const int np = static_cast<int>(t.parts.size());
  for (int i = 0; i < np; ++i) t.index[t.parts[i]] = i;
  auto dense = [&](const RVec& v) {
    std::vector<Rat> row(np, Rat(0));
    for (const auto& [la, c] : v) row[t.index.at(la)] = c;
    return row;
  };

  auto e1 = one_row_generators(n, true);
  auto h1 = one_row_generators(n, false);
  auto product_rows = [&](const std::vector<RVec>& gen) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& la : t.parts) {
      RVec acc{{Partition{}, Rat(1)}};
      for (int part : la.parts) {
        RVec next;
        for (const auto& [nu, c] : acc)
          for (const auto& [rho, d] : gen[part]) {
            std::vector<int> merged = nu.parts;
            for (int x : rho.parts)
              merged.insert(std::upper_bound(merged.begin(), merged.end(), x, std::greater<int>()), x);
            next[Partition(std::move(merged))] += c * d;
          }
        acc = std::move(next);
      }
      rows.push_back(dense(acc));
    }
    return rows;
  };
  t.to_p[Basis::E] = product_rows(e1);
  t.to_p[Basis::H] = product_rows(h1);

  // p_la in the m basis, then invert for m -> p.
  std::vector<std::vector<Rat>> p2m(np, std::vector<Rat>(np, Rat(0)));
  for (int i = 0; i < np; ++i) {
    std::map<Partition, Int> acc{{Partition{}, Int(1)}};
    for (int part : t.parts[i].parts) {
      std::map<Partition, Int> next;
      for (const auto& [nu, c] : acc)
        for (const auto& [rho, d] : power_times_monomial(nu, part)) next[rho] += c * d;
      acc = std::move(next);
    }
    for (const auto& [nu, c] : acc) p2m[i][t.index.at(nu)] = Rat(c);
  }
  t.to_p[Basis::M] = invert(p2m);

  // s_la = sum_mu chi^la(mu)/z_mu p_mu
  std::vector<std::vector<Rat>> s2p(np, std::vector<Rat>(np, Rat(0)));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      Int chi = mn_character(t.parts[i], t.parts[j]);
      if (chi != 0) s2p[i][j] = Rat(chi, t.parts[j].z());
    }
  t.to_p[Basis::S] = std::move(s2p);

  std::vector<std::vector<Rat>> id(np, std::vector<Rat>(np, Rat(0)));
  for (int i = 0; i < np; ++i) id[i][i] = 1;
  t.to_p[Basis::P] = id;
  t.from_p[Basis::P] = id;
  for (Basis b : {Basis::E, Basis::H, Basis::M, Basis::S}) t.from_p[b] = invert(t.to_p[b]);

  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace symtab

// ---------------------------------------------------------------------------
// Conversions and the Hall inner product

namespace detail {

inline void check_degree_budget(int degree, const Budgets& budgets) {
  if (degree > budgets.max_degree)
    throw BudgetError("degree " + std::to_string(degree) + " exceeds the configured maximum " +
                      std::to_string(budgets.max_degree));
}

inline std::vector<QT> to_p_coords(const SymFunc& f) {
  const auto& tab = symtab::degree_tables(f.degree);
  std::vector<QT> out(tab.parts.size());
  const auto& rows = tab.to_p.at(f.basis);
  for (const auto& [la, c] : f.terms) {
    const auto& row = rows[tab.index.at(la)];
    for (std::size_t j = 0; j < out.size(); ++j)
      if (row[j] != 0) out[j] += c * QT(row[j]);
  }
  return out;
}

inline SymFunc from_p_coords(Basis b, int degree, const std::vector<QT>& coords) {
  const auto& tab = symtab::degree_tables(degree);
  const auto& rows = tab.from_p.at(b);
  std::map<Partition, QT> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < coords.size(); ++j)
      if (rows[i][j] != 0) terms[tab.parts[j]] += coords[i] * QT(rows[i][j]);
  }
  return make_symfunc(b, degree, std::move(terms));
}

}  // namespace detail

/// Change of basis among {e, h, m, p, s}. The modified-Macdonald basis has
/// its own conversions in macdonald.hpp (its coefficients live in Q(q,t)).
inline SymFunc convert(const SymFunc& f, Basis target, const Budgets& budgets = default_budgets()) {
  if (f.basis == Basis::Ht || target == Basis::Ht)
    throw std::invalid_argument("Macdonald-basis conversions live in macdonald.hpp");
  detail::check_degree_budget(f.degree, budgets);
  if (f.basis == target) return f;
  return detail::from_p_coords(target, f.degree, detail::to_p_coords(f));
}

/// Hall inner product: <p_la, p_mu> = delta z_la; distinct degrees pair to 0.
inline QT hall_inner(const SymFunc& f, const SymFunc& g) {
  if (f.degree != g.degree) return QT();
  auto a = detail::to_p_coords(f);
  auto b = detail::to_p_coords(g);
  const auto& tab = symtab::degree_tables(f.degree);
  QT out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    out += a[i] * b[i] * QT(Rat(tab.parts[i].z()));
  }
  return out;
}

/// The classical involution: p_k -> (-1)^{k-1} p_k, so omega e_la = h_la and
/// omega s_la = s_{la'}.
inline SymFunc omega(const SymFunc& f) {
  auto coords = detail::to_p_coords(f);
  const auto& tab = symtab::degree_tables(f.degree);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int sign = (f.degree - tab.parts[i].length()) % 2 ? -1 : 1;
    if (sign < 0) coords[i] = -coords[i];
  }
  return detail::from_p_coords(f.basis, f.degree, coords);
}

/// Scalar plethysm p_k -> c_k p_k for a caller-supplied rule.
inline SymFunc plethystic_scale(const SymFunc& f, const std::function<QT(int)>& rule) {
  auto coords = detail::to_p_coords(f);
  const auto& tab = symtab::degree_tables(f.degree);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (int part : tab.parts[i].parts) coords[i] *= rule(part);
  }
  return detail::from_p_coords(f.basis, f.degree, coords);
}

inline std::map<Partition, Rat> evaluate_qt(const SymFunc& f, const Rat& q0, const Rat& t0) {
  std::map<Partition, Rat> out;
  for (const auto& [la, c] : f.terms) out[la] = c.evaluate(q0, t0);
  return out;
}

/// Product, computed in the p basis (partition concatenation).
inline SymFunc sym_mul(const SymFunc& f, const SymFunc& g, Basis out_basis) {
  auto a = detail::to_p_coords(f);
  auto b = detail::to_p_coords(g);
  const auto& ta = symtab::degree_tables(f.degree);
  const auto& tb = symtab::degree_tables(g.degree);
  std::map<Partition, QT> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      std::vector<int> merged = ta.parts[i].parts;
      for (int x : tb.parts[j].parts)
        merged.insert(std::upper_bound(merged.begin(), merged.end(), x, std::greater<int>()), x);
      terms[Partition(std::move(merged))] += a[i] * b[j];
    }
  }
  SymFunc prod = make_symfunc(Basis::P, f.degree + g.degree, std::move(terms));
  return convert(prod, out_basis);
}

// Single-row generators.
inline SymFunc sf_generator(Basis b, const Partition& la) {
  return make_symfunc(b, la.size(), {{la, QT(1)}});
}
inline SymFunc sf_e(const Partition& la) { return sf_generator(Basis::E, la); }
inline SymFunc sf_e(int n) { return sf_e(Partition{std::vector<int>(1, n)}); }
inline SymFunc sf_h(const Partition& la) { return sf_generator(Basis::H, la); }
inline SymFunc sf_m(const Partition& la) { return sf_generator(Basis::M, la); }
inline SymFunc sf_p(const Partition& la) { return sf_generator(Basis::P, la); }
inline SymFunc sf_s(const Partition& la) { return sf_generator(Basis::S, la); }

// ---------------------------------------------------------------------------
// Text form: "1*s[2] + (q+t)*s[1,1]", partitions in descending lex order.

inline std::string to_string(const SymFunc& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const QT& c = it->second;
    bool bare = c.is_polynomial() && c.num.terms.size() == 1 && c.num.leading_coeff() > 0;
    out << (bare ? c.str() : "(" + c.str() + ")");
    out << '*' << basis_tag(f.basis) << it->first.str();
  }
  return out.str();
}

/// Parse the grammar printed by to_string; terms may appear in any order and
/// the coefficient (with its '*') may be omitted.
inline SymFunc parse_symfunc(const std::string& s) {
  struct Term { QT coeff; Basis basis; Partition la; };
  std::vector<Term> parsed;
  std::size_t pos = 0;
  int sign = 1;
  auto skip = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
  skip();
  if (pos == s.size()) throw std::invalid_argument("empty symmetric function");
  if (s.compare(pos, 1, "0") == 0 && pos + 1 == s.size()) return SymFunc{};
  while (pos < s.size()) {
    skip();
    if (!parsed.empty()) {
      if (s[pos] == '+') { sign = 1; ++pos; }
      else if (s[pos] == '-') { sign = -1; ++pos; }
      else throw std::invalid_argument("expected '+' or '-' between terms in \"" + s + "\"");
      skip();
    }
    // locate the basis token of this term: first of e,h,m,p,s,H followed by '[' (or "t[")
    std::size_t bpos = std::string::npos;
    int depth = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
      char c = s[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth != 0) continue;
      if ((c == 'e' || c == 'h' || c == 'm' || c == 'p' || c == 's') && i + 1 < s.size() && s[i + 1] == '[') {
        bpos = i;
        break;
      }
      if (c == 'H' && i + 2 < s.size() && s[i + 1] == 't' && s[i + 2] == '[') {
        bpos = i;
        break;
      }
    }
    if (bpos == std::string::npos) throw std::invalid_argument("no basis term found in \"" + s + "\"");
    QT coeff(1);
    std::string prefix = s.substr(pos, bpos - pos);
    while (!prefix.empty() && (std::isspace(static_cast<unsigned char>(prefix.back())) || prefix.back() == '*'))
      prefix.pop_back();
    if (!prefix.empty()) coeff = parse_qt(prefix);
    Basis basis = s[bpos] == 'H' ? Basis::Ht : parse_basis(std::string(1, s[bpos]));
    pos = bpos + (basis == Basis::Ht ? 2 : 1);
    std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated partition in \"" + s + "\"");
    Partition la = parse_partition(s.substr(pos, close - pos + 1));
    pos = close + 1;
    parsed.push_back({sign < 0 ? -coeff : coeff, basis, la});
    skip();
  }
  std::map<Partition, QT> terms;
  for (const auto& t : parsed) {
    if (t.basis != parsed[0].basis) throw std::invalid_argument("mixed bases in \"" + s + "\"");
    if (t.la.size() != parsed[0].la.size()) throw std::invalid_argument("inhomogeneous input \"" + s + "\"");
    terms[t.la] += t.coeff;
  }
  return make_symfunc(parsed[0].basis, parsed[0].la.size(), std::move(terms));
}

}  // namespace coxcat
