#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxcat/bigint.hpp"
#include "coxcat/partition.hpp"
#include "coxcat/symfunc.hpp"

namespace coxcat {

/// Classical Dyck path in area-vector form: a_1 = 0, 0 <= a_{i+1} <= a_i + 1.
/// Rows are numbered bottom to top; a_i counts the full cells between the
/// path and the diagonal in row i.
struct DyckPath {
  std::vector<int> area_vector;

  explicit DyckPath(std::vector<int> a) : area_vector(std::move(a)) {
    for (std::size_t i = 0; i < area_vector.size(); ++i) {
      if (area_vector[i] < 0 || (i == 0 && area_vector[0] != 0) ||
          (i > 0 && area_vector[i] > area_vector[i - 1] + 1))
        throw std::invalid_argument("invalid area vector");
    }
  }

  int size() const { return static_cast<int>(area_vector.size()); }

  long area() const {
    long s = 0;
    for (int a : area_vector) s += a;
    return s;
  }

  /// Lengths of the maximal vertical runs, bottom to top. Rows i and i+1
  /// belong to the same run exactly when a_{i+1} = a_i + 1.
  std::vector<int> runs() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
      if (i == 0 || area_vector[i] != area_vector[i - 1] + 1)
        out.push_back(1);
      else
        ++out.back();
    }
    return out;
  }

  bool operator==(const DyckPath& o) const { return area_vector == o.area_vector; }
};

/// Vertical-run multiplicity profile: mult[j] runs of length j (j >= 1), and
/// m0 empty slots so that m0 + sum_j mult[j] equals the defining bound.
struct RunStructure {
  long bound = 0;
  std::vector<int> mult;  // index 0 unused
  long m0 = 0;
};

inline RunStructure run_structure(const Partition& la, long bound) {
  RunStructure rs;
  rs.bound = bound;
  int maxpart = la.parts.empty() ? 0 : la.parts[0];
  rs.mult.assign(maxpart + 1, 0);
  for (int p : la.parts) ++rs.mult[p];
  rs.m0 = bound - la.length();
  return rs;
}

inline RunStructure run_structure(const DyckPath& d, long bound) {
  std::vector<int> r = d.runs();
  std::sort(r.begin(), r.end(), std::greater<int>());
  return run_structure(Partition(std::move(r)), bound);
}

/// Labeled Dyck path. Labels sit on the rows and must increase strictly up
/// each vertical run; classical parking functions use each of 1..n once.
struct ParkingFunction {
  DyckPath path;
  std::vector<int> labels;

  ParkingFunction(DyckPath p, std::vector<int> l) : path(std::move(p)), labels(std::move(l)) {
    if (labels.size() != path.area_vector.size())
      throw std::invalid_argument("label count does not match path size");
    for (std::size_t i = 1; i < labels.size(); ++i)
      if (path.area_vector[i] == path.area_vector[i - 1] + 1 && labels[i] <= labels[i - 1])
        throw std::invalid_argument("labels must increase up each vertical run");
  }

  bool operator==(const ParkingFunction& o) const {
    return path == o.path && labels == o.labels;
  }
};

inline long area(const ParkingFunction& pf) { return pf.path.area(); }

/// dinv: pairs i < j with equal area and increasing labels, plus pairs with
/// a_i = a_j + 1 and decreasing labels.
inline long dinv(const ParkingFunction& pf) {
  const auto& a = pf.path.area_vector;
  const auto& l = pf.labels;
  long d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j] && l[i] < l[j]) ++d;
      if (a[i] == a[j] + 1 && l[i] > l[j]) ++d;
    }
  return d;
}

/// All Dyck paths of size n, in ascending lexicographic order of area vectors.
inline std::vector<DyckPath> enumerate_dyck(int n) {
  if (n < 0 || n > 12) throw BudgetError("Dyck path enumeration supports 0 <= n <= 12");
  std::vector<DyckPath> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(DyckPath(cur));
      return;
    }
    int hi = cur.empty() ? 0 : cur.back() + 1;
    for (int v = 0; v <= hi; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace parkdetail {

// Distribute `values` (multiset given by remaining multiplicities, value v of
// weight v-index) into the runs, one strictly increasing set per run; calls
// sink for every complete labeling, labels emitted bottom to top.
inline void assign_runs(const std::vector<int>& run_lengths, std::size_t run_idx,
                        std::vector<int>& remaining, std::vector<int>& labels,
                        const std::function<void(const std::vector<int>&)>& sink) {
  if (run_idx == run_lengths.size()) {
    sink(labels);
    return;
  }
  const int len = run_lengths[run_idx];
  // choose an increasing sequence of distinct values with multiplicity left
  std::vector<int> chosen;
  auto choose = [&](auto&& self, int minval) -> void {
    if (static_cast<int>(chosen.size()) == len) {
      assign_runs(run_lengths, run_idx + 1, remaining, labels, sink);
      return;
    }
    for (int v = minval; v < static_cast<int>(remaining.size()); ++v) {
      if (remaining[v] == 0) continue;
      --remaining[v];
      chosen.push_back(v);
      labels.push_back(v);
      self(self, v + 1);
      labels.pop_back();
      chosen.pop_back();
      ++remaining[v];
    }
  };
  choose(choose, 1);
}

}  // namespace parkdetail

/// All classical parking functions on n cars, grouped by path (paths in lex
/// order, labelings in lex order of the label vector).
inline std::vector<ParkingFunction> enumerate_parking_functions(int n) {
  if (n < 0 || n > 8) throw BudgetError("parking function enumeration supports 0 <= n <= 8");
  std::vector<ParkingFunction> out;
  for (const DyckPath& d : enumerate_dyck(n)) {
    std::vector<int> remaining(n + 1, 1);
    remaining[0] = 0;
    std::vector<int> labels;
    parkdetail::assign_runs(d.runs(), 0, remaining, labels,
                            [&](const std::vector<int>& l) { out.emplace_back(d, l); });
  }
  return out;
}

/// The parking-function generating sum  sum_pf q^{area} t^{dinv} x_pf,
/// collected in the monomial basis over label contents of size n. Equals
/// nabla e_n expanded in monomials.
inline SymFunc shuffle_sum(int n) {
  if (n < 0 || n > 8) throw BudgetError("shuffle sum supports 0 <= n <= 8");
  std::map<Partition, QT> terms;
  auto paths = enumerate_dyck(n);
  for (const Partition& la : partitions_of(n)) {
    PolyQT acc;
    for (const DyckPath& d : paths) {
      std::vector<int> remaining(la.length() + 1, 0);
      for (int i = 0; i < la.length(); ++i) remaining[i + 1] = la.parts[i];
      std::vector<int> labels;
      parkdetail::assign_runs(d.runs(), 0, remaining, labels, [&](const std::vector<int>& l) {
        ParkingFunction pf(d, l);
        acc = acc + PolyQT::monomial(1, static_cast<int>(area(pf)), static_cast<int>(dinv(pf)));
      });
    }
    if (!acc.is_zero()) terms[la] = QT(std::move(acc));
  }
  return make_symfunc(Basis::M, n, std::move(terms));
}

/// Number of W-orbits on Q/lQ in type A_{n-1} whose stabilizer has Young type
/// la: the run-structure multinomial (l-1)! / (m_0! m_1! ... m_n!).
inline Rat kreweras_type_a_rational(int n, long l, const Partition& la) {
  if (la.size() != n) throw std::invalid_argument("partition size must equal n");
  RunStructure rs = run_structure(la, l);
  if (rs.m0 < 0) return 0;  // more runs than slots: no such path
  Rat v = Rat(factorial(l - 1));
  v /= Rat(factorial(rs.m0));
  for (std::size_t j = 1; j < rs.mult.size(); ++j) v /= Rat(factorial(rs.mult[j]));
  return v;
}

inline Int kreweras_type_a(int n, long l, const Partition& la) {
  if (la.size() == n && l < la.length())
    throw std::domain_error("l = " + std::to_string(l) +
                            " is smaller than the number of parts of " + la.str());
  Rat v = kreweras_type_a_rational(n, l, la);
  if (!is_integer(v))
    throw std::domain_error("Kreweras count is not integral at l = " + std::to_string(l) +
                            " (needs gcd(l, n) = 1): " + v.str());
  return numerator(v);
}

// ---------------------------------------------------------------------------
// Rational (m,n) lattice paths: represented and counted, statistics are out
// of scope. x[i] = number of east steps before the i-th north step; the path
// stays weakly above the line from (0,0) to (m,n).
struct RationalLatticePath {
  long m = 0;
  int n = 0;
  std::vector<long> x;

  RationalLatticePath(long m_, int n_, std::vector<long> x_) : m(m_), n(n_), x(std::move(x_)) {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("need one offset per north step");
    for (int i = 0; i < n; ++i) {
      if (x[i] < 0 || (i > 0 && x[i] < x[i - 1]) || x[i] > m)
        throw std::invalid_argument("offsets must be increasing and within the rectangle");
      if (x[i] * n > static_cast<long>(i) * m)
        throw std::invalid_argument("path dips below the diagonal");
    }
  }
};

inline std::vector<RationalLatticePath> enumerate_rational_paths(long m, int n) {
  if (n < 0 || n > 10 || m < 1) throw BudgetError("rational path enumeration supports n <= 10");
  std::vector<RationalLatticePath> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self) -> void {
    int i = static_cast<int>(cur.size());
    if (i == n) {
      out.push_back(RationalLatticePath(m, n, cur));
      return;
    }
    long lo = cur.empty() ? 0 : cur.back();
    long hi = (static_cast<long>(i) * m) / n;
    for (long v = lo; v <= hi; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline nlohmann::json to_json(const ParkingFunction& pf) {
  return nlohmann::json{{"area_vector", pf.path.area_vector}, {"labels", pf.labels}};
}

inline ParkingFunction parking_function_from_json(const nlohmann::json& j) {
  return ParkingFunction(DyckPath(j.at("area_vector").get<std::vector<int>>()),
                         j.at("labels").get<std::vector<int>>());
}

/// One row per stabilizer type: the Kreweras census of type A_{n-1} at l.
inline std::string kreweras_table_csv(int n, long l) {
  std::ostringstream out;
  out << "lambda,kreweras\n";
  for (const auto& la : partitions_of(n))
    out << '"' << la.str() << "\"," << kreweras_type_a_rational(n, l, la) << '\n';
  return out.str();
}

}  // namespace coxcat
