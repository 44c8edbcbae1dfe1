#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxcat/bigint.hpp"
#include "coxcat/catalan.hpp"
#include "coxcat/imat.hpp"
#include "coxcat/parabolic.hpp"
#include "coxcat/root_system.hpp"
#include "coxcat/smith.hpp"
#include "coxcat/weyl.hpp"

namespace coxcat {

struct TorusPoint {
  std::vector<std::int64_t> coords;  // residues in [0, m), simple-coroot coordinates
  std::int64_t modulus;
};

inline TorusPoint make_torus_point(std::vector<std::int64_t> coords, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  for (auto& c : coords) c = ((c % m) + m) % m;
  return TorusPoint{std::move(coords), m};
}

inline TorusPoint act(const IMat& w, const TorusPoint& p) {
  if (w.n != static_cast<int>(p.coords.size()))
    throw std::invalid_argument("element rank does not match point dimension");
  auto v = w.apply(p.coords);
  return make_torus_point(std::move(v), p.modulus);
}

/// |{p in (Z/m)^r : w p = p}| from the elementary divisors of w - I.
inline Int fixed_point_count_from_divisors(const std::vector<Int>& divisors, long m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  Int count = 1;
  for (const Int& d : divisors)
    count *= (d == 0) ? Int(m) : gcd_int(Int(m), d);
  return count;
}

inline Int fixed_point_count(const IMat& w, long m) {
  IMat d = w;
  for (int i = 0; i < w.n; ++i) d(i, i) -= 1;
  return fixed_point_count_from_divisors(smith_elementary_divisors(d), m);
}

inline Int burnside_orbit_count(const RootSystem& rs, long m, const Budgets& budgets = default_budgets()) {
  auto g = weyl_group(rs, budgets);
  Int total = 0;
  for (std::size_t k = 0; k < g->elements().size(); ++k)
    total += fixed_point_count_from_divisors(g->divisors(k), m);
  return exact_div(total, g->order());
}

enum class Character { Trivial, Sign };

/// Multiplicity of the trivial or sign character of H in C[Q/mQ]; H defaults
/// to the full Weyl group.
inline Int isotypic_multiplicity(const RootSystem& rs, long m, Character chi,
                                 const ParabolicSubgroup* subgroup = nullptr,
                                 const Budgets& budgets = default_budgets()) {
  Int total = 0, order;
  if (subgroup) {
    order = Int(subgroup->elements.size());
    for (std::size_t k = 0; k < subgroup->elements.size(); ++k) {
      Int f = fixed_point_count(subgroup->elements[k], m);
      total += (chi == Character::Sign && subgroup->signs[k] < 0) ? -f : f;
    }
  } else {
    auto g = weyl_group(rs, budgets);
    order = g->order();
    for (std::size_t k = 0; k < g->elements().size(); ++k) {
      Int f = fixed_point_count_from_divisors(g->divisors(k), m);
      total += (chi == Character::Sign && g->elements()[k].length_parity < 0) ? -f : f;
    }
  }
  if (total < 0 || total % order != 0)
    throw std::logic_error("isotypic multiplicity came out non-integral; this is a bug");
  return total / order;
}

/// prod_i (m - e_i) / |W|; counts free orbits when gcd(m, h) = 1.
inline Int regular_orbit_count(const RootSystem& rs, long m) {
  Int num = 1;
  for (int e : rs.exponents) num *= Int(m) - e;
  Rat v(num, rs.weyl_order);
  if (v < 0)
    throw std::domain_error("regular orbit count is negative at m = " + std::to_string(m));
  if (!is_integer(v))
    throw std::domain_error("regular orbit count non-integral at m = " + std::to_string(m) +
                            " (gcd(m, h) != 1): " + v.str());
  return numerator(v);
}

// ---------------------------------------------------------------------------
// Orbit census

struct CensusEntry {
  ParabolicType type;
  int class_id = 0;          // within the same label
  std::string display;       // label plus a class marker when needed
  Int count = 0;             // number of orbits in this class
  Int orbit_size = 0;
  Int stabilizer_order = 0;
  std::vector<std::vector<std::int64_t>> representatives;  // at most two, lex-least first
};

struct OrbitCensus {
  std::string type;
  long m = 0;
  std::vector<CensusEntry> entries;  // deterministic order
  Int total = 0;
  Int regular = 0;
  bool has_quasi = false;

  /// Counts aggregated over class ids, keyed by label.
  std::map<std::string, Int> merged() const {
    std::map<std::string, Int> out;
    for (const auto& e : entries) out[e.type.quasi ? "quasi:" + e.type.label() : e.type.label()] += e.count;
    return out;
  }
};

/// Partition (Z/m)^r into W-orbits and classify every stabilizer.
///
/// The representative of each orbit is its lexicographically least point.
/// Stabilizers are computed from the reflections fixing the representative;
/// if the stabilizer is bigger than the subgroup those generate, the class is
/// recorded as quasi-parabolic.
inline OrbitCensus enumerate_orbits(const RootSystem& rs, long m, const Budgets& budgets = default_budgets()) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  const int r = rs.rank();
  Int points = 1;
  for (int i = 0; i < r; ++i) points *= m;
  if (points > budgets.max_points)
    throw BudgetError("enumerating " + points.str() + " points of " + rs.type.str() + " mod " +
                      std::to_string(m) + " exceeds the limit " + budgets.max_points.str() +
                      "; use burnside_orbit_count for totals");
  const std::uint64_t npoints = static_cast<std::uint64_t>(points);

  // Big-endian digits: index order equals lex order on coordinate vectors.
  auto decode = [&](std::uint64_t idx, std::vector<std::int64_t>& c) {
    for (int i = r - 1; i >= 0; --i) {
      c[i] = static_cast<std::int64_t>(idx % m);
      idx /= m;
    }
  };
  auto encode = [&](const std::vector<std::int64_t>& c) {
    std::uint64_t idx = 0;
    for (int i = 0; i < r; ++i) idx = idx * m + static_cast<std::uint64_t>(c[i]);
    return idx;
  };

  std::vector<bool> visited(npoints, false);
  struct ClassData {
    ParabolicType type;
    Int count = 0;
    Int orbit_size = 0;
    Int stab_order = 0;
    std::vector<std::vector<std::int64_t>> reps;
  };
  std::map<std::pair<std::vector<int>, Int>, ClassData> classes;  // key: canonical roots + stab order

  std::vector<std::int64_t> cur(r), img(r);
  std::vector<std::uint64_t> stack;
  OrbitCensus census{rs.type.str(), m, {}, 0, 0, false};

  for (std::uint64_t start = 0; start < npoints; ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    stack.assign(1, start);
    std::uint64_t orbit_size = 0;
    while (!stack.empty()) {
      std::uint64_t p = stack.back();
      stack.pop_back();
      ++orbit_size;
      decode(p, cur);
      for (const IMat& s : rs.simple_coroot) {
        for (int i = 0; i < r; ++i) {
          std::int64_t acc = 0;
          for (int j = 0; j < r; ++j) acc += s(i, j) * cur[j];
          img[i] = ((acc % m) + m) % m;
        }
        std::uint64_t q = encode(img);
        if (!visited[q]) {
          visited[q] = true;
          stack.push_back(q);
        }
      }
    }

    decode(start, cur);
    std::vector<int> fixed;
    for (int k = 0; k < rs.num_positive; ++k) {
      bool fixes = true;
      for (int i = 0; i < r && fixes; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < r; ++j) acc += rs.reflections[k](i, j) * cur[j];
        fixes = ((acc - cur[i]) % m) == 0;
      }
      if (fixes) fixed.push_back(k);
    }
    ParabolicType type = classify_root_subsystem(rs, fixed);
    Int stab_order = exact_div(rs.weyl_order, Int(orbit_size));
    type.quasi = reflection_subgroup_order(type) != stab_order;

    auto& cls = classes[{type.canonical_roots, stab_order}];
    if (cls.count == 0) {
      cls.type = type;
      cls.orbit_size = Int(orbit_size);
      cls.stab_order = stab_order;
    }
    cls.count += 1;
    if (cls.reps.size() < 2) cls.reps.push_back(cur);
    census.total += 1;
    if (stab_order == 1) census.regular += 1;
    if (type.quasi) census.has_quasi = true;
  }

  // Deterministic entry order: parabolic classes first, then by label and
  // canonical root set. Class ids number same-label classes.
  std::vector<ClassData*> ordered;
  for (auto& kv : classes) ordered.push_back(&kv.second);
  std::sort(ordered.begin(), ordered.end(),
            [](const ClassData* a, const ClassData* b) { return a->type < b->type; });
  std::map<std::string, int> label_seen, label_total;
  for (auto* c : ordered) label_total[c->type.label()] += 1;
  for (auto* c : ordered) {
    CensusEntry e;
    e.type = c->type;
    e.class_id = label_seen[c->type.label()]++;
    e.count = c->count;
    e.orbit_size = c->orbit_size;
    e.stabilizer_order = c->stab_order;
    e.representatives = c->reps;
    e.display = c->type.label();
    if (c->type.quasi) e.display = "quasi(" + e.display + ")";
    if (label_total[c->type.label()] > 1) {
      // Try to tell classes apart by root length; fall back to #id.
      int nmax = 0, nmin = rs.roots[0].norm2;
      for (const auto& root : rs.roots) {
        nmax = std::max(nmax, root.norm2);
        nmin = std::min(nmin, root.norm2);
      }
      bool all_long = !c->type.canonical_roots.empty(), all_short = all_long;
      for (int k : c->type.canonical_roots)
        (rs.roots[k].norm2 == nmax ? all_short : all_long) = false;
      if (nmin != nmax && all_long)
        e.display += "(long)";
      else if (nmin != nmax && all_short)
        e.display += "(short)";
      else
        e.display += "#" + std::to_string(e.class_id);
    }
    census.entries.push_back(std::move(e));
  }

  // Orbit-stabilizer accounting must close up exactly.
  Int covered = 0;
  for (const auto& e : census.entries) covered += e.count * e.orbit_size;
  if (covered != points) throw std::logic_error("orbit sizes do not add up to m^rank; this is a bug");
  return census;
}

inline nlohmann::json to_json(const OrbitCensus& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : c.entries) {
    nlohmann::json je;
    je["stabilizer"] = e.display;
    je["label"] = e.type.label();
    je["conjugacy_class_id"] = e.class_id;
    je["quasi_parabolic"] = e.type.quasi;
    je["count"] = e.count.str();
    je["orbit_size"] = e.orbit_size.str();
    je["stabilizer_order"] = e.stabilizer_order.str();
    entries.push_back(je);
  }
  return nlohmann::json{{"type", c.type},
                        {"m", c.m},
                        {"entries", entries},
                        {"total", c.total.str()},
                        {"regular", c.regular.str()}};
}

inline std::string to_csv(const OrbitCensus& c) {
  std::ostringstream out;
  out << "type,m,stabilizer,conjugacy_class_id,quasi_parabolic,count,orbit_size,stabilizer_order\n";
  for (const auto& e : c.entries)
    out << c.type << ',' << c.m << ',' << e.display << ',' << e.class_id << ','
        << (e.type.quasi ? 1 : 0) << ',' << e.count << ',' << e.orbit_size << ','
        << e.stabilizer_order << '\n';
  return out.str();
}

}  // namespace coxcat
