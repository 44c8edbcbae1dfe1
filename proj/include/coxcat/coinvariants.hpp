#pragma once

#include <chrono>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxcat/catalan.hpp"
#include "coxcat/macdonald.hpp"
#include "coxcat/parking.hpp"
#include "coxcat/torus.hpp"

namespace coxcat {

/// One block of the dimension sum: a stabilizer class, its orbit count, and
/// the dimension of the matching invariant piece of the coinvariant quotient.
struct BlockDatum {
  std::string stabilizer;   // display label
  Int kreweras = 0;         // number of orbits in the class
  Int dr_dim = 0;           // dim of the W_la-invariants of the coinvariant module
  std::optional<QT> dr_dim_qt;  // bigraded refinement, type A only
};

/// Structured outcome of one identity check: one value per independent
/// computation path, the expected value, and a verdict.
struct VerificationReport {
  std::string identity;
  std::string type;  // Cartan type, or "A{n-1}" rows for the type A identity
  long ell = 0;
  int n = 0;  // 0 when the identity has no n parameter
  std::vector<std::pair<std::string, std::string>> paths;
  std::string expected;
  std::string verdict;    // "pass", "fail", or "skipped"
  std::string hypothesis; // "ok" or the reason this point is outside the hypotheses
  long ms = 0;

  bool passed() const { return verdict == "pass"; }
  bool counts_for_exit() const { return hypothesis == "ok" && verdict != "skipped"; }
};

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json paths = nlohmann::json::object();
  for (const auto& [k, v] : r.paths) paths[k] = v;
  return nlohmann::json{{"identity", r.identity}, {"type", r.type},     {"ell", r.ell},
                        {"n", r.n},               {"paths", paths},     {"expected", r.expected},
                        {"verdict", r.verdict},   {"hypothesis", r.hypothesis}, {"ms", r.ms}};
}

// Timings stay out of the CSV so that output is byte-reproducible; the JSON
// form carries them.
inline std::string csv_header() { return "identity,type,ell,n,expected,verdict,hypothesis,paths"; }

inline std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << r.identity << ',' << r.type << ',' << r.ell << ',' << r.n << ',' << r.expected << ','
      << r.verdict << ',' << '"' << r.hypothesis << '"' << ',' << '"';
  for (std::size_t i = 0; i < r.paths.size(); ++i)
    out << (i ? "; " : "") << r.paths[i].first << '=' << r.paths[i].second;
  out << '"';
  return out.str();
}

namespace verifdetail {

class Stopwatch {
 public:
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// All named paths computed and equal to the expected value; a path that ran
// out of budget downgrades the whole row to "skipped" rather than failing it.
inline void settle(VerificationReport& r) {
  for (const auto& [name, value] : r.paths)
    if (value.rfind("budget", 0) == 0) {
      r.verdict = "skipped";
      return;
    }
  bool ok = !r.paths.empty() && !r.expected.empty() && r.expected.rfind("error", 0) != 0;
  for (const auto& [name, value] : r.paths)
    ok = ok && value == r.expected;
  r.verdict = ok ? "pass" : "fail";
}

}  // namespace verifdetail

/// dim of the W_la-invariants in the coinvariant quotient: the multiplicity
/// of the sign character of W_la in C[Q/(h+1)Q].
inline Int coinvariant_dim_parabolic(const RootSystem& rs, const ParabolicSubgroup& sub,
                                     const Budgets& budgets = default_budgets()) {
  return isotypic_multiplicity(rs, rs.coxeter_number + 1, Character::Sign, &sub, budgets);
}

/// Bigraded dimension of the Young-type block in type A_{n-1}:
/// <h_la, nabla e_n> = coefficient of m_la in nabla e_n.
inline QT coinvariant_dim_qt(int n, const Partition& la, const Budgets& budgets = default_budgets()) {
  if (la.size() != n) throw std::invalid_argument("partition size must equal n");
  return hall_inner(sf_h(la), nabla_e(n, budgets));
}

/// The sign-twisted pairing <omega nabla e_n, h_la>.
inline QT block_character_qt(int n, const Partition& la, const Budgets& budgets = default_budgets()) {
  if (la.size() != n) throw std::invalid_argument("partition size must equal n");
  return hall_inner(omega(nabla_e(n, budgets)), sf_h(la));
}

/// Young type of an A-family stabilizer label ("A1+A2" -> [3,2,1...] for n).
inline Partition young_type_from_label(const std::string& label, int n) {
  std::vector<int> parts;
  int used = 0;
  if (label != "1") {
    std::size_t pos = 0;
    while (pos < label.size()) {
      std::size_t next = label.find('+', pos);
      if (next == std::string::npos) next = label.size();
      std::string comp = label.substr(pos, next - pos);
      if (comp.empty() || comp[0] != 'A') throw std::invalid_argument("not a type A label: " + label);
      int part = std::stoi(comp.substr(1)) + 1;
      parts.push_back(part);
      used += part;
      pos = next + 1;
    }
  }
  for (; used < n; ++used) parts.push_back(1);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

/// d_{h,l} = sum over stabilizer classes of (orbit count) x (block dimension),
/// with the per-block breakdown.
inline std::pair<Int, std::vector<BlockDatum>> block_dimension_sum(const RootSystem& rs,
                                                                   const OrbitCensus& census,
                                                                   const Budgets& budgets = default_budgets()) {
  Int total = 0;
  std::vector<BlockDatum> blocks;
  for (const auto& entry : census.entries) {
    if (entry.type.quasi)
      throw std::domain_error("quasi-parabolic stabilizer in Q/" + std::to_string(census.m) +
                              "Q of " + census.type + "; the block sum needs parabolic stabilizers");
    if (entry.representatives.empty()) throw std::logic_error("census entry lacks a representative");
    // realize the stabilizer from the reflections fixing the representative
    const auto& rep = entry.representatives.front();
    std::vector<int> fixed;
    for (int k = 0; k < rs.num_positive; ++k) {
      bool fixes = true;
      for (int i = 0; i < rs.rank() && fixes; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < rs.rank(); ++j) acc += rs.reflections[k](i, j) * rep[j];
        fixes = ((acc - rep[i]) % census.m) == 0;
      }
      if (fixes) fixed.push_back(k);
    }
    ParabolicSubgroup sub = reflection_subgroup(rs, fixed);
    BlockDatum b;
    b.stabilizer = entry.display;
    b.kreweras = entry.count;
    b.dr_dim = coinvariant_dim_parabolic(rs, sub, budgets);
    if (rs.type.family == Family::A) {
      int n = rs.rank() + 1;
      if (n <= budgets.max_macdonald) {
        QT qt = coinvariant_dim_qt(n, young_type_from_label(entry.type.label(), n), budgets);
        if (Rat(b.dr_dim) != qt.evaluate(1, 1))
          throw std::logic_error("bigraded and ungraded block dimensions disagree; this is a bug");
        b.dr_dim_qt = std::move(qt);
      }
    }
    total += b.kreweras * b.dr_dim;
    blocks.push_back(std::move(b));
  }
  return {total, blocks};
}

inline std::pair<Int, std::vector<BlockDatum>> block_dimension_sum(const RootSystem& rs, long l,
                                                                   const Budgets& budgets = default_budgets()) {
  return block_dimension_sum(rs, enumerate_orbits(rs, l, budgets), budgets);
}

// ---------------------------------------------------------------------------
// Identity verifiers. Each computes every path independently and never
// asserts: disagreement yields a failing report with the full breakdown.

/// d_{h,l} = Cat_W(l(h+1) - h, h), checked along three routes: the census
/// block sum, the closed Catalan form, and the sign-isotypic Burnside count
/// on Q/l(h+1)Q.
inline VerificationReport verify_main_identity(const RootSystem& rs, long l,
                                               const Budgets& budgets = default_budgets()) {
  verifdetail::Stopwatch timer;
  VerificationReport r;
  r.identity = "main";
  r.type = rs.type.str();
  r.ell = l;
  const long h = rs.coxeter_number;
  {
    std::string why;
    if (l >= 1 && h % l == 0) why = "l divides h";
    else if (l >= 1 && (h + 1) % l == 0) why = "l divides h+1";
    else if (std::gcd(l, h) != 1) why = "gcd(l, h) != 1";
    else if (std::gcd(l, h + 1) != 1) why = "gcd(l, h+1) != 1";
    r.hypothesis = why.empty() ? "ok" : "out-of-hypothesis: " + why;
  }
  auto run = [&](const std::string& name, auto&& fn) {
    try {
      r.paths.emplace_back(name, fn().str());
    } catch (const BudgetError& e) {
      r.paths.emplace_back(name, std::string("budget: ") + e.what());
    } catch (const std::exception& e) {
      r.paths.emplace_back(name, std::string("error: ") + e.what());
    }
  };
  run("block_sum", [&] { return block_dimension_sum(rs, l, budgets).first; });
  run("catalan", [&] { return coxeter_catalan(rs, l * (h + 1) - h); });
  run("sign_isotypic", [&] { return isotypic_multiplicity(rs, l * (h + 1), Character::Sign, nullptr, budgets); });
  r.expected = r.paths[1].second;
  verifdetail::settle(r);
  r.ms = timer.ms();
  return r;
}

/// Type A refinement: sum of Kreweras numbers times ungraded block dimensions
/// equals the rational Catalan number binom((n+1)l, n) / ((n+1)l).
inline VerificationReport verify_type_a_identity(int n, long l,
                                                 const Budgets& budgets = default_budgets()) {
  verifdetail::Stopwatch timer;
  VerificationReport r;
  r.identity = "type-a";
  r.type = "A" + std::to_string(n - 1);
  r.ell = l;
  r.n = n;
  {
    std::string why;
    if (l % 2 == 0) why = "l is even";
    else if (n % l == 0) why = "n = 0 mod l";
    else if ((n + 1) % l == 0) why = "n = -1 mod l";
    r.hypothesis = why.empty() ? "ok" : "out-of-hypothesis: " + why;
  }
  try {
    Rat sum = 0;
    for (const auto& la : partitions_of(n))
      sum += kreweras_type_a_rational(n, l, la) * coinvariant_dim_qt(n, la, budgets).evaluate(1, 1);
    r.paths.emplace_back("block_sum", sum.str());
    Rat target = Rat(binomial(Int(n + 1) * l, n), Int(n + 1) * l);
    r.paths.emplace_back("rational_catalan", target.str());
    r.expected = target.str();
    verifdetail::settle(r);
  } catch (const BudgetError& e) {
    r.verdict = "skipped";
    r.expected = std::string("budget: ") + e.what();
  }
  r.ms = timer.ms();
  return r;
}

/// The three distinguished subspace dimensions (l^r, Cat_W(l,h), Cat_W(l-h,h))
/// through their combinatorial characterizations: one regular orbit mod h+1,
/// the orbit count mod l, and the sign multiplicity mod l.
inline VerificationReport verify_subspace_dims(const RootSystem& rs, long l,
                                               const Budgets& budgets = default_budgets()) {
  verifdetail::Stopwatch timer;
  VerificationReport r;
  r.identity = "subspaces";
  r.type = rs.type.str();
  r.ell = l;
  const long h = rs.coxeter_number;
  r.hypothesis = std::gcd(l, h) == 1 ? "ok" : "out-of-hypothesis: gcd(l, h) != 1";

  Int hch = 1;
  for (int i = 0; i < rs.rank(); ++i) hch *= l;
  Rat higman = catalan_product(rs, l);
  Rat verlinde = catalan_product(rs, l - h);
  if (verlinde < 0) verlinde = 0;  // below h there are no regular weights
  r.paths.emplace_back("hch_dim", hch.str());
  r.paths.emplace_back("higman_dim", higman.str());
  r.paths.emplace_back("verlinde_dim", verlinde.str());
  bool ok = true;
  try {
    Int one = isotypic_multiplicity(rs, h + 1, Character::Sign, nullptr, budgets);
    r.paths.emplace_back("sign_multiplicity_mod_h_plus_1", one.str());
    ok = ok && one == 1;
    Int orbits = burnside_orbit_count(rs, l, budgets);
    r.paths.emplace_back("orbit_count_mod_l", orbits.str());
    ok = ok && Rat(orbits) == higman;
    Int signs = isotypic_multiplicity(rs, l, Character::Sign, nullptr, budgets);
    r.paths.emplace_back("sign_multiplicity_mod_l", signs.str());
    ok = ok && Rat(signs) == verlinde;
  } catch (const std::exception& e) {
    r.paths.emplace_back("error", e.what());
    ok = false;
  }
  r.expected = "(" + hch.str() + ", " + higman.str() + ", " + verlinde.str() + ")";
  r.verdict = ok ? "pass" : "fail";
  r.ms = timer.ms();
  return r;
}

/// Sign multiplicity in C[Q/mQ] equals the orbit count of C[Q/(m-h)Q].
inline VerificationReport verify_signtwist_shift(const RootSystem& rs, long m,
                                                 const Budgets& budgets = default_budgets()) {
  verifdetail::Stopwatch timer;
  VerificationReport r;
  r.identity = "signtwist";
  r.type = rs.type.str();
  r.ell = m;
  const long h = rs.coxeter_number;
  if (m <= h)
    r.hypothesis = "out-of-hypothesis: m <= h";
  else if (std::gcd(m, h) != 1)
    r.hypothesis = "out-of-hypothesis: gcd(m, h) != 1";
  else
    r.hypothesis = "ok";
  try {
    Int lhs = isotypic_multiplicity(rs, m, Character::Sign, nullptr, budgets);
    Int rhs = burnside_orbit_count(rs, m - h, budgets);
    r.paths.emplace_back("sign_isotypic", lhs.str());
    r.paths.emplace_back("orbit_count_shifted", rhs.str());
    r.expected = rhs.str();
    verifdetail::settle(r);
  } catch (const std::exception& e) {
    r.paths.emplace_back("error", e.what());
    r.verdict = "fail";
  }
  r.ms = timer.ms();
  return r;
}

/// The parking-function sum matches nabla e_n in the monomial basis.
inline VerificationReport verify_shuffle(int n, const Budgets& budgets = default_budgets()) {
  verifdetail::Stopwatch timer;
  VerificationReport r;
  r.identity = "shuffle";
  r.type = "A" + std::to_string(n - 1);
  r.n = n;
  r.hypothesis = "ok";
  try {
    SymFunc lhs = shuffle_sum(n);
    Budgets conv = budgets;
    conv.max_degree = std::max(conv.max_degree, n);
    SymFunc rhs = convert(nabla_e(n, budgets), Basis::M, conv);
    r.paths.emplace_back("parking_sum", to_string(lhs));
    r.paths.emplace_back("nabla_e", to_string(rhs));
    r.expected = r.paths[1].second;
    verifdetail::settle(r);
  } catch (const BudgetError& e) {
    r.verdict = "skipped";
    r.expected = std::string("budget: ") + e.what();
  }
  r.ms = timer.ms();
  return r;
}

}  // namespace coxcat
