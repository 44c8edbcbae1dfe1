#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxcat/bigint.hpp"
#include "coxcat/cartan.hpp"
#include "coxcat/imat.hpp"

namespace coxcat {

struct Root {
  std::vector<int> root_coords;    // in simple-root coordinates
  std::vector<int> coroot_coords;  // of the associated coroot, in simple-coroot coordinates
  int norm2 = 0;                   // (beta, beta) in the scaling of simple_root_norms
  bool positive = false;
};

/// Full Cartan datum for one simple type: Cartan matrix, the root system
/// (with coroots), exponents/degrees, Coxeter number and |W|.
///
/// Matrix conventions, fixed once:
///   cartan[i][j] = <alpha_j, alpha_i^vee>;
///   Weyl elements act on the coroot lattice Q in simple-coroot coordinates,
///   the simple reflection s_i being the identity with row i replaced by
///   row_i(I) - column_i(cartan).
struct RootSystem {
  CartanType type;
  std::vector<std::vector<int>> cartan;
  std::vector<int> norms;  // squared lengths of simple roots
  std::vector<int> exponents;
  std::vector<int> degrees;
  int coxeter_number = 0;
  Int weyl_order = 0;

  std::vector<Root> roots;           // all roots, positives first
  int num_positive = 0;
  std::vector<IMat> simple_coroot;   // s_i on the coroot lattice
  std::vector<IMat> simple_root;     // s_i on the root lattice
  std::vector<IMat> reflections;     // s_beta on the coroot lattice, per positive root

  // coords of +-beta -> index of beta among the positive roots
  std::map<std::vector<int>, int> pos_of_coords;
  // gen_pos_perm[i][k]: positive index of s_i(beta_k), sign folded away
  std::vector<std::vector<int>> gen_pos_perm;

  int rank() const { return type.rank; }

  const Root& positive_root(int k) const { return roots[k]; }

  // (beta, gamma) in root coordinates; integral in the simple_root_norms scale.
  long bilinear(const std::vector<int>& b, const std::vector<int>& c) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) s += static_cast<long>(b[i]) * c[j] * cartan[i][j] * norms[i];
    if (s % 2 != 0) throw std::logic_error("non-integral root pairing; bad norm scale");
    return s / 2;
  }
};

namespace detail {

inline IMat simple_reflection_coroot(const std::vector<std::vector<int>>& a, int i) {
  const int r = static_cast<int>(a.size());
  IMat m = IMat::identity(r);
  for (int j = 0; j < r; ++j) m(i, j) -= a[j][i];
  return m;
}

inline IMat simple_reflection_root(const std::vector<std::vector<int>>& a, int i) {
  const int r = static_cast<int>(a.size());
  IMat m = IMat::identity(r);
  for (int j = 0; j < r; ++j) m(i, j) -= a[i][j];
  return m;
}

}  // namespace detail

inline RootSystem build_root_system(const CartanType& t) {
  RootSystem rs{t, cartan_matrix(t), simple_root_norms(t), exponent_table(t),
                {}, 0, 0, {}, 0, {}, {}, {}, {}, {}};
  const int r = t.rank;
  for (int e : rs.exponents) rs.degrees.push_back(e + 1);
  rs.coxeter_number = rs.exponents.back() + 1;
  rs.weyl_order = 1;
  for (int d : rs.degrees) rs.weyl_order *= d;

  for (int i = 0; i < r; ++i) {
    rs.simple_coroot.push_back(detail::simple_reflection_coroot(rs.cartan, i));
    rs.simple_root.push_back(detail::simple_reflection_root(rs.cartan, i));
  }

  // Close the simple (co)root pairs under the simple reflections.
  std::map<std::vector<int>, int> seen;
  std::vector<Root> all;
  for (int i = 0; i < r; ++i) {
    Root root;
    root.root_coords.assign(r, 0);
    root.coroot_coords.assign(r, 0);
    root.root_coords[i] = 1;
    root.coroot_coords[i] = 1;
    seen[root.root_coords] = static_cast<int>(all.size());
    all.push_back(root);
  }
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      std::vector<std::int64_t> rc64(all[head].root_coords.begin(), all[head].root_coords.end());
      std::vector<std::int64_t> cc64(all[head].coroot_coords.begin(), all[head].coroot_coords.end());
      auto nrc = rs.simple_root[i].apply(rc64);
      auto ncc = rs.simple_coroot[i].apply(cc64);
      Root nr;
      nr.root_coords.assign(nrc.begin(), nrc.end());
      nr.coroot_coords.assign(ncc.begin(), ncc.end());
      if (seen.emplace(nr.root_coords, static_cast<int>(all.size())).second) all.push_back(nr);
    }
  }

  for (auto& root : all) {
    bool nonneg = true;
    for (int c : root.root_coords) nonneg = nonneg && c >= 0;
    root.positive = nonneg;
    root.norm2 = static_cast<int>(rs.bilinear(root.root_coords, root.root_coords));
  }
  for (auto& root : all)
    if (root.positive) rs.roots.push_back(root);
  rs.num_positive = static_cast<int>(rs.roots.size());
  for (auto& root : all)
    if (!root.positive) rs.roots.push_back(root);

  // Reflection through each positive root, acting on the coroot lattice:
  // s_beta(x) = x - <x, beta> beta^vee with <alpha_j^vee, beta> = (A beta)_j.
  for (int k = 0; k < rs.num_positive; ++k) {
    const Root& root = rs.roots[k];
    std::vector<long> ab(r, 0);
    for (int j = 0; j < r; ++j)
      for (int c = 0; c < r; ++c) ab[j] += static_cast<long>(rs.cartan[j][c]) * root.root_coords[c];
    IMat m = IMat::identity(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m(i, j) -= ab[j] * root.coroot_coords[i];
    rs.reflections.push_back(m);
  }

  for (int k = 0; k < static_cast<int>(rs.roots.size()); ++k) {
    if (k < rs.num_positive)
      rs.pos_of_coords[rs.roots[k].root_coords] = k;
    else {
      std::vector<int> neg(r);
      for (int c = 0; c < r; ++c) neg[c] = -rs.roots[k].root_coords[c];
      rs.pos_of_coords[rs.roots[k].root_coords] = rs.pos_of_coords.at(neg);
    }
  }
  rs.gen_pos_perm.assign(r, std::vector<int>(rs.num_positive, -1));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < rs.num_positive; ++k) {
      std::vector<std::int64_t> v(rs.roots[k].root_coords.begin(), rs.roots[k].root_coords.end());
      auto img = rs.simple_root[i].apply(v);
      rs.gen_pos_perm[i][k] = rs.pos_of_coords.at(std::vector<int>(img.begin(), img.end()));
    }

  // Sanity checks against the classical tables.
  if (static_cast<int>(all.size()) != r * rs.coxeter_number)
    throw std::logic_error("root count mismatch for " + t.str());
  if (2 * rs.num_positive != r * rs.coxeter_number)
    throw std::logic_error("positive root count mismatch for " + t.str());
  for (int i = 0; i < r; ++i)
    if (rs.exponents[i] + rs.exponents[r - 1 - i] != rs.coxeter_number)
      throw std::logic_error("exponent symmetry violated for " + t.str());
  return rs;
}

inline nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = rs.type.str();
  j["rank"] = rs.rank();
  j["cartan_matrix"] = rs.cartan;
  j["exponents"] = rs.exponents;
  j["degrees"] = rs.degrees;
  j["coxeter_number"] = rs.coxeter_number;
  if (rs.weyl_order <= Int(1) << 53)
    j["weyl_order"] = static_cast<std::int64_t>(rs.weyl_order);
  else
    j["weyl_order"] = rs.weyl_order.str();
  return j;
}

}  // namespace coxcat
