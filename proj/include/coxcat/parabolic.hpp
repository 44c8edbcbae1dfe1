#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcat/bigint.hpp"
#include "coxcat/cartan.hpp"
#include "coxcat/imat.hpp"
#include "coxcat/root_system.hpp"

namespace coxcat {

/// Conjugacy label of a reflection subgroup: the multiset of irreducible
/// Cartan types of the root subsystem it is generated by, plus a canonical
/// form of that subsystem which separates non-conjugate classes sharing a
/// label (e.g. the two A1 classes in B2).
struct ParabolicType {
  std::vector<std::string> components;   // sorted labels, empty for the trivial subgroup
  std::vector<int> canonical_roots;      // lex-min W-image of the positive-root index set
  bool quasi = false;                    // subgroup not generated by its reflections

  std::string label() const {
    if (components.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) s += "+";
      s += components[i];
    }
    return s;
  }

  bool operator==(const ParabolicType& o) const {
    return components == o.components && canonical_roots == o.canonical_roots && quasi == o.quasi;
  }
  bool operator<(const ParabolicType& o) const {
    return std::tie(quasi, components, canonical_roots) <
           std::tie(o.quasi, o.components, o.canonical_roots);
  }
};

namespace detail {

// Image of positive root g under s_beta (both positive indices), in root
// coordinates: gamma - <gamma, beta^vee> beta.
inline std::vector<int> reflect_root_coords(const RootSystem& rs, int beta, const std::vector<int>& gamma) {
  const auto& b = rs.roots[beta];
  long pairing = 2 * rs.bilinear(gamma, b.root_coords) / b.norm2;
  std::vector<int> out = gamma;
  for (int c = 0; c < rs.rank(); ++c) out[c] -= static_cast<int>(pairing) * b.root_coords[c];
  return out;
}

inline bool all_nonneg(const std::vector<int>& v) {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

// Simple system of the subsystem {+-beta_k : k in pos_set}: beta is simple
// iff s_beta maps every other member of the positive subsystem to a positive root.
inline std::vector<int> subsystem_simple_roots(const RootSystem& rs, const std::vector<int>& pos_set) {
  std::vector<int> simples;
  for (int b : pos_set) {
    bool simple = true;
    for (int g : pos_set) {
      if (g == b) continue;
      if (!all_nonneg(reflect_root_coords(rs, b, rs.roots[g].root_coords))) { simple = false; break; }
    }
    if (simple) simples.push_back(b);
  }
  return simples;
}

// Identify one connected component from its simple roots.
inline std::string classify_component(const RootSystem& rs, const std::vector<int>& simples) {
  const int k = static_cast<int>(simples.size());
  if (k == 1) return "A1";
  std::vector<std::vector<int>> bond(k, std::vector<int>(k, 0));
  std::vector<int> deg(k, 0), norm(k);
  for (int i = 0; i < k; ++i) norm[i] = rs.roots[simples[i]].norm2;
  int maxdeg = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& bi = rs.roots[simples[i]].root_coords;
      const auto& bj = rs.roots[simples[j]].root_coords;
      long cij = 2 * rs.bilinear(bi, bj) / norm[i];
      long cji = 2 * rs.bilinear(bi, bj) / norm[j];
      bond[i][j] = static_cast<int>(cij * cji);
      if (bond[i][j] > 0) ++deg[i];
    }
  for (int d : deg) maxdeg = std::max(maxdeg, d);
  int doubles = 0, triples = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (bond[i][j] == 2) ++doubles;
      if (bond[i][j] == 3) ++triples;
    }
  if (triples) {
    if (k == 2 && triples == 1) return "G2";
    throw std::logic_error("unrecognized subsystem with a triple bond");
  }
  if (doubles) {
    if (doubles != 1) throw std::logic_error("unrecognized subsystem with several double bonds");
    if (k == 2) return "B2";
    // Double bond in the interior is F4; at the end, B vs C by which length is rare.
    int di = -1, dj = -1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (bond[i][j] == 2) { di = i; dj = j; }
    if (deg[di] > 1 && deg[dj] > 1) {
      if (k == 4) return "F4";
      throw std::logic_error("unrecognized multiply-laced subsystem");
    }
    int nmin = *std::min_element(norm.begin(), norm.end());
    int shorts = static_cast<int>(std::count(norm.begin(), norm.end(), nmin));
    return (shorts == 1 ? "B" : "C") + std::to_string(k);
  }
  // Simply laced from here on.
  if (maxdeg <= 1 && k > 2) throw std::logic_error("disconnected component");
  if (maxdeg <= 2) return "A" + std::to_string(k);
  if (maxdeg > 3) throw std::logic_error("unrecognized subsystem with a degree-4 node");
  int center = -1;
  for (int i = 0; i < k; ++i)
    if (deg[i] == 3) {
      if (center >= 0) throw std::logic_error("unrecognized subsystem with two branch nodes");
      center = i;
    }
  std::vector<int> legs;
  for (int i = 0; i < k; ++i) {
    if (i == center || bond[center][i] == 0) continue;
    int len = 0, prev = center, cur = i;
    while (true) {
      ++len;
      int next = -1;
      for (int j = 0; j < k; ++j)
        if (j != prev && bond[cur][j] > 0) next = j;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs.size() != 3) throw std::logic_error("branch node with wrong valence");
  if (legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(k);
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return "E" + std::to_string(k);
  throw std::logic_error("unrecognized simply-laced subsystem");
}

inline std::vector<std::vector<int>> connected_components(const RootSystem& rs, const std::vector<int>& simples) {
  const int k = static_cast<int>(simples.size());
  std::vector<int> comp(k, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i}, members;
    comp[i] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      members.push_back(simples[c]);
      for (int j = 0; j < k; ++j)
        if (comp[j] < 0 &&
            rs.bilinear(rs.roots[simples[c]].root_coords, rs.roots[simples[j]].root_coords) != 0) {
          comp[j] = comp[i];
          stack.push_back(j);
        }
    }
    out.push_back(members);
  }
  return out;
}

// Lex-least image of the positive-index set under the W-action (orbit of the
// set under the simple generators).
inline std::vector<int> canonical_root_set(const RootSystem& rs, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  std::set<std::vector<int>> seen{s};
  std::vector<std::vector<int>> queue{s};
  std::vector<int> best = s;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto cur = queue[head];
    for (int i = 0; i < rs.rank(); ++i) {
      std::vector<int> img;
      img.reserve(cur.size());
      for (int k : cur) img.push_back(rs.gen_pos_perm[i][k]);
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) {
        if (img < best) best = img;
        queue.push_back(img);
      }
    }
  }
  return best;
}

}  // namespace detail

/// Order of the Weyl group of the named irreducible type.
inline Int component_weyl_order(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, Int> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it != cache.end()) return it->second;
  Int order = 1;
  for (int e : exponent_table(parse_cartan_type(label))) order *= e + 1;
  cache.emplace(label, order);
  return order;
}

/// Classify the reflection subgroup whose reflections are exactly
/// {s_beta : beta in pos_set}; pos_set holds positive-root indices.
inline ParabolicType classify_root_subsystem(const RootSystem& rs, const std::vector<int>& pos_set) {
  ParabolicType out;
  out.canonical_roots = detail::canonical_root_set(rs, pos_set);
  if (pos_set.empty()) return out;
  auto simples = detail::subsystem_simple_roots(rs, pos_set);
  for (const auto& comp : detail::connected_components(rs, simples))
    out.components.push_back(detail::classify_component(rs, comp));
  std::sort(out.components.begin(), out.components.end());
  // The subsystem's own positive system must be accounted for by the simple
  // system (sum over components of |Phi^+| = |pos_set|).
  Int npos = 0;
  for (const auto& c : out.components) {
    CartanType ct = parse_cartan_type(c);
    npos += Int(ct.rank) * (exponent_table(ct).back() + 1) / 2;
  }
  if (npos != Int(pos_set.size()))
    throw std::logic_error("subsystem classification inconsistent: wrong positive root count");
  return out;
}

inline Int reflection_subgroup_order(const ParabolicType& t) {
  Int order = 1;
  for (const auto& c : t.components) order *= component_weyl_order(c);
  return order;
}

/// Classify a subgroup given by its element list. If it is generated by the
/// reflections it contains, the result is the Cartan type of the fixed root
/// subsystem; otherwise the quasi-parabolic flag is set (and the component
/// labels describe only the reflection part).
inline ParabolicType classify_reflection_subgroup(const RootSystem& rs, const std::vector<IMat>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty element set");
  // Closure check (also catches non-subgroups handed in by mistake).
  std::set<IMat> in(elements.begin(), elements.end());
  if (static_cast<int>(in.size()) != static_cast<int>(elements.size()))
    throw std::invalid_argument("duplicate elements in subgroup input");
  if (!in.count(IMat::identity(rs.rank())))
    throw std::invalid_argument("subgroup input lacks the identity");
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!in.count(a.mul(b))) throw std::invalid_argument("input not closed under composition");

  std::vector<int> fixed;
  for (int k = 0; k < rs.num_positive; ++k)
    if (in.count(rs.reflections[k])) fixed.push_back(k);
  ParabolicType t = classify_root_subsystem(rs, fixed);
  t.quasi = reflection_subgroup_order(t) != Int(elements.size());
  return t;
}

/// A parabolic (or any reflection-generated) subgroup realized as matrices.
struct ParabolicSubgroup {
  std::vector<IMat> elements;
  std::vector<int> signs;       // det per element
  std::vector<int> root_indices;  // positive roots whose reflections generate it
  ParabolicType type;
};

/// Subgroup generated by the reflections through the given positive roots.
inline ParabolicSubgroup reflection_subgroup(const RootSystem& rs, const std::vector<int>& generators_pos) {
  ParabolicSubgroup sub;
  std::set<IMat> seen;
  sub.elements.push_back(IMat::identity(rs.rank()));
  sub.signs.push_back(+1);
  seen.insert(sub.elements[0]);
  for (std::size_t head = 0; head < sub.elements.size(); ++head) {
    const IMat cur = sub.elements[head];
    const int sign = sub.signs[head];
    for (int g : generators_pos) {
      IMat next = rs.reflections[g].mul(cur);
      if (seen.insert(next).second) {
        sub.elements.push_back(std::move(next));
        sub.signs.push_back(-sign);
      }
    }
  }
  std::vector<int> fixed;
  for (int k = 0; k < rs.num_positive; ++k)
    if (seen.count(rs.reflections[k])) fixed.push_back(k);
  sub.root_indices = fixed;
  sub.type = classify_root_subsystem(rs, fixed);
  return sub;
}

}  // namespace coxcat
