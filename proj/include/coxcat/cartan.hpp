#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family;
  int rank;

  CartanType(Family f, int r) : family(f), rank(r) { validate(); }

  void validate() const {
    switch (family) {
      case Family::A:
        if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
        return;
      case Family::B:
        if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
        return;
      case Family::C:
        if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
        return;
      case Family::D:
        if (rank == 3) throw std::invalid_argument("D3 is not supported; use A3 (same root system)");
        if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
        return;
      case Family::E:
        if (rank < 6 || rank > 8) throw std::invalid_argument("type E requires rank in {6,7,8}");
        return;
      case Family::F:
        if (rank != 4) throw std::invalid_argument("type F requires rank 4");
        return;
      case Family::G:
        if (rank != 2) throw std::invalid_argument("type G requires rank 2");
        return;
    }
    throw std::invalid_argument("unknown Cartan family");
  }

  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

// Parse "A3", "b2", "g2" (case-insensitive).
inline CartanType parse_cartan_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cannot parse Cartan type '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("unknown Cartan family in '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("cannot parse rank in '" + s + "'");
  int rank = std::stoi(s.substr(1));
  return CartanType(static_cast<Family>(f), rank);
}

/// Cartan matrix with the convention A[i][j] = <alpha_j, alpha_i^vee>,
/// i.e. A[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
inline std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const int r = t.rank;
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case Family::B:
      // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      a[r - 1][r - 2] = -2;
      break;
    case Family::C:
      // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      a[r - 2][r - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      edge(r - 3, r - 1);
      break;
    case Family::E:
      // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4.
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (int i = 3; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case Family::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      edge(0, 1);
      a[1][0] = -3;  // alpha_2 short
      break;
  }
  return a;
}

/// Squared lengths of the simple roots. The scale is chosen so that the
/// Gram matrix (alpha_i, alpha_j) = cartan[i][j] * norm[i] / 2 is integral:
/// long roots get 4 (12 in G2), short ones 2 (8 for the long roots of C).
inline std::vector<int> simple_root_norms(const CartanType& t) {
  const int r = t.rank;
  std::vector<int> norm(r, 4);
  switch (t.family) {
    case Family::B: norm[r - 1] = 2; break;
    case Family::C: norm[r - 1] = 8; break;
    case Family::F: norm[2] = 2; norm[3] = 2; break;
    case Family::G: norm[0] = 12; norm[1] = 4; break;  // a[1][0] = -3 makes alpha_1 long
    default: break;
  }
  return norm;
}

/// Exponents e_1 <= ... <= e_r from the classical tables.
inline std::vector<int> exponent_table(const CartanType& t) {
  const int r = t.rank;
  std::vector<int> e;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= r; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= r; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i < r; ++i) e.push_back(2 * i - 1);
      e.push_back(r - 1);
      break;
    case Family::E:
      if (r == 6) e = {1, 4, 5, 7, 8, 11};
      else if (r == 7) e = {1, 5, 7, 9, 11, 13, 17};
      else e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F:
      e = {1, 5, 7, 11};
      break;
    case Family::G:
      e = {1, 5};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace coxcat
