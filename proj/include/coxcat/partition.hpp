#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcat/bigint.hpp"

namespace coxcat {

/// Integer partition: weakly decreasing positive parts; empty = partition of 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  void validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  int size() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
  }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < length() ? parts[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c(parts.empty() ? 0 : parts[0], 0);
    for (int p : parts)
      for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  /// n(lambda) = sum (i-1) lambda_i.
  long n_stat() const {
    long s = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) s += static_cast<long>(i) * parts[i];
    return s;
  }

  /// z_lambda = prod_i i^{m_i} m_i!  (order of the S_n-centralizer of the class).
  Int z() const {
    Int z = 1;
    int run = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      ++run;
      z *= parts[i];
      if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
        z *= factorial(run);
        run = 0;
      }
    }
    return z;
  }

  /// Number of parts equal to v.
  int multiplicity(int v) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), v));
  }

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << ',';
      out << parts[i];
    }
    out << ']';
    return out.str();
  }
};

/// mu dominated by la (both of the same size): partial sums of mu never exceed those of la.
inline bool dominates(const Partition& la, const Partition& mu) {
  long sa = 0, sb = 0;
  int k = std::max(la.length(), mu.length());
  for (int i = 0; i < k; ++i) {
    sa += la.part(i);
    sb += mu.part(i);
    if (sb > sa) return false;
  }
  return sa == sb;
}

/// All partitions of n, in descending lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline Partition parse_partition(const std::string& s) {
  std::size_t i = 0;
  auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip();
  if (i >= s.size() || s[i] != '[') throw std::invalid_argument("partition must start with '[': " + s);
  ++i;
  std::vector<int> parts;
  skip();
  while (i < s.size() && s[i] != ']') {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected a part in " + s);
    parts.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
    skip();
    if (i < s.size() && s[i] == ',') { ++i; skip(); }
  }
  if (i >= s.size()) throw std::invalid_argument("unterminated partition: " + s);
  return Partition(std::move(parts));
}

}  // namespace coxcat
