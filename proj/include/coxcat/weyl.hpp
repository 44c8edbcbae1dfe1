#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxcat/bigint.hpp"
#include "coxcat/imat.hpp"
#include "coxcat/root_system.hpp"
#include "coxcat/smith.hpp"

namespace coxcat {

struct Budgets {
  Int max_weyl_order = 10'000'000;   // refuse to list groups larger than this
  Int max_points = 100'000'000;      // refuse torus enumerations larger than this
  int max_degree = 9;                // basis-conversion degree cap
  int max_macdonald = 8;             // Macdonald / nabla degree cap
};

inline Budgets& default_budgets() {
  static Budgets b;
  return b;
}

struct WeylElement {
  IMat matrix;
  int length_parity;  // det, +1 or -1
};

/// The full element list of a finite Weyl group, with the sign character and
/// (lazily) the elementary divisors of w - I used for fixed-point counts.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, const Budgets& budgets = default_budgets()) : rank_(rs.rank()), order_(rs.weyl_order) {
    if (rs.weyl_order > budgets.max_weyl_order)
      throw BudgetError("Weyl group of " + rs.type.str() + " has order " + rs.weyl_order.str() +
                        ", above the configured limit " + budgets.max_weyl_order.str());
    generate(rs);
  }

  int rank() const { return rank_; }
  const Int& order() const { return order_; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  /// Elementary divisors of (w - I) for element index k, zeros last.
  const std::vector<Int>& divisors(std::size_t k) const {
    std::call_once(divisors_once_, [&] {
      divisors_.resize(elements_.size());
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        IMat d = elements_[i].matrix;
        for (int j = 0; j < rank_; ++j) d(j, j) -= 1;
        divisors_[i] = smith_elementary_divisors(d);
      }
    });
    return divisors_[k];
  }

 private:
  void generate(const RootSystem& rs) {
    std::unordered_map<IMat, int, IMatHash> index;
    elements_.push_back({IMat::identity(rank_), +1});
    index.emplace(elements_[0].matrix, 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      const IMat cur = elements_[head].matrix;  // copy: vector may reallocate
      const int sign = elements_[head].length_parity;
      for (const IMat& s : rs.simple_coroot) {
        IMat next = s.mul(cur);
        if (index.emplace(next, static_cast<int>(elements_.size())).second)
          elements_.push_back({std::move(next), -sign});
      }
    }
    if (Int(elements_.size()) != order_)
      throw std::logic_error("group closure produced " + std::to_string(elements_.size()) +
                             " elements, expected " + order_.str());
  }

  int rank_;
  Int order_;
  std::vector<WeylElement> elements_;
  mutable std::once_flag divisors_once_;
  mutable std::vector<std::vector<Int>> divisors_;
};

inline std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, const Budgets& budgets = default_budgets()) {
  return WeylGroup(rs, budgets).elements();
}

/// Process-wide cache of generated groups, keyed by Cartan type.
inline std::shared_ptr<const WeylGroup> weyl_group(const RootSystem& rs, const Budgets& budgets = default_budgets()) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::shared_ptr<const WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs.type.str());
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<const WeylGroup>(rs, budgets);
  cache.emplace(rs.type.str(), g);
  return g;
}

}  // namespace coxcat
