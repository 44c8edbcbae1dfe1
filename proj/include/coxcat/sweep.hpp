#pragma once

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "coxcat/coinvariants.hpp"

namespace coxcat {

/// Range grammar for sweep flags: comma-separated atoms, each either a value
/// or "a..b" with an optional ":odd" / ":even" filter.
inline std::vector<long> parse_range(const std::string& s) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string atom = s.substr(pos, comma - pos);
    if (atom.empty()) throw std::invalid_argument("empty atom in range '" + s + "'");
    long step_filter = 0;  // 1 = odd, 2 = even
    std::size_t colon = atom.find(':');
    if (colon != std::string::npos) {
      std::string f = atom.substr(colon + 1);
      if (f == "odd") step_filter = 1;
      else if (f == "even") step_filter = 2;
      else throw std::invalid_argument("unknown range filter ':" + f + "'");
      atom = atom.substr(0, colon);
    }
    std::size_t dots = atom.find("..");
    if (dots == std::string::npos) {
      if (step_filter) throw std::invalid_argument("filters only apply to a..b ranges");
      out.push_back(std::stol(atom));
    } else {
      long a = std::stol(atom.substr(0, dots));
      long b = std::stol(atom.substr(dots + 2));
      if (b < a) throw std::invalid_argument("empty range " + atom);
      for (long v = a; v <= b; ++v) {
        if (step_filter == 1 && v % 2 == 0) continue;
        if (step_filter == 2 && v % 2 != 0) continue;
        out.push_back(v);
      }
    }
    pos = comma + 1;
    if (comma == s.size()) break;
  }
  if (out.empty()) throw std::invalid_argument("range '" + s + "' is empty");
  return out;
}

struct SweepConfig {
  std::vector<std::string> types;  // Cartan types for type-indexed identities
  std::vector<long> ells{0};       // ell (or m) values; single 0 when unused
  std::vector<int> ns{0};          // n values; single 0 when unused
  Budgets budgets;
  std::string format = "pretty";   // json | csv | pretty
  int jobs = 1;

  void validate() const {
    if (ells.empty() || ns.empty()) throw std::invalid_argument("sweep ranges must be nonempty");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    if (budgets.max_weyl_order < 1 || budgets.max_points < 1 || budgets.max_degree < 1 ||
        budgets.max_macdonald < 1)
      throw std::invalid_argument("budgets must be positive");
    if (format != "json" && format != "csv" && format != "pretty")
      throw std::invalid_argument("format must be json, csv, or pretty");
  }
};

/// Run one identity over the grid. Jobs are pure and dispatched to a small
/// worker pool; results come back in the deterministic (type, ell, n) order
/// regardless of scheduling.
inline std::vector<VerificationReport> run_sweep(const std::string& identity, SweepConfig config) {
  config.validate();
  std::sort(config.types.begin(), config.types.end());

  struct Job {
    std::string type;
    long ell;
    int n;
  };
  std::vector<Job> jobs;
  if (identity == "type-a" || identity == "shuffle") {
    for (int n : config.ns)
      for (long l : (identity == "shuffle" ? std::vector<long>{0} : config.ells))
        jobs.push_back({"A" + std::to_string(n - 1), l, n});
  } else if (identity == "main" || identity == "signtwist" || identity == "subspaces") {
    if (config.types.empty()) throw std::invalid_argument("this identity needs --type");
    for (const auto& t : config.types)
      for (long l : config.ells) jobs.push_back({t, l, 0});
  } else {
    throw std::invalid_argument("unknown identity '" + identity +
                                "' (expected main, type-a, signtwist, subspaces, or shuffle)");
  }

  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      try {
        if (identity == "main")
          out[i] = verify_main_identity(build_root_system(parse_cartan_type(job.type)), job.ell, config.budgets);
        else if (identity == "signtwist")
          out[i] = verify_signtwist_shift(build_root_system(parse_cartan_type(job.type)), job.ell, config.budgets);
        else if (identity == "subspaces")
          out[i] = verify_subspace_dims(build_root_system(parse_cartan_type(job.type)), job.ell, config.budgets);
        else if (identity == "type-a")
          out[i] = verify_type_a_identity(job.n, job.ell, config.budgets);
        else
          out[i] = verify_shuffle(job.n, config.budgets);
      } catch (const BudgetError& e) {
        out[i].identity = identity;
        out[i].type = job.type;
        out[i].ell = job.ell;
        out[i].n = job.n;
        out[i].verdict = "skipped";
        out[i].expected = std::string("budget: ") + e.what();
        out[i].hypothesis = "ok";
      }
    }
  };
  if (config.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < config.jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace coxcat
