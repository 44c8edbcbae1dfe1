#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coxcat/catalan.hpp"
#include "coxcat/macdonald.hpp"
#include "coxcat/parking.hpp"
#include "coxcat/torus.hpp"

using namespace coxcat;

TEST_CASE("Dyck path enumeration counts are Catalan numbers") {
  CHECK(enumerate_dyck(0).size() == 1);
  CHECK(enumerate_dyck(1).size() == 1);
  CHECK(enumerate_dyck(3).size() == 5);
  CHECK(enumerate_dyck(5).size() == 42);
  CHECK(enumerate_dyck(7).size() == 429);
  CHECK_THROWS_AS(enumerate_dyck(13), BudgetError);

  auto paths = enumerate_dyck(4);
  CHECK(std::is_sorted(paths.begin(), paths.end(), [](const DyckPath& a, const DyckPath& b) {
    return a.area_vector < b.area_vector;
  }));
  CHECK_THROWS_AS(DyckPath({1}), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath({0, -1}), std::invalid_argument);
}

TEST_CASE("run structure") {
  DyckPath d({0, 1, 1, 2, 0});
  CHECK(d.runs() == std::vector<int>{2, 2, 1});
  RunStructure rs = run_structure(d, 7);
  CHECK(rs.m0 == 4);          // 7 - 3 runs
  CHECK(rs.mult[1] == 1);
  CHECK(rs.mult[2] == 2);
  long weighted = 0;
  for (std::size_t j = 1; j < rs.mult.size(); ++j) weighted += j * rs.mult[j];
  CHECK(weighted == d.size());
}

TEST_CASE("parking function counts are (n+1)^(n-1)") {
  CHECK(enumerate_parking_functions(2).size() == 3);
  CHECK(enumerate_parking_functions(3).size() == 16);
  CHECK(enumerate_parking_functions(4).size() == 125);
  CHECK(enumerate_parking_functions(5).size() == 1296);
  CHECK_THROWS_AS(enumerate_parking_functions(9), BudgetError);

  // all distinct, labels valid permutations
  auto pfs = enumerate_parking_functions(4);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto& pf : pfs) {
    seen.insert({pf.path.area_vector, pf.labels});
    std::set<int> labs(pf.labels.begin(), pf.labels.end());
    CHECK(labs == std::set<int>{1, 2, 3, 4});
  }
  CHECK(seen.size() == pfs.size());
  CHECK_THROWS_AS(ParkingFunction(DyckPath({0, 1}), {2, 1}), std::invalid_argument);
}

TEST_CASE("area and dinv statistics") {
  // minimal-area path with identity labels
  ParkingFunction flat(DyckPath({0, 0, 0}), {1, 2, 3});
  CHECK(area(flat) == 0);
  CHECK(dinv(flat) == 3);

  // maximal-area staircase: area n(n-1)/2, dinv 0
  ParkingFunction stair(DyckPath({0, 1, 2}), {1, 2, 3});
  CHECK(area(stair) == 3);
  CHECK(dinv(stair) == 0);

  ParkingFunction mixed(DyckPath({0, 1, 0}), {1, 3, 2});
  CHECK(area(mixed) == 1);
  // pairs: (1,3) equal area increasing -> 1; (2,3) a_i = a_j + 1, l_i > l_j -> 1
  CHECK(dinv(mixed) == 2);

  // area generating function over plain paths is the Carlitz q-Catalan
  for (int n : {3, 4, 5}) {
    std::map<long, long> hist;
    for (const auto& d : enumerate_dyck(n)) ++hist[d.area()];
    PolyQT carlitz;
    for (auto [a, c] : hist) carlitz = carlitz + PolyQT::monomial(c, static_cast<int>(a), 0);
    // pair the shuffle sum with e_n at t = 1: picks out the area distribution
    QT paired = hall_inner(shuffle_sum(n), sf_e(Partition{std::vector<int>(1, n)}));
    PolyQT at_t1;
    for (const auto& [m, c] : paired.num.terms) at_t1 = at_t1 + PolyQT::monomial(c, m.q, 0);
    CHECK(at_t1 == carlitz);
  }
}

TEST_CASE("shuffle sum in small degrees") {
  CHECK(shuffle_sum(1) == sf_m(Partition{1}));

  SymFunc s2 = shuffle_sum(2);
  CHECK(s2.coeff(Partition{2}) == QT(1));
  CHECK(s2.coeff(Partition{1, 1}) == QT(1) + QT::q() + QT::t());

  // the square-free coefficient counts all parking functions at q = t = 1
  CHECK(shuffle_sum(3).coeff(Partition{1, 1, 1}).evaluate(1, 1) == 16);
  CHECK(shuffle_sum(4).coeff(Partition{1, 1, 1, 1}).evaluate(1, 1) == 125);
}

TEST_CASE("shuffle sum equals nabla e_n") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(shuffle_sum(n) == convert(nabla_e(n), Basis::M));
  }
}

TEST_CASE("label-content coefficients are symmetric in q and t") {
  for (int n : {2, 3, 4}) {
    SymFunc f = shuffle_sum(n);
    for (const auto& [la, c] : f.terms) {
      CAPTURE(n, la.str());
      CHECK(c == c.swap_qt());
    }
  }
}

TEST_CASE("Kreweras numbers in type A") {
  CHECK(kreweras_type_a(2, 5, Partition{1, 1}) == 2);
  CHECK(kreweras_type_a(2, 5, Partition{2}) == 1);

  // sum over la of the Kreweras numbers is the Coxeter-Catalan number
  Int total = 0;
  for (const auto& la : partitions_of(3)) total += kreweras_type_a(3, 5, la);
  CHECK(total == 7);
  CHECK(total == coxeter_catalan(build_root_system(parse_cartan_type("A2")), 5));

  for (int n = 2; n <= 8; ++n) {
    auto rs = build_root_system(parse_cartan_type("A" + std::to_string(n - 1)));
    for (long l : {3L, 5L, 7L, 9L, 11L, 13L}) {
      if (std::gcd(l, static_cast<long>(n)) != 1) continue;
      Rat sum = 0;
      for (const auto& la : partitions_of(n)) sum += kreweras_type_a_rational(n, l, la);
      CAPTURE(n, l);
      CHECK(sum == Rat(coxeter_catalan(rs, l)));
    }
  }

  CHECK_THROWS_AS(kreweras_type_a(4, 2, Partition{1, 1, 1, 1}), std::domain_error);  // m0 < 0
  CHECK_THROWS_AS(kreweras_type_a(3, 9, Partition{1, 1, 1}), std::domain_error);     // non-integral
  CHECK(kreweras_type_a_rational(3, 9, Partition{1, 1, 1}) == Rat(28, 3));
  CHECK_THROWS_AS(kreweras_type_a(3, 5, Partition{2}), std::invalid_argument);       // |la| != n
}

TEST_CASE("Kreweras numbers match the enumerated census") {
  for (int n = 2; n <= 5; ++n) {
    auto rs = build_root_system(parse_cartan_type("A" + std::to_string(n - 1)));
    for (long l : {2L, 3L, 4L, 5L, 6L, 7L}) {
      if (std::gcd(l, static_cast<long>(n)) != 1) continue;
      auto census = enumerate_orbits(rs, l);
      auto merged = census.merged();
      for (const auto& la : partitions_of(n)) {
        // Young type la <-> parabolic label from the parts >= 2
        std::vector<std::string> comps;
        for (int p : la.parts)
          if (p >= 2) comps.push_back("A" + std::to_string(p - 1));
        std::sort(comps.begin(), comps.end());
        std::string label;
        for (std::size_t i = 0; i < comps.size(); ++i) label += (i ? "+" : "") + comps[i];
        if (label.empty()) label = "1";
        CAPTURE(n, l, la.str());
        Int entry = merged.count(label) ? merged.at(label) : Int(0);
        CHECK(Rat(entry) == kreweras_type_a_rational(n, l, la));
      }
    }
  }
}

TEST_CASE("rational lattice paths are represented and counted") {
  // gcd(m, n) = 1: count is the rational Catalan number binom(m+n, n)/(m+n)
  for (auto [m, n] : std::vector<std::pair<long, int>>{{3, 2}, {5, 2}, {5, 3}, {7, 3}, {4, 3}}) {
    CAPTURE(m, n);
    CHECK(Int(enumerate_rational_paths(m, n).size()) ==
          exact_div(binomial(Int(m + n), n), Int(m + n)));
  }
  // the classical square case embeds: (n+1, n) paths are counted by Catalan(n+1)/(n+1)...
  CHECK(enumerate_rational_paths(4, 4).size() == 14);
  CHECK_THROWS_AS(RationalLatticePath(3, 2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RationalLatticePath(3, 2, {1, 1}), std::invalid_argument);
}

TEST_CASE("parking function serialization") {
  ParkingFunction pf(DyckPath({0, 1, 1}), {2, 3, 1});
  auto j = to_json(pf);
  CHECK(j["area_vector"] == nlohmann::json({0, 1, 1}));
  CHECK(j["labels"] == nlohmann::json({2, 3, 1}));
  CHECK(parking_function_from_json(j) == pf);

  auto csv = kreweras_table_csv(3, 5);
  CHECK(csv.find("lambda,kreweras") == 0);
  CHECK(csv.find("\"[1,1,1]\",2") != std::string::npos);
}
