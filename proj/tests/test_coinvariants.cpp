#include <catch2/catch_amalgamated.hpp>

#include "coxcat/coinvariants.hpp"

using namespace coxcat;

namespace {
RootSystem rs_of(const std::string& s) { return build_root_system(parse_cartan_type(s)); }

ParabolicSubgroup trivial_subgroup(const RootSystem& rs) { return reflection_subgroup(rs, {}); }

ParabolicSubgroup full_subgroup(const RootSystem& rs) {
  std::vector<int> all(rs.num_positive);
  for (int i = 0; i < rs.num_positive; ++i) all[i] = i;
  return reflection_subgroup(rs, all);
}
}  // namespace

TEST_CASE("block dimensions from the sign-isotypic count") {
  auto b2 = rs_of("B2");
  CHECK(coinvariant_dim_parabolic(b2, trivial_subgroup(b2)) == 25);
  CHECK(coinvariant_dim_parabolic(b2, reflection_subgroup(b2, {0})) == 10);
  CHECK(coinvariant_dim_parabolic(b2, reflection_subgroup(b2, {1})) == 10);  // both A1 classes

  auto g2 = rs_of("G2");
  CHECK(coinvariant_dim_parabolic(g2, full_subgroup(g2)) == 1);
  CHECK(coinvariant_dim_parabolic(g2, reflection_subgroup(g2, {0})) == 21);
  CHECK(coinvariant_dim_parabolic(g2, reflection_subgroup(g2, {1})) == 21);

  // trivial subgroup gives (h+1)^rank, full group gives 1
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "F4", "G2"}) {
    INFO(name);
    auto rs = rs_of(name);
    Int expect = 1;
    for (int i = 0; i < rs.rank(); ++i) expect *= rs.coxeter_number + 1;
    CHECK(coinvariant_dim_parabolic(rs, trivial_subgroup(rs)) == expect);
    CHECK(coinvariant_dim_parabolic(rs, full_subgroup(rs)) == 1);
  }
}

TEST_CASE("bigraded type A block dimensions") {
  CHECK(coinvariant_dim_qt(2, Partition{1, 1}) == QT(1) + QT::q() + QT::t());
  CHECK(coinvariant_dim_qt(2, Partition{2}) == QT(1));
  CHECK(coinvariant_dim_qt(4, Partition{4}) == QT(1));
  CHECK(coinvariant_dim_qt(5, Partition{5}) == QT(1));

  // the subregular staircase: sum over k <= n-1 of all q^i t^j with i + j = k
  for (int n = 2; n <= 5; ++n) {
    QT staircase;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i <= k; ++i) staircase += QT(PolyQT::monomial(1, i, k - i));
    std::vector<int> la{n - 1, 1};
    CAPTURE(n);
    CHECK(coinvariant_dim_qt(n, Partition(la)) == staircase);
    CHECK(staircase.evaluate(1, 1) == Rat(Int(n) * (n + 1) / 2));
  }
}

TEST_CASE("sign-twisted block characters") {
  CHECK(block_character_qt(1, Partition{1}) == QT(1));
  CHECK(block_character_qt(2, Partition{2}) == QT::q() + QT::t());
  CHECK(block_character_qt(2, Partition{1, 1}) == QT(1) + QT::q() + QT::t());

  // ungraded consistency: <omega nabla e_n, h_la>(1,1) counts the trivial
  // isotypic of the la-stabilizer on Q/(n+1)Q, and <h_la, nabla e_n>(1,1)
  // its sign isotypic.
  for (int n : {2, 3, 4}) {
    auto rs = rs_of("A" + std::to_string(n - 1));
    for (const auto& la : partitions_of(n)) {
      if (la.part(0) == n && n > 1) continue;  // full group handled below
      // build a Young-type stabilizer from consecutive simple roots
      std::vector<int> gens;
      int offset = 0;
      for (int p : la.parts) {
        for (int j = 1; j < p; ++j) gens.push_back(offset + j - 1);
        offset += p;
      }
      auto sub = reflection_subgroup(rs, gens);
      CAPTURE(n, la.str());
      CHECK(Rat(isotypic_multiplicity(rs, n + 1, Character::Trivial, &sub)) ==
            block_character_qt(n, la).evaluate(1, 1));
      CHECK(Rat(isotypic_multiplicity(rs, n + 1, Character::Sign, &sub)) ==
            coinvariant_dim_qt(n, la).evaluate(1, 1));
    }
  }
}

TEST_CASE("block dimension sums") {
  SECTION("A1 at l = 5 by hand: 2 regular blocks of dim 3 plus the origin") {
    auto [total, blocks] = block_dimension_sum(rs_of("A1"), 5);
    CHECK(total == 7);
    REQUIRE(blocks.size() == 2);
    Int check = 0;
    for (const auto& b : blocks) check += b.kreweras * b.dr_dim;
    CHECK(check == 7);
  }
  SECTION("B2 and G2 at l = 7") {
    CHECK(block_dimension_sum(rs_of("B2"), 7).first == 136);
    CHECK(block_dimension_sum(rs_of("G2"), 7).first == 176);
  }
  SECTION("type A blocks carry the bigraded refinement") {
    auto [total, blocks] = block_dimension_sum(rs_of("A2"), 5);
    CHECK(total == 57);
    for (const auto& b : blocks) {
      REQUIRE(b.dr_dim_qt.has_value());
      CHECK(b.dr_dim_qt->evaluate(1, 1) == Rat(b.dr_dim));
    }
  }
  SECTION("quasi-parabolic census entries are rejected with the offending l") {
    auto rs = rs_of("B2");
    OrbitCensus census = enumerate_orbits(rs, 3);
    census.entries[0].type.quasi = true;  // synthetic: cannot occur on Q/mQ
    CHECK_THROWS_WITH(block_dimension_sum(rs, census),
                      Catch::Matchers::ContainsSubstring("3"));
  }
}

TEST_CASE("block dimension is conjugacy-invariant across representatives") {
  for (const char* name : {"B2", "B3", "A3", "G2"}) {
    auto rs = rs_of(name);
    auto census = enumerate_orbits(rs, 7);
    for (const auto& entry : census.entries) {
      if (entry.representatives.size() < 2) continue;
      std::vector<Int> dims;
      for (const auto& rep : entry.representatives) {
        std::vector<int> fixed;
        for (int k = 0; k < rs.num_positive; ++k) {
          bool fixes = true;
          for (int i = 0; i < rs.rank() && fixes; ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < rs.rank(); ++j) acc += rs.reflections[k](i, j) * rep[j];
            fixes = ((acc - rep[i]) % 7) == 0;
          }
          if (fixes) fixed.push_back(k);
        }
        dims.push_back(coinvariant_dim_parabolic(rs, reflection_subgroup(rs, fixed)));
      }
      CAPTURE(name, entry.display);
      CHECK(dims[0] == dims[1]);
    }
  }
}

TEST_CASE("main identity verification") {
  auto a1 = verify_main_identity(rs_of("A1"), 5);
  CHECK(a1.passed());
  CHECK(a1.expected == "7");
  CHECK(a1.hypothesis == "ok");
  REQUIRE(a1.paths.size() == 3);
  for (const auto& [name, value] : a1.paths) CHECK(value == "7");

  CHECK(verify_main_identity(rs_of("B2"), 7).expected == "136");
  CHECK(verify_main_identity(rs_of("B2"), 7).passed());
  auto g2 = verify_main_identity(rs_of("G2"), 7);
  CHECK(g2.expected == "176");
  CHECK(g2.passed());
  CHECK(g2.hypothesis == "out-of-hypothesis: l divides h+1");  // 7 | h+1, yet the identity holds
}

TEST_CASE("type A identity verification") {
  auto r = verify_type_a_identity(2, 5);
  CHECK(r.passed());
  CHECK(r.expected == "7");

  CHECK(verify_type_a_identity(3, 5).expected == "57");
  CHECK(verify_type_a_identity(3, 5).passed());
  CHECK(verify_type_a_identity(2, 7).expected == "10");
  CHECK(verify_type_a_identity(2, 7).passed());

  // out-of-hypothesis but still true as a rational identity
  auto odd = verify_type_a_identity(3, 9);
  CHECK(odd.hypothesis == "ok");  // 3 is neither 0 nor -1 mod 9; Kreweras side is rational
  CHECK(odd.passed());
  CHECK(odd.expected == "595/3");

  auto skipped = verify_type_a_identity(9, 5, Budgets{});
  CHECK(skipped.verdict == "skipped");
}

TEST_CASE("subspace dimension verification") {
  auto b2 = verify_subspace_dims(rs_of("B2"), 7);
  CHECK(b2.passed());
  CHECK(b2.expected == "(49, 10, 3)");

  auto g2 = verify_subspace_dims(rs_of("G2"), 7);
  CHECK(g2.passed());
  CHECK(g2.expected == "(49, 8, 1)");

  auto a1 = verify_subspace_dims(rs_of("A1"), 5);
  CHECK(a1.passed());
  CHECK(a1.expected == "(5, 3, 2)");

  CHECK(verify_subspace_dims(rs_of("G2"), 5).passed());  // verlinde clamps to zero below h
}

TEST_CASE("sign twist shift verification") {
  auto b2 = verify_signtwist_shift(rs_of("B2"), 11);
  CHECK(b2.passed());
  CHECK(b2.expected == "10");

  CHECK(verify_signtwist_shift(rs_of("A1"), 5).expected == "2");
  CHECK(verify_signtwist_shift(rs_of("A1"), 5).passed());
  auto g2 = verify_signtwist_shift(rs_of("G2"), 7);
  CHECK(g2.passed());
  CHECK(g2.expected == "1");
  CHECK(verify_signtwist_shift(rs_of("B2"), 3).hypothesis == "out-of-hypothesis: m <= h");
}

TEST_CASE("shuffle verification") {
  auto r = verify_shuffle(3);
  CHECK(r.passed());
  CHECK(r.n == 3);
  Budgets tight;
  tight.max_macdonald = 2;
  CHECK(verify_shuffle(3, tight).verdict == "skipped");
}

TEST_CASE("verification reports serialize") {
  auto r = verify_main_identity(rs_of("B2"), 7);
  auto j = to_json(r);
  CHECK(j["identity"] == "main");
  CHECK(j["type"] == "B2");
  CHECK(j["ell"] == 7);
  CHECK(j["verdict"] == "pass");
  CHECK(j["paths"].contains("block_sum"));
  CHECK(j["paths"].contains("catalan"));
  CHECK(j["paths"].contains("sign_isotypic"));
  CHECK(j.contains("ms"));

  std::string row = to_csv_row(r);
  CHECK(row.find("main,B2,7,0,136,pass") == 0);
  CHECK(csv_header().find("identity,type,ell,n") == 0);
}
