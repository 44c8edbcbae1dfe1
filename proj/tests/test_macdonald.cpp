#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxcat/macdonald.hpp"

using namespace coxcat;

namespace {

QT qpow(int a, int b) { return QT(PolyQT::monomial(1, a, b)); }

SymFunc ht(std::initializer_list<int> mu) { return macdonald_modified(Partition(mu)); }

}  // namespace

TEST_CASE("small modified Macdonald polynomials") {
  CHECK(ht({1}) == sf_s(Partition{1}));

  SymFunc h2 = ht({2});
  CHECK(h2.coeff(Partition{2}) == QT(1));
  CHECK(h2.coeff(Partition{1, 1}) == QT::q());

  SymFunc h11 = ht({1, 1});
  CHECK(h11.coeff(Partition{2}) == QT(1));
  CHECK(h11.coeff(Partition{1, 1}) == QT::t());

  SymFunc h21 = ht({2, 1});
  CHECK(h21.coeff(Partition{3}) == QT(1));
  CHECK(h21.coeff(Partition{2, 1}) == QT::q() + QT::t());
  CHECK(h21.coeff(Partition{1, 1, 1}) == QT::q() * QT::t());

  CHECK(ht({3}).coeff(Partition{2, 1}) == QT::q() + QT::q() * QT::q());
  CHECK(ht({3}).coeff(Partition{1, 1, 1}) == qpow(3, 0));
  CHECK(ht({1, 1, 1}).coeff(Partition{1, 1, 1}) == qpow(0, 3));
}

TEST_CASE("Macdonald specialization battery") {
  for (int n = 1; n <= 6; ++n) {
    SymFunc p1n = convert(sf_p(Partition(std::vector<int>(n, 1))), Basis::S);
    for (const auto& mu : partitions_of(n)) {
      CAPTURE(n, mu.str());
      SymFunc h = macdonald_modified(mu);
      // transpose symmetry: Htilde_{mu'}(q,t) = Htilde_mu(t,q)
      SymFunc hc = macdonald_modified(mu.conjugate());
      for (const auto& [la, c] : h.terms) CHECK(hc.coeff(la) == c.swap_qt());
      // q = t = 1 collapse to p_1^n
      for (const auto& [la, c] : p1n.terms) {
        CHECK(h.coeff(la).evaluate(1, 1) == c.evaluate(1, 1));
      }
      // extreme Schur coefficients
      CHECK(h.coeff(Partition(std::vector<int>(n, 1))) ==
            qpow(static_cast<int>(mu.conjugate().n_stat()), static_cast<int>(mu.n_stat())));
      CHECK(h.coeff(Partition{std::vector<int>(1, n)}) == QT(1));
    }
  }
}

TEST_CASE("Gram-Schmidt result does not depend on the linear extension") {
  // Dominance order is total below n = 6, so the first degree where two
  // linear extensions can differ is 6.
  auto conj_order = [](int n) {
    const auto& tab = symtab::degree_tables(n);
    auto order = macdetail::ascending_lex_order(n);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return tab.parts[b].conjugate() < tab.parts[a].conjugate();
    });
    return order;
  };

  SECTION("symbolically in degree 5") {
    CHECK(macdetail::gram_schmidt_macdonald(5, macdetail::ascending_lex_order(5)) ==
          macdetail::gram_schmidt_macdonald(5, conj_order(5)));
  }
  SECTION("over the evaluation grid in degree 6, where the extensions differ") {
    const int n = 6;
    auto lex = macdetail::ascending_lex_order(n);
    auto by_conj = conj_order(n);
    REQUIRE(lex != by_conj);
    // points with q0^a t0^b != 1 and q0^a != t0^b for all relevant exponents
    for (auto [q0, t0] : std::vector<std::pair<Rat, Rat>>{{2, 3}, {3, 2}, {5, 7}, {2, 7}, {7, 3}}) {
      const auto& tab = symtab::degree_tables(n);
      const auto& m2p = tab.to_p.at(Basis::M);
      std::vector<Rat> w(tab.parts.size());
      for (std::size_t k = 0; k < w.size(); ++k) {
        Rat v(tab.parts[k].z());
        for (int part : tab.parts[k].parts)
          v *= (Rat(1) - macdetail::rat_pow(q0, part)) / (Rat(1) - macdetail::rat_pow(t0, part));
        w[k] = v;
      }
      std::vector<std::vector<Rat>> gram(w.size(), std::vector<Rat>(w.size(), Rat(0)));
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
          for (std::size_t k = 0; k < w.size(); ++k) gram[i][j] += m2p[i][k] * m2p[j][k] * w[k];
      auto a = macdetail::gram_schmidt_monomial<Rat>(gram, lex);
      auto b = macdetail::gram_schmidt_monomial<Rat>(gram, by_conj);
      CHECK(a.monic_m == b.monic_m);
    }
  }
}

TEST_CASE("monic Macdonald polynomials are pairwise orthogonal") {
  for (int n : {2, 3, 4}) {
    const auto& tab = symtab::degree_tables(n);
    auto monic = macdetail::gram_schmidt_macdonald(n, macdetail::ascending_lex_order(n));
    for (std::size_t i = 0; i < monic.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        CAPTURE(n, i, j);
        CHECK(macdetail::pair_p(monic[i], monic[j], tab.parts).is_zero());
      }
  }
}

TEST_CASE("nabla on small inputs") {
  CHECK(nabla(sf_e(1)) == sf_e(1));

  SymFunc ne2 = nabla(convert(sf_e(2), Basis::S));
  CHECK(ne2.coeff(Partition{2}) == QT(1));
  CHECK(ne2.coeff(Partition{1, 1}) == QT::q() + QT::t());

  // <nabla e_2, s_{1,1}> is the n=2 q,t-Catalan and its Hilbert series is 1+q+t
  CHECK(hall_inner(nabla_e(2), sf_s(Partition{1, 1})) == QT::q() + QT::t());
  CHECK(hall_inner(nabla_e(2), sf_p(Partition{1, 1})).evaluate(1, 1) == 3);

  // <nabla e_3, e_3> = q^3 + q^2 t + q t^2 + q t + t^3
  QT c3 = hall_inner(nabla_e(3), sf_e(Partition{3}));
  CHECK(c3 == qpow(3, 0) + qpow(2, 1) + qpow(1, 2) + qpow(1, 1) + qpow(0, 3));
}

TEST_CASE("nabla preserves degree and inverts exactly") {
  std::mt19937 rng(3);
  for (int n : {1, 2, 3, 4}) {
    std::map<Partition, QT> terms;
    for (const auto& la : partitions_of(n)) {
      int c = std::uniform_int_distribution<int>(-2, 2)(rng);
      if (c) terms[la] = QT(c);
    }
    if (terms.empty()) continue;
    SymFunc f = make_symfunc(Basis::S, n, std::move(terms));
    SymFunc nf = nabla(f);
    CHECK(nf.degree == n);
    CHECK(nf.basis == Basis::S);
    CHECK(nabla_inverse(nf) == f);
  }
}

TEST_CASE("Macdonald basis round trip and eigenproperty") {
  for (int n : {2, 3, 4}) {
    for (const auto& mu : partitions_of(n)) {
      SymFunc h = macdonald_modified(mu);
      SymFunc in_ht = to_macdonald_basis(h);
      REQUIRE(in_ht.terms.size() == 1);
      CHECK(in_ht.coeff(mu) == QT(1));
      SymFunc back = from_macdonald_basis(in_ht, Basis::S);
      CHECK(back == h);
      // eigenvalue on nabla
      SymFunc nh = nabla(h);
      CHECK(nh == qpow(static_cast<int>(mu.conjugate().n_stat()), static_cast<int>(mu.n_stat())) * h);
    }
  }
}

TEST_CASE("nabla pairings match the coinvariant dimension laws") {
  // <nabla e_n, p_1^n>|_{q=t=1} = (n+1)^{n-1}
  for (int n = 1; n <= 5; ++n) {
    SymFunc p1n = sf_p(Partition(std::vector<int>(n, 1)));
    Rat dim = hall_inner(nabla_e(n), p1n).evaluate(1, 1);
    Int expect = 1;
    for (int i = 0; i < n - 1; ++i) expect *= n + 1;
    CHECK(dim == Rat(expect));
  }
  // coefficients of <h_la, nabla e_n> are polynomials with nonnegative
  // integer coefficients, symmetric in q and t
  for (int n = 1; n <= 5; ++n) {
    for (const auto& la : partitions_of(n)) {
      QT v = hall_inner(sf_h(la), nabla_e(n));
      CAPTURE(n, la.str());
      CHECK(v.is_polynomial());
      CHECK(v == v.swap_qt());
      for (const auto& [m, c] : v.num.terms) CHECK(c > 0);
    }
  }
}

TEST_CASE("Macdonald degree budget") {
  Budgets tight;
  tight.max_macdonald = 3;
  CHECK_THROWS_AS(macdonald_modified(Partition{3, 1}, tight), BudgetError);
  CHECK_THROWS_AS(nabla(sf_e(4), tight), BudgetError);
  CHECK_NOTHROW(macdonald_modified(Partition{2, 1}, tight));
}
