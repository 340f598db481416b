#include <doctest.h>

#include <random>
#include <vector>

#include "ospnil/error.hpp"
#include "ospnil/kappa.hpp"
#include "ospnil/matrices.hpp"

using namespace ospnil;

namespace {

GradedDiagram D(const char* compact) { return GradedDiagram::parse(compact); }
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_SUITE("matrices") {

TEST_CASE("standard form") {
  const SuperSpace s(3, 2);
  CHECK(s.gram0() == Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(s.gram1() == Matrix{{0, 1}, {-1, 0}});
  CHECK(s.gram().rows() == 5);
  CHECK_THROWS_AS(SuperSpace(2, 3), DomainError);
}

TEST_CASE("u star sign convention") {
  const SuperSpace s(3, 2);
  const Matrix u{{0, 1, 0}, {0, 0, 1}};
  CHECK(u_star(s, u) == Matrix{{1, 0}, {0, -1}, {0, 0}});
  CHECK(u_star(s, Matrix(2, 3)).is_zero());
  CHECK_THROWS_AS(u_star(s, Matrix(3, 2)), DomainError);
}

TEST_CASE("super invariance") {
  const SuperSpace s(3, 2);
  const Matrix u{{1, 2, 0}, {0, -1, 3}};
  const OddElement x(s, u);
  CHECK(is_osp_member(s, x.supermatrix(), Parity::Odd));
  CHECK_FALSE(is_osp_member(s, x.supermatrix(), Parity::Even));
  CHECK(is_osp_member(s, Matrix(5, 5), Parity::Odd));
  CHECK(is_osp_member(s, Matrix(5, 5), Parity::Even));
  Matrix naive(5, 5);
  naive.set_block(0, 3, u.transpose());
  naive.set_block(3, 0, u);
  CHECK_FALSE(is_osp_member(s, naive, Parity::Odd));
}

TEST_CASE("kappa matrix") {
  const SuperSpace s(3, 2);
  const auto zero = kappa_matrix(OddElement(s, Matrix(2, 3)));
  CHECK(zero.a.is_zero());
  CHECK(zero.b.is_zero());
  const auto x = representative(D("01010"), s);
  const auto k = kappa_matrix(x);
  CHECK(k.satisfies_invariants());
  CHECK(k.supermatrix() == x.supermatrix() * x.supermatrix());
  CHECK(jordan_type(k.a) == P({3}));
  CHECK(jordan_type(k.b) == P({2}));
}

TEST_CASE("osp(1,2) degeneracy") {
  const SuperSpace s(1, 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> v(-4, 4);
  for (int t = 0; t < 200; ++t) {
    const Matrix u{{v(rng)}, {v(rng)}};
    const auto k = kappa_matrix(OddElement(s, u));
    CHECK(k.a.is_zero());
    CHECK((k.b * k.b).is_zero());
    CHECK(rank(k.b) <= 1);
  }
}

TEST_CASE("representative examples") {
  CHECK(representative(D("0,0,0,1,1"), SuperSpace(3, 2)).u.is_zero());
  const auto odd3 = representative(D("101"), SuperSpace(1, 2));
  CHECK(rank(odd3.u) == 1);
  CHECK(diagram_of(odd3) == D("101"));
  const auto top = representative(D("01010"), SuperSpace(3, 2));
  CHECK(is_osp_member(top.space, top.supermatrix(), Parity::Odd));
  CHECK(diagram_of(top) == D("01010"));
  CHECK_THROWS_AS(representative(D("010"), SuperSpace(3, 0)), DomainError);
  CHECK(jordan_type(kappa_matrix(representative(D("101,0,0"), SuperSpace(3, 2))).a) == P({1, 1, 1}));
}

TEST_CASE("representatives: membership, round trip, kappa, dimension, nilpotency") {
  for (int m = 1; m <= 8; ++m)
    for (int N = 0; m + N <= 10; N += 2) {
      const SuperSpace s(m, N);
      for (const auto& d : enumerate(m, N)) {
        CAPTURE(d.compact());
        const auto x = representative(d, s);
        const Matrix X = x.supermatrix();
        CHECK(is_osp_member(s, X, Parity::Odd));
        CHECK(diagram_of(x) == d);
        const auto k = kappa_matrix(x);
        CHECK(k.satisfies_invariants());
        const auto [d0, d1] = d0d1(d);
        CHECK(jordan_type(k.a) == d0);
        if (N > 0) CHECK(jordan_type(k.b) == d1);
        CHECK(odd_orbit_dim_oracle(x) == orbit_dim(d, m, N));
        CHECK(X.power(d.max_length()).is_zero());
        if (d.max_length() > 0) CHECK_FALSE(X.power(d.max_length() - 1).is_zero());
      }
    }
}

TEST_CASE("kernel profile recovers the diagram") {
  const auto x = representative(D("01,10,0"), SuperSpace(3, 2));
  const auto p = kernel_profile(x);
  CHECK(p.ker0.front() == 0);
  CHECK(p.ker0.back() == 3);
  CHECK(p.ker1.back() == 2);
  CHECK(diagram_from_profile(p) == D("01,10,0"));
  CHECK(diagram_of(OddElement(SuperSpace(3, 2), Matrix(2, 3))) == D("0,0,0,1,1"));
}

TEST_CASE("jordan type") {
  CHECK(jordan_type(Matrix(3, 3)) == P({1, 1, 1}));
  Matrix j(4, 4);
  for (int i = 0; i < 3; ++i) j(i, i + 1) = 1;
  CHECK(jordan_type(j) == P({4}));
  CHECK(is_nilpotent(j));
  CHECK_FALSE(is_nilpotent(Matrix::identity(2)));
  CHECK_THROWS_AS(jordan_type(Matrix::identity(2)), DomainError);
}

TEST_CASE("classical representatives") {
  for (int d = 1; d <= 9; ++d) {
    for (const auto& lp : enumerate_orthogonal(d)) {
      if (lp.label == Label::II) continue;
      const Matrix x = classical_representative(lp.partition, ClassicalKind::Orthogonal);
      CHECK(jordan_type(x) == lp.partition);
      CHECK(EvenElement{SuperSpace(d, 0), x, Matrix()}.satisfies_invariants());
    }
    if (d % 2 == 0)
      for (const auto& mu : enumerate_symplectic(d)) {
        const Matrix x = classical_representative(mu, ClassicalKind::Symplectic);
        CHECK(jordan_type(x) == mu);
        CHECK(EvenElement{SuperSpace(0, d), Matrix(), x}.satisfies_invariants());
      }
  }
}

TEST_CASE("dimension oracles") {
  const SuperSpace s(3, 2);
  CHECK(odd_orbit_dim_oracle(OddElement(s, Matrix(2, 3))) == 0);
  CHECK(odd_orbit_dim_oracle(representative(D("01010"), s)) == 5);
  CHECK(odd_orbit_dim_oracle(representative(D("01,10,0"), s)) == 3);
  const auto full = classical_centralizer_dim_oracle(EvenElement{s, Matrix(3, 3), Matrix(2, 2)});
  CHECK(full == std::pair<long, long>{3, 3});
  const auto sp2 = classical_centralizer_dim_oracle(
      EvenElement{SuperSpace(0, 2), Matrix(), classical_representative(P({2}), ClassicalKind::Symplectic)});
  CHECK(sp2.second == 1);
  const auto o3 = classical_centralizer_dim_oracle(
      EvenElement{SuperSpace(3, 0), classical_representative(P({3}), ClassicalKind::Orthogonal), Matrix()});
  CHECK(o3.first == 1);
  CHECK(orthogonal_algebra_basis(s.gram0()).size() == 3);
  CHECK(symplectic_algebra_basis(s.gram1()).size() == 3);
}

TEST_CASE("random nilpotent sampling") {
  const SuperSpace s(3, 2);
  std::mt19937_64 rng(11);
  std::size_t top = 0, samples = 0;
  for (int t = 0; t < 2000 && samples < 300; ++t) {
    const auto x = random_sparse_odd(s, rng, 0.5);
    if (!x) continue;
    ++samples;
    const auto d = diagram_of(*x);
    CHECK(is_valid(d, 3, 2));
    CHECK(odd_orbit_dim_oracle(*x) == orbit_dim(d, 3, 2));
    const auto k = kappa_matrix(*x);
    if (jordan_type(k.a) == P({3})) {
      CHECK(d == D("01010"));
      ++top;
    }
  }
  CHECK(samples > 0);
  CHECK(top > 0);
}

}  // TEST_SUITE
