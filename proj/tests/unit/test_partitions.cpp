#include <doctest.h>

#include <vector>

#include "ospnil/error.hpp"
#include "ospnil/matrices.hpp"
#include "ospnil/partitions.hpp"

using namespace ospnil;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// dim g - dim of the centralizer of a representative, by exact rank.
long oracle_orbit_dim(const Partition& lambda, ClassicalKind kind) {
  const int d = lambda.size();
  const Matrix x = classical_representative(lambda, kind);
  if (kind == ClassicalKind::Orthogonal) {
    EvenElement e{SuperSpace(d, 0), x, Matrix()};
    return classical_algebra_dim(d, kind) - classical_centralizer_dim_oracle(e).first;
  }
  EvenElement e{SuperSpace(0, d), Matrix(), x};
  return classical_algebra_dim(d, kind) - classical_centralizer_dim_oracle(e).second;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction sorts and rejects non-positive parts") {
  const auto p = P({1, 3, 1});
  CHECK(p.vec() == std::vector<int>{3, 1, 1});
  CHECK(p.size() == 5);
  CHECK(p.length() == 3);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.str() == "(3,1,1)");
  CHECK(Partition().str() == "()");
  CHECK_THROWS_AS(P({2, 0}), DomainError);
  CHECK_THROWS_AS(P({-1}), DomainError);
}

TEST_CASE("transpose is an involution") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(p.transposed().size() == n);
      CHECK(p.transposed().transposed() == p);
    }
  CHECK(P({3, 1}).transposed() == P({2, 1, 1}));
}

TEST_CASE("membership predicates") {
  CHECK(is_orthogonal_partition(P({2, 2, 1}), 5));
  CHECK_FALSE(is_orthogonal_partition(P({2, 1, 1, 1}), 5));
  CHECK(is_orthogonal_partition(P({1, 1, 1, 1, 1}), 5));
  CHECK_FALSE(is_orthogonal_partition(P({2, 2, 1}), 6));

  CHECK(is_symplectic_partition(P({2, 2}), 4));
  CHECK_FALSE(is_symplectic_partition(P({3, 1}), 4));
  CHECK(is_symplectic_partition(P({2, 1, 1}), 4));

  CHECK(is_very_even(P({4, 4})));
  CHECK(is_very_even(P({2, 2, 2, 2})));
  CHECK_FALSE(is_very_even(P({3, 3})));
  CHECK_FALSE(is_very_even(P({4, 2})));
  CHECK_FALSE(is_very_even(Partition()));
}

TEST_CASE("partitions_of counts and order") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[n]);
  const auto five = partitions_of(5);
  for (std::size_t i = 1; i < five.size(); ++i) CHECK(five[i - 1] > five[i]);
}

TEST_CASE("golden orbit lists") {
  const auto o5 = enumerate_orthogonal(5);
  const std::vector<LabeledPartition> want5{
      {P({5})}, {P({3, 1, 1})}, {P({2, 2, 1})}, {P({1, 1, 1, 1, 1})}};
  CHECK(o5 == want5);

  const std::vector<Partition> sp4{P({4}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
  CHECK(enumerate_symplectic(4) == sp4);

  const auto o8 = enumerate_orthogonal(8);
  REQUIRE(o8.size() == 12);
  const std::vector<LabeledPartition> labeled{{P({4, 4}), Label::I},
                                              {P({4, 4}), Label::II},
                                              {P({2, 2, 2, 2}), Label::I},
                                              {P({2, 2, 2, 2}), Label::II}};
  std::vector<LabeledPartition> got;
  for (const auto& lp : o8)
    if (lp.label != Label::None) got.push_back(lp);
  CHECK(got == labeled);
  CHECK(o8[1].str() == "(5,3)");
}

TEST_CASE("enumerated labels sit exactly on very even partitions") {
  for (int m = 1; m <= 12; ++m) {
    for (const auto& lp : enumerate_orthogonal(m)) {
      CHECK(is_orthogonal_partition(lp.partition, m));
      CHECK((lp.label != Label::None) == is_very_even(lp.partition));
    }
    if (m % 2 == 0)
      for (const auto& mu : enumerate_symplectic(m)) CHECK(is_symplectic_partition(mu, m));
  }
}

TEST_CASE("classical orbit dimensions") {
  CHECK(classical_orbit_dim(P({2}), ClassicalKind::Symplectic) == 2);
  CHECK(classical_orbit_dim(P({1, 1}), ClassicalKind::Symplectic) == 0);
  CHECK(classical_orbit_dim(P({3}), ClassicalKind::Orthogonal) == 2);
  CHECK_THROWS_AS(classical_orbit_dim(P({3, 1}), ClassicalKind::Symplectic), DomainError);
  CHECK_THROWS_AS(classical_orbit_dim(P({2, 1}), ClassicalKind::Orthogonal), DomainError);
  CHECK(classical_algebra_dim(5, ClassicalKind::Orthogonal) == 10);
  CHECK(classical_algebra_dim(4, ClassicalKind::Symplectic) == 10);
}

TEST_CASE("classical orbit dimension matches the centralizer rank oracle") {
  for (int d = 1; d <= 10; ++d) {
    for (const auto& lp : enumerate_orthogonal(d)) {
      if (lp.label == Label::II) continue;
      CAPTURE(lp.str());
      CHECK(classical_orbit_dim(lp.partition, ClassicalKind::Orthogonal) ==
            oracle_orbit_dim(lp.partition, ClassicalKind::Orthogonal));
    }
    if (d % 2 == 0)
      for (const auto& mu : enumerate_symplectic(d)) {
        CAPTURE(mu.str());
        CHECK(classical_orbit_dim(mu, ClassicalKind::Symplectic) == oracle_orbit_dim(mu, ClassicalKind::Symplectic));
      }
  }
}

TEST_CASE("classical orbit dimension is monotone in dominance") {
  for (int d = 1; d <= 12; ++d) {
    std::vector<Partition> o;
    for (const auto& lp : enumerate_orthogonal(d))
      if (lp.label != Label::II) o.push_back(lp.partition);
    for (const auto& a : o)
      for (const auto& b : o)
        if (a.dominated_by(b))
          CHECK(classical_orbit_dim(a, ClassicalKind::Orthogonal) <= classical_orbit_dim(b, ClassicalKind::Orthogonal));
    if (d % 2 != 0) continue;
    const auto sp = enumerate_symplectic(d);
    for (const auto& a : sp)
      for (const auto& b : sp)
        if (a.dominated_by(b))
          CHECK(classical_orbit_dim(a, ClassicalKind::Symplectic) <= classical_orbit_dim(b, ClassicalKind::Symplectic));
  }
}

TEST_CASE("sub-partitions") {
  const auto lambda = P({3, 2, 2, 1});
  const std::vector<int> pattern{2, 2, 1, 0};
  const auto sub = find_subpartition(lambda, pattern);
  REQUIRE(sub.has_value());
  CHECK(sub->indices.size() == 3);
  CHECK(sub->zeros == 1);
  const std::vector<int> missing{3, 3};
  CHECK_FALSE(find_subpartition(lambda, missing).has_value());
}

}  // TEST_SUITE
