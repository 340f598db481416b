#include <doctest.h>

#include <vector>

#include "ospnil/borel.hpp"
#include "ospnil/error.hpp"
#include "ospnil/kappa.hpp"
#include "ospnil/kernels.hpp"
#include "ospnil/order.hpp"

using namespace ospnil;

TEST_SUITE("kernels") {

TEST_CASE("leq matrix agrees with leq and across policies") {
  for (auto [m, N] : std::vector<std::pair<int, int>>{{3, 2}, {4, 4}, {7, 6}}) {
    const auto ds = enumerate(m, N);
    const auto serial = kernels::leq_matrix(ds, ExecPolicy::Serial);
    CHECK(serial == kernels::leq_matrix(ds, ExecPolicy::Parallel));
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < ds.size(); ++j) CHECK(static_cast<bool>(serial[i * ds.size() + j]) == leq(ds[i], ds[j]));
  }
}

TEST_CASE("oracle batch is policy independent") {
  const SuperSpace s(5, 4);
  const auto ds = enumerate(5, 4);
  const auto a = kernels::oracle_batch(ds, s, ExecPolicy::Serial);
  const auto b = kernels::oracle_batch(ds, s, ExecPolicy::Parallel);
  REQUIRE(a.size() == ds.size());
  REQUIRE(b.size() == ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(a[i].diagram == ds[i]);
    CHECK(a[i].diagram == b[i].diagram);
    CHECK(a[i].recovered == b[i].recovered);
    CHECK(a[i].profile == b[i].profile);
    CHECK(a[i].oracle_dim == b[i].oracle_dim);
    CHECK(a[i].formula_dim == b[i].formula_dim);
    CHECK(a[i].jordan0 == b[i].jordan0);
    CHECK(a[i].jordan1 == b[i].jordan1);
    CHECK(a[i].member);
  }
}

TEST_CASE("realize combinations is policy independent") {
  const SuperSpace s(4, 4);
  const auto basis = odd_part_of_borel(flag_of_order(mixed_order(4, 4), s), s);
  const auto a = kernels::realize_combinations(s, basis, 8, ExecPolicy::Serial);
  const auto b = kernels::realize_combinations(s, basis, 8, ExecPolicy::Parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].diagram == b[i].diagram);
    CHECK(a[i].index == b[i].index);
    CHECK(a[i].u == b[i].u);
    CHECK(diagram_of(OddElement(s, a[i].u)) == a[i].diagram);
  }
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].diagram < a[i].diagram);
  const auto sparse = kernels::realize_combinations(s, basis, 1, ExecPolicy::Parallel);
  CHECK(sparse.size() <= a.size());
  CHECK_THROWS_AS(kernels::realize_combinations(s, std::vector<Matrix>(21, basis.front()), 1, ExecPolicy::Serial),
                  DomainError);
}

TEST_CASE("thread count") { CHECK(max_threads() >= 1); }

}  // TEST_SUITE
