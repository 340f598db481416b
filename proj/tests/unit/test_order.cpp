#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "ospnil/error.hpp"
#include "ospnil/kappa.hpp"
#include "ospnil/kernels.hpp"
#include "ospnil/order.hpp"

using namespace ospnil;

namespace {

GradedDiagram D(const char* compact) { return GradedDiagram::parse(compact); }

bool is_chain(const HasseDiagram& h) {
  if (h.covers.size() + 1 != h.nodes.size()) return false;
  std::vector<int> up(h.nodes.size()), down(h.nodes.size());
  for (auto [lo, hi] : h.covers) ++up[lo], ++down[hi];
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    if (up[i] > 1 || down[i] > 1) return false;
  return true;
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("column deletion") {
  CHECK(delete_columns(D("01010"), 1) == D("1010"));
  CHECK(delete_columns(D("01,10,0"), 0) == D("01,10,0"));
  CHECK(delete_columns(D("01,10,0"), 2).empty());
  const auto profile = column_profile(D("01,10,0"), 2);
  CHECK(profile == std::vector<std::pair<int, int>>{{3, 2}, {1, 1}, {0, 0}});
}

TEST_CASE("closure order examples") {
  for (const auto& d : enumerate(3, 2)) CHECK(leq(D("0,0,0,1,1"), d));
  CHECK(leq(D("01,10,0"), D("101,0,0")));
  CHECK_FALSE(leq(D("101,0,0"), D("01,10,0")));
}

TEST_CASE("closure order is a partial order") {
  for (int m = 1; m + 2 <= 14; ++m)
    for (int N = 2; m + N <= 14; N += 2) {
      const auto ds = enumerate(m, N);
      const std::size_t n = ds.size();
      const auto rel = kernels::leq_matrix(ds, ExecPolicy::Parallel);
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        ok = ok && rel[i * n + i];
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && rel[i * n + j] && rel[j * n + i]) ok = false;
          if (!rel[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (rel[j * n + k] && !rel[i * n + k]) ok = false;
        }
      }
      CAPTURE(m);
      CAPTURE(N);
      CHECK(ok);
    }
}

TEST_CASE("gamma examples") {
  const auto g32 = hasse_gamma(3, 2);
  CHECK(g32.nodes.size() == 4);
  CHECK(is_chain(g32));
  const auto g12 = hasse_gamma(1, 2);
  CHECK(g12.nodes.size() == 2);
  CHECK(is_chain(g12));
  CHECK(g12.has_cover(g12.index_of({D("0,1,1")}), g12.index_of({D("101")})));
  CHECK_THROWS_AS(g12.index_of({D("01010")}), DomainError);
}

TEST_CASE("gamma has a unique maximal node, the global maximum") {
  for (int m = 1; m + 2 <= 12; ++m)
    for (int N = 2; m + N <= 12; N += 2) {
      const auto g = hasse_gamma(m, N);
      std::set<std::size_t> has_up;
      for (auto [lo, hi] : g.covers) has_up.insert(lo);
      REQUIRE(g.nodes.size() - has_up.size() == 1);
      for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (!has_up.count(i)) CHECK(g.nodes[i].diagram == global_max(m, N).diagram);
    }
}

TEST_CASE("gamma is serial/parallel independent") {
  for (auto [m, N] : std::vector<std::pair<int, int>>{{4, 4}, {5, 6}, {8, 4}})
    CHECK(hasse_gamma(m, N, ExecPolicy::Serial).covers == hasse_gamma(m, N, ExecPolicy::Parallel).covers);
}

TEST_CASE("transitive reduction") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  CHECK(transitive_reduction(3, edges) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(transitive_reduction(2, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("delta equals gamma without unstable diagrams") {
  for (auto [m, N] : std::vector<std::pair<int, int>>{{3, 2}, {1, 2}, {5, 4}}) {
    const auto g = hasse_gamma(m, N), d = hasse_delta(m, N);
    CHECK(d.nodes == g.nodes);
    CHECK(d.covers == g.covers);
  }
}

TEST_CASE("delta surgery") {
  for (int m = 2; m + 2 <= 12; m += 2)
    for (int N = 2; m + N <= 12; N += 2) {
      const auto g = hasse_gamma(m, N);
      const auto d = hasse_delta(m, N);
      CHECK(d.nodes == enumerate_labeled(m, N));
      // Covers between stable nodes survive.
      for (auto [lo, hi] : g.covers) {
        const auto& a = g.nodes[lo];
        const auto& b = g.nodes[hi];
        if (is_stable(a.diagram) && is_stable(b.diagram)) CHECK(d.has_cover(d.index_of(a), d.index_of(b)));
      }
      // I and II copies are incomparable.
      const auto below = d.down_closure();
      for (std::size_t i = 0; i < d.nodes.size(); ++i)
        for (std::size_t j = 0; j < d.nodes.size(); ++j)
          if (d.nodes[i].label == Label::I && d.nodes[j].label == Label::II) CHECK_FALSE(below[i][j]);
    }
}

TEST_CASE("pure pairs share d0") {
  std::size_t pairs = 0;
  for (int m = 2; m + 2 <= 14; m += 2)
    for (int N = 2; m + N <= 14; N += 2) {
      const auto ds = enumerate(m, N);
      for (const auto& a : ds)
        for (const auto& b : ds) {
          if (a == b || is_stable(a) || is_stable(b) || !leq(b, a)) continue;
          if (!is_pure_pair(a, b)) continue;
          CHECK(d0d1(a).first == d0d1(b).first);
          ++pairs;
        }
    }
  CHECK(pairs > 0);
  CHECK_THROWS_AS(is_pure_pair(D("01010"), D("0,0,0,1,1")), DomainError);
}

TEST_CASE("closure sets") {
  for (auto [m, N] : std::vector<std::pair<int, int>>{{3, 2}, {4, 4}, {6, 4}}) {
    const auto delta = hasse_delta(m, N);
    CHECK(closure_set(global_max(m, N), delta).size() == delta.nodes.size());
  }
  const std::vector<LabeledDiagram> want{{D("01,10,0")}, {D("0,0,0,1,1")}};
  auto got = closure_set({D("01,10,0")}, 3, 2);
  std::sort(got.begin(), got.end());
  CHECK(got == want);
}

}  // TEST_SUITE
