#include "ospnil/kappa.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ospnil/error.hpp"
#include "ospnil/order.hpp"

namespace ospnil {

EvenOrbitKey kappa_of_diagram(const LabeledDiagram& d) {
  auto [zero, one] = d0d1(d.diagram);
  return {{std::move(zero), d.label}, std::move(one)};
}

namespace {

void require_key(const LabeledPartition& lambda, const Partition& mu, int m, int N) {
  if (!is_orthogonal_partition(lambda.partition, m))
    throw DomainError(lambda.partition.str() + " is not an orthogonal partition of " + std::to_string(m));
  if (!is_symplectic_partition(mu, N))
    throw DomainError(mu.str() + " is not a symplectic partition of " + std::to_string(N));
  if (is_very_even(lambda.partition) != (lambda.label != Label::None))
    throw DomainError("label I/II is required exactly for very even partitions");
}

}  // namespace

std::vector<LabeledDiagram> fiber(const LabeledPartition& lambda, const Partition& mu, int m, int N) {
  require_key(lambda, mu, m, N);
  const EvenOrbitKey key{lambda, mu};
  std::vector<LabeledDiagram> out;
  for (const auto& d : enumerate_labeled(m, N))
    if (kappa_of_diagram(d) == key) out.push_back(d);
  return out;
}

bool fiber_predicted_empty(const Partition& lambda, const Partition& mu) {
  for (int l : lambda.parts()) {
    if (l <= 1) continue;
    if (mu.multiplicity(l - 1) == 0 && mu.multiplicity(l) == 0 && mu.multiplicity(l + 1) == 0) return true;
  }
  return false;
}

int common_block_count(const Partition& lambda, const Partition& mu) {
  auto common = [&](int v) { return v == 0 || (lambda.multiplicity(v) >= 2 && mu.multiplicity(v) >= 2); };
  int count = 0;
  for (int k = 1; k <= std::min(lambda.largest(), mu.largest()); ++k)
    if (common(k) && common(k - 1)) ++count;
  return count;
}

MaxDiagramResult max_diagram(const LabeledPartition& lambda, const Partition& mu, int m, int N) {
  const auto fib = fiber(lambda, mu, m, N);
  if (fib.empty()) throw DomainError("empty fiber over " + EvenOrbitKey{lambda, mu}.str());
  MaxDiagramResult r;
  r.common_blocks = common_block_count(lambda.partition, mu);
  for (const auto& d : fib) {
    const bool dominated = std::any_of(fib.begin(), fib.end(), [&](const LabeledDiagram& e) {
      return e.diagram != d.diagram && leq(d.diagram, e.diagram);
    });
    if (!dominated) r.maximal.push_back(d);
  }
  r.unique = r.maximal.size() == 1;
  return r;
}

LabeledDiagram global_max(int m, int N) {
  const auto all = enumerate(m, N);
  if (all.empty()) throw DomainError("no diagrams for these dimensions");
  GradedDiagram cur = all.front();
  for (const auto& d : all)
    if (leq(cur, d)) cur = d;
  for (const auto& d : all)
    if (!leq(d, cur)) throw DomainError("no unique maximal diagram");
  if (!is_stable(cur)) throw DomainError("maximal diagram is unstable");
  return {cur, Label::None};
}

bool is_hook(const GradedDiagram& d) {
  if (d.empty() || d.max_length() % 2 == 0) return false;
  for (std::size_t i = 1; i < d.rows().size(); ++i)
    if (d.rows()[i].length != 1) return false;
  return true;
}

bool is_case_4a(int m, int N) { return m % 2 == 0 && m / 2 < N / 2; }

long delta_D(const GradedDiagram& d) {
  long s = 0;
  for (int len = 1; len <= d.max_length(); len += 2) s += static_cast<long>(d.count(len, 0)) * d.count(len, 1);
  return s;
}

long even_orbit_dim(const EvenOrbitKey& key) {
  return classical_orbit_dim(key.ortho.partition, ClassicalKind::Orthogonal) +
         classical_orbit_dim(key.symp, ClassicalKind::Symplectic);
}

long orbit_dim(const GradedDiagram& d, int m, int N) {
  if (!is_valid(d, m, N)) throw DomainError("diagram " + d.compact() + " is not valid for osp(" + std::to_string(m) + "," + std::to_string(N) + ")");
  const long twice = even_orbit_dim(kappa_of_diagram({d, Label::None})) + static_cast<long>(m) * N - delta_D(d);
  if (twice % 2 != 0) throw DomainError("internal: odd orbit dimension is not an integer for " + d.compact());
  return twice / 2;
}

namespace {

const LabeledDiagram& unique_max(const MaxDiagramResult& r) {
  if (!r.unique) throw DomainError("fiber has several maximal diagrams; the dimension formula needs a unique one");
  return r.maximal.front();
}

}  // namespace

long preimage_dim(const LabeledPartition& lambda, const Partition& mu, int m, int N) {
  const auto r = max_diagram(lambda, mu, m, N);
  const auto& top = unique_max(r);
  const long twice = even_orbit_dim({lambda, mu}) + static_cast<long>(m) * N - delta_D(top.diagram);
  return twice / 2;
}

long fiber_dim(const LabeledPartition& lambda, const Partition& mu, int m, int N) {
  const auto r = max_diagram(lambda, mu, m, N);
  return orbit_dim(unique_max(r), m, N) - even_orbit_dim({lambda, mu});
}

}  // namespace ospnil
