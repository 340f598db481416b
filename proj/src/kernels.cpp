#include "ospnil/kernels.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

#include "ospnil/error.hpp"
#include "ospnil/kappa.hpp"
#include "ospnil/order.hpp"

namespace ospnil {

int max_threads() { return omp_get_max_threads(); }

namespace kernels {

std::vector<std::uint8_t> leq_matrix(const std::vector<GradedDiagram>& diagrams, ExecPolicy policy) {
  const std::size_t n = diagrams.size();
  int K = 0;
  for (const auto& d : diagrams) K = std::max(K, d.max_length());
  std::vector<std::vector<std::pair<int, int>>> prof(n);
  for (std::size_t i = 0; i < n; ++i) prof[i] = column_profile(diagrams[i], K);

  std::vector<std::uint8_t> rel(n * n, 0);
  auto row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (int k = 0; k <= K && ok; ++k)
        ok = prof[i][k].first <= prof[j][k].first && prof[i][k].second <= prof[j][k].second;
      rel[i * n + j] = ok;
    }
  };
  if (policy == ExecPolicy::Serial) {
    for (std::size_t i = 0; i < n; ++i) row(i);
  } else {
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i) row(static_cast<std::size_t>(i));
  }
  return rel;
}

namespace {

OracleRecord check_one(const GradedDiagram& d, const SuperSpace& space) {
  OracleRecord r;
  r.diagram = d;
  const OddElement x = representative(d, space);
  r.member = is_osp_member(space, x.supermatrix(), Parity::Odd);
  r.profile = kernel_profile(x);
  r.recovered = diagram_from_profile(r.profile);
  r.oracle_dim = odd_orbit_dim_oracle(x);
  r.formula_dim = orbit_dim(d, space.m(), space.N());
  const EvenElement k = kappa_matrix(x);
  r.jordan0 = jordan_type(k.a);
  r.jordan1 = jordan_type(k.b);
  return r;
}

}  // namespace

std::vector<OracleRecord> oracle_batch(const std::vector<GradedDiagram>& diagrams, const SuperSpace& space,
                                       ExecPolicy policy) {
  std::vector<OracleRecord> out(diagrams.size());
  if (policy == ExecPolicy::Serial) {
    for (std::size_t i = 0; i < diagrams.size(); ++i) out[i] = check_one(diagrams[i], space);
    return out;
  }
  const auto n = static_cast<std::ptrdiff_t>(diagrams.size());
  std::vector<std::string> errors(diagrams.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = check_one(diagrams[i], space);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw DomainError(e);
  return out;
}

namespace {

using Witnesses = std::map<GradedDiagram, std::pair<std::size_t, Matrix>>;

void record(Witnesses& w, GradedDiagram d, std::size_t index, const Matrix& u) {
  auto it = w.find(d);
  if (it == w.end())
    w.emplace(std::move(d), std::make_pair(index, u));
  else if (index < it->second.first)
    it->second = {index, u};
}

// Base-3 digits of idx as coefficients 0, 1, -1; nullopt when the support is too large.
std::optional<Matrix> combination(const std::vector<Matrix>& basis, std::size_t idx, int max_support,
                                  std::size_t rows, std::size_t cols) {
  Matrix u(rows, cols);
  int support = 0;
  for (const auto& b : basis) {
    const auto digit = idx % 3;
    idx /= 3;
    if (digit == 0) continue;
    if (++support > max_support) return std::nullopt;
    if (digit == 1)
      u += b;
    else
      u -= b;
  }
  return u;
}

}  // namespace

std::vector<Realization> realize_combinations(const SuperSpace& space, const std::vector<Matrix>& basis,
                                              int max_support, ExecPolicy policy) {
  if (basis.size() > 20) throw DomainError("too many basis elements for exhaustive enumeration");
  std::size_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= 3;
  const std::size_t rows = space.N(), cols = space.m();

  auto visit = [&](std::size_t idx, Witnesses& w) {
    auto u = combination(basis, idx, max_support, rows, cols);
    if (!u) return;
    record(w, diagram_of(OddElement(space, *u)), idx, *u);
  };

  Witnesses merged;
  if (policy == ExecPolicy::Serial) {
    for (std::size_t idx = 0; idx < total; ++idx) visit(idx, merged);
  } else {
    const auto n = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel
    {
      Witnesses local;
#pragma omp for schedule(dynamic, 64)
      for (std::ptrdiff_t idx = 0; idx < n; ++idx) visit(static_cast<std::size_t>(idx), local);
#pragma omp critical(ospnil_realize_merge)
      for (auto& [d, w] : local) record(merged, d, w.first, w.second);
    }
  }

  std::vector<Realization> out;
  for (auto& [d, w] : merged) out.push_back({d, std::move(w.second), w.first});
  return out;
}

}  // namespace kernels
}  // namespace ospnil
