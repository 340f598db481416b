#include "ospnil/order.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ospnil/error.hpp"
#include "ospnil/kernels.hpp"

namespace ospnil {

GradedDiagram delete_columns(const GradedDiagram& d, int k) {
  if (k <= 0) return d;
  std::vector<GradedRow> rows;
  for (const auto& r : d.rows())
    if (r.length > k) rows.push_back({r.length - k, r.start ^ (k & 1)});
  return GradedDiagram(std::move(rows));
}

std::vector<std::pair<int, int>> column_profile(const GradedDiagram& d, int max_k) {
  std::vector<std::pair<int, int>> prof;
  prof.reserve(max_k + 1);
  for (int k = 0; k <= max_k; ++k) {
    const auto dk = delete_columns(d, k);
    prof.emplace_back(dk.n0(), dk.n1());
  }
  return prof;
}

bool leq(const GradedDiagram& d, const GradedDiagram& dp) {
  const int K = std::max(d.max_length(), dp.max_length());
  for (int k = 0; k <= K; ++k) {
    const auto a = delete_columns(d, k), b = delete_columns(dp, k);
    if (a.n0() > b.n0() || a.n1() > b.n1()) return false;
  }
  return true;
}

std::size_t HasseDiagram::index_of(const LabeledDiagram& d) const {
  auto it = std::find(nodes.begin(), nodes.end(), d);
  if (it == nodes.end()) throw DomainError("diagram " + d.key() + " is not a node");
  return static_cast<std::size_t>(it - nodes.begin());
}

bool HasseDiagram::has_cover(std::size_t lower, std::size_t upper) const {
  return std::binary_search(covers.begin(), covers.end(), Edge{lower, upper});
}

std::vector<std::vector<bool>> HasseDiagram::down_closure() const {
  const std::size_t n = nodes.size();
  std::vector<std::vector<std::size_t>> lower_of(n);
  for (auto [lo, up] : covers) lower_of[up].push_back(lo);
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> stack{i};
    below[i][i] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : lower_of[v])
        if (!below[i][w]) {
          below[i][w] = true;
          stack.push_back(w);
        }
    }
  }
  return below;
}

std::vector<Edge> transitive_reduction(std::size_t n, const std::vector<Edge>& edges) {
  // reach[i][j]: j reachable upward from i by a nonempty path.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) reach[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (reach[i][i]) throw DomainError("relation contains a cycle");
  std::vector<Edge> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!reach[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (reach[i][k] && reach[k][j]) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

HasseDiagram hasse_gamma(int m, int N, ExecPolicy policy) {
  const auto diagrams = enumerate(m, N);
  const std::size_t n = diagrams.size();
  const auto rel = kernels::leq_matrix(diagrams, policy);
  std::vector<Edge> strict;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rel[i * n + j]) strict.emplace_back(i, j);
  HasseDiagram g;
  for (const auto& d : diagrams) g.nodes.push_back({d, Label::None});
  g.covers = transitive_reduction(n, strict);
  return g;
}

HasseDiagram hasse_delta(int m, int N, SurgeryLog* log, ExecPolicy policy) {
  const HasseDiagram gamma = hasse_gamma(m, N, policy);
  HasseDiagram delta;
  // copies[i]: indices in delta.nodes of the labeled copies of gamma node i.
  std::vector<std::vector<std::size_t>> copies(gamma.nodes.size());
  std::vector<bool> stable(gamma.nodes.size());
  for (std::size_t i = 0; i < gamma.nodes.size(); ++i) {
    stable[i] = is_stable(gamma.nodes[i].diagram);
    for (auto& l : label(gamma.nodes[i].diagram)) {
      copies[i].push_back(delta.nodes.size());
      delta.nodes.push_back(std::move(l));
    }
  }

  std::vector<Edge> edges;
  for (auto [lo, up] : gamma.covers) {
    if (stable[lo] && stable[up]) {
      edges.emplace_back(copies[lo][0], copies[up][0]);
    } else if (stable[lo]) {
      edges.emplace_back(copies[lo][0], copies[up][0]);
      edges.emplace_back(copies[lo][0], copies[up][1]);
    } else if (stable[up]) {
      edges.emplace_back(copies[lo][0], copies[up][0]);
      edges.emplace_back(copies[lo][1], copies[up][0]);
    } else {
      edges.emplace_back(copies[lo][0], copies[up][0]);
      edges.emplace_back(copies[lo][1], copies[up][1]);
    }
  }
  std::sort(edges.begin(), edges.end());
  delta.covers = transitive_reduction(delta.nodes.size(), edges);

  if (log) {
    for (const auto& e : edges)
      if (!std::binary_search(delta.covers.begin(), delta.covers.end(), e))
        log->removed.emplace_back(delta.nodes[e.first].key(), delta.nodes[e.second].key());
  }
  return delta;
}

bool is_pure_pair(const GradedDiagram& d, const GradedDiagram& dp) {
  if (is_stable(d) || is_stable(dp)) throw DomainError("pure pairs are formed by unstable diagrams");
  if (d == dp || !leq(dp, d)) throw DomainError("pure pair requires D' < D");
  for (const auto& mid : enumerate(d.n0(), d.n1())) {
    if (mid == d || mid == dp) continue;
    if (leq(dp, mid) && leq(mid, d) && is_stable(mid)) return false;
  }
  return true;
}

std::vector<LabeledDiagram> closure_set(const LabeledDiagram& dp, const HasseDiagram& delta) {
  const std::size_t top = delta.index_of(dp);
  const auto below = delta.down_closure();
  std::vector<LabeledDiagram> out;
  for (std::size_t j = 0; j < delta.nodes.size(); ++j)
    if (below[top][j]) out.push_back(delta.nodes[j]);
  return out;
}

std::vector<LabeledDiagram> closure_set(const LabeledDiagram& dp, int m, int N) {
  return closure_set(dp, hasse_delta(m, N));
}

}  // namespace ospnil
