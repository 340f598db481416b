#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ospnil/diagrams.hpp"
#include "ospnil/exec.hpp"

namespace ospnil {

/// D^(k): the first k columns erased.  Row (len, start) becomes
/// (len - k, start ^ (k & 1)) when len > k and vanishes otherwise.
GradedDiagram delete_columns(const GradedDiagram& d, int k);

/// (n0(D^(k)), n1(D^(k))) for k = 0 .. max_k.
std::vector<std::pair<int, int>> column_profile(const GradedDiagram& d, int max_k);

/// Closure order on diagrams: n0 and n1 of D^(k) bounded by those of D'^(k) for all k >= 0.
bool leq(const GradedDiagram& d, const GradedDiagram& dp);

using Edge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

struct HasseDiagram {
  std::vector<LabeledDiagram> nodes;
  std::vector<Edge> covers;  // sorted

  std::size_t index_of(const LabeledDiagram& d) const;  // throws DomainError when absent
  bool has_cover(std::size_t lower, std::size_t upper) const;
  /// below[i][j] == true when node j <= node i (reflexive-transitive closure of covers).
  std::vector<std::vector<bool>> down_closure() const;
};

/// Covers of the strict relation given by arbitrary directed edges over n nodes
/// (closure then reduction).  Throws DomainError when the edges contain a cycle.
std::vector<Edge> transitive_reduction(std::size_t n, const std::vector<Edge>& edges);

HasseDiagram hasse_gamma(int m, int N, ExecPolicy policy = ExecPolicy::Parallel);

/// Edges dropped by the final transitive reduction of the labeled surgery.
struct SurgeryLog {
  std::vector<std::pair<std::string, std::string>> removed;
};

/// Gamma with every cover touching an unstable node deleted, unstable nodes split
/// into I/II, and the deleted covers reinserted (stable-unstable to both copies,
/// unstable-unstable I-I and II-II), then transitively reduced.
HasseDiagram hasse_delta(int m, int N, SurgeryLog* log = nullptr, ExecPolicy policy = ExecPolicy::Parallel);

/// D' < D, both unstable, every D'' strictly between them unstable.
/// Throws DomainError when a diagram is stable or D' is not strictly below D.
bool is_pure_pair(const GradedDiagram& d, const GradedDiagram& dp);

/// Every labeled diagram below dp in the order whose Hasse diagram is Delta(m, N).
std::vector<LabeledDiagram> closure_set(const LabeledDiagram& dp, int m, int N);
std::vector<LabeledDiagram> closure_set(const LabeledDiagram& dp, const HasseDiagram& delta);

}  // namespace ospnil
