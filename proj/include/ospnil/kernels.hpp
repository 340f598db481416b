#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ospnil/diagrams.hpp"
#include "ospnil/exec.hpp"
#include "ospnil/matrices.hpp"

// Batch kernels with a serial reference and an OpenMP path.  Outputs never
// depend on the policy or on the thread count.
namespace ospnil::kernels {

/// rel[i * n + j] == 1 iff leq(diagrams[i], diagrams[j]).
std::vector<std::uint8_t> leq_matrix(const std::vector<GradedDiagram>& diagrams, ExecPolicy policy);

struct OracleRecord {
  GradedDiagram diagram;
  bool member = false;  // representative passes is_osp_member
  GradedDiagram recovered;
  KernelProfile profile;
  long oracle_dim = 0;
  long formula_dim = 0;
  Partition jordan0;  // Jordan type of u* u
  Partition jordan1;  // Jordan type of u u*
};

/// Builds the representative of each diagram and runs every exact check on it.
std::vector<OracleRecord> oracle_batch(const std::vector<GradedDiagram>& diagrams, const SuperSpace& space,
                                       ExecPolicy policy);

struct Realization {
  GradedDiagram diagram;
  Matrix u;
  std::size_t index = 0;  // enumeration index of the first combination reaching the diagram
};

/// Every combination sum c_i basis[i] with c_i in {-1, 0, 1} and at most max_support
/// nonzero coefficients; one witness (smallest index) per diagram reached, in listing
/// order.  Throws DomainError beyond 20 basis elements.
std::vector<Realization> realize_combinations(const SuperSpace& space, const std::vector<Matrix>& basis,
                                              int max_support, ExecPolicy policy);

}  // namespace ospnil::kernels
