#pragma once

#include <string>
#include <vector>

#include "ospnil/diagrams.hpp"
#include "ospnil/partitions.hpp"

namespace ospnil {

/// Even nilpotent orbit O_{lambda, mu} of o(m) x sp(N).
struct EvenOrbitKey {
  LabeledPartition ortho;
  Partition symp;

  std::string str() const { return "(" + ortho.str() + ", " + symp.str() + ")"; }
  friend bool operator==(const EvenOrbitKey&, const EvenOrbitKey&) = default;
  friend auto operator<=>(const EvenOrbitKey&, const EvenOrbitKey&) = default;
};

/// (d0 carrying the diagram's label, d1).
EvenOrbitKey kappa_of_diagram(const LabeledDiagram& d);

/// Labeled diagrams of D(m, N)_etiq lying over O_{lambda, mu}.
/// Throws DomainError when (lambda, mu) is not a valid even orbit key for (m, N).
std::vector<LabeledDiagram> fiber(const LabeledPartition& lambda, const Partition& mu, int m, int N);

/// Sufficient emptiness test: some part lambda_i > 1 has no part of mu in
/// {lambda_i - 1, lambda_i, lambda_i + 1}.
bool fiber_predicted_empty(const Partition& lambda, const Partition& mu);

/// Number of k >= 1 such that (k, k, k-1, k-1) is a sub-partition of both lambda and
/// mu (k - 1 = 0 is padding).  Blocks for different k may share parts.
int common_block_count(const Partition& lambda, const Partition& mu);

struct MaxDiagramResult {
  bool unique = false;
  int common_blocks = 0;
  std::vector<LabeledDiagram> maximal;  // the leq-maximal elements of the fiber, listing order
};

/// Throws DomainError on an empty fiber.
MaxDiagramResult max_diagram(const LabeledPartition& lambda, const Partition& mu, int m, int N);

/// The unique leq-maximum of D(m, N); throws DomainError if it is not unique.
LabeledDiagram global_max(int m, int N);

/// Longest row of odd length, every other row of length 1.
bool is_hook(const GradedDiagram& d);
/// osp(2p, N) with p < N/2, where the maximal diagram has two long odd rows.
bool is_case_4a(int m, int N);

/// Sum over odd lengths i of (#even rows of length i) * (#odd rows of length i).
long delta_D(const GradedDiagram& d);

/// dim O_{lambda, mu} = dim O_lambda in o(m) + dim O_mu in sp(N).
long even_orbit_dim(const EvenOrbitKey& key);

/// (dim kappa(O_D) + m N - Delta_D) / 2; throws DomainError on an invalid diagram.
long orbit_dim(const GradedDiagram& d, int m, int N);
inline long orbit_dim(const LabeledDiagram& d, int m, int N) { return orbit_dim(d.diagram, m, N); }

/// dim kappa^{-1}(O_{lambda,mu}) = dim O_{D_max} = (dim O_{lambda,mu} + m N - Delta_{D_max}) / 2.
/// Throws DomainError on an empty fiber or a non-unique maximum.
long preimage_dim(const LabeledPartition& lambda, const Partition& mu, int m, int N);

/// dim kappa^{-1}(X_0) for X_0 in O_{lambda,mu}: kappa restricted to O_{D_max} is an
/// equivariant surjection onto O_{lambda,mu}, so the fibre has dimension
/// dim O_{D_max} - dim O_{lambda,mu}.  Same errors as preimage_dim.
long fiber_dim(const LabeledPartition& lambda, const Partition& mu, int m, int N);

}  // namespace ospnil
