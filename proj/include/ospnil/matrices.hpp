#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ospnil/diagrams.hpp"
#include "ospnil/linalg.hpp"
#include "ospnil/partitions.hpp"

namespace ospnil {

/// V = V0 + V1 with dim V0 = m, dim V1 = N (even) and the standard form:
/// on V0 B(e_i, e_j) = 1 iff i + j = m - 1; on V1 B(f_i, f_j) = +1 if i + j = N - 1
/// and i < N/2, -1 if i + j = N - 1 and i >= N/2 (0-based indices).
/// Coordinates of V: V0 first (0 .. m-1), then V1 (m .. m+N-1).
class SuperSpace {
 public:
  SuperSpace(int m, int N);

  int m() const { return m_; }
  int N() const { return N_; }
  int n() const { return N_ / 2; }
  int dim() const { return m_ + N_; }
  const Matrix& gram0() const { return gram0_; }
  const Matrix& gram1() const { return gram1_; }
  Matrix gram() const;

  friend bool operator==(const SuperSpace& a, const SuperSpace& b) { return a.m_ == b.m_ && a.N_ == b.N_; }

 private:
  int m_, N_;
  Matrix gram0_, gram1_;
};

enum class Parity { Even, Odd };

/// u* is the unique m x N block making [[0, u*], [u, 0]] super-invariant:
/// B(Xv, w) + (-1)^{|X||v|} B(v, Xw) = 0, i.e. u* = -G0^{-1} u^T G1.
Matrix u_star(const SuperSpace& space, const Matrix& u);

/// X = [[0, u*], [u, 0]] with u : V0 -> V1 an N x m matrix.
struct OddElement {
  SuperSpace space;
  Matrix u;

  OddElement(SuperSpace s, Matrix u_);
  Matrix supermatrix() const;
};

/// (a, b) in o(m) x sp(N).
struct EvenElement {
  SuperSpace space;
  Matrix a, b;

  /// a^T G0 + G0 a = 0 and b^T G1 + G1 b = 0.
  bool satisfies_invariants() const;
  Matrix supermatrix() const;
};

/// M^T G + Sigma G M = 0 with Sigma = diag((-1)^{p |e_i|}), plus the block shape of parity p.
bool is_osp_member(const SuperSpace& space, const Matrix& M, Parity parity);

/// (u* u, u u*) = [X, X] / 2.
EvenElement kappa_matrix(const OddElement& x);

/// Odd element of the orbit of a valid diagram: one string of basis vectors per row
/// (X maps each vector to its predecessor), B-dual strings per indecomposable,
/// normalized to the standard basis.  Throws DomainError on an invalid diagram.
OddElement representative(const GradedDiagram& d, const SuperSpace& space);

/// Nilpotent of Jordan type lambda in o(d) or sp(d) with the standard Gram matrix.
Matrix classical_representative(const Partition& lambda, ClassicalKind kind);

/// dim ker(X^k) restricted to V0 and to V1, k = 0 .. until both stabilize at full dimension.
struct KernelProfile {
  std::vector<int> ker0;
  std::vector<int> ker1;
  friend bool operator==(const KernelProfile&, const KernelProfile&) = default;
};

/// Throws DomainError when X is not nilpotent.
KernelProfile kernel_profile(const OddElement& x);
/// The graded diagram whose column counts reproduce the kernel profile.
GradedDiagram diagram_of(const OddElement& x);
GradedDiagram diagram_from_profile(const KernelProfile& p);

bool is_nilpotent(const Matrix& a);
/// Throws DomainError when a is not nilpotent.
Partition jordan_type(const Matrix& a);

/// Generators G^{-1} S (S skew, resp. symmetric) of o(G) and sp(G), deterministic order.
std::vector<Matrix> orthogonal_algebra_basis(const Matrix& gram0);
std::vector<Matrix> symplectic_algebra_basis(const Matrix& gram1);

/// dim g0 - dim{Y in g0 : [Y, X] = 0}, by exact rank of Y -> b u - u a.
long odd_orbit_dim_oracle(const OddElement& x);
/// Nullities of ad(a) on o(m) and of ad(b) on sp(N).
std::pair<long, long> classical_centralizer_dim_oracle(const EvenElement& e);

/// Sparse random u with entries in {-2..2}; returns nullopt when X is not nilpotent.
std::optional<OddElement> random_sparse_odd(const SuperSpace& space, std::mt19937_64& rng, double density);

}  // namespace ospnil
