#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ospnil/diagrams.hpp"
#include "ospnil/exec.hpp"
#include "ospnil/kernels.hpp"
#include "ospnil/matrices.hpp"

namespace ospnil {

/// Isotropic basis vectors of the standard form.  For m = 2p + 1 the even ones are
/// e_0 .. e_{p-1} (e_p is the anisotropic middle); for m = 2p they are e'_1 .. e'_p.
/// The odd ones are f_1 .. f_n.
struct BasisTag {
  enum class Kind { E, EPrime, F };
  Kind kind;
  int index;

  /// 0-based coordinate in V for the given m: e_i -> i, e'_i -> i - 1, f_j -> m + j - 1.
  int coordinate(int m) const;
  int parity() const { return kind == Kind::F ? 1 : 0; }
  std::string str() const;
  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

enum class OrderCase {
  OddEqual,   // (2n+1, 2n)
  EvenEqual,  // (2n, 2n)
  OddFewer,   // (2p+1, 2n), p < n
  OddMore,    // (2p+1, 2n), p > n
  EvenFewer,  // (2p, 2n), p < n
  EvenMore,   // (2p, 2n), p > n
  Kac,        // all e's, then all f's
};
const char* order_case_name(OrderCase c);

struct MixedOrder {
  int m = 0;
  int N = 0;
  OrderCase order_case = OrderCase::OddEqual;
  std::vector<BasisTag> sequence;  // the isotropic half, p + n tags

  std::string str() const;
  /// Coordinates of the complete ordered basis: the sequence, the middle e_p when m is
  /// odd, then the B-duals of the sequence in reverse.
  std::vector<int> full_coordinates() const;
};

MixedOrder mixed_order(int m, int N);
MixedOrder kac_order(int m, int N);

/// Nested subspaces of V, each as the reduced row echelon form of its spanning rows.
struct FlagData {
  std::vector<Matrix> chain;

  std::vector<int> dims() const;
  friend bool operator==(const FlagData&, const FlagData&) = default;
};

/// Prefixes of the complete ordered basis of the order.
FlagData flag_of_order(const MixedOrder& order, const SuperSpace& space);

/// Rows spanning W^perp for the form B.
Matrix orthogonal_complement(const Matrix& w, const SuperSpace& space);
bool is_totally_isotropic(const Matrix& w, const SuperSpace& space);
/// (dim W cap V0, dim W cap V1).
std::pair<int, int> graded_dims(const Matrix& w, const SuperSpace& space);
/// M (acting on column vectors) maps the row space of w into itself.
bool preserves(const Matrix& M, const Matrix& w);

/// Basis of {u : [[0, u*], [u, 0]] preserves every subspace of the flag}.
std::vector<Matrix> odd_part_of_borel(const FlagData& flag, const SuperSpace& space);

struct MaxElementFlag {
  FlagData flag;
  std::optional<Matrix> alpha;  // (2n, 2n) only: row spanning ker x cap V0
};

/// Complete flag attached to x in the maximal orbit of osp(2n+1, 2n) or osp(2n, 2n),
/// n >= 1, built from kernels of the powers of x^2.  Throws DomainError for other
/// (m, N) or when x is not in the maximal orbit.
MaxElementFlag flag_from_max_element(const OddElement& x);

enum class DesingFamily { Odd, Even };  // osp(2n+1, 2n), osp(2n, 2n)

struct ChiDims {
  long flag_variety_dim = 0;
  long kernel_rank = 0;
  long total_dim = 0;
};

/// Flag variety of o(m) x sp(2n) plus the rank of Ker chi, read off the mixed order.
ChiDims chi_bundle_dims(int n, DesingFamily family);
/// Sum over the even vectors of the complete ordered basis of the number of odd vectors
/// preceding them.
long borel_odd_dim(const MixedOrder& order);
/// Sum over i = 1 .. 2n+1 of dim Hom(E_i / E_{i-1}, F_{i-1}) for the (2n+1, 2n) mixed flag.
long chi_kernel_rank_hom_sum(int n);

/// kappa(x) preserves the even flags E_i = W_i cap V0 and F_i = W_i cap V1 of
/// flag_from_max_element(x), and kappa_matrix(x) equals X^2.
/// Throws DomainError when u = 0 or x is not in the maximal orbit.
bool commuting_square_check(const OddElement& x);

struct SearchOptions {
  std::uint64_t budget = 200000;  // candidate elements examined, sparse and random together
  std::uint64_t seed = 0;
};

struct SearchResult {
  std::optional<OddElement> witness;
  std::uint64_t examined = 0;
  bool sparse_exhausted = false;  // every {-1, 0, 1} combination of the b1 basis was tried
};

/// Element of the odd part of the mixed Borel subalgebra with the given diagram:
/// sparse {-1, 0, 1} combinations of the b1 basis by increasing support, then random
/// rational combinations.  A missing witness is inconclusive.
SearchResult meets_orbit_search(const LabeledDiagram& d, const SuperSpace& space, const SearchOptions& opts = {});

/// Diagrams of all {-1, 0, 1} combinations of the b1 basis of the order's flag.
std::vector<kernels::Realization> realized_diagrams(const MixedOrder& order, const SuperSpace& space,
                                                    ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace ospnil
