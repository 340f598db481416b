#include "ospnil/matrices.hpp"

#include <algorithm>

#include "ospnil/error.hpp"

namespace ospnil {

SuperSpace::SuperSpace(int m, int N) : m_(m), N_(N), gram0_(m, m), gram1_(N, N) {
  if (m < 0 || N < 0 || N % 2 != 0) throw DomainError("superspace needs m >= 0 and N even");
  for (int i = 0; i < m; ++i) gram0_(i, m - 1 - i) = 1;
  for (int i = 0; i < N; ++i) gram1_(i, N - 1 - i) = i < N / 2 ? 1 : -1;
}

Matrix SuperSpace::gram() const {
  Matrix g(dim(), dim());
  g.set_block(0, 0, gram0_);
  g.set_block(m_, m_, gram1_);
  return g;
}

Matrix u_star(const SuperSpace& space, const Matrix& u) {
  if (u.rows() != static_cast<std::size_t>(space.N()) || u.cols() != static_cast<std::size_t>(space.m()))
    throw DomainError("u must be N x m");
  // G0 is its own inverse.
  return -(space.gram0() * u.transpose() * space.gram1());
}

OddElement::OddElement(SuperSpace s, Matrix u_) : space(std::move(s)), u(std::move(u_)) {
  if (u.rows() != static_cast<std::size_t>(space.N()) || u.cols() != static_cast<std::size_t>(space.m()))
    throw DomainError("odd element needs an N x m block u");
}

Matrix OddElement::supermatrix() const {
  Matrix x(space.dim(), space.dim());
  x.set_block(space.m(), 0, u);
  x.set_block(0, space.m(), u_star(space, u));
  return x;
}

bool EvenElement::satisfies_invariants() const {
  return (a.transpose() * space.gram0() + space.gram0() * a).is_zero() &&
         (b.transpose() * space.gram1() + space.gram1() * b).is_zero();
}

Matrix EvenElement::supermatrix() const {
  Matrix x(space.dim(), space.dim());
  x.set_block(0, 0, a);
  x.set_block(space.m(), space.m(), b);
  return x;
}

bool is_osp_member(const SuperSpace& space, const Matrix& M, Parity parity) {
  const std::size_t d = space.dim(), m = space.m(), N = space.N();
  if (M.rows() != d || M.cols() != d) return false;
  if (parity == Parity::Even) {
    if (!M.block(0, m, m, N).is_zero() || !M.block(m, 0, N, m).is_zero()) return false;
  } else {
    if (!M.block(0, 0, m, m).is_zero() || !M.block(m, m, N, N).is_zero()) return false;
  }
  const Matrix g = space.gram();
  Matrix sigma = Matrix::identity(d);
  if (parity == Parity::Odd)
    for (std::size_t i = m; i < d; ++i) sigma(i, i) = -1;
  return (M.transpose() * g + sigma * g * M).is_zero();
}

EvenElement kappa_matrix(const OddElement& x) {
  const Matrix us = u_star(x.space, x.u);
  return {x.space, us * x.u, x.u * us};
}

namespace {

// A string of basis vectors c_0 .. c_{L-1} with X c_j = c_{j-1}; `partner` is the
// index of the B-dual string (itself for self-dual strings).
struct StringSpec {
  int length;
  int start;
  int partner;
};

// Cells of kind 0 carry a symmetric form, kind 1 an alternating one.  In the super
// setting the kind alternates along a string; in the classical one it is constant.
Matrix build_standard_nilpotent(const std::vector<StringSpec>& strings, bool super, int dim0, int dim1) {
  std::vector<std::vector<int>> id(strings.size());
  std::vector<int> kind;
  for (std::size_t s = 0; s < strings.size(); ++s)
    for (int j = 0; j < strings[s].length; ++j) {
      id[s].push_back(static_cast<int>(kind.size()));
      kind.push_back(super ? strings[s].start ^ (j & 1) : strings[s].start);
    }
  const int T = static_cast<int>(kind.size());
  if (std::count(kind.begin(), kind.end(), 0) != dim0 || T != dim0 + dim1)
    throw DomainError("internal: string cell counts do not match the space");

  Matrix xw(T, T), gw(T, T);
  for (std::size_t s = 0; s < strings.size(); ++s)
    for (int j = 1; j < strings[s].length; ++j) xw(id[s][j - 1], id[s][j]) = 1;

  std::vector<int> partner_cell(T, -1);
  int aniso_sign = 1;
  for (std::size_t s = 0; s < strings.size(); ++s) {
    const auto& sp = strings[s];
    const auto t = static_cast<std::size_t>(sp.partner);
    if (t < s) continue;
    const int L = sp.length;
    if (strings[t].length != L) throw DomainError("internal: dual strings differ in length");
    auto eps = [&](int j) { return super && kind[id[s][j]] == 1 ? -1 : 1; };
    std::vector<Rational> g(L);
    int seed = 0;
    if (t == s && L % 2 == 1) {
      seed = (L - 1) / 2;
      if (kind[id[s][seed]] != 0) throw DomainError("internal: self-dual string with isotropic middle");
      g[seed] = aniso_sign;
      aniso_sign = -aniso_sign;
    } else {
      g[0] = 1;
    }
    for (int j = seed; j >= 1; --j) g[j - 1] = -eps(j) * g[j];
    for (int j = seed + 1; j < L; ++j) g[j] = -eps(j) * g[j - 1];
    for (int j = 0; j < L; ++j) {
      const int c = id[s][j], dcell = id[t][L - 1 - j];
      if (kind[c] != kind[dcell]) throw DomainError("internal: dual cells of different parity");
      gw(c, dcell) = g[j];
      partner_cell[c] = dcell;
      if (t != s) {
        gw(dcell, c) = kind[c] == 0 ? g[j] : -g[j];
        partner_cell[dcell] = c;
      }
    }
  }

  // Map abstract cells onto the standard Witt bases, block by block.
  Matrix P(T, T);
  auto assign = [&](int kd, int block_dim, int offset) {
    int lo = 0, hi = block_dim - 1;
    std::vector<int> plus, minus;
    for (int c = 0; c < T; ++c) {
      if (kind[c] != kd) continue;
      const int p = partner_cell[c];
      if (p == c) {
        (sgn(gw(c, c)) > 0 ? plus : minus).push_back(c);
      } else if (c < p) {
        P(c, offset + lo) = 1;
        P(p, offset + hi) = 1 / gw(c, p);
        ++lo;
        --hi;
      }
    }
    if (plus.size() < minus.size() || plus.size() > minus.size() + 1)
      throw DomainError("internal: anisotropic vectors not split over Q");
    for (std::size_t i = 0; i < minus.size(); ++i) {
      P(plus[i], offset + lo) = Rational(1, 2);
      P(minus[i], offset + lo) = Rational(1, 2);
      P(plus[i], offset + hi) = 1;
      P(minus[i], offset + hi) = -1;
      ++lo;
      --hi;
    }
    if (plus.size() > minus.size()) {
      if (lo != hi) throw DomainError("internal: anisotropic middle misplaced");
      P(plus.back(), offset + lo) = 1;
      ++lo;
    }
    if (lo != hi + 1) throw DomainError("internal: incomplete Witt basis");
  };
  assign(0, dim0, 0);
  assign(1, dim1, dim0);

  Matrix gstd(T, T);
  for (int i = 0; i < dim0; ++i) gstd(i, dim0 - 1 - i) = 1;
  for (int i = 0; i < dim1; ++i) gstd(dim0 + i, dim0 + dim1 - 1 - i) = i < dim1 / 2 ? 1 : -1;
  if (!(P.transpose() * gw * P == gstd)) throw DomainError("internal: normalized form is not standard");
  return inverse(P) * xw * P;
}

}  // namespace

OddElement representative(const GradedDiagram& d, const SuperSpace& space) {
  if (!is_valid(d, space.m(), space.N()))
    throw DomainError("diagram " + d.compact() + " is not valid for osp(" + std::to_string(space.m()) + "," +
                      std::to_string(space.N()) + ")");
  std::vector<StringSpec> strings;
  const auto pieces = decompose(d);
  for (const auto& piece : *pieces) {
    const auto rows = piece.rows();
    const int base = static_cast<int>(strings.size());
    if (rows.size() == 1) {
      strings.push_back({rows[0].length, rows[0].start, base});
    } else {
      strings.push_back({rows[0].length, rows[0].start, base + 1});
      strings.push_back({rows[1].length, rows[1].start, base});
    }
  }
  const Matrix x = build_standard_nilpotent(strings, true, space.m(), space.N());
  return OddElement(space, x.block(space.m(), 0, space.N(), space.m()));
}

Matrix classical_representative(const Partition& lambda, ClassicalKind kind) {
  const int d = lambda.size();
  const bool orth = kind == ClassicalKind::Orthogonal;
  if (orth ? !is_orthogonal_partition(lambda, d) : !is_symplectic_partition(lambda, d))
    throw DomainError(lambda.str() + " does not label a classical nilpotent orbit");
  const int k = orth ? 0 : 1;
  const int self_dual_parity = orth ? 1 : 0;  // odd parts self-dual in o, even parts in sp
  std::vector<StringSpec> strings;
  std::vector<int> pending(lambda.largest() + 1, -1);
  for (int part : lambda.parts()) {
    const int idx = static_cast<int>(strings.size());
    if (part % 2 == self_dual_parity) {
      strings.push_back({part, k, idx});
    } else if (pending[part] < 0) {
      strings.push_back({part, k, -1});
      pending[part] = idx;
    } else {
      strings.push_back({part, k, pending[part]});
      strings[pending[part]].partner = idx;
      pending[part] = -1;
    }
  }
  return build_standard_nilpotent(strings, false, orth ? d : 0, orth ? 0 : d);
}

KernelProfile kernel_profile(const OddElement& x) {
  const Matrix X = x.supermatrix();
  const std::size_t m = x.space.m(), N = x.space.N(), d = x.space.dim();
  KernelProfile p;
  Matrix power = Matrix::identity(d);
  for (std::size_t k = 0; k <= d; ++k) {
    p.ker0.push_back(static_cast<int>(nullity(power.block(0, 0, d, m))));
    p.ker1.push_back(static_cast<int>(nullity(power.block(0, m, d, N))));
    if (power.is_zero()) return p;
    power = power * X;
  }
  throw DomainError("odd element is not nilpotent");
}

GradedDiagram diagram_from_profile(const KernelProfile& p) {
  const int K = static_cast<int>(p.ker0.size()) - 1;
  // even_ge[k], odd_ge[k]: rows of length >= k starting with 0 (resp. 1).
  std::vector<int> even_ge(K + 2, 0), odd_ge(K + 2, 0);
  for (int k = 1; k <= K; ++k) {
    const int zeros = p.ker0[k] - p.ker0[k - 1], ones = p.ker1[k] - p.ker1[k - 1];
    even_ge[k] = k % 2 ? zeros : ones;
    odd_ge[k] = k % 2 ? ones : zeros;
  }
  std::vector<GradedRow> rows;
  for (int k = 1; k <= K; ++k) {
    const int ev = even_ge[k] - even_ge[k + 1], od = odd_ge[k] - odd_ge[k + 1];
    if (ev < 0 || od < 0) throw DomainError("kernel profile is not that of a graded nilpotent");
    for (int i = 0; i < ev; ++i) rows.push_back({k, 0});
    for (int i = 0; i < od; ++i) rows.push_back({k, 1});
  }
  return GradedDiagram(std::move(rows));
}

GradedDiagram diagram_of(const OddElement& x) { return diagram_from_profile(kernel_profile(x)); }

bool is_nilpotent(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  return a.power(static_cast<unsigned>(a.rows())).is_zero();
}

Partition jordan_type(const Matrix& a) {
  if (!is_nilpotent(a)) throw DomainError("jordan_type needs a nilpotent matrix");
  const std::size_t n = a.rows();
  std::vector<int> ker{0};
  Matrix power = Matrix::identity(n);
  while (ker.back() < static_cast<int>(n)) {
    power = power * a;
    ker.push_back(static_cast<int>(nullity(power)));
  }
  // ker[j] - ker[j-1] = number of blocks of size >= j.
  std::vector<int> parts;
  for (std::size_t j = 1; j < ker.size(); ++j) {
    const int ge = ker[j] - ker[j - 1];
    const int ge_next = j + 1 < ker.size() ? ker[j + 1] - ker[j] : 0;
    for (int i = 0; i < ge - ge_next; ++i) parts.push_back(static_cast<int>(j));
  }
  return Partition(std::move(parts));
}

std::vector<Matrix> orthogonal_algebra_basis(const Matrix& gram0) {
  const std::size_t d = gram0.rows();
  const Matrix ginv = inverse(gram0);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix s(d, d);
      s(i, j) = 1;
      s(j, i) = -1;
      basis.push_back(ginv * s);
    }
  return basis;
}

std::vector<Matrix> symplectic_algebra_basis(const Matrix& gram1) {
  const std::size_t d = gram1.rows();
  const Matrix ginv = inverse(gram1);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Matrix s(d, d);
      s(i, j) = 1;
      s(j, i) = 1;
      basis.push_back(ginv * s);
    }
  return basis;
}

namespace {

// Columns are the flattened images of the generators.
Matrix image_matrix(const std::vector<Matrix>& images) {
  if (images.empty()) return Matrix();
  const std::size_t r = images.front().rows(), c = images.front().cols();
  Matrix out(r * c, images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i * c + j, k) = images[k](i, j);
  return out;
}

}  // namespace

long odd_orbit_dim_oracle(const OddElement& x) {
  std::vector<Matrix> images;
  for (const auto& a : orthogonal_algebra_basis(x.space.gram0())) images.push_back(-(x.u * a));
  for (const auto& b : symplectic_algebra_basis(x.space.gram1())) images.push_back(b * x.u);
  if (images.empty() || x.u.empty()) return 0;
  return static_cast<long>(rank(image_matrix(images)));
}

std::pair<long, long> classical_centralizer_dim_oracle(const EvenElement& e) {
  auto centralizer = [](const std::vector<Matrix>& basis, const Matrix& z) -> long {
    if (basis.empty()) return 0;
    std::vector<Matrix> images;
    for (const auto& y : basis) images.push_back(y * z - z * y);
    return static_cast<long>(nullity(image_matrix(images)));
  };
  return {centralizer(orthogonal_algebra_basis(e.space.gram0()), e.a),
          centralizer(symplectic_algebra_basis(e.space.gram1()), e.b)};
}

std::optional<OddElement> random_sparse_odd(const SuperSpace& space, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> value(-2, 2);
  Matrix u(space.N(), space.m());
  for (int i = 0; i < space.N(); ++i)
    for (int j = 0; j < space.m(); ++j)
      if (present(rng)) u(i, j) = value(rng);
  OddElement x(space, std::move(u));
  if (!is_nilpotent(x.supermatrix())) return std::nullopt;
  return x;
}

}  // namespace ospnil
