#include "ospnil/borel.hpp"

#include <algorithm>
#include <random>

#include "ospnil/error.hpp"
#include "ospnil/kappa.hpp"
#include "ospnil/partitions.hpp"

namespace ospnil {

int BasisTag::coordinate(int m) const {
  switch (kind) {
    case Kind::E: return index;
    case Kind::EPrime: return index - 1;
    case Kind::F: return m + index - 1;
  }
  return -1;
}

std::string BasisTag::str() const {
  switch (kind) {
    case Kind::E: return "e" + std::to_string(index);
    case Kind::EPrime: return "e'" + std::to_string(index);
    case Kind::F: return "f" + std::to_string(index);
  }
  return "?";
}

const char* order_case_name(OrderCase c) {
  switch (c) {
    case OrderCase::OddEqual: return "1";
    case OrderCase::EvenEqual: return "2";
    case OrderCase::OddFewer: return "3a";
    case OrderCase::OddMore: return "3b";
    case OrderCase::EvenFewer: return "4a";
    case OrderCase::EvenMore: return "4b";
    case OrderCase::Kac: return "kac";
  }
  return "?";
}

std::string MixedOrder::str() const {
  std::string s;
  for (const auto& t : sequence) s += (s.empty() ? "" : ", ") + t.str();
  return s;
}

std::vector<int> MixedOrder::full_coordinates() const {
  std::vector<int> c;
  for (const auto& t : sequence) c.push_back(t.coordinate(m));
  if (m % 2 == 1) c.push_back(m / 2);
  for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
    const int x = it->coordinate(m);
    c.push_back(x < m ? m - 1 - x : m + (N - 1 - (x - m)));
  }
  return c;
}

namespace {

void check_dims(int m, int N) {
  if (m < 0 || N < 0 || N % 2 != 0) throw DomainError("orders need m >= 0 and N even");
}

BasisTag even_tag(int m, int i) {
  // i-th isotropic even vector, 0-based.
  return m % 2 ? BasisTag{BasisTag::Kind::E, i} : BasisTag{BasisTag::Kind::EPrime, i + 1};
}

BasisTag f(int j) { return {BasisTag::Kind::F, j}; }

}  // namespace

MixedOrder mixed_order(int m, int N) {
  check_dims(m, N);
  const int p = m / 2, n = N / 2;
  MixedOrder o{m, N, OrderCase::OddEqual, {}};
  auto& s = o.sequence;
  if (m % 2 == 1) {
    o.order_case = p == n ? OrderCase::OddEqual : p < n ? OrderCase::OddFewer : OrderCase::OddMore;
    if (p <= n) {
      for (int j = 1; j <= n - p; ++j) s.push_back(f(j));
      for (int j = 0; j < p; ++j) {
        s.push_back(even_tag(m, j));
        s.push_back(f(n - p + 1 + j));
      }
    } else {
      const int lead = n == 0 ? p : p - n + 1;
      for (int i = 0; i < lead; ++i) s.push_back(even_tag(m, i));
      for (int j = 1; j <= n; ++j) {
        s.push_back(f(j));
        if (j < n) s.push_back(even_tag(m, p - n + j));
      }
    }
  } else {
    o.order_case = p == n ? OrderCase::EvenEqual : p < n ? OrderCase::EvenFewer : OrderCase::EvenMore;
    if (p <= n) {
      for (int j = 1; j <= n - p; ++j) s.push_back(f(j));
      for (int j = 1; j <= p; ++j) {
        s.push_back(f(n - p + j));
        s.push_back(even_tag(m, j - 1));
      }
    } else {
      for (int i = 0; i < p - n; ++i) s.push_back(even_tag(m, i));
      for (int j = 1; j <= n; ++j) {
        s.push_back(f(j));
        s.push_back(even_tag(m, p - n + j - 1));
      }
    }
  }
  return o;
}

MixedOrder kac_order(int m, int N) {
  check_dims(m, N);
  MixedOrder o{m, N, OrderCase::Kac, {}};
  for (int i = 0; i < m / 2; ++i) o.sequence.push_back(even_tag(m, i));
  for (int j = 1; j <= N / 2; ++j) o.sequence.push_back(f(j));
  return o;
}

std::vector<int> FlagData::dims() const {
  std::vector<int> d;
  for (const auto& w : chain) d.push_back(static_cast<int>(w.rows()));
  return d;
}

namespace {

Matrix span(const Matrix& rows) { return rows.rows() == 0 ? rows : rref(rows); }

Matrix sum(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return span(b);
  if (b.rows() == 0) return span(a);
  return rref(vstack(a, b));
}

Matrix coordinate_rows(std::size_t d, std::size_t from, std::size_t to) {
  Matrix r(to - from, d);
  for (std::size_t i = from; i < to; ++i) r(i - from, i) = 1;
  return r;
}

// Rows spanning {v in row space of s : a v = 0}.
Matrix kernel_on(const Matrix& a, const Matrix& s) {
  if (s.rows() == 0) return s;
  const Matrix k = kernel_basis(a * s.transpose());
  if (k.cols() == 0) return Matrix(0, s.cols());
  return span((s.transpose() * k).transpose());
}

}  // namespace

FlagData flag_of_order(const MixedOrder& order, const SuperSpace& space) {
  if (order.m != space.m() || order.N != space.N()) throw DomainError("order and space dimensions differ");
  FlagData flag;
  const auto coords = order.full_coordinates();
  const std::size_t d = space.dim();
  for (std::size_t k = 1; k <= coords.size(); ++k) {
    Matrix w(k, d);
    for (std::size_t i = 0; i < k; ++i) w(i, coords[i]) = 1;
    flag.chain.push_back(rref(w));
  }
  return flag;
}

Matrix orthogonal_complement(const Matrix& w, const SuperSpace& space) {
  const std::size_t d = space.dim();
  if (w.rows() == 0) return Matrix::identity(d);
  const Matrix k = kernel_basis(w * space.gram());
  if (k.cols() == 0) return Matrix(0, d);
  return rref(k.transpose());
}

bool is_totally_isotropic(const Matrix& w, const SuperSpace& space) {
  return w.rows() == 0 || (w * space.gram() * w.transpose()).is_zero();
}

std::pair<int, int> graded_dims(const Matrix& w, const SuperSpace& space) {
  if (w.rows() == 0) return {0, 0};
  const std::size_t m = space.m(), N = space.N(), r = rank(w);
  const std::size_t r0 = m ? rank(w.block(0, 0, w.rows(), m)) : 0;
  const std::size_t r1 = N ? rank(w.block(0, m, w.rows(), N)) : 0;
  return {static_cast<int>(r - r1), static_cast<int>(r - r0)};
}

bool preserves(const Matrix& M, const Matrix& w) {
  if (w.rows() == 0) return true;
  return rank(vstack(w, w * M.transpose())) == rank(w);
}

std::vector<Matrix> odd_part_of_borel(const FlagData& flag, const SuperSpace& space) {
  const std::size_t m = space.m(), N = space.N(), vars = m * N;
  std::vector<Matrix> elementary;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix u(N, m);
      u(i, j) = 1;
      elementary.push_back(OddElement(space, u).supermatrix());
    }
  // Constraint rows a X_v w^T = 0 for a in the annihilator of W, w in W.
  std::vector<std::vector<Rational>> rows;
  for (const auto& w : flag.chain) {
    if (w.rows() == 0 || w.rows() == static_cast<std::size_t>(space.dim())) continue;
    const Matrix ann = kernel_basis(w).transpose();
    std::vector<Matrix> vals;
    for (const auto& xv : elementary) vals.push_back(ann * xv * w.transpose());
    for (std::size_t a = 0; a < ann.rows(); ++a)
      for (std::size_t b = 0; b < w.rows(); ++b) {
        std::vector<Rational> row(vars);
        bool nonzero = false;
        for (std::size_t v = 0; v < vars; ++v) {
          row[v] = vals[v](a, b);
          if (row[v] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  Matrix c(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t v = 0; v < vars; ++v) c(r, v) = rows[r][v];
  std::vector<Matrix> basis;
  if (vars == 0) return basis;
  const Matrix k = rows.empty() ? Matrix::identity(vars) : kernel_basis(c);
  for (std::size_t col = 0; col < k.cols(); ++col) {
    Matrix u(N, m);
    for (std::size_t v = 0; v < vars; ++v) u(v / m, v % m) = k(v, col);
    basis.push_back(std::move(u));
  }
  return basis;
}

namespace {

struct FamilyDims {
  int n;
  bool odd;
};

FamilyDims require_family(const SuperSpace& space) {
  const int m = space.m(), N = space.N();
  if (N < 2 || (m != N + 1 && m != N))
    throw DomainError("desingularization flags exist only for osp(2n+1,2n) and osp(2n,2n), n >= 1; got osp(" +
                      std::to_string(m) + "," + std::to_string(N) + ")");
  return {N / 2, m == N + 1};
}

void require_max(const OddElement& x) {
  if (x.u.is_zero()) throw DomainError("the zero element is not in the maximal orbit");
  const auto top = global_max(x.space.m(), x.space.N());
  const auto d = diagram_of(x);
  if (d != top.diagram)
    throw DomainError("element has diagram " + d.compact() + ", not the maximal " + top.diagram.compact());
}

}  // namespace

MaxElementFlag flag_from_max_element(const OddElement& x) {
  const auto fam = require_family(x.space);
  require_max(x);
  const SuperSpace& sp = x.space;
  const std::size_t d = sp.dim(), m = sp.m();
  const int n = fam.n;
  const Matrix X = x.supermatrix(), X2 = X * X;
  std::vector<Matrix> P{Matrix::identity(d)};
  for (int i = 1; i <= 2 * n + 1; ++i) P.push_back(P.back() * X2);
  const Matrix V0 = coordinate_rows(d, 0, m), V1 = coordinate_rows(d, m, d);

  MaxElementFlag out;
  std::vector<Matrix> W(d + 1);
  if (fam.odd) {
    for (int i = 1; i <= n + 1; ++i) W[2 * i - 1] = sum(kernel_on(P[i], V0), kernel_on(P[i - 1], V1));
    for (int j = 1; j <= n; ++j) W[2 * j] = kernel_on(P[j], Matrix::identity(d));
    W[0] = Matrix(0, d);
    for (std::size_t k = 2 * n + 2; k <= d; ++k) W[k] = orthogonal_complement(W[d - k], sp);
  } else {
    const Matrix alpha = kernel_on(X, V0);
    if (alpha.rows() != 1) throw DomainError("internal: ker x cap V0 is not a line");
    if ((alpha * sp.gram() * alpha.transpose())(0, 0) == 0) throw DomainError("internal: ker x cap V0 is isotropic");
    const Matrix V0p = kernel_on(alpha * sp.gram(), V0);
    const Matrix V0pV1 = sum(V0p, V1);
    for (int i = 1; i <= n; ++i) {
      W[2 * i - 1] = sum(kernel_on(P[i], V1), kernel_on(P[i - 1], V0p));
      W[2 * i] = kernel_on(P[i], V0pV1);
    }
    for (int i = n + 1; i <= 2 * n; ++i) {
      W[2 * i - 1] = sum(kernel_on(P[i - 1], V0), kernel_on(P[i - 1], V1));
      W[2 * i] = sum(kernel_on(P[i], V1), kernel_on(P[i - 1], V0));
    }
    out.alpha = alpha;
  }
  for (std::size_t k = 1; k <= d; ++k) {
    if (W[k].rows() != k) throw DomainError("internal: flag step " + std::to_string(k) + " has the wrong dimension");
    if (k > 1 && rank(vstack(W[k - 1], W[k])) != k) throw DomainError("internal: flag is not nested");
    out.flag.chain.push_back(W[k]);
  }
  return out;
}

long borel_odd_dim(const MixedOrder& order) {
  long total = 0, odd_seen = 0;
  for (int c : order.full_coordinates()) {
    if (c >= order.m)
      ++odd_seen;
    else
      total += odd_seen;
  }
  return total;
}

long chi_kernel_rank_hom_sum(int n) {
  // E_i / E_{i-1} is a line and dim F_{i-1} = i - 1 along the (2n+1, 2n) mixed flag.
  long s = 0;
  for (int i = 1; i <= 2 * n + 1; ++i) s += i - 1;
  return s;
}

ChiDims chi_bundle_dims(int n, DesingFamily family) {
  if (n < 1) throw DomainError("chi_bundle_dims needs n >= 1");
  const int m = family == DesingFamily::Odd ? 2 * n + 1 : 2 * n, N = 2 * n;
  auto flag_dim = [](long dim, long rank) { return (dim - rank) / 2; };
  ChiDims c;
  c.flag_variety_dim = flag_dim(classical_algebra_dim(m, ClassicalKind::Orthogonal), m / 2) +
                       flag_dim(classical_algebra_dim(N, ClassicalKind::Symplectic), n);
  c.kernel_rank = borel_odd_dim(mixed_order(m, N));
  c.total_dim = c.flag_variety_dim + c.kernel_rank;
  return c;
}

bool commuting_square_check(const OddElement& x) {
  if (x.u.is_zero()) throw DomainError("commuting_square_check needs a nonzero element");
  const auto mf = flag_from_max_element(x);
  const SuperSpace& sp = x.space;
  const std::size_t m = sp.m(), N = sp.N(), d = sp.dim();
  const EvenElement k = kappa_matrix(x);
  const Matrix X = x.supermatrix();
  if (!(k.supermatrix() == X * X) || !k.satisfies_invariants()) return false;
  const Matrix V0 = coordinate_rows(d, 0, m), V1 = coordinate_rows(d, m, d);
  for (const auto& w : mf.flag.chain) {
    // W cap V0 and W cap V1 in their own coordinates.
    const Matrix ann = kernel_basis(w).transpose();
    const Matrix in_v0 = ann.rows() ? kernel_on(ann, V0) : V0;
    const Matrix in_v1 = ann.rows() ? kernel_on(ann, V1) : V1;
    const Matrix E = in_v0.rows() ? in_v0.block(0, 0, in_v0.rows(), m) : Matrix(0, m);
    const Matrix F = in_v1.rows() ? in_v1.block(0, m, in_v1.rows(), N) : Matrix(0, N);
    if (!preserves(k.a, E) || !preserves(k.b, F)) return false;
  }
  return true;
}

SearchResult meets_orbit_search(const LabeledDiagram& d, const SuperSpace& space, const SearchOptions& opts) {
  if (!is_valid(d.diagram, space.m(), space.N()))
    throw DomainError("diagram " + d.diagram.compact() + " is not valid for these dimensions");
  const auto basis = odd_part_of_borel(flag_of_order(mixed_order(space.m(), space.N()), space), space);
  const std::size_t k = basis.size();
  SearchResult res;
  auto attempt = [&](const Matrix& u) {
    ++res.examined;
    OddElement x(space, u);
    if (diagram_of(x) == d.diagram) {
      res.witness = std::move(x);
      return true;
    }
    return false;
  };

  for (std::size_t s = 0; s <= k; ++s) {
    std::vector<bool> chosen(k, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i)
        if (chosen[i]) idx.push_back(i);
      for (std::size_t signs = 0; signs < (std::size_t{1} << s); ++signs) {
        if (res.examined >= opts.budget) return res;
        Matrix u(space.N(), space.m());
        for (std::size_t t = 0; t < s; ++t) {
          if (signs >> t & 1)
            u -= basis[idx[t]];
          else
            u += basis[idx[t]];
        }
        if (attempt(u)) return res;
      }
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
  res.sparse_exhausted = true;

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 5);
  while (res.examined < opts.budget && k > 0) {
    Matrix u(space.N(), space.m());
    for (const auto& b : basis) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      u += b * c;
    }
    if (attempt(u)) return res;
  }
  return res;
}

std::vector<kernels::Realization> realized_diagrams(const MixedOrder& order, const SuperSpace& space,
                                                    ExecPolicy policy) {
  const auto basis = odd_part_of_borel(flag_of_order(order, space), space);
  return kernels::realize_combinations(space, basis, static_cast<int>(basis.size()), policy);
}

}  // namespace ospnil
