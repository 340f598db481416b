#include "ospnil/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ospnil/error.hpp"

namespace ospnil {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::power(unsigned k) const {
  Matrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * (*this);
  return result;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError("matrix size mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError("matrix size mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix size mismatch in *");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw DomainError("vstack column mismatch");
  Matrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

std::size_t rank(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r == 0 || c == 0) return 0;
  std::vector<Integer> a(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < c; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < c; ++j) a[i * c + j] = Integer(m(i, j).get_num() * (scale / m(i, j).get_den()));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * c + j]; };

  std::size_t rk = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && sgn(at(p, col)) == 0) ++p;
    if (p == r) continue;
    if (p != rk)
      for (std::size_t j = 0; j < c; ++j) std::swap(at(p, j), at(rk, j));
    const Integer& piv = at(rk, col);
    for (std::size_t i = rk + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) {
        t = piv * at(i, j) - at(i, col) * at(rk, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = piv;
    ++rk;
  }
  return rk;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && sgn(a(p, col)) == 0) ++p;
    if (p == r) continue;
    if (p != row)
      for (std::size_t j = 0; j < c; ++j) std::swap(a(p, j), a(row, j));
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < c; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < c; ++j) a(i, j) -= f * a(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = piv;
  return a.block(0, 0, row, c);
}

Matrix kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix e = rref(m, &piv);
  const std::size_t c = m.cols();
  std::vector<bool> is_pivot(c, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < c; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix k(c, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = -e(i, free[f]);
  }
  return k;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  std::vector<std::size_t> piv;
  const Matrix e = rref(hstack(m, Matrix::identity(n)), &piv);
  if (e.rows() < n || piv.size() < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
  return e.block(0, n, n, n);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string str(s);
  auto bad = [&] { return DomainError("malformed rational \"" + str + "\""); };
  if (str.empty()) throw bad();
  const auto slash = str.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = str.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  Integer n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (sgn(d) == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace ospnil
