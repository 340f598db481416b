#include "ospnil/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ospnil/error.hpp"

namespace ospnil {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw DomainError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::transposed() const {
  std::vector<int> t(largest(), 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) ++t[i];
  return Partition(std::move(t));
}

bool Partition::dominated_by(const Partition& other) const {
  int a = 0, b = 0;
  const std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < parts_.size() ? parts_[i] : 0;
    b += i < other.parts_.size() ? other.parts_[i] : 0;
    if (a > b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

std::optional<SubPartition> find_subpartition(const Partition& parent, std::span<const int> pattern) {
  SubPartition sub;
  std::vector<bool> used(parent.length(), false);
  for (int v : pattern) {
    if (v == 0) {
      ++sub.zeros;
      continue;
    }
    bool found = false;
    for (int i = 0; i < parent.length(); ++i) {
      if (!used[i] && parent[i] == v) {
        used[i] = true;
        sub.indices.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return sub;
}

const char* label_name(Label l) {
  switch (l) {
    case Label::I: return "I";
    case Label::II: return "II";
    default: return "";
  }
}

std::string LabeledPartition::str() const {
  return label == Label::None ? partition.str() : partition.str() + "^" + label_name(label);
}

bool is_orthogonal_partition(const Partition& lambda, int m) {
  if (lambda.size() != m) return false;
  for (int p : lambda.parts())
    if (p % 2 == 0 && lambda.multiplicity(p) % 2 != 0) return false;
  return true;
}

bool is_symplectic_partition(const Partition& mu, int N) {
  if (N % 2 != 0 || mu.size() != N) return false;
  for (int p : mu.parts())
    if (p % 2 == 1 && mu.multiplicity(p) % 2 != 0) return false;
  return true;
}

bool is_very_even(const Partition& lambda) {
  if (lambda.empty()) return false;
  for (int p : lambda.parts())
    if (p % 2 != 0 || lambda.multiplicity(p) % 2 != 0) return false;
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<LabeledPartition> enumerate_orthogonal(int m) {
  std::vector<LabeledPartition> out;
  for (auto& p : partitions_of(m)) {
    if (!is_orthogonal_partition(p, m)) continue;
    if (is_very_even(p)) {
      out.push_back({p, Label::I});
      out.push_back({p, Label::II});
    } else {
      out.push_back({p, Label::None});
    }
  }
  return out;
}

std::vector<Partition> enumerate_symplectic(int N) {
  std::vector<Partition> out;
  if (N % 2 != 0) return out;
  for (auto& p : partitions_of(N))
    if (is_symplectic_partition(p, N)) out.push_back(p);
  return out;
}

long classical_algebra_dim(int d, ClassicalKind kind) {
  const long dl = d;
  return kind == ClassicalKind::Orthogonal ? dl * (dl - 1) / 2 : dl * (dl + 1) / 2;
}

long classical_orbit_dim(const Partition& lambda, ClassicalKind kind) {
  const int d = lambda.size();
  const bool ok = kind == ClassicalKind::Orthogonal ? is_orthogonal_partition(lambda, d)
                                                    : is_symplectic_partition(lambda, d);
  if (!ok) throw DomainError("partition " + lambda.str() + " does not label a classical nilpotent orbit");
  long sq = 0;
  const Partition t = lambda.transposed();
  for (int c : t.parts()) sq += static_cast<long>(c) * c;
  long odd = 0;
  for (int p : lambda.parts()) odd += p % 2;
  // 2*dim is an integer expression; the halves always combine to an integer.
  const long twice = kind == ClassicalKind::Orthogonal
                         ? 2 * classical_algebra_dim(d, kind) - sq + odd
                         : 2 * classical_algebra_dim(d, kind) - sq - odd;
  return twice / 2;
}

}  // namespace ospnil
