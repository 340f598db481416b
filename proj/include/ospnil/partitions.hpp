#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ospnil {

/// Weakly decreasing sequence of positive integers, stored dense (no trailing zeros).
class Partition {
 public:
  Partition() = default;
  /// Sorts into weakly decreasing order; throws DomainError on a non-positive part.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  int multiplicity(int value) const;
  Partition transposed() const;
  /// Dominance order on partitions of the same size.
  bool dominated_by(const Partition& other) const;

  /// "(3,1,1)"; the empty partition prints as "()".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A sub-partition of a parent: a subset of its parts (by index) padded with zeros.
struct SubPartition {
  std::vector<int> indices;
  int zeros = 0;
};

/// Finds `pattern` (weakly decreasing, zeros allowed at the tail) inside `parent`
/// as a sub-partition; greedy by value since equal parts are interchangeable.
std::optional<SubPartition> find_subpartition(const Partition& parent, std::span<const int> pattern);

enum class Label { None, I, II };

const char* label_name(Label l);

struct LabeledPartition {
  Partition partition;
  Label label = Label::None;

  std::string str() const;
  friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
  friend auto operator<=>(const LabeledPartition&, const LabeledPartition&) = default;
};

enum class ClassicalKind { Orthogonal, Symplectic };

/// |lambda| = m and even parts have even multiplicity.
bool is_orthogonal_partition(const Partition& lambda, int m);
/// |mu| = N and odd parts have even multiplicity.
bool is_symplectic_partition(const Partition& mu, int N);
/// All parts even, each with even multiplicity.  The empty partition is not very even.
bool is_very_even(const Partition& lambda);

/// Every partition of n, descending lexicographic.
std::vector<Partition> partitions_of(int n);

/// Orthogonal orbit labels of o(m): descending lexicographic, very even partitions
/// listed twice (I before II).
std::vector<LabeledPartition> enumerate_orthogonal(int m);
std::vector<Partition> enumerate_symplectic(int N);

/// dim o(d) or dim sp(d).
long classical_algebra_dim(int d, ClassicalKind kind);

/// Dimension of the classical nilpotent orbit with Jordan type lambda:
///   sp:  N(N+1)/2 - (sum (lambda^t_i)^2)/2 - #odd parts/2
///   o:   m(m-1)/2 - (sum (lambda^t_i)^2)/2 + #odd parts/2
/// Throws DomainError when lambda is not in the parametrization set.
long classical_orbit_dim(const Partition& lambda, ClassicalKind kind);

}  // namespace ospnil
