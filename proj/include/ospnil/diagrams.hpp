#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ospnil/partitions.hpp"

namespace ospnil {

/// A row of a graded diagram.  Cell j (0-based, column j+1) carries label
/// start ^ (j & 1); only the length and the start bit are stored.
struct GradedRow {
  int length = 0;
  int start = 0;  // 0: even row, 1: odd row

  int zeros() const { return start == 0 ? (length + 1) / 2 : length / 2; }
  int ones() const { return length - zeros(); }
  int label_at(int j) const { return start ^ (j & 1); }

  friend bool operator==(const GradedRow&, const GradedRow&) = default;
};

/// Canonical row precedence: longer first, then even before odd.
inline bool row_precedes(const GradedRow& a, const GradedRow& b) {
  return a.length != b.length ? a.length > b.length : a.start < b.start;
}

/// Multiset of graded rows kept in canonical order, so equality is multiset equality.
class GradedDiagram {
 public:
  GradedDiagram() = default;
  /// Canonicalizes; throws DomainError on rows of non-positive length or bad start bit.
  explicit GradedDiagram(std::vector<GradedRow> rows);

  /// Rows given as alternating 0/1 strings, e.g. {"01010", "0"}.
  static GradedDiagram from_strings(const std::vector<std::string>& rows);
  /// Comma separated compact form, e.g. "101,0,0"; "-" or "" is the empty diagram.
  static GradedDiagram parse(std::string_view text);

  const std::vector<GradedRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int n0() const;
  int n1() const;
  int cells() const { return n0() + n1(); }
  int max_length() const { return rows_.empty() ? 0 : rows_.front().length; }
  Partition shape() const;
  /// Number of rows with the given length and start bit.
  int count(int length, int start) const;

  /// One row per line of '0'/'1' characters.
  std::string text() const;
  /// Compact form accepted by parse(): rows joined by ','.
  std::string compact() const;

  /// Listing order: rows compared lexicographically under row_precedes, so
  /// "less" means "listed first" ({even 5} before the zero diagram).
  friend std::strong_ordering operator<=>(const GradedDiagram& a, const GradedDiagram& b);
  friend bool operator==(const GradedDiagram& a, const GradedDiagram& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<GradedRow> rows_;
};

struct LabeledDiagram {
  GradedDiagram diagram;
  Label label = Label::None;

  /// Deterministic node id: compact diagram plus ":I" / ":II".
  std::string key() const;
  static LabeledDiagram parse(std::string_view text);

  friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;
  friend std::strong_ordering operator<=>(const LabeledDiagram& a, const LabeledDiagram& b) {
    if (auto c = a.diagram <=> b.diagram; c != 0) return c;
    return a.label <=> b.label;
  }
};

/// Erasing the 1-cells (resp. 0-cells): per-row counts of 0-cells (resp. 1-cells), zeros dropped.
std::pair<Partition, Partition> d0d1(const GradedDiagram& d);

enum class IndecomposableKind {
  EvenSingle = 1,  // even row of length 4p+1
  OddSingle = 2,   // odd row of length 4p-1
  EvenPair = 3,    // two even rows of length 4p-1
  OddPair = 4,     // two odd rows of length 4p+1
  MixedPair = 5,   // an even and an odd row of length 2p
};

struct Indecomposable {
  IndecomposableKind kind;
  int length;

  std::vector<GradedRow> rows() const;
  GradedDiagram diagram() const { return GradedDiagram(rows()); }
  int n0() const;
  int n1() const;
  friend bool operator==(const Indecomposable&, const Indecomposable&) = default;
};

/// All indecomposable pieces of the five families with at most max_cells cells.
std::vector<Indecomposable> indecomposables_up_to(int max_cells);
std::vector<GradedDiagram> indecomposable_kinds(int max_cells);

/// Each even length carries as many even rows as odd rows.
bool satisfies_even_length_pairing(const GradedDiagram& d);

/// Cell counts plus the even-length pairing and (d0, d1) in P_o(m) x P_sp(N).
bool is_valid(const GradedDiagram& d, int m, int N);

/// The decomposition into indecomposables is forced by (length mod 4, start);
/// returns it, or nullopt when some row class cannot be covered.
std::optional<std::vector<Indecomposable>> decompose(const GradedDiagram& d);
inline bool is_decomposable_into_indecomposables(const GradedDiagram& d) { return decompose(d).has_value(); }

/// Multisets of indecomposables with n0 = m, n1 = N, in listing order.
std::vector<GradedDiagram> enumerate(int m, int N);
/// Every graded diagram with n0 = m, n1 = N, valid or not; same order.
std::vector<GradedDiagram> enumerate_candidates(int m, int N);

/// False exactly when d0 is very even (two G0-orbits share the diagram).
bool is_stable(const GradedDiagram& d);
std::vector<LabeledDiagram> label(const GradedDiagram& d);
std::vector<LabeledDiagram> enumerate_labeled(int m, int N);

}  // namespace ospnil
