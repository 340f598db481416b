#include "ospnil/diagrams.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ospnil/error.hpp"

namespace ospnil {

GradedDiagram::GradedDiagram(std::vector<GradedRow> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.length <= 0) throw DomainError("graded row length must be positive");
    if (r.start != 0 && r.start != 1) throw DomainError("graded row start must be 0 or 1");
  }
  std::sort(rows_.begin(), rows_.end(), row_precedes);
}

GradedDiagram GradedDiagram::from_strings(const std::vector<std::string>& rows) {
  std::vector<GradedRow> out;
  for (const auto& s : rows) {
    if (s.empty()) throw DomainError("empty row string");
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] != '0' && s[j] != '1') throw DomainError("row \"" + s + "\" must contain only 0/1");
      if (j > 0 && s[j] == s[j - 1]) throw DomainError("row \"" + s + "\" does not alternate");
    }
    out.push_back({static_cast<int>(s.size()), s[0] - '0'});
  }
  return GradedDiagram(std::move(out));
}

GradedDiagram GradedDiagram::parse(std::string_view text) {
  std::vector<std::string> rows;
  if (text.empty() || text == "-") return GradedDiagram();
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == '\n') {
      if (!cur.empty()) rows.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) rows.push_back(cur);
  return from_strings(rows);
}

int GradedDiagram::n0() const {
  int s = 0;
  for (const auto& r : rows_) s += r.zeros();
  return s;
}

int GradedDiagram::n1() const {
  int s = 0;
  for (const auto& r : rows_) s += r.ones();
  return s;
}

Partition GradedDiagram::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(r.length);
  return Partition(std::move(p));
}

int GradedDiagram::count(int length, int start) const {
  return static_cast<int>(std::count(rows_.begin(), rows_.end(), GradedRow{length, start}));
}

std::string GradedDiagram::text() const {
  std::string s;
  for (const auto& r : rows_) {
    for (int j = 0; j < r.length; ++j) s += static_cast<char>('0' + r.label_at(j));
    s += '\n';
  }
  return s;
}

std::string GradedDiagram::compact() const {
  if (rows_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    for (int j = 0; j < rows_[i].length; ++j) s += static_cast<char>('0' + rows_[i].label_at(j));
  }
  return s;
}

std::strong_ordering operator<=>(const GradedDiagram& a, const GradedDiagram& b) {
  const std::size_t n = std::min(a.rows_.size(), b.rows_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.rows_[i] == b.rows_[i]) continue;
    return row_precedes(a.rows_[i], b.rows_[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.rows_.size() <=> b.rows_.size();
}

std::string LabeledDiagram::key() const {
  std::string k = diagram.compact();
  if (label != Label::None) k += std::string(":") + label_name(label);
  return k;
}

LabeledDiagram LabeledDiagram::parse(std::string_view text) {
  LabeledDiagram ld;
  const auto colon = text.find(':');
  ld.diagram = GradedDiagram::parse(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    const auto tag = text.substr(colon + 1);
    if (tag == "I") ld.label = Label::I;
    else if (tag == "II") ld.label = Label::II;
    else throw DomainError("unknown label \"" + std::string(tag) + "\"");
  }
  return ld;
}

std::pair<Partition, Partition> d0d1(const GradedDiagram& d) {
  std::vector<int> zeros, ones;
  for (const auto& r : d.rows()) {
    if (r.zeros() > 0) zeros.push_back(r.zeros());
    if (r.ones() > 0) ones.push_back(r.ones());
  }
  return {Partition(std::move(zeros)), Partition(std::move(ones))};
}

std::vector<GradedRow> Indecomposable::rows() const {
  switch (kind) {
    case IndecomposableKind::EvenSingle: return {{length, 0}};
    case IndecomposableKind::OddSingle: return {{length, 1}};
    case IndecomposableKind::EvenPair: return {{length, 0}, {length, 0}};
    case IndecomposableKind::OddPair: return {{length, 1}, {length, 1}};
    case IndecomposableKind::MixedPair: return {{length, 0}, {length, 1}};
  }
  return {};
}

int Indecomposable::n0() const {
  int s = 0;
  for (const auto& r : rows()) s += r.zeros();
  return s;
}

int Indecomposable::n1() const {
  int s = 0;
  for (const auto& r : rows()) s += r.ones();
  return s;
}

std::vector<Indecomposable> indecomposables_up_to(int max_cells) {
  std::vector<Indecomposable> out;
  for (int len = 1; len <= max_cells; ++len) {
    if (len % 4 == 1) {
      out.push_back({IndecomposableKind::EvenSingle, len});
      if (2 * len <= max_cells) out.push_back({IndecomposableKind::OddPair, len});
    } else if (len % 4 == 3) {
      out.push_back({IndecomposableKind::OddSingle, len});
      if (2 * len <= max_cells) out.push_back({IndecomposableKind::EvenPair, len});
    } else if (2 * len <= max_cells) {
      out.push_back({IndecomposableKind::MixedPair, len});
    }
  }
  return out;
}

std::vector<GradedDiagram> indecomposable_kinds(int max_cells) {
  std::vector<GradedDiagram> out;
  for (const auto& piece : indecomposables_up_to(max_cells)) out.push_back(piece.diagram());
  return out;
}

bool satisfies_even_length_pairing(const GradedDiagram& d) {
  for (int len = 2; len <= d.max_length(); len += 2)
    if (d.count(len, 0) != d.count(len, 1)) return false;
  return true;
}

bool is_valid(const GradedDiagram& d, int m, int N) {
  if (N % 2 != 0) return false;
  if (d.n0() != m || d.n1() != N) return false;
  if (!satisfies_even_length_pairing(d)) return false;
  const auto [zero, one] = d0d1(d);
  return is_orthogonal_partition(zero, m) && is_symplectic_partition(one, N);
}

std::optional<std::vector<Indecomposable>> decompose(const GradedDiagram& d) {
  std::vector<Indecomposable> pieces;
  for (int len = d.max_length(); len >= 1; --len) {
    const int ev = d.count(len, 0), od = d.count(len, 1);
    switch (len % 4) {
      case 1:
        if (od % 2) return std::nullopt;
        for (int i = 0; i < ev; ++i) pieces.push_back({IndecomposableKind::EvenSingle, len});
        for (int i = 0; i < od / 2; ++i) pieces.push_back({IndecomposableKind::OddPair, len});
        break;
      case 3:
        if (ev % 2) return std::nullopt;
        for (int i = 0; i < ev / 2; ++i) pieces.push_back({IndecomposableKind::EvenPair, len});
        for (int i = 0; i < od; ++i) pieces.push_back({IndecomposableKind::OddSingle, len});
        break;
      default:
        if (ev != od) return std::nullopt;
        for (int i = 0; i < ev; ++i) pieces.push_back({IndecomposableKind::MixedPair, len});
    }
  }
  return pieces;
}

namespace {

class IndecomposableComposer {
 public:
  IndecomposableComposer(int m, int N) : pieces_(indecomposables_up_to(m + N)) {}

  std::vector<GradedDiagram> run(int m, int N) {
    std::vector<GradedRow> rows;
    recurse(0, m, N, rows);
    return std::move(out_);
  }

 private:
  bool feasible(std::size_t i, int z, int o) {
    if (z == 0 && o == 0) return true;
    if (i == pieces_.size() || z < 0 || o < 0) return false;
    const auto key = std::make_tuple(i, z, o);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int pz = pieces_[i].n0(), po = pieces_[i].n1();
    bool ok = feasible(i + 1, z, o);
    for (int k = 1; !ok && k * pz <= z && k * po <= o; ++k) ok = feasible(i + 1, z - k * pz, o - k * po);
    memo_[key] = ok;
    return ok;
  }

  void recurse(std::size_t i, int z, int o, std::vector<GradedRow>& rows) {
    if (z == 0 && o == 0) {
      out_.emplace_back(rows);
      return;
    }
    if (!feasible(i, z, o)) return;
    const int pz = pieces_[i].n0(), po = pieces_[i].n1();
    const auto piece_rows = pieces_[i].rows();
    recurse(i + 1, z, o, rows);
    const std::size_t mark = rows.size();
    for (int k = 1; k * pz <= z && k * po <= o; ++k) {
      rows.insert(rows.end(), piece_rows.begin(), piece_rows.end());
      recurse(i + 1, z - k * pz, o - k * po, rows);
    }
    rows.resize(mark);
  }

  std::vector<Indecomposable> pieces_;
  std::map<std::tuple<std::size_t, int, int>, bool> memo_;
  std::vector<GradedDiagram> out_;
};

void sort_unique(std::vector<GradedDiagram>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void candidates_rec(int z, int o, GradedRow bound, std::vector<GradedRow>& rows, std::vector<GradedDiagram>& out) {
  if (z == 0 && o == 0) {
    out.emplace_back(rows);
    return;
  }
  for (int len = std::min(bound.length, z + o); len >= 1; --len) {
    for (int start = 0; start <= 1; ++start) {
      const GradedRow r{len, start};
      if (len == bound.length && start < bound.start) continue;
      if (r.zeros() > z || r.ones() > o) continue;
      rows.push_back(r);
      candidates_rec(z - r.zeros(), o - r.ones(), r, rows, out);
      rows.pop_back();
    }
  }
}

}  // namespace

std::vector<GradedDiagram> enumerate(int m, int N) {
  if (m < 0 || N < 0) return {};
  auto out = IndecomposableComposer(m, N).run(m, N);
  sort_unique(out);
  return out;
}

std::vector<GradedDiagram> enumerate_candidates(int m, int N) {
  std::vector<GradedDiagram> out;
  std::vector<GradedRow> rows;
  candidates_rec(m, N, {m + N, 0}, rows, out);
  sort_unique(out);
  return out;
}

bool is_stable(const GradedDiagram& d) { return !is_very_even(d0d1(d).first); }

std::vector<LabeledDiagram> label(const GradedDiagram& d) {
  if (is_stable(d)) return {{d, Label::None}};
  return {{d, Label::I}, {d, Label::II}};
}

std::vector<LabeledDiagram> enumerate_labeled(int m, int N) {
  std::vector<LabeledDiagram> out;
  for (const auto& d : enumerate(m, N))
    for (auto& l : label(d)) out.push_back(std::move(l));
  return out;
}

}  // namespace ospnil
