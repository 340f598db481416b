#include "ospnil/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "ospnil/error.hpp"
#include "ospnil/kappa.hpp"

namespace ospnil::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_string()) throw DomainError(std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

Label parse_label(const std::string& s) {
  if (s == "none") return Label::None;
  if (s == "I") return Label::I;
  if (s == "II") return Label::II;
  throw DomainError("unknown label \"" + s + "\"");
}

}  // namespace

Partition parse_partition(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw DomainError("unbalanced parenthesis in partition");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  if (text.empty() || text == "-") return Partition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    auto item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw DomainError("malformed partition part \"" + std::string(item) + "\"");
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Json to_json(const Partition& p) { return Json(p.vec()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw DomainError("partition must be an array of integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const GradedDiagram& d) {
  Json rows = Json::array();
  std::istringstream text(d.text());
  for (std::string line; std::getline(text, line);)
    if (!line.empty()) rows.push_back(line);
  return Json{{"key", d.compact()}, {"rows", rows}};
}

GradedDiagram diagram_from_json(const Json& j) {
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw DomainError("\"rows\" must be an array of strings");
  std::vector<std::string> r;
  for (const auto& v : rows) {
    if (!v.is_string()) throw DomainError("\"rows\" must be an array of strings");
    r.push_back(v.get<std::string>());
  }
  auto d = GradedDiagram::from_strings(r);
  if (j.contains("key") && string_field(j, "key") != d.compact())
    throw DomainError("diagram key does not match its rows");
  return d;
}

Json to_json(const LabeledDiagram& d) {
  Json j = to_json(d.diagram);
  j["label"] = d.label == Label::None ? "none" : label_name(d.label);
  return j;
}

LabeledDiagram labeled_from_json(const Json& j) {
  return {diagram_from_json(j), parse_label(string_field(j, "label"))};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("matrix must be an array of rows");
  const std::size_t r = j.size();
  const std::size_t c = r ? (j[0].is_array() ? j[0].size() : 0) : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw DomainError("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < c; ++k) {
      const auto& v = j[i][k];
      if (v.is_string())
        m(i, k) = parse_rational(v.get<std::string>());
      else if (v.is_number_integer())
        m(i, k) = Rational(v.get<long>());
      else
        throw DomainError("matrix entries must be strings \"p/q\" or integers");
    }
  }
  return m;
}

Json hasse_to_json(const HasseDiagram& h, int m, int N) {
  Json nodes = Json::array();
  for (const auto& n : h.nodes) {
    Json j = to_json(n);
    j["orbit_dim"] = orbit_dim(n, m, N);
    nodes.push_back(std::move(j));
  }
  Json covers = Json::array();
  for (auto [lo, up] : h.covers) covers.push_back(Json::array({h.nodes[lo].key(), h.nodes[up].key()}));
  return Json{{"m", m}, {"N", N}, {"nodes", nodes}, {"covers", covers}};
}

HasseDiagram hasse_from_json(const Json& j) {
  HasseDiagram h;
  const auto& nodes = field(j, "nodes");
  const auto& covers = field(j, "covers");
  if (!nodes.is_array() || !covers.is_array()) throw DomainError("\"nodes\" and \"covers\" must be arrays");
  std::map<std::string, std::size_t> index;
  for (const auto& n : nodes) {
    h.nodes.push_back(labeled_from_json(n));
    if (!index.emplace(h.nodes.back().key(), h.nodes.size() - 1).second)
      throw DomainError("duplicate node " + h.nodes.back().key());
  }
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw DomainError("cover must be a pair of node keys");
    const auto lo = index.find(c[0].get<std::string>()), up = index.find(c[1].get<std::string>());
    if (lo == index.end() || up == index.end()) throw DomainError("cover refers to an unknown node");
    h.covers.emplace_back(lo->second, up->second);
  }
  std::sort(h.covers.begin(), h.covers.end());
  return h;
}

std::string hasse_to_dot(const HasseDiagram& h, int m, int N) {
  std::ostringstream out;
  out << "digraph \"osp(" << m << "," << N << ")\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  std::map<long, std::vector<std::size_t>> by_dim;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const auto& n = h.nodes[i];
    const long dim = orbit_dim(n, m, N);
    by_dim[dim].push_back(i);
    std::string rows = n.diagram.empty() ? "0 (zero)" : n.diagram.text();
    while (!rows.empty() && rows.back() == '\n') rows.pop_back();
    std::string label;
    for (char ch : rows) label += ch == '\n' ? std::string("\\n") : std::string(1, ch);
    if (n.label != Label::None) label += std::string("\\nlabel ") + label_name(n.label);
    out << "  n" << i << " [label=\"" << label << "\\ndim " << dim << "\", tooltip=\"" << n.key() << "\"];\n";
  }
  for (const auto& [dim, ids] : by_dim) {
    out << "  { rank=same;";
    for (auto i : ids) out << " n" << i << ";";
    out << " }\n";
  }
  for (auto [lo, up] : h.covers) out << "  n" << lo << " -> n" << up << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ospnil::io
