#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ospnil/diagrams.hpp"
#include "ospnil/linalg.hpp"
#include "ospnil/order.hpp"
#include "ospnil/partitions.hpp"

// JSON and DOT encodings of the library's values.  Decoders throw DomainError on
// malformed input.  Layouts are documented in docs/formats.md.
namespace ospnil::io {

using Json = nlohmann::ordered_json;

/// "(3,1,1)", "3,1,1", "()" or "-".
Partition parse_partition(std::string_view text);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"key": "0101,0", "rows": ["0101", "0"]}.
Json to_json(const GradedDiagram& d);
GradedDiagram diagram_from_json(const Json& j);

/// Diagram fields plus "label": "none" | "I" | "II".
Json to_json(const LabeledDiagram& d);
LabeledDiagram labeled_from_json(const Json& j);

/// Row-major array of rows of exact rationals as strings.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Nodes carry their orbit dimension; covers are [lower key, upper key].
Json hasse_to_json(const HasseDiagram& h, int m, int N);
HasseDiagram hasse_from_json(const Json& j);

/// Bottom-to-top digraph, one rank per orbit dimension, edges lower -> upper.
std::string hasse_to_dot(const HasseDiagram& h, int m, int N);

}  // namespace ospnil::io
