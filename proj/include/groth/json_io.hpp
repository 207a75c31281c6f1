#pragma once

// JSON interchange for tableaux and letters, plus command-line partition syntax.

#include <string>

#include <json.hpp>

#include "groth/core.hpp"

namespace groth {

using json = nlohmann::ordered_json;

json to_json(Letter a);
Letter letter_from_json(const json& j);

/// {"outer":[..],"inner":[..],"cells":[{"row","col","primed","unprimed"}..]}
/// Every cell of the shape is written, in row-major order.
json to_json(const Tableau& t);
/// Cells may be omitted (empty) but not repeated or placed outside the shape.
Tableau tableau_from_json(const json& j);

json to_json(const Partition& p);
json to_json(const WeightVector& w);
json to_json(const TotalOrder& order);
TotalOrder order_from_json(const json& j);

/// "3,3,2" or "-" for the empty partition.
Partition parse_partition(const std::string& text);
std::string partition_arg(const Partition& p);

/// Parses a total order written as "1'<1<2<3<2'<4<3'<4'".
TotalOrder parse_order(const std::string& text);

/// Compact diagram notation: rows separated by ',', boxes as {..}, skew
/// boxes as '*'. An optional marked cell is drawn as {X} when empty and with
/// square brackets, e.g. [2], otherwise.
std::string diagram(const Tableau& t, int mark_row = 0, int mark_col = 0);
/// Inverse of diagram() for letter values 1..9. A bare letter such as 3' is
/// accepted as a one-entry box. StructuralError on malformed text.
Tableau parse_diagram(const std::string& text);

}  // namespace groth
