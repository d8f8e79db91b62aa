#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chromadisc/bounds.hpp"
#include "chromadisc/discrepancy.hpp"
#include "chromadisc/report.hpp"

namespace chromadisc {

// JSON shapes used by the command-line tool. Rationals are written as
// strings ("7/2", "3") so no value ever passes through floating point.

/// Flat object; flags appear as "flags.<name>". Values that were not
/// computed, and the diameter of a disconnected graph, are null.
nlohmann::json to_json(const ParamReport& r);
/// {"coloring": [[...], ...], "subgraph": [...], "value": v}
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const BoundEntry& e);
nlohmann::json to_json(const BoundReport& r);

std::string_view relation_name(Relation r);

/// Header row for write_csv_rows.
void write_csv_header(std::ostream& out);
/// One row per entry: graph_id, graph6, name, relation, applicable, bound,
/// exact, slack, holds, detail.
void write_csv_rows(std::ostream& out, std::string_view graph_id, std::string_view graph6,
                    const BoundReport& r);

}  // namespace chromadisc
