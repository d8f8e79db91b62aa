#include "chromadisc/serialize.hpp"

namespace chromadisc {

namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

nlohmann::json to_json(const ParamReport& r) {
  return {
      {"n", r.n},
      {"m", r.m},
      {"chi", r.chi},
      {"omega", r.omega},
      {"alpha", r.alpha},
      {"delta", r.delta},
      {"psi", optional_json(r.psi)},
      {"achromatic", optional_json(r.achromatic)},
      {"phi", optional_json(r.phi)},
      {"phi_hat", optional_json(r.phi_hat)},
      {"diameter", optional_json(r.diameter)},
      {"flags.connected", r.flags.connected},
      {"flags.triangle_free", r.flags.triangle_free},
      {"flags.paw_free", r.flags.paw_free},
      {"flags.complete_multipartite", r.flags.complete_multipartite},
      {"flags.perfect", optional_json(r.flags.perfect)},
      {"flags.bipartite", r.flags.bipartite},
  };
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : w.coloring.blocks()) blocks.push_back(b.to_vector());
  return {{"coloring", blocks}, {"subgraph", w.subgraph.to_vector()}, {"value", w.value}};
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::kAtMost:
      return "at_most";
    case Relation::kAtLeast:
      return "at_least";
    case Relation::kEqual:
      return "equal";
  }
  return "?";
}

nlohmann::json to_json(const BoundEntry& e) {
  nlohmann::json j = {
      {"name", e.name},
      {"relation", relation_name(e.relation)},
      {"applicable", e.applicable()},
  };
  if (e.applicable()) {
    j["bound_value"] = to_string(e.bound_value);
    j["exact_value"] = to_string(e.exact_value);
    j["slack"] = to_string(e.slack);
  } else {
    j["bound_value"] = nullptr;
    j["exact_value"] = nullptr;
    j["slack"] = nullptr;
  }
  j["holds"] = e.holds();
  j["detail"] = e.detail;
  return j;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"all_hold", r.all_hold()}, {"entries", entries}};
}

void write_csv_header(std::ostream& out) {
  out << "graph_id,graph6,name,relation,applicable,bound,exact,slack,holds,detail\n";
}

void write_csv_rows(std::ostream& out, std::string_view graph_id, std::string_view graph6,
                    const BoundReport& r) {
  for (const auto& e : r.entries) {
    out << csv_field(graph_id) << ',' << csv_field(graph6) << ',' << csv_field(e.name) << ','
        << relation_name(e.relation) << ',' << (e.applicable() ? "true" : "false") << ',';
    if (e.applicable()) {
      out << to_string(e.bound_value) << ',' << to_string(e.exact_value) << ','
          << to_string(e.slack);
    } else {
      out << ",,";
    }
    out << ',' << (e.holds() ? "true" : "false") << ',' << csv_field(e.detail) << '\n';
  }
}

}  // namespace chromadisc
