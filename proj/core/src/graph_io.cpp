#include "chromadisc/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace chromadisc {

namespace {

constexpr int kBias = 63;
constexpr char kHeader[] = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    throw ParseError(std::string("graph6: byte '") + c + "' outside the printable range 63..126");
  }
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) {
    text.remove_prefix(sizeof(kHeader) - 1);
  }
  if (text.empty()) {
    throw ParseError("graph6: empty input");
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError("graph6: 8-byte size header implies more than 64 vertices");
    }
    if (text.size() < 4) {
      throw ParseError("graph6: truncated size header");
    }
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex limit");
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " body bytes, found " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[static_cast<std::size_t>(i)] |= bits::bit(j);
        rows[static_cast<std::size_t>(j)] |= bits::bit(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text[pos + body - 1]);
    const int pad = 6 - static_cast<int>(k % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_adjacency(rows);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("edge list: invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("edge list: missing 'n:' prefix");
  }
  const int n = parse_int(text.substr(0, colon), "vertex count");
  if (n < 0 || n > kMaxVertices) {
    throw ParseError("edge list: vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  std::vector<Edge> edges;
  std::string_view rest = trim(text.substr(colon + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) {
      continue;
    }
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw ParseError("edge list: expected u-v, got '" + std::string(item) + "'");
    }
    edges.emplace_back(parse_int(item.substr(0, dash), "vertex"),
                       parse_int(item.substr(dash + 1), "vertex"));
  }
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const ParseError&) {
    throw;
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out += first ? " " : ",";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  return trim(text).find(':') != std::string_view::npos ? parse_edge_list(text)
                                                        : parse_graph6(text);
}

}  // namespace chromadisc
