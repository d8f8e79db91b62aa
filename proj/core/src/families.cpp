#include "chromadisc/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "chromadisc/invariants.hpp"

namespace chromadisc::families {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw GraphError(message);
  }
}

/// Adds every edge inside [first, first + size).
void add_clique(std::vector<Edge>& edges, int first, int size) {
  for (int i = first; i < first + size; ++i) {
    for (int j = i + 1; j < first + size; ++j) {
      edges.emplace_back(i, j);
    }
  }
}

}  // namespace

Graph complete(int n) {
  require(n >= 0 && n <= kMaxVertices, "complete: n must be in [0, 64]");
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle: n must be in [3, 64]");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
  }
  return Graph::from_edge_list(n, edges);
}

Graph path(int n) {
  require(n >= 0 && n <= kMaxVertices, "path: n must be in [0, 64]");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
  }
  return Graph::from_edge_list(n, edges);
}

Graph star(int n) {
  require(n >= 1 && n <= kMaxVertices, "star: n must be in [1, 64]");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
  }
  return Graph::from_edge_list(n, edges);
}

Graph paw() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

Graph empty(int n) {
  require(n >= 0 && n <= kMaxVertices, "empty: n must be in [0, 64]");
  return Graph(n);
}

Graph cliques(std::span<const int> sizes) {
  std::vector<Edge> edges;
  int n = 0;
  for (int size : sizes) {
    require(size >= 1, "cliques: sizes must be positive");
    require(n + size <= kMaxVertices, "cliques: more than 64 vertices");
    add_clique(edges, n, size);
    n += size;
  }
  return Graph::from_edge_list(n, edges);
}

Graph mycielski(const Graph& g) {
  const int n = g.order();
  require(2 * n + 1 <= kMaxVertices, "mycielski: 2n+1 exceeds 64 vertices");
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    edges.emplace_back(a, b);
    edges.emplace_back(a, n + b);
    edges.emplace_back(b, n + a);
  }
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(n + i, 2 * n);
  }
  return Graph::from_edge_list(2 * n + 1, edges);
}

Graph mycielski_k(int k) {
  require(k >= 2, "mycielski: k must be at least 2");
  require(k <= 6, "mycielski: M_k has 3*2^(k-2)-1 vertices, which exceeds 64 for k > 6");
  Graph g = complete(2);
  for (int i = 3; i <= k; ++i) {
    g = mycielski(g);
  }
  return g;
}

Graph tight_phi(int c, int p) {
  require(c >= 1 && p >= 0 && p <= c - 1, "tight-phi: need c >= 1 and 0 <= p <= c-1");
  require(c + p * p <= kMaxVertices, "tight-phi: c + p^2 exceeds 64 vertices");
  std::vector<int> sizes{c};
  sizes.insert(sizes.end(), static_cast<std::size_t>(p), p);
  return cliques(sizes);
}

Graph tight_phi_hat(int c, int p) {
  require(c >= 2 && p >= 0 && p <= c - 2, "tight-phi-hat: need c >= 2 and 0 <= p <= c-2");
  const int core = c - (p + 1);
  require(core + (p + 1) * (p + 1) <= kMaxVertices, "tight-phi-hat: more than 64 vertices");
  const std::vector<int> copies(static_cast<std::size_t>(p + 1), p + 1);
  return join(complete(core), cliques(copies));
}

Graph gt_gadget(int t) {
  require(t >= 2, "gt: t must be at least 2");
  require(t * t <= kMaxVertices, "gt: t^2 exceeds 64 vertices");
  std::vector<Edge> edges;
  add_clique(edges, 0, t);
  for (int i = 0; i < t; ++i) {
    const int first = t + i * (t - 1);
    add_clique(edges, first, t - 1);
    for (int j = first; j < first + t - 1; ++j) {
      edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(t * t, edges);
}

Graph gr_gadget(int r) {
  require(r >= 4, "gr: r must be at least 4");
  require(2 * r <= kMaxVertices, "gr: 2r exceeds 64 vertices");
  std::vector<Edge> edges;
  add_clique(edges, 0, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (j != i) {
        edges.emplace_back(r + i, j);
      }
    }
  }
  return Graph::from_edge_list(2 * r, edges);
}

Graph nphard_gadget(const Graph& g) {
  const int n = g.order();
  require(n >= 2, "nphard: input needs at least 2 vertices");
  require(is_connected(g), "nphard: input must be connected");
  require(3 * n <= kMaxVertices, "nphard: 3n exceeds 64 vertices");
  std::vector<Edge> edges = g.edges();
  add_clique(edges, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, n + 2 * i);
    edges.emplace_back(i, n + 2 * i + 1);
  }
  return Graph::from_edge_list(3 * n, edges);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0 && n <= kMaxVertices, "gnp: n must be in [0, 64]");
  require(p >= 0.0 && p <= 1.0, "gnp: p must be in [0, 1]");
  const std::uint64_t key = splitmix64(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t x = splitmix64(key ^ static_cast<std::uint64_t>(64 * i + j));
      const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
      if (u < p) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::uint64_t labeled_count(int n) {
  require(n >= 0 && n <= 11, "labeled graphs: n must be in [0, 11]");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled(int n, std::uint64_t code) {
  require(code < labeled_count(n), "labeled graphs: edge code out of range");
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

// ---------------------------------------------------------------------------

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kChi: return "chi";
    case Quantity::kAlpha: return "alpha";
    case Quantity::kPsi: return "psi";
    case Quantity::kPhi: return "phi";
    case Quantity::kPhiHat: return "phi_hat";
    case Quantity::kProfileMinPhi: return "profile_min_phi_c";
    case Quantity::kProfileMaxPhi: return "profile_max_phi_c";
    case Quantity::kProfileMinPhiHat: return "profile_min_phi_hat_c";
    case Quantity::kProfileMaxPhiHat: return "profile_max_phi_hat_c";
  }
  return "unknown";
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) {
      return out;
    }
    s.remove_prefix(pos + 1);
  }
}

int to_int(std::string_view s, std::string_view family) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw GraphError(std::string(family) + ": bad integer parameter '" + std::string(s) + "'");
  }
  return value;
}

std::vector<int> ints(std::string_view params, std::string_view family, std::size_t expected) {
  std::vector<int> out;
  if (!params.empty()) {
    for (auto part : split(params, ',')) {
      out.push_back(to_int(part, family));
    }
  }
  if (expected != 0 && out.size() != expected) {
    throw GraphError(std::string(family) + ": expected " + std::to_string(expected) +
                     " parameter(s), got " + std::to_string(out.size()));
  }
  return out;
}

Claim exact(Quantity q, int value) { return {q, false, value}; }

}  // namespace

Instance build(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  Instance out{std::string(spec), Graph{}, {}};
  auto& claims = out.claims;
  using Q = Quantity;

  if (name == "complete") {
    const int n = ints(params, name, 1)[0];
    out.graph = complete(n);
    claims = {exact(Q::kChi, n), exact(Q::kPhi, 0), exact(Q::kPhiHat, 0)};
  } else if (name == "cycle") {
    const int n = ints(params, name, 1)[0];
    out.graph = cycle(n);
    if (n % 2 == 1) {
      claims = {exact(Q::kChi, 3), exact(Q::kPhi, n <= 7 ? 1 : 2), exact(Q::kPhiHat, 1)};
    } else {
      claims = {exact(Q::kChi, 2), exact(Q::kPhiHat, 0)};
    }
  } else if (name == "path") {
    out.graph = path(ints(params, name, 1)[0]);
    claims = {exact(Q::kPhiHat, 0)};
  } else if (name == "star") {
    out.graph = star(ints(params, name, 1)[0]);
    claims = {exact(Q::kPhi, 0), exact(Q::kPhiHat, 0)};
  } else if (name == "paw") {
    require(params.empty(), "paw: takes no parameters");
    out.graph = paw();
    claims = {exact(Q::kPhi, 1), exact(Q::kPhiHat, 1)};
  } else if (name == "empty") {
    const int n = ints(params, name, 1)[0];
    out.graph = empty(n);
    claims = {exact(Q::kPhi, 0), exact(Q::kPhiHat, 0)};
  } else if (name == "cliques") {
    const auto sizes = ints(params, name, 0);
    require(!sizes.empty(), "cliques: need at least one size");
    out.graph = cliques(sizes);
    claims = {exact(Q::kPhiHat, 0)};
    if (sizes.size() == 2) {
      const int a = std::min(sizes[0], sizes[1]);
      const int b = std::max(sizes[0], sizes[1]);
      if (a == b && a >= 4) {
        claims.push_back(exact(Q::kPhi, a / 2));
        claims.push_back(exact(Q::kAlpha, 2));
      } else if (b == 2 * a) {
        claims.push_back(exact(Q::kPhi, a));
      }
    }
  } else if (name == "mycielski") {
    const int k = ints(params, name, 1)[0];
    out.graph = mycielski_k(k);
    claims = {exact(Q::kChi, k), exact(Q::kPsi, k), exact(Q::kPhi, k - 2), exact(Q::kPhiHat, k - 2)};
  } else if (name == "tight-phi") {
    const auto cp = ints(params, name, 2);
    out.graph = tight_phi(cp[0], cp[1]);
    claims = {exact(Q::kChi, cp[0]), exact(Q::kPhi, cp[1])};
  } else if (name == "tight-phi-hat") {
    const auto cp = ints(params, name, 2);
    out.graph = tight_phi_hat(cp[0], cp[1]);
    claims = {exact(Q::kChi, cp[0]), exact(Q::kPhiHat, cp[1])};
  } else if (name == "gt") {
    const int t = ints(params, name, 1)[0];
    out.graph = gt_gadget(t);
    claims = {exact(Q::kChi, t), exact(Q::kPhi, t - 1)};
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(t))));
    if (root * root == t) {
      claims.push_back({Q::kPhiHat, true, t - root});
    }
  } else if (name == "gr") {
    const int r = ints(params, name, 1)[0];
    out.graph = gr_gadget(r);
    claims = {exact(Q::kChi, r),
              exact(Q::kPhi, 1),
              exact(Q::kPhiHat, 1),
              exact(Q::kProfileMinPhi, r - 1),
              exact(Q::kProfileMaxPhi, r - 1),
              exact(Q::kProfileMinPhiHat, r - 2),
              exact(Q::kProfileMaxPhiHat, r - 2)};
  } else if (name == "nphard") {
    require(!params.empty(), "nphard: needs an inner family, e.g. nphard:path:3");
    const Instance inner = build(params);
    out.graph = nphard_gadget(inner.graph);
    const int chi = chromatic_number(inner.graph).value;
    claims = {exact(Q::kPhi, chi), exact(Q::kPhiHat, chi)};
  } else if (name == "gnp") {
    const auto parts = split(params, ',');
    require(parts.size() == 3, "gnp: expected n,p,seed");
    const int n = to_int(parts[0], name);
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(std::string(parts[1]), &used);
      require(used == parts[1].size(), "gnp: bad probability");
    } catch (const std::logic_error&) {
      throw GraphError("gnp: bad probability '" + std::string(parts[1]) + "'");
    }
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), seed);
    require(!parts[2].empty() && ec == std::errc{} && ptr == parts[2].data() + parts[2].size(),
            "gnp: bad seed '" + std::string(parts[2]) + "'");
    out.graph = gnp(n, p, seed);
  } else {
    throw GraphError("unknown family '" + std::string(name) + "'");
  }
  return out;
}

std::vector<std::string> names() {
  return {"complete", "cycle", "path", "star", "paw", "empty", "cliques", "mycielski",
          "tight-phi", "tight-phi-hat", "gt", "gr", "nphard", "gnp"};
}

}  // namespace chromadisc::families
