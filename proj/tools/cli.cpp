#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chromadisc/bounds.hpp"
#include "chromadisc/discrepancy.hpp"
#include "chromadisc/families.hpp"
#include "chromadisc/graph_io.hpp"
#include "chromadisc/report.hpp"
#include "chromadisc/serialize.hpp"

namespace chromadisc::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

SolverBudget make_budget(const std::optional<int>& vertices) {
  SolverBudget budget = SolverBudget::from_environment();
  if (vertices) budget.max_vertices = *vertices;
  return budget;
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::optional<std::string> graph6;
  std::optional<std::string> edges_file;
  std::optional<std::string> family;
  bool witness = false;
  bool skip_discrepancy = false;
  std::optional<int> budget;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  const int sources = (a.graph6 ? 1 : 0) + (a.edges_file ? 1 : 0) + (a.family ? 1 : 0);
  if (sources != 1) {
    err << "compute: give exactly one of --graph6, --edges, --family\n";
    return kUsage;
  }
  Graph g;
  if (a.graph6) g = parse_graph6(*a.graph6);
  if (a.edges_file) g = parse_edge_list(read_file(*a.edges_file));
  if (a.family) g = families::build(*a.family).graph;

  SolverOptions options;
  options.budget = make_budget(a.budget);
  ParamReport report = compute_invariants(g, options.budget);
  json j = json::object();
  int code = kOk;
  if (!a.skip_discrepancy) {
    try {
      Witness phi = phi_exact(g, options);
      Witness phi_hat = phi_hat_exact(g, options);
      report.phi = phi.value;
      report.phi_hat = phi_hat.value;
      if (a.witness) {
        j["phi_witness"] = to_json(phi);
        j["phi_hat_witness"] = to_json(phi_hat);
      }
    } catch (const BudgetExceeded& e) {
      err << "compute: " << e.what() << '\n';
      code = kBudget;
    }
  }
  json r = to_json(report);
  r["graph6"] = write_graph6(g);
  r.update(j);
  out << r.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::optional<int> all_up_to;
  std::vector<std::string> families;
  std::vector<std::string> gnp;
  std::string format = "json";
  bool witness = false;
  std::optional<int> budget;
};

struct Member {
  std::string id;
  Graph graph;
  std::vector<families::Claim> claims;
};

struct Outcome {
  std::optional<Verification> verification;
  std::string budget_error;
};

std::vector<Member> collect_members(const VerifyArgs& a) {
  std::vector<Member> members;
  if (a.all_up_to) {
    for (int n = 0; n <= *a.all_up_to; ++n) {
      const std::uint64_t count = families::labeled_count(n);
      for (std::uint64_t code = 0; code < count; ++code) {
        std::ostringstream id;
        id << "all:" << n << ':' << std::setw(5) << std::setfill('0') << code;
        members.push_back({id.str(), families::labeled(n, code), {}});
      }
    }
  }
  for (const auto& spec : a.families) {
    families::Instance inst = families::build(spec);
    members.push_back({"family:" + spec, std::move(inst.graph), std::move(inst.claims)});
  }
  for (const auto& spec : a.gnp) {
    families::Instance inst = families::build("gnp:" + spec);
    members.push_back({"gnp:" + spec, std::move(inst.graph), {}});
  }
  std::stable_sort(members.begin(), members.end(),
                   [](const Member& x, const Member& y) { return x.id < y.id; });
  return members;
}

std::vector<Outcome> verify_members(const std::vector<Member>& members,
                                    const VerifyOptions& options) {
  std::vector<Outcome> outcomes(members.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < members.size(); i = next++) {
      try {
        Verification v = verify_all(members[i].graph, options);
        check_claims(v, members[i].claims, v.bounds);
        outcomes[i].verification = std::move(v);
      } catch (const BudgetExceeded& e) {
        outcomes[i].budget_error = e.what();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), members.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return outcomes;
}

json witnesses_json(const Verification& v) {
  return {{"phi", to_json(v.phi)}, {"phi_hat", to_json(v.phi_hat)}};
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.all_up_to && a.families.empty() && a.gnp.empty()) {
    err << "verify: give --all-graphs-up-to, --family or --gnp\n";
    return kUsage;
  }
  if (a.all_up_to && (*a.all_up_to < 0 || *a.all_up_to > 6)) {
    err << "verify: --all-graphs-up-to must be in [0, 6]\n";
    return kUsage;
  }
  VerifyOptions options;
  options.solver.budget = make_budget(a.budget);
  const std::vector<Member> members = collect_members(a);
  const std::vector<Outcome> outcomes = verify_members(members, options);

  bool violated = false;
  bool over_budget = false;
  json graphs = json::array();
  if (a.format == "csv") write_csv_header(out);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Member& m = members[i];
    const Outcome& o = outcomes[i];
    const std::string g6 = write_graph6(m.graph);
    if (!o.verification) {
      over_budget = true;
      err << "budget exceeded: " << m.id << ' ' << g6 << ": " << o.budget_error << '\n';
      if (a.format == "csv") {
        BoundReport row;
        row.entries.push_back(not_applicable("budget-exceeded", Relation::kEqual, o.budget_error));
        write_csv_rows(out, m.id, g6, row);
      } else {
        graphs.push_back({{"id", m.id},
                          {"graph6", g6},
                          {"status", "budget-exceeded"},
                          {"error", o.budget_error}});
      }
      continue;
    }
    const Verification& v = *o.verification;
    const bool ok = v.bounds.all_hold();
    if (!ok) {
      violated = true;
      for (const auto& e : v.bounds.entries) {
        if (e.status != Status::kViolated) continue;
        err << "violation: " << m.id << ' ' << g6 << ' ' << to_json(e).dump() << '\n';
      }
      err << "  witnesses: " << witnesses_json(v).dump() << '\n';
    }
    if (a.format == "csv") {
      write_csv_rows(out, m.id, g6, v.bounds);
    } else {
      json row = {{"id", m.id},
                  {"graph6", g6},
                  {"status", ok ? "holds" : "violated"},
                  {"report", to_json(v.report)},
                  {"bounds", to_json(v.bounds)}};
      if (a.witness || !ok) row["witnesses"] = witnesses_json(v);
      graphs.push_back(std::move(row));
    }
  }
  if (a.format != "csv") {
    json doc = {{"all_hold", !violated && !over_budget}, {"graphs", graphs}};
    out << doc.dump() << '\n';
  }
  if (over_budget) return kBudget;
  return violated ? kViolation : kOk;
}

// ---------------------------------------------------------------------------
// family / convert

std::string format_graph(const Graph& g, const std::string& format) {
  return format == "edges" ? write_edge_list(g) : write_graph6(g);
}

int cmd_family(const std::string& spec, bool list, const std::string& format,
               std::ostream& out, std::ostream& err) {
  if (list) {
    for (const auto& name : families::names()) out << name << '\n';
    return kOk;
  }
  if (spec.empty()) {
    err << "family: missing family spec\n";
    return kUsage;
  }
  out << format_graph(families::build(spec).graph, format) << '\n';
  return kOk;
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& path,
                std::istream& in, std::ostream& out) {
  std::ifstream file;
  std::istream* source = &in;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    source = &file;
  }
  std::string line;
  while (std::getline(*source, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Graph g = from == "graph6" ? parse_graph6(line)
              : from == "edges" ? parse_edge_list(line)
                                : parse_graph(line);
    out << format_graph(g, to) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Chromatic discrepancy toolkit", "chromadisc"};
  app.require_subcommand(1);
  const auto budget_check = CLI::Range(0, kMaxVertices);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Invariants and exact discrepancy of one graph");
  compute_cmd->add_option("--graph6", compute.graph6, "Graph in graph6 format");
  compute_cmd->add_option("--edges", compute.edges_file, "File holding an 'n: u-v,...' edge list");
  compute_cmd->add_option("--family", compute.family, "Family spec, e.g. cycle:9");
  compute_cmd->add_flag("--witness", compute.witness, "Include optimal witnesses");
  compute_cmd->add_flag("--skip-discrepancy", compute.skip_discrepancy,
                        "Only the classical invariants");
  compute_cmd->add_option("--budget", compute.budget, "Solver vertex budget")->check(budget_check);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every bound on a corpus");
  verify_cmd->add_option("--all-graphs-up-to", verify.all_up_to,
                         "Every labeled graph on at most N vertices (N <= 6)");
  verify_cmd->add_option("--family", verify.families, "Family spec; repeatable");
  verify_cmd->add_option("--gnp", verify.gnp, "n,p,seed; repeatable");
  verify_cmd->add_option("--format", verify.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_flag("--witness", verify.witness, "Include witnesses for every graph");
  verify_cmd->add_option("--budget", verify.budget, "Solver vertex budget")->check(budget_check);

  std::string family_spec;
  std::string family_format = "graph6";
  bool family_list = false;
  auto* family_cmd = app.add_subcommand("family", "Print a family member");
  family_cmd->add_option("spec", family_spec, "Family spec, e.g. tight-phi:4,2");
  family_cmd->add_option("--format", family_format, "graph6 or edges")
      ->check(CLI::IsMember({"graph6", "edges"}));
  family_cmd->add_flag("--list", family_list, "List family names");

  std::string convert_from = "auto";
  std::string convert_to = "graph6";
  std::string convert_path;
  auto* convert_cmd = app.add_subcommand("convert", "Convert graphs, one per line");
  convert_cmd->add_option("input", convert_path, "Input file (default: stdin)");
  convert_cmd->add_option("--from", convert_from, "auto, graph6 or edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));
  convert_cmd->add_option("--to", convert_to, "graph6 or edges")
      ->check(CLI::IsMember({"graph6", "edges"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (compute_cmd->parsed()) return cmd_compute(compute, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (family_cmd->parsed()) {
      return cmd_family(family_spec, family_list, family_format, out, err);
    }
    return cmd_convert(convert_from, convert_to, convert_path, in, out);
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
}

}  // namespace chromadisc::cli
