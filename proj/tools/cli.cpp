#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "digrev/batch.hpp"
#include "digrev/connectivity.hpp"
#include "digrev/dichromatic.hpp"
#include "digrev/errors.hpp"
#include "digrev/io.hpp"
#include "digrev/reversion.hpp"
#include "digrev/structural.hpp"

namespace digrev::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_vertices_chi = kDefaultChiVertexLimit;
  std::size_t max_vertices_cert = kDefaultCertificateVertexLimit;
  std::size_t max_edges_oracle = kDefaultOracleEdgeLimit;
};

// DIGREV_LIMITS="max-vertices=N,max-edges=M"; either key may be omitted.
void apply_env_limits(Limits& limits) {
  const char* raw = std::getenv("DIGREV_LIMITS");
  if (raw == nullptr || *raw == '\0') return;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("DIGREV_LIMITS: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoul(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("DIGREV_LIMITS: '" + value + "' is not a non-negative integer");
    }
    if (key == "max-vertices") {
      limits.max_vertices_chi = limits.max_vertices_cert = parsed;
    } else if (key == "max-edges") {
      limits.max_edges_oracle = parsed;
    } else {
      throw UsageError("DIGREV_LIMITS: unknown key '" + key + "'");
    }
  }
}

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

Json cycle_or_null(const std::optional<DirectedCycle>& c) {
  return c ? io::edge_list(c->edges) : Json(nullptr);
}

struct Options {
  std::string input = "-";
  std::string second;
  std::string output;
  std::string u, v;
  std::uint64_t seed = 0;
  int k = 2;
  std::vector<std::string> order;
  std::optional<std::size_t> max_vertices, max_edges;
  std::string format = "json";
  std::string suite;
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::optional<std::size_t> ladder;
  bool random = false, tournament = false;
  bool exhaustive = false, mutant = false, timing = false;
};

class Command {
 public:
  Command(Options& o, std::istream& in) : o_(o), in_(in) {}

  Digraph graph() const { return io::parse_digraph(read_text(o_.input, in_)); }
  Json second_json() const { return io::parse_json(read_text(o_.second, in_)); }

  std::vector<Vertex> order(const Digraph& d) const {
    return o_.order.empty() ? identity_order(d) : io::order_from_labels(d, o_.order);
  }

  std::string emit_graph(const Digraph& d) const {
    return o_.format == "dot" ? io::to_dot(d) : io::dump(io::to_json(d));
  }

 private:
  Options& o_;
  std::istream& in_;
};

std::string run_command(const std::string& name, Options& o, const Limits& limits, std::istream& in) {
  Command cmd(o, in);
  if (name == "chi") {
    const Digraph d = cmd.graph();
    const ChiResult r = chi(d, limits.max_vertices_chi);
    return std::to_string(r.chi) + "\n" + io::dump(io::to_json(d, r.coloring));
  }
  if (name == "reduce") {
    const Digraph d = cmd.graph();
    const auto order = cmd.order(d);
    const ReduceResult r = charbit_reduce(d, order);
    return io::dump({{"order", io::vertex_list(d, order)},
                     {"sequence", io::to_json(r.sequence)},
                     {"forward_counts", r.forward_counts},
                     {"coloring", io::to_json(r.final, r.coloring)},
                     {"final", io::to_json(r.final)}});
  }
  if (name == "cert-check") {
    const Digraph d = cmd.graph();
    const OrderCertificate cert{cmd.order(d), o.k};
    const CertificateCheck r = check_order_certificate(d, cert);
    return io::dump({{"k", o.k},
                     {"order", io::vertex_list(d, cert.order)},
                     {"ok", r.ok},
                     {"violating_cycle", cycle_or_null(r.violating)}});
  }
  if (name == "cert-find") {
    const Digraph d = cmd.graph();
    const auto cert = find_order_certificate(d, o.k, limits.max_vertices_cert);
    Json out = {{"k", o.k}, {"found", cert.has_value()}};
    if (cert) {
      out["order"] = io::vertex_list(d, cert->order);
      if (o.k <= 2) out["coloring"] = io::to_json(d, coloring_from_certificate(d, *cert));
    }
    return io::dump(out);
  }
  if (name == "lambda") {
    const Digraph d = cmd.graph();
    return std::to_string(lambda(d, d.vertex(o.u), d.vertex(o.v))) + "\n";
  }
  if (name == "menger") {
    const Digraph d = cmd.graph();
    return io::dump(io::to_json(d, menger_system(d, d.vertex(o.u), d.vertex(o.v))));
  }
  if (name == "flip-sep") {
    const Digraph d = cmd.graph();
    const Vertex u = d.vertex(o.u), v = d.vertex(o.v);
    const FlipSeparation fs = flip_separation(d, u, v);
    // Contrast: a raw flip of the paths drops lambda to 0, which no reversion
    // sequence can do.
    return io::dump({{"system", io::to_json(d, fs.system)},
                     {"side", io::vertex_list(d, fs.side)},
                     {"lambda_before", lambda(d, u, v)},
                     {"lambda_after", lambda(fs.flipped, u, v)},
                     {"path_after", reachable_vertex(fs.flipped, u, v)},
                     {"reachable_by_reversion", reachable(d, fs.flipped).has_value()},
                     {"in_edges_after", io::edge_list(fs.in_edges_after)},
                     {"flipped", io::to_json(fs.flipped)}});
  }
  if (name == "reach") {
    const Digraph d = cmd.graph();
    const Digraph target = io::digraph_from_json(cmd.second_json());
    const auto seq = reachable(d, target);
    return io::dump({{"reachable", seq.has_value()},
                     {"sequence", seq ? io::to_json(*seq) : Json(nullptr)}});
  }
  if (name == "canon") {
    const Digraph d = cmd.graph();
    const ReversionSequence seq = io::sequence_from_json(cmd.second_json());
    const Difference diff = difference(d, seq);  // validates
    return io::dump({{"canonical", io::to_json(canonicalize(d, seq))},
                     {"difference", io::edge_list(diff.reversed_edges)},
                     {"inverse", io::to_json(invert(d, seq))},
                     {"final", io::to_json(apply(d, seq))}});
  }
  if (name == "flip-path") {
    const Digraph d = cmd.graph();
    const Json plan = cmd.second_json();
    if (!plan.is_object() || !plan.contains("path") || !plan.contains("returns") ||
        !plan["returns"].is_array()) {
      throw InputError("flip plan must be {\"path\": [...], \"returns\": [[...], ...]}");
    }
    const DirectedPath p = make_path(d, io::edges_from_json(plan["path"]));
    std::vector<DirectedPath> qs;
    for (const auto& q : plan["returns"]) qs.push_back(make_path(d, io::edges_from_json(q)));
    return io::dump(io::to_json(d, flip_path_staged(d, p, qs)));
  }
  if (name == "two-chain") {
    const Digraph d = cmd.graph();
    return io::dump(io::to_json(d, tournament_two_chain(d)));
  }
  if (name == "oracle") {
    const Digraph d = cmd.graph();
    return io::dump(io::to_json(orientation_space_oracle(d, limits.max_edges_oracle)));
  }
  if (name == "gen") {
    const int kinds = (o.ladder ? 1 : 0) + (o.random ? 1 : 0) + (o.tournament ? 1 : 0);
    if (kinds != 1) throw UsageError("gen needs exactly one of --ladder, --random, --tournament");
    if (o.ladder) return cmd.emit_graph(gen_ladder(*o.ladder));
    if (!o.n) throw UsageError("gen --random/--tournament needs --n");
    if (o.random) return cmd.emit_graph(gen_random(*o.n, o.m, o.seed));
    return cmd.emit_graph(gen_tournament(*o.n, o.seed));
  }
  if (name == "convert") return cmd.emit_graph(cmd.graph());
  if (name == "batch") {
    SuiteConfig cfg;
    cfg.suite = o.suite;
    if (o.n) cfg.instances = *o.n;
    cfg.seed = o.seed;
    cfg.exhaustive = o.exhaustive;
    cfg.mutant = o.mutant;
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
      throw UsageError("unknown suite '" + cfg.suite + "'");
    }
    if (cfg.mutant && cfg.suite != "menger") throw UsageError("only the menger suite has a mutant");
    return io::dump(to_json(batch_verify(cfg), o.timing));
  }
  throw UsageError("unknown command '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  auto report = [&](const Json& j, int code) {
    err << j.dump() << "\n";
    return code;
  };

  Options o;
  CLI::App app{"Directed cycle reversion toolkit", "digrev"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for all subcommands");

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write result to file instead of stdout");
    sub->add_option("--max-vertices", o.max_vertices, "Vertex cap for exponential searches");
    sub->add_option("--max-edges", o.max_edges, "Edge cap for the orientation oracle");
    sub->add_option("--seed", o.seed, "Random seed");
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Digraph JSON file, or - for stdin");
    common(sub);
  };

  auto* chi_cmd = app.add_subcommand("chi", "Exact dichromatic number and an optimal colouring");
  with_input(chi_cmd);
  auto* reduce_cmd = app.add_subcommand("reduce", "Reverse cycles until a 2-colouring certificate holds");
  with_input(reduce_cmd);
  reduce_cmd->add_option("--order", o.order, "Vertex order, comma separated")->delimiter(',');
  auto* check_cmd = app.add_subcommand("cert-check", "Check a vertex-order certificate");
  with_input(check_cmd);
  check_cmd->add_option("--order", o.order, "Vertex order, comma separated")->delimiter(',');
  check_cmd->add_option("--k", o.k, "Colour bound")->check(CLI::PositiveNumber);
  auto* find_cmd = app.add_subcommand("cert-find", "Search for a vertex-order certificate");
  with_input(find_cmd);
  find_cmd->add_option("--k", o.k, "Colour bound")->check(CLI::PositiveNumber);
  for (const char* name : {"lambda", "menger", "flip-sep"}) {
    auto* sub = app.add_subcommand(name, name == std::string("lambda") ? "Local edge-connectivity"
                                         : name == std::string("menger") ? "Edge-disjoint paths with an orthogonal cut"
                                                                         : "Flip a path system and report the contrast");
    sub->add_option("input", o.input, "Digraph JSON file, or - for stdin")->required();
    sub->add_option("u", o.u, "Source vertex label")->required();
    sub->add_option("v", o.v, "Target vertex label")->required();
    common(sub);
  }
  auto* reach_cmd = app.add_subcommand("reach", "Decide reachability of a reorientation");
  reach_cmd->add_option("input", o.input, "Digraph JSON file")->required();
  reach_cmd->add_option("target", o.second, "Target reorientation JSON file")->required();
  common(reach_cmd);
  auto* canon_cmd = app.add_subcommand("canon", "Canonical edge-disjoint form of a sequence");
  canon_cmd->add_option("input", o.input, "Digraph JSON file")->required();
  canon_cmd->add_option("sequence", o.second, "Reversion sequence JSON file")->required();
  common(canon_cmd);
  auto* flip_cmd = app.add_subcommand("flip-path", "Staged flip of a path via return paths");
  flip_cmd->add_option("input", o.input, "Digraph JSON file")->required();
  flip_cmd->add_option("plan", o.second, "{\"path\": [...], \"returns\": [[...], ...]}")->required();
  common(flip_cmd);
  auto* two_cmd = app.add_subcommand("two-chain", "Reorient a tournament into two-chain form");
  with_input(two_cmd);
  auto* oracle_cmd = app.add_subcommand("oracle", "Orientation classes by exhaustive search");
  with_input(oracle_cmd);
  auto* gen_cmd = app.add_subcommand("gen", "Generate a digraph");
  common(gen_cmd);
  gen_cmd->add_option("--ladder", o.ladder, "Ladder with n rungs")->check(CLI::Range(2, 1 << 20));
  gen_cmd->add_flag("--random", o.random, "Uniform random multigraph (--n, --m)");
  gen_cmd->add_flag("--tournament", o.tournament, "Random tournament (--n)");
  gen_cmd->add_option("--n", o.n, "Vertex count");
  gen_cmd->add_option("--m", o.m, "Edge count");
  auto* convert_cmd = app.add_subcommand("convert", "Re-emit a digraph");
  with_input(convert_cmd);
  for (auto* sub : {gen_cmd, convert_cmd}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  }
  auto* batch_cmd = app.add_subcommand("batch", "Run a property suite");
  common(batch_cmd);
  batch_cmd->add_option("--suite", o.suite, "Suite name")->required();
  batch_cmd->add_option("--n", o.n, "Random instances");
  batch_cmd->add_flag("--exhaustive", o.exhaustive, "Also run the exhaustive small cases");
  batch_cmd->add_flag("--mutant", o.mutant, "Inject a known defect (negative control)");
  batch_cmd->add_flag("--timing", o.timing, "Include wall time in the report");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(),
                                   [&](const CLI::App* s) { return s->get_name() == args.front(); });
    if (!known) return report(error_json("usage", "unknown subcommand '" + args.front() + "'"), kExitUsage);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report(error_json("usage", e.what()), kExitUsage);
  }

  try {
    Limits limits;
    apply_env_limits(limits);
    if (o.max_vertices) limits.max_vertices_chi = limits.max_vertices_cert = *o.max_vertices;
    if (o.max_edges) limits.max_edges_oracle = *o.max_edges;

    const std::string result = run_command(app.get_subcommands().front()->get_name(), o, limits, in);
    if (o.output.empty()) {
      out << result;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file || !(file << result)) throw InputError("cannot write '" + o.output + "'");
    }
    return kExitOk;
  } catch (const UsageError& e) {
    return report(error_json("usage", e.what()), kExitUsage);
  } catch (const ParseError& e) {
    Json j = error_json(e.kind(), e.what());
    j["line"] = e.line();
    j["column"] = e.column();
    return report(j, kExitDomain);
  } catch (const ValidationError& e) {
    Json j = error_json(e.kind(), e.what());
    j["index"] = e.index();
    return report(j, kExitDomain);
  } catch (const Error& e) {
    return report(error_json(e.kind(), e.what()), kExitDomain);
  } catch (const std::exception& e) {
    return report(error_json("internal", e.what()), kExitDomain);
  }
}

}  // namespace digrev::cli
