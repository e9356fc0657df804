#include "digrev/batch.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "digrev/connectivity.hpp"
#include "digrev/dichromatic.hpp"
#include "digrev/errors.hpp"
#include "digrev/structural.hpp"

namespace digrev {

namespace {

using Check = std::function<std::optional<std::string>(const Digraph&)>;

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string kind_of(const std::string& message) { return message.substr(0, message.find(':')); }

std::optional<std::string> evaluate(const Check& check, const Digraph& d) {
  try {
    if (auto problem = check(d)) return "property: " + *problem;
    return std::nullopt;
  } catch (const Error& e) {
    return std::string(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

Digraph without_edge(const Digraph& d, std::size_t index) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  arcs.erase(arcs.begin() + static_cast<long>(index));
  return Digraph(d.labels(), std::move(arcs));
}

// Greedy edge deletion while the failure keeps the same kind.
Digraph shrink(const Check& check, Digraph d, const std::string& kind) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < d.num_edges(); ++i) {
      Digraph candidate = without_edge(d, i);
      auto failure = evaluate(check, candidate);
      if (failure && kind_of(*failure) == kind) {
        d = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return d;
}

class Runner {
 public:
  explicit Runner(SuiteReport& report) : report_(report) {}

  void run(const Digraph& d, const Check& check) {
    const std::size_t index = report_.instances_run++;
    auto failure = evaluate(check, d);
    if (!failure) return;
    report_.failures.push_back({index, *failure, shrink(check, d, kind_of(*failure))});
  }

 private:
  SuiteReport& report_;
};

Digraph random_digraph(std::mt19937_64& rng, int min_n, int max_n, int min_m, int max_m) {
  const int n = uniform(rng, min_n, max_n);
  const int m = n < 2 ? 0 : uniform(rng, min_m, max_m);
  return gen_random(n, m, rng());
}

std::size_t out_count(const Digraph& d, std::uint32_t side_mask) {
  std::size_t count = 0;
  for (const Arc& a : d.arcs()) {
    if (((side_mask >> a.tail) & 1U) && !((side_mask >> a.head) & 1U)) ++count;
  }
  return count;
}

// --- checks -----------------------------------------------------------------

std::optional<std::string> check_charbit(const Digraph& d) {
  const auto order = identity_order(d);
  const ReduceResult r = charbit_reduce(d, order);
  if (auto bad = validate(d, r.sequence)) return "sequence invalid at " + std::to_string(*bad);
  if (!(apply(d, r.sequence) == r.final)) return "final digraph differs from applying the sequence";
  if (r.sequence.size() > d.num_edges()) return "more reversals than edges";
  for (std::size_t i = 1; i < r.forward_counts.size(); ++i) {
    if (r.forward_counts[i] <= r.forward_counts[i - 1]) return "forward count did not increase";
  }
  if (r.forward_counts.back() != forward_edge_count(r.final, order)) return "forward count mismatch";
  if (r.coloring.num_colors > 2 || !verify_coloring(r.final, r.coloring)) {
    return "certificate colouring invalid";
  }
  if (chi(r.final).chi > 2) return "exact dichromatic number of the result exceeds 2";
  return std::nullopt;
}

std::optional<std::string> check_certificate_equivalence(const Digraph& d) {
  const int c = chi(d).chi;
  for (int k = 1; k <= 3; ++k) {
    const auto cert = find_order_certificate(d, k);
    if ((c <= k) != cert.has_value()) {
      return "chi = " + std::to_string(c) + " but certificate for k = " + std::to_string(k) +
             (cert ? " exists" : " is missing");
    }
    if (cert && !check_order_certificate(d, *cert).ok) return "returned certificate fails";
  }
  return std::nullopt;
}

std::optional<std::string> check_reach_oracle(const Digraph& d) {
  const OrientationClasses oracle = orientation_space_oracle(d);
  std::vector<Digraph> orientations;
  orientations.reserve(oracle.class_of.size());
  for (std::uint32_t mask = 0; mask < oracle.class_of.size(); ++mask) {
    orientations.push_back(orientation_from_mask(d, mask));
  }
  for (const auto& cls : oracle.classes) {
    const std::uint32_t rep = cls.front();
    for (std::uint32_t b = 0; b < orientations.size(); ++b) {
      const auto seq = reachable(orientations[rep], orientations[b]);
      const bool same = oracle.class_of[rep] == oracle.class_of[b];
      if (seq.has_value() != same) {
        return "orientations " + std::to_string(rep) + " and " + std::to_string(b) +
               (same ? " share an oracle class but reach says unreachable"
                     : " are in different classes but reach found a sequence");
      }
      if (!seq) continue;
      if (!(apply(orientations[rep], *seq) == orientations[b])) return "reach witness misses target";
      const auto touches = touch_counts(d, *seq);
      if (std::any_of(touches.begin(), touches.end(), [](auto t) { return t > 1; })) {
        return "reach witness is not edge-disjoint";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_canonicalize(const Digraph& d, std::uint64_t seed, std::size_t length) {
  std::mt19937_64 rng(seed);
  const ReversionSequence seq = random_sequence(d, length, rng);
  const Difference diff = difference(d, seq);
  if (!is_eulerian(d, diff.reversed_edges)) return "difference is not Eulerian";
  const ReversionSequence canon = canonicalize(d, seq);
  if (validate(d, canon)) return "canonical sequence is invalid";
  const Digraph target = apply(d, seq);
  if (!(apply(d, canon) == target)) return "canonical sequence has a different effect";
  for (auto t : touch_counts(d, canon)) {
    if (t > 1) return "canonical sequence touches an edge twice";
  }
  const EdgeSet used = touched_edges(seq);
  for (EdgeId e : touched_edges(canon)) {
    if (!std::binary_search(used.begin(), used.end(), e)) return "canonical sequence uses a new edge";
  }
  ReversionSequence backwards{std::vector<DirectedCycle>(canon.cycles.rbegin(), canon.cycles.rend())};
  if (validate(d, backwards) || !(apply(d, backwards) == target)) {
    return "reordering edge-disjoint cycles changed the effect";
  }
  const ReversionSequence inv = invert(d, seq);
  if (inv.size() != seq.size() || !(apply(target, inv) == d)) return "inverse does not restore";
  return std::nullopt;
}

std::optional<std::string> check_invariance(const Digraph& d, std::uint64_t seed, std::size_t length) {
  std::mt19937_64 rng(seed);
  const ReversionSequence seq = random_sequence(d, length, rng);
  const std::size_t n = d.num_vertices();
  Digraph current = d;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Digraph next = apply(current, ReversionSequence{{seq.cycles[i]}});
    if (strong_components(next) != strong_components(current)) {
      return "cycle " + std::to_string(i) + " changed the strong components";
    }
    if (n <= 16) {
      for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) {
        if (out_count(current, w) != out_count(next, w)) {
          return "cycle " + std::to_string(i) + " changed |out(W)| for W mask " + std::to_string(w);
        }
      }
    }
    current = next;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && lambda(d, u, v) != lambda(current, u, v)) {
        return "lambda(" + d.label(u) + "," + d.label(v) + ") changed";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_menger(const Digraph& d, Vertex u, Vertex v, bool mutant) {
  const PathSystem ps = menger_system(d, u, v);
  if (mutant) {
    if (!ps.cut || ps.cut->out_edges.empty()) return std::nullopt;
    const Digraph tampered = d.reversed(std::span(ps.cut->out_edges).first(1));
    auto problems = path_system_violations(tampered, ps);
    if (!problems.empty()) return "mutant: " + problems.front();
    return std::nullopt;
  }
  const std::size_t l = lambda(d, u, v);
  if (ps.paths.size() != l || !ps.cut || ps.cut->out_edges.size() != l) {
    return "paths, cut and lambda disagree";
  }
  if (auto problems = path_system_violations(d, ps); !problems.empty()) return problems.front();
  const FlipSeparation fs = flip_separation(d, u, v);
  if (reachable_vertex(fs.flipped, u, v)) return "flipped digraph still has a u->v path";
  return std::nullopt;
}

std::optional<std::string> check_two_chain(const Digraph& t) {
  const TwoChainResult r = tournament_two_chain(t);
  if (auto bad = validate(t, r.sequence)) return "sequence invalid at " + std::to_string(*bad);
  if (!(apply(t, r.sequence) == r.final)) return "final differs from applying the sequence";
  std::vector<std::size_t> rank(t.num_vertices());
  for (std::size_t i = 0; i < r.order.size(); ++i) rank[r.order[i]] = i;
  for (std::size_t i = 1; i < r.order.size(); ++i) {
    if (t.out_edges(r.order[i - 1]).size() < t.out_edges(r.order[i]).size()) {
      return "order is not sorted by outdegree";
    }
  }
  for (const Arc& a : r.final.arcs()) {
    if (rank[a.tail] % 2 == rank[a.head] % 2 && rank[a.tail] > rank[a.head]) {
      return "backward edge inside a parity class";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_staged(const Digraph& d, const DirectedPath& p,
                                        const std::vector<DirectedPath>& qs) {
  const StagedFlip flip = flip_path_staged(d, p, qs);
  if (auto bad = validate(d, flip.sequence)) return "sequence invalid at " + std::to_string(*bad);
  EdgeSet expected(p.edges);
  expected.insert(expected.end(), qs.back().edges.begin(), qs.back().edges.end());
  if (difference(d, flip.sequence).reversed_edges != normalized(expected)) {
    return "net difference is not P plus the last return path";
  }
  std::vector<std::uint32_t> want(d.num_edges(), 0);
  for (EdgeId e : p.edges) want[e.value] = 1;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (EdgeId e : qs[i].edges) want[e.value] = i + 1 == qs.size() ? 1 : 2;
  }
  if (flip.touch_counts != want) return "touch-count ledger mismatch";
  return std::nullopt;
}

std::optional<std::string> check_scattered(const Digraph& d) {
  const OrientationClasses oracle = orientation_space_oracle(d);
  for (const auto& cls : oracle.classes) {
    const auto reference = strong_components(orientation_from_mask(d, cls.front()));
    for (std::uint32_t mask : cls) {
      if (strong_components(orientation_from_mask(d, mask)) != reference) {
        return "orientation " + std::to_string(mask) + " splits a strong component of its class";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_cert_encoding(const Digraph& d, const OrderCertificate& cert) {
  if (cert.order.size() != d.num_vertices()) return std::nullopt;  // shrinking never drops vertices
  std::vector<std::size_t> pos(d.num_vertices());
  for (std::size_t i = 0; i < cert.order.size(); ++i) pos[cert.order[i]] = i;
  auto violates = [&](const std::vector<EdgeId>& edges) {
    std::size_t forward = 0;
    for (EdgeId e : edges) forward += pos[d.tail(e)] < pos[d.head(e)];
    return static_cast<std::size_t>(cert.k) * forward < edges.size();
  };
  bool any = false;
  for (const auto& c : simple_cycles(d)) any = any || violates(c.edges);
  const CertificateCheck result = check_order_certificate(d, cert);
  if (result.ok == any) return "negative-cycle test disagrees with cycle enumeration";
  if (!result.ok && (!is_directed_cycle(d, result.violating->edges) || !violates(result.violating->edges))) {
    return "reported cycle does not violate the bound";
  }
  return std::nullopt;
}

// --- suites -----------------------------------------------------------------

void suite_charbit(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  if (cfg.exhaustive) {
    for (const auto& d : all_digraphs(4, 6)) run.run(d, check_charbit);
    for (const auto& d : all_simple_digraphs(4)) run.run(d, check_charbit);
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) run.run(random_digraph(rng, 1, 12, 0, 30), check_charbit);
}

void suite_certificate_equivalence(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  if (cfg.exhaustive) {
    for (const auto& d : all_digraphs(4, 6)) run.run(d, check_certificate_equivalence);
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) run.run(random_digraph(rng, 1, 7, 0, 14), check_certificate_equivalence);
}

void suite_reach_oracle(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  if (cfg.exhaustive) {
    for (const auto& d : all_underlying_graphs(5, 6)) run.run(d, check_reach_oracle);
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) run.run(random_digraph(rng, 2, 6, 1, 10), check_reach_oracle);
}

void suite_canonicalize(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const Digraph d = random_digraph(rng, 2, 7, 2, 14);
    const std::uint64_t seed = rng();
    const auto length = static_cast<std::size_t>(uniform(rng, 1, 6));
    run.run(d, [=](const Digraph& g) { return check_canonicalize(g, seed, length); });
  }
}

void suite_invariance(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  if (cfg.exhaustive) {
    for (const auto& d : all_digraphs(4, 5)) {
      const std::uint64_t seed = rng();
      run.run(d, [=](const Digraph& g) { return check_invariance(g, seed, 3); });
    }
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const Digraph d = random_digraph(rng, 2, 5, 2, 14);
    const std::uint64_t seed = rng();
    const auto length = static_cast<std::size_t>(uniform(rng, 1, 5));
    run.run(d, [=](const Digraph& g) { return check_invariance(g, seed, length); });
  }
}

void suite_menger(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  const bool mutant = cfg.mutant;
  if (cfg.exhaustive) {
    for (const auto& d : all_digraphs(4, 5)) {
      for (Vertex u = 0; u < 4; ++u) {
        for (Vertex v = 0; v < 4; ++v) {
          if (u != v) run.run(d, [=](const Digraph& g) { return check_menger(g, u, v, mutant); });
        }
      }
    }
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    Digraph d = random_digraph(rng, 2, 10, 0, 25);
    if (uniform(rng, 0, 1) == 1) {
      // Overlay a random Hamiltonian cycle so the instance is strongly connected.
      std::vector<Vertex> perm(d.num_vertices());
      for (Vertex x = 0; x < perm.size(); ++x) perm[x] = x;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
      for (std::size_t x = 0; x < perm.size(); ++x) arcs.push_back({perm[x], perm[(x + 1) % perm.size()]});
      d = Digraph(d.labels(), std::move(arcs));
    }
    const auto n = static_cast<int>(d.num_vertices());
    const auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
    auto v = static_cast<Vertex>(uniform(rng, 0, n - 2));
    if (v >= u) ++v;
    run.run(d, [=](const Digraph& g) { return check_menger(g, u, v, mutant); });
  }
}

void suite_two_chain(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  if (cfg.exhaustive) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& t : all_tournaments(n)) run.run(t, check_two_chain);
    }
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    run.run(gen_tournament(uniform(rng, 1, 12), rng()), check_two_chain);
  }
}

void suite_staged(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const int n = uniform(rng, 2, 8);
    std::vector<Arc> arcs;
    // Simple path 0 -> ... -> 1 through random distinct interior vertices.
    auto add_path = [&](Vertex from, Vertex to) {
      std::vector<Vertex> interior;
      for (Vertex x = 2; x < Vertex(n); ++x) interior.push_back(x);
      std::shuffle(interior.begin(), interior.end(), rng);
      interior.resize(static_cast<std::size_t>(uniform(rng, 0, std::min(3, n - 2))));
      std::vector<EdgeId> edges;
      Vertex at = from;
      interior.push_back(to);
      for (Vertex next : interior) {
        edges.push_back(EdgeId{static_cast<std::uint32_t>(arcs.size())});
        arcs.push_back({at, next});
        at = next;
      }
      return DirectedPath{from, to, std::move(edges)};
    };
    const DirectedPath p = add_path(0, 1);
    std::vector<DirectedPath> qs;
    const int returns = uniform(rng, 1, 4);
    for (int j = 0; j < returns; ++j) qs.push_back(add_path(1, 0));
    const int noise = uniform(rng, 0, 6);
    for (int j = 0; j < noise; ++j) {
      const auto t = static_cast<Vertex>(uniform(rng, 0, n - 1));
      auto h = static_cast<Vertex>(uniform(rng, 0, n - 2));
      if (h >= t) ++h;
      arcs.push_back({t, h});
    }
    const Digraph d(numbered_labels(static_cast<std::size_t>(n)), std::move(arcs));
    run.run(d, [=](const Digraph& g) { return check_staged(g, p, qs); });
  }
}

void suite_scattered(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  if (cfg.exhaustive) {
    for (const auto& d : all_underlying_graphs(4, 6)) run.run(d, check_scattered);
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) run.run(random_digraph(rng, 2, 6, 1, 10), check_scattered);
}

void suite_cert_encoding(const SuiteConfig& cfg, std::mt19937_64& rng, Runner& run) {
  if (cfg.exhaustive) {
    for (const auto& d : all_digraphs(4, 5)) {
      OrderCertificate cert{identity_order(d), 1};
      do {
        for (int k = 1; k <= 3; ++k) {
          cert.k = k;
          run.run(d, [=](const Digraph& g) { return check_cert_encoding(g, cert); });
        }
      } while (std::next_permutation(cert.order.begin(), cert.order.end()));
    }
  }
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const Digraph d = random_digraph(rng, 2, 7, 0, 10);
    OrderCertificate cert{identity_order(d), uniform(rng, 1, 3)};
    std::shuffle(cert.order.begin(), cert.order.end(), rng);
    run.run(d, [=](const Digraph& g) { return check_cert_encoding(g, cert); });
  }
}

using SuiteFn = void (*)(const SuiteConfig&, std::mt19937_64&, Runner&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"canonicalize", suite_canonicalize},   {"cert-encoding", suite_cert_encoding},
      {"charbit", suite_charbit},             {"lambda-invariance", suite_invariance},
      {"menger", suite_menger},               {"reach-oracle", suite_reach_oracle},
      {"scattered", suite_scattered},         {"staged-flip", suite_staged},
      {"thm14-equivalence", suite_certificate_equivalence},     {"two-chain", suite_two_chain},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport batch_verify(const SuiteConfig& config) {
  const auto it = registry().find(config.suite);
  if (it == registry().end()) throw InputError("unknown suite '" + config.suite + "'");
  if (config.mutant && config.suite != "menger") {
    throw InputError("suite '" + config.suite + "' has no mutant");
  }
  SuiteReport report;
  report.suite = config.suite;
  std::mt19937_64 rng(config.seed);
  Runner runner(report);
  const auto start = std::chrono::steady_clock::now();
  it->second(config, rng, runner);
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::sort(report.failures.begin(), report.failures.end(),
            [](const auto& a, const auto& b) { return a.instance < b.instance; });
  return report;
}

io::Json to_json(const SuiteReport& report, bool include_timing) {
  io::Json failures = io::Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"instance", f.instance},
                        {"message", f.message},
                        {"counterexample", io::to_json(f.counterexample)}});
  }
  io::Json out = {{"suite", report.suite},
                  {"instances", report.instances_run},
                  {"failures", std::move(failures)}};
  if (include_timing) out["wall_time_ms"] = report.wall_ms;
  return out;
}

namespace {

void enumerate_multisets(std::size_t choices, std::size_t max_size,
                         const std::function<void(const std::vector<std::size_t>&)>& emit) {
  std::vector<std::size_t> picked;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    emit(picked);
    if (picked.size() == max_size) return;
    for (std::size_t c = from; c < choices; ++c) {
      picked.push_back(c);
      self(self, c);
      picked.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Digraph> all_digraphs(std::size_t n, std::size_t max_edges) {
  std::vector<Arc> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b) pairs.push_back({a, b});
    }
  }
  std::vector<Digraph> out;
  enumerate_multisets(pairs.size(), max_edges, [&](const std::vector<std::size_t>& pick) {
    std::vector<Arc> arcs;
    for (std::size_t i : pick) arcs.push_back(pairs[i]);
    out.emplace_back(numbered_labels(n), std::move(arcs));
  });
  return out;
}

std::vector<Digraph> all_underlying_graphs(std::size_t n, std::size_t max_edges) {
  std::vector<Arc> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  std::vector<Digraph> out;
  enumerate_multisets(pairs.size(), max_edges, [&](const std::vector<std::size_t>& pick) {
    std::vector<Arc> arcs;
    for (std::size_t i : pick) arcs.push_back(pairs[i]);
    out.emplace_back(numbered_labels(n), std::move(arcs));
  });
  return out;
}

std::vector<Digraph> all_simple_digraphs(std::size_t n) {
  std::vector<Arc> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b) pairs.push_back({a, b});
    }
  }
  std::vector<Digraph> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) arcs.push_back(pairs[i]);
    }
    out.emplace_back(numbered_labels(n), std::move(arcs));
  }
  return out;
}

std::vector<Digraph> all_tournaments(std::size_t n) {
  std::vector<Arc> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  std::vector<Digraph> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Arc> arcs = pairs;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if ((mask >> i) & 1U) arcs[i] = arcs[i].reversed();
    }
    out.emplace_back(numbered_labels(n), std::move(arcs));
  }
  return out;
}

ReversionSequence random_sequence(const Digraph& d, std::size_t length, std::mt19937_64& rng) {
  ReversionSequence seq;
  Digraph current = d;
  for (std::size_t i = 0; i < length; ++i) {
    const auto cycles = simple_cycles(current, 5000);
    if (cycles.empty()) break;
    const auto pick = std::uniform_int_distribution<std::size_t>(0, cycles.size() - 1)(rng);
    current = current.reversed(cycles[pick].edges);
    seq.cycles.push_back(cycles[pick]);
  }
  return seq;
}

}  // namespace digrev
