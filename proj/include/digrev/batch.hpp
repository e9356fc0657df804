#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "digrev/graph.hpp"
#include "digrev/io.hpp"
#include "digrev/reversion.hpp"

namespace digrev {

struct SuiteConfig {
  std::string suite;
  /// Number of random instances.
  std::size_t instances = 100;
  std::uint64_t seed = 0;
  /// Also run the suite's exhaustive small-instance enumeration.
  bool exhaustive = false;
  /// Negative control: inject a known defect so that failures must appear.
  bool mutant = false;
};

struct SuiteFailure {
  std::size_t instance = 0;
  std::string message;
  /// Smallest edge-subset of the failing instance that still fails.
  Digraph counterexample;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances_run = 0;
  std::vector<SuiteFailure> failures;
  double wall_ms = 0;
};

/// Names accepted by batch_verify, sorted.
std::vector<std::string> suite_names();

/// Runs a property suite. Throws InputError for an unknown suite name.
SuiteReport batch_verify(const SuiteConfig& config);

/// Report as JSON; wall time is only included on request so that default
/// output is byte-reproducible.
io::Json to_json(const SuiteReport& report, bool include_timing);

// Instance generators shared with the test suites.

/// Every loopless multigraph on vertices 0..n-1 with at most `max_edges`
/// edges, as multisets of ordered pairs in nondecreasing pair order.
std::vector<Digraph> all_digraphs(std::size_t n, std::size_t max_edges);

/// Same, but over unordered pairs, each oriented from the smaller to the
/// larger vertex. Covers every underlying multigraph once.
std::vector<Digraph> all_underlying_graphs(std::size_t n, std::size_t max_edges);

/// Every simple digraph on vertices 0..n-1 (no parallel edges; 2-cycles
/// allowed), 2^(n(n-1)) in total.
std::vector<Digraph> all_simple_digraphs(std::size_t n);

/// All 2^(n choose 2) labelled tournaments on n vertices.
std::vector<Digraph> all_tournaments(std::size_t n);

/// Random valid reversion sequence of at most `length` cycles; stops early
/// when the current orientation is acyclic.
ReversionSequence random_sequence(const Digraph& d, std::size_t length, std::mt19937_64& rng);

}  // namespace digrev
