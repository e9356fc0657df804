#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "digrev/batch.hpp"
#include "digrev/dichromatic.hpp"
#include "digrev/errors.hpp"
#include "support.hpp"

using namespace digrev;
using fixtures::ids;

namespace {

// Certificate check by explicit cycle enumeration.
bool certifies(const Digraph& d, const std::vector<Vertex>& order, int k) {
  std::vector<std::size_t> pos(d.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (const auto& c : oracle::cycles(d)) {
    std::size_t forward = 0;
    for (auto e : c) forward += pos[d.arcs()[e].tail] < pos[d.arcs()[e].head];
    if (static_cast<std::size_t>(k) * forward < c.size()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("chi on small fixtures") {
  CHECK(chi(Digraph()).chi == 0);
  CHECK(chi(fixtures::path_abc()).chi == 1);
  const ChiResult t = chi(fixtures::triangle());
  CHECK(t.chi == 2);
  CHECK(verify_coloring(fixtures::triangle(), t.coloring));
  CHECK(chi(fixtures::bik3()).chi == 3);
  CHECK(chi(fixtures::doubled_triangle()).chi == 2);
  CHECK(chi(fixtures::triangle()).coloring.color == chi(fixtures::triangle()).coloring.color);
  CHECK_THROWS_AS(chi(gen_random(21, 0, 1)), ResourceError);
  CHECK(chi(gen_random(21, 0, 1), 21).chi == 1);
}

TEST_CASE("chi matches brute force over all colourings") {
  for (const auto& d : all_digraphs(3, 5)) REQUIRE(chi(d).chi == oracle::chi(d));
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = static_cast<int>(rng() % 6) + 1;
    const Digraph d = gen_random(n, n == 1 ? 0 : static_cast<int>(rng() % 16), rng());
    const ChiResult r = chi(d);
    REQUIRE(r.chi == oracle::chi(d));
    REQUIRE(r.coloring.num_colors == r.chi);
    REQUIRE(verify_coloring(d, r.coloring));
  }
}

TEST_CASE("verify_coloring") {
  const Digraph t = fixtures::triangle();
  CHECK(verify_coloring(t, {{0, 0, 1}, 2}));
  CHECK_FALSE(verify_coloring(t, {{0, 0, 0}, 1}));
  const Digraph k3 = fixtures::bik3();
  for (int mask = 0; mask < 8; ++mask) {
    CHECK_FALSE(verify_coloring(k3, {{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}, 2}));
  }
}

TEST_CASE("check_order_certificate") {
  CHECK(check_order_certificate(fixtures::triangle(), {{0, 1, 2}, 2}).ok);
  CHECK(check_order_certificate(fixtures::two_cycle(), {{0, 1}, 2}).ok);
  CHECK(check_order_certificate(fixtures::two_cycle(), {{1, 0}, 2}).ok);
  CHECK(check_order_certificate(fixtures::doubled_triangle(), {{0, 1, 2}, 2}).ok);
  const CertificateCheck bad = check_order_certificate(fixtures::triangle(), {{0, 1, 2}, 1});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violating);
  CHECK(is_directed_cycle(fixtures::triangle(), bad.violating->edges));

  const CertificateCheck k3 = check_order_certificate(fixtures::bik3(), {{0, 1, 2}, 2});
  CHECK_FALSE(k3.ok);
  REQUIRE(k3.violating);
  CHECK(k3.violating->edges == ids({4, 3, 1}));
}

TEST_CASE("certificate check agrees with cycle enumeration") {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 600; ++iter) {
    const int n = static_cast<int>(rng() % 6) + 2;
    const Digraph d = gen_random(n, static_cast<int>(rng() % 11), rng());
    auto order = identity_order(d);
    std::shuffle(order.begin(), order.end(), rng);
    const int k = static_cast<int>(rng() % 3) + 1;
    const CertificateCheck r = check_order_certificate(d, {order, k});
    REQUIRE(r.ok == certifies(d, order, k));
    if (!r.ok) REQUIRE(is_directed_cycle(d, r.violating->edges));
  }
}

TEST_CASE("find_order_certificate") {
  const auto dag = find_order_certificate(fixtures::path_abc(), 1);
  REQUIRE(dag);
  CHECK(dag->order == std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(find_order_certificate(fixtures::triangle(), 1).has_value());
  const auto t = find_order_certificate(fixtures::triangle(), 2);
  REQUIRE(t);
  CHECK(check_order_certificate(fixtures::triangle(), *t).ok);
  CHECK_FALSE(find_order_certificate(fixtures::bik3(), 2).has_value());
  CHECK(find_order_certificate(fixtures::bik3(), 3).has_value());
  CHECK_THROWS_AS(find_order_certificate(gen_random(10, 0, 1), 2), ResourceError);
}

TEST_CASE("certificate exists iff chi <= k") {
  for (const auto& d : all_digraphs(3, 6)) {
    const int c = oracle::chi(d);
    for (int k = 1; k <= 3; ++k) REQUIRE(find_order_certificate(d, k).has_value() == (c <= k));
  }
}

TEST_CASE("coloring_from_certificate") {
  const Digraph dag = fixtures::path_abc();
  Coloring c = coloring_from_certificate(dag, {{0, 1, 2}, 2});
  CHECK(c.num_colors <= 2);
  CHECK(verify_coloring(dag, c));

  const Digraph t = fixtures::triangle();
  c = coloring_from_certificate(t, {{0, 1, 2}, 2});
  CHECK(c.num_colors == 2);
  CHECK(verify_coloring(t, c));

  CHECK_THROWS_AS(coloring_from_certificate(fixtures::bik3(), {{0, 1, 2}, 2}), PreconditionError);
  CHECK_THROWS_AS(coloring_from_certificate(t, {{0, 1}, 2}), InputError);
}

TEST_CASE("charbit_reduce") {
  const Digraph t = fixtures::triangle();
  ReduceResult r = charbit_reduce(t, identity_order(t));
  CHECK(r.sequence.empty());
  CHECK(r.final == t);

  const Digraph k3 = fixtures::bik3();
  r = charbit_reduce(k3, identity_order(k3));
  REQUIRE(r.sequence.size() == 1);
  CHECK(r.sequence.cycles[0].edges == ids({4, 3, 1}));
  CHECK(r.final == fixtures::doubled_triangle());
  CHECK(chi(r.final).chi == 2);
  CHECK(r.forward_counts == std::vector<std::size_t>{3, 4});

  CHECK(charbit_reduce(fixtures::path_abc(), {{2, 1, 0}}).sequence.empty());
}

TEST_CASE("reduction yields valid colourings on random digraphs") {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = static_cast<int>(rng() % 7) + 2;
    const Digraph d = gen_random(n, static_cast<int>(rng() % 20), rng());
    auto order = identity_order(d);
    std::shuffle(order.begin(), order.end(), rng);
    const ReduceResult r = charbit_reduce(d, order);
    REQUIRE_FALSE(validate(d, r.sequence).has_value());
    REQUIRE(r.sequence.size() <= d.num_edges());
    REQUIRE(verify_coloring(r.final, r.coloring));
    REQUIRE(r.coloring.num_colors <= 2);
    REQUIRE(oracle::chi(r.final) <= 2);
  }
}
