#include "doctest.h"

#include <random>
#include <stdexcept>

#include "maci/workflow.hpp"

using namespace maci;

namespace {

RoleNode node(const std::string& id) {
  return RoleNode{id, id, {"skill"}, std::nullopt, std::nullopt};
}

DependencyEdge temporal_edge(const std::string& id, const std::string& a,
                             const std::string& b) {
  return DependencyEdge{id, a, b, EdgeKind::temporal, {{"min_gap", "0"}}, {}};
}

}  // namespace

TEST_CASE("node and edge insertion guards") {
  Workflow w;
  w.add_node(node("a"));
  w.add_node(node("b"));

  CHECK_THROWS_AS(w.add_node(node("a")), std::invalid_argument);

  SUBCASE("dangling endpoints rejected, workflow unchanged") {
    CHECK_THROWS_AS(w.add_edge(temporal_edge("e1", "a", "ghost")),
                    std::invalid_argument);
    CHECK_THROWS_AS(w.add_edge(temporal_edge("e1", "ghost", "b")),
                    std::invalid_argument);
    CHECK(w.edges.empty());
  }

  SUBCASE("self loops rejected") {
    CHECK_THROWS_AS(w.add_edge(temporal_edge("e1", "a", "a")),
                    std::invalid_argument);
  }

  SUBCASE("duplicate edge id rejected") {
    w.add_edge(temporal_edge("e1", "a", "b"));
    CHECK_THROWS_AS(w.add_edge(temporal_edge("e1", "b", "a")),
                    std::invalid_argument);
  }

  SUBCASE("temporal cycle rejected and rolled back") {
    w.add_node(node("c"));
    w.add_edge(temporal_edge("e1", "a", "b"));
    w.add_edge(temporal_edge("e2", "b", "c"));
    CHECK_THROWS_AS(w.add_edge(temporal_edge("e3", "c", "a")),
                    std::invalid_argument);
    CHECK(w.edges.size() == 2);
    CHECK(validate_structure(w).ok());
  }

  SUBCASE("non-temporal back edge closes no temporal cycle") {
    w.add_edge(temporal_edge("e1", "a", "b"));
    DependencyEdge back{"e2", "b", "a", EdgeKind::data, {}, {}};
    CHECK_NOTHROW(w.add_edge(back));
    CHECK_FALSE(temporal_cycle_exists(w));
  }
}

TEST_CASE("structure validation lists every defect") {
  Workflow w;
  w.nodes.push_back(RoleNode{"a", "a", {}, {}, {}});  // empty qualifications
  w.nodes.push_back(node("b"));
  w.edges.push_back(DependencyEdge{"e1", "a", "b", EdgeKind::temporal, {}, {}});
  w.edges.push_back(
      DependencyEdge{"e2", "a", "missing", EdgeKind::spatial, {}, {}});
  Constraint c;
  c.id = "c1";
  c.rule = "R99";
  c.hard = true;
  c.priority = 3;
  c.relates = {"a"};
  w.constraints.items.push_back(c);

  auto report = validate_structure(w);
  REQUIRE_FALSE(report.ok());

  auto has = [&](const std::string& needle) {
    for (const auto& d : report.defects)
      if (d.find(needle) != std::string::npos) return true;
    return false;
  };
  CHECK(has("empty qualification set"));
  CHECK(has("missing min_gap"));
  CHECK(has("missing route"));
  CHECK(has("dangling to_node"));
  CHECK(has("unknown rule code"));
  CHECK(has("hard constraint must have priority 5"));
  CHECK(has("relates must name exactly two roles"));
}

TEST_CASE("constraint set rejects duplicate ids") {
  ConstraintSet set;
  Constraint c;
  c.id = "c1";
  c.rule = "R1";
  set.add(c);
  CHECK(set.contains("c1"));
  CHECK_THROWS_AS(set.add(c), std::invalid_argument);
  CHECK(set.items.size() == 1);
}

TEST_CASE("partition by origin is a permutation preserving order") {
  ConstraintSet set;
  std::mt19937 rng(7);
  std::vector<ConstraintOrigin> origins{ConstraintOrigin::explicit_stated,
                                        ConstraintOrigin::implicit,
                                        ConstraintOrigin::derived};
  for (int i = 0; i < 60; ++i) {
    Constraint c;
    c.id = "c" + std::to_string(i);
    c.rule = "R" + std::to_string(1 + i % 12);
    c.origin = origins[rng() % 3];
    set.add(c);
  }

  auto parts = partition_constraints(set);
  CHECK(parts.explicit_stated.size() + parts.implicit.size() +
            parts.derived.size() ==
        set.items.size());

  // Concatenation contains exactly the input ids, and each bucket appears in
  // input order.
  auto in_order = [&](const std::vector<Constraint>& bucket,
                      ConstraintOrigin origin) {
    size_t cursor = 0;
    for (const auto& c : set.items) {
      if (c.origin != origin) continue;
      if (cursor >= bucket.size() || bucket[cursor].id != c.id) return false;
      ++cursor;
    }
    return cursor == bucket.size();
  };
  CHECK(in_order(parts.explicit_stated, ConstraintOrigin::explicit_stated));
  CHECK(in_order(parts.implicit, ConstraintOrigin::implicit));
  CHECK(in_order(parts.derived, ConstraintOrigin::derived));
}

TEST_CASE("temporal cycle detector agrees with an independent reachability check") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Workflow w;
    int n = 3 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) w.add_node(node("n" + std::to_string(i)));

    // Random temporal digraph without the add_edge guard.
    int edges = static_cast<int>(rng() % (2 * n));
    for (int e = 0; e < edges; ++e) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a == b) continue;
      w.edges.push_back(temporal_edge("e" + std::to_string(e),
                                      "n" + std::to_string(a),
                                      "n" + std::to_string(b)));
    }

    // Oracle: cycle iff some node reaches itself through >= 1 edge.
    std::vector<std::vector<int>> reach(n, std::vector<int>(n, 0));
    for (const auto& e : w.edges)
      reach[e.from_node[1] - '0'][e.to_node[1] - '0'] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    bool oracle = false;
    for (int i = 0; i < n; ++i)
      if (reach[i][i]) oracle = true;

    CAPTURE(trial);
    CHECK(temporal_cycle_exists(w) == oracle);
  }
}

TEST_CASE("enum string round trips") {
  for (auto k : {EdgeKind::temporal, EdgeKind::spatial, EdgeKind::resource,
                 EdgeKind::safety, EdgeKind::data})
    CHECK(edge_kind_from_string(to_string(k)) == k);
  for (auto k :
       {ConstraintKind::temporal, ConstraintKind::spatial,
        ConstraintKind::resource, ConstraintKind::safety, ConstraintKind::data,
        ConstraintKind::preference})
    CHECK(constraint_kind_from_string(to_string(k)) == k);
  for (auto o : {ConstraintOrigin::explicit_stated, ConstraintOrigin::implicit,
                 ConstraintOrigin::derived})
    CHECK(origin_from_string(to_string(o)) == o);
  CHECK_THROWS_AS(edge_kind_from_string("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(constraint_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("rule code validation") {
  CHECK(valid_rule_code("R1"));
  CHECK(valid_rule_code("R12"));
  CHECK_FALSE(valid_rule_code("R0"));
  CHECK_FALSE(valid_rule_code("R13"));
  CHECK_FALSE(valid_rule_code("X1"));
  CHECK_FALSE(valid_rule_code(""));
}
