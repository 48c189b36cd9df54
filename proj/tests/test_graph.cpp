#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "itcover/graph.hpp"

using namespace itcover;
using test::complete_bipartite;
using test::make_graph;

TEST_CASE("structure checks accept a sound graph") {
    CoverGraph g = complete_bipartite(3, 3);
    CHECK(!structure_error(g));
    CHECK(g.count_side_vertices(Side::A) == 3);
    CHECK(g.count_side_classes(Side::B) == 1);
    CHECK(g.degree(0) == 3);
    CHECK(g.neighbors(0) == std::vector<int>{3, 4, 5});
    CHECK(g.class_members(1) == std::vector<int>{3, 4, 5});
    CHECK(g.max_vertex_id() == 5);
    CHECK(g.max_class_id() == 1);
}

TEST_CASE("structure checks catch each defect") {
    CoverGraph ok = complete_bipartite(1, 1);

    CoverGraph dup_vertex = ok;
    dup_vertex.vertices.push_back({0, Side::A, 0});
    dup_vertex.sort_all();
    CHECK(structure_error(dup_vertex));

    CoverGraph dup_class = ok;
    dup_class.classes.push_back({0, Side::B});
    dup_class.sort_all();
    CHECK(structure_error(dup_class));

    CoverGraph side_mismatch = ok;
    side_mismatch.vertices[0].cls = 1;  // A-vertex inside the B-class
    CHECK(structure_error(side_mismatch));

    CoverGraph empty_class = ok;
    empty_class.classes.push_back({2, Side::A});
    CHECK(structure_error(empty_class));

    CoverGraph dangling = ok;
    dangling.edges.push_back({0, 9});
    dangling.sort_all();
    CHECK(structure_error(dangling));

    CoverGraph within_side = make_graph({{0, Side::A}, {1, Side::B}},
                                        {{0, Side::A, 0},
                                         {1, Side::A, 0},
                                         {2, Side::B, 1}},
                                        {{0, 1}});  // both endpoints A-side
    CHECK(structure_error(within_side));

    CoverGraph misoriented = ok;
    misoriented.edges = {{1, 0}};  // stored (B, A)
    CHECK(structure_error(misoriented));

    CoverGraph duplicate_edge = ok;
    duplicate_edge.edges = {{0, 1}, {0, 1}};
    CHECK(structure_error(duplicate_edge));

    CHECK_THROWS_AS(require_structure(duplicate_edge), error);
}

TEST_CASE("validate against caps") {
    CoverGraph k33 = complete_bipartite(3, 3);
    Params p{5, 6, 3, 3};

    ValidationReport r = validate(k33, p, false);
    CHECK(r.ok());
    CHECK(!r.full);

    // K_{4,3}: A-degree 3 fits, B-degree 4 exceeds db = 3
    CoverGraph k43 = complete_bipartite(4, 3);
    ValidationReport r43 = validate(k43, p, false);
    CHECK(!r43.ok());
    REQUIRE(r43.violations.size() == 3);
    for (const auto& v : r43.violations) {
        CHECK(v.kind == Violation::Kind::DegreeExceeded);
        CHECK(v.side == Side::B);
        CHECK(v.value == 4);
        CHECK(v.bound == 3);
    }

    ValidationReport full_check = validate(k33, Params{3, 3, 3, 3}, true);
    CHECK(full_check.ok());
    CHECK(full_check.full);

    ValidationReport not_full = validate(k33, p, true);
    CHECK(!not_full.ok());
    CHECK(std::any_of(not_full.violations.begin(), not_full.violations.end(),
                      [](const Violation& v) {
                          return v.kind == Violation::Kind::ClassNotFull;
                      }));
}

TEST_CASE("deficits") {
    CoverGraph k33 = complete_bipartite(3, 3);
    DeficitReport d = deficits(k33, Params{7, 5, 3, 3});
    CHECK(d.a == 1);
    CHECK(d.b == 1);
    CHECK(d.da == 4);
    CHECK(d.db == 2);

    DeficitReport full = deficits(k33, Params{3, 3, 3, 3});
    CHECK(full.da == 0);
    CHECK(full.db == 0);

    CHECK_THROWS_AS(deficits(k33, Params{2, 3, 3, 3}), error);  // oversize
}

TEST_CASE("disjoint union relabels the second input") {
    CoverGraph k11 = complete_bipartite(1, 1);
    UnionResult u = disjoint_union(k11, k11);
    CHECK(!structure_error(u.graph));
    CHECK(u.graph.vertices.size() == 4);
    CHECK(u.graph.classes.size() == 4);
    CHECK(u.graph.edges.size() == 2);
    CHECK(u.second.vertex.at(0) == 2);
    CHECK(u.second.vertex.at(1) == 3);
    CHECK(u.second.cls.at(0) == 2);
    CHECK(u.second.cls.at(1) == 3);

    CHECK_THROWS_AS(disjoint_union(k11, CoverGraph{}), error);
    CHECK_THROWS_AS(disjoint_union(CoverGraph{}, k11), error);
}

TEST_CASE("merge_class_into distributes a donor class") {
    // two K_{1,1}: merge class 3 (B) into class 1 (B)
    UnionResult u = disjoint_union(complete_bipartite(1, 1),
                                   complete_bipartite(1, 1));
    CoverGraph merged = merge_class_into(u.graph, 3, {{3, 1}}, std::nullopt);
    CHECK(!structure_error(merged));
    CHECK(merged.classes.size() == 3);
    CHECK(merged.class_size(1) == 2);
    CHECK(merged.edges.size() == 2);  // edges ride along with the vertices

    // cap of 1 on B-classes forbids the merge
    CHECK_THROWS_AS(
        merge_class_into(u.graph, 3, {{3, 1}}, Params{1, 1, 1, 1}),
        error);
    // incomplete assignment
    CHECK_THROWS_AS(merge_class_into(u.graph, 3, {}, std::nullopt), error);
    // cross-side target
    CHECK_THROWS_AS(merge_class_into(u.graph, 3, {{3, 0}}, std::nullopt),
                    error);
}

TEST_CASE("delete_vertices") {
    CoverGraph k23 = complete_bipartite(2, 3);
    CoverGraph g = delete_vertices(k23, {2, 4});  // two B-vertices
    CHECK(!structure_error(g));
    CHECK(g.class_size(1) == 1);
    CHECK(g.edges.size() == 2);

    // deleting the whole class is rejected
    CHECK_THROWS_AS(delete_vertices(k23, {0, 1}), error);
    CHECK_THROWS_AS(delete_vertices(k23, {9}), error);
}

TEST_CASE("flip_sides is an involution that reorients edges") {
    CoverGraph k23 = complete_bipartite(2, 3);
    CoverGraph f = flip_sides(k23);
    CHECK(!structure_error(f));
    CHECK(f.count_side_classes(Side::A) == 1);
    CHECK(f.count_side_vertices(Side::A) == 3);
    CHECK(f.find_vertex(0)->side == Side::B);
    // edge (0, 2) becomes (2, 0)
    CHECK(std::find(f.edges.begin(), f.edges.end(), Edge{2, 0}) != f.edges.end());
    CHECK(flip_sides(f) == k23);
}
