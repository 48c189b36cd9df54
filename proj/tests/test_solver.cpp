#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "itcover/solver.hpp"

using namespace itcover;
using test::complete_bipartite;
using test::make_graph;
using test::naive_has_it;

namespace {

CoverGraph full_2111() {
    // {u1,u2} | {w1},{w2} with edges u1w1, u2w2
    return make_graph(
        {{0, Side::A}, {1, Side::B}, {2, Side::B}},
        {{0, Side::A, 0}, {1, Side::A, 0}, {2, Side::B, 1}, {3, Side::B, 2}},
        {{0, 2}, {1, 3}});
}

CoverGraph edgeless(int classes, int size) {
    CoverGraph g;
    int v = 0;
    for (int c = 0; c < classes; ++c) {
        g.classes.push_back({c, c % 2 == 0 ? Side::A : Side::B});
        for (int i = 0; i < size; ++i)
            g.vertices.push_back({v++, g.classes.back().side, c});
    }
    g.sort_all();
    return g;
}

}  // namespace

TEST_CASE("single edge has no transversal") {
    SolveOutcome r = find_it(complete_bipartite(1, 1));
    CHECK(r.no_it());
}

TEST_CASE("edgeless graphs pick the first vertex of each class") {
    CoverGraph g = edgeless(4, 2);
    SolveOutcome r = find_it(g);
    REQUIRE(r.found());
    CHECK(verify_it(g, r.solution));
    for (const auto& [cls, v] : r.solution.choice)
        CHECK(v == g.class_members(cls).front());
}

TEST_CASE("full (2,1,1,1)-graph is a two-branch dead end") {
    SolveOutcome r = find_it(full_2111());
    CHECK(r.no_it());
    CHECK(r.nodes == 2);
}

TEST_CASE("budget exhaustion is reported, never as NoIT") {
    SolveOutcome r = find_it(full_2111(), 1);
    CHECK(r.kind == SolveOutcome::Kind::BudgetExceeded);
    CHECK(r.nodes == 2);  // the node that tripped the budget is counted
}

TEST_CASE("double cover with degree cap equal to half the class size") {
    // boundary regime: any full (2D,2D,D,D) cover has a transversal
    for (int d = 1; d <= 3; ++d)
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            CoverGraph g = random_cover({2 * d, 2 * d, d, d}, 3, 3, 0.4, seed);
            SolveOutcome r = find_it(g);
            REQUIRE(r.found());
            CHECK(verify_it(g, r.solution));
        }
}

TEST_CASE("solver agrees with the cross-product oracle") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        CoverGraph g = random_cover({2, 2, 2, 2}, 2, 2, 0.6, seed);
        SolveOutcome r = find_it(g);
        CHECK(r.found() == naive_has_it(g));
        if (r.found()) CHECK(verify_it(g, r.solution));
    }
}

TEST_CASE("identical runs explore identical node counts") {
    CoverGraph g = random_cover({3, 3, 2, 2}, 3, 3, 0.5, 7);
    SolveOutcome r1 = find_it(g);
    SolveOutcome r2 = find_it(g);
    CHECK(r1.kind == r2.kind);
    CHECK(r1.nodes == r2.nodes);
    CHECK(r1.solution == r2.solution);
}

TEST_CASE("verify_it rejects malformed transversals") {
    CoverGraph g = full_2111();
    std::vector<std::string> reasons;

    CHECK(!verify_it(g, ITSolution{{{0, 0}, {1, 2}, {2, 3}}}, &reasons));
    CHECK(std::any_of(reasons.begin(), reasons.end(), [](const std::string& r) {
        return r.find("adjacent") != std::string::npos;
    }));

    reasons.clear();
    CHECK(!verify_it(g, ITSolution{{{0, 0}, {1, 2}}}, &reasons));
    CHECK(std::any_of(reasons.begin(), reasons.end(), [](const std::string& r) {
        return r.find("class") != std::string::npos;
    }));

    // vertex outside its class
    CHECK(!verify_it(g, ITSolution{{{0, 2}, {1, 2}, {2, 3}}}));
}

TEST_CASE("domination witnesses") {
    CoverGraph k11 = complete_bipartite(1, 1);
    auto w = find_domination_witness(k11, 2);
    REQUIRE(w);
    CHECK(w->classes == std::vector<int>{0, 1});
    CHECK(w->edges == std::vector<Edge>{{0, 1}});
    CHECK(verify_domination_witness(k11, *w));

    CoverGraph g = full_2111();
    auto w2 = find_domination_witness(g, 3);
    REQUIRE(w2);
    CHECK(w2->classes == std::vector<int>{0, 1, 2});
    CHECK(w2->edges.size() == 2);
    CHECK(verify_domination_witness(g, *w2));

    // an edgeless graph has a transversal and no witness
    CHECK(!find_domination_witness(edgeless(2, 1), 2));
}

TEST_CASE("verify_domination_witness rejects bad shapes") {
    CoverGraph g = full_2111();
    std::vector<std::string> reasons;

    // |Z| == |S| is too large
    DominationWitness fat{{0, 1}, {{0, 2}, {1, 3}}};
    CHECK(!verify_domination_witness(g, fat, &reasons));

    // u2 has no neighbour among the endpoints of Z = {u1w1}
    DominationWitness undominated{{0, 1, 2}, {{0, 2}}};
    reasons.clear();
    CHECK(!verify_domination_witness(g, undominated, &reasons));
    CHECK(!reasons.empty());

    // edge outside S's classes
    DominationWitness outside{{0, 1}, {{1, 3}}};
    CHECK(!verify_domination_witness(g, outside));
}

TEST_CASE("random_cover is deterministic and respects its contract") {
    Params p{6, 6, 3, 3};
    CoverGraph g1 = random_cover(p, 5, 5, 0.5, 1);
    CoverGraph g2 = random_cover(p, 5, 5, 0.5, 1);
    CHECK(g1 == g2);
    ValidationReport r = validate(g1, p, true);
    CHECK(r.ok());
    CHECK(r.full);

    CoverGraph sparse = random_cover(p, 3, 3, 0.0, 9);
    CHECK(sparse.edges.empty());

    CoverGraph other_seed = random_cover(p, 5, 5, 0.5, 2);
    CHECK(g1 != other_seed);
}
