// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
#include <array>
#include <boost/rational.hpp>
#include <cstdio>
#include <functional>
#include <set>
#include <vector>

#include "itcover/asymmetric.hpp"
#include "itcover/constructor.hpp"
#include "itcover/criteria.hpp"
#include "itcover/graph.hpp"
#include "itcover/solver.hpp"

using namespace itcover;

namespace {

int failures = 0;
int current_errors = 0;

void expect(bool ok, const char* what) {
    if (!ok) {
        ++current_errors;
        std::printf("    FAILED: %s\n", what);
    }
}

void criterion(int number, const char* title, const std::function<void()>& body) {
    current_errors = 0;
    try {
        body();
    } catch (const std::exception& e) {
        ++current_errors;
        std::printf("    EXCEPTION: %s\n", e.what());
    }
    bool ok = current_errors == 0;
    failures += !ok;
    std::printf("criterion %d [%s]: %s\n", number, title, ok ? "PASS" : "FAIL");
}

std::vector<Params> sharp_grid() {
    std::vector<Params> out;
    for (int ka = 1; ka <= 6; ++ka)
        for (int kb = 1; kb <= 6; ++kb)
            for (int da = 1; da <= 4; ++da)
                for (int db = 1; db <= 4; ++db)
                    if (!sufficient({ka, kb, da, db}))
                        out.push_back({ka, kb, da, db});
    return out;
}

void check_condition_boundary() {
    using Q = boost::rational<long long>;
    for (int ka = 1; ka <= 8; ++ka)
        for (int kb = 1; kb <= 8; ++kb)
            for (int da = 1; da <= 8; ++da)
                for (int db = 1; db <= 8; ++db) {
                    bool oracle = Q(db, ka) + Q(da, kb) <= Q(1);
                    expect(sufficient({ka, kb, da, db}) == oracle,
                           "integer comparison deviates from rationals");
                }
    for (int d = 1; d <= 4; ++d)
        expect(sufficient({2 * d, 2 * d, d, d}), "equality tuple rejected");
}

void check_sharp_structural() {
    for (const Params& p : sharp_grid()) {
        BuildReport r = build_sharp(p);
        ValidationReport v = validate(r.built.graph, p, true);
        expect(v.ok() && v.full, "output is not a full graph");
        expect(verify_trace(r.built.graph, r.built.trace),
               "trace replay rejected");
    }
}

void check_sharp_exhaustive() {
    std::set<std::array<int, 4>> must{{1, 1, 1, 1},
                                      {2, 1, 1, 1},
                                      {3, 2, 2, 1},
                                      {4, 3, 2, 2}};
    int covered = 0;
    for (const Params& p : sharp_grid()) {
        BuildReport r = build_sharp(p);
        if (r.built.graph.classes.size() > 24) continue;
        SolveOutcome outcome = find_it(r.built.graph);
        expect(outcome.no_it(), "exhaustive search found a transversal");
        if (must.count({p.ka, p.kb, p.da, p.db})) ++covered;
    }
    expect(covered == 4, "a required tuple exceeded 24 classes");
}

void check_double_cover_threshold() {
    for (int d = 1; d <= 3; ++d) {
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            CoverGraph g = random_cover({2 * d, 2 * d, d, d}, 3, 3, 0.45, seed);
            SolveOutcome r = find_it(g);
            expect(r.found(), "a (2D,2D,D,D) cover had no transversal");
            if (r.found())
                expect(verify_it(g, r.solution), "solver emitted a bad transversal");
        }
        Params sharp{2 * d - 1, 2 * d - 1, d, d};
        BuildReport r = build_sharp(sharp);
        expect(validate(r.built.graph, sharp, true).ok(), "not full");
        expect(verify_trace(r.built.graph, r.built.trace),
               "trace certificate rejected");
        if (d <= 2)
            expect(find_it(r.built.graph).no_it(),
                   "exhaustive confirmation failed");
    }
}

void check_deficit_formula() {
    for (const Params& p : sharp_grid()) {
        Params q = normalize(p).first;
        Phase1Result r = phase1(q);
        for (const auto& s : r.stats.log) {
            if (s.step == 32) continue;
            expect(Rational(s.db) == predicted_b_deficit(s.a, s.da, q),
                   "tracked B-deficit deviates from the closed form");
        }
    }
}

void check_loop_bounds() {
    for (const Params& p : sharp_grid()) {
        Params q = normalize(p).first;
        Phase1Result h0 = phase1(q);
        expect(h0.stats.max_consecutive_step2 <= (q.ka + q.db - 1) / q.db,
               "phase 1 step-2 streak exceeded ceil(ka/db)");
        Phase2Result h1 = phase2(h0.stage, q);
        expect(h1.stats.iterations <= h1.stats.iteration_bound,
               "phase 2 exceeded its iteration bound");
        expect(h0.stats.gadget_copies ==
                   h0.stage.state.a + h0.stage.state.b - 1,
               "phase 1 gadget count is not a + b - 1");
    }
}

void check_asymmetric() {
    for (int d = 1; d <= 4; ++d) {
        PairedGraph j = j_gadget(d);
        DerivedGraph dg = derived_graph(j);
        int m = d * d;
        std::set<std::pair<int, int>> want;
        for (int u = 0; u < m; ++u)
            for (int v = m; v < 2 * m; ++v) want.insert({u, v});
        std::set<std::pair<int, int>> got;
        for (const auto& e : dg.edges) got.insert({e.u, e.v});
        expect(want == got, "derived gadget graph is not K_{m,m}");
    }

    AsymmetricResult d1 = assemble_sharp_asymmetric(1);
    expect(find_it(d1.paired.graph).no_it(),
           "degree-1 assembly admits a transversal");

    // m = 2: 3 disjoint K_{2,2} built from per-edge pairs, partition by search
    CoverGraph g;
    std::vector<std::pair<int, int>> pairs;
    int vid = 0, cid = 0;
    for (int copy = 0; copy < 3; ++copy) {
        for (int s = 0; s < 2; ++s) {
            g.classes.push_back({cid, Side::A});
            g.vertices.push_back({vid++, Side::A, cid});
            g.vertices.push_back({vid++, Side::A, cid});
            ++cid;
        }
        int l0 = vid - 4, r0 = vid - 2;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                g.classes.push_back({cid, Side::B});
                g.vertices.push_back({vid, Side::B, cid});
                g.vertices.push_back({vid + 1, Side::B, cid});
                g.edges.push_back({l0 + i, vid});
                g.edges.push_back({r0 + j, vid + 1});
                pairs.push_back({vid, vid + 1});
                vid += 2;
                ++cid;
            }
    }
    g.sort_all();
    DerivedGraph dg2 = derived_graph({g, pairs});
    BlockPartition part = no_it_block_partition(dg2, 2, PartitionStrategy::Search);
    expect(part.blocks.size() == 4, "m=2 search did not give 4 blocks");
    SolveOutcome blocked = solve_derived(dg2, part);
    expect(blocked.no_it(), "m=2 search partition admits a transversal");

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        int d = 1 + static_cast<int>(seed % 2);
        PairedGraph pg = random_paired_cover(d, 2, 4, 0.35, seed);
        expect(check_pair_condition(pg.graph, pg.pairs),
               "random paired cover violates the pair condition");
        SolveOutcome r = find_it(pg.graph);
        expect(r.found(), "paired cover in the safe regime had no transversal");
    }
}

void check_witnesses() {
    int verified = 0;
    // no-IT instances from the sharp pipeline, small enough for the finder
    for (const Params& p : sharp_grid()) {
        if (verified >= 30) break;
        BuildReport r = build_sharp(p);
        const CoverGraph& g = r.built.graph;
        if (g.classes.size() > 5 || g.vertices.size() > 18 ||
            g.edges.size() > 20)
            continue;
        auto w = find_domination_witness(g, static_cast<int>(g.classes.size()));
        expect(w.has_value(), "no witness on a certified no-IT instance");
        if (!w) continue;
        expect(verify_domination_witness(g, *w), "witness failed verification");
        expect(witness_counting_check(g, *w, p),
               "witness failed the counting inequalities");
        ++verified;
    }
    // randomized search for further small no-IT instances
    for (std::uint64_t seed = 1; verified < 50 && seed <= 4000; ++seed) {
        CoverGraph g = random_cover({2, 2, 2, 2}, 3, 2, 0.7, seed);
        SolveOutcome r = find_it(g);
        if (!r.no_it()) continue;
        auto w = find_domination_witness(g, 5);
        expect(w.has_value(), "no witness on a random no-IT instance");
        if (!w) continue;
        expect(verify_domination_witness(g, *w), "witness failed verification");
        expect(witness_counting_check(g, *w, {2, 2, 2, 2}),
               "witness failed the counting inequalities");
        ++verified;
    }
    expect(verified >= 50, "fewer than 50 no-IT instances were examined");
}

}  // namespace

int main() {
    criterion(1, "condition boundary", check_condition_boundary);
    criterion(2, "sharp construction is structurally full", check_sharp_structural);
    criterion(3, "sharp construction is exhaustively no-IT", check_sharp_exhaustive);
    criterion(4, "double-cover threshold in both directions",
              check_double_cover_threshold);
    criterion(5, "deficit formula is exact", check_deficit_formula);
    criterion(6, "loop bounds hold", check_loop_bounds);
    criterion(7, "paired construction", check_asymmetric);
    criterion(8, "domination witnesses", check_witnesses);
    return failures == 0 ? 0 : 1;
}
