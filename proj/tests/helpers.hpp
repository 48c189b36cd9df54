#ifndef ITCOVER_TEST_HELPERS_HPP
#define ITCOVER_TEST_HELPERS_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "itcover/graph.hpp"

namespace itcover::test {

// Quick graph builder: classes as (id, side), vertices as (id, side, class),
// edges as (aId, bId).
inline CoverGraph make_graph(std::vector<ClassInfo> classes,
                             std::vector<VertexInfo> vertices,
                             std::vector<Edge> edges) {
    CoverGraph g;
    g.classes = std::move(classes);
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    g.sort_all();
    return g;
}

// K_{p,q} with each side one class; ids: class 0/1, vertices 0..p+q-1.
inline CoverGraph complete_bipartite(int p, int q) {
    CoverGraph g;
    g.classes = {{0, Side::A}, {1, Side::B}};
    for (int i = 0; i < p; ++i) g.vertices.push_back({i, Side::A, 0});
    for (int i = 0; i < q; ++i) g.vertices.push_back({p + i, Side::B, 1});
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) g.edges.push_back({i, p + j});
    g.sort_all();
    return g;
}

// Independent-transversal oracle by plain cross-product enumeration; usable
// only on small instances, independent of the solver's search order.
inline bool naive_has_it(const CoverGraph& g) {
    std::vector<std::vector<int>> classes;
    for (const auto& c : g.classes) classes.push_back(g.class_members(c.id));
    std::set<std::pair<int, int>> adj;
    for (const auto& e : g.edges) {
        adj.insert({e.first, e.second});
        adj.insert({e.second, e.first});
    }
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t at) -> bool {
        if (at == classes.size()) return true;
        for (int v : classes[at]) {
            bool clash = false;
            for (int u : pick)
                if (adj.count({u, v})) { clash = true; break; }
            if (clash) continue;
            pick.push_back(v);
            if (self(self, at + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace itcover::test

#endif
