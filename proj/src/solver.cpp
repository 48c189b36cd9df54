#include "itcover/solver.hpp"

#include <algorithm>

#include "itcover/criteria.hpp"
#include <numeric>
#include <random>

namespace itcover {

namespace {

struct Searcher {
    const PartitionedInstance& inst;
    std::int64_t budget;
    std::int64_t nodes = 0;
    std::vector<int> eliminated;   // per vertex: number of chosen neighbours
    std::vector<int> chosen;       // per class: chosen vertex index or -1
    std::vector<bool> assigned;    // per class
    bool out_of_budget = false;

    explicit Searcher(const PartitionedInstance& i, std::int64_t b)
        : inst(i), budget(b), eliminated(i.num_vertices(), 0),
          chosen(i.classes.size(), -1), assigned(i.classes.size(), false) {}

    int candidate_count(int cls) const {
        int n = 0;
        for (int v : inst.classes[cls])
            if (eliminated[v] == 0) ++n;
        return n;
    }

    bool search(int remaining) {
        if (remaining == 0) return true;
        int best = -1, best_count = -1;
        for (std::size_t c = 0; c < inst.classes.size(); ++c) {
            if (assigned[c]) continue;
            int n = candidate_count(static_cast<int>(c));
            if (best == -1 || n < best_count) {
                best = static_cast<int>(c);
                best_count = n;
            }
        }
        if (best_count == 0) return false;
        assigned[best] = true;
        for (int v : inst.classes[best]) {
            if (eliminated[v] != 0) continue;
            ++nodes;
            if (budget != kUnlimited && nodes > budget) {
                out_of_budget = true;
                assigned[best] = false;
                return false;
            }
            chosen[best] = v;
            for (int u : inst.adj[v]) ++eliminated[u];
            bool ok = search(remaining - 1);
            for (int u : inst.adj[v]) --eliminated[u];
            if (ok) {
                assigned[best] = false;
                return true;
            }
            if (out_of_budget) break;
        }
        chosen[best] = -1;
        assigned[best] = false;
        return false;
    }
};

}  // namespace

SolveOutcome solve_partitioned(const PartitionedInstance& inst, std::int64_t budget,
                               std::vector<int>* chosen_out) {
    Searcher s(inst, budget);
    bool found = s.search(static_cast<int>(inst.classes.size()));
    SolveOutcome out;
    out.nodes = s.nodes;
    if (found) {
        out.kind = SolveOutcome::Kind::Found;
        if (chosen_out) *chosen_out = s.chosen;
    } else if (s.out_of_budget) {
        out.kind = SolveOutcome::Kind::BudgetExceeded;
    } else {
        out.kind = SolveOutcome::Kind::NoIT;
    }
    return out;
}

namespace {

struct DenseView {
    std::vector<int> vertex_ids;  // index -> external vertex id
    std::vector<int> class_ids;   // class position -> external class id
    PartitionedInstance inst;
};

DenseView make_view(const CoverGraph& g) {
    DenseView view;
    std::map<int, int> index_of;
    for (const auto& v : g.vertices) {
        index_of[v.id] = static_cast<int>(view.vertex_ids.size());
        view.vertex_ids.push_back(v.id);
    }
    view.inst.adj.resize(view.vertex_ids.size());
    for (const auto& e : g.edges) {
        int u = index_of.at(e.first), w = index_of.at(e.second);
        view.inst.adj[u].push_back(w);
        view.inst.adj[w].push_back(u);
    }
    for (auto& a : view.inst.adj) std::sort(a.begin(), a.end());
    std::map<int, int> class_pos;
    for (const auto& c : g.classes) {
        class_pos[c.id] = static_cast<int>(view.class_ids.size());
        view.class_ids.push_back(c.id);
        view.inst.classes.emplace_back();
    }
    for (const auto& v : g.vertices)
        view.inst.classes[class_pos.at(v.cls)].push_back(index_of.at(v.id));
    return view;
}

}  // namespace

SolveOutcome find_it(const CoverGraph& g, std::int64_t budget) {
    require_structure(g);
    DenseView view = make_view(g);
    std::vector<int> chosen;
    SolveOutcome out = solve_partitioned(view.inst, budget, &chosen);
    if (out.found()) {
        for (std::size_t c = 0; c < chosen.size(); ++c)
            out.solution.choice[view.class_ids[c]] = view.vertex_ids[chosen[c]];
    }
    return out;
}

bool verify_it(const CoverGraph& g, const ITSolution& s,
               std::vector<std::string>* reasons) {
    std::vector<std::string> local;
    for (const auto& c : g.classes) {
        auto it = s.choice.find(c.id);
        if (it == s.choice.end()) {
            local.push_back("uncovered class " + std::to_string(c.id));
            continue;
        }
        const VertexInfo* v = g.find_vertex(it->second);
        if (!v)
            local.push_back("chosen vertex " + std::to_string(it->second) +
                            " does not exist");
        else if (v->cls != c.id)
            local.push_back("vertex " + std::to_string(it->second) +
                            " is not in class " + std::to_string(c.id));
    }
    for (const auto& [cls, vid] : s.choice)
        if (!g.find_class(cls))
            local.push_back("choice names missing class " + std::to_string(cls));
    std::set<int> picked;
    for (const auto& [cls, vid] : s.choice) picked.insert(vid);
    for (const auto& e : g.edges)
        if (picked.count(e.first) && picked.count(e.second))
            local.push_back("adjacent pair (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    if (reasons) *reasons = local;
    return local.empty();
}

std::optional<DominationWitness> find_domination_witness(const CoverGraph& g,
                                                         int max_s) {
    require_structure(g);
    int m = static_cast<int>(g.classes.size());
    int cap = std::min(max_s, m);
    if (m > 12 || g.vertices.size() > 24 || g.edges.size() > 26)
        throw error("find_domination_witness: search space too large");

    // subsets of classes by ascending size, then lexicographic over positions
    std::vector<int> class_ids;
    for (const auto& c : g.classes) class_ids.push_back(c.id);

    std::vector<int> cls_of_vertex_pos;
    std::map<int, int> class_pos;
    for (int i = 0; i < m; ++i) class_pos[class_ids[i]] = i;

    for (int size = 1; size <= cap; ++size) {
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::set<int> s_set;
            for (int pos : comb) s_set.insert(class_ids[pos]);
            // vertices and internal edges of L(S)
            std::vector<int> verts;
            for (const auto& v : g.vertices)
                if (s_set.count(v.cls)) verts.push_back(v.id);
            std::set<int> vset(verts.begin(), verts.end());
            std::vector<Edge> internal;
            for (const auto& e : g.edges)
                if (vset.count(e.first) && vset.count(e.second)) internal.push_back(e);

            int max_z = size - 1;
            int ne = static_cast<int>(internal.size());
            for (int zs = 1; zs <= std::min(max_z, ne); ++zs) {
                std::vector<int> zc(zs);
                std::iota(zc.begin(), zc.end(), 0);
                while (true) {
                    std::set<int> endpoints;
                    for (int i : zc) {
                        endpoints.insert(internal[i].first);
                        endpoints.insert(internal[i].second);
                    }
                    bool dominated = true;
                    for (int v : verts) {
                        bool has = false;
                        for (int u : g.neighbors(v))
                            if (endpoints.count(u)) { has = true; break; }
                        if (!has) { dominated = false; break; }
                    }
                    if (dominated) {
                        DominationWitness w;
                        w.classes.assign(s_set.begin(), s_set.end());
                        for (int i : zc) w.edges.push_back(internal[i]);
                        return w;
                    }
                    // next combination
                    int i = zs - 1;
                    while (i >= 0 && zc[i] == ne - zs + i) --i;
                    if (i < 0) break;
                    ++zc[i];
                    for (int j = i + 1; j < zs; ++j) zc[j] = zc[j - 1] + 1;
                }
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == m - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool verify_domination_witness(const CoverGraph& g, const DominationWitness& w,
                               std::vector<std::string>* reasons) {
    std::vector<std::string> local;
    std::set<int> s_set;
    for (int cls : w.classes) {
        if (!g.find_class(cls))
            local.push_back("witness names missing class " + std::to_string(cls));
        s_set.insert(cls);
    }
    if (s_set.empty()) local.push_back("empty class set");
    std::set<int> vset;
    for (const auto& v : g.vertices)
        if (s_set.count(v.cls)) vset.insert(v.id);
    std::set<Edge> graph_edges(g.edges.begin(), g.edges.end());
    std::set<int> endpoints;
    std::set<Edge> zset;
    for (const auto& e : w.edges) {
        if (!graph_edges.count(e))
            local.push_back("Z contains a non-edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
        else if (!vset.count(e.first) || !vset.count(e.second))
            local.push_back("Z edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ") leaves L(S)");
        if (!zset.insert(e).second)
            local.push_back("duplicate edge in Z");
        endpoints.insert(e.first);
        endpoints.insert(e.second);
    }
    if (static_cast<int>(zset.size()) > static_cast<int>(s_set.size()) - 1)
        local.push_back("|Z| exceeds |S| - 1");
    for (int v : vset) {
        bool has = false;
        for (int u : g.neighbors(v))
            if (endpoints.count(u)) { has = true; break; }
        if (!has) {
            local.push_back("undominated vertex " + std::to_string(v));
            break;
        }
    }
    if (reasons) *reasons = local;
    return local.empty();
}

CoverGraph random_cover(const Params& p, int a, int b, double edge_probability,
                        std::uint64_t seed) {
    require_positive(p);
    if (a < 1 || b < 1) throw error("random_cover: a and b must be positive");
    std::mt19937_64 rng(seed);
    auto accept = [&rng](double prob) {
        const double scale = 18446744073709551616.0;  // 2^64
        return static_cast<double>(rng()) < prob * scale;
    };
    CoverGraph g;
    int next_class = 0, next_vertex = 0;
    std::vector<int> a_vertices, b_vertices;
    for (int i = 0; i < a; ++i) {
        g.classes.push_back({next_class, Side::A});
        for (int j = 0; j < p.ka; ++j) {
            g.vertices.push_back({next_vertex, Side::A, next_class});
            a_vertices.push_back(next_vertex++);
        }
        ++next_class;
    }
    for (int i = 0; i < b; ++i) {
        g.classes.push_back({next_class, Side::B});
        for (int j = 0; j < p.kb; ++j) {
            g.vertices.push_back({next_vertex, Side::B, next_class});
            b_vertices.push_back(next_vertex++);
        }
        ++next_class;
    }
    std::vector<Edge> accepted;
    for (int u : a_vertices)
        for (int w : b_vertices)
            if (accept(edge_probability)) accepted.push_back({u, w});
    // seeded Fisher-Yates, then greedily keep edges under the degree caps
    for (std::size_t i = accepted.size(); i > 1; --i)
        std::swap(accepted[i - 1], accepted[rng() % i]);
    std::map<int, int> degree;
    for (const auto& e : accepted) {
        if (degree[e.first] >= p.da || degree[e.second] >= p.db) continue;
        ++degree[e.first];
        ++degree[e.second];
        g.edges.push_back(e);
    }
    g.sort_all();
    return g;
}

}  // namespace itcover
