#include "itcover/asymmetric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace itcover {
namespace {

void require_pairs(const CoverGraph& g,
                   const std::vector<std::pair<int, int>>& pairs) {
    for (const auto& [x, y] : pairs) {
        const VertexInfo* vx = g.find_vertex(x);
        const VertexInfo* vy = g.find_vertex(y);
        if (!vx || !vy)
            throw error("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                        "): unknown vertex id");
        if (vx->side != Side::B || vy->side != Side::B)
            throw error("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                        "): members must be B-vertices");
        if (vx->cls != vy->cls)
            throw error("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                        "): members lie in different classes");
        if (g.class_size(vx->cls) != 2)
            throw error("pair class " + std::to_string(vx->cls) +
                        " does not have size 2");
    }
}

// Components of the derived graph, each required to be a complete bipartite
// K_{m,m}; ordered by smallest vertex id, left = the side of that vertex.
struct KmmCopy {
    std::vector<int> left, right;
};

std::vector<KmmCopy> split_into_copies(const DerivedGraph& dg, int m) {
    std::map<int, std::vector<int>> adj;
    for (int v : dg.vertices) adj[v];
    for (const auto& e : dg.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<KmmCopy> copies;
    std::set<int> seen;
    for (int start : dg.vertices) {
        if (seen.count(start)) continue;
        // BFS with 2-coloring; color 0 holds the smallest id of the component
        std::map<int, int> color;
        std::vector<int> queue{start};
        color[start] = 0;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int v = queue[q];
            for (int w : adj[v]) {
                auto it = color.find(w);
                if (it == color.end()) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (it->second == color[v]) {
                    throw error("derived graph component is not bipartite");
                }
            }
        }
        KmmCopy copy;
        for (const auto& [v, c] : color) {
            seen.insert(v);
            (c == 0 ? copy.left : copy.right).push_back(v);
        }
        if (static_cast<int>(copy.left.size()) != m ||
            static_cast<int>(copy.right.size()) != m)
            throw error("derived graph component is not a K_{m,m} with m = " +
                        std::to_string(m));
        for (int v : copy.left)
            if (static_cast<int>(adj[v].size()) != m)
                throw error("derived graph component is not complete bipartite");
        for (int v : copy.right)
            if (static_cast<int>(adj[v].size()) != m)
                throw error("derived graph component is not complete bipartite");
        copies.push_back(std::move(copy));
    }
    return copies;
}

// One-sided vertex pool consumed front to back across consecutive copies.
struct ChainPool {
    std::vector<std::pair<int, int>> items;  // (chain index, vertex id)
    std::size_t cursor = 0;

    // Takes `count` vertices, all required to come from chain index < limit
    // (limit < 0 disables the check).
    std::vector<int> take(int count, int limit) {
        std::vector<int> out;
        for (int i = 0; i < count; ++i) {
            if (cursor >= items.size())
                throw error("block construction pool exhausted");
            if (limit >= 0 && items[cursor].first >= limit)
                throw error("block construction eligibility violated");
            out.push_back(items[cursor++].second);
        }
        return out;
    }
};

// Blocks a_1..a_m for one chain of the decision tree. root_side is the
// root-copy side these blocks may use; each chain copy contributes its
// right side wholly to its own block and its left side to later blocks.
std::vector<std::vector<int>> chain_blocks(const std::vector<int>& root_side,
                                           const std::vector<KmmCopy>& chain,
                                           int m) {
    ChainPool pool;
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (int v : chain[i].left)
            pool.items.push_back({static_cast<int>(i), v});
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= m - 1; ++i) {
        std::vector<int> block = chain[i - 1].right;
        if (i == 1) {
            block.insert(block.end(), root_side.begin(), root_side.end() - 1);
        } else {
            // any transversal hitting this block on its own copy's left side
            // must have taken earlier copies on the right
            std::vector<int> fill = pool.take(m - 1, i - 1);
            block.insert(block.end(), fill.begin(), fill.end());
        }
        blocks.push_back(std::move(block));
    }
    std::vector<int> last{root_side.back()};
    std::vector<int> fill = pool.take(2 * (m - 1), -1);
    last.insert(last.end(), fill.begin(), fill.end());
    if (pool.cursor != pool.items.size())
        throw error("block construction pool not exhausted");
    blocks.push_back(std::move(last));
    return blocks;
}

BlockPartition construct_partition(const std::vector<KmmCopy>& copies, int m) {
    BlockPartition part;
    if (m == 1) {
        part.blocks = {copies[0].left, copies[0].right};
    } else {
        const KmmCopy& root = copies[0];
        std::vector<KmmCopy> chain_p(copies.begin() + 1, copies.begin() + m);
        std::vector<KmmCopy> chain_q(copies.begin() + m, copies.end());
        part.blocks = chain_blocks(root.right, chain_p, m);
        auto mirror = chain_blocks(root.left, chain_q, m);
        part.blocks.insert(part.blocks.end(), mirror.begin(), mirror.end());
    }
    for (auto& block : part.blocks) std::sort(block.begin(), block.end());
    return part;
}

void require_blocks_shape(const DerivedGraph& dg, const BlockPartition& part) {
    std::set<int> seen;
    for (const auto& block : part.blocks)
        for (int v : block)
            if (!seen.insert(v).second)
                throw error("blocks overlap at vertex " + std::to_string(v));
    if (seen != std::set<int>(dg.vertices.begin(), dg.vertices.end()))
        throw error("blocks do not cover the derived graph's vertices");
}

// Canonical enumeration of partitions into blocks of equal size: the
// smallest unplaced vertex anchors the next block, companions are chosen in
// lexicographic order. Returns the first no-IT partition.
bool search_exhaustive(const DerivedGraph& dg, int block_size,
                       std::vector<int>& pool, BlockPartition& part) {
    if (pool.empty()) {
        SolveOutcome outcome = solve_derived(dg, part);
        return outcome.no_it();
    }
    int anchor = pool.front();
    std::vector<int> rest(pool.begin() + 1, pool.end());
    int n = static_cast<int>(rest.size());
    int pick = block_size - 1;
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
        std::vector<int> block{anchor};
        std::vector<int> remaining;
        for (int i = 0, j = 0; i < n; ++i) {
            if (j < pick && idx[j] == i) {
                block.push_back(rest[i]);
                ++j;
            } else {
                remaining.push_back(rest[i]);
            }
        }
        part.blocks.push_back(block);
        if (search_exhaustive(dg, block_size, remaining, part)) return true;
        part.blocks.pop_back();
        int j = pick - 1;
        while (j >= 0 && idx[j] == n - pick + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < pick; ++l) idx[l] = idx[l - 1] + 1;
    }
    return false;
}

BlockPartition search_partition(const DerivedGraph& dg, int m,
                                const SearchOptions& options) {
    int block_size = 2 * m - 1;
    if (m <= 2) {
        std::vector<int> pool = dg.vertices;
        BlockPartition part;
        if (search_exhaustive(dg, block_size, pool, part)) {
            for (auto& block : part.blocks) std::sort(block.begin(), block.end());
            return part;
        }
        throw error("no transversal-free partition exists");
    }
    std::mt19937_64 rng(options.seed);
    std::vector<int> order = dg.vertices;
    for (long long attempt = 0; attempt < options.attempts; ++attempt) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
        BlockPartition part;
        for (std::size_t at = 0; at < order.size(); at += block_size)
            part.blocks.emplace_back(order.begin() + at,
                                     order.begin() + at + block_size);
        if (solve_derived(dg, part).no_it()) {
            for (auto& block : part.blocks) std::sort(block.begin(), block.end());
            return part;
        }
    }
    throw error("no transversal-free partition found within the attempt budget");
}

}  // namespace

bool check_pair_condition(const CoverGraph& g,
                          const std::vector<std::pair<int, int>>& pairs) {
    require_structure(g);
    require_pairs(g, pairs);
    for (const auto& [x, y] : pairs) {
        std::vector<int> nx = g.neighbors(x);
        std::vector<int> ny = g.neighbors(y);
        for (int u : nx)
            if (std::find(ny.begin(), ny.end(), u) != ny.end()) return false;
    }
    return true;
}

PairedGraph j_gadget(int d) {
    if (d < 1) throw error("j_gadget: degree must be positive");
    PairedGraph out;
    CoverGraph& g = out.graph;
    // groups A_1..A_d then C_1..C_d, one class of d vertices each
    for (int c = 0; c < 2 * d; ++c) {
        g.classes.push_back({c, Side::A});
        for (int j = 0; j < d; ++j) g.vertices.push_back({c * d + j, Side::A, c});
    }
    int base = 2 * d * d;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            int k = i * d + j;
            int cls = 2 * d + k;
            int x = base + 2 * k, y = base + 2 * k + 1;
            g.classes.push_back({cls, Side::B});
            g.vertices.push_back({x, Side::B, cls});
            g.vertices.push_back({y, Side::B, cls});
            out.pairs.push_back({x, y});
            for (int t = 0; t < d; ++t) {
                g.edges.push_back({i * d + t, x});        // x_ij joined to A_i
                g.edges.push_back({(d + j) * d + t, y});  // y_ij joined to C_j
            }
        }
    }
    g.sort_all();
    require_structure(g);
    return out;
}

PairedGraph multi_gadget(int d, int copies) {
    if (copies < 1) throw error("multi_gadget: copies must be positive");
    PairedGraph unit = j_gadget(d);
    int nv = unit.graph.max_vertex_id() + 1;
    int nc = unit.graph.max_class_id() + 1;
    PairedGraph out;
    for (int c = 0; c < copies; ++c) {
        for (const auto& ci : unit.graph.classes)
            out.graph.classes.push_back({ci.id + c * nc, ci.side});
        for (const auto& vi : unit.graph.vertices)
            out.graph.vertices.push_back({vi.id + c * nv, vi.side, vi.cls + c * nc});
        for (const auto& e : unit.graph.edges)
            out.graph.edges.push_back({e.first + c * nv, e.second + c * nv});
        for (const auto& [x, y] : unit.pairs)
            out.pairs.push_back({x + c * nv, y + c * nv});
    }
    out.graph.sort_all();
    return out;
}

DerivedGraph derived_graph(const PairedGraph& j) {
    if (!check_pair_condition(j.graph, j.pairs))
        throw error("derived_graph: pair condition violated");
    DerivedGraph dg;
    for (const auto& vi : j.graph.vertices)
        if (vi.side == Side::A) dg.vertices.push_back(vi.id);
    std::map<std::pair<int, int>, std::vector<int>> edges;
    for (std::size_t k = 0; k < j.pairs.size(); ++k) {
        std::vector<int> nx = j.graph.neighbors(j.pairs[k].first);
        std::vector<int> ny = j.graph.neighbors(j.pairs[k].second);
        for (int u : nx) {
            for (int v : ny) {
                auto& creators = edges[{std::min(u, v), std::max(u, v)}];
                if (creators.empty() || creators.back() != static_cast<int>(k))
                    creators.push_back(static_cast<int>(k));
            }
        }
    }
    for (auto& [key, creators] : edges)
        dg.edges.push_back({key.first, key.second, std::move(creators)});
    return dg;
}

SolveOutcome solve_derived(const DerivedGraph& dg, const BlockPartition& blocks,
                           std::int64_t budget) {
    require_blocks_shape(dg, blocks);
    std::map<int, int> index;
    for (std::size_t i = 0; i < dg.vertices.size(); ++i)
        index[dg.vertices[i]] = static_cast<int>(i);
    PartitionedInstance inst;
    inst.adj.resize(dg.vertices.size());
    for (const auto& e : dg.edges) {
        inst.adj[index.at(e.u)].push_back(index.at(e.v));
        inst.adj[index.at(e.v)].push_back(index.at(e.u));
    }
    for (const auto& block : blocks.blocks) {
        std::vector<int> cls;
        for (int v : block) cls.push_back(index.at(v));
        std::sort(cls.begin(), cls.end());
        inst.classes.push_back(std::move(cls));
    }
    return solve_partitioned(inst, budget, nullptr);
}

BlockPartition no_it_block_partition(const DerivedGraph& dg, int m,
                                     PartitionStrategy strategy,
                                     const SearchOptions& options) {
    if (m < 1) throw error("no_it_block_partition: m must be positive");
    std::vector<KmmCopy> copies = split_into_copies(dg, m);
    if (static_cast<int>(copies.size()) != 2 * m - 1)
        throw error("expected " + std::to_string(2 * m - 1) +
                    " complete bipartite components, found " +
                    std::to_string(copies.size()));
    if (strategy == PartitionStrategy::Search)
        return search_partition(dg, m, options);
    BlockPartition part = construct_partition(copies, m);
    if (m <= 3 && !solve_derived(dg, part).no_it())
        throw error("constructed partition unexpectedly admits a transversal");
    return part;
}

AsymmetricResult assemble_sharp_asymmetric(int d,
                                           std::optional<BlockPartition> blocks,
                                           PartitionStrategy strategy,
                                           const SearchOptions& options) {
    if (d < 1) throw error("assemble_sharp_asymmetric: degree must be positive");
    int m = d * d;
    AsymmetricResult res;
    PairedGraph host = multi_gadget(d, 2 * m - 1);
    res.derived = derived_graph(host);
    if (blocks) {
        require_blocks_shape(res.derived, *blocks);
        if (static_cast<int>(blocks->blocks.size()) != 2 * m)
            throw error("expected " + std::to_string(2 * m) + " blocks, got " +
                        std::to_string(blocks->blocks.size()));
        for (const auto& block : blocks->blocks)
            if (static_cast<int>(block.size()) != 2 * m - 1)
                throw error("every block must have size " +
                            std::to_string(2 * m - 1));
        res.blocks = *blocks;
    } else {
        res.blocks = no_it_block_partition(res.derived, m, strategy, options);
    }
    // repartition the A-side into the blocks; pair classes renumbered after
    CoverGraph g;
    std::map<int, int> block_of, pair_class;
    for (std::size_t i = 0; i < res.blocks.blocks.size(); ++i) {
        g.classes.push_back({static_cast<int>(i), Side::A});
        for (int v : res.blocks.blocks[i]) block_of[v] = static_cast<int>(i);
    }
    for (std::size_t k = 0; k < host.pairs.size(); ++k) {
        int cls = 2 * m + static_cast<int>(k);
        g.classes.push_back({cls, Side::B});
        pair_class[host.graph.find_vertex(host.pairs[k].first)->cls] = cls;
    }
    for (const auto& vi : host.graph.vertices) {
        int cls = vi.side == Side::A ? block_of.at(vi.id) : pair_class.at(vi.cls);
        g.vertices.push_back({vi.id, vi.side, cls});
    }
    g.edges = host.graph.edges;
    g.sort_all();
    require_structure(g);
    res.paired = {std::move(g), host.pairs};
    return res;
}

PairedGraph random_paired_cover(int d, int a, int b, double edge_probability,
                                std::uint64_t seed) {
    if (d < 1) throw error("random_paired_cover: degree must be positive");
    Params p{2 * d * d, 2, d, d};
    PairedGraph out;
    out.graph = random_cover(p, a, b, edge_probability, seed);
    for (const auto& ci : out.graph.classes) {
        if (ci.side != Side::B) continue;
        std::vector<int> members = out.graph.class_members(ci.id);
        out.pairs.push_back({members[0], members[1]});
    }
    // enforce the pair condition: a common neighbour keeps only its edge to
    // the first pair member
    std::vector<Edge> kept;
    for (const auto& e : out.graph.edges) {
        bool drop = false;
        for (const auto& [x, y] : out.pairs) {
            if (e.second != y) continue;
            std::vector<int> nx = out.graph.neighbors(x);
            drop = std::find(nx.begin(), nx.end(), e.first) != nx.end();
            break;
        }
        if (!drop) kept.push_back(e);
    }
    out.graph.edges = std::move(kept);
    return out;
}

}  // namespace itcover
