#ifndef ITCOVER_ASYMMETRIC_HPP
#define ITCOVER_ASYMMETRIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "itcover/graph.hpp"
#include "itcover/solver.hpp"

namespace itcover {

// Cover graph whose B-classes are designated ordered pairs (x, y), no
// A-vertex adjacent to both members of any pair.
struct PairedGraph {
    CoverGraph graph;
    std::vector<std::pair<int, int>> pairs;  // B-vertex ids, pair-major order
};

struct BlockPartition {
    std::vector<std::vector<int>> blocks;  // A-side vertex ids, each ascending
};

struct DerivedEdge {
    int u, v;                   // A-vertex ids, u < v
    std::vector<int> creators;  // indices of the pairs that create the edge
};

// Graph on the A-side: every pair (x, y) contributes the complete bipartite
// edge set between N(x) and N(y).
struct DerivedGraph {
    std::vector<int> vertices;       // A-side ids, ascending
    std::vector<DerivedEdge> edges;  // deduplicated, sorted
};

// True iff no A-vertex neighbours both members of any listed pair. Every
// listed pair must be a B-class of size exactly 2.
bool check_pair_condition(const CoverGraph& g,
                          const std::vector<std::pair<int, int>>& pairs);

// The degree-D gadget: A-side groups A_1..A_D, C_1..C_D of size D (one
// class each), B-side D^2 pairs (x_ij, y_ij) with x_ij joined to all of A_i
// and y_ij to all of C_j. Every degree is exactly D, and the derived graph
// is K_{D^2, D^2}.
PairedGraph j_gadget(int d);

// Disjoint union of `copies` degree-D gadgets, copy-major ids.
PairedGraph multi_gadget(int d, int copies);

DerivedGraph derived_graph(const PairedGraph& j);

enum class PartitionStrategy { Construction, Search };

struct SearchOptions {
    std::uint64_t seed = 1;
    long long attempts = 200000;  // randomized attempts when exhaustion is infeasible
};

// Interprets dg as 2m-1 disjoint copies of K_{m,m} (throws otherwise) and
// returns 2m blocks of size 2m-1 admitting no IT of dg.
//
// Construction: deterministic closed form. The copies are arranged as a
// binary decision tree (one root copy plus two chains); each block draws
// one-sided chunks from the copies along a root-to-leaf path, so any
// transversal, read as a side choice per copy, reaches a leaf whose block
// was picked entirely on opposite sides. Search: exhaustive canonical
// enumeration for m <= 2, seeded randomized attempts otherwise, with the
// exact solver as the accept test.
BlockPartition no_it_block_partition(const DerivedGraph& dg, int m,
                                     PartitionStrategy strategy,
                                     const SearchOptions& options = {});

// Whether dg has an IT with respect to the blocks (exact search).
SolveOutcome solve_derived(const DerivedGraph& dg, const BlockPartition& blocks,
                           std::int64_t budget = kUnlimited);

struct AsymmetricResult {
    PairedGraph paired;      // A-classes are the blocks, B-classes the pairs
    BlockPartition blocks;
    DerivedGraph derived;
};

// The sharpness instance for list sizes (2D^2 - 1, 2): multi_gadget(D, 2m-1)
// with m = D^2, its A-side repartitioned into the no-IT blocks. Blocks may
// be supplied (e.g. loaded from a file) instead of constructed.
AsymmetricResult assemble_sharp_asymmetric(
    int d, std::optional<BlockPartition> blocks = std::nullopt,
    PartitionStrategy strategy = PartitionStrategy::Construction,
    const SearchOptions& options = {});

// Seeded random instance satisfying the (2D^2, 2, D) hypotheses: class sizes
// ka = 2D^2 and kb = 2, degrees at most D, pair condition enforced by
// dropping the later edge of every violating pair.
PairedGraph random_paired_cover(int d, int a, int b, double edge_probability,
                                std::uint64_t seed);

}  // namespace itcover

#endif
