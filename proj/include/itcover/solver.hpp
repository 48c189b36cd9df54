#ifndef ITCOVER_SOLVER_HPP
#define ITCOVER_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "itcover/graph.hpp"

namespace itcover {

struct ITSolution {
    std::map<int, int> choice;  // class id -> vertex id

    bool operator==(const ITSolution&) const = default;
};

struct DominationWitness {
    std::vector<int> classes;  // class ids, sorted (the set S)
    std::vector<Edge> edges;   // the set Z, endpoints inside S's classes
};

struct SolveOutcome {
    enum class Kind { Found, NoIT, BudgetExceeded };
    Kind kind;
    ITSolution solution;      // meaningful only when kind == Found
    std::int64_t nodes = 0;   // decision nodes explored

    bool found() const { return kind == Kind::Found; }
    bool no_it() const { return kind == Kind::NoIT; }
};

inline constexpr std::int64_t kUnlimited = -1;

// Partition-respecting instance over dense vertex indices; the generic
// search core, shared with the block-partition machinery where the
// partition does not align with a bipartition.
struct PartitionedInstance {
    std::vector<std::vector<int>> adj;      // adjacency by vertex index
    std::vector<std::vector<int>> classes;  // vertex indices, ascending

    int num_vertices() const { return static_cast<int>(adj.size()); }
};

// Complete backtracking search: branch on the class with the fewest live
// candidates (ties by class position), candidates in index order. Returns
// chosen vertex index per class position when found.
SolveOutcome solve_partitioned(const PartitionedInstance& inst,
                               std::int64_t budget,
                               std::vector<int>* chosen_out);

// Exhaustive IT decision on a cover graph. NoIT only after exhaustion;
// a spent budget is reported as BudgetExceeded, never as NoIT.
SolveOutcome find_it(const CoverGraph& g, std::int64_t budget = kUnlimited);

bool verify_it(const CoverGraph& g, const ITSolution& s,
               std::vector<std::string>* reasons = nullptr);

// Brute force over class subsets S (ascending size, then lexicographic) and
// edge subsets Z, |Z| <= |S|-1, inside S's classes; first witness found.
// Throws when the enumeration would be too large.
std::optional<DominationWitness> find_domination_witness(const CoverGraph& g,
                                                         int max_s);

// Checks the witness shape: endpoints inside S, |Z| <= |S|-1, and every
// vertex of S's classes has a neighbour among Z's endpoints. A passing
// witness does NOT certify that g has no IT (the implication only runs
// from no-IT to witness existence).
bool verify_domination_witness(const CoverGraph& g, const DominationWitness& w,
                               std::vector<std::string>* reasons = nullptr);

// Seeded random (ka,kb,da,db)-instance with a A-classes and b B-classes of
// exact sizes ka/kb: candidate A-B edges are accepted independently with
// edge_probability, then pruned in seeded random order until every degree
// respects its cap. Identical seeds give identical graphs.
CoverGraph random_cover(const Params& p, int a, int b, double edge_probability,
                        std::uint64_t seed);

}  // namespace itcover

#endif
