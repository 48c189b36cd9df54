#ifndef ITCOVER_GRAPH_HPP
#define ITCOVER_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace itcover {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

enum class Side { A, B };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
inline const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

struct ClassInfo {
    int id;
    Side side;

    bool operator==(const ClassInfo&) const = default;
};

struct VertexInfo {
    int id;
    Side side;
    int cls;

    bool operator==(const VertexInfo&) const = default;
};

// Edge endpoints are stored (A-side vertex, B-side vertex).
using Edge = std::pair<int, int>;

struct Params {
    int ka = 1;
    int kb = 1;
    int da = 1;
    int db = 1;

    bool operator==(const Params&) const = default;
};

struct DeficitReport {
    int a = 0;   // number of A-classes
    int b = 0;   // number of B-classes
    int da = 0;  // a*ka - |A|
    int db = 0;  // b*kb - |B|
};

// Vertex-partitioned bipartite graph. classes/vertices are kept sorted by
// id and edges sorted lexicographically; all mutators return new values.
struct CoverGraph {
    std::vector<ClassInfo> classes;
    std::vector<VertexInfo> vertices;
    std::vector<Edge> edges;

    const ClassInfo* find_class(int id) const;
    const VertexInfo* find_vertex(int id) const;
    std::vector<int> class_members(int cls) const;
    int class_size(int cls) const;
    int degree(int vertex_id) const;
    std::vector<int> neighbors(int vertex_id) const;
    int count_side_vertices(Side s) const;
    int count_side_classes(Side s) const;
    int max_vertex_id() const;
    int max_class_id() const;

    void sort_all();

    bool operator==(const CoverGraph&) const = default;
};

// Returns a description of the first structural defect (dangling ids,
// within-side edge, empty class, duplicates, ...), or nullopt if sound.
std::optional<std::string> structure_error(const CoverGraph& g);

void require_structure(const CoverGraph& g);

struct Violation {
    enum class Kind {
        ClassOversize,
        ClassNotFull,
        DegreeExceeded,
    };
    Kind kind;
    Side side;
    int id;      // class id or vertex id
    int value;   // observed size or degree
    int bound;   // cap it was checked against
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool full = false;  // every class at exactly its size cap

    bool ok() const { return violations.empty(); }
};

// Checks class-size caps and degree caps against p. Throws itcover::error
// on structural defects; parameter violations go into the report.
ValidationReport validate(const CoverGraph& g, const Params& p, bool require_full);

// Deficits da = a*ka - |A|, db = b*kb - |B|. Throws if a class exceeds its cap.
DeficitReport deficits(const CoverGraph& g, const Params& p);

struct RelabelMap {
    std::map<int, int> vertex;  // old id in g2 -> new id
    std::map<int, int> cls;     // old class id in g2 -> new class id
};

struct UnionResult {
    CoverGraph graph;
    RelabelMap second;  // how g2's ids were renumbered
};

// Disjoint union; g1 keeps its ids, g2 is relabeled onto fresh ids in
// ascending order. Both inputs must have at least one class.
UnionResult disjoint_union(const CoverGraph& g1, const CoverGraph& g2);

// Removes class `donor`, reassigning each of its vertices per `assignment`
// (vertex id -> target class id on the same side). If caps are given, no
// target class may exceed its size cap afterwards.
CoverGraph merge_class_into(const CoverGraph& g, int donor,
                            const std::map<int, int>& assignment,
                            const std::optional<Params>& caps);

// Removes the listed vertices and their incident edges. No class may
// become empty.
CoverGraph delete_vertices(const CoverGraph& g, const std::vector<int>& ids);

// Exchanges the A/B roles of every class and vertex, reorienting edges.
CoverGraph flip_sides(const CoverGraph& g);

}  // namespace itcover

#endif
