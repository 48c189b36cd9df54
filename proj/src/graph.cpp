#include "itcover/graph.hpp"

#include <algorithm>
#include <set>

namespace itcover {

namespace {

template <class T>
const T* binary_find(const std::vector<T>& v, int id) {
    auto it = std::lower_bound(v.begin(), v.end(), id,
                               [](const T& x, int key) { return x.id < key; });
    if (it == v.end() || it->id != id) return nullptr;
    return &*it;
}

}  // namespace

const ClassInfo* CoverGraph::find_class(int id) const { return binary_find(classes, id); }

const VertexInfo* CoverGraph::find_vertex(int id) const { return binary_find(vertices, id); }

std::vector<int> CoverGraph::class_members(int cls) const {
    std::vector<int> out;
    for (const auto& v : vertices)
        if (v.cls == cls) out.push_back(v.id);
    return out;
}

int CoverGraph::class_size(int cls) const {
    int n = 0;
    for (const auto& v : vertices)
        if (v.cls == cls) ++n;
    return n;
}

int CoverGraph::degree(int vertex_id) const {
    int n = 0;
    for (const auto& e : edges)
        if (e.first == vertex_id || e.second == vertex_id) ++n;
    return n;
}

std::vector<int> CoverGraph::neighbors(int vertex_id) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.first == vertex_id) out.push_back(e.second);
        else if (e.second == vertex_id) out.push_back(e.first);
    }
    return out;
}

int CoverGraph::count_side_vertices(Side s) const {
    int n = 0;
    for (const auto& v : vertices)
        if (v.side == s) ++n;
    return n;
}

int CoverGraph::count_side_classes(Side s) const {
    int n = 0;
    for (const auto& c : classes)
        if (c.side == s) ++n;
    return n;
}

int CoverGraph::max_vertex_id() const {
    return vertices.empty() ? -1 : vertices.back().id;
}

int CoverGraph::max_class_id() const {
    return classes.empty() ? -1 : classes.back().id;
}

void CoverGraph::sort_all() {
    std::sort(classes.begin(), classes.end(),
              [](const ClassInfo& x, const ClassInfo& y) { return x.id < y.id; });
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexInfo& x, const VertexInfo& y) { return x.id < y.id; });
    std::sort(edges.begin(), edges.end());
}

std::optional<std::string> structure_error(const CoverGraph& g) {
    std::set<int> class_ids;
    for (const auto& c : g.classes) {
        if (c.id < 0) return "negative class id " + std::to_string(c.id);
        if (!class_ids.insert(c.id).second)
            return "duplicate class id " + std::to_string(c.id);
    }
    std::set<int> vertex_ids;
    std::map<int, int> class_size;
    for (const auto& v : g.vertices) {
        if (v.id < 0) return "negative vertex id " + std::to_string(v.id);
        if (!vertex_ids.insert(v.id).second)
            return "duplicate vertex id " + std::to_string(v.id);
        const ClassInfo* c = g.find_class(v.cls);
        if (!c)
            return "vertex " + std::to_string(v.id) + " references missing class " +
                   std::to_string(v.cls);
        if (c->side != v.side)
            return "vertex " + std::to_string(v.id) + " side disagrees with class " +
                   std::to_string(v.cls);
        ++class_size[v.cls];
    }
    for (const auto& c : g.classes)
        if (class_size[c.id] == 0) return "empty class " + std::to_string(c.id);
    std::set<Edge> seen;
    for (const auto& e : g.edges) {
        const VertexInfo* u = g.find_vertex(e.first);
        const VertexInfo* w = g.find_vertex(e.second);
        if (!u || !w)
            return "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                   ") has a dangling endpoint";
        if (e.first == e.second)
            return "self-loop at vertex " + std::to_string(e.first);
        if (u->side != Side::A || w->side != Side::B)
            return "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                   ") is not oriented A to B";
        if (!seen.insert(e).second)
            return "duplicate edge (" + std::to_string(e.first) + "," +
                   std::to_string(e.second) + ")";
    }
    return std::nullopt;
}

void require_structure(const CoverGraph& g) {
    if (auto err = structure_error(g)) throw error("malformed graph: " + *err);
}

ValidationReport validate(const CoverGraph& g, const Params& p, bool require_full) {
    require_structure(g);
    ValidationReport report;
    report.full = true;
    std::map<int, int> sizes;
    for (const auto& v : g.vertices) ++sizes[v.cls];
    for (const auto& c : g.classes) {
        int cap = c.side == Side::A ? p.ka : p.kb;
        int size = sizes[c.id];
        if (size > cap)
            report.violations.push_back(
                {Violation::Kind::ClassOversize, c.side, c.id, size, cap});
        else if (size < cap) {
            report.full = false;
            if (require_full)
                report.violations.push_back(
                    {Violation::Kind::ClassNotFull, c.side, c.id, size, cap});
        }
    }
    std::map<int, int> degree;
    for (const auto& e : g.edges) {
        ++degree[e.first];
        ++degree[e.second];
    }
    for (const auto& v : g.vertices) {
        int cap = v.side == Side::A ? p.da : p.db;
        int d = degree[v.id];
        if (d > cap)
            report.violations.push_back(
                {Violation::Kind::DegreeExceeded, v.side, v.id, d, cap});
    }
    return report;
}

DeficitReport deficits(const CoverGraph& g, const Params& p) {
    require_structure(g);
    std::map<int, int> sizes;
    for (const auto& v : g.vertices) ++sizes[v.cls];
    DeficitReport r;
    int size_a = 0, size_b = 0;
    for (const auto& c : g.classes) {
        int cap = c.side == Side::A ? p.ka : p.kb;
        if (sizes[c.id] > cap)
            throw error("class " + std::to_string(c.id) +
                        " exceeds its size cap; deficit undefined");
        if (c.side == Side::A) {
            ++r.a;
            size_a += sizes[c.id];
        } else {
            ++r.b;
            size_b += sizes[c.id];
        }
    }
    r.da = r.a * p.ka - size_a;
    r.db = r.b * p.kb - size_b;
    return r;
}

UnionResult disjoint_union(const CoverGraph& g1, const CoverGraph& g2) {
    require_structure(g1);
    require_structure(g2);
    if (g1.classes.empty() || g2.classes.empty())
        throw error("disjoint_union: both graphs must have at least one class");
    UnionResult out;
    out.graph = g1;
    int next_v = g1.max_vertex_id() + 1;
    int next_c = g1.max_class_id() + 1;
    for (const auto& c : g2.classes) out.second.cls[c.id] = next_c++;
    for (const auto& v : g2.vertices) out.second.vertex[v.id] = next_v++;
    for (const auto& c : g2.classes)
        out.graph.classes.push_back({out.second.cls.at(c.id), c.side});
    for (const auto& v : g2.vertices)
        out.graph.vertices.push_back(
            {out.second.vertex.at(v.id), v.side, out.second.cls.at(v.cls)});
    for (const auto& e : g2.edges)
        out.graph.edges.push_back(
            {out.second.vertex.at(e.first), out.second.vertex.at(e.second)});
    out.graph.sort_all();
    return out;
}

CoverGraph merge_class_into(const CoverGraph& g, int donor,
                            const std::map<int, int>& assignment,
                            const std::optional<Params>& caps) {
    require_structure(g);
    const ClassInfo* donor_class = g.find_class(donor);
    if (!donor_class) throw error("merge_class_into: no class " + std::to_string(donor));

    std::vector<int> members = g.class_members(donor);
    if (assignment.size() != members.size())
        throw error("merge_class_into: assignment must cover exactly the donor's vertices");
    for (int id : members)
        if (!assignment.count(id))
            throw error("merge_class_into: donor vertex " + std::to_string(id) +
                        " not assigned");

    std::map<int, int> sizes;
    for (const auto& v : g.vertices) ++sizes[v.cls];
    for (const auto& [vid, target] : assignment) {
        const ClassInfo* t = g.find_class(target);
        if (!t) throw error("merge_class_into: no target class " + std::to_string(target));
        if (target == donor) throw error("merge_class_into: target equals donor");
        if (t->side != donor_class->side)
            throw error("merge_class_into: target class " + std::to_string(target) +
                        " is on the wrong side");
        ++sizes[target];
    }
    if (caps) {
        for (const auto& c : g.classes) {
            if (c.id == donor) continue;
            int cap = c.side == Side::A ? caps->ka : caps->kb;
            if (sizes[c.id] > cap)
                throw error("merge_class_into: class " + std::to_string(c.id) +
                            " would exceed its size cap");
        }
    }

    CoverGraph out = g;
    out.classes.erase(std::remove_if(out.classes.begin(), out.classes.end(),
                                     [&](const ClassInfo& c) { return c.id == donor; }),
                      out.classes.end());
    for (auto& v : out.vertices)
        if (v.cls == donor) v.cls = assignment.at(v.id);
    return out;
}

CoverGraph delete_vertices(const CoverGraph& g, const std::vector<int>& ids) {
    require_structure(g);
    std::set<int> gone(ids.begin(), ids.end());
    for (int id : ids)
        if (!g.find_vertex(id))
            throw error("delete_vertices: no vertex " + std::to_string(id));
    std::map<int, int> sizes;
    for (const auto& v : g.vertices)
        if (!gone.count(v.id)) ++sizes[v.cls];
    for (const auto& c : g.classes)
        if (sizes[c.id] == 0)
            throw error("delete_vertices: class " + std::to_string(c.id) +
                        " would become empty");
    CoverGraph out;
    out.classes = g.classes;
    for (const auto& v : g.vertices)
        if (!gone.count(v.id)) out.vertices.push_back(v);
    for (const auto& e : g.edges)
        if (!gone.count(e.first) && !gone.count(e.second)) out.edges.push_back(e);
    return out;
}

CoverGraph flip_sides(const CoverGraph& g) {
    CoverGraph out;
    out.classes = g.classes;
    out.vertices = g.vertices;
    for (auto& c : out.classes) c.side = other(c.side);
    for (auto& v : out.vertices) v.side = other(v.side);
    for (const auto& e : g.edges) out.edges.push_back({e.second, e.first});
    out.sort_all();
    return out;
}

}  // namespace itcover
