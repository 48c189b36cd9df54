#include "itcover/constructor.hpp"

#include <algorithm>
#include <map>

namespace itcover {

namespace {

constexpr int kGlobalStepCap = 1000000;  // loops are proven to terminate; belt anyway

CoverGraph make_gadget_graph(int p, int q) {
    if (p < 1 || q < 1) throw error("gadget: both sides must be positive");
    CoverGraph g;
    g.classes.push_back({0, Side::A});
    g.classes.push_back({1, Side::B});
    for (int i = 0; i < p; ++i) g.vertices.push_back({i, Side::A, 0});
    for (int j = 0; j < q; ++j) g.vertices.push_back({p + j, Side::B, 1});
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) g.edges.push_back({i, p + j});
    g.sort_all();
    return g;
}

// First-fit: each donor vertex (ascending id) goes to the lowest-id host
// class on `side` with spare capacity under `cap`.
std::map<int, int> first_fit(const CoverGraph& unioned,
                             const std::vector<int>& donor_vertices, Side side,
                             int cap, int max_host_class_id) {
    std::map<int, int> sizes;
    for (const auto& v : unioned.vertices) ++sizes[v.cls];
    std::vector<int> targets;
    for (const auto& c : unioned.classes)
        if (c.id <= max_host_class_id && c.side == side) targets.push_back(c.id);
    std::map<int, int> assignment;
    for (int vid : donor_vertices) {
        bool placed = false;
        for (int t : targets) {
            if (sizes[t] < cap) {
                assignment[vid] = t;
                ++sizes[t];
                placed = true;
                break;
            }
        }
        if (!placed)
            throw error("join: insufficient spare capacity on the donor's side");
    }
    return assignment;
}

struct ReplayContext {
    const std::vector<std::vector<TraceStep>>& subsystems;
    std::map<int, CoverGraph>& cache;
};

CoverGraph replay_sequence(const std::vector<TraceStep>& steps, ReplayContext& ctx);

void apply_step(CoverGraph& g, const TraceStep& s, ReplayContext& ctx,
                bool is_first) {
    switch (s.kind) {
        case TraceStep::Kind::Base: {
            if (!is_first) throw error("Base step must come first");
            CoverGraph base = make_gadget_graph(s.p, s.q);
            if (s.a_class != 0 || s.b_class != 1)
                throw error("Base step records unexpected class ids");
            g = std::move(base);
            return;
        }
        case TraceStep::Kind::JoinGadget: {
            if (g.classes.empty()) throw error("join into empty host");
            CoverGraph guest = make_gadget_graph(s.p, s.q);
            int max_host_class = g.max_class_id();
            UnionResult ur = disjoint_union(g, guest);
            int guest_a = ur.second.cls.at(0);
            int guest_b = ur.second.cls.at(1);
            int donor = s.donor_side == Side::A ? guest_a : guest_b;
            int kept = s.donor_side == Side::A ? guest_b : guest_a;
            if (s.kept_class != kept)
                throw error("JoinGadget records unexpected kept class id");
            std::map<int, int> assignment(s.assignment.begin(), s.assignment.end());
            for (const auto& [vid, target] : assignment)
                if (target > max_host_class)
                    throw error("JoinGadget assignment targets a non-host class");
            g = merge_class_into(ur.graph, donor, assignment, std::nullopt);
            return;
        }
        case TraceStep::Kind::JoinSubsystem: {
            if (g.classes.empty()) throw error("join into empty host");
            if (s.subsystem < 0 ||
                s.subsystem >= static_cast<int>(ctx.subsystems.size()))
                throw error("JoinSubsystem references missing subsystem");
            auto it = ctx.cache.find(s.subsystem);
            if (it == ctx.cache.end()) {
                CoverGraph sub = replay_sequence(ctx.subsystems[s.subsystem], ctx);
                it = ctx.cache.emplace(s.subsystem, std::move(sub)).first;
            }
            int max_host_class = g.max_class_id();
            UnionResult ur = disjoint_union(g, it->second);
            if (s.donor_class <= max_host_class)
                throw error("JoinSubsystem donor is not a class of the subsystem");
            std::map<int, int> assignment(s.assignment.begin(), s.assignment.end());
            for (const auto& [vid, target] : assignment)
                if (target > max_host_class)
                    throw error("JoinSubsystem assignment targets a non-host class");
            g = merge_class_into(ur.graph, s.donor_class, assignment, std::nullopt);
            return;
        }
        case TraceStep::Kind::Delete: {
            g = delete_vertices(g, s.deleted);
            return;
        }
    }
    throw error("unknown trace step");
}

CoverGraph replay_sequence(const std::vector<TraceStep>& steps, ReplayContext& ctx) {
    if (steps.empty()) throw error("empty step sequence");
    CoverGraph g;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            apply_step(g, steps[i], ctx, i == 0);
        } catch (const error& e) {
            throw error("step " + std::to_string(i) + ": " + e.what());
        }
    }
    return g;
}

// Incremental builder; every mutation is recorded as a step, and
// verify_trace replays the recorded steps through the exact same code path.
class Assembler {
public:
    Assembler() = default;

    static Assembler resume(const StageResult& stage) {
        if (stage.trace.normalization.swapped)
            throw error("cannot extend a side-swapped trace");
        Assembler a;
        a.trace_ = stage.trace;
        a.g_ = stage.graph;
        return a;
    }

    const CoverGraph& graph() const { return g_; }
    BuildTrace& trace() { return trace_; }

    int base(int p, int q) {
        TraceStep s;
        s.kind = TraceStep::Kind::Base;
        s.p = p;
        s.q = q;
        s.a_class = 0;
        s.b_class = 1;
        apply_and_record(s);
        return 1;  // id of the B-class
    }

    // Joins K_{p,q}, distributing `donor_side` first-fit under `caps`.
    // Returns the id of the kept class.
    int join_gadget(int p, int q, Side donor_side, const Params& caps) {
        CoverGraph guest = make_gadget_graph(p, q);
        int max_host_class = g_.max_class_id();
        UnionResult ur = disjoint_union(g_, guest);
        int guest_a = ur.second.cls.at(0);
        int guest_b = ur.second.cls.at(1);
        int donor = donor_side == Side::A ? guest_a : guest_b;
        int kept = donor_side == Side::A ? guest_b : guest_a;
        std::vector<int> donor_vertices = ur.graph.class_members(donor);
        std::sort(donor_vertices.begin(), donor_vertices.end());
        int cap = donor_side == Side::A ? caps.ka : caps.kb;
        auto assignment =
            first_fit(ur.graph, donor_vertices, donor_side, cap, max_host_class);
        TraceStep s;
        s.kind = TraceStep::Kind::JoinGadget;
        s.p = p;
        s.q = q;
        s.donor_side = donor_side;
        s.kept_class = kept;
        s.assignment.assign(assignment.begin(), assignment.end());
        apply_and_record(s);
        return kept;
    }

    // Snapshots the steps so far as a reusable subsystem.
    int snapshot_subsystem() {
        trace_.subsystems.push_back(trace_.steps);
        return static_cast<int>(trace_.subsystems.size()) - 1;
    }

    // Joins a copy of subsystem `idx`; `donor_pre` is the donor's class id
    // inside the subsystem. Distribution is first-fit under caps, or
    // everything into `target_class` when given.
    void join_subsystem(int idx, int donor_pre, Side donor_side,
                        std::optional<Params> caps, std::optional<int> target_class) {
        const CoverGraph& sub = subsystem_graph(idx);
        int max_host_class = g_.max_class_id();
        UnionResult ur = disjoint_union(g_, sub);
        int donor = ur.second.cls.at(donor_pre);
        std::vector<int> donor_vertices = ur.graph.class_members(donor);
        std::sort(donor_vertices.begin(), donor_vertices.end());
        std::map<int, int> assignment;
        if (target_class) {
            for (int vid : donor_vertices) assignment[vid] = *target_class;
        } else {
            int cap = donor_side == Side::A ? caps->ka : caps->kb;
            assignment =
                first_fit(ur.graph, donor_vertices, donor_side, cap, max_host_class);
        }
        TraceStep s;
        s.kind = TraceStep::Kind::JoinSubsystem;
        s.subsystem = idx;
        s.donor_class = donor;
        s.assignment.assign(assignment.begin(), assignment.end());
        apply_and_record(s);
    }

    void delete_ids(const std::vector<int>& ids) {
        TraceStep s;
        s.kind = TraceStep::Kind::Delete;
        s.deleted = ids;
        apply_and_record(s);
    }

private:
    const CoverGraph& subsystem_graph(int idx) {
        auto it = cache_.find(idx);
        if (it == cache_.end()) {
            ReplayContext ctx{trace_.subsystems, cache_};
            CoverGraph sub = replay_sequence(trace_.subsystems[idx], ctx);
            it = cache_.emplace(idx, std::move(sub)).first;
        }
        return it->second;
    }

    void apply_and_record(const TraceStep& s) {
        ReplayContext ctx{trace_.subsystems, cache_};
        apply_step(g_, s, ctx, trace_.steps.empty());
        trace_.steps.push_back(s);
    }

    BuildTrace trace_;
    CoverGraph g_;
    std::map<int, CoverGraph> cache_;
};

void require_normalized(const Params& p) {
    if (sufficient(p)) throw error("phase1: sufficiency condition holds");
    if (!(p.da <= p.kb && p.kb <= 2 * p.da - 1 && p.ka >= 2 * p.db))
        throw error("phase1: parameters are not normalized");
}

PhaseState state_of(const CoverGraph& g, const Params& p, int last_class_id) {
    DeficitReport d = deficits(g, p);
    return {d.a, d.b, d.da, d.db, last_class_id};
}

}  // namespace

Built gadget(int p, int q) {
    Assembler a;
    a.base(p, q);
    Built out;
    out.graph = a.graph();
    out.trace = std::move(a.trace());
    return out;
}

namespace {

// Appends guest's subsystems (remapping references) and its main steps as a
// new subsystem of host; returns the new entry's index.
int embed_subsystem(BuildTrace& host, const BuildTrace& guest) {
    int offset = static_cast<int>(host.subsystems.size());
    auto remap = [offset](std::vector<TraceStep> steps) {
        for (auto& s : steps)
            if (s.kind == TraceStep::Kind::JoinSubsystem) s.subsystem += offset;
        return steps;
    };
    for (const auto& sub : guest.subsystems)
        host.subsystems.push_back(remap(sub));
    host.subsystems.push_back(remap(guest.steps));
    return static_cast<int>(host.subsystems.size()) - 1;
}

}  // namespace

Built join(const Built& host, const Built& guest, int donor_class,
           std::optional<int> target_class, std::optional<Params> caps) {
    std::string why;
    if (!verify_trace(host.graph, host.trace, &why))
        throw error("join: host trace does not certify the host: " + why);
    if (!verify_trace(guest.graph, guest.trace, &why))
        throw error("join: guest trace does not certify the guest: " + why);
    if (host.trace.normalization.swapped || guest.trace.normalization.swapped)
        throw error("join: side-swapped traces cannot be extended");
    const ClassInfo* donor_info = guest.graph.find_class(donor_class);
    if (!donor_info) throw error("join: donor class is not in the guest");
    if (!target_class && !caps)
        throw error("join: first-fit policy needs caps");

    StageResult stage;
    stage.graph = host.graph;
    stage.trace = host.trace;
    Assembler a = Assembler::resume(stage);
    int idx = embed_subsystem(a.trace(), guest.trace);
    a.join_subsystem(idx, donor_class, donor_info->side, caps, target_class);
    Built out;
    out.graph = a.graph();
    out.trace = std::move(a.trace());
    return out;
}

Phase1Result phase1(const Params& p) {
    require_normalized(p);
    Phase1Result r;
    Assembler a;
    int last_class = a.base(p.db, p.da);
    r.stats.gadget_copies = 1;
    auto snap = [&](int step) {
        DeficitReport d = deficits(a.graph(), p);
        r.stats.log.push_back({step, d.a, d.b, d.da, d.db, r.stats.gadget_copies});
        return d;
    };
    DeficitReport d = snap(1);
    int consecutive2 = 0;
    for (int iter = 0;; ++iter) {
        if (iter > kGlobalStepCap) throw error("phase1: non-termination suspected");
        if (d.da >= p.db) {  // step (2)
            last_class = a.join_gadget(p.db, p.da, Side::A, p);
            ++r.stats.gadget_copies;
            ++consecutive2;
            r.stats.max_consecutive_step2 =
                std::max(r.stats.max_consecutive_step2, consecutive2);
            d = snap(2);
        } else if (d.da > 0) {
            consecutive2 = 0;
            if (d.db >= p.da) {  // step (3.1)
                last_class = a.join_gadget(p.db, p.da, Side::B, p);
                ++r.stats.gadget_copies;
                d = snap(31);
            } else {  // step (3.2)
                last_class = a.join_gadget(d.da, p.da, Side::A, p);
                ++r.stats.gadget_copies;
                r.stats.step32_executed = true;
                d = snap(32);
                break;
            }
        } else {  // step (4)
            break;
        }
    }
    r.stage.graph = a.graph();
    r.stage.trace = std::move(a.trace());
    r.stage.state = state_of(r.stage.graph, p, last_class);
    return r;
}

Phase2Result phase2(const StageResult& h0, const Params& p) {
    Phase2Result r;
    DeficitReport d0 = deficits(h0.graph, p);
    if (d0.da != 0) throw error("phase2: input must have A-deficit 0");
    long long b0 = d0.b;
    long long size_b0 = b0 * p.kb - d0.db;
    long long shrink = size_b0 - (b0 - 1) * p.kb;
    if (d0.db > p.da) {
        if (shrink <= 0) throw error("phase2: input B-deficit is not below kb");
        r.stats.iteration_bound = (d0.db + shrink - 1) / shrink;
    }
    Assembler a = Assembler::resume(h0);
    int sub = -1;
    DeficitReport d = d0;
    while (d.db > p.da) {
        if (r.stats.iterations >= r.stats.iteration_bound)
            throw error("phase2: iteration bound exceeded");
        if (sub < 0) sub = a.snapshot_subsystem();
        a.join_subsystem(sub, h0.state.last_class_id, Side::B, p, std::nullopt);
        ++r.stats.iterations;
        d = deficits(a.graph(), p);
    }
    r.stage.graph = a.graph();
    r.stage.trace = std::move(a.trace());
    r.stage.state = state_of(r.stage.graph, p, h0.state.last_class_id);
    return r;
}

Built phase3(const StageResult& h1, const Params& p) {
    DeficitReport d = deficits(h1.graph, p);
    if (d.da != 0 || d.db > p.da)
        throw error("phase3: input must have A-deficit 0 and B-deficit at most da");
    if (d.db == 0) return {h1.graph, h1.trace};
    Assembler a = Assembler::resume(h1);
    // K_{db, dB}: its B-side exactly fills the remaining B-deficit.
    int a0 = a.join_gadget(p.db, d.db, Side::B, p);
    int sub = a.snapshot_subsystem();
    int guard = 0;
    while (a.graph().class_size(a0) < p.ka) {
        if (++guard > kGlobalStepCap) throw error("phase3: non-termination suspected");
        a.join_subsystem(sub, a0, Side::A, std::nullopt, a0);
    }
    int extra = a.graph().class_size(a0) - p.ka;
    if (extra > 0) {
        std::vector<int> members = a.graph().class_members(a0);
        std::sort(members.begin(), members.end());
        std::vector<int> doomed(members.end() - extra, members.end());
        a.delete_ids(doomed);
    }
    Built out;
    out.graph = a.graph();
    out.trace = std::move(a.trace());
    return out;
}

Rational predicted_b_deficit(long long a, long long da_live, const Params& p) {
    long long t = surplus(p);
    Rational kb(p.kb);
    Rational first(da_live * (p.kb - p.da), p.db);
    Rational second(a * t, p.db);
    return kb - first - second;
}

BuildReport build_sharp(const Params& p) {
    if (sufficient(p))
        throw error(
            "build_sharp: the sufficiency condition holds, every such instance "
            "admits an independent transversal");
    BuildReport report;
    auto [q, norm] = normalize(p);
    report.normalized = q;
    report.normalization = norm;

    Phase1Result r1 = phase1(q);
    report.phase1 = r1.stats;
    Phase2Result r2 = phase2(r1.stage, q);
    report.phase2 = r2.stats;
    Built built = phase3(r2.stage, q);

    // Undo the ka raise: remove the surplus vertices from every A-class.
    if (norm.ka_raised_from) {
        int rounds = q.ka - *norm.ka_raised_from;
        StageResult stage;
        stage.graph = built.graph;
        stage.trace = built.trace;
        Assembler a = Assembler::resume(stage);
        std::vector<int> doomed;
        for (const auto& c : a.graph().classes) {
            if (c.side != Side::A) continue;
            std::vector<int> members = a.graph().class_members(c.id);
            std::sort(members.begin(), members.end());
            doomed.insert(doomed.end(), members.end() - rounds, members.end());
        }
        std::sort(doomed.begin(), doomed.end());
        a.delete_ids(doomed);
        built.graph = a.graph();
        built.trace = std::move(a.trace());
    }
    // Undo the side exchange; degree clamps need no undo.
    if (norm.swapped) built.graph = flip_sides(built.graph);

    built.trace.params = p;
    built.trace.normalization = norm;
    report.built = std::move(built);
    return report;
}

bool verify_trace(const CoverGraph& g, const BuildTrace& t, std::string* reason) {
    try {
        for (std::size_t i = 0; i < t.subsystems.size(); ++i)
            for (const auto& s : t.subsystems[i])
                if (s.kind == TraceStep::Kind::JoinSubsystem &&
                    s.subsystem >= static_cast<int>(i))
                    throw error("subsystem references are not acyclic");
        std::map<int, CoverGraph> cache;
        ReplayContext ctx{t.subsystems, cache};
        CoverGraph replayed = replay_sequence(t.steps, ctx);
        if (t.normalization.swapped) replayed = flip_sides(replayed);
        if (!(replayed == g)) {
            if (reason) *reason = "replayed graph differs from the given graph";
            return false;
        }
        return true;
    } catch (const error& e) {
        if (reason) *reason = e.what();
        return false;
    }
}

}  // namespace itcover
