#ifndef ITCOVER_CONSTRUCTOR_HPP
#define ITCOVER_CONSTRUCTOR_HPP

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "itcover/criteria.hpp"
#include "itcover/graph.hpp"

namespace itcover {

using Rational = boost::rational<long long>;

// One construction step. Replaying the full sequence from scratch both
// regenerates the graph (ids are deterministic) and certifies it IT-free:
// bases are complete bipartite two-class systems, joins distribute exactly
// one class of an IT-free subsystem among pre-existing classes, and
// deletions cannot create a transversal.
struct TraceStep {
    enum class Kind { Base, JoinGadget, JoinSubsystem, Delete };

    Kind kind;
    int p = 0;                // Base/JoinGadget: A-side size of K_{p,q}
    int q = 0;                // Base/JoinGadget: B-side size
    int a_class = -1;         // Base: id given to the A-class
    int b_class = -1;         // Base: id given to the B-class
    Side donor_side = Side::A;  // JoinGadget: the distributed side
    int kept_class = -1;      // JoinGadget: id given to the kept class
    int subsystem = -1;       // JoinSubsystem: index into BuildTrace::subsystems
    int donor_class = -1;     // JoinSubsystem: donor class id after relabeling
    std::vector<std::pair<int, int>> assignment;  // donor vertex -> target class
    std::vector<int> deleted;  // Delete

    bool operator==(const TraceStep&) const = default;
};

struct BuildTrace {
    Params params;  // parameters the final graph is full for
    NormalizationTrace normalization;
    // Step sequences of previously certified subsystems, referenced by
    // JoinSubsystem steps; entry i may only reference entries < i.
    std::vector<std::vector<TraceStep>> subsystems;
    std::vector<TraceStep> steps;

    bool operator==(const BuildTrace&) const = default;
};

struct Built {
    CoverGraph graph;
    BuildTrace trace;
};

struct PhaseState {
    int a = 0;
    int b = 0;
    int da = 0;
    int db = 0;
    int last_class_id = -1;
};

struct StageResult {
    CoverGraph graph;
    BuildTrace trace;
    PhaseState state;
};

struct Phase1Stats {
    struct Snapshot {
        int step;  // 1 = base, 2, 31, 32
        int a, b, da, db;
        int copies;  // complete bipartite gadgets placed so far
    };
    std::vector<Snapshot> log;
    int max_consecutive_step2 = 0;
    int gadget_copies = 0;
    bool step32_executed = false;
};

struct Phase2Stats {
    int iterations = 0;
    long long iteration_bound = 0;  // ceil((b0*kb - |B0|) / (|B0| - (b0-1)*kb))
};

// K_{p,q} as a two-class system (A-class of size p, B-class of size q);
// every transversal picks one vertex per side and all cross pairs are
// edges, so it has no IT.
Built gadget(int p, int q);

// The distribute-one-class join of two certified IT-free systems. The
// donor class of `guest` is spread over `host`'s classes: into
// `target_class` when given, otherwise first-fit by ascending class id
// under `caps`.
Built join(const Built& host, const Built& guest, int donor_class,
           std::optional<int> target_class, std::optional<Params> caps);

struct Phase1Result {
    StageResult stage;
    Phase1Stats stats;
};

// Deficit-elimination loop over copies of K_{db,da}; requires normalized
// parameters violating the sufficiency condition. Output has A-deficit 0,
// B-deficit < kb, and a last-added B-class of size da.
Phase1Result phase1(const Params& p);

struct Phase2Result {
    StageResult stage;
    Phase2Stats stats;
};

// Strings together copies of the phase-1 output, each time distributing its
// last-added B-class, until the B-deficit is at most da.
Phase2Result phase2(const StageResult& h0, const Params& p);

// Tops up the B-side with one K_{db, dB} (new A-class A0), grows A0 by
// absorbing the A0 of whole-system copies, then trims A0 to exactly ka.
Built phase3(const StageResult& h1, const Params& p);

// Closed form for the live B-deficit before step (3.2) has run:
// kb - da_live*(kb - da)/db - a*t/db with t the surplus.
Rational predicted_b_deficit(long long a, long long da_live, const Params& p);

struct BuildReport {
    Built built;
    Params normalized;
    NormalizationTrace normalization;
    Phase1Stats phase1;
    Phase2Stats phase2;
};

// Full sharpness pipeline: normalize, phases I-III, then undo the
// normalization (per-class deletions and a side flip). Output is a full
// (ka,kb,da,db)-graph with no IT, with its complete replayable trace.
// Throws when the parameters satisfy the sufficiency condition.
BuildReport build_sharp(const Params& p);

// Replays t from scratch, validating every step, and checks the result is
// identical (same vertex/class/edge sets) to g. True is a machine-checked
// proof that g admits no IT.
bool verify_trace(const CoverGraph& g, const BuildTrace& t,
                  std::string* reason = nullptr);

}  // namespace itcover

#endif
